//! Finite-length modules as vector spaces with commuting nilpotent operators.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::Matrix;
use crate::module::GradedModule;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::resolution::{min_resolution, Resolution};
use crate::vector::{FreeMap, VTerm, Vector};

#[derive(Clone, Debug)]
pub struct FiniteLengthModule {
    module: GradedModule,
    basis: Vec<(u32, Monomial)>,
    degrees: Vec<i32>,
    index: HashMap<(u32, Monomial), usize>,
    ops: Vec<Matrix>,
}

impl FiniteLengthModule {
    pub fn from_module(module: GradedModule) -> Result<Self> {
        let basis = module
            .standard_basis()
            .ok_or_else(|| Error::Scope("module has no finite-length certificate".into()))?;
        let degrees = basis.iter().map(|(k, m)| module.degrees()[*k as usize] + m.degree() as i32).collect();
        let index = basis.iter().enumerate().map(|(i, b)| (*b, i)).collect();
        let mut v = FiniteLengthModule { module, basis, degrees, index, ops: Vec::new() };
        let field = v.field();
        let n = v.basis.len();
        for x in 0..v.module.ring().nvars() {
            let mut op = Matrix::zeros(field, n, n);
            for (j, (k, m)) in v.basis.iter().enumerate() {
                let img = Vector::from_terms(vec![VTerm { pos: *k, mon: m.mul(&Monomial::var(x)), coef: field.one() }]);
                for (i, c) in v.coords(&img).into_iter().enumerate() {
                    if !c.is_zero() {
                        op.set(i, j, c);
                    }
                }
            }
            v.ops.push(op);
        }
        Ok(v)
    }

    pub fn module(&self) -> &GradedModule {
        &self.module
    }

    /// Every degree raised by `d`; basis order and operators are unchanged.
    pub fn twist(&self, d: i32) -> Self {
        FiniteLengthModule {
            module: self.module.twist(d),
            basis: self.basis.clone(),
            degrees: self.degrees.iter().map(|a| a + d).collect(),
            index: self.index.clone(),
            ops: self.ops.clone(),
        }
    }

    pub fn into_module(self) -> GradedModule {
        self.module
    }

    pub fn field(&self) -> FieldSpec {
        self.module.ring().field()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[(u32, Monomial)] {
        &self.basis
    }

    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    /// Multiplication by the `i`-th variable.
    pub fn op(&self, i: usize) -> &Matrix {
        &self.ops[i]
    }

    pub fn ops(&self) -> &[Matrix] {
        &self.ops
    }

    /// Coordinates of a free-module element in the standard basis.
    pub fn coords(&self, v: &Vector) -> Vec<Scalar> {
        let field = self.field();
        let mut out = vec![field.zero(); self.basis.len()];
        for t in self.module.normal_form(v).terms() {
            let i = self.index[&(t.pos, t.mon)];
            out[i] = t.coef.clone();
        }
        out
    }

    /// The free-module element `Σ c_b b` for coordinates `c`.
    pub fn element(&self, c: &[Scalar]) -> Vector {
        let terms = c
            .iter()
            .zip(&self.basis)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, (k, m))| VTerm { pos: *k, mon: *m, coef: c.clone() })
            .collect();
        Vector::from_terms(terms)
    }

    pub fn hilbert_table(&self) -> BTreeMap<i32, usize> {
        let mut t = BTreeMap::new();
        for d in &self.degrees {
            *t.entry(*d).or_insert(0) += 1;
        }
        t
    }

    /// Matrix of multiplication by `f`.
    pub fn op_poly(&self, f: &Polynomial, cache: &mut HashMap<Monomial, Matrix>) -> Matrix {
        let n = self.dim();
        let mut acc = Matrix::zeros(self.field(), n, n);
        for (m, c) in f.terms() {
            acc = acc.add(&self.op_monomial(m, cache).scale(c));
        }
        acc
    }

    fn op_monomial(&self, m: &Monomial, cache: &mut HashMap<Monomial, Matrix>) -> Matrix {
        if let Some(x) = cache.get(m) {
            return x.clone();
        }
        let out = match m.support().next() {
            None => Matrix::identity(self.field(), self.dim()),
            Some(i) => {
                let rest = Monomial::var(i).quotient_of(m);
                self.ops[i].mul(&self.op_monomial(&rest, cache))
            }
        };
        cache.insert(*m, out.clone());
        out
    }

    /// `dim_k (0 :_V m)`.
    pub fn socle_dim(&self) -> usize {
        if self.ops.is_empty() {
            return self.dim();
        }
        let n = self.dim();
        let mut stacked = Matrix::zeros(self.field(), n * self.ops.len(), n);
        for (i, op) in self.ops.iter().enumerate() {
            stacked.set_block(i * n, 0, op);
        }
        n - stacked.rank()
    }

    /// `dim_k V/mV`.
    pub fn cosocle_dim(&self) -> usize {
        let n = self.dim();
        let mut side = Matrix::zeros(self.field(), n, n * self.ops.len());
        for (i, op) in self.ops.iter().enumerate() {
            side.set_block(0, i * n, op);
        }
        n - side.rank()
    }
}

/// Per-degree block matrix for `Hom(F_i, W) → Hom(F_{i+1}, W)` induced by `d`.
fn hom_matrix(d: &FreeMap, w: &FiniteLengthModule, cache: &mut HashMap<Monomial, Matrix>) -> Matrix {
    let n = w.dim();
    let mut out = Matrix::zeros(w.field(), d.src.len() * n, d.tgt.len() * n);
    for (c, col) in d.cols.iter().enumerate() {
        for j in 0..d.tgt.len() {
            let e = col.entry(j);
            if e.is_zero() {
                continue;
            }
            out.set_block(c * n, j * n, &w.op_poly(&e, cache));
        }
    }
    out
}

/// Block matrix for `F_i ⊗ W → F_{i-1} ⊗ W` induced by `d`.
fn tensor_matrix(d: &FreeMap, w: &FiniteLengthModule, cache: &mut HashMap<Monomial, Matrix>) -> Matrix {
    let n = w.dim();
    let mut out = Matrix::zeros(w.field(), d.tgt.len() * n, d.src.len() * n);
    for (c, col) in d.cols.iter().enumerate() {
        for j in 0..d.tgt.len() {
            let e = col.entry(j);
            if e.is_zero() {
                continue;
            }
            out.set_block(j * n, c * n, &w.op_poly(&e, cache));
        }
    }
    out
}

/// `dim Ext^i(M, W)` for `i ≤ i_max`, from a resolution of `M` through `F_{i_max+1}`.
pub fn ext_dims(res: &Resolution, w: &FiniteLengthModule, i_max: usize) -> Vec<usize> {
    let n = w.dim();
    let mut cache = HashMap::new();
    let ranks: Vec<usize> = (0..=i_max).map(|i| hom_matrix(&res.differential(i + 1), w, &mut cache).rank()).collect();
    (0..=i_max)
        .map(|i| res.rank(i) * n - ranks[i] - if i > 0 { ranks[i - 1] } else { 0 })
        .collect()
}

/// `dim Tor_i(M, W)` for `i ≤ i_max`, from a resolution of `M` through `F_{i_max+1}`.
pub fn tor_dims(res: &Resolution, w: &FiniteLengthModule, i_max: usize) -> Vec<usize> {
    let n = w.dim();
    let mut cache = HashMap::new();
    // ranks[i] = rank of ∂_{i+1}.
    let ranks: Vec<usize> = (0..=i_max).map(|i| tensor_matrix(&res.differential(i + 1), w, &mut cache).rank()).collect();
    (0..=i_max)
        .map(|i| res.rank(i) * n - ranks[i] - if i > 0 { ranks[i - 1] } else { 0 })
        .collect()
}

/// `dim Ext^i(M, W)` resolving `M` directly.
pub fn ext_dims_of(m: &GradedModule, w: &FiniteLengthModule, i_max: usize) -> Vec<usize> {
    ext_dims(&min_resolution(m, i_max + 1), w, i_max)
}

pub fn tor_dims_of(m: &GradedModule, w: &FiniteLengthModule, i_max: usize) -> Vec<usize> {
    tor_dims(&min_resolution(m, i_max + 1), w, i_max)
}

/// `dim_k Hom(M, W)`.
pub fn hom_dim(m: &GradedModule, w: &FiniteLengthModule) -> usize {
    ext_dims(&min_resolution(m, 1), w, 0)[0]
}

/// `dim_k Hom_R(V, W)` as the space of `T` with `T X_i = Y_i T` for all `i`.
pub fn intertwiner_dim(v: &FiniteLengthModule, w: &FiniteLengthModule) -> usize {
    let (n, m) = (v.dim(), w.dim());
    let field = v.field();
    let unknowns = n * m;
    if unknowns == 0 {
        return 0;
    }
    let nv = v.ops.len();
    let mut sys = Matrix::zeros(field, nv * unknowns, unknowns);
    // T is m×n, unknown (a, b) at a·n + b. Equation (i, a, c): Σ_b T_ab X_bc - Σ_b Y_ab T_bc.
    for i in 0..nv {
        let (x, y) = (&v.ops[i], &w.ops[i]);
        for a in 0..m {
            for c in 0..n {
                let row = i * unknowns + a * n + c;
                for b in 0..n {
                    let xv = x.get(b, c);
                    if !xv.is_zero() {
                        let cur = sys.get(row, a * n + b) + xv;
                        sys.set(row, a * n + b, cur);
                    }
                }
                for b in 0..m {
                    let yv = y.get(a, b);
                    if !yv.is_zero() {
                        let cur = sys.get(row, b * n + c) - yv;
                        sys.set(row, b * n + c, cur);
                    }
                }
            }
        }
    }
    unknowns - sys.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Ideal, QuotientRing};
    use crate::poly::PolyRing;
    use std::sync::Arc;

    fn ring(vars: &[&str], ideal: &[&str]) -> Arc<QuotientRing> {
        let p = PolyRing::new(FieldSpec::Rationals, vars).unwrap();
        QuotientRing::new(Ideal::parse(p, ideal).unwrap()).unwrap()
    }

    fn cyc(r: &Arc<QuotientRing>, gens: &[&str]) -> GradedModule {
        let ps: Vec<Polynomial> = gens.iter().map(|g| r.poly().parse(g).unwrap()).collect();
        GradedModule::cyclic(r.clone(), &ps).unwrap()
    }

    #[test]
    fn operators_commute_and_are_nilpotent() {
        let r = ring(&["x", "y"], &[]);
        let v = FiniteLengthModule::from_module(cyc(&r, &["x^2", "x*y^2", "y^3"])).unwrap();
        assert_eq!(v.dim(), 5);
        let (x, y) = (v.op(0), v.op(1));
        assert_eq!(x.mul(y), y.mul(x));
        let mut p = x.clone();
        for _ in 0..5 {
            p = p.mul(x);
        }
        assert!(p.is_zero());
        assert_eq!(v.socle_dim(), 2);
        assert_eq!(v.cosocle_dim(), 1);
    }

    #[test]
    fn linear_route_matches_presentations() {
        let r = ring(&["x", "y"], &["x*y", "y^2"]);
        let k = GradedModule::residue_field(r.clone());
        let w = FiniteLengthModule::from_module(cyc(&r, &["x^2"])).unwrap();
        let dims = ext_dims_of(&k, &w, 3);
        for (i, d) in dims.iter().enumerate() {
            let e = crate::homology::ext_fg(i, &k, w.module()).unwrap();
            assert_eq!(e.length().finite(), Some(*d), "Ext^{i}");
        }
        let dims = tor_dims_of(&k, &w, 3);
        for (i, d) in dims.iter().enumerate() {
            let t = crate::homology::tor_fg(i, &k, w.module()).unwrap();
            assert_eq!(t.length().finite(), Some(*d), "Tor_{i}");
        }
    }

    #[test]
    fn hom_by_intertwiners() {
        let r = ring(&["x", "y"], &[]);
        let v = FiniteLengthModule::from_module(cyc(&r, &["x^2", "y"])).unwrap();
        let w = FiniteLengthModule::from_module(cyc(&r, &["x^3", "x*y", "y^2"])).unwrap();
        assert_eq!(intertwiner_dim(&v, &w), hom_dim(v.module(), &w));
        assert_eq!(intertwiner_dim(&w, &v), hom_dim(w.module(), &v));
    }
}
