//! Matlis duality: explicit duals of finite-length modules and artinian
//! modules represented as formal duals `D(N)` of finitely generated ones.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::finite::FiniteLengthModule;
use crate::homology::{ext_fg, tor_fg};
use crate::linalg::{Matrix, SparseEchelon};
use crate::module::{GradedModule, Length};
use crate::monomial::Monomial;
use crate::vector::{VTerm, Vector};

/// Deliberate defects used to show that the property checks can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mutation {
    /// Dual operators are not transposed.
    SkipTranspose,
    /// Stabilization exponents come out one too small.
    StabilizationMinusOne,
    /// Ext is read off one homological degree too high.
    ExtIndexShift,
}

/// `Some(m)` when a mutation is active for this computation.
pub type Knobs = Option<Mutation>;

/// A dualized finite-length module with its relation to the functional basis.
#[derive(Clone, Debug)]
pub struct Dual {
    pub module: FiniteLengthModule,
    /// Stored degree = true degree (≤ 0) + `shift`.
    pub shift: i32,
    /// Columns: standard basis of `module` written in the functional basis
    /// `f_j = b_j^*` of the source.
    pub to_functional: Matrix,
}

impl Dual {
    /// The dual in its true, non-positive degrees.
    pub fn unshifted(&self) -> FiniteLengthModule {
        self.module.twist(-self.shift)
    }
}

/// `Hom_k(V, k)` with transposed operators, re-presented over `R`.
pub fn dualize(v: &FiniteLengthModule) -> Dual {
    dualize_with(v, None).expect("dual of a finite-length module has finite length")
}

pub fn dualize_with(v: &FiniteLengthModule, knobs: Knobs) -> Result<Dual> {
    let ring = v.module().ring().clone();
    let field = v.field();
    let n = v.dim();
    let nv = ring.nvars();
    if n == 0 {
        let module = FiniteLengthModule::from_module(GradedModule::free(ring, vec![])).unwrap();
        return Ok(Dual { module, shift: 0, to_functional: Matrix::zeros(field, 0, 0) });
    }
    let maxd = *v.degrees().iter().max().unwrap();
    let deg: Vec<i32> = v.degrees().iter().map(|d| maxd - d).collect();
    let top = *deg.iter().max().unwrap();
    let ops: Vec<Matrix> = v
        .ops()
        .iter()
        .map(|x| if knobs == Some(Mutation::SkipTranspose) { x.clone() } else { x.transpose() })
        .collect();
    let apply = |i: usize, w: &[Scalar]| ops[i].mul_vec(w);
    let unit = |j: usize| {
        let mut w = vec![field.zero(); n];
        w[j] = field.one();
        w
    };
    let sparse = |w: &[Scalar]| -> Vec<(usize, Scalar)> {
        w.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
    };

    // Generators: a complement of m·V* in each degree, chosen among the f_j.
    let mut gens: Vec<usize> = Vec::new();
    for e in 0..=top {
        let mut ech = SparseEchelon::new();
        for j in (0..n).filter(|&j| deg[j] == e - 1) {
            for i in 0..nv {
                ech.insert(sparse(&apply(i, &unit(j))));
            }
        }
        for j in (0..n).filter(|&j| deg[j] == e) {
            if ech.insert(sparse(&unit(j))) {
                gens.push(j);
            }
        }
    }
    let gdeg: Vec<i32> = gens.iter().map(|&j| deg[j]).collect();

    // Images of mon·e_k in V*, and the kernel of S^r → V* degree by degree.
    let mut images: HashMap<(u32, Monomial), Vec<Scalar>> = HashMap::new();
    let mut relations: Vec<Vector> = Vec::new();
    let mut prev_kernel: Vec<Vec<(u32, Monomial, Scalar)>> = Vec::new();
    let ideal = ring.ideal_basis().to_vec();
    let lo = *gdeg.iter().min().unwrap();
    for e in lo..=top + 1 {
        let mut terms: Vec<(u32, Monomial)> = Vec::new();
        for (k, &a) in gdeg.iter().enumerate() {
            if e < a {
                continue;
            }
            for m in Monomial::all_of_degree(nv, (e - a) as u32) {
                terms.push((k as u32, m));
            }
        }
        for &(k, m) in &terms {
            let img = match m.support().next() {
                None => unit(gens[k as usize]),
                Some(i) => {
                    let rest = Monomial::var(i).quotient_of(&m);
                    apply(i, &images[&(k, rest)])
                }
            };
            images.insert((k, m), img);
        }
        let index: HashMap<(u32, Monomial), usize> = terms.iter().enumerate().map(|(i, t)| (*t, i)).collect();
        let mut mat = Matrix::zeros(field, n, terms.len());
        for (c, t) in terms.iter().enumerate() {
            for (r, x) in images[t].iter().enumerate() {
                if !x.is_zero() {
                    mat.set(r, c, x.clone());
                }
            }
        }
        let kernel = mat.kernel();
        // Known part: S_1·K_{e-1} + I·F in degree e.
        let mut known = SparseEchelon::new();
        for kv in &prev_kernel {
            for i in 0..nv {
                let xi = Monomial::var(i);
                known.insert(kv.iter().map(|(k, m, c)| (index[&(*k, m.mul(&xi))], c.clone())).collect());
            }
        }
        for g in &ideal {
            let dg = g.homogeneous_degree().unwrap() as i32;
            for (k, &a) in gdeg.iter().enumerate() {
                if e - a - dg < 0 {
                    continue;
                }
                for m in Monomial::all_of_degree(nv, (e - a - dg) as u32) {
                    known.insert(g.terms().iter().map(|(gm, c)| (index[&(k as u32, gm.mul(&m))], c.clone())).collect());
                }
            }
        }
        let mut this_kernel = Vec::new();
        for kv in kernel {
            let entries: Vec<(u32, Monomial, Scalar)> = kv
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (terms[i].0, terms[i].1, c.clone()))
                .collect();
            if known.insert(sparse(&kv)) {
                relations.push(Vector::from_terms(
                    entries.iter().map(|(k, m, c)| VTerm { pos: *k, mon: *m, coef: c.clone() }).collect(),
                ));
            }
            this_kernel.push(entries);
        }
        prev_kernel = this_kernel;
    }

    let module = FiniteLengthModule::from_module(GradedModule::new(ring, gdeg, relations)?)?;
    if module.dim() != n {
        return Err(Error::Malformed(format!("dual has dimension {} instead of {n}", module.dim())));
    }
    let mut to_functional = Matrix::zeros(field, n, n);
    for (c, b) in module.basis().iter().enumerate() {
        let img = images.get(b).ok_or_else(|| Error::Malformed("dual basis element outside the computed range".into()))?;
        for (r, x) in img.iter().enumerate() {
            if !x.is_zero() {
                to_functional.set(r, c, x.clone());
            }
        }
    }
    Ok(Dual { module, shift: maxd, to_functional })
}

/// The artinian module `D(N)`, kept as its finitely generated witness.
#[derive(Clone, Debug)]
pub struct ArtinianModule {
    pub dual_of: GradedModule,
    pub shift: i32,
}

impl ArtinianModule {
    pub fn dual_of(n: GradedModule) -> Self {
        ArtinianModule { dual_of: n, shift: 0 }
    }

    pub fn witness(&self) -> &GradedModule {
        &self.dual_of
    }

    /// Length of `D(N)`, equal to that of `N`.
    pub fn length(&self) -> Length {
        self.dual_of.length()
    }

    /// `D(N)` as a finitely generated module when `N` has finite length.
    pub fn materialize(&self) -> Result<Dual> {
        Ok(dualize(&FiniteLengthModule::from_module(self.dual_of.clone())?))
    }
}

/// `artinian_dual(N) = D(N)`.
pub fn artinian_dual(n: GradedModule) -> ArtinianModule {
    ArtinianModule::dual_of(n)
}

/// `dual_witness(D(N)) = N`.
pub fn dual_witness(a: &ArtinianModule) -> &GradedModule {
    &a.dual_of
}

/// `(0 :_A m^s) = D(N/m^s N)`.
pub fn socle_stage(a: &ArtinianModule, s: u32) -> Dual {
    socle_stage_with(a, s, None).expect("N/m^s N has finite length")
}

pub fn socle_stage_with(a: &ArtinianModule, s: u32, knobs: Knobs) -> Result<Dual> {
    let q = a.dual_of.truncate(s);
    dualize_with(&FiniteLengthModule::from_module(q)?, knobs)
}

/// Least `t` with `m^t A = m^{t+1} A`, read off as the stabilization of
/// `(0 :_N m^t)`.
pub fn stabilization_exponent(a: &ArtinianModule) -> u32 {
    stabilization_exponent_with(a, None)
}

pub fn stabilization_exponent_with(a: &ArtinianModule, knobs: Knobs) -> u32 {
    let t = a.dual_of.gamma_m().1;
    if knobs == Some(Mutation::StabilizationMinusOne) {
        t.saturating_sub(1)
    } else {
        t
    }
}

/// Least `t` with `m^t L = m^{t+1} L` for a finite-length `L`.
pub fn finite_stabilization(l: &GradedModule) -> Result<u32> {
    let s = l.nilpotency_certificate().ok_or_else(|| Error::Scope("partner has no finite-length certificate".into()))?;
    let len = |t: u32| l.truncate(t).length().finite().unwrap();
    let mut t = 0;
    while t < s && len(t) != len(t + 1) {
        t += 1;
    }
    Ok(t)
}

/// `A/m^s A = D((0 :_N m^s))`.
pub fn top_quotient(a: &ArtinianModule, s: u32, knobs: Knobs) -> Result<Dual> {
    let colon = a.dual_of.colon(&a.dual_of.ring().maximal_ideal(), s).module;
    dualize_with(&FiniteLengthModule::from_module(colon)?, knobs)
}

/// Choices made in `Hom(A, N') = Hom(A/m^s A, (0 :_{N'} m^s))`.
#[derive(Debug, Clone)]
pub struct HomReduction {
    pub n: u32,
    pub t: u32,
    pub s: u32,
    pub source: FiniteLengthModule,
    pub target: FiniteLengthModule,
    pub hom: FiniteLengthModule,
}

pub fn hom_artinian_to_fg(a: &ArtinianModule, np: &GradedModule) -> Result<HomReduction> {
    hom_artinian_to_fg_with(a, np, None)
}

pub fn hom_artinian_to_fg_with(a: &ArtinianModule, np: &GradedModule, knobs: Knobs) -> Result<HomReduction> {
    check_rings(&a.dual_of, np)?;
    let n = np.gamma_m().1.max(1);
    let t = stabilization_exponent_with(a, knobs);
    let s = n.min(t);
    let source = top_quotient(a, s, knobs)?.module;
    let target = FiniteLengthModule::from_module(np.colon(&np.ring().maximal_ideal(), s).module)?;
    let hom = FiniteLengthModule::from_module(ext_fg(0, source.module(), target.module())?)?;
    Ok(HomReduction { n, t, s, source, target, hom })
}

/// A partner for tensor products and depth computations.
#[derive(Clone, Debug)]
pub enum Partner {
    Noetherian(GradedModule),
    Artinian(ArtinianModule),
}

impl Partner {
    pub fn ring(&self) -> &std::sync::Arc<crate::ring::QuotientRing> {
        match self {
            Partner::Noetherian(m) => m.ring(),
            Partner::Artinian(a) => a.dual_of.ring(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct TensorReduction {
    pub t: u32,
    pub left: FiniteLengthModule,
    pub right: FiniteLengthModule,
    pub tensor: FiniteLengthModule,
}

/// `A ⊗ L = (A/m^t A) ⊗ (L/m^t L)` for an m-torsion partner of finite type.
pub fn tensor_with_artinian(a: &ArtinianModule, l: &Partner) -> Result<TensorReduction> {
    tensor_with_artinian_with(a, l, None)
}

pub fn tensor_with_artinian_with(a: &ArtinianModule, l: &Partner, knobs: Knobs) -> Result<TensorReduction> {
    check_rings(&a.dual_of, match l {
        Partner::Noetherian(m) => m,
        Partner::Artinian(b) => &b.dual_of,
    })?;
    let ta = stabilization_exponent_with(a, knobs);
    let (tl, partner_finite) = match l {
        Partner::Artinian(b) => (stabilization_exponent_with(b, knobs), None),
        Partner::Noetherian(m) => {
            if m.length() == Length::Infinite {
                return Err(Error::Scope(
                    "tensor with non-torsion noetherian module: use tor_fg_with_artinian at i = 0 via duality".into(),
                ));
            }
            (finite_stabilization(m)?, Some(m))
        }
    };
    let t = ta.max(tl);
    let left = top_quotient(a, t, knobs)?.module;
    let right = match (l, partner_finite) {
        (Partner::Artinian(b), _) => top_quotient(b, t, knobs)?.module,
        (_, Some(m)) => FiniteLengthModule::from_module(m.truncate(t))?,
        _ => unreachable!(),
    };
    let tensor = FiniteLengthModule::from_module(left.module().tensor(right.module())?)?;
    Ok(TensorReduction { t, left, right, tensor })
}

/// `Ext^i(A, A') = Ext^i(N_{A'}, N_A)`.
pub fn ext_artinian_pair(i: usize, a: &ArtinianModule, ap: &ArtinianModule) -> Result<GradedModule> {
    ext_fg(i, &ap.dual_of, &a.dual_of)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MixedOp {
    /// `Ext^i(N, D(N')) = D(Tor_i(N, N'))`.
    ExtFgToArtinian,
    /// `Tor_i(N, D(N')) = D(Ext^i(N, N'))`.
    TorFgWithArtinian,
}

pub fn mixed_ext_tor(i: usize, n: &GradedModule, ap: &ArtinianModule, op: MixedOp) -> Result<ArtinianModule> {
    let w = match op {
        MixedOp::ExtFgToArtinian => tor_fg(i, n, &ap.dual_of)?,
        MixedOp::TorFgWithArtinian => ext_fg(i, n, &ap.dual_of)?,
    };
    Ok(ArtinianModule::dual_of(w))
}

fn check_rings(a: &GradedModule, b: &GradedModule) -> Result<()> {
    if a.ring().same_ring(b.ring()) {
        Ok(())
    } else {
        Err(Error::RingMismatch("modules over different rings".into()))
    }
}
