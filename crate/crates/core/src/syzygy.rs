//! Syzygies, submodule membership with cofactors, and minimal generators over
//! `R = S/I`, all via one Gröbner computation on `F ⊕ S^m` with an
//! eliminating order (the "tag" trick).

use std::collections::HashMap;

use crate::groebner::{GroebnerBasis, Row};
use crate::linalg::SparseEchelon;
use crate::monomial::Monomial;
use crate::ring::{Ideal, QuotientRing};
use crate::vector::{normalize_terms, FreeMap, TermOrder, VTerm, Vector};

/// Gröbner basis of the submodule `im(map) + I·F` in the canonical order.
pub fn submodule_gb(ring: &QuotientRing, shifts: &[i32], gens: &[Vector]) -> GroebnerBasis {
    let mut rows: Vec<Row> = gens.iter().map(|g| g.terms().to_vec()).collect();
    rows.extend(ring.ideal_rows(0..shifts.len() as u32));
    GroebnerBasis::compute(rows, shifts.to_vec(), TermOrder::default())
}

/// Normal form of `v` modulo a basis in canonical order.
pub fn reduce(gb: &GroebnerBasis, v: &Vector) -> Vector {
    Vector::from_sorted(gb.reduce_row(v.terms().to_vec()))
}

/// Reduces every entry modulo the defining ideal.
pub fn reduce_mod_ideal(ring: &QuotientRing, v: &Vector) -> Vector {
    if ring.ideal_basis().is_empty() {
        return v.clone();
    }
    let max = v.max_pos().map_or(0, |p| p as usize + 1);
    let entries: Vec<_> = v.entries(max).iter().map(|p| ring.normal_form(p)).collect();
    Vector::from_entries(&entries)
}

/// Combined basis for the columns of a map, supporting syzygies and lifts.
pub struct TaggedBasis {
    rank: usize,
    ncols: usize,
    gb: GroebnerBasis,
}

impl TaggedBasis {
    pub fn new(ring: &QuotientRing, map: &FreeMap) -> Self {
        let rank = map.tgt.len();
        let ncols = map.cols.len();
        let r = rank as u32;
        let mut shifts = map.tgt.clone();
        shifts.extend(map.src.iter().copied());
        let mut rows: Vec<Row> = Vec::new();
        for (j, c) in map.cols.iter().enumerate() {
            let mut row = c.terms().to_vec();
            row.push(VTerm { pos: r + j as u32, mon: Monomial::one(), coef: ring.field().one() });
            rows.push(row);
        }
        rows.extend(ring.ideal_rows(0..r));
        rows.extend(ring.ideal_rows(r..r + ncols as u32));
        let gb = GroebnerBasis::compute(rows, shifts, TermOrder { elim: r });
        TaggedBasis { rank, ncols, gb }
    }

    /// Generators of the syzygy module (not necessarily minimal).
    pub fn syzygies(&self, ring: &QuotientRing) -> Vec<Vector> {
        let r = self.rank as u32;
        self.gb
            .elements()
            .iter()
            .filter(|row| row[0].pos >= r)
            .map(|row| {
                let terms = row.iter().map(|t| VTerm { pos: t.pos - r, mon: t.mon, coef: t.coef.clone() }).collect();
                reduce_mod_ideal(ring, &Vector::from_terms(terms))
            })
            .filter(|v| !v.is_zero())
            .collect()
    }

    /// Coefficients `c` with `v ≡ Σ c_j·col_j (mod I·F)`, or `None`.
    pub fn lift(&self, ring: &QuotientRing, v: &Vector) -> Option<Vector> {
        let r = self.rank as u32;
        let row = normalize_terms(v.terms().to_vec(), &self.gb.order);
        let red = self.gb.reduce_row(row);
        if red.iter().any(|t| t.pos < r) {
            return None;
        }
        let terms = red.iter().map(|t| VTerm { pos: t.pos - r, mon: t.mon, coef: -&t.coef }).collect();
        Some(reduce_mod_ideal(ring, &Vector::from_terms(terms)))
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }
}

/// Minimal homogeneous generators of the submodule generated by `gens`
/// (over `R`), preferring earlier and lower-degree generators.
pub fn minimal_generators(ring: &QuotientRing, shifts: &[i32], gens: &[Vector]) -> Vec<Vector> {
    let mut items: Vec<(i32, usize, Vector)> = Vec::new();
    for (k, g) in gens.iter().enumerate() {
        let g = reduce_mod_ideal(ring, g);
        if g.is_zero() {
            continue;
        }
        let d = g.degree(shifts).expect("homogeneous generator");
        items.push((d, k, g));
    }
    items.sort_by_key(|(d, k, _)| (*d, *k));
    let mut selected: Vec<Vector> = Vec::new();
    let mut i = 0;
    while i < items.len() {
        let d = items[i].0;
        let mut j = i;
        while j < items.len() && items[j].0 == d {
            j += 1;
        }
        let gb = submodule_gb(ring, shifts, &selected);
        let mut index: HashMap<(u32, Monomial), usize> = HashMap::new();
        let mut ech = SparseEchelon::new();
        for (_, _, g) in &items[i..j] {
            let red = reduce(&gb, g);
            if red.is_zero() {
                continue;
            }
            let sparse: Vec<_> = red
                .terms()
                .iter()
                .map(|t| {
                    let n = index.len();
                    (*index.entry((t.pos, t.mon)).or_insert(n), t.coef.clone())
                })
                .collect();
            if ech.insert(sparse) {
                selected.push(red);
            }
        }
        i = j;
    }
    selected
}

/// Minimal generators of the syzygy module of `map`, as a map into its source.
pub fn syzygy_map(ring: &QuotientRing, map: &FreeMap) -> FreeMap {
    let tb = TaggedBasis::new(ring, map);
    let syz = tb.syzygies(ring);
    let gens = minimal_generators(ring, &map.src, &syz);
    let degrees = gens.iter().map(|g| g.degree(&map.src).unwrap()).collect();
    FreeMap::new(degrees, map.src.clone(), gens)
}

/// `(I : J)` in the polynomial ring, as the kernel of `S → ⊕_j S/I`, `1 ↦ (g_j)`.
pub fn ideal_colon(i: &Ideal, j: &Ideal) -> Ideal {
    let poly = i.ring().clone();
    let s = QuotientRing::polynomial(poly.clone());
    let jg: Vec<_> = j.generators().to_vec();
    if jg.is_empty() {
        return Ideal::new(poly.clone(), vec![poly.constant(1)]).unwrap();
    }
    let tgt: Vec<i32> = jg.iter().map(|g| -(g.homogeneous_degree().unwrap() as i32)).collect();
    let mut cols = vec![Vector::from_entries(&jg)];
    let mut src = vec![0];
    let ig = i.groebner();
    for (k, _) in jg.iter().enumerate() {
        for g in &ig {
            cols.push(Vector::single(k, g));
            src.push(g.homogeneous_degree().unwrap() as i32 + tgt[k]);
        }
    }
    let map = FreeMap::new(src, tgt, cols);
    let tb = TaggedBasis::new(&s, &map);
    let gens: Vec<_> = tb.syzygies(&s).iter().map(|v| v.entry(0)).filter(|p| !p.is_zero()).collect();
    Ideal::new(poly, gens).unwrap().buchberger()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::linalg::Matrix;
    use crate::poly::{PolyRing, Polynomial};

    fn ring(vars: &[&str], ideal: &[&str]) -> std::sync::Arc<QuotientRing> {
        let p = PolyRing::new(FieldSpec::Rationals, vars).unwrap();
        QuotientRing::new(Ideal::parse(p, ideal).unwrap()).unwrap()
    }

    fn row_map(r: &QuotientRing, entries: &[&str]) -> FreeMap {
        let cols: Vec<Vector> = entries.iter().map(|e| Vector::single(0, &r.poly().parse(e).unwrap())).collect();
        let src = cols.iter().map(|c| c.degree(&[0]).unwrap()).collect();
        FreeMap::new(src, vec![0], cols)
    }

    #[test]
    fn nonzerodivisor_has_no_syzygies() {
        let r = ring(&["x"], &[]);
        assert!(syzygy_map(&r, &row_map(&r, &["x"])).cols.is_empty());
    }

    #[test]
    fn koszul_relation() {
        let r = ring(&["x", "y"], &[]);
        let s = syzygy_map(&r, &row_map(&r, &["x", "y"]));
        assert_eq!(s.cols.len(), 1);
        let e = s.cols[0].entries(2);
        let p = r.poly();
        // (y, -x) up to a scalar.
        let (a, b) = (&e[0], &e[1]);
        let ratio = a.leading().unwrap().1.clone();
        assert_eq!(a, &p.parse("y").unwrap().scale(&ratio));
        assert_eq!(b, &p.parse("-x").unwrap().scale(&ratio));
    }

    /// Degreewise oracle: dimension of `{(a, b) ∈ R_{d-1}^2 : a x + b y = 0 in R_d}`.
    fn brute_syzygy_dim(r: &QuotientRing, d: u32) -> usize {
        let basis_src = r.standard_monomials(d - 1);
        let basis_tgt = r.standard_monomials(d);
        let n = basis_src.len();
        let f = r.field();
        let mut m = Matrix::zeros(f, basis_tgt.len(), 2 * n);
        for (k, var) in [0usize, 1].iter().enumerate() {
            for (j, mon) in basis_src.iter().enumerate() {
                let prod = r.normal_form(&Polynomial::term(f.one(), mon.mul(&Monomial::var(*var))));
                for (tm, c) in prod.terms() {
                    let row = basis_tgt.iter().position(|b| b == tm).unwrap();
                    m.set(row, k * n + j, c.clone());
                }
            }
        }
        2 * n - m.rank()
    }

    /// Dimension in degree `d` of the R-span of the syzygy columns.
    fn span_dim(r: &QuotientRing, syz: &FreeMap, d: u32) -> usize {
        let mut vecs = Vec::new();
        for (c, &deg) in syz.cols.iter().zip(&syz.src) {
            if deg as u32 > d {
                continue;
            }
            for m in r.standard_monomials(d - deg as u32) {
                vecs.push(reduce_mod_ideal(r, &c.mul_term(&r.field().one(), &m)));
            }
        }
        let mut idx = HashMap::new();
        let mut ech = SparseEchelon::new();
        for v in vecs {
            let s: Vec<_> = v
                .terms()
                .iter()
                .map(|t| {
                    let n = idx.len();
                    (*idx.entry((t.pos, t.mon)).or_insert(n), t.coef.clone())
                })
                .collect();
            ech.insert(s);
        }
        ech.rank()
    }

    #[test]
    fn syzygies_over_quotient_match_degreewise_oracle() {
        let r = ring(&["x", "y"], &["x*y", "y^2"]);
        let syz = syzygy_map(&r, &row_map(&r, &["x", "y"]));
        for d in 1..=4 {
            assert_eq!(span_dim(&r, &syz, d), brute_syzygy_dim(&r, d), "degree {d}");
        }
    }

    #[test]
    fn lift_recovers_cofactors() {
        let r = ring(&["x", "y"], &[]);
        let map = row_map(&r, &["x", "y"]);
        let tb = TaggedBasis::new(&r, &map);
        let v = Vector::single(0, &r.poly().parse("x^2 + 3*x*y").unwrap());
        let c = tb.lift(&r, &v).unwrap();
        assert_eq!(map.apply(&c), v);
        assert!(tb.lift(&r, &Vector::single(0, &r.poly().parse("1").unwrap())).is_none());
    }
}
