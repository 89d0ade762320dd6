//! Homogeneous ideals and graded quotient rings `R = S/I`.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::groebner::{GroebnerBasis, Row};
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};
use crate::vector::{TermOrder, VTerm};

pub(crate) fn poly_row(p: &Polynomial, pos: u32) -> Row {
    p.terms().iter().map(|(m, c)| VTerm { pos, mon: *m, coef: c.clone() }).collect()
}

pub(crate) fn row_poly(r: &Row) -> Polynomial {
    Polynomial::from_terms(r.iter().map(|t| (t.mon, t.coef.clone())).collect())
}

/// A homogeneous ideal of `S` with a write-once Gröbner basis cache.
pub struct Ideal {
    ring: Arc<PolyRing>,
    gens: Vec<Polynomial>,
    cache: OnceLock<GroebnerBasis>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let cache = OnceLock::new();
        if let Some(gb) = self.cache.get() {
            let _ = cache.set(gb.clone());
        }
        Ideal { ring: self.ring.clone(), gens: self.gens.clone(), cache }
    }
}

impl Ideal {
    pub fn new(ring: Arc<PolyRing>, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            if !g.is_homogeneous() {
                return Err(Error::Inhomogeneous(g.display(&ring)));
            }
            if let Some(t) = g.leading() {
                if t.1.field() != ring.field {
                    return Err(Error::RingMismatch("generator over a different field".into()));
                }
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring, gens, cache: OnceLock::new() })
    }

    pub fn parse(ring: Arc<PolyRing>, gens: &[&str]) -> Result<Self> {
        let polys = gens.iter().map(|g| ring.parse(g)).collect::<Result<Vec<_>>>()?;
        Self::new(ring, polys)
    }

    pub fn zero(ring: Arc<PolyRing>) -> Self {
        Ideal { ring, gens: Vec::new(), cache: OnceLock::new() }
    }

    /// The irrelevant ideal `(x_1, ..., x_n)`.
    pub fn maximal(ring: Arc<PolyRing>) -> Self {
        let gens = (0..ring.nvars()).map(|i| ring.var(i)).collect();
        Ideal { ring, gens, cache: OnceLock::new() }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn has_cached_basis(&self) -> bool {
        self.cache.get().is_some()
    }

    pub fn basis(&self) -> &GroebnerBasis {
        self.cache.get_or_init(|| {
            let rows = self.gens.iter().map(|g| poly_row(g, 0)).collect();
            GroebnerBasis::compute(rows, vec![0], TermOrder::default())
        })
    }

    /// The reduced Gröbner basis as polynomials, leading terms descending.
    pub fn groebner(&self) -> Vec<Polynomial> {
        self.basis().elements().iter().map(row_poly).collect()
    }

    /// Returns the ideal with its reduced basis cached.
    pub fn buchberger(self) -> Self {
        self.basis();
        self
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        row_poly(&self.basis().reduce_row(poly_row(f, 0)))
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_proper(&self) -> bool {
        !self.gens.iter().any(|g| g.homogeneous_degree() == Some(0))
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn same_ideal(&self, other: &Ideal) -> bool {
        self.groebner() == other.groebner()
    }

    pub fn is_monomial(&self) -> bool {
        self.groebner().iter().all(|g| g.is_monomial_term())
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal { ring: self.ring.clone(), gens, cache: OnceLock::new() }
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        Ideal { ring: self.ring.clone(), gens, cache: OnceLock::new() }
    }

    pub fn power(&self, s: u32) -> Ideal {
        let mut acc = Ideal { ring: self.ring.clone(), gens: vec![self.ring.constant(1)], cache: OnceLock::new() };
        for _ in 0..s {
            acc = acc.product(self);
            // Keep generator lists small for monomial ideals.
            acc.gens = dedup_polys(acc.gens);
        }
        acc
    }

    /// `(self : other) = {f : f·other ⊆ self}`.
    pub fn colon(&self, other: &Ideal) -> Ideal {
        crate::syzygy::ideal_colon(self, other)
    }

    pub fn display(&self) -> String {
        let g: Vec<String> = self.gens.iter().map(|p| p.display(&self.ring)).collect();
        format!("({})", g.join(", "))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

fn dedup_polys(mut v: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = Vec::new();
    v.retain(|p| !p.is_zero());
    for p in v {
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

/// The graded ring `R = S/I`, local at the irrelevant ideal.
#[derive(Clone)]
pub struct QuotientRing {
    poly: Arc<PolyRing>,
    defining: Ideal,
    gb: Vec<Polynomial>,
}

impl QuotientRing {
    pub fn new(defining: Ideal) -> Result<Arc<Self>> {
        if !defining.is_proper() {
            return Err(Error::InvalidArgument("defining ideal must be proper".into()));
        }
        let gb = defining.groebner();
        Ok(Arc::new(QuotientRing { poly: defining.ring().clone(), defining, gb }))
    }

    pub fn polynomial(poly: Arc<PolyRing>) -> Arc<Self> {
        QuotientRing::new(Ideal::zero(poly)).unwrap()
    }

    pub fn poly(&self) -> &Arc<PolyRing> {
        &self.poly
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn field(&self) -> crate::field::FieldSpec {
        self.poly.field
    }

    pub fn defining_ideal(&self) -> &Ideal {
        &self.defining
    }

    /// Reduced Gröbner basis of the defining ideal.
    pub fn ideal_basis(&self) -> &[Polynomial] {
        &self.gb
    }

    pub fn maximal_ideal(&self) -> Ideal {
        Ideal::maximal(self.poly.clone())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.defining.normal_form(f)
    }

    pub fn is_monomial(&self) -> bool {
        self.gb.iter().all(|g| g.is_monomial_term())
    }

    /// Rows `g·e_pos` for every basis element `g` of the defining ideal.
    pub(crate) fn ideal_rows(&self, positions: impl Iterator<Item = u32>) -> Vec<Row> {
        let mut out = Vec::new();
        for pos in positions {
            for g in &self.gb {
                out.push(poly_row(g, pos));
            }
        }
        out
    }

    /// Structural equality: same field, variables and defining ideal.
    pub fn same_ring(&self, other: &QuotientRing) -> bool {
        std::ptr::eq(self, other) || (self.poly == other.poly && self.gb == other.gb)
    }

    /// Standard monomials of `R` in degree `d`.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        let leads: Vec<Monomial> = self.gb.iter().map(|g| g.leading().unwrap().0).collect();
        Monomial::all_of_degree(self.nvars(), d)
            .into_iter()
            .filter(|m| !leads.iter().any(|l| l.divides(m)))
            .collect()
    }

    pub fn display(&self) -> String {
        format!("{}[{}]/{}", self.poly.field, self.poly.variables.join(","), self.defining.display())
    }
}

impl fmt::Debug for QuotientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn xyz() -> Arc<PolyRing> {
        PolyRing::new(FieldSpec::Rationals, &["x", "y", "z"]).unwrap()
    }

    fn show(r: &PolyRing, ps: &[Polynomial]) -> Vec<String> {
        ps.iter().map(|p| p.display(r)).collect()
    }

    #[test]
    fn monomial_ideals_are_their_own_basis() {
        let r = PolyRing::new(FieldSpec::Rationals, &["x", "y"]).unwrap();
        let i = Ideal::parse(r.clone(), &["x*y", "y^2"]).unwrap();
        assert_eq!(show(&r, &i.groebner()), vec!["x*y", "y^2"]);
        let j = Ideal::parse(r.clone(), &["x^2", "x*y"]).unwrap();
        assert_eq!(show(&r, &j.groebner()), vec!["x^2", "x*y"]);
    }

    #[test]
    fn binomial_basis_matches_independent_run() {
        // Frozen from an independent grevlex computation (sympy):
        // groebner([x**2 - y*z, x*y], x, y, z, order='grevlex')
        let r = xyz();
        let i = Ideal::parse(r.clone(), &["x^2 - y*z", "x*y"]).unwrap();
        let gb = i.groebner();
        assert_eq!(show(&r, &gb), vec!["y^2*z", "x^2 - y*z", "x*y"]);
        assert!(i.basis().is_groebner());
        // NF(x^2*y + x) = x (x^2 y = y^2 z + y(x^2 - yz), and y^2 z is in I).
        assert_eq!(i.normal_form(&r.parse("x^2*y + x").unwrap()).display(&r), "x");
    }

    #[test]
    fn normal_forms() {
        let r = PolyRing::new(FieldSpec::Rationals, &["x", "y"]).unwrap();
        let i = Ideal::parse(r.clone(), &["x*y", "y^2"]).unwrap();
        assert!(i.normal_form(&r.parse("x*y").unwrap()).is_zero());
        assert_eq!(i.normal_form(&r.parse("x^3 + y").unwrap()).display(&r), "x^3 + y");
    }

    #[test]
    fn inhomogeneous_rejected() {
        let r = xyz();
        assert!(matches!(Ideal::parse(r, &["x^2 - y"]), Err(Error::Inhomogeneous(_))));
    }

    #[test]
    fn ideal_operations() {
        let r = PolyRing::new(FieldSpec::Rationals, &["x", "y"]).unwrap();
        let i = Ideal::parse(r.clone(), &["x*y", "y^2"]).unwrap();
        let y = Ideal::parse(r.clone(), &["y"]).unwrap();
        let c = i.colon(&y);
        assert!(c.same_ideal(&Ideal::parse(r.clone(), &["x", "y"]).unwrap()));
        let unit = Ideal::parse(r.clone(), &["1"]).unwrap();
        assert!(i.colon(&unit).same_ideal(&i));
        let s = Ideal::parse(r.clone(), &["x^2"]).unwrap().sum(&Ideal::parse(r.clone(), &["y^2"]).unwrap());
        assert_eq!(show(&r, &s.groebner()), vec!["x^2", "y^2"]);
        assert!(Ideal::maximal(r.clone()).power(2).same_ideal(&Ideal::parse(r, &["x^2", "x*y", "y^2"]).unwrap()));
    }
}
