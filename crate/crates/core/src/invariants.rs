//! Depth, width, annihilators, associated and attached primes, and the
//! vanishing and depth identities evaluated on concrete instances.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::finite::FiniteLengthModule;
use crate::homology::{ext_from_resolution, hom_fg, preimage_of_relations, tor_from_resolution};
use crate::matlis::{
    artinian_dual, dualize, ext_artinian_pair, hom_artinian_to_fg, mixed_ext_tor, stabilization_exponent,
    tensor_with_artinian, ArtinianModule, MixedOp, Partner,
};
use crate::module::{GradedModule, Length};
use crate::poly::Polynomial;
use crate::resolution::min_resolution;
use crate::ring::{Ideal, QuotientRing};
use crate::vector::{VTerm, Vector};

/// A value found by a bounded search: either exact or at least the bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Bounded {
    Exact(usize),
    AtLeast(usize),
}

impl Bounded {
    pub fn is_positive(self) -> bool {
        !matches!(self, Bounded::Exact(0))
    }
}

impl fmt::Display for Bounded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bounded::Exact(i) => write!(f, "{i}"),
            Bounded::AtLeast(b) => write!(f, ">={b}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Grade {
    Depth,
    Width,
}

/// Default search bound: number of variables plus two.
pub fn default_bound(ring: &QuotientRing) -> usize {
    ring.nvars() + 2
}

/// `R/a` as a cyclic module.
pub fn quotient_module(ring: &std::sync::Arc<QuotientRing>, a: &Ideal) -> Result<GradedModule> {
    GradedModule::cyclic(ring.clone(), a.generators())
}

/// First `i < bound` with `Ext^i(R/a, L) ≠ 0` (depth) or `Tor_i(R/a, L) ≠ 0`
/// (width). Artinian `L = D(N)` is handled through `Ext^i(R/a, D(N)) =
/// D(Tor_i(R/a, N))` and `Tor_i(R/a, D(N)) = D(Ext^i(R/a, N))`.
pub fn depth_width(a: &Ideal, l: &Partner, bound: usize, grade: Grade) -> Result<Bounded> {
    if bound < 1 {
        return Err(Error::InvalidArgument("bound must be at least 1".into()));
    }
    let ring = l.ring().clone();
    let ra = quotient_module(&ring, a)?;
    let res = min_resolution(&ra, bound);
    let (witness, use_ext) = match (l, grade) {
        (Partner::Noetherian(m), Grade::Depth) => (m, true),
        (Partner::Noetherian(m), Grade::Width) => (m, false),
        (Partner::Artinian(b), Grade::Depth) => (&b.dual_of, false),
        (Partner::Artinian(b), Grade::Width) => (&b.dual_of, true),
    };
    for i in 0..bound {
        let h = if use_ext { ext_from_resolution(&res, i, witness) } else { tor_from_resolution(&res, i, witness) };
        if !h.module().is_zero() {
            return Ok(Bounded::Exact(i));
        }
    }
    Ok(Bounded::AtLeast(bound))
}

pub fn depth(a: &Ideal, l: &Partner, bound: usize) -> Result<Bounded> {
    depth_width(a, l, bound, Grade::Depth)
}

pub fn width(a: &Ideal, l: &Partner, bound: usize) -> Result<Bounded> {
    depth_width(a, l, bound, Grade::Width)
}

/// `Ann_R(M)`, as an ideal of the polynomial ring containing the defining ideal.
pub fn annihilator(m: &GradedModule) -> Ideal {
    let ring = m.ring();
    let poly = ring.poly().clone();
    let g = m.rank();
    if g == 0 {
        return Ideal::new(poly, vec![Polynomial::constant(ring.field().one())]).unwrap();
    }
    // f ↦ (f e_k)_k into ⊕_k F/U, copy k shifted so that e_k sits in degree 0.
    let gu = g as u32;
    let one = ring.field().one();
    let mut tgt_shifts = Vec::with_capacity(g * g);
    let mut rel = Vec::new();
    for k in 0..g {
        for j in 0..g {
            tgt_shifts.push(m.degrees()[j] - m.degrees()[k]);
        }
        let ku = k as u32;
        rel.extend(m.relations().iter().map(|r| r.map_positions(|p| ku * gu + p)));
    }
    let diag = Vector::from_terms((0..gu).map(|k| VTerm { pos: k * gu + k, mon: Default::default(), coef: one.clone() }).collect());
    let mut gens: Vec<Polynomial> = preimage_of_relations(ring, &[0], &[diag], &tgt_shifts, &rel)
        .into_iter()
        .map(|v| v.entry(0))
        .filter(|p| !p.is_zero())
        .collect();
    gens.extend(ring.ideal_basis().iter().cloned());
    Ideal::new(poly, gens).expect("annihilator generators are homogeneous")
}

#[derive(Debug, Clone)]
pub struct SocleAnnSupp {
    pub socle: FiniteLengthModule,
    pub annihilator: Ideal,
    /// `Supp M = V(support_certificate)`.
    pub support_certificate: Ideal,
}

pub fn socle_ann_supp(m: &GradedModule) -> Result<SocleAnnSupp> {
    let socle = FiniteLengthModule::from_module(m.colon(&m.ring().maximal_ideal(), 1).module)?;
    let annihilator = annihilator(m);
    Ok(SocleAnnSupp { socle, support_certificate: annihilator.clone(), annihilator })
}

/// A prime generated by a set of variables.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeIdeal {
    pub vars: Vec<usize>,
    pub names: Vec<String>,
}

impl PrimeIdeal {
    pub fn monomial(ring: &QuotientRing, mut vars: Vec<usize>) -> Self {
        vars.sort_unstable();
        vars.dedup();
        PrimeIdeal { vars, names: ring.poly().variables.clone() }
    }

    pub fn maximal(ring: &QuotientRing) -> Self {
        Self::monomial(ring, (0..ring.nvars()).collect())
    }

    pub fn is_monomial_prime(&self) -> bool {
        true
    }

    pub fn generators(&self, ring: &QuotientRing) -> Vec<Polynomial> {
        self.vars.iter().map(|&i| ring.poly().var(i)).collect()
    }

    /// `f ∈ p`: every term involves a variable of `p`.
    pub fn contains(&self, f: &Polynomial) -> bool {
        f.terms().iter().all(|(m, _)| self.vars.iter().any(|&i| m.exp(i) > 0))
    }

    pub fn contains_ideal(&self, a: &Ideal) -> bool {
        a.generators().iter().all(|f| self.contains(f))
    }
}

impl fmt::Display for PrimeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vars.is_empty() {
            return write!(f, "(0)");
        }
        let names: Vec<&str> = self.vars.iter().map(|&i| self.names[i].as_str()).collect();
        write!(f, "({})", names.join(", "))
    }
}

impl Serialize for PrimeIdeal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn scope_error() -> Error {
    Error::Scope("associated primes supported only in monomial scope".into())
}

/// Checks that `N` is a multigraded module over a monomial quotient: every
/// relation entry is a single term and generator multidegrees can be chosen
/// so that every relation is multihomogeneous.
pub fn check_monomial_scope(n: &GradedModule) -> Result<()> {
    let ring = n.ring();
    if !ring.is_monomial() {
        return Err(scope_error());
    }
    let nv = ring.nvars();
    let mut mdeg: Vec<Option<Vec<i64>>> = vec![None; n.rank()];
    // Relations link generators; propagate multidegrees until consistent.
    let mut changed = true;
    while changed {
        changed = false;
        for r in n.relations() {
            let mut entries: HashMap<u32, Vec<i64>> = HashMap::new();
            for t in r.terms() {
                if entries.insert(t.pos, (0..nv).map(|i| t.mon.exp(i) as i64).collect()).is_some() {
                    return Err(scope_error());
                }
            }
            let anchor = entries.iter().find_map(|(p, e)| {
                mdeg[*p as usize].as_ref().map(|d| d.iter().zip(e).map(|(a, b)| a + b).collect::<Vec<i64>>())
            });
            let total = match anchor {
                Some(t) => t,
                None => {
                    let (p, e) = entries.iter().min_by_key(|(p, _)| **p).unwrap();
                    mdeg[*p as usize] = Some(vec![0; nv]);
                    changed = true;
                    e.clone()
                }
            };
            for (p, e) in &entries {
                let want: Vec<i64> = total.iter().zip(e).map(|(a, b)| a - b).collect();
                match &mdeg[*p as usize] {
                    Some(d) if *d != want => return Err(scope_error()),
                    Some(_) => {}
                    None => {
                        mdeg[*p as usize] = Some(want);
                        changed = true;
                    }
                }
            }
        }
    }
    Ok(())
}

/// Associated primes of a multigraded module over a monomial quotient.
///
/// A monomial prime `p ⊇ I` is associated iff `H = (0 :_N p)` is nonzero and
/// `Ann(H) ⊆ p`: then `p` is minimal in `Supp H ⊆ V(p)`.
pub fn ass_fg(n: &GradedModule) -> Result<Vec<PrimeIdeal>> {
    let ring = n.ring();
    // A nonzero finite-length module has only m as associated prime.
    if n.length() != Length::Infinite {
        return Ok(if n.is_zero() { vec![] } else { vec![PrimeIdeal::maximal(ring)] });
    }
    check_monomial_scope(n)?;
    let nv = ring.nvars();
    let mut out = Vec::new();
    for mask in 0u32..(1 << nv) {
        let p = PrimeIdeal::monomial(ring, (0..nv).filter(|i| mask & (1 << i) != 0).collect());
        if !p.contains_ideal(ring.defining_ideal()) {
            continue;
        }
        let gens = p.generators(ring);
        let h = if gens.is_empty() {
            n.clone()
        } else {
            let pi = Ideal::new(ring.poly().clone(), gens).unwrap();
            n.colon(&pi, 1).module
        };
        if !h.is_zero() && p.contains_ideal(&annihilator(&h)) {
            out.push(p);
        }
    }
    out.sort();
    Ok(out)
}

/// `Att(D(N)) = Ass(N)`.
pub fn att_artinian(a: &ArtinianModule) -> Result<Vec<PrimeIdeal>> {
    ass_fg(&a.dual_of)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    Scope,
}

#[derive(Debug, Clone, Serialize)]
pub struct Clause {
    pub id: String,
    pub tag: String,
    pub left: Value,
    pub right: Value,
    pub verdict: Verdict,
}

impl Clause {
    fn new(id: &str, tag: &str, left: Value, right: Value, ok: bool) -> Self {
        let verdict = if ok { Verdict::Pass } else { Verdict::Fail };
        Clause { id: id.into(), tag: tag.into(), left, right, verdict }
    }

    fn scope(id: &str, tag: &str, why: &str) -> Self {
        Clause { id: id.into(), tag: tag.into(), left: json!(why), right: Value::Null, verdict: Verdict::Scope }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub clauses: Vec<Clause>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.clauses.iter().all(|c| c.verdict != Verdict::Fail)
    }
}

/// `Γ_m(L)` for a partner, as a finite-length module when noetherian.
fn torsion_part(l: &Partner) -> Partner {
    match l {
        Partner::Noetherian(m) => Partner::Noetherian(m.gamma_m().0.module),
        Partner::Artinian(_) => l.clone(),
    }
}

fn is_zero_partner(l: &Partner) -> bool {
    match l {
        Partner::Noetherian(m) => m.is_zero(),
        Partner::Artinian(b) => b.dual_of.is_zero(),
    }
}

/// `A = mA`, read off the witness: `(0 :_N m) = 0`.
pub fn equals_m_times(a: &ArtinianModule) -> bool {
    stabilization_exponent(a) == 0
}

/// `L = mL` for an m-torsion partner.
fn partner_equals_m_times(l: &Partner) -> bool {
    match l {
        Partner::Artinian(b) => equals_m_times(b),
        Partner::Noetherian(m) => m.truncate(1).is_zero(),
    }
}

/// Evaluates the vanishing criteria for `Hom(A, L)` and `A ⊗ L` on one pair.
pub fn vanishing_predicates(a: &ArtinianModule, l: &Partner) -> Result<Report> {
    let ring = a.dual_of.ring().clone();
    let m = ring.maximal_ideal();
    let mut clauses = Vec::new();
    let a_mm = equals_m_times(a);
    let na = Partner::Noetherian(a.dual_of.clone());

    // Tensor vanishing for m-torsion partners.
    let torsion_partner = match l {
        Partner::Artinian(_) => true,
        Partner::Noetherian(n) => n.length() != Length::Infinite,
    };
    if torsion_partner {
        let t0 = tensor_with_artinian(a, l)?.tensor.dim() == 0;
        let l_mm = partner_equals_m_times(l);
        let depth_a = depth(&m, &na, 1)?.is_positive();
        let depth_l = match l {
            Partner::Artinian(b) => depth(&m, &Partner::Noetherian(b.dual_of.clone()), 1)?.is_positive(),
            Partner::Noetherian(n) => {
                let d = dualize(&FiniteLengthModule::from_module(n.clone())?).module.into_module();
                depth(&m, &Partner::Noetherian(d), 1)?.is_positive()
            }
        };
        clauses.push(Clause::new("tensor-zero-iff-m-divisible", "tensor-vanishing", json!(t0), json!(a_mm || l_mm), t0 == (a_mm || l_mm)));
        clauses.push(Clause::new(
            "m-divisible-iff-positive-depth",
            "tensor-vanishing",
            json!(a_mm || l_mm),
            json!(depth_a || depth_l),
            (a_mm || l_mm) == (depth_a || depth_l),
        ));
    } else {
        clauses.push(Clause::scope("tensor-zero-iff-m-divisible", "tensor-vanishing", "partner is not m-torsion"));
        // A ⊗ N = D(Hom(N, N_A)) for noetherian N.
        let Partner::Noetherian(n) = l else { unreachable!() };
        if !a.dual_of.is_zero() {
            let t0 = mixed_ext_tor(0, n, a, MixedOp::TorFgWithArtinian)?.dual_of.is_zero();
            let ann = annihilator(n);
            let nzd = depth(&ann, &na, 1)?.is_positive();
            clauses.push(Clause::new("tensor-zero-iff-nonzerodivisor", "tensor-vanishing-fg", json!(t0), json!(nzd), t0 == nzd));
            match att_artinian(a) {
                Ok(att) => {
                    let disjoint = att.iter().all(|p| !p.contains_ideal(&ann));
                    clauses.push(Clause::new("tensor-zero-iff-att-disjoint", "tensor-vanishing-fg", json!(t0), json!(disjoint), t0 == disjoint));
                }
                Err(_) => clauses.push(Clause::scope("tensor-zero-iff-att-disjoint", "tensor-vanishing-fg", "monomial scope")),
            }
        }
    }

    // Hom vanishing.
    let gamma = torsion_part(l);
    let hom0 = match l {
        Partner::Noetherian(n) => hom_artinian_to_fg(a, n)?.hom.dim() == 0,
        Partner::Artinian(b) => ext_artinian_pair(0, a, b)?.is_zero(),
    };
    let hom_gamma0 = match &gamma {
        Partner::Noetherian(g) => hom_artinian_to_fg(a, g)?.hom.dim() == 0,
        Partner::Artinian(b) => hom_fg(&b.dual_of, &a.dual_of)?.is_zero(),
    };
    // Hom(D(Γ), D(A)) on the witness side.
    let (dual_gamma, ann_gamma) = match &gamma {
        Partner::Noetherian(g) => (dualize(&FiniteLengthModule::from_module(g.clone())?).module.into_module(), annihilator(g)),
        Partner::Artinian(b) => (b.dual_of.clone(), annihilator(&b.dual_of)),
    };
    let witness_hom0 = hom_fg(&dual_gamma, &a.dual_of)?.is_zero();
    let nzd = depth(&ann_gamma, &na, 1)?.is_positive();
    clauses.push(Clause::new("hom-zero-iff-torsion-hom-zero", "hom-vanishing", json!(hom0), json!(hom_gamma0), hom0 == hom_gamma0));
    clauses.push(Clause::new("hom-zero-iff-dual-hom-zero", "hom-vanishing", json!(hom0), json!(witness_hom0), hom0 == witness_hom0));
    clauses.push(Clause::new("hom-zero-iff-nonzerodivisor", "hom-vanishing", json!(hom0), json!(nzd), hom0 == nzd));
    match att_artinian(a) {
        Ok(att) => {
            let disjoint = att.iter().all(|p| !p.contains_ideal(&ann_gamma));
            clauses.push(Clause::new("hom-zero-iff-att-disjoint", "hom-vanishing", json!(hom0), json!(disjoint), hom0 == disjoint));
        }
        Err(_) => clauses.push(Clause::scope("hom-zero-iff-att-disjoint", "hom-vanishing", "monomial scope")),
    }
    // Needs R/(Ann A + Ann Γ) artinian; automatic when Γ has finite length.
    let sum = annihilator(&a.dual_of).sum(&ann_gamma);
    let artinian_quotient = quotient_module(&ring, &sum)?.length() != Length::Infinite;
    if artinian_quotient {
        let rhs = a_mm || is_zero_partner(&gamma);
        clauses.push(Clause::new("hom-zero-iff-divisible-or-torsion-free", "hom-vanishing-local", json!(hom0), json!(rhs), hom0 == rhs));
    } else {
        clauses.push(Clause::scope("hom-zero-iff-divisible-or-torsion-free", "hom-vanishing-local", "quotient by annihilators is not artinian"));
    }
    Ok(Report { clauses })
}

fn first_nonzero(bound: usize, mut nonzero: impl FnMut(usize) -> Result<bool>) -> Result<Bounded> {
    for i in 0..bound {
        if nonzero(i)? {
            return Ok(Bounded::Exact(i));
        }
    }
    Ok(Bounded::AtLeast(bound))
}

/// Both sides of the six depth identities for artinian `A, A'` and
/// noetherian `N, N'`.
pub fn depth_formulas(a: &ArtinianModule, ap: &ArtinianModule, n: &GradedModule, np: &GradedModule, bound: usize) -> Result<Report> {
    let na = Partner::Noetherian(a.dual_of.clone());
    let ann_ap = annihilator(&ap.dual_of);
    let ann_np = annihilator(np);
    let dn = artinian_dual(n.clone());
    let dnp = artinian_dual(np.clone());
    let left1 = depth(&ann_ap, &na, bound)?;
    let left2 = depth(&ann_np, &na, bound)?;
    let left3 = depth(&ann_np, &Partner::Noetherian(n.clone()), bound)?;
    let rows = [
        ("ext-artinian-pair", left1, first_nonzero(bound, |i| Ok(!ext_artinian_pair(i, a, ap)?.is_zero()))?),
        ("ext-artinian-dual", left2, first_nonzero(bound, |i| Ok(!ext_artinian_pair(i, a, &dnp)?.is_zero()))?),
        ("ext-dual-dual", left3, first_nonzero(bound, |i| Ok(!ext_artinian_pair(i, &dn, &dnp)?.is_zero()))?),
        (
            "tor-artinian-dual",
            left1,
            first_nonzero(bound, |i| Ok(!mixed_ext_tor(i, &ap.dual_of, a, MixedOp::TorFgWithArtinian)?.dual_of.is_zero()))?,
        ),
        ("tor-artinian-fg", left2, first_nonzero(bound, |i| Ok(!mixed_ext_tor(i, np, a, MixedOp::TorFgWithArtinian)?.dual_of.is_zero()))?),
        ("tor-dual-fg", left3, first_nonzero(bound, |i| Ok(!mixed_ext_tor(i, np, &dn, MixedOp::TorFgWithArtinian)?.dual_of.is_zero()))?),
    ];
    let clauses = rows
        .into_iter()
        .map(|(id, l, r)| Clause::new(id, "depth-formula", json!(l.to_string()), json!(r.to_string()), l == r))
        .collect();
    Ok(Report { clauses })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
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

    fn names(ps: &[PrimeIdeal]) -> Vec<String> {
        ps.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn depth_and_width_examples() {
        let r = ring(&["x"], &[]);
        let m = r.maximal_ideal();
        let free = GradedModule::free(r.clone(), vec![0]);
        assert_eq!(depth(&m, &Partner::Noetherian(free.clone()), 3).unwrap(), Bounded::Exact(1));
        let e = artinian_dual(free);
        assert_eq!(width(&m, &Partner::Artinian(e.clone()), 3).unwrap(), Bounded::Exact(1));
        let k = GradedModule::residue_field(r.clone());
        assert_eq!(depth(&m, &Partner::Noetherian(k), 3).unwrap(), Bounded::Exact(0));
        let zero = Ideal::zero(r.poly().clone());
        assert_eq!(depth(&m, &Partner::Noetherian(GradedModule::free(r.clone(), vec![])), 2).unwrap(), Bounded::AtLeast(2));
        assert_eq!(depth(&zero, &Partner::Artinian(e), 2).unwrap(), Bounded::Exact(0));
    }

    #[test]
    fn annihilators() {
        let r = ring(&["x", "y"], &[]);
        let k = GradedModule::residue_field(r.clone());
        assert!(annihilator(&k).same_ideal(&r.maximal_ideal()));
        assert!(annihilator(&GradedModule::free(r.clone(), vec![0])).is_zero());
        let c = cyc(&r, &["x*y", "y^2"]);
        assert!(annihilator(&c).same_ideal(&Ideal::parse(r.poly().clone(), &["x*y", "y^2"]).unwrap()));
        let sum = cyc(&r, &["x"]).direct_sum(&cyc(&r, &["y"]).twist(2));
        assert!(annihilator(&sum).same_ideal(&Ideal::parse(r.poly().clone(), &["x*y"]).unwrap()));
        let s = socle_ann_supp(&cyc(&r, &["x^2", "y^2"])).unwrap();
        assert_eq!(s.socle.dim(), 1);
    }

    #[test]
    fn associated_primes() {
        let r1 = ring(&["x"], &[]);
        assert_eq!(names(&ass_fg(&GradedModule::free(r1.clone(), vec![0])).unwrap()), vec!["(0)"]);
        let r = ring(&["x", "y"], &[]);
        assert_eq!(names(&ass_fg(&cyc(&r, &["x*y"])).unwrap()), vec!["(x)", "(y)"]);
        assert_eq!(names(&ass_fg(&cyc(&r, &["x*y", "y^2"])).unwrap()), vec!["(x, y)", "(y)"]);
        let q = ring(&["x", "y"], &["x*y", "y^2"]);
        let e = artinian_dual(GradedModule::free(q.clone(), vec![0]));
        assert_eq!(names(&att_artinian(&e).unwrap()), vec!["(x, y)", "(y)"]);
        assert_eq!(names(&att_artinian(&artinian_dual(GradedModule::residue_field(q))).unwrap()), vec!["(x, y)"]);
        let b = ring(&["x", "y"], &["x^2 - y^2"]);
        assert!(matches!(ass_fg(&GradedModule::free(b, vec![0])), Err(Error::Scope(_))));
        let (x, y) = (r.poly().parse("x").unwrap(), r.poly().parse("y").unwrap());
        // Coker of (x, y)^T is the maximal ideal, torsion-free.
        let koszul = GradedModule::from_columns(r.clone(), vec![0, 0], &[vec![x.clone(), y.clone()]]).unwrap();
        assert_eq!(names(&ass_fg(&koszul).unwrap()), vec!["(0)"]);
        let twisted = GradedModule::from_columns(r.clone(), vec![0, 0], &[vec![x.clone(), y.clone()], vec![y, x]]).unwrap();
        assert!(matches!(ass_fg(&twisted), Err(Error::Scope(_))));
    }

    #[test]
    fn vanishing_examples() {
        let r = ring(&["x"], &[]);
        let e = artinian_dual(GradedModule::free(r.clone(), vec![0]));
        let rep = vanishing_predicates(&e, &Partner::Artinian(e.clone())).unwrap();
        assert!(rep.all_pass(), "{rep:?}");
        let q = ring(&["x", "y"], &["x*y", "y^2"]);
        let eq = artinian_dual(GradedModule::free(q.clone(), vec![0]));
        let rep = vanishing_predicates(&eq, &Partner::Artinian(eq.clone())).unwrap();
        assert!(rep.all_pass(), "{rep:?}");
        assert_eq!(rep.clauses[0].left, json!(false));
        let dk = artinian_dual(GradedModule::residue_field(r.clone()));
        let rep = vanishing_predicates(&dk, &Partner::Noetherian(GradedModule::free(r.clone(), vec![0]))).unwrap();
        assert!(rep.all_pass(), "{rep:?}");
        let rep = vanishing_predicates(&e, &Partner::Noetherian(cyc(&r, &["x"]))).unwrap();
        assert!(rep.all_pass(), "{rep:?}");
    }

    #[test]
    fn depth_formula_examples() {
        let r = ring(&["x"], &[]);
        let a = artinian_dual(cyc(&r, &["x"]));
        let free = GradedModule::free(r.clone(), vec![0]);
        let rep = depth_formulas(&a, &a, &free, &free, 3).unwrap();
        assert!(rep.all_pass(), "{rep:?}");
        assert_eq!(rep.clauses[0].left, json!("0"));
        let r2 = ring(&["x", "y"], &[]);
        let ay = artinian_dual(cyc(&r2, &["y"]));
        let ax = artinian_dual(cyc(&r2, &["x"]));
        let rep = depth_formulas(&ay, &ax, &cyc(&r2, &["y"]), &cyc(&r2, &["x"]), 4).unwrap();
        assert!(rep.all_pass(), "{rep:?}");
        assert_eq!(rep.clauses[0].left, json!("1"));
    }
}
