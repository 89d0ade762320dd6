//! Finitely generated graded modules `coker(R^m → ⊕ R(-a_k))`.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::{Ideal, QuotientRing};
use crate::syzygy::{minimal_generators, reduce, reduce_mod_ideal, submodule_gb, TaggedBasis};
use crate::vector::{FreeMap, VTerm, Vector};

/// Certificate bound: `m^s M = 0` is searched for `s ≤ LENGTH_BOUND`.
pub const LENGTH_BOUND: u32 = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Length {
    Finite(usize),
    /// No certificate `m^s ⊆ Ann(M)` with `s ≤ LENGTH_BOUND`.
    Infinite,
}

impl Length {
    pub fn finite(self) -> Option<usize> {
        match self {
            Length::Finite(n) => Some(n),
            Length::Infinite => None,
        }
    }
}

#[derive(Clone)]
pub struct GradedModule {
    ring: Arc<QuotientRing>,
    degrees: Vec<i32>,
    relations: Vec<Vector>,
    gb: OnceLock<Arc<GroebnerBasis>>,
}

impl std::fmt::Debug for GradedModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rels: Vec<String> = self.relations.iter().map(|r| r.display(self.ring.poly(), self.rank())).collect();
        write!(f, "coker over {:?} degrees {:?} relations [{}]", self.ring, self.degrees, rels.join(", "))
    }
}

/// Result of pruning a presentation: the new module together with the maps
/// between old and new generators (images written in the target generators).
pub struct Minimized {
    pub module: GradedModule,
    pub old_to_new: Vec<Vector>,
    pub new_to_old: Vec<Vector>,
    /// Old indices of the surviving generators.
    pub kept: Vec<usize>,
}

impl GradedModule {
    pub fn new(ring: Arc<QuotientRing>, degrees: Vec<i32>, relations: Vec<Vector>) -> Result<Self> {
        let mut rels = Vec::with_capacity(relations.len());
        for r in relations {
            if r.max_pos().is_some_and(|p| p as usize >= degrees.len()) {
                return Err(Error::Malformed("relation refers to a missing generator".into()));
            }
            if !r.is_homogeneous(&degrees) {
                return Err(Error::Inhomogeneous("relation column is not homogeneous".into()));
            }
            let r = reduce_mod_ideal(&ring, &r);
            if !r.is_zero() {
                rels.push(r);
            }
        }
        Ok(GradedModule { ring, degrees, relations: rels, gb: OnceLock::new() })
    }

    /// Builds a module from relation entries given as polynomials (one inner
    /// vector per column).
    pub fn from_columns(ring: Arc<QuotientRing>, degrees: Vec<i32>, columns: &[Vec<Polynomial>]) -> Result<Self> {
        let cols = columns.iter().map(|c| Vector::from_entries(c)).collect();
        Self::new(ring, degrees, cols)
    }

    pub fn free(ring: Arc<QuotientRing>, degrees: Vec<i32>) -> Self {
        GradedModule { ring, degrees, relations: Vec::new(), gb: OnceLock::new() }
    }

    /// `R/(f_1, ..., f_k)` with its generator in degree 0.
    pub fn cyclic(ring: Arc<QuotientRing>, gens: &[Polynomial]) -> Result<Self> {
        let cols = gens.iter().map(|f| Vector::single(0, f)).collect();
        Self::new(ring, vec![0], cols)
    }

    /// The residue field `k = R/m`.
    pub fn residue_field(ring: Arc<QuotientRing>) -> Self {
        let gens: Vec<Polynomial> = (0..ring.nvars()).map(|i| ring.poly().var(i)).collect();
        Self::cyclic(ring, &gens).unwrap()
    }

    pub fn ring(&self) -> &Arc<QuotientRing> {
        &self.ring
    }

    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn relations(&self) -> &[Vector] {
        &self.relations
    }

    pub fn relation_degrees(&self) -> Vec<i32> {
        self.relations.iter().map(|r| r.degree(&self.degrees).unwrap()).collect()
    }

    /// The presentation map `⊕ R(-deg r_j) → ⊕ R(-a_k)`.
    pub fn presentation(&self) -> FreeMap {
        FreeMap::new(self.relation_degrees(), self.degrees.clone(), self.relations.clone())
    }

    /// Gröbner basis of the relation submodule plus `I·F`.
    pub fn gb(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| Arc::new(submodule_gb(&self.ring, &self.degrees, &self.relations)))
    }

    pub fn normal_form(&self, v: &Vector) -> Vector {
        reduce(self.gb(), v)
    }

    /// Whether `v` is zero in the module.
    pub fn is_zero_element(&self, v: &Vector) -> bool {
        self.normal_form(v).is_zero()
    }

    pub fn is_zero(&self) -> bool {
        let gb = self.gb();
        (0..self.rank() as u32).all(|k| !gb.is_standard(k, &Monomial::one()))
    }

    /// Standard terms `mon·e_k` of degree `d`.
    pub fn basis_in_degree(&self, d: i32) -> Vec<(u32, Monomial)> {
        let gb = self.gb();
        let mut out = Vec::new();
        for (k, &a) in self.degrees.iter().enumerate() {
            if d < a {
                continue;
            }
            for m in Monomial::all_of_degree(self.ring.nvars(), (d - a) as u32) {
                if gb.is_standard(k as u32, &m) {
                    out.push((k as u32, m));
                }
            }
        }
        out
    }

    pub fn hilbert(&self, d: i32) -> usize {
        self.basis_in_degree(d).len()
    }

    /// Least `s` with `m^s M = 0`, if it exists within the certificate bound.
    pub fn nilpotency_certificate(&self) -> Option<u32> {
        let gb = self.gb();
        let n = self.ring.nvars();
        let mut s = 0;
        for k in 0..self.rank() as u32 {
            if !gb.is_standard(k, &Monomial::one()) {
                continue;
            }
            // Every variable needs a pure-power leading term at this position.
            for i in 0..n {
                if !gb.lead_terms().any(|(p, m)| p == k && m.pure_power_var() == Some(i)) {
                    return None;
                }
            }
            let mut t = 0;
            loop {
                let any = Monomial::all_of_degree(n, t).iter().any(|m| gb.is_standard(k, m));
                if !any {
                    break;
                }
                t += 1;
                if t > LENGTH_BOUND {
                    return None;
                }
            }
            s = s.max(t);
        }
        Some(s)
    }

    /// All standard terms, ordered by degree, then position, then monomial
    /// (descending); `None` for infinite length.
    pub fn standard_basis(&self) -> Option<Vec<(u32, Monomial)>> {
        self.nilpotency_certificate()?;
        let gb = self.gb();
        let n = self.ring.nvars();
        let mut terms: Vec<(i32, u32, Monomial)> = Vec::new();
        for (k, &a) in self.degrees.iter().enumerate() {
            let mut t = 0;
            loop {
                let layer: Vec<Monomial> =
                    Monomial::all_of_degree(n, t).into_iter().filter(|m| gb.is_standard(k as u32, m)).collect();
                if layer.is_empty() {
                    break;
                }
                terms.extend(layer.into_iter().map(|m| (a + t as i32, k as u32, m)));
                t += 1;
            }
        }
        terms.sort_by(|x, y| x.0.cmp(&y.0).then(x.1.cmp(&y.1)).then(y.2.cmp_degrevlex(&x.2)));
        Some(terms.into_iter().map(|(_, k, m)| (k, m)).collect())
    }

    pub fn length(&self) -> Length {
        match self.standard_basis() {
            Some(b) => Length::Finite(b.len()),
            None => Length::Infinite,
        }
    }

    /// Nonzero values of the Hilbert function (finite length only).
    pub fn hilbert_table(&self) -> Option<BTreeMap<i32, usize>> {
        let basis = self.standard_basis()?;
        let mut table = BTreeMap::new();
        for (k, m) in basis {
            *table.entry(self.degrees[k as usize] + m.degree() as i32).or_insert(0) += 1;
        }
        Some(table)
    }

    /// Same module with every generator degree raised by `d`.
    pub fn twist(&self, d: i32) -> GradedModule {
        let degrees = self.degrees.iter().map(|a| a + d).collect();
        GradedModule { ring: self.ring.clone(), degrees, relations: self.relations.clone(), gb: OnceLock::new() }
    }

    pub fn direct_sum(&self, other: &GradedModule) -> GradedModule {
        let off = self.rank() as u32;
        let mut degrees = self.degrees.clone();
        degrees.extend_from_slice(&other.degrees);
        let mut relations = self.relations.clone();
        relations.extend(other.relations.iter().map(|r| r.map_positions(|p| p + off)));
        GradedModule { ring: self.ring.clone(), degrees, relations, gb: OnceLock::new() }
    }

    /// `M / (v_1, ..., v_k)` for homogeneous elements of the ambient free module.
    pub fn quotient_by(&self, extra: &[Vector]) -> Result<GradedModule> {
        let mut rels = self.relations.clone();
        rels.extend(extra.iter().cloned());
        GradedModule::new(self.ring.clone(), self.degrees.clone(), rels)
    }

    fn check_ring(&self, other: &QuotientRing) -> Result<()> {
        if self.ring.same_ring(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{:?} vs {:?}", self.ring, other)))
        }
    }

    /// Prunes unit entries from the presentation and minimizes the relations.
    /// Generators that survive keep their relative order.
    pub fn minimize(&self) -> Minimized {
        let ring = &self.ring;
        let one = ring.field().one();
        let g = self.rank();
        let mut cols: Vec<Vector> = self.relations.clone();
        let mut images: Vec<Vector> = (0..g).map(|k| Vector::unit(k, one.clone())).collect();
        let mut alive = vec![true; g];
        loop {
            let found = cols.iter().enumerate().find_map(|(j, c)| {
                c.terms().iter().find(|t| t.mon.is_one()).map(|t| (j, t.pos as usize, t.coef.clone()))
            });
            let Some((j, p, c)) = found else { break };
            let pivot = cols.swap_remove(j);
            let inv = c.inverse().unwrap();
            let subst = |v: &Vector| -> Vector {
                let f = v.entry(p);
                if f.is_zero() {
                    return v.clone();
                }
                reduce_mod_ideal(ring, &v.sub(&pivot.mul_poly(&f.scale(&inv))))
            };
            for v in cols.iter_mut() {
                *v = subst(v);
            }
            for v in images.iter_mut() {
                *v = subst(v);
            }
            alive[p] = false;
        }
        let mut renumber = vec![u32::MAX; g];
        let mut degrees = Vec::new();
        let mut new_to_old = Vec::new();
        let mut kept = Vec::new();
        for k in 0..g {
            if alive[k] {
                kept.push(k);
                renumber[k] = degrees.len() as u32;
                degrees.push(self.degrees[k]);
                new_to_old.push(Vector::unit(k, one.clone()));
            }
        }
        let relabel = |v: &Vector| v.map_positions(|p| renumber[p as usize]);
        let cols: Vec<Vector> = cols.iter().filter(|c| !c.is_zero()).map(relabel).collect();
        let images = images.iter().map(relabel).collect();
        let rels = minimal_generators(ring, &degrees, &cols);
        let module = GradedModule { ring: ring.clone(), degrees, relations: rels, gb: OnceLock::new() };
        Minimized { module, old_to_new: images, new_to_old, kept }
    }

    /// `M ⊗_R M'` by the block presentation.
    pub fn tensor(&self, other: &GradedModule) -> Result<GradedModule> {
        self.check_ring(&other.ring)?;
        let g2 = other.rank() as u32;
        let mut degrees = Vec::new();
        for a in &self.degrees {
            for b in &other.degrees {
                degrees.push(a + b);
            }
        }
        let mut rels = Vec::new();
        for r in &self.relations {
            for l in 0..g2 {
                rels.push(r.map_positions(|k| k * g2 + l));
            }
        }
        for q in &other.relations {
            for k in 0..self.rank() as u32 {
                rels.push(q.map_positions(|l| k * g2 + l));
            }
        }
        GradedModule::new(self.ring.clone(), degrees, rels)
    }

    /// The submodule `a^s M`, presented on its own generators.
    pub fn scale(&self, a: &Ideal, s: u32) -> Subquotient {
        let power = a.power(s);
        let mut gens = Vec::new();
        for f in power.generators() {
            for k in 0..self.rank() {
                gens.push(Vector::single(k, f));
            }
        }
        Subquotient::new(self.ring.clone(), self.degrees.clone(), gens, self.relations.clone())
    }

    /// `M / a^s M`.
    pub fn quotient_by_scale(&self, a: &Ideal, s: u32) -> GradedModule {
        let power = a.power(s);
        let mut extra = Vec::new();
        for f in power.generators() {
            for k in 0..self.rank() {
                extra.push(Vector::single(k, f));
            }
        }
        self.quotient_by(&extra).expect("homogeneous by construction")
    }

    /// `M / m^s M`, built from monomial relations.
    pub fn truncate(&self, s: u32) -> GradedModule {
        let one = self.ring.field().one();
        let mut extra = Vec::new();
        for m in Monomial::all_of_degree(self.ring.nvars(), s) {
            for k in 0..self.rank() {
                extra.push(Vector::from_terms(vec![VTerm { pos: k as u32, mon: m, coef: one.clone() }]));
            }
        }
        self.quotient_by(&extra).unwrap()
    }

    /// Generators (in the ambient free module, relations included) of the
    /// preimage of `(0 :_M a^s)`.
    fn colon_preimage(&self, gens: &[Polynomial], s: u32) -> Vec<Vector> {
        let mut current = self.relations.clone();
        for _ in 0..s {
            current = preimage_step(&self.ring, &self.degrees, gens, &current);
        }
        current
    }

    /// `(0 :_M a^s)`, presented on its own generators.
    pub fn colon(&self, a: &Ideal, s: u32) -> Subquotient {
        let pre = self.colon_preimage(a.generators(), s);
        Subquotient::new(self.ring.clone(), self.degrees.clone(), pre, self.relations.clone())
    }

    /// `Γ_m(M) = (0 :_M m^j)` together with the least such `j`.
    pub fn gamma_m(&self) -> (Subquotient, u32) {
        let gens: Vec<Polynomial> = (0..self.ring.nvars()).map(|i| self.ring.poly().var(i)).collect();
        let mut current = self.relations.clone();
        let mut j = 0;
        loop {
            let gb = submodule_gb(&self.ring, &self.degrees, &current);
            let next = preimage_step(&self.ring, &self.degrees, &gens, &current);
            if next.iter().all(|v| reduce(&gb, v).is_zero()) {
                break;
            }
            current = next;
            j += 1;
        }
        (Subquotient::new(self.ring.clone(), self.degrees.clone(), current, self.relations.clone()), j)
    }
}

/// `{v ∈ F : g·v ∈ K for every g}` where `K ⊇ I·F` is generated by `k_gens`.
fn preimage_step(ring: &QuotientRing, shifts: &[i32], gens: &[Polynomial], k_gens: &[Vector]) -> Vec<Vector> {
    let r = shifts.len();
    let ng = gens.len();
    if ng == 0 {
        return (0..r).map(|k| Vector::unit(k, ring.field().one())).collect();
    }
    // Target ⊕_g F(deg g); source F.
    let mut tgt = Vec::with_capacity(ng * r);
    for g in gens {
        let dg = g.homogeneous_degree().unwrap() as i32;
        tgt.extend(shifts.iter().map(|a| a - dg));
    }
    let mut cols = Vec::new();
    let mut src = Vec::new();
    for k in 0..r {
        let entries: Vec<Polynomial> = (0..ng * r)
            .map(|idx| if idx % r == k { gens[idx / r].clone() } else { Polynomial::zero() })
            .collect();
        cols.push(Vector::from_entries(&entries));
        src.push(shifts[k]);
    }
    for b in 0..ng {
        for v in k_gens {
            cols.push(v.map_positions(|p| (b * r) as u32 + p));
            src.push(v.degree(shifts).unwrap() - (gens[b].homogeneous_degree().unwrap() as i32));
        }
    }
    let map = FreeMap::new(src, tgt, cols);
    let tb = TaggedBasis::new(ring, &map);
    let mut out: Vec<Vector> = tb
        .syzygies(ring)
        .into_iter()
        .map(|v| Vector::from_terms(v.terms().iter().filter(|t| (t.pos as usize) < r).cloned().collect()))
        .filter(|v| !v.is_zero())
        .collect();
    out.extend(k_gens.iter().cloned());
    minimal_generators(ring, shifts, &out)
}

/// `(K + B)/B` for submodules of a free module, with a minimized presentation
/// and a way to express ambient elements in its generators.
pub struct Subquotient {
    pub module: GradedModule,
    pub shifts: Vec<i32>,
    k_gens: Vec<Vector>,
    tagged: TaggedBasis,
    old_to_new: FreeMap,
    kept: Vec<usize>,
}

impl Subquotient {
    pub fn new(ring: Arc<QuotientRing>, shifts: Vec<i32>, k: Vec<Vector>, b: Vec<Vector>) -> Self {
        let k: Vec<Vector> = k.into_iter().map(|v| reduce_mod_ideal(&ring, &v)).filter(|v| !v.is_zero()).collect();
        let nk = k.len();
        let kdeg: Vec<i32> = k.iter().map(|v| v.degree(&shifts).expect("homogeneous")).collect();
        let mut cols = k.clone();
        let mut src = kdeg.clone();
        for v in &b {
            if v.is_zero() {
                continue;
            }
            src.push(v.degree(&shifts).expect("homogeneous"));
            cols.push(v.clone());
        }
        let map = FreeMap::new(src, shifts.clone(), cols);
        let tagged = TaggedBasis::new(&ring, &map);
        let rels: Vec<Vector> = tagged
            .syzygies(&ring)
            .into_iter()
            .map(|v| Vector::from_terms(v.terms().iter().filter(|t| (t.pos as usize) < nk).cloned().collect()))
            .filter(|v| !v.is_zero())
            .collect();
        let raw = GradedModule::new(ring, kdeg.clone(), rels).expect("syzygies are homogeneous");
        let min = raw.minimize();
        let old_to_new = FreeMap::new(kdeg, min.module.degrees.clone(), min.old_to_new);
        Subquotient { module: min.module, shifts, k_gens: k, tagged, old_to_new, kept: min.kept }
    }

    /// Coordinates of `v ∈ K + B` in the generators of `module`.
    pub fn coordinates(&self, v: &Vector) -> Option<Vector> {
        let ring = self.module.ring();
        let c = self.tagged.lift(ring, v)?;
        let nk = self.k_gens.len();
        let ck = Vector::from_terms(c.terms().iter().filter(|t| (t.pos as usize) < nk).cloned().collect());
        Some(reduce_mod_ideal(ring, &self.old_to_new.apply(&ck)))
    }

    /// Ambient representatives of the generators of `module`.
    pub fn generator_representatives(&self) -> Vec<Vector> {
        self.kept.iter().map(|&j| self.k_gens[j].clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::poly::PolyRing;

    pub(crate) fn ring(vars: &[&str], ideal: &[&str]) -> Arc<QuotientRing> {
        let p = PolyRing::new(FieldSpec::Rationals, vars).unwrap();
        QuotientRing::new(Ideal::parse(p, ideal).unwrap()).unwrap()
    }

    fn cyc(r: &Arc<QuotientRing>, gens: &[&str]) -> GradedModule {
        let ps: Vec<Polynomial> = gens.iter().map(|g| r.poly().parse(g).unwrap()).collect();
        GradedModule::cyclic(r.clone(), &ps).unwrap()
    }

    #[test]
    fn lengths() {
        let r = ring(&["x", "y"], &[]);
        assert_eq!(GradedModule::residue_field(r.clone()).length(), Length::Finite(1));
        assert_eq!(cyc(&r, &["x^2", "y"]).length(), Length::Finite(2));
        let rx = ring(&["x"], &[]);
        assert_eq!(GradedModule::free(rx, vec![0]).length(), Length::Infinite);
    }

    #[test]
    fn tensor_of_cyclics() {
        let r = ring(&["x", "y"], &[]);
        let t = cyc(&r, &["x"]).tensor(&cyc(&r, &["y"])).unwrap();
        assert_eq!(t.length(), Length::Finite(1));
        let m = cyc(&r, &["x^2", "y^3"]);
        let t = GradedModule::free(r.clone(), vec![0]).tensor(&m).unwrap();
        assert_eq!(t.hilbert_table(), m.hilbert_table());
    }

    #[test]
    fn minimize_drops_unit_relations() {
        let r = ring(&["x", "y"], &[]);
        // e0 = x e1 in degrees (1, 0), plus y e1.
        let p = r.poly();
        let m = GradedModule::from_columns(
            r.clone(),
            vec![1, 0],
            &[vec![p.constant(1), p.parse("-x").unwrap()], vec![Polynomial::zero(), p.parse("y").unwrap()]],
        )
        .unwrap();
        let min = m.minimize();
        assert_eq!(min.module.degrees(), &[0]);
        assert_eq!(min.module.relations().len(), 1);
        assert_eq!(min.old_to_new[0], Vector::single(0, &p.parse("x").unwrap()));
        assert_eq!(min.module.length(), Length::Infinite);
        assert_eq!(min.module.hilbert(3), 1);
    }

    #[test]
    fn socle_and_gamma() {
        let r = ring(&["x", "y"], &[]);
        let k = GradedModule::residue_field(r.clone());
        let m = r.maximal_ideal();
        assert_eq!(k.colon(&m, 1).module.length(), Length::Finite(1));
        let rx = ring(&["x"], &[]);
        let (g, j) = GradedModule::free(rx, vec![0]).gamma_m();
        assert!(g.module.is_zero());
        assert_eq!(j, 0);
        // Γ_m(R) for R = k[x,y]/(xy, y^2) is (y), of length 1.
        let q = ring(&["x", "y"], &["x*y", "y^2"]);
        let (g, j) = GradedModule::free(q.clone(), vec![0]).gamma_m();
        assert_eq!(g.module.length(), Length::Finite(1));
        assert_eq!(j, 1);
        assert_eq!(g.module.degrees(), &[1]);
        let y = Vector::single(0, &q.poly().parse("y").unwrap());
        assert!(g.coordinates(&y).is_some());
        assert!(g.coordinates(&Vector::single(0, &q.poly().parse("x").unwrap())).is_none());
    }

    #[test]
    fn scale_and_quotient() {
        let r = ring(&["x", "y"], &[]);
        let m = r.maximal_ideal();
        let q = GradedModule::free(r.clone(), vec![0]).quotient_by_scale(&m, 2);
        assert_eq!(q.length(), Length::Finite(3));
        let s = q.scale(&m, 1);
        assert_eq!(s.module.length(), Length::Finite(2));
        assert_eq!(s.module.rank(), 2);
    }

    #[test]
    fn hilbert_additivity_on_submodule() {
        let r = ring(&["x", "y"], &["x*y", "y^2"]);
        let m = GradedModule::free(r.clone(), vec![0]).truncate(4);
        let sub = m.scale(&Ideal::parse(r.poly().clone(), &["x"]).unwrap(), 1);
        let quot = m.quotient_by_scale(&Ideal::parse(r.poly().clone(), &["x"]).unwrap(), 1);
        for d in 0..6 {
            assert_eq!(m.hilbert(d), sub.module.hilbert(d) + quot.hilbert(d), "degree {d}");
        }
    }
}
