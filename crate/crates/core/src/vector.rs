//! Elements of graded free modules `S^r` and homogeneous maps between them.

use std::cmp::Ordering;
use std::fmt;

use crate::field::Scalar;
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VTerm {
    pub pos: u32,
    pub mon: Monomial,
    pub coef: Scalar,
}

/// Module term order. Positions below `elim` form a block that dominates every
/// term outside it (elimination); inside a block terms compare by degrevlex on
/// the monomial, then by position with lower positions larger.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TermOrder {
    pub elim: u32,
}

impl TermOrder {
    #[inline]
    pub fn cmp(&self, pa: u32, ma: &Monomial, pb: u32, mb: &Monomial) -> Ordering {
        if self.elim > 0 {
            let ba = pa >= self.elim;
            let bb = pb >= self.elim;
            if ba != bb {
                return if ba { Ordering::Less } else { Ordering::Greater };
            }
        }
        match ma.cmp_degrevlex(mb) {
            Ordering::Equal => pb.cmp(&pa),
            o => o,
        }
    }

    #[inline]
    pub fn cmp_terms(&self, a: &VTerm, b: &VTerm) -> Ordering {
        self.cmp(a.pos, &a.mon, b.pos, &b.mon)
    }
}

/// Sorts descending under `order` and merges duplicate terms.
pub fn normalize_terms(mut terms: Vec<VTerm>, order: &TermOrder) -> Vec<VTerm> {
    terms.sort_by(|a, b| order.cmp_terms(b, a));
    let mut out: Vec<VTerm> = Vec::with_capacity(terms.len());
    for t in terms {
        match out.last_mut() {
            Some(last) if last.pos == t.pos && last.mon == t.mon => last.coef = &last.coef + &t.coef,
            _ => out.push(t),
        }
    }
    out.retain(|t| !t.coef.is_zero());
    out
}

/// `a + c * m * b`, both inputs sorted under `order`.
pub fn add_scaled(a: &[VTerm], b: &[VTerm], c: &Scalar, m: &Monomial, order: &TermOrder) -> Vec<VTerm> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let scaled = |t: &VTerm| VTerm { pos: t.pos, mon: t.mon.mul(m), coef: &t.coef * c };
    while i < a.len() && j < b.len() {
        let bm = b[j].mon.mul(m);
        match order.cmp(a[i].pos, &a[i].mon, b[j].pos, &bm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(scaled(&b[j]));
                j += 1;
            }
            Ordering::Equal => {
                let s = &a[i].coef + &(&b[j].coef * c);
                if !s.is_zero() {
                    out.push(VTerm { pos: a[i].pos, mon: a[i].mon, coef: s });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    while j < b.len() {
        out.push(scaled(&b[j]));
        j += 1;
    }
    out
}

/// An element of a free module in canonical (non-eliminating) term order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Vector {
    terms: Vec<VTerm>,
}

impl Vector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: Vec<VTerm>) -> Self {
        Vector { terms: normalize_terms(terms, &TermOrder::default()) }
    }

    /// Assumes the terms are already canonical.
    pub(crate) fn from_sorted(terms: Vec<VTerm>) -> Self {
        Vector { terms }
    }

    pub fn unit(pos: usize, one: Scalar) -> Self {
        Vector { terms: vec![VTerm { pos: pos as u32, mon: Monomial::one(), coef: one }] }
    }

    pub fn from_entries(entries: &[Polynomial]) -> Self {
        let mut terms = Vec::new();
        for (pos, p) in entries.iter().enumerate() {
            for (m, c) in p.terms() {
                terms.push(VTerm { pos: pos as u32, mon: *m, coef: c.clone() });
            }
        }
        Vector::from_terms(terms)
    }

    pub fn single(pos: usize, p: &Polynomial) -> Self {
        Vector::from_terms(p.terms().iter().map(|(m, c)| VTerm { pos: pos as u32, mon: *m, coef: c.clone() }).collect())
    }

    pub fn terms(&self) -> &[VTerm] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<VTerm> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn entry(&self, pos: usize) -> Polynomial {
        Polynomial::from_terms(
            self.terms.iter().filter(|t| t.pos as usize == pos).map(|t| (t.mon, t.coef.clone())).collect(),
        )
    }

    pub fn entries(&self, rank: usize) -> Vec<Polynomial> {
        let mut buckets: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); rank];
        for t in &self.terms {
            buckets[t.pos as usize].push((t.mon, t.coef.clone()));
        }
        buckets.into_iter().map(Polynomial::from_terms).collect()
    }

    pub fn add(&self, other: &Vector) -> Vector {
        if other.is_zero() {
            return self.clone();
        }
        let one = other.terms[0].coef.field().one();
        Vector { terms: add_scaled(&self.terms, &other.terms, &one, &Monomial::one(), &TermOrder::default()) }
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Vector {
        Vector { terms: self.terms.iter().map(|t| VTerm { pos: t.pos, mon: t.mon, coef: -&t.coef }).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        self.mul_term(c, &Monomial::one())
    }

    pub fn mul_term(&self, c: &Scalar, m: &Monomial) -> Vector {
        if c.is_zero() {
            return Vector::zero();
        }
        Vector {
            terms: self.terms.iter().map(|t| VTerm { pos: t.pos, mon: t.mon.mul(m), coef: &t.coef * c }).collect(),
        }
    }

    pub fn mul_poly(&self, p: &Polynomial) -> Vector {
        let mut acc = Vector::zero();
        for (m, c) in p.terms() {
            acc = acc.add(&self.mul_term(c, m));
        }
        acc
    }

    /// Relabels position `i` to `f(i)`.
    pub fn map_positions(&self, f: impl Fn(u32) -> u32) -> Vector {
        Vector::from_terms(self.terms.iter().map(|t| VTerm { pos: f(t.pos), mon: t.mon, coef: t.coef.clone() }).collect())
    }

    /// Weighted degree `deg(mon) + shift[pos]` if homogeneous.
    pub fn degree(&self, shifts: &[i32]) -> Option<i32> {
        let d = |t: &VTerm| t.mon.degree() as i32 + shifts[t.pos as usize];
        let first = d(self.terms.first()?);
        self.terms.iter().all(|t| d(t) == first).then_some(first)
    }

    pub fn is_homogeneous(&self, shifts: &[i32]) -> bool {
        self.is_zero() || self.degree(shifts).is_some()
    }

    pub fn max_pos(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.pos).max()
    }

    pub fn display(&self, ring: &PolyRing, rank: usize) -> String {
        let entries: Vec<String> = self.entries(rank).iter().map(|p| p.display(ring)).collect();
        format!("[{}]", entries.join(", "))
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|t| format!("{}*{:?}e{}", t.coef, t.mon, t.pos)).collect();
        write!(f, "<{}>", parts.join(" + "))
    }
}

/// A degree-preserving homomorphism `⊕ S(-src_j) → ⊕ S(-tgt_i)` between graded
/// free modules; `cols[j]` is the image of the `j`-th source generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeMap {
    pub src: Vec<i32>,
    pub tgt: Vec<i32>,
    pub cols: Vec<Vector>,
}

impl FreeMap {
    pub fn new(src: Vec<i32>, tgt: Vec<i32>, cols: Vec<Vector>) -> Self {
        debug_assert_eq!(src.len(), cols.len());
        FreeMap { src, tgt, cols }
    }

    pub fn zero(src: Vec<i32>, tgt: Vec<i32>) -> Self {
        let cols = vec![Vector::zero(); src.len()];
        FreeMap { src, tgt, cols }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn nrows(&self) -> usize {
        self.tgt.len()
    }

    /// Every column homogeneous of its declared source degree.
    pub fn is_homogeneous(&self) -> bool {
        self.cols.iter().zip(&self.src).all(|(c, &d)| c.is_zero() || c.degree(&self.tgt) == Some(d))
            && self.cols.iter().all(|c| c.max_pos().map_or(true, |p| (p as usize) < self.tgt.len()))
    }

    /// Image of an element of the source free module.
    pub fn apply(&self, v: &Vector) -> Vector {
        let mut acc = Vector::zero();
        for t in v.terms() {
            acc = acc.add(&self.cols[t.pos as usize].mul_term(&t.coef, &t.mon));
        }
        acc
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &FreeMap) -> FreeMap {
        FreeMap { src: other.src.clone(), tgt: self.tgt.clone(), cols: other.cols.iter().map(|c| self.apply(c)).collect() }
    }

    pub fn entry(&self, row: usize, col: usize) -> Polynomial {
        self.cols[col].entry(row)
    }
}
