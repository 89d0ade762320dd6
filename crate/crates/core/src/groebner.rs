//! Buchberger's algorithm for submodules of graded free modules `S^r`.
//!
//! Ideals are the rank-one case. Pairs are processed in increasing weighted
//! degree with the Gebauer–Möller criteria; the product criterion is only used
//! for rank one, where it is valid.

use crate::field::Scalar;
use crate::monomial::Monomial;
use crate::vector::{add_scaled, normalize_terms, TermOrder, VTerm};

pub type Row = Vec<VTerm>;

#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub order: TermOrder,
    pub shifts: Vec<i32>,
    elems: Vec<Row>,
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    pos: u32,
    lcm: Monomial,
    degree: i64,
}

fn lead(r: &Row) -> &VTerm {
    &r[0]
}

fn make_monic(mut r: Row) -> Row {
    if let Some(first) = r.first() {
        if !first.coef.is_one() {
            let inv = first.coef.inverse().expect("nonzero lead");
            for t in r.iter_mut() {
                t.coef = &t.coef * &inv;
            }
        }
    }
    r
}

impl GroebnerBasis {
    /// Reduced Gröbner basis of the submodule generated by `gens`. Terms of the
    /// input may be in any order.
    pub fn compute(gens: Vec<Row>, shifts: Vec<i32>, order: TermOrder) -> Self {
        let rank_one = shifts.len() == 1;
        let wdeg = |t: &VTerm| t.mon.degree() as i64 + shifts[t.pos as usize] as i64;

        let mut inputs: Vec<Row> = gens
            .into_iter()
            .map(|g| normalize_terms(g, &order))
            .filter(|g| !g.is_empty())
            .collect();
        inputs.sort_by_key(|g| std::cmp::Reverse(wdeg(lead(g))));

        let mut basis = GroebnerBasis { order, shifts: shifts.clone(), elems: Vec::new() };
        let mut pairs: Vec<Pair> = Vec::new();

        loop {
            let next_input = inputs.last().map(|g| wdeg(lead(g)));
            let next_pair = pairs.iter().map(|p| p.degree).min();
            let degree = match (next_input, next_pair) {
                (None, None) => break,
                (Some(a), None) => a,
                (None, Some(b)) => b,
                (Some(a), Some(b)) => a.min(b),
            };
            let mut batch: Vec<Row> = Vec::new();
            while inputs.last().map(|g| wdeg(lead(g))) == Some(degree) {
                batch.push(inputs.pop().unwrap());
            }
            let (now, later): (Vec<Pair>, Vec<Pair>) = pairs.into_iter().partition(|p| p.degree == degree);
            pairs = later;
            for p in now {
                batch.push(basis.spoly(&p));
            }
            for f in batch {
                let h = basis.reduce_row(f);
                if h.is_empty() {
                    continue;
                }
                let h = make_monic(h);
                basis.update(&mut pairs, h, rank_one);
            }
        }
        basis.interreduce();
        basis
    }

    fn spoly(&self, p: &Pair) -> Row {
        let (f, g) = (&self.elems[p.i], &self.elems[p.j]);
        let mf = lead(f).mon.quotient_of(&p.lcm);
        let mg = lead(g).mon.quotient_of(&p.lcm);
        let one = lead(f).coef.field().one();
        let fm: Row = f.iter().map(|t| VTerm { pos: t.pos, mon: t.mon.mul(&mf), coef: t.coef.clone() }).collect();
        add_scaled(&fm, g, &-&one, &mg, &self.order)
    }

    fn update(&mut self, pairs: &mut Vec<Pair>, h: Row, rank_one: bool) {
        let idx = self.elems.len();
        let ht = lead(&h).clone();
        let wdeg = |pos: u32, m: &Monomial| m.degree() as i64 + self.shifts[pos as usize] as i64;

        let mut cands: Vec<(Pair, bool)> = Vec::new();
        for (i, g) in self.elems.iter().enumerate() {
            let gt = lead(g);
            if gt.pos != ht.pos {
                continue;
            }
            let lcm = gt.mon.lcm(&ht.mon);
            let coprime = rank_one && gt.mon.is_coprime(&ht.mon);
            cands.push((Pair { i, j: idx, pos: ht.pos, lcm, degree: wdeg(ht.pos, &lcm) }, coprime));
        }
        // Chain criterion among the new pairs.
        let mut kept: Vec<(Pair, bool)> = Vec::new();
        while let Some((p, coprime)) = cands.pop() {
            let dominated = cands.iter().chain(kept.iter()).any(|(q, _)| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push((p, coprime));
            }
        }
        // Old pairs made redundant by h.
        pairs.retain(|q| {
            if q.pos != ht.pos || !ht.mon.divides(&q.lcm) {
                return true;
            }
            let li = lead(&self.elems[q.i]).mon.lcm(&ht.mon);
            let lj = lead(&self.elems[q.j]).mon.lcm(&ht.mon);
            li == q.lcm || lj == q.lcm
        });
        pairs.extend(kept.into_iter().filter(|(_, c)| !c).map(|(p, _)| p));
        self.elems.push(h);
    }

    fn find_reducer(&self, t: &VTerm) -> Option<&Row> {
        self.elems.iter().find(|g| {
            let gt = lead(g);
            gt.pos == t.pos && gt.mon.divides(&t.mon)
        })
    }

    /// Full reduction (every term, not only the leading one).
    pub fn reduce_row(&self, f: Row) -> Row {
        let mut rem: Row = Vec::new();
        let mut p = f;
        let mut start = 0usize;
        loop {
            if start >= p.len() {
                break;
            }
            let t = p[start].clone();
            match self.find_reducer(&t) {
                Some(g) => {
                    let gt = lead(g);
                    let m = gt.mon.quotient_of(&t.mon);
                    let c = -&(&t.coef / &gt.coef);
                    let tail = &p[start + 1..];
                    p = add_scaled(tail, &g[1..], &c, &m, &self.order);
                    start = 0;
                }
                None => {
                    rem.push(t);
                    start += 1;
                }
            }
        }
        // `rem` was collected in descending order, remaining terms of `p`
        // were all moved into `rem` one at a time.
        rem
    }

    fn interreduce(&mut self) {
        let mut elems = std::mem::take(&mut self.elems);
        // Drop elements whose leading term is divisible by another's.
        elems.sort_by(|a, b| self.order.cmp_terms(lead(a), lead(b)));
        let mut minimal: Vec<Row> = Vec::new();
        for e in elems {
            let t = lead(&e);
            if !minimal.iter().any(|g| lead(g).pos == t.pos && lead(g).mon.divides(&t.mon)) {
                minimal.push(e);
            }
        }
        let mut out = Vec::with_capacity(minimal.len());
        for k in 0..minimal.len() {
            let others = GroebnerBasis {
                order: self.order,
                shifts: self.shifts.clone(),
                elems: minimal.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, r)| r.clone()).collect(),
            };
            let e = &minimal[k];
            let mut r = vec![e[0].clone()];
            r.extend(others.reduce_row(e[1..].to_vec()));
            out.push(make_monic(r));
        }
        out.sort_by(|a, b| self.order.cmp_terms(lead(b), lead(a)));
        self.elems = out;
    }

    pub fn elements(&self) -> &[Row] {
        &self.elems
    }

    pub fn lead_terms(&self) -> impl Iterator<Item = (u32, Monomial)> + '_ {
        self.elems.iter().map(|r| (r[0].pos, r[0].mon))
    }

    /// Whether `pos·mon` is a standard (non-leading) term.
    pub fn is_standard(&self, pos: u32, mon: &Monomial) -> bool {
        !self.elems.iter().any(|g| g[0].pos == pos && g[0].mon.divides(mon))
    }

    pub fn contains_row(&self, f: Row) -> bool {
        self.reduce_row(normalize_terms(f, &self.order)).is_empty()
    }

    /// Whether every S-pair reduces to zero (used as a certificate in tests).
    pub fn is_groebner(&self) -> bool {
        for i in 0..self.elems.len() {
            for j in i + 1..self.elems.len() {
                let (a, b) = (lead(&self.elems[i]), lead(&self.elems[j]));
                if a.pos != b.pos {
                    continue;
                }
                let lcm = a.mon.lcm(&b.mon);
                let p = Pair { i, j, pos: a.pos, lcm, degree: 0 };
                if !self.reduce_row(self.spoly(&p)).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

/// Leading coefficient helper shared with callers that build rows by hand.
pub fn row_from(terms: Vec<(u32, Monomial, Scalar)>) -> Row {
    terms.into_iter().map(|(pos, mon, coef)| VTerm { pos, mon, coef }).collect()
}
