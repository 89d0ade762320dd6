//! Hom, Ext and Tor of finitely generated modules, returned as presentations.
//!
//! `Hom(F_i, M')` and `F_i ⊗ M'` are presented as `M'^{r_i}` with shifted
//! generators; homology is the subquotient of cycles modulo boundaries plus
//! the relations of that sum.

use crate::error::{Error, Result};
use crate::module::{GradedModule, Subquotient};
use crate::resolution::{min_resolution, Resolution};
use crate::syzygy::TaggedBasis;
use crate::vector::{FreeMap, VTerm, Vector};

/// `M'^{r}` with generator `(j, k)` at index `j·g' + k`.
#[derive(Debug, Clone)]
pub struct PowerTerm {
    pub shifts: Vec<i32>,
    pub relations: Vec<Vector>,
}

fn power_term(f_degrees: &[i32], mp: &GradedModule, sign: i32) -> PowerTerm {
    let g = mp.rank() as u32;
    let mut shifts = Vec::with_capacity(f_degrees.len() * mp.rank());
    for a in f_degrees {
        for b in mp.degrees() {
            shifts.push(b + sign * a);
        }
    }
    let mut relations = Vec::new();
    for j in 0..f_degrees.len() as u32 {
        for r in mp.relations() {
            relations.push(r.map_positions(|k| j * g + k));
        }
    }
    PowerTerm { shifts, relations }
}

/// `Hom(F, M')`: generator `(j, k)` has degree `b_k - a_j`.
pub fn hom_term(f_degrees: &[i32], mp: &GradedModule) -> PowerTerm {
    power_term(f_degrees, mp, -1)
}

/// `F ⊗ M'`: generator `(j, k)` has degree `a_j + b_k`.
pub fn tensor_term(f_degrees: &[i32], mp: &GradedModule) -> PowerTerm {
    power_term(f_degrees, mp, 1)
}

/// Images of the generators of `Hom(G, M')` under precomposition with
/// `f: F → G`: `(j, k) ↦ Σ_c f_{jc} (c, k)`.
pub fn hom_induced(f: &FreeMap, g_prime: usize) -> Vec<Vector> {
    let gp = g_prime as u32;
    let mut images: Vec<Vec<VTerm>> = vec![Vec::new(); f.tgt.len() * g_prime];
    for (c, col) in f.cols.iter().enumerate() {
        for t in col.terms() {
            for k in 0..gp {
                images[(t.pos * gp + k) as usize].push(VTerm { pos: c as u32 * gp + k, mon: t.mon, coef: t.coef.clone() });
            }
        }
    }
    images.into_iter().map(Vector::from_terms).collect()
}

/// Images of the generators of `F ⊗ M'` under `f ⊗ 1`: `(c, k) ↦ Σ_j f_{jc} (j, k)`.
pub fn tensor_induced(f: &FreeMap, g_prime: usize) -> Vec<Vector> {
    let gp = g_prime as u32;
    let mut images = Vec::with_capacity(f.src.len() * g_prime);
    for col in &f.cols {
        for k in 0..gp {
            images.push(col.map_positions(|j| j * gp + k));
        }
    }
    images
}

/// Generators of `{v : φ(v) ∈ im(tgt_rel)}` in the source free module.
pub fn preimage_of_relations(
    ring: &crate::ring::QuotientRing,
    src_shifts: &[i32],
    images: &[Vector],
    tgt_shifts: &[i32],
    tgt_rel: &[Vector],
) -> Vec<Vector> {
    let n = src_shifts.len();
    let mut cols: Vec<Vector> = images.to_vec();
    let mut src = src_shifts.to_vec();
    for r in tgt_rel {
        src.push(r.degree(tgt_shifts).unwrap());
        cols.push(r.clone());
    }
    let tb = TaggedBasis::new(ring, &FreeMap::new(src, tgt_shifts.to_vec(), cols));
    tb.syzygies(ring)
        .into_iter()
        .map(|v| Vector::from_terms(v.terms().iter().filter(|t| (t.pos as usize) < n).cloned().collect()))
        .filter(|v| !v.is_zero())
        .collect()
}

/// A homology module with the data needed to push elements into it.
pub struct HomologyModule {
    pub sub: Subquotient,
    /// The ambient term (free cover of `M'^{r_i}`) the classes live in.
    pub ambient: PowerTerm,
}

impl HomologyModule {
    pub fn module(&self) -> &GradedModule {
        &self.sub.module
    }
}

/// `Ext^i(M, M')` computed from a given resolution of `M` (needs `F_{i+1}`).
pub fn ext_from_resolution(res: &Resolution, i: usize, mp: &GradedModule) -> HomologyModule {
    let ring = res.ring.clone();
    let g = mp.rank();
    let here = hom_term(&res.degrees[i], mp);
    let next_deg = res.degrees.get(i + 1).cloned().unwrap_or_default();
    let next = hom_term(&next_deg, mp);
    let delta = hom_induced(&res.differential(i + 1), g);
    let z = preimage_of_relations(&ring, &here.shifts, &delta, &next.shifts, &next.relations);
    let mut b = here.relations.clone();
    if i > 0 {
        b.extend(hom_induced(&res.differential(i), g));
    }
    let sub = Subquotient::new(ring, here.shifts.clone(), z, b);
    HomologyModule { sub, ambient: here }
}

/// `Tor_i(M, M')` computed from a given resolution of `M` (needs `F_{i+1}`).
pub fn tor_from_resolution(res: &Resolution, i: usize, mp: &GradedModule) -> HomologyModule {
    let ring = res.ring.clone();
    let g = mp.rank();
    let one = ring.field().one();
    let here = tensor_term(&res.degrees[i], mp);
    let z = if i == 0 {
        (0..here.shifts.len()).map(|k| Vector::unit(k, one.clone())).collect()
    } else {
        let prev = tensor_term(&res.degrees[i - 1], mp);
        let d = tensor_induced(&res.differential(i), g);
        preimage_of_relations(&ring, &here.shifts, &d, &prev.shifts, &prev.relations)
    };
    let mut b = here.relations.clone();
    b.extend(tensor_induced(&res.differential(i + 1), g));
    let sub = Subquotient::new(ring, here.shifts.clone(), z, b);
    HomologyModule { sub, ambient: here }
}

fn same_ring(m: &GradedModule, mp: &GradedModule) -> Result<()> {
    if m.ring().same_ring(mp.ring()) {
        Ok(())
    } else {
        Err(Error::RingMismatch("modules over different rings".into()))
    }
}

pub fn ext_fg(i: usize, m: &GradedModule, mp: &GradedModule) -> Result<GradedModule> {
    same_ring(m, mp)?;
    let res = min_resolution(m, i + 1);
    Ok(ext_from_resolution(&res, i, mp).sub.module)
}

pub fn tor_fg(i: usize, m: &GradedModule, mp: &GradedModule) -> Result<GradedModule> {
    same_ring(m, mp)?;
    let res = min_resolution(m, i + 1);
    Ok(tor_from_resolution(&res, i, mp).sub.module)
}

pub fn hom_fg(m: &GradedModule, mp: &GradedModule) -> Result<GradedModule> {
    ext_fg(0, m, mp)
}

/// `(β_0..β_n, μ^0..μ^n)` of `m`, from a minimal resolution of `k`; the Betti
/// numbers are cross-checked against the ranks of a minimal resolution of `m`.
pub fn betti_bass_numbers(m: &GradedModule, i_max: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    let k = GradedModule::residue_field(m.ring().clone());
    let res_k = min_resolution(&k, i_max + 1);
    let mut betti = Vec::new();
    let mut bass = Vec::new();
    for i in 0..=i_max {
        let t = tor_from_resolution(&res_k, i, m).sub.module;
        betti.push(t.length().finite().ok_or_else(|| Error::Scope("Tor(k, M) without length certificate".into()))?);
        let e = ext_from_resolution(&res_k, i, m).sub.module;
        bass.push(e.length().finite().ok_or_else(|| Error::Scope("Ext(k, M) without length certificate".into()))?);
    }
    let ranks = min_resolution(m, i_max).ranks();
    if ranks[..=i_max] != betti[..] {
        return Err(Error::Malformed(format!("Betti cross-check failed: {ranks:?} vs {betti:?}")));
    }
    Ok((betti, bass))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::module::Length;
    use crate::poly::{PolyRing, Polynomial};
    use crate::ring::{Ideal, QuotientRing};
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
    fn ext_and_tor_over_line() {
        let r = ring(&["x"], &[]);
        let rx = cyc(&r, &["x"]);
        let free = GradedModule::free(r.clone(), vec![0]);
        assert!(ext_fg(0, &rx, &free).unwrap().is_zero());
        assert_eq!(ext_fg(1, &rx, &rx).unwrap().length(), Length::Finite(1));
        assert_eq!(ext_fg(0, &rx, &rx).unwrap().length(), Length::Finite(1));
        assert!(ext_fg(2, &rx, &rx).unwrap().is_zero());
        assert_eq!(tor_fg(1, &rx, &rx).unwrap().length(), Length::Finite(1));
        // Ext^1(R/x, R) = (R/x)(1) sits in degree -1.
        let e = ext_fg(1, &rx, &free).unwrap();
        assert_eq!(e.hilbert_table().unwrap().into_iter().collect::<Vec<_>>(), vec![(-1, 1)]);
    }

    #[test]
    fn hom_from_free_and_tensor_unit() {
        let r = ring(&["x", "y"], &["x*y", "y^2"]);
        let m = cyc(&r, &["x^2"]);
        let free = GradedModule::free(r.clone(), vec![0]);
        let h = hom_fg(&free, &m).unwrap();
        for d in 0..5 {
            assert_eq!(h.hilbert(d), m.hilbert(d));
        }
        assert_eq!(tor_fg(0, &free, &m).unwrap().hilbert_table(), m.hilbert_table());
    }

    #[test]
    fn bass_numbers() {
        let r = ring(&["x"], &[]);
        let free = GradedModule::free(r.clone(), vec![0]);
        let (b, mu) = betti_bass_numbers(&free, 2).unwrap();
        assert_eq!(b, vec![1, 0, 0]);
        assert_eq!(mu, vec![0, 1, 0]);
        let k = GradedModule::residue_field(r);
        let (b, mu) = betti_bass_numbers(&k, 1).unwrap();
        assert_eq!((b[0], mu[0]), (1, 1));
        // Over k[x,y]/(xy, y^2) the socle of R is spanned by y.
        let q = ring(&["x", "y"], &["x*y", "y^2"]);
        let (_, mu) = betti_bass_numbers(&GradedModule::free(q, vec![0]), 0).unwrap();
        assert_eq!(mu, vec![1]);
    }
}
