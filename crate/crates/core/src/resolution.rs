//! Minimal graded free resolutions and comparison maps between them.

use std::sync::Arc;

use crate::module::GradedModule;
use crate::ring::QuotientRing;
use crate::syzygy::{syzygy_map, TaggedBasis};
use crate::vector::{FreeMap, Vector};

#[derive(Debug, Clone)]
pub struct Resolution {
    pub ring: Arc<QuotientRing>,
    /// Degree shifts of `F_0, F_1, ...`.
    pub degrees: Vec<Vec<i32>>,
    /// `maps[i] = d_{i+1}: F_{i+1} → F_i`.
    pub maps: Vec<FreeMap>,
    pub minimal: bool,
    /// Images of the input module's generators in `F_0`.
    pub input_to_f0: Vec<Vector>,
    /// Input generators that became the basis of `F_0`.
    pub kept: Vec<usize>,
}

/// A minimal resolution of `m` through homological degree `n` (so `F_0..F_n`
/// and the maps `d_1..d_n`).
pub fn min_resolution(m: &GradedModule, n: usize) -> Resolution {
    let ring = m.ring().clone();
    let min = m.minimize();
    let mut degrees = vec![min.module.degrees().to_vec()];
    let mut maps = Vec::new();
    if n >= 1 {
        let mut d = min.module.presentation();
        loop {
            degrees.push(d.src.clone());
            maps.push(d.clone());
            if maps.len() == n {
                break;
            }
            d = syzygy_map(&ring, &d);
        }
    }
    Resolution { ring, degrees, maps, minimal: true, input_to_f0: min.old_to_new, kept: min.kept }
}

impl Resolution {
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn rank(&self, i: usize) -> usize {
        self.degrees.get(i).map_or(0, |d| d.len())
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.len()).collect()
    }

    /// `d_i` as a map `F_i → F_{i-1}` (`i ≥ 1`); zero past the computed range.
    pub fn differential(&self, i: usize) -> FreeMap {
        match self.maps.get(i - 1) {
            Some(d) => d.clone(),
            None => FreeMap::zero(self.degrees.get(i).cloned().unwrap_or_default(), self.degrees[i - 1].clone()),
        }
    }

    /// `d_i ∘ d_{i+1} = 0` modulo the defining ideal.
    pub fn is_complex(&self) -> bool {
        self.maps.windows(2).all(|w| {
            w[0].compose(&w[1]).cols.iter().all(|c| crate::syzygy::reduce_mod_ideal(&self.ring, c).is_zero())
        })
    }

    /// Every differential entry lies in `m` (no nonzero constants).
    pub fn entries_in_maximal_ideal(&self) -> bool {
        self.maps.iter().all(|d| d.cols.iter().all(|c| c.terms().iter().all(|t| !t.mon.is_one())))
    }
}

/// Lifts `f0: F_0 → G_0` (covering a module map) to `f_i: F_i → G_i` for
/// `i ≤ n`, so that `d^G_i f_i = f_{i-1} d^F_i`.
pub fn lift_chain_map(f: &Resolution, g: &Resolution, f0: FreeMap, n: usize) -> Vec<FreeMap> {
    let ring = &f.ring;
    let mut out = vec![f0];
    for i in 1..=n.min(f.len()) {
        let prev = &out[i - 1];
        let df = f.differential(i);
        let target = prev.compose(&df);
        let cols: Vec<Vector> = if g.len() >= i {
            let tb = TaggedBasis::new(ring, &g.maps[i - 1]);
            target
                .cols
                .iter()
                .map(|c| tb.lift(ring, c).expect("chain map lifts along an exact complex"))
                .collect()
        } else {
            vec![Vector::zero(); df.src.len()]
        };
        out.push(FreeMap::new(df.src.clone(), g.degrees.get(i).cloned().unwrap_or_default(), cols));
    }
    out
}
