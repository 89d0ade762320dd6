//! Finite stages of Ext and Tor with artinian arguments.
//!
//! `A = ∪_s (0 :_A m^s)` and each stage `V_s = (0 :_A m^s)` has finite length,
//! so `Ext^i(V_s, N)` is computable. Transition maps are induced by the
//! inclusions `V_s ↪ V_{s+1}` and stored as matrices between standard bases.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finite::FiniteLengthModule;
use crate::homology::{ext_from_resolution, hom_term, hom_induced, HomologyModule};
use crate::linalg::Matrix;
use crate::matlis::{dualize, socle_stage, ArtinianModule, Dual};
use crate::module::GradedModule;
use crate::resolution::{lift_chain_map, min_resolution, Resolution};
use crate::vector::{FreeMap, Vector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    /// Maps `W_s → W_{s+1}`.
    Direct,
    /// Maps `W_{s+1} → W_s`.
    Inverse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StageOp {
    /// `Ext^i(A, N')` as the inverse system `Ext^i((0 :_A m^s), N')`.
    ExtArtinianToFg,
    /// `Tor_i(A, A')` as the direct system `D(Ext^i((0 :_{A'} m^s), N_A))`.
    TorArtinianPair,
}

#[derive(Clone, Debug)]
pub enum StageTarget {
    Noetherian(GradedModule),
    Artinian(ArtinianModule),
}

/// All transitions from stage `from_stage` up to the last computed stage are
/// bijective; the limit is then read off as that stage.
#[derive(Clone, Debug)]
pub struct LimitCertificate {
    pub from_stage: u32,
    pub module: FiniteLengthModule,
}

#[derive(Clone, Debug)]
pub struct StageSequence {
    pub op: StageOp,
    pub i: usize,
    pub direction: Direction,
    /// `stages[k]` is `W_{k+1}`.
    pub stages: Vec<FiniteLengthModule>,
    /// `transitions[k]` relates `W_{k+1}` and `W_{k+2}` in the stored direction.
    pub transitions: Vec<Matrix>,
    pub detected_limit: Option<LimitCertificate>,
}

impl StageSequence {
    pub fn lengths(&self) -> Vec<usize> {
        self.stages.iter().map(|w| w.dim()).collect()
    }

    pub fn stage(&self, s: u32) -> Option<&FiniteLengthModule> {
        self.stages.get((s as usize).checked_sub(1)?)
    }

    pub fn transitions_injective(&self) -> bool {
        self.transitions.iter().all(|t| t.rank() == t.cols())
    }

    pub fn transitions_surjective(&self) -> bool {
        self.transitions.iter().all(|t| t.rank() == t.rows())
    }

    /// Each transition commutes with multiplication by every variable.
    pub fn transitions_are_module_maps(&self) -> bool {
        self.transitions.iter().enumerate().all(|(k, t)| {
            let (src, tgt) = match self.direction {
                Direction::Direct => (&self.stages[k], &self.stages[k + 1]),
                Direction::Inverse => (&self.stages[k + 1], &self.stages[k]),
            };
            (0..src.ops().len()).all(|v| t.mul(src.op(v)) == tgt.op(v).mul(t))
        })
    }
}

/// The inclusion `V_s ↪ V_{s+1}` dual to `N/m^{s+1}N → N/m^s N`, in standard
/// coordinates.
struct Tower {
    stages: Vec<Dual>,
    inclusions: Vec<Matrix>,
}

fn socle_tower(a: &ArtinianModule, s_max: u32) -> Tower {
    let stages: Vec<Dual> = (1..=s_max).into_par_iter().map(|s| socle_stage(a, s)).collect();
    let quotients: Vec<FiniteLengthModule> = (1..=s_max)
        .map(|s| FiniteLengthModule::from_module(a.dual_of.truncate(s)).expect("truncation has finite length"))
        .collect();
    let field = a.dual_of.ring().field();
    let mut inclusions = Vec::new();
    for s in 0..quotients.len().saturating_sub(1) {
        let (small, big) = (&quotients[s], &quotients[s + 1]);
        let mut p = Matrix::zeros(field, small.dim(), big.dim());
        for c in 0..big.dim() {
            let e = big.element(&unit(field, big.dim(), c));
            for (r, x) in small.coords(&e).into_iter().enumerate() {
                if !x.is_zero() {
                    p.set(r, c, x);
                }
            }
        }
        let c_small = &stages[s].to_functional;
        let c_big_inv = stages[s + 1].to_functional.inverse().expect("basis change is invertible");
        inclusions.push(c_big_inv.mul(&p.transpose()).mul(c_small));
    }
    Tower { stages, inclusions }
}

fn unit(field: crate::field::FieldSpec, n: usize, j: usize) -> Vec<crate::field::Scalar> {
    let mut w = vec![field.zero(); n];
    w[j] = field.one();
    w
}

struct ExtStage {
    res: Resolution,
    ext: HomologyModule,
    module: FiniteLengthModule,
}

fn ext_stage(v: &FiniteLengthModule, i: usize, target: &GradedModule) -> Result<ExtStage> {
    let res = min_resolution(v.module(), i + 1);
    let ext = ext_from_resolution(&res, i, target);
    let module = FiniteLengthModule::from_module(ext.sub.module.clone())?;
    Ok(ExtStage { res, ext, module })
}

/// Matrix of `Ext^i(V', M) → Ext^i(V, M)` induced by `f: V → V'`, where `f`
/// is given on standard coordinates.
fn ext_induced(
    i: usize,
    v: &FiniteLengthModule,
    vp: &FiniteLengthModule,
    f: &Matrix,
    src: &ExtStage,
    tgt: &ExtStage,
    m: &GradedModule,
) -> Matrix {
    let field = v.field();
    let one = field.one();
    // f on the generators of F_0 for V, landing in F_0 for V'.
    let to_f0 = FreeMap::new(vp.module().degrees().to_vec(), src.res.degrees[0].clone(), src.res.input_to_f0.clone());
    let cols: Vec<Vector> = tgt
        .res
        .kept
        .iter()
        .map(|&g| {
            let u = v.coords(&Vector::unit(g, one.clone()));
            to_f0.apply(&vp.element(&f.mul_vec(&u)))
        })
        .collect();
    let f0 = FreeMap::new(tgt.res.degrees[0].clone(), src.res.degrees[0].clone(), cols);
    let chain = lift_chain_map(&tgt.res, &src.res, f0, i);
    let fi = chain.get(i).cloned().unwrap_or_else(|| {
        FreeMap::zero(tgt.res.degrees.get(i).cloned().unwrap_or_default(), src.res.degrees.get(i).cloned().unwrap_or_default())
    });
    let phi = FreeMap::new(
        hom_term(src.res.degrees.get(i).map_or(&[][..], |d| d), m).shifts,
        hom_term(tgt.res.degrees.get(i).map_or(&[][..], |d| d), m).shifts,
        hom_induced(&fi, m.rank()),
    );
    let images: Vec<Vector> = src
        .ext
        .sub
        .generator_representatives()
        .iter()
        .map(|r| tgt.ext.sub.coordinates(&phi.apply(r)).expect("cycles map to cycles"))
        .collect();
    let mut out = Matrix::zeros(field, tgt.module.dim(), src.module.dim());
    for (c, (g, mon)) in src.module.basis().iter().enumerate() {
        let e = images[*g as usize].mul_term(&one, mon);
        for (r, x) in tgt.module.coords(&e).into_iter().enumerate() {
            if !x.is_zero() {
                out.set(r, c, x);
            }
        }
    }
    out
}

/// Stages `s = 1..=s_max` of `Ext^i(A, N')` or `Tor_i(A, A')`.
pub fn hard_direction_stages(i: usize, a: &ArtinianModule, target: &StageTarget, op: StageOp, s_max: u32) -> Result<StageSequence> {
    if s_max < 1 {
        return Err(Error::InvalidArgument("s_max must be at least 1".into()));
    }
    let (tower_of, m) = match (op, target) {
        (StageOp::ExtArtinianToFg, StageTarget::Noetherian(np)) => (a, np.clone()),
        (StageOp::TorArtinianPair, StageTarget::Artinian(ap)) => (ap, a.dual_of.clone()),
        _ => return Err(Error::InvalidArgument("stage operation does not match target kind".into())),
    };
    if !tower_of.dual_of.ring().same_ring(m.ring()) {
        return Err(Error::RingMismatch("modules over different rings".into()));
    }
    let tower = socle_tower(tower_of, s_max);
    // Stages in true degrees so that the inclusions have degree 0.
    let vs: Vec<FiniteLengthModule> = tower.stages.iter().map(Dual::unshifted).collect();
    let exts: Vec<ExtStage> = vs.par_iter().map(|v| ext_stage(v, i, &m)).collect::<Result<_>>()?;
    let maps: Vec<Matrix> = (0..tower.inclusions.len())
        .into_par_iter()
        .map(|s| {
            let (v, vp) = (&vs[s], &vs[s + 1]);
            ext_induced(i, v, vp, &tower.inclusions[s], &exts[s + 1], &exts[s], &m)
        })
        .collect();
    let (direction, stages, transitions) = match op {
        StageOp::ExtArtinianToFg => (Direction::Inverse, exts.into_iter().map(|e| e.module).collect::<Vec<_>>(), maps),
        StageOp::TorArtinianPair => {
            let duals: Vec<Dual> = exts.par_iter().map(|e| dualize(&e.module)).collect();
            let transitions = maps
                .iter()
                .enumerate()
                .map(|(s, e)| {
                    let inv = duals[s + 1].to_functional.inverse().expect("basis change is invertible");
                    inv.mul(&e.transpose()).mul(&duals[s].to_functional)
                })
                .collect();
            (Direction::Direct, duals.into_iter().map(|d| d.module).collect(), transitions)
        }
    };
    let mut from = transitions.len();
    while from > 0 && bijective(&transitions[from - 1]) {
        from -= 1;
    }
    let detected_limit = (from < transitions.len())
        .then(|| LimitCertificate { from_stage: from as u32 + 1, module: stages[from].clone() });
    Ok(StageSequence { op, i, direction, stages, transitions, detected_limit })
}

fn bijective(t: &Matrix) -> bool {
    t.rows() == t.cols() && t.rank() == t.rows()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::matlis::{artinian_dual, tensor_with_artinian, Partner};
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
    fn tor_one_of_e_with_itself() {
        let r = ring(&["x"], &[]);
        let e = artinian_dual(GradedModule::free(r.clone(), vec![0]));
        let seq = hard_direction_stages(1, &e, &StageTarget::Artinian(e.clone()), StageOp::TorArtinianPair, 4).unwrap();
        assert_eq!(seq.lengths(), vec![1, 2, 3, 4]);
        for w in &seq.stages {
            assert_eq!(w.module().rank(), 1);
        }
        assert!(seq.transitions_injective());
        assert!(!seq.transitions_surjective());
        assert!(seq.transitions_are_module_maps());
        assert!(seq.detected_limit.is_none());
        let t0 = hard_direction_stages(0, &e, &StageTarget::Artinian(e.clone()), StageOp::TorArtinianPair, 3).unwrap();
        assert_eq!(t0.lengths(), vec![0, 0, 0]);
    }

    #[test]
    fn ext_one_into_residue_class() {
        let r = ring(&["x"], &[]);
        let e = artinian_dual(GradedModule::free(r.clone(), vec![0]));
        let seq = hard_direction_stages(1, &e, &StageTarget::Noetherian(cyc(&r, &["x"])), StageOp::ExtArtinianToFg, 4).unwrap();
        assert_eq!(seq.lengths(), vec![1, 1, 1, 1]);
        let lim = seq.detected_limit.as_ref().unwrap();
        assert_eq!((lim.from_stage, lim.module.dim()), (1, 1));
        assert!(seq.transitions_are_module_maps());
    }

    #[test]
    fn tor_zero_matches_tensor() {
        let q = ring(&["x", "y"], &["x*y", "y^2"]);
        let e = artinian_dual(GradedModule::free(q.clone(), vec![0]));
        let dk = artinian_dual(GradedModule::residue_field(q.clone()));
        let seq = hard_direction_stages(0, &e, &StageTarget::Artinian(dk.clone()), StageOp::TorArtinianPair, 3).unwrap();
        let t = tensor_with_artinian(&e, &Partner::Artinian(dk)).unwrap();
        let lim = seq.detected_limit.as_ref().unwrap();
        assert_eq!((lim.module.dim(), t.tensor.dim()), (1, 1));
        // For E with itself the socle of R/m^s keeps moving, so no stage is stable.
        let seq = hard_direction_stages(0, &e, &StageTarget::Artinian(e.clone()), StageOp::TorArtinianPair, 3).unwrap();
        assert_eq!(seq.lengths(), vec![1, 2, 2]);
        assert!(seq.detected_limit.is_none());
        assert!(seq.transitions_are_module_maps());
    }

    #[test]
    fn rejects_zero_stages() {
        let r = ring(&["x"], &[]);
        let e = artinian_dual(GradedModule::free(r, vec![0]));
        assert!(hard_direction_stages(0, &e, &StageTarget::Artinian(e.clone()), StageOp::TorArtinianPair, 0).is_err());
    }
}
