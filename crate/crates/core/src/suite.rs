//! Seeded random instances and the property checks evaluated on them.
//!
//! Every case derives its own seed from the run seed, builds a ring and a
//! batch of modules, and runs each registered check. Records are sorted by
//! seed and check id, so a run is reproducible byte for byte.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::{Arc, OnceLock};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::finite::{ext_dims, ext_dims_of, tor_dims, tor_dims_of, FiniteLengthModule};
use crate::homology::{ext_fg, hom_fg};
use crate::invariants::{
    ass_fg, att_artinian, default_bound, depth, depth_formulas, vanishing_predicates, width, Bounded, PrimeIdeal, Report,
    Verdict,
};
use crate::json::{module_over, module_to_json, ring_from_json, ring_to_json};
use crate::matlis::{
    artinian_dual, dualize, dualize_with, ext_artinian_pair, hom_artinian_to_fg_with, mixed_ext_tor, socle_stage_with,
    stabilization_exponent_with, tensor_with_artinian_with, top_quotient, ArtinianModule, Knobs, MixedOp, Mutation,
    Partner,
};
use crate::module::{GradedModule, Length};
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};
use crate::resolution::min_resolution;
use crate::ring::{Ideal, QuotientRing};
use crate::stages::{hard_direction_stages, StageOp, StageTarget};
use crate::vector::Vector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdealKind {
    Zero,
    Monomial,
    Binomial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingProfile {
    /// Fixed variable count, or `None` to draw from 1..=3.
    pub variables: Option<usize>,
    pub kind: IdealKind,
    pub max_degree: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleProfile {
    /// Exponent cap for pure powers in finite-length modules.
    pub max_power: u16,
    pub max_relation_degree: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub seed: u64,
    pub field: FieldSpec,
    pub ring: RingProfile,
    pub modules: ModuleProfile,
}

impl InstanceSpec {
    /// Default profile for case `case` of a run: three in five are monomial.
    pub fn for_case(seed: u64, case: usize, field: FieldSpec) -> Self {
        let kind = if case % 5 < 3 { IdealKind::Monomial } else { IdealKind::Binomial };
        InstanceSpec {
            seed: case_seed(seed, case),
            field,
            ring: RingProfile { variables: None, kind, max_degree: 3 },
            modules: ModuleProfile { max_power: 3, max_relation_degree: 2 },
        }
    }
}

/// SplitMix64 finalizer applied to the run seed and case index.
pub fn case_seed(seed: u64, case: usize) -> u64 {
    let mut z = seed ^ (case as u64).wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// A ring with a batch of modules. `a` and `a2` are witnesses of the
/// artinian modules `A = D(a)` and `A' = D(a2)`; `v`, `v2`, `l` have finite
/// length.
#[derive(Debug, Clone)]
pub struct Instance {
    pub spec: InstanceSpec,
    pub ring: Arc<QuotientRing>,
    pub ideal: Ideal,
    pub a: GradedModule,
    pub a2: GradedModule,
    pub n: GradedModule,
    pub n2: GradedModule,
    pub v: GradedModule,
    pub v2: GradedModule,
    pub l: GradedModule,
}

const NAMES: [&str; 3] = ["x", "y", "z"];

fn mono_poly(field: FieldSpec, m: Monomial) -> Polynomial {
    Polynomial::term(field.one(), m)
}

fn random_monomial(rng: &mut ChaCha8Rng, nv: usize, d: u32) -> Monomial {
    let mut e = vec![0u16; nv];
    for _ in 0..d {
        e[rng.gen_range(0..nv)] += 1;
    }
    Monomial::from_exponents(&e)
}

fn nonzero_coef(rng: &mut ChaCha8Rng, field: FieldSpec) -> Scalar {
    loop {
        let c = field.from_i64(rng.gen_range(1..=7) * if rng.gen_bool(0.5) { 1 } else { -1 });
        if !c.is_zero() {
            return c;
        }
    }
}

/// `m1 + c m2` with distinct monomials of degree `d`, if the ring allows.
fn random_binomial(rng: &mut ChaCha8Rng, field: FieldSpec, nv: usize, d: u32) -> Option<Polynomial> {
    if nv < 2 {
        return None;
    }
    let m1 = random_monomial(rng, nv, d);
    let mut m2 = random_monomial(rng, nv, d);
    for _ in 0..8 {
        if m2 != m1 {
            break;
        }
        m2 = random_monomial(rng, nv, d);
    }
    if m1 == m2 {
        return None;
    }
    let c = nonzero_coef(rng, field);
    Some(Polynomial::from_terms(vec![(m1, field.one()), (m2, c)]))
}

fn gen_ring(rng: &mut ChaCha8Rng, spec: &InstanceSpec) -> Result<Arc<QuotientRing>> {
    let nv = spec.ring.variables.unwrap_or_else(|| *[1usize, 2, 2, 3].choose(rng).unwrap()).clamp(1, 3);
    let poly = PolyRing::new(spec.field, &NAMES[..nv])?;
    let top = spec.ring.max_degree.max(2);
    let mut gens = Vec::new();
    match spec.ring.kind {
        IdealKind::Zero => {}
        IdealKind::Monomial => {
            for _ in 0..rng.gen_range(0..=2) {
                let d = rng.gen_range(2..=top);
                gens.push(mono_poly(spec.field, random_monomial(rng, nv, d)));
            }
        }
        IdealKind::Binomial => {
            let d = rng.gen_range(2..=top);
            match random_binomial(rng, spec.field, nv, d) {
                Some(b) => gens.push(b),
                None => gens.push(mono_poly(spec.field, Monomial::var_power(0, d as u16))),
            }
            if rng.gen_bool(0.3) {
                gens.push(mono_poly(spec.field, random_monomial(rng, nv, top)));
            }
        }
    }
    QuotientRing::new(Ideal::new(poly, gens)?)
}

fn cyclic_on(ring: &Arc<QuotientRing>, gens: Vec<Polynomial>) -> Result<GradedModule> {
    GradedModule::cyclic(ring.clone(), &gens)
}

/// A finitely generated module; binomial relations only in binomial profiles.
fn gen_fg(rng: &mut ChaCha8Rng, ring: &Arc<QuotientRing>, spec: &InstanceSpec) -> Result<GradedModule> {
    let nv = ring.nvars();
    let f = spec.field;
    let binomial = spec.ring.kind == IdealKind::Binomial;
    let dmax = spec.modules.max_relation_degree.max(1);
    let choice = rng.gen_range(0..if binomial { 9 } else { 8 });
    match choice {
        5 | 6 => gen_finite(rng, ring, spec),
        7 => Ok(GradedModule::free(ring.clone(), vec![0]).direct_sum(&gen_finite(rng, ring, spec)?)),
        0 => Ok(GradedModule::free(ring.clone(), vec![0])),
        1 => {
            let d = rng.gen_range(1..=dmax);
            cyclic_on(ring, vec![mono_poly(f, random_monomial(rng, nv, d))])
        }
        2 => {
            let g1 = mono_poly(f, random_monomial(rng, nv, 1));
            let g2 = mono_poly(f, random_monomial(rng, nv, 2));
            cyclic_on(ring, vec![g1, g2])
        }
        3 => Ok(GradedModule::residue_field(ring.clone())),
        4 => {
            let (d1, d2) = (rng.gen_range(1..=dmax), rng.gen_range(1..=dmax));
            let a = cyclic_on(ring, vec![mono_poly(f, random_monomial(rng, nv, d1))])?;
            let b = cyclic_on(ring, vec![mono_poly(f, random_monomial(rng, nv, d2))])?;
            Ok(a.direct_sum(&b.twist(1)))
        }
        _ => match random_binomial(rng, f, nv, 2) {
            Some(b) => cyclic_on(ring, vec![b]),
            None => cyclic_on(ring, vec![mono_poly(f, Monomial::var(0))]),
        },
    }
}

fn pure_powers(rng: &mut ChaCha8Rng, field: FieldSpec, nv: usize, cap: u16) -> Vec<Polynomial> {
    (0..nv).map(|i| mono_poly(field, Monomial::var_power(i, rng.gen_range(1..=cap)))).collect()
}

/// A finite-length module: pure powers of every variable kill each generator.
fn gen_finite(rng: &mut ChaCha8Rng, ring: &Arc<QuotientRing>, spec: &InstanceSpec) -> Result<GradedModule> {
    let nv = ring.nvars();
    let f = spec.field;
    let cap = if nv == 3 { spec.modules.max_power.min(2) } else { spec.modules.max_power }.max(1);
    match rng.gen_range(0..6) {
        0 | 4 => cyclic_on(ring, pure_powers(rng, f, nv, cap)),
        1 => {
            let mut gens = pure_powers(rng, f, nv, cap);
            gens.push(mono_poly(f, random_monomial(rng, nv, 2)));
            if spec.ring.kind == IdealKind::Binomial {
                if let Some(b) = random_binomial(rng, f, nv, 2) {
                    gens.push(b);
                }
            }
            cyclic_on(ring, gens)
        }
        2 => Ok(GradedModule::residue_field(ring.clone())),
        _ => {
            let d1 = rng.gen_range(0..=1);
            let mut rels: Vec<Vector> = Vec::new();
            for p in pure_powers(rng, f, nv, cap) {
                rels.push(Vector::single(0, &p));
            }
            for p in pure_powers(rng, f, nv, cap) {
                rels.push(Vector::single(1, &p));
            }
            let top = d1 + rng.gen_range(1..=2);
            let m1 = mono_poly(f, random_monomial(rng, nv, top as u32));
            let m2 = mono_poly(f, random_monomial(rng, nv, (top - d1) as u32)).scale(&nonzero_coef(rng, f));
            rels.push(Vector::from_entries(&[m1, m2]));
            GradedModule::new(ring.clone(), vec![0, d1], rels)
        }
    }
}

/// `p^e` for a random nonempty set `p` of variables.
fn gen_ideal(rng: &mut ChaCha8Rng, ring: &Arc<QuotientRing>) -> Result<Ideal> {
    let nv = ring.nvars();
    let mut vars: Vec<usize> = (0..nv).filter(|_| rng.gen_bool(0.6)).collect();
    if vars.is_empty() {
        vars.push(rng.gen_range(0..nv));
    }
    let e = rng.gen_range(1..=2);
    let gens = Monomial::all_of_degree(nv, e)
        .into_iter()
        .filter(|m| m.support().all(|i| vars.contains(&i)))
        .map(|m| mono_poly(ring.field(), m))
        .collect();
    Ideal::new(ring.poly().clone(), gens)
}

impl Instance {
    pub fn generate(spec: &InstanceSpec) -> Result<Instance> {
        let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
        let ring = gen_ring(&mut rng, spec)?;
        let ideal = gen_ideal(&mut rng, &ring)?;
        let a = gen_fg(&mut rng, &ring, spec)?;
        let a2 = gen_fg(&mut rng, &ring, spec)?;
        let mut n = gen_fg(&mut rng, &ring, spec)?;
        let n2 = gen_fg(&mut rng, &ring, spec)?;
        let v = gen_finite(&mut rng, &ring, spec)?;
        let v2 = gen_finite(&mut rng, &ring, spec)?;
        let l = gen_finite(&mut rng, &ring, spec)?;
        // Keep one module of infinite length when the ring has positive dimension.
        let infinite = |m: &GradedModule| m.length() == Length::Infinite;
        let ring_infinite = GradedModule::free(ring.clone(), vec![0]).length() == Length::Infinite;
        if ring_infinite && ![&a, &a2, &n, &n2].into_iter().any(infinite) {
            n = GradedModule::free(ring.clone(), vec![0]).direct_sum(&gen_finite(&mut rng, &ring, spec)?);
        }
        Ok(Instance { spec: spec.clone(), ring, ideal, a, a2, n, n2, v, v2, l })
    }

    pub fn modules(&self) -> [(&'static str, &'static str, &GradedModule); 7] {
        [
            ("A", "artinian-witness", &self.a),
            ("A'", "artinian-witness", &self.a2),
            ("N", "finitely-generated", &self.n),
            ("N'", "finitely-generated", &self.n2),
            ("V", "finite-length", &self.v),
            ("V'", "finite-length", &self.v2),
            ("L", "finite-length", &self.l),
        ]
    }

    pub fn art_a(&self) -> ArtinianModule {
        artinian_dual(self.a.clone())
    }

    pub fn art_a2(&self) -> ArtinianModule {
        artinian_dual(self.a2.clone())
    }

    pub fn to_json(&self) -> Value {
        let p = self.ring.poly();
        let modules: serde_json::Map<String, Value> = self
            .modules()
            .iter()
            .map(|(name, class, m)| {
                let mut v = module_to_json(m);
                v.as_object_mut().unwrap().remove("ring");
                v["class"] = json!(class);
                (name.to_string(), v)
            })
            .collect();
        json!({
            "spec": self.spec,
            "ring": ring_to_json(&self.ring),
            "ideal": self.ideal.generators().iter().map(|g| g.display(p)).collect::<Vec<_>>(),
            "modules": modules,
        })
    }

    pub fn from_json(v: &Value) -> Result<Instance> {
        let spec: InstanceSpec =
            serde_json::from_value(v["spec"].clone()).map_err(|e| Error::Malformed(format!("instance spec: {e}")))?;
        let ring = ring_from_json(&v["ring"])?;
        let ideal = Ideal::new(
            ring.poly().clone(),
            v["ideal"]
                .as_array()
                .ok_or_else(|| Error::Malformed("expected ideal array".into()))?
                .iter()
                .map(|g| ring.poly().parse(g.as_str().unwrap_or("")))
                .collect::<Result<_>>()?,
        )?;
        let get = |name: &str| module_over(&ring, &v["modules"][name]);
        Ok(Instance {
            spec,
            ideal,
            a: get("A")?,
            a2: get("A'")?,
            n: get("N")?,
            n2: get("N'")?,
            v: get("V")?,
            v2: get("V'")?,
            l: get("L")?,
            ring,
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub seed: u64,
    pub cases: usize,
    pub field: FieldSpec,
    pub mutation: Knobs,
    /// Stages computed per hard-direction sequence (capped at 5).
    pub s_max: u32,
    pub i_max: usize,
    /// Restrict to these check ids; empty runs all.
    pub checks: Vec<String>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            cases: 100,
            field: FieldSpec::PrimeField { characteristic: 32003 },
            mutation: None,
            s_max: 3,
            i_max: 3,
            checks: Vec::new(),
        }
    }
}

/// Tight/strict split for the hom length bound.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub tight: usize,
    pub strict: usize,
    pub degenerate: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Bound {
    Tight,
    Strict,
    Degenerate,
}

struct Outcome {
    verdict: Verdict,
    detail: Value,
    bound: Option<Bound>,
}

impl Outcome {
    fn check(ok: bool, detail: Value) -> Self {
        Outcome { verdict: if ok { Verdict::Pass } else { Verdict::Fail }, detail, bound: None }
    }

    fn scope(why: &str) -> Self {
        Outcome { verdict: Verdict::Scope, detail: json!({ "reason": why }), bound: None }
    }

    fn from_report(r: &Report, tag: &str) -> Self {
        let clauses: Vec<_> = r.clauses.iter().filter(|c| c.tag == tag).collect();
        if clauses.is_empty() {
            return Outcome::scope("no applicable clause");
        }
        let verdict = if clauses.iter().any(|c| c.verdict == Verdict::Fail) {
            Verdict::Fail
        } else if clauses.iter().all(|c| c.verdict == Verdict::Scope) {
            Verdict::Scope
        } else {
            Verdict::Pass
        };
        Outcome { verdict, detail: json!(clauses), bound: None }
    }
}

struct Ctx<'a> {
    inst: &'a Instance,
    knobs: Knobs,
    s_max: u32,
    i_max: usize,
    vanish_artinian: OnceLock<std::result::Result<Report, String>>,
    vanish_fg: OnceLock<std::result::Result<Report, String>>,
}

impl Ctx<'_> {
    fn report(&self, artinian: bool) -> Result<&Report> {
        let cell = if artinian { &self.vanish_artinian } else { &self.vanish_fg };
        let r = cell.get_or_init(|| {
            let partner = if artinian {
                Partner::Artinian(self.inst.art_a2())
            } else {
                Partner::Noetherian(self.inst.n.clone())
            };
            vanishing_predicates(&self.inst.art_a(), &partner).map_err(|e| e.to_string())
        });
        r.as_ref().map_err(|e| Error::InvalidArgument(e.clone()))
    }
}

type CheckFn = fn(&Ctx) -> Result<Outcome>;

/// A registered property check.
pub struct CheckInfo {
    pub id: &'static str,
    pub tag: &'static str,
    pub summary: &'static str,
    run: CheckFn,
}

macro_rules! check {
    ($id:literal, $tag:literal, $summary:literal, $f:ident) => {
        CheckInfo { id: $id, tag: $tag, summary: $summary, run: $f }
    };
}

pub static CHECKS: &[CheckInfo] = &[
    check!("finite-length-hom-tensor", "finite-length", "Hom(A, N) and A ⊗ A' have finite length", finite_length_hom_tensor),
    check!("ext-artinian-fg", "ext-artinian-fg", "Ext^i(A, A') is finitely generated with a finite resolution window", ext_artinian_fg),
    check!("tor-artinian-is-dual", "tor-artinian", "Tor_i(N, A) and stages of Tor_i(A, A') are well-formed duals", tor_artinian_is_dual),
    check!("hom-length-bound", "hom-length-bound", "len Hom(A, N) ≤ β0(A) · len (0 :_N m^s)", hom_length_bound),
    check!("tensor-length-bound", "tensor-length-bound", "len(A ⊗ L) ≤ len(A/m^t A) β0(L) and ≤ β0(A) len(L/m^t L)", tensor_length_bound),
    check!("hom-reduction", "hom-reduction", "len Hom(A, N) = len Hom(D(Γ_m N), N_A)", hom_reduction),
    check!("tensor-reduction", "tensor-reduction", "len(A ⊗ L) = len Hom(L, N_A) for finite-length L", tensor_reduction),
    check!("bass-betti-duality", "bass-betti", "β_i(V) = μ^i(D V) and μ^i(V) = β_i(D V)", bass_betti_duality),
    check!("ext-duality", "ext-duality", "Ext^i(V, V') ≅ Ext^i(D V', D V)", ext_duality),
    check!("theta-isomorphism", "theta", "dim Ext^i(V, V') = dim Tor_i(D V', V)", theta_isomorphism),
    check!("tensor-vanishing", "tensor-vanishing", "A ⊗ A' = 0 criteria", tensor_vanishing),
    check!("tensor-vanishing-fg", "tensor-vanishing-fg", "A ⊗ N = 0 criteria for noetherian N", tensor_vanishing_fg),
    check!("hom-vanishing", "hom-vanishing", "Hom(A, L) = 0 criteria", hom_vanishing),
    check!("hom-vanishing-local", "hom-vanishing-local", "Hom(A, L) = 0 iff A = mA or Γ_m L = 0", hom_vanishing_local),
    check!("ext-below-depth", "ext-below-depth", "Ext^i(A, L) = 0 below depth(m; L)", ext_below_depth),
    check!("tor-below-depth", "tor-below-depth", "Tor_i(A, L) = 0 below depth(m; D L)", tor_below_depth),
    check!("depth-formulas", "depth-formula", "six depth identities for mixed Ext and Tor", depth_formula_check),
    check!("ass-of-hom", "ass-of-hom", "Ass Hom(A, N) = Att A ∩ V(Ann Γ_m N)", ass_of_hom),
    check!("att-of-tensor", "att-of-tensor", "Att(A ⊗ N') = Att A ∩ V(Ann N')", att_of_tensor),
    check!("att-equals-ass", "att-equals-ass", "Att D(N) = Ass N against a combinatorial colon search", att_equals_ass),
    check!("depth-width-duality", "depth-width", "width(a; V) = depth(a; D V) and the converse", depth_width_duality),
    check!("nonzerodivisor-criterion", "nonzerodivisor", "depth(a; N) > 0 iff a contains an N-regular element", nonzerodivisor_criterion),
];

pub fn check_ids() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.id).collect()
}

fn finite_length_hom_tensor(c: &Ctx) -> Result<Outcome> {
    let a = c.inst.art_a();
    let hom = hom_artinian_to_fg_with(&a, &c.inst.n, c.knobs)?;
    let tensor = tensor_with_artinian_with(&a, &Partner::Artinian(c.inst.art_a2()), c.knobs)?;
    // Both results are certified finite-length modules by construction; confirm
    // the certificate once more on the presented module.
    let ok = hom.hom.module().length() == Length::Finite(hom.hom.dim())
        && tensor.tensor.module().length() == Length::Finite(tensor.tensor.dim());
    Ok(Outcome::check(ok, json!({ "hom_length": hom.hom.dim(), "tensor_length": tensor.tensor.dim() })))
}

fn ext_artinian_fg(c: &Ctx) -> Result<Outcome> {
    let (a, a2) = (c.inst.art_a(), c.inst.art_a2());
    let mut ranks = Vec::new();
    let mut ok = true;
    for i in 0..=c.i_max {
        let e = ext_artinian_pair(i, &a, &a2)?;
        let again = GradedModule::new(e.ring().clone(), e.degrees().to_vec(), e.relations().to_vec());
        let res = min_resolution(&e, 2);
        ok &= again.is_ok() && res.is_complex();
        ranks.push(res.ranks());
    }
    Ok(Outcome::check(ok, json!({ "resolution_ranks": ranks })))
}

fn tor_artinian_is_dual(c: &Ctx) -> Result<Outcome> {
    let (a, a2) = (c.inst.art_a(), c.inst.art_a2());
    let mut ok = true;
    let mut lengths = Vec::new();
    for i in 0..=c.i_max {
        let t = mixed_ext_tor(i, &c.inst.n, &a, MixedOp::TorFgWithArtinian)?;
        ok &= GradedModule::new(t.dual_of.ring().clone(), t.dual_of.degrees().to_vec(), t.dual_of.relations().to_vec()).is_ok();
    }
    for i in 0..=c.i_max.min(1) {
        let st = hard_direction_stages(i, &a2, &StageTarget::Artinian(a.clone()), StageOp::TorArtinianPair, c.s_max)?;
        ok &= st.transitions_are_module_maps();
        lengths.push(st.lengths());
    }
    Ok(Outcome::check(ok, json!({ "stage_lengths": lengths })))
}

fn beta0_artinian(a: &ArtinianModule) -> usize {
    a.dual_of.colon(&a.dual_of.ring().maximal_ideal(), 1).module.length().finite().unwrap_or(0)
}

fn hom_length_bound(c: &Ctx) -> Result<Outcome> {
    let a = c.inst.art_a();
    let r = hom_artinian_to_fg_with(&a, &c.inst.n, c.knobs)?;
    let lhs = r.hom.dim();
    let rhs = beta0_artinian(&a) * r.target.dim();
    let bound = if rhs == 0 {
        Bound::Degenerate
    } else if lhs == rhs {
        Bound::Tight
    } else {
        Bound::Strict
    };
    let mut out = Outcome::check(lhs <= rhs, json!({ "s": r.s, "lhs": lhs, "rhs": rhs }));
    out.bound = Some(bound);
    Ok(out)
}

fn tensor_length_bound(c: &Ctx) -> Result<Outcome> {
    let a = c.inst.art_a();
    let t = stabilization_exponent_with(&a, c.knobs);
    let len_a = top_quotient(&a, t, c.knobs)?.module.dim();
    let beta_a = beta0_artinian(&a);
    // len(A/m^t A) = 0 exactly when β0(A) = 0.
    let mut ok = (len_a == 0) == (beta_a == 0);
    let mut rows = Vec::new();
    let a2 = c.inst.art_a2();
    let partners = [
        (Partner::Artinian(a2.clone()), beta0_artinian(&a2), top_quotient(&a2, t, c.knobs)?.module.dim()),
        (
            Partner::Noetherian(c.inst.l.clone()),
            c.inst.l.truncate(1).length().finite().unwrap_or(0),
            c.inst.l.truncate(t).length().finite().unwrap_or(0),
        ),
    ];
    for (p, beta_l, len_l) in partners {
        let tensor = tensor_with_artinian_with(&a, &p, c.knobs)?.tensor.dim();
        ok &= tensor <= beta_l * len_a && tensor <= beta_a * len_l;
        rows.push(json!({ "tensor": tensor, "beta_l": beta_l, "len_a": len_a, "beta_a": beta_a, "len_l": len_l }));
    }
    Ok(Outcome::check(ok, json!({ "t": t, "partners": rows })))
}

fn hom_reduction(c: &Ctx) -> Result<Outcome> {
    let a = c.inst.art_a();
    let lhs = hom_artinian_to_fg_with(&a, &c.inst.n, c.knobs)?.hom.dim();
    let gamma = FiniteLengthModule::from_module(c.inst.n.gamma_m().0.module)?;
    let rhs = if gamma.dim() == 0 {
        0
    } else {
        let dg = dualize(&gamma).unshifted();
        FiniteLengthModule::from_module(hom_fg(dg.module(), &c.inst.a)?)?.dim()
    };
    Ok(Outcome::check(lhs == rhs, json!({ "hom": lhs, "witness_hom": rhs })))
}

fn tensor_reduction(c: &Ctx) -> Result<Outcome> {
    let a = c.inst.art_a();
    let mut rows = Vec::new();
    let mut ok = true;
    for l in [&c.inst.l, &c.inst.v] {
        let lhs = tensor_with_artinian_with(&a, &Partner::Noetherian(l.clone()), c.knobs)?.tensor.dim();
        let rhs = FiniteLengthModule::from_module(hom_fg(l, &c.inst.a)?)?.dim();
        ok &= lhs == rhs;
        rows.push(json!([lhs, rhs]));
    }
    Ok(Outcome::check(ok, json!({ "tensor_vs_hom": rows })))
}

fn bass_betti_duality(c: &Ctx) -> Result<Outcome> {
    let k = GradedModule::residue_field(c.inst.ring.clone());
    let res = min_resolution(&k, c.i_max + 1);
    let mut ok = true;
    let mut rows = Vec::new();
    for v in [&c.inst.v, &c.inst.v2] {
        let v = FiniteLengthModule::from_module(v.clone())?;
        let d = dualize_with(&v, c.knobs)?.module;
        let (betti, bass) = (tor_dims(&res, &v, c.i_max), ext_dims(&res, &v, c.i_max));
        let (dual_bass, dual_betti) = (ext_dims(&res, &d, c.i_max), tor_dims(&res, &d, c.i_max));
        ok &= betti == dual_bass && bass == dual_betti;
        rows.push(json!({ "betti": betti, "bass_of_dual": dual_bass, "bass": bass, "betti_of_dual": dual_betti }));
    }
    Ok(Outcome::check(ok, json!(rows)))
}

/// `dim Ext^i(V, V')` for `i ≤ i_max`, read one index late under the mutation.
fn ext_row(c: &Ctx, v: &GradedModule, w: &FiniteLengthModule) -> Vec<usize> {
    if c.knobs == Some(Mutation::ExtIndexShift) {
        ext_dims_of(v, w, c.i_max + 1)[1..].to_vec()
    } else {
        ext_dims_of(v, w, c.i_max)
    }
}

fn ext_duality(c: &Ctx) -> Result<Outcome> {
    let v = FiniteLengthModule::from_module(c.inst.v.clone())?;
    let w = FiniteLengthModule::from_module(c.inst.v2.clone())?;
    let lhs = ext_row(c, v.module(), &w);
    let (dv, dw) = (dualize_with(&v, c.knobs)?.unshifted(), dualize_with(&w, c.knobs)?.unshifted());
    let rhs = ext_dims_of(dw.module(), &dv, c.i_max);
    Ok(Outcome::check(lhs == rhs, json!({ "ext": lhs, "ext_of_duals": rhs })))
}

fn theta_isomorphism(c: &Ctx) -> Result<Outcome> {
    let v = FiniteLengthModule::from_module(c.inst.v.clone())?;
    let w = FiniteLengthModule::from_module(c.inst.v2.clone())?;
    let lhs = ext_row(c, v.module(), &w);
    let dw = dualize_with(&w, c.knobs)?.unshifted();
    let rhs = tor_dims_of(dw.module(), &v, c.i_max);
    Ok(Outcome::check(lhs == rhs, json!({ "ext": lhs, "tor_with_dual": rhs })))
}

fn tensor_vanishing(c: &Ctx) -> Result<Outcome> {
    Ok(Outcome::from_report(c.report(true)?, "tensor-vanishing"))
}

fn tensor_vanishing_fg(c: &Ctx) -> Result<Outcome> {
    if c.inst.n.length() != Length::Infinite {
        return Ok(Outcome::scope("partner has finite length"));
    }
    Ok(Outcome::from_report(c.report(false)?, "tensor-vanishing-fg"))
}

fn merged(c: &Ctx, tag: &str) -> Result<Outcome> {
    let mut clauses = c.report(true)?.clauses.clone();
    clauses.extend(c.report(false)?.clauses.iter().cloned());
    Ok(Outcome::from_report(&Report { clauses }, tag))
}

fn hom_vanishing(c: &Ctx) -> Result<Outcome> {
    merged(c, "hom-vanishing")
}

fn hom_vanishing_local(c: &Ctx) -> Result<Outcome> {
    merged(c, "hom-vanishing-local")
}

fn ext_below_depth(c: &Ctx) -> Result<Outcome> {
    let m = c.inst.ring.maximal_ideal();
    let a = c.inst.art_a();
    let d = depth(&m, &Partner::Noetherian(c.inst.n.clone()), c.i_max + 1)?;
    let below = match d {
        Bounded::Exact(e) => e,
        Bounded::AtLeast(b) => b,
    };
    let mut ok = true;
    let mut checked = Vec::new();
    for i in 0..below {
        for s in 1..=c.s_max {
            let stage = socle_stage_with(&a, s, c.knobs)?.unshifted();
            let zero = ext_fg(i, stage.module(), &c.inst.n)?.is_zero();
            ok &= zero;
            checked.push(json!([i, s, zero]));
        }
    }
    // Artinian partner: depth(m; A') is read on its witness.
    let a2 = c.inst.art_a2();
    let d2 = depth(&m, &Partner::Artinian(a2.clone()), c.i_max + 1)?;
    let below2 = match d2 {
        Bounded::Exact(e) => e,
        Bounded::AtLeast(b) => b,
    };
    for i in 0..below2 {
        ok &= ext_artinian_pair(i, &a, &a2)?.is_zero();
    }
    Ok(Outcome::check(ok, json!({ "depth": d.to_string(), "artinian_depth": d2.to_string(), "stages": checked })))
}

fn tor_below_depth(c: &Ctx) -> Result<Outcome> {
    let m = c.inst.ring.maximal_ideal();
    let (a, a2) = (c.inst.art_a(), c.inst.art_a2());
    // L = A', D(L) = N_{A'}.
    let d = depth(&m, &Partner::Noetherian(c.inst.a2.clone()), c.i_max + 1)?;
    let below = match d {
        Bounded::Exact(e) => e,
        Bounded::AtLeast(b) => b,
    };
    let mut ok = true;
    let mut rows = Vec::new();
    for i in 0..below.min(c.i_max + 1) {
        let st = hard_direction_stages(i, &a2, &StageTarget::Artinian(a.clone()), StageOp::TorArtinianPair, c.s_max)?;
        ok &= st.lengths().iter().all(|&x| x == 0);
        rows.push(json!({ "i": i, "stages": st.lengths() }));
    }
    // L = D(N) for noetherian N: D(Tor_i(A, L)) = Ext^i(A, N), read on its stages.
    let dn = depth(&m, &Partner::Noetherian(c.inst.n.clone()), c.i_max + 1)?;
    let below_n = match dn {
        Bounded::Exact(e) => e,
        Bounded::AtLeast(b) => b,
    };
    for i in 0..below_n.min(c.i_max + 1) {
        let st = hard_direction_stages(i, &a, &StageTarget::Noetherian(c.inst.n.clone()), StageOp::ExtArtinianToFg, c.s_max)?;
        ok &= st.lengths().iter().all(|&x| x == 0);
        rows.push(json!({ "i": i, "dual_stages": st.lengths() }));
    }
    Ok(Outcome::check(ok, json!({ "depth_of_dual": d.to_string(), "pair_stages": rows, "fg_depth": dn.to_string() })))
}

fn depth_formula_check(c: &Ctx) -> Result<Outcome> {
    let bound = default_bound(&c.inst.ring);
    let r = depth_formulas(&c.inst.art_a(), &c.inst.art_a2(), &c.inst.n, &c.inst.n2, bound)?;
    Ok(Outcome::from_report(&r, "depth-formula"))
}

fn support_of(ideal: &Ideal, primes: &[PrimeIdeal]) -> Vec<PrimeIdeal> {
    primes.iter().filter(|p| p.contains_ideal(ideal)).cloned().collect()
}

fn ass_of_hom(c: &Ctx) -> Result<Outcome> {
    let a = c.inst.art_a();
    let hom = hom_artinian_to_fg_with(&a, &c.inst.n, c.knobs)?.hom.into_module();
    let lhs = ass_fg(&hom)?;
    let att = att_artinian(&a)?;
    let gamma = c.inst.n.gamma_m().0.module;
    let rhs = support_of(&crate::invariants::annihilator(&gamma), &att);
    Ok(Outcome::check(lhs == rhs, json!({ "ass_hom": lhs, "att_cap_support": rhs })))
}

fn att_of_tensor(c: &Ctx) -> Result<Outcome> {
    let a = c.inst.art_a();
    // A ⊗ N' = D(Hom(N', N_A)).
    let witness = hom_fg(&c.inst.n2, &c.inst.a)?;
    let lhs = ass_fg(&witness)?;
    let att = att_artinian(&a)?;
    let rhs = support_of(&crate::invariants::annihilator(&c.inst.n2), &att);
    Ok(Outcome::check(lhs == rhs, json!({ "att_tensor": lhs, "att_cap_support": rhs })))
}

/// Minimal generators of a monomial ideal.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Ass of `S/K` for a monomial ideal `K`: primes `(K : f)` over monomials `f ∉ K`.
fn monomial_ass(k: &[Monomial], nv: usize) -> Vec<Vec<usize>> {
    let k = minimalize(k.to_vec());
    let caps: Vec<u16> = (0..nv).map(|i| k.iter().map(|m| m.exp(i)).max().unwrap_or(0)).collect();
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut exps = vec![0u16; nv];
    loop {
        let f = Monomial::from_exponents(&exps);
        if !k.iter().any(|g| g.divides(&f)) {
            let colon = minimalize(k.iter().map(|g| g.gcd(&f).quotient_of(g)).collect());
            if colon.iter().all(|g| g.degree() == 1) {
                let mut vars: Vec<usize> = colon.iter().filter_map(|g| g.support().next()).collect();
                vars.sort_unstable();
                if !found.contains(&vars) {
                    found.push(vars);
                }
            }
        }
        // Odometer over exponents bounded by the caps.
        let mut i = 0;
        loop {
            if i == nv {
                found.sort();
                return found;
            }
            if exps[i] < caps[i] {
                exps[i] += 1;
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// Ass of a direct sum of cyclic monomial modules, or `None` if `n` is not one.
fn brute_force_ass(n: &GradedModule) -> Option<Vec<PrimeIdeal>> {
    let ring = n.ring();
    let nv = ring.nvars();
    let base: Vec<Monomial> = ring
        .defining_ideal()
        .generators()
        .iter()
        .map(|g| g.is_monomial_term().then(|| g.terms()[0].0))
        .collect::<Option<_>>()?;
    let mut per: Vec<Vec<Monomial>> = vec![base; n.rank()];
    for r in n.relations() {
        let [t] = r.terms() else { return None };
        per[t.pos as usize].push(t.mon);
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    for k in per {
        for p in monomial_ass(&k, nv) {
            if !out.contains(&p) {
                out.push(p);
            }
        }
    }
    let mut primes: Vec<PrimeIdeal> = out.into_iter().map(|v| PrimeIdeal::monomial(ring, v)).collect();
    primes.sort();
    Some(primes)
}

fn att_equals_ass(c: &Ctx) -> Result<Outcome> {
    let mut rows = Vec::new();
    let mut ok = true;
    let mut any = false;
    for n in [&c.inst.a, &c.inst.n, &c.inst.n2] {
        let Some(expected) = brute_force_ass(n) else { continue };
        let att = att_artinian(&artinian_dual(n.clone()))?;
        any = true;
        ok &= att == expected;
        rows.push(json!({ "att": att, "colon_search": expected }));
    }
    if !any {
        return Ok(Outcome::scope("no module is a sum of cyclic monomial modules"));
    }
    Ok(Outcome::check(ok, json!(rows)))
}

fn depth_width_duality(c: &Ctx) -> Result<Outcome> {
    let a = &c.inst.ideal;
    let bound = default_bound(&c.inst.ring);
    let v = FiniteLengthModule::from_module(c.inst.v.clone())?;
    let dv = dualize_with(&v, c.knobs)?.unshifted().into_module();
    let (w, dd) = (width(a, &Partner::Noetherian(v.module().clone()), bound)?, depth(a, &Partner::Noetherian(dv.clone()), bound)?);
    let (d, dw) = (depth(a, &Partner::Noetherian(v.module().clone()), bound)?, width(a, &Partner::Noetherian(dv), bound)?);
    Ok(Outcome::check(
        w == dd && d == dw,
        json!({ "width": w.to_string(), "depth_of_dual": dd.to_string(), "depth": d.to_string(), "width_of_dual": dw.to_string() }),
    ))
}

/// Whether depth(a; n) > 0, and a regular element of `a` on `n` if one is found.
fn regular_search(c: &Ctx, n: &GradedModule) -> Result<(bool, Option<String>)> {
    let ideal = &c.inst.ideal;
    let ring = &c.inst.ring;
    let positive = depth(ideal, &Partner::Noetherian(n.clone()), 1)?.is_positive();
    let field = ring.field();
    let regular_on = |f: Polynomial| -> Result<bool> {
        let principal = Ideal::new(ring.poly().clone(), vec![f])?;
        Ok(n.colon(&principal, 1).module.is_zero())
    };
    // Candidates: every monomial of a up to degree 3, then random
    // combinations of each graded piece of a.
    let lead: Vec<Monomial> = ideal.generators().iter().filter_map(|g| g.leading().map(|t| t.0)).collect();
    let low = lead.iter().map(|m| m.degree()).min().unwrap_or(1);
    let mut rng = ChaCha8Rng::seed_from_u64(c.inst.spec.seed ^ 0x5EED ^ n.rank() as u64);
    let mut regular = None;
    'search: for d in low..=low.max(3) {
        let piece: Vec<Monomial> =
            Monomial::all_of_degree(ring.nvars(), d).into_iter().filter(|m| lead.iter().any(|g| g.divides(m))).collect();
        for m in &piece {
            if regular_on(mono_poly(field, *m))? {
                regular = Some(m.display(&ring.poly().variables));
                break 'search;
            }
        }
        for _ in 0..2 {
            let f = Polynomial::from_terms(piece.iter().map(|m| (*m, field.from_i64(rng.gen_range(1..1_000_000)))).collect());
            if !f.is_zero() && regular_on(f.clone())? {
                regular = Some(f.display(ring.poly()));
                break 'search;
            }
        }
    }
    Ok((positive, regular))
}

fn nonzerodivisor_criterion(c: &Ctx) -> Result<Outcome> {
    let field = c.inst.ring.field();
    // Prime avoidance needs enough scalars; over a small field a regular
    // element of a may exist only in higher degree.
    let small = field.characteristic() != 0 && field.characteristic() < 1000;
    let mut verdict = Verdict::Pass;
    let mut rows = Vec::new();
    for m in [&c.inst.n, &c.inst.v] {
        let (positive, regular) = regular_search(c, m)?;
        let found = regular.is_some();
        if positive != found {
            if positive && small {
                verdict = if verdict == Verdict::Pass { Verdict::Scope } else { verdict };
            } else {
                verdict = Verdict::Fail;
            }
        }
        rows.push(json!({ "depth_positive": positive, "regular_element": regular }));
    }
    Ok(Outcome { verdict, detail: json!(rows), bound: None })
}

#[derive(Debug, Clone, Serialize)]
pub struct Record {
    pub seed: u64,
    pub case: usize,
    pub check: String,
    pub tag: String,
    pub verdict: Verdict,
    pub detail: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<Value>,
}

#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct CheckSummary {
    pub pass: usize,
    pub fail: usize,
    pub scope: usize,
    /// Passing runs on monomial-profile instances.
    pub monomial_pass: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub records: Vec<Record>,
    pub summary: BTreeMap<String, CheckSummary>,
    pub census: Census,
}

impl SuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| r.verdict == Verdict::Fail)
    }

    pub fn all_pass(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn table(&self) -> String {
        let mut out = format!("{:<28} {:<22} {:>6} {:>6} {:>6}\n", "check", "tag", "pass", "fail", "scope");
        for info in CHECKS {
            if let Some(s) = self.summary.get(info.id) {
                out.push_str(&format!("{:<28} {:<22} {:>6} {:>6} {:>6}\n", info.id, info.tag, s.pass, s.fail, s.scope));
            }
        }
        out.push_str(&format!(
            "hom-length-bound census: tight {} strict {} degenerate {}\n",
            self.census.tight, self.census.strict, self.census.degenerate
        ));
        out
    }
}

fn selected(config: &SuiteConfig) -> Vec<&'static CheckInfo> {
    CHECKS.iter().filter(|c| config.checks.is_empty() || config.checks.iter().any(|id| id == c.id)).collect()
}

struct CaseResult {
    records: Vec<Record>,
    bounds: Vec<Bound>,
    monomial: bool,
}

fn run_case(config: &SuiteConfig, case: usize, checks: &[&CheckInfo]) -> CaseResult {
    let spec = InstanceSpec::for_case(config.seed, case, config.field);
    let monomial = spec.ring.kind == IdealKind::Monomial;
    let inst = match Instance::generate(&spec) {
        Ok(i) => i,
        Err(e) => {
            let records = checks
                .iter()
                .map(|c| Record {
                    seed: spec.seed,
                    case,
                    check: c.id.into(),
                    tag: c.tag.into(),
                    verdict: Verdict::Fail,
                    detail: json!({ "error": format!("instance generation: {e}") }),
                    instance: Some(json!({ "spec": spec })),
                })
                .collect();
            return CaseResult { records, bounds: vec![], monomial };
        }
    };
    let ctx = Ctx {
        inst: &inst,
        knobs: config.mutation,
        s_max: config.s_max.clamp(1, 5),
        i_max: config.i_max,
        vanish_artinian: OnceLock::new(),
        vanish_fg: OnceLock::new(),
    };
    let mut bounds = Vec::new();
    let records = checks
        .iter()
        .map(|c| {
            let out = match catch_unwind(AssertUnwindSafe(|| (c.run)(&ctx))) {
                Ok(Ok(o)) => o,
                // Missing finiteness certificates and monomial-scope limits.
                Ok(Err(Error::Scope(why))) => Outcome::scope(&why),
                Ok(Err(e)) => Outcome { verdict: Verdict::Fail, detail: json!({ "error": e.to_string() }), bound: None },
                Err(_) => Outcome { verdict: Verdict::Fail, detail: json!({ "error": "panic" }), bound: None },
            };
            if out.verdict == Verdict::Pass {
                bounds.extend(out.bound);
            }
            Record {
                seed: spec.seed,
                case,
                check: c.id.into(),
                tag: c.tag.into(),
                verdict: out.verdict,
                instance: (out.verdict == Verdict::Fail).then(|| inst.to_json()),
                detail: out.detail,
            }
        })
        .collect();
    CaseResult { records, bounds, monomial }
}

pub fn run_suite(config: &SuiteConfig) -> SuiteReport {
    let checks = selected(config);
    let results: Vec<CaseResult> = (0..config.cases).into_par_iter().map(|case| run_case(config, case, &checks)).collect();
    let mut records = Vec::new();
    let mut census = Census::default();
    let mut summary: BTreeMap<String, CheckSummary> = checks.iter().map(|c| (c.id.to_string(), CheckSummary::default())).collect();
    for r in results {
        for b in &r.bounds {
            match b {
                Bound::Tight => census.tight += 1,
                Bound::Strict => census.strict += 1,
                Bound::Degenerate => census.degenerate += 1,
            }
        }
        for rec in &r.records {
            let s = summary.get_mut(&rec.check).expect("registered check");
            match rec.verdict {
                Verdict::Pass => {
                    s.pass += 1;
                    s.monomial_pass += usize::from(r.monomial);
                }
                Verdict::Fail => s.fail += 1,
                Verdict::Scope => s.scope += 1,
            }
        }
        records.extend(r.records);
    }
    records.sort_by(|a, b| (a.seed, &a.check).cmp(&(b.seed, &b.check)));
    SuiteReport { config: config.clone(), records, summary, census }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(cases: usize, mutation: Knobs, checks: &[&str]) -> SuiteConfig {
        SuiteConfig { cases, mutation, checks: checks.iter().map(|s| s.to_string()).collect(), ..SuiteConfig::default() }
    }

    #[test]
    fn registry_ids_are_unique_and_tagged() {
        let ids = check_ids();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len());
        assert!(CHECKS.iter().all(|c| !c.tag.is_empty() && !c.summary.is_empty()));
    }

    #[test]
    fn every_check_runs() {
        let report = run_suite(&small(2, None, &[]));
        for id in check_ids() {
            let s = report.summary[id];
            assert_eq!(s.pass + s.fail + s.scope, 2, "{id}");
        }
        let fails: Vec<_> = report.failures().map(|r| (&r.check, &r.detail)).collect();
        assert!(fails.is_empty(), "{fails:?}");
    }

    #[test]
    fn instance_json_round_trip() {
        let spec = InstanceSpec::for_case(0, 0, FieldSpec::Rationals);
        let inst = Instance::generate(&spec).unwrap();
        let v = inst.to_json();
        assert_eq!(Instance::from_json(&v).unwrap().to_json(), v);
    }

    #[test]
    fn zero_ideal_profile_gives_polynomial_ring() {
        let spec = InstanceSpec {
            seed: 7,
            field: FieldSpec::Rationals,
            ring: RingProfile { variables: Some(1), kind: IdealKind::Zero, max_degree: 3 },
            modules: ModuleProfile { max_power: 3, max_relation_degree: 2 },
        };
        let inst = Instance::generate(&spec).unwrap();
        assert_eq!(inst.ring.nvars(), 1);
        assert!(inst.ring.defining_ideal().is_zero());
    }

    #[test]
    fn monomial_ass_by_colons() {
        let x = Monomial::var(0);
        let y = Monomial::var(1);
        // (x^2, xy): Ass = {(x), (x, y)}.
        let k = vec![x.mul(&x), x.mul(&y)];
        assert_eq!(monomial_ass(&k, 2), vec![vec![0], vec![0, 1]]);
        assert_eq!(monomial_ass(&[], 2), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn mutations_are_caught() {
        let cases = [
            (Mutation::SkipTranspose, "bass-betti-duality"),
            (Mutation::StabilizationMinusOne, "hom-reduction"),
            (Mutation::ExtIndexShift, "ext-duality"),
        ];
        for (m, id) in cases {
            let report = run_suite(&small(20, Some(m), &[id]));
            assert!(report.failures().next().is_some(), "{m:?} not caught by {id}");
            let f = report.failures().next().unwrap();
            assert!(f.instance.is_some());
        }
    }
}
