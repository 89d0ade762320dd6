//! Named batteries comparing computed modules with known closed forms.
//!
//! Where the closed form is an infinite artinian module, the comparison is
//! made stage by stage on the finite truncations, and limits are read off
//! from bijective (or zero) transition maps.

use std::collections::BTreeMap;
use std::sync::Arc;

use matlis_core::finite::FiniteLengthModule;
use matlis_core::json::{finite_to_json, module_summary, stages_to_json};
use matlis_core::matlis::{artinian_dual, ext_artinian_pair, socle_stage, stabilization_exponent, tensor_with_artinian, top_quotient, ArtinianModule, Partner};
use matlis_core::module::GradedModule;
use matlis_core::stages::{hard_direction_stages, StageOp, StageSequence, StageTarget};
use matlis_core::{FieldSpec, Ideal, PolyRing, QuotientRing, Result};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    /// Ext between duals of cyclic quotients by regular elements.
    ExtPairs,
    /// Ext from an artinian module into a noetherian one over a Gorenstein ring.
    ExtIntoNoetherian,
    /// Tor of artinian modules over a Gorenstein ring, stage by stage.
    TorStages,
    /// `E ⊗ E` over `k[x,y]/(xy, y^2)`.
    HullSquare,
    /// `E_S ⊗ E_S` over `S = k[x,y]/(x^a y^b, y^c)`.
    HullSquareFamily { a: u32, b: u32, c: u32 },
}

pub const PRESET_NAMES: &[&str] = &["example-6-2", "example-6-3", "example-6-4", "example-6-5", "example-6-5-general(a,b,c)"];

impl Preset {
    pub fn from_parts(name: &str, params: &[i64]) -> std::result::Result<Preset, String> {
        let none = |p: Preset| if params.is_empty() { Ok(p) } else { Err(format!("preset {name} takes no parameters")) };
        match name {
            "example-6-2" => none(Preset::ExtPairs),
            "example-6-3" => none(Preset::ExtIntoNoetherian),
            "example-6-4" => none(Preset::TorStages),
            "example-6-5" => none(Preset::HullSquare),
            "example-6-5-general" => {
                let &[a, b, c] = params else {
                    return Err("example-6-5-general takes three parameters (a,b,c)".into());
                };
                if a < 1 || b < 1 || c <= b || c > 12 || a > 12 {
                    return Err(format!("example-6-5-general needs c > b >= 1 and a >= 1 (at most 12), got ({a},{b},{c})"));
                }
                Ok(Preset::HullSquareFamily { a: a as u32, b: b as u32, c: c as u32 })
            }
            _ => Err(format!("unknown preset `{name}`; expected one of {}", PRESET_NAMES.join(", "))),
        }
    }

    /// Parses `name` or `name(a,b,c)` as given on the command line.
    pub fn parse(text: &str) -> std::result::Result<Preset, String> {
        let text = text.trim();
        let (name, params) = match text.split_once('(') {
            None => (text, Vec::new()),
            Some((name, rest)) => {
                let inner = rest.strip_suffix(')').ok_or_else(|| format!("unbalanced parentheses in {text:?}"))?;
                let params = inner
                    .split(',')
                    .map(|s| s.trim().parse::<i64>().map_err(|_| format!("bad preset parameter {s:?}")))
                    .collect::<std::result::Result<Vec<_>, _>>()?;
                (name.trim(), params)
            }
        };
        Preset::from_parts(name, &params)
    }

    pub fn name(&self) -> String {
        match self {
            Preset::ExtPairs => "example-6-2".into(),
            Preset::ExtIntoNoetherian => "example-6-3".into(),
            Preset::TorStages => "example-6-4".into(),
            Preset::HullSquare => "example-6-5".into(),
            Preset::HullSquareFamily { a, b, c } => format!("example-6-5-general({a},{b},{c})"),
        }
    }
}

/// Knobs shared by all presets.
#[derive(Debug, Clone, Copy)]
pub struct PresetConfig {
    pub field: FieldSpec,
    pub s_max: u32,
    pub i_max: usize,
}

impl Default for PresetConfig {
    fn default() -> Self {
        PresetConfig { field: FieldSpec::Rationals, s_max: 5, i_max: 3 }
    }
}

/// One line of a preset's case analysis.
#[derive(Debug, Clone, Serialize)]
pub struct PresetLine {
    pub case: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
    pub data: Value,
}

pub fn run_preset(preset: Preset, config: &PresetConfig) -> Result<Vec<PresetLine>> {
    let mut b = Battery { config: *config, lines: Vec::new() };
    match preset {
        Preset::ExtPairs => b.ext_pairs()?,
        Preset::ExtIntoNoetherian => b.ext_into_noetherian()?,
        Preset::TorStages => b.tor_stages()?,
        Preset::HullSquare => b.hull_square()?,
        Preset::HullSquareFamily { a, b: bb, c } => b.hull_square_family(a, bb, c)?,
    }
    Ok(b.lines)
}

fn ring(field: FieldSpec, vars: &[&str], ideal: &[&str]) -> Result<Arc<QuotientRing>> {
    QuotientRing::new(Ideal::parse(PolyRing::new(field, vars)?, ideal)?)
}

fn cyclic(r: &Arc<QuotientRing>, gens: &[&str]) -> Result<GradedModule> {
    let ps = gens.iter().map(|g| r.poly().parse(g)).collect::<Result<Vec<_>>>()?;
    GradedModule::cyclic(r.clone(), &ps)
}

type Table = BTreeMap<i32, usize>;

/// Equal Hilbert functions up to a shift of degrees.
fn same_up_to_shift(a: &Table, b: &Table) -> bool {
    let lo = |t: &Table| t.iter().find(|(_, &n)| n > 0).map(|(d, _)| *d);
    let strip = |t: &Table| t.iter().filter(|(_, &n)| n > 0).map(|(d, n)| (*d, *n)).collect::<Vec<_>>();
    match (lo(a), lo(b)) {
        (None, None) => true,
        (Some(x), Some(y)) => strip(a).iter().map(|(d, n)| (d - x, *n)).eq(strip(b).iter().map(|(d, n)| (d - y, *n))),
        _ => false,
    }
}

fn show(t: &Table) -> String {
    let parts: Vec<String> = t.iter().filter(|(_, &n)| n > 0).map(|(d, n)| format!("{d}:{n}")).collect();
    if parts.is_empty() {
        "0".into()
    } else {
        format!("length {}, hilbert {}", t.values().sum::<usize>(), parts.join(" "))
    }
}

fn power(v: &str, e: u32) -> String {
    if e == 1 {
        v.to_string()
    } else {
        format!("{v}^{e}")
    }
}

fn table_of(m: &GradedModule) -> Option<Table> {
    m.hilbert_table()
}

/// What the limit of a stage sequence is known to be from the computed stages.
enum Limit {
    Module(FiniteLengthModule),
    Zero,
    Unknown,
}

fn limit_of(st: &StageSequence) -> Limit {
    if st.lengths().iter().all(|&l| l == 0) {
        return Limit::Zero;
    }
    if let Some(l) = &st.detected_limit {
        return Limit::Module(l.module.clone());
    }
    // Zero transitions kill every element in the limit.
    if !st.transitions.is_empty() && st.transitions.iter().all(|t| t.rank() == 0) {
        return Limit::Zero;
    }
    Limit::Unknown
}

struct Battery {
    config: PresetConfig,
    lines: Vec<PresetLine>,
}

impl Battery {
    fn push(&mut self, case: String, expected: String, observed: String, pass: bool, data: Value) {
        self.lines.push(PresetLine { case, expected, observed, pass, data });
    }

    /// Compares a finitely generated result with `want` (`None` meaning 0).
    fn compare_module(&mut self, case: String, want: Option<&GradedModule>, got: &GradedModule) {
        let empty = Table::new();
        let want_table = want.map(|w| table_of(w).expect("closed forms have finite length")).unwrap_or_default();
        let expected = match want {
            Some(_) => show(&want_table),
            None => "0".into(),
        };
        let (observed, pass) = match table_of(got) {
            Some(t) => (show(&t), same_up_to_shift(&t, if want.is_some() { &want_table } else { &empty })),
            None => ("infinite length".into(), false),
        };
        self.push(case, expected, observed, pass, module_summary(got));
    }

    /// Compares the limit of a stage sequence with a finite closed form.
    fn compare_limit(&mut self, case: String, want: Option<&GradedModule>, st: &StageSequence) {
        let want_table = want.map(|w| table_of(w).expect("closed forms have finite length")).unwrap_or_default();
        let expected = if want.is_some() { show(&want_table) } else { "0".into() };
        let (observed, pass) = match limit_of(st) {
            Limit::Zero => ("0".to_string(), want.is_none()),
            Limit::Module(m) => {
                let t = m.hilbert_table();
                let from = st.detected_limit.as_ref().map_or(1, |l| l.from_stage);
                (format!("{} (stable from stage {from})", show(&t)), same_up_to_shift(&t, &want_table))
            }
            Limit::Unknown => (format!("no stable limit in stages {:?}", st.lengths()), false),
        };
        self.push(case, expected, observed, pass, stages_to_json(st));
    }

    /// Stage `s` compared with the `s`-th truncation `truncs[s-1]`.
    fn compare_stages(&mut self, case: String, truncs: &[Table], st: &StageSequence, injective: bool) {
        let lens: Vec<usize> = truncs.iter().map(|t| t.values().sum()).collect();
        let mut pass = st.stages.len() == truncs.len();
        for (w, t) in st.stages.iter().zip(truncs) {
            pass &= same_up_to_shift(&w.hilbert_table(), t);
        }
        if injective {
            pass &= st.transitions_injective();
        }
        pass &= st.transitions_are_module_maps();
        let expected = format!("stage lengths {lens:?}{}", if injective { ", injective transitions" } else { "" });
        let kind = match (st.transitions_injective(), st.transitions_surjective()) {
            (true, true) => "bijective",
            (true, false) => "injective",
            (false, true) => "surjective",
            (false, false) => "neither injective nor surjective",
        };
        let observed = format!("stage lengths {:?}, transitions {kind}", st.lengths());
        self.push(case, expected, observed, pass, stages_to_json(st));
    }

    fn stages(&self, i: usize, a: &ArtinianModule, target: StageTarget, op: StageOp) -> Result<StageSequence> {
        hard_direction_stages(i, a, &target, op, self.config.s_max)
    }

    fn ext_pairs(&mut self) -> Result<()> {
        let f = self.config.field;
        let r = ring(f, &["x"], &[])?;
        let rx = cyclic(&r, &["x"])?;
        let ax = artinian_dual(rx.clone());
        for i in 0..=self.config.i_max {
            let got = ext_artinian_pair(i, &ax, &ax)?;
            let want = (i <= 1).then_some(&rx);
            self.compare_module(format!("k[x]: Ext^{i}(D(R/x), D(R/x)) = R/xR for i = 0,1, else 0"), want, &got);
        }
        // A = D(R/x^2): Ext^0(A, D(R/x)) = (0 :_{R/x^2} x), Ext^1 = (R/x^2)/x(R/x^2).
        let n = cyclic(&r, &["x^2"])?;
        let a = artinian_dual(n.clone());
        let x = Ideal::parse(r.poly().clone(), &["x"])?;
        let colon = n.colon(&x, 1).module;
        let quot = n.quotient_by_scale(&x, 1);
        for i in 0..=self.config.i_max {
            let got = ext_artinian_pair(i, &a, &ax)?;
            let want = match i {
                0 => Some(&colon),
                1 => Some(&quot),
                _ => None,
            };
            self.compare_module(format!("k[x]: Ext^{i}(D(R/x^2), D(R/x)) = (0 :_N x), N/xN, 0 with N = R/x^2"), want, &got);
        }
        let r2 = ring(f, &["x", "y"], &[])?;
        let (bx, by) = (artinian_dual(cyclic(&r2, &["x"])?), artinian_dual(cyclic(&r2, &["y"])?));
        let k = cyclic(&r2, &["x", "y"])?;
        for i in 0..=self.config.i_max {
            let got = ext_artinian_pair(i, &by, &bx)?;
            self.compare_module(format!("k[x,y]: Ext^{i}(D(R/y), D(R/x)) = R/(x,y) for i = 1, else 0"), (i == 1).then_some(&k), &got);
        }
        Ok(())
    }

    fn ext_into_noetherian(&mut self) -> Result<()> {
        let f = self.config.field;
        let s_max = self.config.s_max;
        // Over k[x] (Gorenstein, dimension 1): Ext^i(E, R) = D(E) = R^ for
        // i = 1, read stagewise as R/x^s.
        let r = ring(f, &["x"], &[])?;
        let free = GradedModule::free(r.clone(), vec![0]);
        let e = artinian_dual(free.clone());
        let truncs: Vec<Table> = (1..=s_max).map(|s| table_of(&free.truncate(s)).unwrap()).collect();
        for i in 0..=self.config.i_max {
            let st = self.stages(i, &e, StageTarget::Noetherian(free.clone()), StageOp::ExtArtinianToFg)?;
            if i == 1 {
                self.compare_stages("k[x]: Ext^1(E, R) = D(E), stage s = R/x^s".into(), &truncs, &st, false);
            } else {
                self.compare_limit(format!("k[x]: Ext^{i}(E, R) = 0"), None, &st);
            }
        }
        let rx = cyclic(&r, &["x"])?;
        let ax = artinian_dual(rx.clone());
        for i in 0..=self.config.i_max {
            let st = self.stages(i, &ax, StageTarget::Noetherian(rx.clone()), StageOp::ExtArtinianToFg)?;
            self.compare_limit(format!("k[x]: Ext^{i}(D(R/x), R/x) = R/xR for i = 0,1, else 0"), (i <= 1).then_some(&rx), &st);
        }
        // Dimension 2 with the regular sequence x, y.
        let r2 = ring(f, &["x", "y"], &[])?;
        let (nx, ny) = (cyclic(&r2, &["x"])?, cyclic(&r2, &["y"])?);
        let k = cyclic(&r2, &["x", "y"])?;
        let ay = artinian_dual(ny);
        for i in 0..=self.config.i_max {
            let st = self.stages(i, &ay, StageTarget::Noetherian(nx.clone()), StageOp::ExtArtinianToFg)?;
            self.compare_limit(format!("k[x,y]: Ext^{i}(D(R/y), R/x) = R/(x,y) for i = 2, else 0"), (i == 2).then_some(&k), &st);
        }
        Ok(())
    }

    fn tor_stages(&mut self) -> Result<()> {
        let f = self.config.field;
        let s_max = self.config.s_max;
        let r = ring(f, &["x"], &[])?;
        let e = artinian_dual(GradedModule::free(r.clone(), vec![0]));
        // Tor_1(E, E) = E, read stagewise as (0 :_E m^s).
        let truncs: Vec<Table> = (1..=s_max).map(|s| socle_stage(&e, s).unshifted().hilbert_table()).collect();
        for i in 0..=self.config.i_max {
            let st = self.stages(i, &e, StageTarget::Artinian(e.clone()), StageOp::TorArtinianPair)?;
            if i == 1 {
                self.compare_stages("k[x]: Tor_1(E, E) = E, stage s = (0 :_E m^s)".into(), &truncs, &st, true);
            } else {
                let zero = vec![Table::new(); s_max as usize];
                self.compare_stages(format!("k[x]: Tor_{i}(E, E) = 0"), &zero, &st, false);
            }
        }
        let rx = cyclic(&r, &["x"])?;
        let ax = artinian_dual(rx.clone());
        let k = rx;
        for i in 0..=self.config.i_max {
            // E is divisible, so E/xE = 0 and only (0 :_E x) = k survives.
            let st = self.stages(i, &e, StageTarget::Artinian(ax.clone()), StageOp::TorArtinianPair)?;
            self.compare_limit(format!("k[x]: Tor_{i}(E, (0 :_E x)) = E/xE = 0 for i = 0, (0 :_E x) for i = 1, else 0"), (i == 1).then_some(&k), &st);
        }
        for i in 0..=self.config.i_max {
            let st = self.stages(i, &ax, StageTarget::Artinian(ax.clone()), StageOp::TorArtinianPair)?;
            self.compare_limit(format!("k[x]: Tor_{i}((0 :_E x), (0 :_E x)) = (0 :_E x) for i = 0,1, else 0"), (i <= 1).then_some(&k), &st);
        }
        let r2 = ring(f, &["x", "y"], &[])?;
        let (bx, by) = (artinian_dual(cyclic(&r2, &["x"])?), artinian_dual(cyclic(&r2, &["y"])?));
        let k2 = cyclic(&r2, &["x", "y"])?;
        for i in 0..=self.config.i_max {
            let st = self.stages(i, &by, StageTarget::Artinian(bx.clone()), StageOp::TorArtinianPair)?;
            self.compare_limit(format!("k[x,y]: Tor_{i}(D(R/y), D(R/x)) = D(R/(x,y)) for i = 2, else 0"), (i == 2).then_some(&k2), &st);
        }
        Ok(())
    }

    fn hull_square(&mut self) -> Result<()> {
        let r = ring(self.config.field, &["x", "y"], &["x*y", "y^2"])?;
        let e = artinian_dual(GradedModule::free(r.clone(), vec![0]));
        let t = tensor_with_artinian(&e, &Partner::Artinian(e.clone()))?;
        let ok = t.tensor.dim() == 1 && t.tensor.socle_dim() == 1;
        self.push(
            "k[x,y]/(xy, y^2): E (x) E = k".into(),
            "length 1, socle dimension 1".into(),
            format!("length {}, socle dimension {}", t.tensor.dim(), t.tensor.socle_dim()),
            ok,
            json!({ "t": t.t, "tensor": finite_to_json(&t.tensor) }),
        );
        let top = top_quotient(&e, 1, None)?.module;
        self.push(
            "k[x,y]/(xy, y^2): E/mE = k".into(),
            "length 1".into(),
            format!("length {}", top.dim()),
            top.dim() == 1,
            finite_to_json(&top),
        );
        let t = stabilization_exponent(&e);
        self.push("k[x,y]/(xy, y^2): mE = m^2 E".into(), "m^t E = m^(t+1) E with t <= 1".into(), format!("t = {t}"), t <= 1, json!({ "t": t }));
        Ok(())
    }

    fn hull_square_family(&mut self, a: u32, b: u32, c: u32) -> Result<()> {
        let s = ring(self.config.field, &["x", "y"], &[&format!("x^{a}*y^{b}"), &format!("y^{c}")])?;
        let name = format!("S = k[x,y]/({}{}, y^{c})", power("x", a), power("y", b));
        let e = artinian_dual(GradedModule::free(s.clone(), vec![0]));
        let t = tensor_with_artinian(&e, &Partner::Artinian(e.clone()))?;
        let want = cyclic(&s, &[&format!("x^{a}"), &format!("y^{}", c - b)])?;
        let want_table = table_of(&want).expect("S/(x^a, y^(c-b)) has finite length");
        let got = t.tensor.hilbert_table();
        let len = (a * (c - b)) as usize;
        self.push(
            format!("{name}: E (x) E = S/({}, {})", power("x", a), power("y", c - b)),
            show(&want_table),
            show(&got),
            same_up_to_shift(&got, &want_table),
            json!({ "t": t.t, "tensor": finite_to_json(&t.tensor), "expected": module_summary(&want) }),
        );
        self.push(
            format!("{name}: length of E (x) E = a(c-b)"),
            format!("length {len}"),
            format!("length {}", t.tensor.dim()),
            t.tensor.dim() == len,
            json!({ "length": t.tensor.dim(), "stabilization_exponent": stabilization_exponent(&e) }),
        );
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for p in [Preset::ExtPairs, Preset::ExtIntoNoetherian, Preset::TorStages, Preset::HullSquare, Preset::HullSquareFamily { a: 2, b: 1, c: 3 }] {
            assert_eq!(Preset::parse(&p.name()).unwrap(), p);
        }
    }

    #[test]
    fn family_parameters_are_checked() {
        assert!(Preset::parse("example-6-5-general(1,2,2)").is_err());
        assert!(Preset::parse("example-6-5-general(0,1,2)").is_err());
        assert!(Preset::parse("example-6-5-general(1,0,2)").is_err());
        assert!(Preset::parse("example-6-5-general(1,1)").is_err());
        assert!(Preset::parse("example-6-5(1)").is_err());
        assert!(Preset::parse("example-7").is_err());
    }

    #[test]
    fn shift_comparison() {
        let t = |v: &[(i32, usize)]| v.iter().copied().collect::<Table>();
        assert!(same_up_to_shift(&t(&[(-2, 1), (-1, 2)]), &t(&[(0, 1), (1, 2)])));
        assert!(!same_up_to_shift(&t(&[(0, 2), (1, 1)]), &t(&[(0, 1), (1, 2)])));
        assert!(same_up_to_shift(&t(&[(3, 0)]), &Table::new()));
    }
}
