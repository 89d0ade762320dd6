//! Executes parsed statements against a name environment.

use std::collections::BTreeMap;
use std::sync::Arc;

use matlis_core::homology::{betti_bass_numbers, ext_fg, hom_fg, tor_fg};
use matlis_core::invariants::{ass_fg, att_artinian, default_bound, depth, width, Bounded};
use matlis_core::json::{artinian_to_json, finite_to_json, module_summary, module_to_json, ring_to_json, stages_to_json};
use matlis_core::matlis::{
    artinian_dual, ext_artinian_pair, hom_artinian_to_fg, mixed_ext_tor, tensor_with_artinian, ArtinianModule, MixedOp, Partner,
};
use matlis_core::module::{GradedModule, Length};
use matlis_core::stages::{hard_direction_stages, StageOp, StageSequence, StageTarget};
use matlis_core::suite::{check_ids, run_suite, SuiteConfig, SuiteReport};
use matlis_core::{FieldSpec, Ideal, PolyRing, Polynomial, QuotientRing};
use serde_json::{json, Value};

use crate::ast::*;
use crate::error::{ErrorCode, Pos, ScriptError, ScriptResult};
use crate::parser::parse_script;
use crate::presets::{run_preset, PresetConfig};

/// A bound value.
#[derive(Clone, Debug)]
pub enum Binding {
    Ring(Arc<QuotientRing>),
    Ideal(Ideal),
    Module(GradedModule),
    Artinian(ArtinianModule),
    Report(Box<SuiteReport>),
}

impl Binding {
    fn kind(&self) -> &'static str {
        match self {
            Binding::Ring(_) => "ring",
            Binding::Ideal(_) => "ideal",
            Binding::Module(_) => "module",
            Binding::Artinian(_) => "artinian",
            Binding::Report(_) => "report",
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Binding::Ring(r) => ring_to_json(r),
            Binding::Ideal(i) => json!({
                "ring": ring_to_json(&QuotientRing::polynomial(i.ring().clone())),
                "generators": i.generators().iter().map(|g| g.display(i.ring())).collect::<Vec<_>>(),
            }),
            Binding::Module(m) => module_to_json(m),
            Binding::Artinian(a) => artinian_to_json(a),
            Binding::Report(r) => r.to_json(),
        }
    }
}

/// Defaults taken from the command line.
#[derive(Debug, Clone)]
pub struct Settings {
    pub field: FieldSpec,
    pub seed: u64,
    pub cases: usize,
    /// Stage window; `None` uses 3 for the suite and 5 for presets.
    pub s_max: Option<u32>,
    pub i_max: usize,
}

impl Default for Settings {
    fn default() -> Self {
        let suite = SuiteConfig::default();
        Settings { field: FieldSpec::Rationals, seed: suite.seed, cases: suite.cases, s_max: None, i_max: suite.i_max }
    }
}

/// One emitted result. `failed` marks a failed verification or comparison.
#[derive(Debug, Clone)]
pub struct Emitted {
    pub json: Value,
    /// Rows for the table rendering.
    pub rows: Vec<Vec<String>>,
    pub failed: bool,
}

pub struct Session {
    pub settings: Settings,
    bindings: BTreeMap<String, Binding>,
    active_ring: Option<String>,
    statements: usize,
}

enum Obj {
    Module(GradedModule),
    Artinian(ArtinianModule),
    Ideal(Ideal),
}

impl Obj {
    fn ring(&self) -> Arc<QuotientRing> {
        match self {
            Obj::Module(m) => m.ring().clone(),
            Obj::Artinian(a) => a.dual_of.ring().clone(),
            Obj::Ideal(i) => QuotientRing::polynomial(i.ring().clone()),
        }
    }
}

fn hilbert_text(t: &BTreeMap<i32, usize>) -> String {
    let parts: Vec<String> = t.iter().filter(|(_, &n)| n > 0).map(|(d, n)| format!("{d}:{n}")).collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ")
    }
}

fn length_text(l: Length) -> String {
    match l {
        Length::Finite(n) => n.to_string(),
        Length::Infinite => "infinite".into(),
    }
}

fn row(k: &str, v: impl ToString) -> Vec<String> {
    vec![k.to_string(), v.to_string()]
}

fn module_result(m: &GradedModule) -> (Value, Vec<Vec<String>>) {
    let mut v = module_summary(m);
    let len = m.length();
    v["kind"] = json!("module");
    // A graded module of length one is a shifted copy of k.
    v["isomorphic_to_k"] = json!(len == Length::Finite(1));
    let mut rows = vec![row("length", length_text(len))];
    if let Some(t) = m.hilbert_table() {
        rows.push(row("hilbert", hilbert_text(&t)));
    }
    rows.push(row("generators", m.minimize().module.rank()));
    rows.push(row("isomorphic to k", if len == Length::Finite(1) { "yes" } else { "no" }));
    (v, rows)
}

fn artinian_result(a: &ArtinianModule) -> (Value, Vec<Vec<String>>) {
    let len = a.length();
    let mut v = json!({
        "kind": "artinian",
        "artinian": artinian_to_json(a),
        "witness": module_summary(&a.dual_of),
        "length": match len { Length::Finite(n) => json!(n), Length::Infinite => json!("infinite") },
        "isomorphic_to_k": len == Length::Finite(1),
    });
    let mut rows = vec![row("length", length_text(len))];
    if let Ok(d) = a.materialize() {
        let u = d.unshifted();
        rows.push(row("hilbert", hilbert_text(&u.hilbert_table())));
        v["module"] = finite_to_json(&u);
    } else {
        rows.push(row("dual of", format!("module with {} generators", a.dual_of.rank())));
    }
    rows.push(row("isomorphic to k", if len == Length::Finite(1) { "yes" } else { "no" }));
    (v, rows)
}

fn stages_result(st: &StageSequence) -> (Value, Vec<Vec<String>>) {
    let mut v = stages_to_json(st);
    v["kind"] = json!("stages");
    let mut rows = vec![row("stage lengths", format!("{:?}", st.lengths()))];
    rows.push(row("transitions injective", st.transitions_injective()));
    match &st.detected_limit {
        Some(l) => {
            rows.push(row("limit", format!("length {} from stage {}", l.module.dim(), l.from_stage)));
            v["isomorphic_to_k"] = json!(l.module.dim() == 1);
        }
        None => rows.push(row("limit", "not detected")),
    }
    (v, rows)
}

fn bounded_json(b: Bounded, bound: usize) -> Value {
    match b {
        Bounded::Exact(n) => json!({ "value": n, "exact": true, "bound": bound }),
        Bounded::AtLeast(n) => json!({ "value": n, "exact": false, "bound": bound }),
    }
}

impl Session {
    pub fn new(settings: Settings) -> Self {
        Session { settings, bindings: BTreeMap::new(), active_ring: None, statements: 0 }
    }

    pub fn get(&self, name: &str) -> Option<&Binding> {
        self.bindings.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.bindings.keys().map(String::as_str)
    }

    /// Every binding, serialized.
    pub fn to_json(&self) -> Value {
        let b: serde_json::Map<String, Value> =
            self.bindings.iter().map(|(k, v)| (k.clone(), json!({ "kind": v.kind(), "value": v.to_json() }))).collect();
        json!({ "bindings": b, "active_ring": self.active_ring })
    }

    /// Parses the whole script, then runs it statement by statement, handing
    /// each emitted result to `sink`. Stops at the first error.
    pub fn run(&mut self, script: &str, sink: &mut dyn FnMut(&Emitted)) -> ScriptResult<bool> {
        let statements = parse_script(script)?;
        let mut all_ok = true;
        for st in &statements {
            for e in self.execute(st)? {
                all_ok &= !e.failed;
                sink(&e);
            }
        }
        Ok(all_ok)
    }

    pub fn execute(&mut self, st: &Statement) -> ScriptResult<Vec<Emitted>> {
        self.statements += 1;
        let header = |v: &mut Value, rows: &mut Vec<Vec<String>>, n: usize| {
            v["statement"] = json!(n);
            v["line"] = json!(st.pos.line);
            v["source"] = json!(st.source);
            rows.insert(0, vec![format!("[{n}] {}", st.source)]);
        };
        let n = self.statements;
        match &st.kind {
            StatementKind::Ring { name, field, variables, ideal } => {
                let field = match field {
                    FieldExpr::Default => self.settings.field,
                    FieldExpr::Given(f) => *f,
                };
                let names: Vec<String> = variables.iter().map(|v| v.name.clone()).collect();
                let poly = PolyRing::from_names(field, names).map_err(|e| ScriptError::from_core(e, variables[0].pos))?;
                let gens = self.parse_polys(&poly, ideal)?;
                let ring = Ideal::new(poly, gens)
                    .and_then(QuotientRing::new)
                    .map_err(|e| ScriptError::from_core(e, st.pos))?;
                self.bind(name, Binding::Ring(ring))?;
                self.active_ring = Some(name.name.clone());
                Ok(Vec::new())
            }
            StatementKind::Ideal { name, gens, over } => {
                let ring = match over {
                    Some(r) => self.ring(r)?,
                    None => self.active()?.ok_or_else(|| ScriptError::new(ErrorCode::UnknownName, name.pos, "no ring declared yet"))?,
                };
                let gens = self.parse_polys(ring.poly(), gens)?;
                let ideal = Ideal::new(ring.poly().clone(), gens).map_err(|e| ScriptError::from_core(e, st.pos))?;
                self.bind(name, Binding::Ideal(ideal))
                    .map(|_| Vec::new())
            }
            StatementKind::Module { name, expr } => {
                let m = self.module(expr)?;
                self.bind(name, Binding::Module(m)).map(|_| Vec::new())
            }
            StatementKind::Artinian { name, expr } => match self.operand(expr)? {
                Obj::Artinian(a) => self.bind(name, Binding::Artinian(a)).map(|_| Vec::new()),
                other => Err(self.type_error(expr.pos, "an artinian module", &other)),
            },
            StatementKind::Compute(c) => {
                let (mut v, mut rows) = self.compute(c, st.pos)?;
                v["op"] = json!(c.name());
                header(&mut v, &mut rows, n);
                Ok(vec![Emitted { json: v, rows, failed: false }])
            }
            StatementKind::Verify { options, bind } => {
                let config = self.suite_config(options, st.pos)?;
                let report = run_suite(&config);
                let ok = report.all_pass();
                let mut v = json!({ "kind": "suite", "all_pass": ok, "report": report.to_json() });
                let mut rows: Vec<Vec<String>> = report.table().lines().map(|l| vec![l.to_string()]).collect();
                rows.push(vec![format!("verdict: {}", if ok { "pass" } else { "fail" })]);
                header(&mut v, &mut rows, n);
                if let Some(b) = bind {
                    self.bind(b, Binding::Report(Box::new(report)))?;
                }
                Ok(vec![Emitted { json: v, rows, failed: !ok }])
            }
            StatementKind::Preset(p) => {
                let config = PresetConfig { field: self.settings.field, s_max: self.settings.s_max.unwrap_or(5), i_max: self.settings.i_max };
                let lines = run_preset(*p, &config).map_err(|e| ScriptError::from_core(e, st.pos))?;
                let name = p.name();
                let mut out = Vec::new();
                for (k, l) in lines.into_iter().enumerate() {
                    let verdict = if l.pass { "pass" } else { "fail" };
                    let mut v = json!({
                        "kind": "preset",
                        "preset": name,
                        "index": k + 1,
                        "case": l.case,
                        "expected": l.expected,
                        "observed": l.observed,
                        "verdict": verdict,
                        "data": l.data,
                    });
                    v["statement"] = json!(n);
                    v["line"] = json!(st.pos.line);
                    let rows = vec![vec![name.clone(), l.case, l.expected, l.observed, verdict.to_string()]];
                    out.push(Emitted { json: v, rows, failed: !l.pass });
                }
                Ok(out)
            }
        }
    }

    fn bind(&mut self, name: &Ident, value: Binding) -> ScriptResult<()> {
        if let Some(old) = self.bindings.get(&name.name) {
            return Err(ScriptError::new(
                ErrorCode::DuplicateName,
                name.pos,
                format!("`{}` is already bound to a {}", name.name, old.kind()),
            ));
        }
        self.bindings.insert(name.name.clone(), value);
        Ok(())
    }

    fn lookup(&self, name: &Ident) -> ScriptResult<&Binding> {
        self.bindings
            .get(&name.name)
            .ok_or_else(|| ScriptError::new(ErrorCode::UnknownName, name.pos, format!("unknown name `{}`", name.name)))
    }

    fn ring(&self, name: &Ident) -> ScriptResult<Arc<QuotientRing>> {
        match self.lookup(name)? {
            Binding::Ring(r) => Ok(r.clone()),
            other => Err(ScriptError::new(
                ErrorCode::TypeMismatch,
                name.pos,
                format!("`{}` is a {}, expected a ring", name.name, other.kind()),
            )),
        }
    }

    fn active(&self) -> ScriptResult<Option<Arc<QuotientRing>>> {
        match &self.active_ring {
            Some(n) => match self.bindings.get(n) {
                Some(Binding::Ring(r)) => Ok(Some(r.clone())),
                _ => Ok(None),
            },
            None => Ok(None),
        }
    }

    fn parse_polys(&self, ring: &PolyRing, texts: &[PolyText]) -> ScriptResult<Vec<Polynomial>> {
        texts
            .iter()
            .map(|t| {
                ring.parse(&t.text).map_err(|e| {
                    ScriptError::new(ErrorCode::MalformedPolynomial, t.pos, format!("malformed polynomial {:?}: {e}", t.text))
                })
            })
            .collect()
    }

    fn type_error(&self, pos: Pos, expected: &str, got: &Obj) -> ScriptError {
        let kind = match got {
            Obj::Module(_) => "finitely generated module",
            Obj::Artinian(_) => "artinian module",
            Obj::Ideal(_) => "ideal",
        };
        ScriptError::new(ErrorCode::TypeMismatch, pos, format!("expected {expected}, found {kind}"))
    }

    fn module(&self, e: &ModuleExpr) -> ScriptResult<GradedModule> {
        match e {
            ModuleExpr::Name(id) => match self.lookup(id)? {
                Binding::Module(m) => Ok(m.clone()),
                other => Err(ScriptError::new(
                    ErrorCode::TypeMismatch,
                    id.pos,
                    format!("`{}` is a {}, expected a module", id.name, other.kind()),
                )),
            },
            ModuleExpr::Free { ring, shape } => {
                let r = self.ring(ring)?;
                let degrees = match shape {
                    FreeShape::Rank(n) => vec![0; *n],
                    FreeShape::Degrees(d) => d.clone(),
                };
                Ok(GradedModule::free(r, degrees))
            }
            ModuleExpr::Cyclic { ring, gens } => {
                let r = self.ring(ring)?;
                let gens = self.parse_polys(r.poly(), gens)?;
                GradedModule::cyclic(r, &gens).map_err(|e| ScriptError::from_core(e, ring.pos))
            }
            ModuleExpr::Presented { ring, degrees, columns } => {
                let r = self.ring(ring)?;
                let mut cols = Vec::new();
                for c in columns {
                    if c.len() != degrees.len() {
                        let pos = c.first().map_or(ring.pos, |p| p.pos);
                        return Err(ScriptError::new(
                            ErrorCode::InvalidArgument,
                            pos,
                            format!("relation column has {} entries but there are {} generators", c.len(), degrees.len()),
                        ));
                    }
                    cols.push(self.parse_polys(r.poly(), c)?);
                }
                GradedModule::from_columns(r, degrees.clone(), &cols).map_err(|e| ScriptError::from_core(e, ring.pos))
            }
        }
    }

    fn operand(&self, op: &Operand) -> ScriptResult<Obj> {
        match &op.kind {
            OperandKind::Module(ModuleExpr::Name(id)) => match self.lookup(id)? {
                Binding::Module(m) => Ok(Obj::Module(m.clone())),
                Binding::Artinian(a) => Ok(Obj::Artinian(a.clone())),
                Binding::Ideal(i) => Ok(Obj::Ideal(i.clone())),
                other => Err(ScriptError::new(
                    ErrorCode::TypeMismatch,
                    id.pos,
                    format!("`{}` is a {}, expected a module or ideal", id.name, other.kind()),
                )),
            },
            OperandKind::Module(e) => Ok(Obj::Module(self.module(e)?)),
            OperandKind::Dual(e) => Ok(Obj::Artinian(artinian_dual(self.module(e)?))),
            OperandKind::Ideal(gens) => {
                let ring = self.active()?.ok_or_else(|| ScriptError::new(ErrorCode::UnknownName, op.pos, "no ring declared yet"))?;
                let gens = self.parse_polys(ring.poly(), gens)?;
                Ideal::new(ring.poly().clone(), gens).map(Obj::Ideal).map_err(|e| ScriptError::from_core(e, op.pos))
            }
        }
    }

    /// Evaluates a module-like operand (finitely generated or artinian).
    fn module_like(&self, op: &Operand) -> ScriptResult<Obj> {
        let o = self.operand(op)?;
        if let Obj::Ideal(_) = o {
            return Err(self.type_error(op.pos, "a module", &o));
        }
        Ok(o)
    }

    fn pair(&self, a: &Operand, b: &Operand) -> ScriptResult<(Obj, Obj)> {
        let (x, y) = (self.module_like(a)?, self.module_like(b)?);
        if !x.ring().same_ring(&y.ring()) {
            return Err(ScriptError::new(ErrorCode::RingMismatch, b.pos, "operands live over different rings"));
        }
        Ok((x, y))
    }

    fn s_max(&self) -> u32 {
        self.settings.s_max.unwrap_or(SuiteConfig::default().s_max)
    }

    fn compute(&self, c: &Computation, pos: Pos) -> ScriptResult<(Value, Vec<Vec<String>>)> {
        let core = |e| ScriptError::from_core(e, pos);
        let stages = |i: usize, a: &ArtinianModule, t: StageTarget, op: StageOp| {
            hard_direction_stages(i, a, &t, op, self.s_max()).map(|s| stages_result(&s)).map_err(core)
        };
        match c {
            Computation::Hom(a, b) => match self.pair(a, b)? {
                (Obj::Module(m), Obj::Module(n)) => hom_fg(&m, &n).map(|h| module_result(&h)).map_err(core),
                (Obj::Artinian(x), Obj::Module(n)) => {
                    let h = hom_artinian_to_fg(&x, &n).map_err(core)?;
                    let (mut v, rows) = module_result(h.hom.module());
                    v["reduction"] = json!({ "n": h.n, "t": h.t, "s": h.s });
                    Ok((v, rows))
                }
                (Obj::Artinian(x), Obj::Artinian(y)) => ext_artinian_pair(0, &x, &y).map(|h| module_result(&h)).map_err(core),
                (Obj::Module(m), Obj::Artinian(y)) => {
                    mixed_ext_tor(0, &m, &y, MixedOp::ExtFgToArtinian).map(|h| artinian_result(&h)).map_err(core)
                }
                _ => unreachable!("operands are modules"),
            },
            Computation::Tensor(a, b) => match self.pair(a, b)? {
                (Obj::Module(m), Obj::Module(n)) => m.tensor(&n).map(|t| module_result(&t)).map_err(core),
                (Obj::Artinian(x), Obj::Artinian(y)) => {
                    let t = tensor_with_artinian(&x, &Partner::Artinian(y)).map_err(core)?;
                    let (mut v, rows) = module_result(t.tensor.module());
                    v["reduction"] = json!({ "t": t.t });
                    Ok((v, rows))
                }
                // N ⊗ D(N') = D(Hom(N, N')).
                (Obj::Module(m), Obj::Artinian(y)) | (Obj::Artinian(y), Obj::Module(m)) => {
                    mixed_ext_tor(0, &m, &y, MixedOp::TorFgWithArtinian).map(|h| artinian_result(&h)).map_err(core)
                }
                _ => unreachable!("operands are modules"),
            },
            Computation::Ext(i, a, b) => match self.pair(a, b)? {
                (Obj::Module(m), Obj::Module(n)) => ext_fg(*i, &m, &n).map(|e| module_result(&e)).map_err(core),
                (Obj::Artinian(x), Obj::Artinian(y)) => ext_artinian_pair(*i, &x, &y).map(|e| module_result(&e)).map_err(core),
                (Obj::Module(m), Obj::Artinian(y)) => {
                    mixed_ext_tor(*i, &m, &y, MixedOp::ExtFgToArtinian).map(|e| artinian_result(&e)).map_err(core)
                }
                (Obj::Artinian(x), Obj::Module(n)) => stages(*i, &x, StageTarget::Noetherian(n), StageOp::ExtArtinianToFg),
                _ => unreachable!("operands are modules"),
            },
            Computation::Tor(i, a, b) => match self.pair(a, b)? {
                (Obj::Module(m), Obj::Module(n)) => tor_fg(*i, &m, &n).map(|t| module_result(&t)).map_err(core),
                (Obj::Module(m), Obj::Artinian(y)) | (Obj::Artinian(y), Obj::Module(m)) => {
                    mixed_ext_tor(*i, &m, &y, MixedOp::TorFgWithArtinian).map(|t| artinian_result(&t)).map_err(core)
                }
                (Obj::Artinian(x), Obj::Artinian(y)) => stages(*i, &x, StageTarget::Artinian(y), StageOp::TorArtinianPair),
                _ => unreachable!("operands are modules"),
            },
            Computation::Stages(kind, i, a, b) => {
                let (x, y) = self.pair(a, b)?;
                let Obj::Artinian(x) = x else {
                    return Err(self.type_error(a.pos, "an artinian module", &x));
                };
                let target = match y {
                    Obj::Module(n) => StageTarget::Noetherian(n),
                    Obj::Artinian(y) => StageTarget::Artinian(y),
                    Obj::Ideal(_) => unreachable!("operands are modules"),
                };
                match (kind, &target) {
                    (StageKind::Ext, StageTarget::Noetherian(_)) => stages(*i, &x, target, StageOp::ExtArtinianToFg),
                    (StageKind::Tor, StageTarget::Artinian(_)) => stages(*i, &x, target, StageOp::TorArtinianPair),
                    (StageKind::Ext, _) => Err(ScriptError::new(ErrorCode::TypeMismatch, b.pos, "ext stages need a finitely generated target")),
                    (StageKind::Tor, _) => Err(ScriptError::new(ErrorCode::TypeMismatch, b.pos, "tor stages need an artinian second argument")),
                }
            }
            Computation::Depth(ideal, m) | Computation::Width(ideal, m) => {
                let target = self.module_like(m)?;
                let ring = target.ring();
                let a = match ideal {
                    None => ring.maximal_ideal(),
                    Some(op) => match self.operand(op)? {
                        Obj::Ideal(i) => {
                            if !QuotientRing::polynomial(i.ring().clone()).same_ring(&QuotientRing::polynomial(ring.poly().clone())) {
                                return Err(ScriptError::new(ErrorCode::RingMismatch, op.pos, "ideal and module live over different rings"));
                            }
                            i
                        }
                        other => return Err(self.type_error(op.pos, "an ideal", &other)),
                    },
                };
                let partner = match target {
                    Obj::Module(n) => Partner::Noetherian(n),
                    Obj::Artinian(x) => Partner::Artinian(x),
                    Obj::Ideal(_) => unreachable!("checked above"),
                };
                let bound = default_bound(&ring);
                let (name, value) = if let Computation::Depth(..) = c {
                    ("depth", depth(&a, &partner, bound).map_err(core)?)
                } else {
                    ("width", width(&a, &partner, bound).map_err(core)?)
                };
                let mut v = bounded_json(value, bound);
                v["kind"] = json!(name);
                Ok((v, vec![row(name, value), row("search bound", bound)]))
            }
            Computation::Betti(m) | Computation::Bass(m) => {
                let i_max = self.settings.i_max;
                let betti = matches!(c, Computation::Betti(_));
                // β_i(D(N)) = μ^i(N) and μ^i(D(N)) = β_i(N).
                let (module, use_betti) = match self.module_like(m)? {
                    Obj::Module(n) => (n, betti),
                    Obj::Artinian(x) => (x.dual_of, !betti),
                    Obj::Ideal(_) => unreachable!("checked above"),
                };
                let (b, mu) = betti_bass_numbers(&module, i_max).map_err(core)?;
                let values = if use_betti { b } else { mu };
                let name = if betti { "betti" } else { "bass" };
                Ok((json!({ "kind": name, "values": values, "i_max": i_max }), vec![row(name, format!("{values:?}"))]))
            }
            Computation::Ass(m) => match self.module_like(m)? {
                Obj::Module(n) => {
                    let p = ass_fg(&n).map_err(core)?;
                    let names: Vec<String> = p.iter().map(ToString::to_string).collect();
                    Ok((json!({ "kind": "ass", "primes": names }), vec![row("ass", names.join(" "))]))
                }
                other => Err(self.type_error(m.pos, "a finitely generated module", &other)),
            },
            Computation::Att(m) => match self.module_like(m)? {
                Obj::Artinian(x) => {
                    let p = att_artinian(&x).map_err(core)?;
                    let names: Vec<String> = p.iter().map(ToString::to_string).collect();
                    Ok((json!({ "kind": "att", "primes": names }), vec![row("att", names.join(" "))]))
                }
                other => Err(self.type_error(m.pos, "an artinian module", &other)),
            },
        }
    }

    fn suite_config(&self, o: &SuiteOptions, pos: Pos) -> ScriptResult<SuiteConfig> {
        let field = match &o.field {
            None | Some(FieldExpr::Default) => self.settings.field,
            Some(FieldExpr::Given(f)) => *f,
        };
        let config = SuiteConfig {
            seed: o.seed.unwrap_or(self.settings.seed),
            cases: o.cases.unwrap_or(self.settings.cases),
            field,
            mutation: o.mutation,
            s_max: o.s_max.unwrap_or_else(|| self.s_max()),
            i_max: o.i_max.unwrap_or(self.settings.i_max),
            checks: o.checks.clone(),
        };
        validate_suite(&config).map_err(|m| ScriptError::new(ErrorCode::InvalidArgument, pos, m))?;
        Ok(config)
    }
}

/// Windows allowed for the randomized suite.
pub fn validate_suite(c: &SuiteConfig) -> Result<(), String> {
    if !(1..=5).contains(&c.s_max) {
        return Err(format!("s_max must be between 1 and 5, got {}", c.s_max));
    }
    if c.i_max > 3 {
        return Err(format!("i_max must be at most 3, got {}", c.i_max));
    }
    let known = check_ids();
    if let Some(bad) = c.checks.iter().find(|id| !known.contains(&id.as_str())) {
        return Err(format!("unknown check `{bad}`"));
    }
    Ok(())
}
