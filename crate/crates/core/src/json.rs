//! Canonical JSON for rings, modules, artinian modules and stage sequences.
//!
//! Object keys come out sorted, polynomials print in descending degrevlex, so
//! equal values serialize to equal bytes.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::finite::FiniteLengthModule;
use crate::linalg::Matrix;
use crate::matlis::ArtinianModule;
use crate::module::{GradedModule, Length};
use crate::poly::{PolyRing, Polynomial};
use crate::ring::{Ideal, QuotientRing};
use crate::stages::StageSequence;

fn malformed(what: &str) -> Error {
    Error::Malformed(format!("expected {what}"))
}

pub fn ring_to_json(r: &QuotientRing) -> Value {
    let p = r.poly();
    json!({
        "field": p.field.to_string(),
        "variables": p.variables,
        "ideal": r.defining_ideal().generators().iter().map(|g| g.display(p)).collect::<Vec<_>>(),
    })
}

pub fn ring_from_json(v: &Value) -> Result<Arc<QuotientRing>> {
    let field: FieldSpec = v["field"].as_str().ok_or_else(|| malformed("ring.field string"))?.parse()?;
    let vars: Vec<String> = v["variables"]
        .as_array()
        .ok_or_else(|| malformed("ring.variables array"))?
        .iter()
        .map(|x| x.as_str().map(str::to_string).ok_or_else(|| malformed("variable name")))
        .collect::<Result<_>>()?;
    let poly = PolyRing::from_names(field, vars)?;
    let gens: Vec<Polynomial> = v["ideal"]
        .as_array()
        .ok_or_else(|| malformed("ring.ideal array"))?
        .iter()
        .map(|x| poly.parse(x.as_str().ok_or_else(|| malformed("polynomial string"))?))
        .collect::<Result<_>>()?;
    QuotientRing::new(Ideal::new(poly, gens)?)
}

pub fn module_to_json(m: &GradedModule) -> Value {
    let p = m.ring().poly();
    let relations: Vec<Vec<String>> =
        m.relations().iter().map(|r| r.entries(m.rank()).iter().map(|e| e.display(p)).collect()).collect();
    json!({
        "ring": ring_to_json(m.ring()),
        "generator_degrees": m.degrees(),
        "relations": relations,
    })
}

pub fn module_from_json(v: &Value) -> Result<GradedModule> {
    let ring = ring_from_json(&v["ring"])?;
    module_over(&ring, v)
}

/// Parses a module, requiring its ring to equal `ring`.
pub fn module_over(ring: &Arc<QuotientRing>, v: &Value) -> Result<GradedModule> {
    if !v["ring"].is_null() {
        let own = ring_from_json(&v["ring"])?;
        if !own.same_ring(ring) {
            return Err(Error::RingMismatch("module ring differs from expected ring".into()));
        }
    }
    let degrees: Vec<i32> = v["generator_degrees"]
        .as_array()
        .ok_or_else(|| malformed("generator_degrees array"))?
        .iter()
        .map(|d| d.as_i64().map(|d| d as i32).ok_or_else(|| malformed("integer degree")))
        .collect::<Result<_>>()?;
    let cols: Vec<Vec<Polynomial>> = v["relations"]
        .as_array()
        .ok_or_else(|| malformed("relations array"))?
        .iter()
        .map(|col| {
            let col = col.as_array().ok_or_else(|| malformed("relation column array"))?;
            if col.len() != degrees.len() {
                return Err(Error::Malformed("relation column length differs from generator count".into()));
            }
            col.iter().map(|e| ring.poly().parse(e.as_str().ok_or_else(|| malformed("polynomial string"))?)).collect()
        })
        .collect::<Result<_>>()?;
    GradedModule::from_columns(ring.clone(), degrees, &cols)
}

pub fn artinian_to_json(a: &ArtinianModule) -> Value {
    json!({ "dual_of": module_to_json(&a.dual_of), "shift": a.shift })
}

pub fn artinian_from_json(v: &Value) -> Result<ArtinianModule> {
    let dual_of = module_from_json(&v["dual_of"])?;
    let shift = v["shift"].as_i64().unwrap_or(0) as i32;
    Ok(ArtinianModule { dual_of, shift })
}

fn length_json(l: Length) -> Value {
    match l {
        Length::Finite(n) => json!(n),
        Length::Infinite => json!("infinite"),
    }
}

/// Module JSON plus its length and Hilbert table (when finite).
pub fn module_summary(m: &GradedModule) -> Value {
    let hilbert: Value = match m.hilbert_table() {
        Some(t) => t.into_iter().map(|(d, n)| json!([d, n])).collect(),
        None => Value::Null,
    };
    json!({ "module": module_to_json(m), "length": length_json(m.length()), "hilbert": hilbert })
}

pub fn finite_to_json(v: &FiniteLengthModule) -> Value {
    let hilbert: Value = v.hilbert_table().into_iter().map(|(d, n)| json!([d, n])).collect();
    json!({ "module": module_to_json(v.module()), "length": v.dim(), "hilbert": hilbert })
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    (0..m.rows()).map(|r| (0..m.cols()).map(|c| json!(m.get(r, c).to_string())).collect::<Value>()).collect()
}

pub fn stages_to_json(s: &StageSequence) -> Value {
    json!({
        "op": s.op,
        "i": s.i,
        "direction": s.direction,
        "stages": s.stages.iter().map(finite_to_json).collect::<Vec<_>>(),
        "transitions": s.transitions.iter().map(matrix_to_json).collect::<Vec<_>>(),
        "transitions_injective": s.transitions_injective(),
        "detected_limit": s.detected_limit.as_ref().map(|l| json!({
            "from_stage": l.from_stage,
            "limit": finite_to_json(&l.module),
            "certificate": "transitions bijective from this stage on",
        })),
    })
}
