//! One conformance test per grammar production, plus one per error code.

use matlis_cli::ast::*;
use matlis_cli::presets::Preset;
use matlis_cli::{parse_script, ErrorCode, Pos, ScriptError, Session, Settings};
use matlis_core::matlis::Mutation;
use matlis_core::FieldSpec;
use serde_json::Value;

fn parse_one(src: &str) -> StatementKind {
    let mut s = parse_script(src).unwrap_or_else(|e| panic!("{src}: {e}"));
    assert_eq!(s.len(), 1, "{src}");
    s.remove(0).kind
}

/// Runs a script and returns the emitted JSON objects.
fn run(src: &str) -> Vec<Value> {
    let mut out = Vec::new();
    let mut session = Session::new(Settings::default());
    session.run(src, &mut |e| out.push(e.json.clone())).unwrap_or_else(|e| panic!("{src}: {e}"));
    out
}

fn run_err(src: &str) -> ScriptError {
    let mut session = Session::new(Settings::default());
    session.run(src, &mut |_| {}).expect_err(src)
}

const KX: &str = "ring R = quotient(q, [x], ideal());";
const KXY: &str = "ring R = quotient(q, [x, y], ideal());";

// script

#[test]
fn script_empty_and_comments() {
    assert!(parse_script("").unwrap().is_empty());
    assert!(parse_script("  # nothing\n// here\n").unwrap().is_empty());
    assert!(run("").is_empty());
}

#[test]
fn script_statements_in_order_last_semicolon_optional() {
    let s = parse_script("ring R = quotient([x], ideal()); module M = free(R, 1)").unwrap();
    assert_eq!(s.len(), 2);
    assert_eq!(s[1].pos, Pos { line: 1, column: 34 });
    assert_eq!(s[1].source, "module M = free(R, 1)");
}

// ring, field, ideal_lit

#[test]
fn ring_statement() {
    let StatementKind::Ring { name, field, variables, ideal } = parse_one("ring R = quotient(rationals, [x, y], ideal(x*y, y^2));") else {
        panic!()
    };
    assert_eq!(name.name, "R");
    assert_eq!(field, FieldExpr::Given(FieldSpec::Rationals));
    assert_eq!(variables.iter().map(|v| v.name.as_str()).collect::<Vec<_>>(), ["x", "y"]);
    assert_eq!(ideal.iter().map(|p| p.text.as_str()).collect::<Vec<_>>(), ["x*y", "y^2"]);
}

#[test]
fn field_forms() {
    let f = |src: &str| match parse_one(&format!("ring R = quotient({src}[x], ideal());")) {
        StatementKind::Ring { field, .. } => field,
        _ => unreachable!(),
    };
    let p7 = FieldExpr::Given(FieldSpec::prime(7).unwrap());
    assert_eq!(f("rationals, "), FieldExpr::Given(FieldSpec::Rationals));
    assert_eq!(f("q, "), FieldExpr::Given(FieldSpec::Rationals));
    assert_eq!(f("Q, "), FieldExpr::Given(FieldSpec::Rationals));
    assert_eq!(f("p:7, "), p7);
    assert_eq!(f("prime(7), "), p7);
    assert_eq!(f("default, "), FieldExpr::Default);
    assert_eq!(f(""), FieldExpr::Default);
    // The default field comes from the settings.
    let mut s = Session::new(Settings { field: FieldSpec::prime(5).unwrap(), ..Settings::default() });
    s.run("ring R = quotient([x], ideal());", &mut |_| {}).unwrap();
    assert_eq!(s.to_json()["bindings"]["R"]["value"]["field"], "p:5");
}

#[test]
fn ideal_literal_empty_and_nested() {
    let StatementKind::Ring { ideal, .. } = parse_one("ring R = quotient(q, [x, y], ideal());") else { panic!() };
    assert!(ideal.is_empty());
    let StatementKind::Ring { ideal, .. } = parse_one("ring R = quotient(q, [x, y], ideal((x + y)^2, 1/2*x*y));") else { panic!() };
    assert_eq!(ideal[0].text, "(x + y)^2");
    assert_eq!(ideal[1].text, "1/2*x*y");
}

// ideal

#[test]
fn ideal_statement_active_ring_and_over() {
    assert!(matches!(parse_one("ideal I = ideal(x, y);"), StatementKind::Ideal { over: None, .. }));
    let StatementKind::Ideal { over: Some(r), .. } = parse_one("ideal I = ideal(x) over S;") else { panic!() };
    assert_eq!(r.name, "S");
    let out = run(&format!("{KXY} ring S = quotient(q, [x], ideal()); ideal I = ideal(x) over R; compute depth(I, free(R, 1));"));
    assert_eq!(out[0]["value"], 1);
    assert_eq!(out[0]["exact"], true);
}

// module, module_expr, column, int_list

#[test]
fn module_statement_and_free() {
    let StatementKind::Module { expr: ModuleExpr::Free { shape, .. }, .. } = parse_one("module M = free(R, 2);") else { panic!() };
    assert_eq!(shape, FreeShape::Rank(2));
    let StatementKind::Module { expr: ModuleExpr::Free { shape, .. }, .. } = parse_one("module M = free(R, [0, -1]);") else { panic!() };
    assert_eq!(shape, FreeShape::Degrees(vec![0, -1]));
    let out = run(&format!("{KX} module M = free(R, [0, 1]); compute hom(cyclic(R, x), M);"));
    // Hom(k, R^2) = 0 over k[x].
    assert_eq!(out[0]["length"], 0);
}

#[test]
fn module_expr_cyclic() {
    let StatementKind::Module { expr: ModuleExpr::Cyclic { gens, .. }, .. } = parse_one("module M = cyclic(R, x^2, x*y);") else { panic!() };
    assert_eq!(gens.len(), 2);
    let StatementKind::Module { expr: ModuleExpr::Cyclic { gens, .. }, .. } = parse_one("module M = cyclic(R);") else { panic!() };
    assert!(gens.is_empty());
    let out = run(&format!("{KXY} compute tensor(cyclic(R, x^2, x*y, y^2), cyclic(R, x, y));"));
    assert_eq!(out[0]["length"], 1);
}

#[test]
fn module_expr_presented_with_columns() {
    let src = "module M = module(R, [0, 1], [[x, -1], [y^2, 0]]);";
    let StatementKind::Module { expr: ModuleExpr::Presented { degrees, columns, .. }, .. } = parse_one(src) else { panic!() };
    assert_eq!(degrees, [0, 1]);
    assert_eq!(columns.len(), 2);
    assert_eq!(columns[0].iter().map(|p| p.text.as_str()).collect::<Vec<_>>(), ["x", "-1"]);
    // e1 = x e0 and y^2 e0 = 0, so M = R/(y^2) and M ⊗ R/(x^3, y^3) = R/(x^3, y^2).
    let out = run(&format!("{KXY} module N = module(R, [0, 1], [[x, -1], [y^2, 0]]); compute tensor(N, cyclic(R, x^3, y^3));"));
    assert_eq!(out[0]["length"], 6);
    // A relation-free presentation is free.
    let out = run(&format!("{KX} compute tor(0, module(R, [0], []), cyclic(R, x));"));
    assert_eq!(out[0]["length"], 1);
}

#[test]
fn module_expr_name() {
    let out = run(&format!("{KX} module M = cyclic(R, x^2); module N = M; compute hom(N, M);"));
    assert_eq!(out[0]["length"], 2);
}

// artinian

#[test]
fn artinian_statement_dual_and_name() {
    let StatementKind::Artinian { expr, .. } = parse_one("artinian E = dual(free(R, 1));") else { panic!() };
    assert!(matches!(expr.kind, OperandKind::Dual(ModuleExpr::Free { .. })));
    let StatementKind::Artinian { expr, .. } = parse_one("artinian F = E;") else { panic!() };
    assert!(matches!(expr.kind, OperandKind::Module(ModuleExpr::Name(_))));
    let out = run(&format!("{KX} artinian A = dual(cyclic(R, x^3)); artinian B = A; compute tensor(A, B);"));
    assert_eq!(out[0]["length"], 3);
}

// compute and each computation

#[test]
fn compute_hom_all_argument_kinds() {
    let pre = format!("{KX} module N = cyclic(R, x^2); artinian E = dual(free(R, 1)); artinian A = dual(N);");
    let out = run(&format!("{pre} compute hom(N, N); compute hom(A, N); compute hom(A, E); compute hom(N, E);"));
    assert_eq!(out[0]["length"], 2);
    // Hom(D(R/x^2), R/x^2) = Hom(D(N), N) has length 2.
    assert_eq!(out[1]["length"], 2);
    // Hom(D(N), E) = N.
    assert_eq!(out[2]["length"], 2);
    // Hom(N, E) = D(N), artinian.
    assert_eq!(out[3]["kind"], "artinian");
    assert_eq!(out[3]["length"], 2);
}

#[test]
fn compute_tensor_of_hull_square() {
    let out = run("ring R = quotient(rationals, [x,y], ideal(x*y, y^2)); artinian E = dual(free(R,1)); compute tensor(E, E);");
    assert_eq!(out.len(), 1);
    assert_eq!(out[0]["op"], "tensor");
    assert_eq!(out[0]["length"], 1);
    assert_eq!(out[0]["isomorphic_to_k"], true);
    // Tensor of an artinian with a noetherian module is artinian; E is
    // divisible, so E ⊗ R/x^2 = 0 while D(R/x^3) ⊗ R/x^2 = D(R/x^2).
    let out = run(&format!("{KX} compute tensor(dual(free(R, 1)), cyclic(R, x^2)); compute tensor(dual(cyclic(R, x^3)), cyclic(R, x^2));"));
    assert_eq!(out[0]["kind"], "artinian");
    assert_eq!(out[0]["length"], 0);
    assert_eq!(out[1]["length"], 2);
}

#[test]
fn compute_ext_of_regular_quotients() {
    let out = run("ring R = quotient(rationals, [x], ideal()); compute ext(1, dual(cyclic(R, x)), dual(cyclic(R, x)));");
    assert_eq!(out[0]["length"], 1);
    assert_eq!(out[0]["isomorphic_to_k"], true);
    // Ext^1(k, R) = k over k[x]; Ext with an artinian first and noetherian
    // second argument is reported as stages.
    let out = run(&format!("{KX} compute ext(1, cyclic(R, x), free(R, 1)); compute ext(1, dual(cyclic(R, x)), cyclic(R, x));"));
    assert_eq!(out[0]["length"], 1);
    assert_eq!(out[1]["kind"], "stages");
    assert_eq!(out[1]["detected_limit"]["limit"]["length"], 1);
}

#[test]
fn compute_tor() {
    let out = run(&format!(
        "{KX} compute tor(1, cyclic(R, x), cyclic(R, x)); compute tor(1, cyclic(R, x), dual(cyclic(R, x))); compute tor(1, dual(free(R, 1)), dual(free(R, 1)));"
    ));
    assert_eq!(out[0]["length"], 1);
    assert_eq!(out[1]["kind"], "artinian");
    assert_eq!(out[1]["length"], 1);
    assert_eq!(out[2]["kind"], "stages");
}

#[test]
fn compute_depth_and_width() {
    let out = run(&format!(
        "{KXY} ideal I = ideal(x); compute depth(free(R, 1)); compute depth(I, free(R, 1)); compute width(dual(free(R, 1))); compute depth(ideal(x, y), cyclic(R, x));"
    ));
    assert_eq!(out[0]["value"], 2);
    assert_eq!(out[1]["value"], 1);
    assert_eq!(out[2]["value"], 2);
    assert_eq!(out[3]["value"], 1);
    assert!(matches!(parse_one("compute width(I, M);"), StatementKind::Compute(Computation::Width(Some(_), _))));
}

#[test]
fn compute_betti_and_bass() {
    let out = run(&format!("{KXY} compute betti(cyclic(R, x, y)); compute bass(free(R, 1)); compute betti(dual(free(R, 1)));"));
    assert_eq!(out[0]["values"], serde_json::json!([1, 2, 1, 0]));
    assert_eq!(out[1]["values"], serde_json::json!([0, 0, 1, 0]));
    // β_i(E) = μ^i(R).
    assert_eq!(out[2]["values"], out[1]["values"]);
}

#[test]
fn compute_ass_and_att() {
    let out = run(&format!("{KXY} module N = cyclic(R, x^2, x*y); compute ass(N); compute att(dual(N));"));
    assert_eq!(out[0]["primes"], serde_json::json!(["(x)", "(x, y)"]));
    assert_eq!(out[1]["primes"], out[0]["primes"]);
}

#[test]
fn compute_stages_ext_and_tor() {
    let StatementKind::Compute(Computation::Stages(StageKind::Tor, 1, _, _)) = parse_one("compute stages(tor, 1, E, E);") else { panic!() };
    let out = run(&format!("{KX} artinian E = dual(free(R, 1)); compute stages(tor, 1, E, E); compute stages(ext, 1, E, free(R, 1));"));
    assert_eq!(out[0]["stages"].as_array().unwrap().len(), 3);
    assert_eq!(out[0]["transitions_injective"], true);
    assert_eq!(out[1]["direction"], "inverse");
}

// operand

#[test]
fn operand_forms() {
    let StatementKind::Compute(Computation::Depth(Some(i), m)) = parse_one("compute depth(ideal(x), dual(cyclic(R, x)));") else { panic!() };
    assert!(matches!(i.kind, OperandKind::Ideal(_)));
    assert!(matches!(m.kind, OperandKind::Dual(ModuleExpr::Cyclic { .. })));
    assert_eq!(m.pos, Pos { line: 1, column: 25 });
}

// verify, option

#[test]
fn verify_suite_plain_and_bound() {
    let StatementKind::Verify { options, bind } = parse_one("verify suite;") else { panic!() };
    assert_eq!(options, SuiteOptions::default());
    assert!(bind.is_none());
    let mut s = Session::new(Settings { cases: 1, ..Settings::default() });
    let mut out = Vec::new();
    assert!(s.run("verify suite as report;", &mut |e| out.push(e.json.clone())).unwrap());
    assert_eq!(out[0]["all_pass"], true);
    assert!(s.get("report").is_some());
}

#[test]
fn verify_suite_options() {
    let src = "verify suite(seed = 7, cases = 2, s_max = 2, i_max = 1, field = p:101, checks = [ext-duality, theta-isomorphism], mutation = ext-index-shift);";
    let StatementKind::Verify { options, .. } = parse_one(src) else { panic!() };
    assert_eq!(options.seed, Some(7));
    assert_eq!(options.cases, Some(2));
    assert_eq!(options.s_max, Some(2));
    assert_eq!(options.i_max, Some(1));
    assert_eq!(options.field, Some(FieldExpr::Given(FieldSpec::prime(101).unwrap())));
    assert_eq!(options.checks, ["ext-duality", "theta-isomorphism"]);
    assert_eq!(options.mutation, Some(Mutation::ExtIndexShift));
    let out = run("verify suite(seed = 7, cases = 2, checks = [ext-duality]);");
    let records = out[0]["report"]["records"].as_array().unwrap();
    assert_eq!(records.len(), 2);
    assert!(records.iter().all(|r| r["check"] == "ext-duality"));
}

// preset

#[test]
fn preset_statement() {
    assert_eq!(parse_one("preset example-6-5;"), StatementKind::Preset(Preset::HullSquare));
    assert_eq!(parse_one("preset example-6-5-general(2, 1, 3);"), StatementKind::Preset(Preset::HullSquareFamily { a: 2, b: 1, c: 3 }));
    let out = run("preset example-6-5-general(2,1,3);");
    assert!(out.iter().all(|l| l["verdict"] == "pass"));
    assert!(out[0]["expected"].as_str().unwrap().contains("length 4"));
}

// error codes

#[test]
fn error_syntax() {
    let e = parse_script("ring R = quotient(q, [x] ideal());").unwrap_err();
    assert_eq!(e.code, ErrorCode::Syntax);
    assert_eq!(e.pos, Pos { line: 1, column: 26 });
    assert!(e.to_string().starts_with("1:26: error[E01]"));
    assert_eq!(parse_script("compute frobenius(M);").unwrap_err().code, ErrorCode::Syntax);
    assert_eq!(parse_script("bogus;").unwrap_err().code, ErrorCode::Syntax);
}

#[test]
fn error_unknown_name() {
    let e = run_err(&format!("{KX}\ncompute hom(M, M);"));
    assert_eq!(e.code, ErrorCode::UnknownName);
    assert_eq!(e.pos, Pos { line: 2, column: 13 });
}

#[test]
fn error_duplicate_name() {
    assert_eq!(run_err(&format!("{KX} module R = free(R, 1);")).code, ErrorCode::DuplicateName);
}

#[test]
fn error_type_mismatch() {
    assert_eq!(run_err(&format!("{KX} compute hom(R, R);")).code, ErrorCode::TypeMismatch);
    assert_eq!(run_err(&format!("{KX} compute att(free(R, 1));")).code, ErrorCode::TypeMismatch);
    assert_eq!(run_err(&format!("{KX} module M = free(M2, 1);")).code, ErrorCode::UnknownName);
}

#[test]
fn error_ring_mismatch() {
    let e = run_err("ring R = quotient(q, [x], ideal()); ring S = quotient(q, [y], ideal()); compute hom(free(R, 1), free(S, 1));");
    assert_eq!(e.code, ErrorCode::RingMismatch);
}

#[test]
fn error_scope() {
    let e = run_err("ring R = quotient(q, [x, y], ideal(x^2 + y^2)); compute ass(free(R, 1));");
    assert_eq!(e.code, ErrorCode::Scope);
}

#[test]
fn error_malformed_polynomial() {
    let e = run_err("ring R = quotient(q, [x], ideal(x^^2));");
    assert_eq!(e.code, ErrorCode::MalformedPolynomial);
    assert_eq!(e.pos, Pos { line: 1, column: 33 });
    assert_eq!(run_err(&format!("{KX} module M = cyclic(R, z);")).code, ErrorCode::MalformedPolynomial);
}

#[test]
fn error_invalid_argument() {
    assert_eq!(parse_script("preset example-6-5-general(1, 2, 2);").unwrap_err().code, ErrorCode::InvalidArgument);
    assert_eq!(parse_script("ring R = quotient(p:9, [x], ideal());").unwrap_err().code, ErrorCode::InvalidArgument);
    assert_eq!(run_err("verify suite(checks = [no-such-check]);").code, ErrorCode::InvalidArgument);
    assert_eq!(run_err("verify suite(s_max = 9);").code, ErrorCode::InvalidArgument);
    assert_eq!(run_err(&format!("{KX} module M = module(R, [0, 0], [[x]]);")).code, ErrorCode::InvalidArgument);
    // Inhomogeneous input.
    assert_eq!(run_err("ring R = quotient(q, [x], ideal(x^2 + x));").code, ErrorCode::InvalidArgument);
}

#[test]
fn error_codes_are_distinct() {
    use ErrorCode::*;
    let all = [Syntax, UnknownName, DuplicateName, TypeMismatch, RingMismatch, Scope, MalformedPolynomial, InvalidArgument, Computation];
    let mut codes: Vec<&str> = all.iter().map(|c| c.as_str()).collect();
    codes.sort();
    codes.dedup();
    assert_eq!(codes.len(), all.len());
}
