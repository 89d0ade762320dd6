//! Golden files, determinism and registry coverage for the randomized suite.
//!
//! Set `MATLIS_UPDATE_GOLDEN=1` to rewrite the golden files.

use std::path::PathBuf;

use matlis_core::invariants::Verdict;
use matlis_core::matlis::Mutation;
use matlis_core::suite::{check_ids, run_suite, IdealKind, Instance, InstanceSpec, ModuleProfile, RingProfile, SuiteConfig, CHECKS};
use matlis_core::FieldSpec;

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn compare_golden(name: &str, actual: &str) {
    let path = golden(name);
    if std::env::var_os("MATLIS_UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, actual).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert_eq!(actual, expected, "golden mismatch for {name}");
}

fn f32003() -> FieldSpec {
    FieldSpec::prime(32003).unwrap()
}

#[test]
fn seed_zero_instance_is_pinned() {
    let spec = InstanceSpec::for_case(0, 0, f32003());
    assert_eq!(spec.ring.kind, IdealKind::Monomial);
    let inst = Instance::generate(&spec).unwrap();
    compare_golden("instance_seed0.json", &(serde_json::to_string_pretty(&inst.to_json()).unwrap() + "\n"));
}

#[test]
fn single_case_report_is_pinned() {
    let report = run_suite(&SuiteConfig { cases: 1, ..SuiteConfig::default() });
    assert!(report.all_pass());
    compare_golden("report_cases1.json", &(serde_json::to_string_pretty(&report.to_json()).unwrap() + "\n"));
}

#[test]
fn same_seed_same_report() {
    let config = SuiteConfig { seed: 42, cases: 25, ..SuiteConfig::default() };
    let a = run_suite(&config).to_json();
    let b = run_suite(&config).to_json();
    assert_eq!(a, b);
}

#[test]
fn seed_42_passes() {
    let report = run_suite(&SuiteConfig { seed: 42, cases: 25, ..SuiteConfig::default() });
    let fails: Vec<_> = report.failures().map(|r| (r.check.clone(), r.detail.clone())).collect();
    assert!(fails.is_empty(), "{fails:?}");
    for id in check_ids() {
        let s = report.summary[id];
        assert_eq!(s.pass + s.fail + s.scope, 25, "{id} not run on every case");
    }
}

#[test]
fn same_seed_same_instance() {
    for case in 0..10 {
        let spec = InstanceSpec::for_case(9, case, FieldSpec::Rationals);
        let a = Instance::generate(&spec).unwrap().to_json();
        let b = Instance::generate(&spec).unwrap().to_json();
        assert_eq!(a, b);
    }
}

#[test]
fn profile_bounds_hold() {
    for case in 0..40 {
        let spec = InstanceSpec::for_case(3, case, f32003());
        let inst = Instance::generate(&spec).unwrap();
        assert!((1..=3).contains(&inst.ring.nvars()));
        assert!(inst.ring.defining_ideal().is_proper());
        for g in inst.ring.defining_ideal().generators() {
            assert!(g.is_homogeneous() && g.homogeneous_degree().unwrap() <= 3);
        }
        for (_, class, m) in inst.modules() {
            assert!(m.rank() <= 3);
            assert!(m.relation_degrees().iter().all(|&d| d <= 4));
            if class == "finite-length" {
                assert!(m.length().finite().is_some());
            }
        }
        // Positive-dimensional rings get an infinite-length module.
        let ring_infinite = matlis_core::module::GradedModule::free(inst.ring.clone(), vec![0]).length().finite().is_none();
        if ring_infinite {
            assert!(inst.modules().iter().any(|(_, _, m)| m.length().finite().is_none()));
        }
    }
}

#[test]
fn zero_ideal_profile_is_polynomial_ring() {
    let spec = InstanceSpec {
        seed: 11,
        field: FieldSpec::Rationals,
        ring: RingProfile { variables: Some(1), kind: IdealKind::Zero, max_degree: 3 },
        modules: ModuleProfile { max_power: 3, max_relation_degree: 2 },
    };
    let inst = Instance::generate(&spec).unwrap();
    assert_eq!(inst.ring.display(), matlis_core::QuotientRing::polynomial(inst.ring.poly().clone()).display());
}

/// Families of results the suite must cover, by tag.
const REQUIRED_TAGS: &[&str] = &[
    "finite-length",
    "ext-artinian-fg",
    "tor-artinian",
    "hom-length-bound",
    "tensor-length-bound",
    "hom-reduction",
    "tensor-reduction",
    "bass-betti",
    "ext-duality",
    "theta",
    "tensor-vanishing",
    "tensor-vanishing-fg",
    "hom-vanishing",
    "hom-vanishing-local",
    "ext-below-depth",
    "tor-below-depth",
    "depth-formula",
    "ass-of-hom",
    "att-of-tensor",
    "att-equals-ass",
    "depth-width",
    "nonzerodivisor",
];

#[test]
fn registry_covers_every_family() {
    let tags: Vec<&str> = CHECKS.iter().map(|c| c.tag).collect();
    for t in REQUIRED_TAGS {
        assert!(tags.contains(t), "no check tagged {t}");
    }
    for t in &tags {
        assert!(REQUIRED_TAGS.contains(t), "check tag {t} is not a known family");
    }
    let report = run_suite(&SuiteConfig { cases: 1, ..SuiteConfig::default() });
    assert!(report.records.iter().all(|r| REQUIRED_TAGS.contains(&r.tag.as_str())));
    assert_eq!(report.records.len(), CHECKS.len());
}

#[test]
fn failing_records_replay() {
    let config = SuiteConfig {
        cases: 10,
        mutation: Some(Mutation::SkipTranspose),
        checks: vec!["bass-betti-duality".into()],
        ..SuiteConfig::default()
    };
    let report = run_suite(&config);
    let failure = report.failures().next().expect("mutation is detected");
    let inst = Instance::from_json(failure.instance.as_ref().unwrap()).unwrap();
    assert_eq!(&inst.to_json(), failure.instance.as_ref().unwrap());
    // Without the mutation the same instance passes.
    let clean = run_suite(&SuiteConfig { mutation: None, ..config });
    let again = clean.records.iter().find(|r| r.seed == failure.seed).unwrap();
    assert_eq!(again.verdict, Verdict::Pass);
}

#[test]
fn each_mutation_breaks_its_check() {
    for (m, id) in [
        (Mutation::SkipTranspose, "bass-betti-duality"),
        (Mutation::StabilizationMinusOne, "hom-reduction"),
        (Mutation::ExtIndexShift, "ext-duality"),
    ] {
        let report = run_suite(&SuiteConfig { cases: 20, mutation: Some(m), checks: vec![id.into()], ..SuiteConfig::default() });
        assert!(report.summary[id].fail > 0, "{m:?} went unnoticed by {id}");
    }
}

#[test]
fn table_lists_every_check() {
    let report = run_suite(&SuiteConfig { cases: 1, ..SuiteConfig::default() });
    let table = report.table();
    for id in check_ids() {
        assert!(table.contains(id));
    }
}
