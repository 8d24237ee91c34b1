mod common;

use common::b;
use segsub::harness::{
    benchmark, differential_run, generate_instance, to_csv, BenchAlgo, BenchFamily, BenchSpec, DiffConfig, Fault,
    Instance, InstanceKind, InstanceSpec, CSV_HEADER,
};
use segsub::seglcs::slcs;

#[test]
fn generation_is_deterministic_and_round_trips() {
    let spec = InstanceSpec::new(InstanceKind::Indseglcs, 12, 9, 3, 42);
    let a = generate_instance(&spec).unwrap();
    assert_eq!(a, generate_instance(&spec).unwrap());
    assert_eq!(Instance::from_json(&a.to_json()).unwrap(), a);
    assert_eq!((a.t1.len(), a.t2.len()), (12, 9));
    let other = generate_instance(&InstanceSpec { seed: 43, ..spec }).unwrap();
    assert_ne!(a, other);
}

#[test]
fn similarity_zero_copies_the_text() {
    let spec = InstanceSpec { similarity: Some(0), f1: 3, ..InstanceSpec::new(InstanceKind::Seglcs, 30, 0, 4, 5) };
    let inst = generate_instance(&spec).unwrap();
    assert_eq!(inst.t1, inst.t2);
    assert_eq!(slcs(inst.t1.as_bytes(), inst.t2.as_bytes(), b(3)), 30);
}

#[test]
fn unary_texts() {
    let inst = generate_instance(&InstanceSpec::new(InstanceKind::Seglcs, 5, 9, 1, 0)).unwrap();
    for f in 1..4 {
        assert_eq!(slcs(inst.t1.as_bytes(), inst.t2.as_bytes(), b(f)), 5);
    }
}

#[test]
fn invalid_specs() {
    assert!(generate_instance(&InstanceSpec::new(InstanceKind::Sege, 5, 5, 0, 0)).is_err());
    let too_many_edits = InstanceSpec { similarity: Some(6), ..InstanceSpec::new(InstanceKind::Seglcs, 5, 0, 2, 0) };
    assert!(generate_instance(&too_many_edits).is_err());
}

#[test]
fn clean_differential_run() {
    let report = differential_run(&DiffConfig { count: 2000, seed: 11, ..DiffConfig::default() }).unwrap();
    assert_eq!(report.cases, 2000);
    assert!(report.is_clean(), "{:?}", report.mismatches.first());
}

#[test]
fn empty_run_is_clean() {
    let report = differential_run(&DiffConfig { count: 0, ..DiffConfig::default() }).unwrap();
    assert_eq!((report.cases, report.checks), (0, 0));
    assert!(report.is_clean());
}

#[test]
fn injected_fault_is_detected() {
    let cfg = DiffConfig { count: 300, seed: 3, fault: Some(Fault::BudgetClampOffByOne), ..DiffConfig::default() };
    let report = differential_run(&cfg).unwrap();
    assert!(!report.is_clean());
    assert!(report.mismatches.iter().all(|m| m.check.starts_with("indseglcs")));
}

#[test]
fn reports_are_deterministic() {
    let cfg = DiffConfig { count: 200, seed: 9, fault: Some(Fault::BudgetClampOffByOne), ..DiffConfig::default() };
    let a = serde_json::to_string(&differential_run(&cfg).unwrap()).unwrap();
    let c = serde_json::to_string(&differential_run(&cfg).unwrap()).unwrap();
    assert_eq!(a, c);
}

fn strip_wall_time(csv: &str) -> Vec<String> {
    csv.lines()
        .map(|l| {
            let mut cols: Vec<&str> = l.split(',').collect();
            cols.remove(6);
            cols.join(",")
        })
        .collect()
}

#[test]
fn benchmark_csv_shape_and_determinism() {
    let spec = BenchSpec { sizes: vec![40, 80], repetitions: 2, seed: 1, ..BenchSpec::default() };
    let rows = benchmark(&spec);
    assert_eq!(rows.len(), spec.families.len() * spec.algorithms.len() * 2);
    let csv = to_csv(&rows);
    assert_eq!(csv.lines().next(), Some(CSV_HEADER));
    assert_eq!(strip_wall_time(&csv), strip_wall_time(&to_csv(&benchmark(&spec))));
    assert!(rows.iter().all(|r| r.f == spec.f));
}

#[test]
fn identical_family_single_segment_is_linear() {
    let spec = BenchSpec {
        families: vec![BenchFamily::Identical],
        algorithms: vec![BenchAlgo::Diagonal],
        sizes: vec![100, 400],
        f: 1,
        repetitions: 1,
        ..BenchSpec::default()
    };
    for row in benchmark(&spec) {
        assert_eq!(row.cell_visits, row.n2 as u64);
        assert_eq!(row.ell, row.n1);
    }
}

#[test]
fn no_speedup_without_common_structure() {
    let spec = BenchSpec {
        families: vec![BenchFamily::Random],
        sizes: vec![300],
        f: 4,
        repetitions: 1,
        ..BenchSpec::default()
    };
    let rows = benchmark(&spec);
    let visits = |algo: &str| rows.iter().find(|r| r.algorithm == algo).unwrap().cell_visits as f64;
    // the diagonal solver is within a constant factor of the full table here
    assert!(visits("diagonal") > 0.2 * visits("baseline"));
}
