//! Acceptance suite: one test per criterion, each printing its
//! measured-vs-target report (visible with `--nocapture`).

use roc_core::acceptance::{run_criterion, CRITERIA};

fn run(name: &str) {
    let report = run_criterion(name).expect("criterion registered");
    print!("{report}");
    assert!(report.passed, "{report}");
}

#[test]
fn criterion_01_clustering_reproduction() {
    run("clustering-reproduction");
}

#[test]
fn criterion_02_triangle_ratio() {
    run("triangle-ratio");
}

#[test]
fn criterion_03_four_cycle_ratio() {
    run("four-cycle-ratio");
}

#[test]
fn criterion_04_fit_roundtrip() {
    run("fit-roundtrip");
}

#[test]
fn criterion_05_motif_oracle() {
    run("motif-oracle");
}

#[test]
fn criterion_06_hypercube_four_cycles() {
    run("hypercube-four-cycles");
}

#[test]
fn criterion_07_just_add_triangles_bound() {
    run("just-add-triangles-bound");
}

#[test]
fn criterion_08_block_model_trace_bound() {
    run("block-model-trace-bound");
}

#[test]
fn criterion_09_droc_expected_degree() {
    run("droc-expected-degree");
}

#[test]
fn criterion_10_degree_clustering_profile() {
    run("degree-clustering-profile");
}

#[test]
fn criterion_11_connectivity_thresholds() {
    run("connectivity-thresholds");
}

#[test]
fn criterion_12_determinism() {
    run("determinism");
}

#[test]
fn registry_covers_every_criterion_name() {
    assert_eq!(CRITERIA.len(), 12);
    let unique: std::collections::BTreeSet<_> = CRITERIA.iter().collect();
    assert_eq!(unique.len(), CRITERIA.len());
}
