//! End-to-end tests of the command-line interface: file formats, exit
//! codes, determinism, and agreement with the in-process library values.

use std::path::Path;
use std::process::{Command, Output};

fn roc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_roc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

fn json(output: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(output)).expect("valid JSON")
}

#[test]
fn generate_complete_graph() {
    let out = roc(&["generate", "er", "--n", "5", "--p", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("5 10\n"));
    assert_eq!(text.lines().count(), 11);
}

#[test]
fn hypercube_generation_is_byte_identical() {
    let a = roc(&["generate", "hypercube", "--dim", "3"]);
    let b = roc(&["generate", "hypercube", "--dim", "3"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("8 12\n"));
}

#[test]
fn stats_matches_library_on_generated_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.el");
    let gen = roc(&[
        "generate",
        "roc",
        "--n",
        "3000",
        "--d",
        "10",
        "--s",
        "20",
        "--q",
        "0.3",
        "--seed",
        "7",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert!(gen.status.success());

    let stats_out = roc(&["stats", path.to_str().unwrap()]);
    assert!(stats_out.status.success());
    let value = json(&stats_out);

    let params = roc_core::generators::RocParams::new(3000, 10.0, 20.0, 0.3).unwrap();
    let (graph, _) = roc_core::generators::gen_roc(&params, 7);
    let expect = roc_core::motifs::motif_stats(&graph);
    assert_eq!(value["m"].as_u64().unwrap(), expect.m);
    assert_eq!(value["c3"].as_u64().unwrap(), expect.c3);
    assert_eq!(value["c4"].as_u64().unwrap(), expect.c4);
    assert_eq!(value["r3"].as_f64().unwrap(), expect.r3.unwrap());
    assert_eq!(
        value["avg_clustering"].as_f64().unwrap(),
        expect.avg_clustering.unwrap()
    );

    // the file itself matches the in-process serialization
    let bytes = std::fs::read(&path).unwrap();
    assert_eq!(bytes, roc_core::edgelist::write_edge_list(&graph));
}

#[test]
fn generated_edge_count_tracks_expectation() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.el");
    let out = roc(&[
        "generate",
        "roc",
        "--n",
        "10000",
        "--d",
        "25",
        "--s",
        "30",
        "--q",
        "0.2",
        "--seed",
        "7",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let header = text.lines().next().unwrap();
    let m: f64 = header.split(' ').nth(1).unwrap().parse().unwrap();
    // expected edges n*d/2 * s/(s-1), less a sub-percent collision loss
    let expect = 10_000.0 * 25.0 / 2.0 * (30.0 / 29.0);
    assert!(
        (m - expect).abs() / expect < 0.02,
        "m = {m} vs expected {expect}"
    );
}

#[test]
fn stats_reads_standard_input() {
    use std::io::Write as _;
    let mut child = Command::new(env!("CARGO_BIN_EXE_roc"))
        .args(["stats", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["m"].as_u64(), Some(6));
    assert_eq!(value["c3"].as_u64(), Some(4));
    assert_eq!(value["c4"].as_u64(), Some(3));
}

#[test]
fn stats_reports_nulls_for_empty_graph() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.el");
    std::fs::write(&path, "4 0\n").unwrap();
    let out = roc(&["stats", path.to_str().unwrap()]);
    assert!(out.status.success());
    let value = json(&out);
    assert!(value["r3"].is_null());
    assert!(value["r4"].is_null());
    assert!(value["avg_clustering"].is_null());
}

#[test]
fn stats_parse_error_names_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.el");
    std::fs::write(&path, "3 1\n0 5\n").unwrap();
    let out = roc(&["stats", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2"), "stderr: {err}");
}

#[test]
fn fit_exact_and_infeasible_exit_codes() {
    let out = roc(&["fit", "--r3", "1", "--r4", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let value = json(&out);
    assert_eq!(value["regime"], "exact");
    assert!((value["s"].as_f64().unwrap() - 16.0 / 3.0).abs() < 1e-12);
    assert!((value["q"].as_f64().unwrap() - 0.75).abs() < 1e-12);

    let out = roc(&["fit", "--r3", "3", "--r4", "10"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["regime"], "infeasible");
}

#[test]
fn fit_clustering_pin() {
    let out = roc(&["fit", "--cc", "0.048", "--d", "25", "--pin-q", "0.2"]);
    assert!(out.status.success());
    let value = json(&out);
    assert!((value["s"].as_f64().unwrap() - 30.0).abs() < 1e-12);

    let out = roc(&["fit", "--cc", "0.9", "--d", "25", "--pin-s", "4"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn predict_flags_four_cycle_regime() {
    let out = roc(&[
        "predict", "--n", "10000", "--d", "25", "--s", "30", "--q", "0.2",
    ]);
    assert!(out.status.success());
    let value = json(&out);
    assert!((value["r3_pred"].as_f64().unwrap() - 0.4).abs() < 1e-12);
    assert!((value["r4_pred"].as_f64().unwrap() - 1.8).abs() < 1e-12);
    assert!((value["cc_pred"].as_f64().unwrap() - 0.048).abs() < 1e-12);
    let warnings = value["regime_warnings"].as_array().unwrap();
    assert_eq!(warnings.len(), 1);
    assert_eq!(warnings[0], "four-cycle-degree");
}

#[test]
fn connectivity_report_values() {
    let out = roc(&[
        "report-connectivity",
        "--n",
        "100000",
        "--d",
        "25",
        "--s",
        "30",
        "--q",
        "0.2",
    ]);
    assert!(out.status.success());
    let value = json(&out);
    assert_eq!(value["community_isolation_ok"], true);
    assert_eq!(value["isolated_vertex_lower_ok"], false);
}

#[test]
fn generate_is_deterministic_across_threads() {
    let args = [
        "generate", "roc", "--n", "5000", "--d", "12", "--s", "25", "--q", "0.25", "--seed", "99",
    ];
    let single = roc(&[&args[..], &["--threads", "1"]].concat());
    let quad = roc(&[&args[..], &["--threads", "4"]].concat());
    let again = roc(&args);
    assert!(single.status.success());
    assert_eq!(single.stdout, quad.stdout);
    assert_eq!(single.stdout, again.stdout);

    // ROC_THREADS supplies the --threads default
    let via_env = Command::new(env!("CARGO_BIN_EXE_roc"))
        .args(args)
        .env("ROC_THREADS", "3")
        .output()
        .unwrap();
    assert!(via_env.status.success());
    assert_eq!(single.stdout, via_env.stdout);
}

#[test]
fn community_log_is_written_and_consistent() {
    let dir = tempfile::tempdir().unwrap();
    let graph_path = dir.path().join("g.el");
    let log_path = dir.path().join("g.communities");
    let out = roc(&[
        "generate",
        "roc",
        "--n",
        "2000",
        "--d",
        "8",
        "--s",
        "15",
        "--q",
        "0.3",
        "--seed",
        "3",
        "-o",
        graph_path.to_str().unwrap(),
        "--communities",
        log_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let log = roc_core::generators::read_community_log(&std::fs::read(&log_path).unwrap())
        .expect("valid log");
    let params = roc_core::generators::RocParams::new(2000, 8.0, 15.0, 0.3).unwrap();
    assert_eq!(log.len() as u64, params.community_rounds());
}

#[test]
fn droc_power_law_generation() {
    let out = roc(&[
        "generate",
        "droc",
        "--n",
        "4000",
        "--s",
        "60",
        "--q",
        "0.5",
        "--power-law",
        "2.5",
        "--cap-targets",
        "--seed",
        "11",
    ]);
    assert!(out.status.success());
    let header = stdout(&out).lines().next().unwrap().to_string();
    assert!(header.starts_with("4000 "));
}

#[test]
fn block_model_from_matrix_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.txt");
    std::fs::write(&path, "0 1 0\n1 0 1\n0 1 0\n").unwrap();
    let out = roc(&[
        "generate",
        "block-model",
        "--matrix",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "3 2\n0 1\n1 2\n");
}

#[test]
fn sweep_single_point_layout_and_aggregates() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("sweep.json");
    std::fs::write(
        &config,
        r#"{"generator":"roc","n":2000,"d":8,"s":15,"q":0.3,"seed":5,"replications":1}"#,
    )
    .unwrap();
    let out = roc(&["sweep", "--config", config.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    // header + 1 data row + 1 aggregate (mean) row
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("generator,n,d,s,q,seed,m,"));
    assert!(lines[2].contains(",mean,"));
}

#[test]
fn sweep_aggregates_match_data_rows() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("sweep.json");
    std::fs::write(
        &config,
        r#"{"generator":"er","n":500,"p":[0.05,0.1],"seed":9,"replications":4}"#,
    )
    .unwrap();
    let out = roc(&["sweep", "--config", config.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);

    let mut data: Vec<f64> = Vec::new();
    for line in text.lines().skip(1) {
        let cells: Vec<&str> = line.split(',').collect();
        let seed = cells[5];
        let m: f64 = cells[6].parse().unwrap();
        match seed {
            "mean" => {
                let expect = data.iter().sum::<f64>() / data.len() as f64;
                assert!(
                    (m - expect).abs() <= 1e-12 * expect.abs().max(1.0),
                    "mean {m} vs recomputed {expect}"
                );
            }
            "std" => {
                let mu = data.iter().sum::<f64>() / data.len() as f64;
                let expect = (data.iter().map(|x| (x - mu) * (x - mu)).sum::<f64>()
                    / (data.len() - 1) as f64)
                    .sqrt();
                assert!(
                    (m - expect).abs() <= 1e-12 * expect.abs().max(1.0),
                    "std {m} vs recomputed {expect}"
                );
                data.clear();
            }
            _ => data.push(m),
        }
    }
}

#[test]
fn sweep_rejects_invalid_grid_before_output() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("sweep.json");
    std::fs::write(
        &config,
        r#"{"generator":"roc","n":2000,"d":8,"s":15,"q":[0.3,1.5],"seed":5}"#,
    )
    .unwrap();
    let target = dir.path().join("out.csv");
    let out = roc(&[
        "sweep",
        "--config",
        config.to_str().unwrap(),
        "-o",
        target.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!target.exists(), "fail-fast must not write partial output");
}

#[test]
fn sweep_ratio_law_across_equivalent_grid_points() {
    // three (s, q) points with s*q^2 = 3 all target a unit triangle ratio;
    // the grid is a cartesian product, so pair s with q one sweep at a time
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("sweep.json");
    let mut means = Vec::new();
    for (s, q) in [(12.0, 0.5), (27.0, 1.0 / 3.0), (48.0, 0.25)] {
        std::fs::write(
            &config,
            format!(
                r#"{{"generator":"roc","n":100000,"d":20,"s":{s},"q":{q},"seed":5,"replications":10}}"#
            ),
        )
        .unwrap();
        let out = roc(&["sweep", "--config", config.to_str().unwrap()]);
        assert!(out.status.success());
        let text = stdout(&out);
        let mean_line = text
            .lines()
            .find(|l| l.contains(",mean,"))
            .expect("aggregate row");
        let cells: Vec<&str> = mean_line.split(',').collect();
        let r3: f64 = cells[9].parse().unwrap();
        let pred: f64 = cells[12].parse().unwrap();
        assert!((pred - 1.0).abs() < 1e-9, "s*q^2/3 = 1 by construction");
        means.push(r3);
    }
    for (i, mean) in means.iter().enumerate() {
        assert!(
            (mean - 1.0).abs() < 0.05,
            "grid point {i}: mean r3 {mean} not within 5% of 1.0"
        );
    }
}

#[test]
fn verify_lists_and_runs_single_criterion() {
    let out = roc(&["verify", "--list"]);
    assert!(out.status.success());
    let names = stdout(&out);
    assert_eq!(names.lines().count(), 12);
    assert!(names.contains("fit-roundtrip"));

    let out = roc(&["verify", "--only", "fit-roundtrip"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("PASS fit-roundtrip"));

    let out = roc(&["verify", "--only", "no-such"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_one() {
    let out = roc(&["generate", "er", "--n", "5", "--p", "2"]);
    assert_eq!(out.status.code(), Some(1));

    let out = roc(&["fit", "--r3", "1"]);
    assert_eq!(out.status.code(), Some(1));

    let out = roc(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(1));

    // unsupported format for the command
    let out = roc(&["stats", "-", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_exits_zero() {
    let out = roc(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(Path::new(env!("CARGO_BIN_EXE_roc")).exists());
}
