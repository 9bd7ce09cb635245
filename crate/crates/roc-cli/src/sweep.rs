//! Seeded parameter-grid sweeps with CSV output.
//!
//! Rows appear sorted by grid point then replication; every float is
//! printed with 17 significant digits so values round-trip exactly.

use rayon::prelude::*;
use serde::Deserialize;

use roc_core::analysis::predict_roc_stats;
use roc_core::generators::{gen_er, gen_roc, gen_roc_fixed, RocParams};
use roc_core::motifs::motif_stats;
use roc_core::rng::replication_seed;

use crate::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    /// "roc", "roc-fixed", or "er".
    pub generator: String,
    pub n: OneOrMany<usize>,
    #[serde(default)]
    pub d: Option<OneOrMany<f64>>,
    #[serde(default)]
    pub s: Option<OneOrMany<f64>>,
    #[serde(default)]
    pub q: Option<OneOrMany<f64>>,
    /// Edge probability for "er".
    #[serde(default)]
    pub p: Option<OneOrMany<f64>>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "one")]
    pub replications: usize,
    #[serde(default)]
    pub aggregate: AggregateMode,
}

fn one() -> usize {
    1
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum OneOrMany<T> {
    One(T),
    Many(Vec<T>),
}

impl<T: Clone> OneOrMany<T> {
    fn values(&self) -> Vec<T> {
        match self {
            OneOrMany::One(x) => vec![x.clone()],
            OneOrMany::Many(xs) => xs.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AggregateMode {
    /// Data rows plus mean (and sample-std when replications > 1) rows.
    #[default]
    MeanStd,
    /// Data rows only.
    PerRun,
}

enum Point {
    Roc { params: RocParams, fixed: bool },
    Er { n: usize, p: f64 },
}

struct Measurement {
    seed: u64,
    m: u64,
    c3: u64,
    c4: u64,
    r3: Option<f64>,
    r4: Option<f64>,
    avg_cc: Option<f64>,
}

const COLUMNS: &str = "generator,n,d,s,q,seed,m,c3,c4,r3,r4,avg_cc,pred_r3,pred_r4,pred_cc";

/// Validates every grid point, then generates and measures all
/// replications (in parallel) and renders the CSV.
pub fn run_sweep(config: &SweepConfig) -> Result<String, CliError> {
    if config.replications == 0 {
        return Err(CliError::Usage("replications must be at least 1".into()));
    }
    let points = build_grid(config)?;
    if points.is_empty() {
        return Err(CliError::Usage("the sweep grid is empty".into()));
    }

    let reps = config.replications as u64;
    let jobs: Vec<(usize, u64)> = (0..points.len())
        .flat_map(|pi| (0..reps).map(move |r| (pi, r)))
        .collect();
    let measurements: Vec<Measurement> = jobs
        .par_iter()
        .map(|&(pi, rep)| {
            let seed = replication_seed(config.seed, pi as u64 * reps + rep);
            let graph = match &points[pi] {
                Point::Roc {
                    params,
                    fixed: false,
                } => gen_roc(params, seed).0,
                Point::Roc {
                    params,
                    fixed: true,
                } => gen_roc_fixed(params, seed).expect("validated grid point").0,
                Point::Er { n, p } => gen_er(*n, *p, seed).expect("validated grid point"),
            };
            let stats = motif_stats(&graph);
            Measurement {
                seed,
                m: stats.m,
                c3: stats.c3,
                c4: stats.c4,
                r3: stats.r3,
                r4: stats.r4,
                avg_cc: stats.avg_clustering,
            }
        })
        .collect();

    let mut out = String::new();
    out.push_str(COLUMNS);
    out.push('\n');
    for (pi, point) in points.iter().enumerate() {
        let rows = &measurements[pi * reps as usize..(pi + 1) * reps as usize];
        let prefix = point_prefix(&config.generator, point);
        let predictions = point_predictions(point);
        for row in rows {
            out.push_str(&data_row(&prefix, row, &predictions));
        }
        if config.aggregate == AggregateMode::MeanStd {
            out.push_str(&aggregate_rows(&prefix, rows, &predictions));
        }
    }
    Ok(out)
}

fn build_grid(config: &SweepConfig) -> Result<Vec<Point>, CliError> {
    let mut points = Vec::new();
    match config.generator.as_str() {
        "roc" | "roc-fixed" => {
            let fixed = config.generator == "roc-fixed";
            let missing = |name: &str| {
                CliError::Usage(format!("generator {:?} needs {name}", config.generator))
            };
            let d = config.d.as_ref().ok_or_else(|| missing("d"))?.values();
            let s = config.s.as_ref().ok_or_else(|| missing("s"))?.values();
            let q = config.q.as_ref().ok_or_else(|| missing("q"))?.values();
            for &n in &config.n.values() {
                for &dv in &d {
                    for &sv in &s {
                        for &qv in &q {
                            points.push(Point::Roc {
                                params: RocParams::new(n, dv, sv, qv)?,
                                fixed,
                            });
                        }
                    }
                }
            }
        }
        "er" => {
            let p = config
                .p
                .as_ref()
                .ok_or_else(|| CliError::Usage("generator \"er\" needs p".into()))?
                .values();
            for &n in &config.n.values() {
                for &pv in &p {
                    if !(0.0..=1.0).contains(&pv) {
                        return Err(CliError::Usage(format!(
                            "edge probability must be in [0, 1], got {pv}"
                        )));
                    }
                    points.push(Point::Er { n, p: pv });
                }
            }
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown sweep generator {other:?}; use roc, roc-fixed, or er"
            )))
        }
    }
    Ok(points)
}

/// generator,n,d,s,q for the point; q doubles as p for independent pairs.
fn point_prefix(generator: &str, point: &Point) -> String {
    match point {
        Point::Roc { params, .. } => format!(
            "{generator},{},{},{},{}",
            params.n,
            fmt_float(params.d),
            fmt_float(params.s),
            fmt_float(params.q)
        ),
        Point::Er { n, p } => format!("{generator},{n},,,{}", fmt_float(*p)),
    }
}

fn point_predictions(point: &Point) -> Option<(f64, f64, f64)> {
    match point {
        Point::Roc { params, .. } => {
            let pred = predict_roc_stats(params);
            Some((pred.r3_pred, pred.r4_pred, pred.cc_pred))
        }
        Point::Er { .. } => None,
    }
}

fn data_row(prefix: &str, row: &Measurement, predictions: &Option<(f64, f64, f64)>) -> String {
    format!(
        "{prefix},{},{},{},{},{},{},{},{},{},{}\n",
        row.seed,
        row.m,
        row.c3,
        row.c4,
        fmt_opt(row.r3),
        fmt_opt(row.r4),
        fmt_opt(row.avg_cc),
        fmt_pred(predictions, 0),
        fmt_pred(predictions, 1),
        fmt_pred(predictions, 2),
    )
}

fn aggregate_rows(
    prefix: &str,
    rows: &[Measurement],
    predictions: &Option<(f64, f64, f64)>,
) -> String {
    let columns: [Vec<f64>; 6] = [
        rows.iter().map(|r| r.m as f64).collect(),
        rows.iter().map(|r| r.c3 as f64).collect(),
        rows.iter().map(|r| r.c4 as f64).collect(),
        rows.iter().filter_map(|r| r.r3).collect(),
        rows.iter().filter_map(|r| r.r4).collect(),
        rows.iter().filter_map(|r| r.avg_cc).collect(),
    ];
    let mean_of = |v: &[f64]| -> Option<f64> {
        (!v.is_empty()).then(|| v.iter().sum::<f64>() / v.len() as f64)
    };
    let std_of = |v: &[f64]| -> Option<f64> {
        (v.len() > 1).then(|| {
            let mu = v.iter().sum::<f64>() / v.len() as f64;
            (v.iter().map(|x| (x - mu) * (x - mu)).sum::<f64>() / (v.len() - 1) as f64).sqrt()
        })
    };

    let render = |label: &str, stat: &dyn Fn(&[f64]) -> Option<f64>, preds: &str| {
        let cells: Vec<String> = columns.iter().map(|c| fmt_opt(stat(c))).collect();
        format!("{prefix},{label},{},{preds}\n", cells.join(","))
    };

    let pred_cells = format!(
        "{},{},{}",
        fmt_pred(predictions, 0),
        fmt_pred(predictions, 1),
        fmt_pred(predictions, 2)
    );
    let mut out = render("mean", &mean_of, &pred_cells);
    if rows.len() > 1 {
        out.push_str(&render("std", &std_of, ",,"));
    }
    out
}

/// 17 significant digits: lossless f64 round-trip.
fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map(fmt_float).unwrap_or_default()
}

fn fmt_pred(predictions: &Option<(f64, f64, f64)>, index: usize) -> String {
    match predictions {
        Some(p) => fmt_float([p.0, p.1, p.2][index]),
        None => String::new(),
    }
}
