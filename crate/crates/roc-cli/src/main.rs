//! `roc`: generate community-model graphs, compute motif statistics, fit
//! parameters, sweep grids, and run the verification suite.

mod sweep;

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use roc_core::analysis::{
    connectivity_report, fit_roc, fit_roc_clustering, predict_roc_stats, predict_roc_stats_exact,
    ClusteringPin, Regime,
};
use roc_core::edgelist::{read_edge_list, write_edge_list};
use roc_core::generators::{
    cap_targets, gen_block_model, gen_droc, gen_er, gen_hypercube, gen_just_add_triangles, gen_roc,
    gen_roc_fixed, sample_power_law, write_community_log, BlockModelSpec, CommunityLog, DrocSpec,
    RocParams,
};
use roc_core::motifs::motif_stats;

#[derive(Parser)]
#[command(
    name = "roc",
    about = "Random overlapping communities: graph generation, motif statistics, and fitting",
    version
)]
struct Cli {
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true, env = "ROC_THREADS")]
    threads: Option<usize>,

    /// Base seed for all randomness.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Replications per parameter point (sweep only).
    #[arg(long, global = true)]
    replications: Option<usize>,

    /// Output file (defaults to standard output).
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    /// Output format; each command has a single supported format.
    #[arg(long, global = true)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
    Edgelist,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph and write its edge list.
    Generate {
        #[command(subcommand)]
        model: Model,
    },
    /// Motif statistics of an edge-list file as JSON.
    Stats {
        /// Edge-list path, or '-' for standard input.
        input: String,
    },
    /// Fit model parameters from target ratios or a target clustering.
    Fit(FitArgs),
    /// Closed-form predictions for a parameter point.
    Predict {
        #[command(flatten)]
        params: RocArgs,
        /// Also evaluate the finite-size clustering series.
        #[arg(long)]
        exact_series: bool,
    },
    /// Evaluate the connectivity-threshold inequalities.
    ReportConnectivity {
        #[command(flatten)]
        params: RocArgs,
        /// Offset c in the isolated-vertex lower inequality.
        #[arg(long, default_value_t = 0.0)]
        c: f64,
        /// Slack in the isolated-vertex upper inequality.
        #[arg(long, default_value_t = 0.5)]
        epsilon: f64,
    },
    /// Run a seeded parameter grid and emit CSV.
    Sweep {
        /// JSON sweep configuration.
        #[arg(long)]
        config: PathBuf,
    },
    /// Run the acceptance criteria with pinned seeds.
    Verify {
        /// Run a single named criterion.
        #[arg(long)]
        only: Option<String>,
        /// List criterion names and exit.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Subcommand)]
enum Model {
    /// Overlapping communities with Bernoulli membership.
    Roc {
        #[command(flatten)]
        params: RocArgs,
        /// Also write the community log to this path.
        #[arg(long)]
        communities: Option<PathBuf>,
    },
    /// Fixed-membership variant: exactly d/(s*q) communities per vertex.
    RocFixed {
        #[command(flatten)]
        params: RocArgs,
        #[arg(long)]
        communities: Option<PathBuf>,
    },
    /// Degree-targeted communities.
    Droc {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: f64,
        #[arg(long)]
        q: f64,
        /// File with one target degree per line.
        #[arg(long, conflicts_with = "power_law")]
        targets_file: Option<PathBuf>,
        /// Draw targets from a power law with this exponent (> 2).
        #[arg(long)]
        power_law: Option<f64>,
        /// Seed for the target draw (defaults to the main seed).
        #[arg(long)]
        targets_seed: Option<u64>,
        /// Clamp targets until they satisfy max t^2 <= s*d/q.
        #[arg(long)]
        cap_targets: bool,
        #[arg(long)]
        communities: Option<PathBuf>,
    },
    /// Independent pairs at probability p.
    Er {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
    },
    /// Union of t triangles on random vertex triples.
    JustAddTriangles {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: u64,
    },
    /// Independent pairs with a per-pair probability matrix.
    #[command(name = "block-model")]
    Block {
        /// Text file: n rows of n space-separated probabilities.
        #[arg(long)]
        matrix: PathBuf,
    },
    /// The dim-dimensional hypercube (deterministic fixture).
    Hypercube {
        #[arg(long)]
        dim: u32,
    },
}

#[derive(Args)]
struct RocArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: f64,
    #[arg(long)]
    s: f64,
    #[arg(long)]
    q: f64,
}

impl RocArgs {
    fn build(&self) -> Result<RocParams, CliError> {
        Ok(RocParams::new(self.n, self.d, self.s, self.q)?)
    }
}

#[derive(Args)]
#[group(multiple = true)]
struct FitArgs {
    /// Target triangle-to-edge ratio.
    #[arg(long)]
    r3: Option<f64>,
    /// Target four-cycle-to-edge ratio.
    #[arg(long)]
    r4: Option<f64>,
    /// Target average clustering coefficient.
    #[arg(long)]
    cc: Option<f64>,
    /// Expected degree (with --cc).
    #[arg(long)]
    d: Option<f64>,
    /// Pin q and solve for s (with --cc).
    #[arg(long)]
    pin_q: Option<f64>,
    /// Pin s and solve for q (with --cc).
    #[arg(long)]
    pin_s: Option<f64>,
}

#[derive(Debug)]
enum CliError {
    Core(roc_core::Error),
    Io(std::io::Error),
    Json(serde_json::Error),
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Json(e) => write!(f, "{e}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<roc_core::Error> for CliError {
    fn from(e: roc_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Json(e)
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            std::process::exit(code);
        }
    };

    let threads = cli.threads;
    let run = || match dispatch(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            1
        }
    };
    let code = match threads {
        Some(t) if t > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .expect("thread pool")
            .install(run),
        _ => run(),
    };
    std::process::exit(code);
}

fn dispatch(cli: Cli) -> Result<i32, CliError> {
    match &cli.command {
        Command::Generate { model } => {
            expect_format(cli.format, Format::Edgelist)?;
            reject_replications(cli.replications)?;
            let (graph, log) = generate(model, cli.seed)?;
            write_output(cli.output.as_deref(), &write_edge_list(&graph))?;
            if let Some(path) = communities_path(model) {
                let log = log.ok_or_else(|| {
                    CliError::Usage("this model does not produce a community log".into())
                })?;
                std::fs::write(path, write_community_log(&log))?;
            }
            Ok(0)
        }
        Command::Stats { input } => {
            expect_format(cli.format, Format::Json)?;
            let bytes = read_input(input)?;
            let graph = read_edge_list(&bytes)?;
            let stats = motif_stats(&graph);
            write_output(
                cli.output.as_deref(),
                format!("{}\n", serde_json::to_string_pretty(&stats)?).as_bytes(),
            )?;
            Ok(0)
        }
        Command::Fit(args) => {
            expect_format(cli.format, Format::Json)?;
            run_fit(args, cli.output.as_deref())
        }
        Command::Predict {
            params,
            exact_series,
        } => {
            expect_format(cli.format, Format::Json)?;
            let params = params.build()?;
            let prediction = if *exact_series {
                predict_roc_stats_exact(&params)
            } else {
                predict_roc_stats(&params)
            };
            write_output(
                cli.output.as_deref(),
                format!("{}\n", serde_json::to_string_pretty(&prediction)?).as_bytes(),
            )?;
            Ok(0)
        }
        Command::ReportConnectivity { params, c, epsilon } => {
            expect_format(cli.format, Format::Json)?;
            let report = connectivity_report(&params.build()?, *c, *epsilon)?;
            write_output(
                cli.output.as_deref(),
                format!("{}\n", serde_json::to_string_pretty(&report)?).as_bytes(),
            )?;
            Ok(0)
        }
        Command::Sweep { config } => {
            expect_format(cli.format, Format::Csv)?;
            let text = std::fs::read_to_string(config)?;
            let mut config: sweep::SweepConfig = serde_json::from_str(&text)?;
            if let Some(reps) = cli.replications {
                config.replications = reps;
            }
            let csv = sweep::run_sweep(&config)?;
            write_output(cli.output.as_deref(), csv.as_bytes())?;
            Ok(0)
        }
        Command::Verify { only, list } => run_verify(only.as_deref(), *list),
    }
}

fn generate(model: &Model, seed: u64) -> Result<(roc_core::Graph, Option<CommunityLog>), CliError> {
    match model {
        Model::Roc { params, .. } => {
            let (g, log) = gen_roc(&params.build()?, seed);
            Ok((g, Some(log)))
        }
        Model::RocFixed { params, .. } => {
            let (g, log) = gen_roc_fixed(&params.build()?, seed)?;
            Ok((g, Some(log)))
        }
        Model::Droc {
            n,
            s,
            q,
            targets_file,
            power_law,
            targets_seed,
            cap_targets: cap,
            ..
        } => {
            let mut targets: Vec<f64> = match (targets_file, power_law) {
                (Some(path), None) => read_targets(path)?,
                (None, Some(gamma)) => sample_power_law(*n, *gamma, targets_seed.unwrap_or(seed))?
                    .into_iter()
                    .map(|t| t as f64)
                    .collect(),
                _ => {
                    return Err(CliError::Usage(
                        "provide exactly one of --targets-file or --power-law".into(),
                    ))
                }
            };
            if *cap {
                cap_targets(&mut targets, *s, *q);
            }
            let spec = DrocSpec::new(*n, targets, *s, *q)?;
            let (g, log) = gen_droc(&spec, seed);
            Ok((g, Some(log)))
        }
        Model::Er { n, p } => Ok((gen_er(*n, *p, seed)?, None)),
        Model::JustAddTriangles { n, t } => Ok((gen_just_add_triangles(*n, *t, seed)?, None)),
        Model::Block { matrix } => {
            let spec = read_matrix(matrix)?;
            Ok((gen_block_model(&spec, seed), None))
        }
        Model::Hypercube { dim } => Ok((gen_hypercube(*dim)?, None)),
    }
}

fn communities_path(model: &Model) -> Option<&Path> {
    match model {
        Model::Roc { communities, .. }
        | Model::RocFixed { communities, .. }
        | Model::Droc { communities, .. } => communities.as_deref(),
        _ => None,
    }
}

fn run_fit(args: &FitArgs, output: Option<&Path>) -> Result<i32, CliError> {
    match (args.r3, args.r4, args.cc) {
        (Some(r3), Some(r4), None) => {
            let fit = fit_roc(r3, r4)?;
            let code = if fit.regime == Regime::Infeasible {
                2
            } else {
                0
            };
            write_output(
                output,
                format!("{}\n", serde_json::to_string_pretty(&fit)?).as_bytes(),
            )?;
            Ok(code)
        }
        (None, None, Some(cc)) => {
            let d = args
                .d
                .ok_or_else(|| CliError::Usage("--cc fitting requires --d".into()))?;
            let pin = match (args.pin_q, args.pin_s) {
                (Some(q), None) => ClusteringPin::Density(q),
                (None, Some(s)) => ClusteringPin::CommunitySize(s),
                _ => {
                    return Err(CliError::Usage(
                        "provide exactly one of --pin-q or --pin-s".into(),
                    ))
                }
            };
            let fit = fit_roc_clustering(d, cc, pin)?;
            write_output(
                output,
                format!("{}\n", serde_json::to_string_pretty(&fit)?).as_bytes(),
            )?;
            Ok(0)
        }
        _ => Err(CliError::Usage(
            "provide either --r3 with --r4, or --cc with --d and a pin".into(),
        )),
    }
}

fn run_verify(only: Option<&str>, list: bool) -> Result<i32, CliError> {
    use roc_core::acceptance::{run_criterion, CRITERIA};
    if list {
        for name in CRITERIA {
            println!("{name}");
        }
        return Ok(0);
    }
    let names: Vec<&str> = match only {
        Some(name) => {
            if !CRITERIA.contains(&name) {
                return Err(CliError::Usage(format!(
                    "unknown criterion {name:?}; see `roc verify --list`"
                )));
            }
            vec![name]
        }
        None => CRITERIA.to_vec(),
    };
    let mut all_passed = true;
    for name in names {
        let report = run_criterion(name).expect("registered criterion");
        print!("{report}");
        all_passed &= report.passed;
    }
    Ok(if all_passed { 0 } else { 1 })
}

fn read_targets(path: &Path) -> Result<Vec<f64>, CliError> {
    let text = std::fs::read_to_string(path)?;
    let mut targets = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let t: f64 = line
            .parse()
            .map_err(|_| CliError::Usage(format!("line {}: malformed target {line:?}", i + 1)))?;
        targets.push(t);
    }
    Ok(targets)
}

fn read_matrix(path: &Path) -> Result<BlockModelSpec, CliError> {
    let text = std::fs::read_to_string(path)?;
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row: Result<Vec<f64>, _> = line.split_ascii_whitespace().map(str::parse).collect();
        rows.push(
            row.map_err(|_| CliError::Usage(format!("line {}: malformed matrix row", i + 1)))?,
        );
    }
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(CliError::Usage(format!(
            "matrix must be square: {n} rows but row lengths differ"
        )));
    }
    let flat: Vec<f64> = rows.into_iter().flatten().collect();
    Ok(BlockModelSpec::new(nalgebra::DMatrix::from_row_slice(
        n, n, &flat,
    ))?)
}

fn read_input(input: &str) -> Result<Vec<u8>, CliError> {
    if input == "-" {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf)?;
        Ok(buf)
    } else {
        Ok(std::fs::read(input)?)
    }
}

fn write_output(path: Option<&Path>, bytes: &[u8]) -> Result<(), CliError> {
    match path {
        Some(path) => std::fs::write(path, bytes)?,
        None => std::io::stdout().write_all(bytes)?,
    }
    Ok(())
}

fn expect_format(requested: Option<Format>, supported: Format) -> Result<(), CliError> {
    match requested {
        None => Ok(()),
        Some(f) if f == supported => Ok(()),
        Some(f) => Err(CliError::Usage(format!(
            "this command emits {supported:?} output, not {f:?}"
        ))),
    }
}

fn reject_replications(replications: Option<usize>) -> Result<(), CliError> {
    match replications {
        None | Some(1) => Ok(()),
        Some(_) => Err(CliError::Usage(
            "--replications applies to sweep; generate writes a single graph".into(),
        )),
    }
}
