//! `hyperproc`: sample random d-uniform hypergraphs, test connectivity,
//! and run the verification experiments.
//!
//! Exit codes: 0 success, 1 usage or configuration error, 2 runtime or
//! scale-guard error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use hyperproc::{
    connected_components, is_k_connected, min_separating_cut, sample_gnm, sample_gnp, thresholds,
    CutValue, KConnectivity, Seed,
};
use hyperproc_cli::config::{ConfigError, ExperimentConfig, ExperimentKind, OutputFormat};
use hyperproc_cli::{run_experiment, write_outputs};

#[derive(Parser)]
#[command(
    name = "hyperproc",
    version,
    about = "Random d-uniform hypergraph connectivity laboratory"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample one hypergraph and write it as an edge-list file
    Gen(GenArgs),
    /// Inspect an edge-list file: components, degrees, k-connectivity
    Connectivity(ConnectivityArgs),
    /// Stopping-time experiment over the sequential edge process
    HittingTimes(ExperimentArgs),
    /// k-connectivity probability sweep across density offsets
    Sweep(SweepArgs),
    /// Degree-count law at the critical density and window checks
    Poisson(PoissonArgs),
    /// Quasi-disjointness profile at the low window edge
    Quasi(OmegaArgs),
    /// Giant-component robustness after worst-case deletions
    PropertyQ(PropertyQArgs),
}

#[derive(Args, Clone)]
struct SharedArgs {
    /// JSON config file; explicit flags override its values
    #[arg(long)]
    config: Option<String>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    d: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    trials: Option<u32>,
    /// Master seed; trials derive independent streams from it
    #[arg(long)]
    seed: Option<u64>,
    /// Output directory for summary.json, rows.csv, and plot data
    #[arg(long)]
    out: Option<PathBuf>,
    /// What to print on stdout
    #[arg(long, value_parser = ["csv", "json"])]
    format: Option<String>,
    /// Scale-guard override
    #[arg(long)]
    max_n: Option<u32>,
}

#[derive(Args)]
struct ExperimentArgs {
    #[command(flatten)]
    shared: SharedArgs,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    shared: SharedArgs,
    #[arg(long, allow_hyphen_values = true)]
    c_min: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    c_max: Option<f64>,
    #[arg(long)]
    c_steps: Option<u32>,
    /// Also sample the independent model at the matching probability
    #[arg(long)]
    gnp: bool,
}

#[derive(Args)]
struct PoissonArgs {
    #[command(flatten)]
    shared: SharedArgs,
    /// Density offset
    #[arg(long, allow_hyphen_values = true)]
    c: Option<f64>,
    /// Window half-width (default: ln ln ln n)
    #[arg(long)]
    omega: Option<f64>,
}

#[derive(Args)]
struct OmegaArgs {
    #[command(flatten)]
    shared: SharedArgs,
    /// Window half-width (default: ln ln ln n)
    #[arg(long)]
    omega: Option<f64>,
}

#[derive(Args)]
struct PropertyQArgs {
    #[command(flatten)]
    shared: SharedArgs,
    /// Window half-width (default: ln ln ln n)
    #[arg(long)]
    omega: Option<f64>,
    /// Leftover-vertex budget (default: ceil(ln n))
    #[arg(long)]
    budget: Option<u32>,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    n: u32,
    #[arg(long, default_value_t = 3)]
    d: u32,
    /// Exact edge count
    #[arg(long, conflicts_with_all = ["p", "c"])]
    m: Option<u64>,
    /// Independent inclusion probability
    #[arg(long, conflicts_with = "c")]
    p: Option<f64>,
    /// Critical-density offset (needs --k)
    #[arg(long, allow_hyphen_values = true)]
    c: Option<f64>,
    #[arg(long, default_value_t = 2)]
    k: u32,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 0)]
    trial: u64,
    /// Output file (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ConnectivityArgs {
    /// Edge-list file
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value_t = 1)]
    k: u32,
    /// Also report the pairwise separating cut for two vertices
    #[arg(long, num_args = 2, value_names = ["U", "W"])]
    pair: Option<Vec<u32>>,
}

enum Failure {
    Usage(String),
    Runtime(anyhow::Error),
}

impl From<ConfigError> for Failure {
    fn from(e: ConfigError) -> Self {
        match e {
            ConfigError::ScaleGuard(_) => Failure::Runtime(anyhow::anyhow!(e.to_string())),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match dispatch(cli) {
        Ok(()) => {}
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(1);
        }
        Err(Failure::Runtime(err)) => {
            eprintln!("error: {err:#}");
            std::process::exit(2);
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Gen(args) => run_gen(args),
        Command::Connectivity(args) => run_connectivity(args),
        Command::HittingTimes(args) => {
            let config = merge(ExperimentKind::HittingTimes, &args.shared, |_| {})?;
            execute(config, &args.shared)
        }
        Command::Sweep(args) => {
            let config = merge(ExperimentKind::ThresholdSweep, &args.shared, |c| {
                if let (Some(lo), Some(hi), Some(steps)) = (args.c_min, args.c_max, args.c_steps) {
                    c.c_grid = Some(grid(lo, hi, steps));
                }
                c.include_gnp |= args.gnp;
            })?;
            execute(config, &args.shared)
        }
        Command::Poisson(args) => {
            let config = merge(ExperimentKind::PoissonCount, &args.shared, |c| {
                if let Some(v) = args.c {
                    c.c = v;
                }
                if args.omega.is_some() {
                    c.omega = args.omega;
                }
            })?;
            execute(config, &args.shared)
        }
        Command::Quasi(args) => {
            let config = merge(ExperimentKind::QuasiDisjoint, &args.shared, |c| {
                if args.omega.is_some() {
                    c.omega = args.omega;
                }
            })?;
            execute(config, &args.shared)
        }
        Command::PropertyQ(args) => {
            let config = merge(ExperimentKind::PropertyQ, &args.shared, |c| {
                if args.omega.is_some() {
                    c.omega = args.omega;
                }
                if args.budget.is_some() {
                    c.budget = args.budget;
                }
            })?;
            execute(config, &args.shared)
        }
    }
}

fn grid(lo: f64, hi: f64, steps: u32) -> Vec<f64> {
    if steps <= 1 {
        return vec![lo];
    }
    (0..steps)
        .map(|i| lo + (hi - lo) * i as f64 / (steps - 1) as f64)
        .collect()
}

/// Config-file values first, CLI flags on top.
fn merge(
    kind: ExperimentKind,
    shared: &SharedArgs,
    kind_specific: impl FnOnce(&mut ExperimentConfig),
) -> Result<ExperimentConfig, Failure> {
    let mut config = match &shared.config {
        Some(path) => {
            let loaded = ExperimentConfig::load(path)?;
            if loaded.kind != kind {
                return Err(Failure::Usage(format!(
                    "config file is for {}, subcommand expects {}",
                    loaded.kind.name(),
                    kind.name()
                )));
            }
            loaded
        }
        None => ExperimentConfig {
            kind,
            n: 1000,
            d: 3,
            k: 2,
            trials: 100,
            master_seed: 42,
            c: 0.0,
            c_grid: if kind == ExperimentKind::ThresholdSweep {
                Some(grid(-2.0, 4.0, 7))
            } else {
                None
            },
            omega: None,
            include_gnp: false,
            budget: None,
            max_n: None,
            format: OutputFormat::Json,
        },
    };
    if let Some(n) = shared.n {
        config.n = n;
    }
    if let Some(d) = shared.d {
        config.d = d;
    }
    if let Some(k) = shared.k {
        config.k = k;
    }
    if let Some(t) = shared.trials {
        config.trials = t;
    }
    if let Some(s) = shared.seed {
        config.master_seed = s;
    }
    if let Some(m) = shared.max_n {
        config.max_n = Some(m);
    }
    if let Some(f) = &shared.format {
        config.format = if f == "csv" {
            OutputFormat::Csv
        } else {
            OutputFormat::Json
        };
    }
    kind_specific(&mut config);
    config.validate()?;
    config.check_scale()?;
    Ok(config)
}

fn execute(config: ExperimentConfig, shared: &SharedArgs) -> Result<(), Failure> {
    let started = std::time::Instant::now();
    let summary = run_experiment(&config)
        .map_err(|e| Failure::Runtime(anyhow::Error::new(e).context("experiment failed")))?;
    eprintln!(
        "{}: {} trials in {:.1?}",
        summary.kind_name(),
        config.trials,
        started.elapsed()
    );
    if let Some(dir) = &shared.out {
        write_outputs(&summary, dir).map_err(Failure::Runtime)?;
    }
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    let rendered = match config.format {
        OutputFormat::Csv => summary.to_csv(),
        OutputFormat::Json => summary.to_json(),
    };
    lock.write_all(rendered.as_bytes())
        .map_err(|e| Failure::Runtime(e.into()))?;
    Ok(())
}

fn run_gen(args: GenArgs) -> Result<(), Failure> {
    let seed = Seed::new(args.seed, args.trial);
    let h = if let Some(m) = args.m {
        sample_gnm(args.n, args.d, m, seed)
    } else if let Some(p) = args.p {
        sample_gnp(args.n, args.d, p, seed)
    } else if let Some(c) = args.c {
        let params = thresholds(args.n, args.d, args.k, c, 1.0)
            .map_err(|e| Failure::Usage(e.to_string()))?;
        sample_gnm(args.n, args.d, params.m_at_c, seed)
    } else {
        return Err(Failure::Usage(
            "one of --m, --p, or --c is required".into(),
        ));
    }
    .map_err(|e| Failure::Runtime(anyhow::Error::new(e)))?;
    match &args.out {
        Some(path) => {
            let file = std::fs::File::create(path).map_err(|e| {
                Failure::Runtime(anyhow::anyhow!("cannot create {}: {e}", path.display()))
            })?;
            hyperproc::io::write_edge_list(std::io::BufWriter::new(file), &h)
        }
        None => hyperproc::io::write_edge_list(std::io::stdout().lock(), &h),
    }
    .map_err(|e| Failure::Runtime(e.into()))?;
    Ok(())
}

fn run_connectivity(args: ConnectivityArgs) -> Result<(), Failure> {
    let file = std::fs::File::open(&args.input).map_err(|e| {
        Failure::Usage(format!("cannot open {}: {e}", args.input.display()))
    })?;
    let h = hyperproc::io::read_edge_list(std::io::BufReader::new(file))
        .map_err(|e| Failure::Runtime(anyhow::anyhow!("{}: {e}", args.input.display())))?;
    let parts = connected_components(&h);
    let verdict = is_k_connected(&h, args.k);
    let mut report = serde_json::json!({
        "n": h.vertex_count(),
        "d": h.d(),
        "edges": h.edge_count(),
        "min_degree": h.min_degree(),
        "components": parts.count(),
        "largest_component": parts.largest_block_size(),
        "k": args.k,
        "k_connected": verdict.holds(),
    });
    match &verdict {
        KConnectivity::TooFewVertices => {
            report["reason"] = serde_json::json!("too few vertices");
        }
        KConnectivity::Separated(w) => {
            report["separator"] = serde_json::json!(w.separator);
            report["side"] = serde_json::json!(w.side);
        }
        KConnectivity::KConnected => {}
    }
    if let Some(pair) = &args.pair {
        let (u, w) = (pair[0], pair[1]);
        if u == w || !h.contains_vertex(u) || !h.contains_vertex(w) {
            return Err(Failure::Usage(format!(
                "--pair needs two distinct vertices of the hypergraph, got {u} {w}"
            )));
        }
        report["pair_cut"] = match min_separating_cut(&h, u, w) {
            CutValue::Finite(c) => serde_json::json!(c),
            CutValue::Inseparable => serde_json::json!("inseparable"),
        };
    }
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    Ok(())
}
