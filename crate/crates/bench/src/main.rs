use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use cds_bench::config::ExperimentConfig;
use cds_bench::error::{BenchError, Result};
use cds_bench::{experiment, formats, output};
use cds_core::topology::{self, GenSpec};
use cds_core::verify::{check_cds, exact_min_cds, DEFAULT_ORACLE_LIMIT};
use cds_core::{Algorithm, Mcds2Rule, NodeSet};
use clap::{Args, Parser, Subcommand};

/// Connected dominating sets for wireless ad-hoc network graphs.
#[derive(Debug, Parser)]
#[command(name = "cds", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a random unit-disk topology; writes OUT.topo and OUT.graph
    Gen(GenArgs),
    /// Compute a CDS of a graph file
    Solve(SolveArgs),
    /// Exact minimum CDS of a small graph file
    Oracle(OracleArgs),
    /// Run the size-versus-node-count experiment
    Run(Box<RunArgs>),
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = topology::DEFAULT_AREA_SIDE)]
    area: f64,
    #[arg(long, default_value_t = topology::DEFAULT_RADIUS)]
    radius: f64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Output prefix
    #[arg(long)]
    out: PathBuf,
    /// Redraw until the graph is connected
    #[arg(long)]
    connected: bool,
    #[arg(long, default_value_t = topology::DEFAULT_MAX_RETRIES)]
    retries: u32,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    algo: Algorithm,
    #[arg(long = "mcds2-rule", default_value = "single")]
    mcds2_rule: Mcds2Rule,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
    limit: usize,
}

#[derive(Debug, Args)]
struct RunArgs {
    /// key=value config file; flags below override it
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long = "out-csv")]
    out_csv: Option<PathBuf>,
    #[arg(long = "out-plot")]
    out_plot: Option<PathBuf>,
    /// Per-trial raw log
    #[arg(long)]
    raw: Option<PathBuf>,
    /// Comma-separated node counts
    #[arg(long = "n-values")]
    n_values: Option<String>,
    #[arg(long)]
    trials: Option<String>,
    #[arg(long)]
    area: Option<String>,
    #[arg(long)]
    radius: Option<String>,
    #[arg(long)]
    seed: Option<String>,
    /// Comma-separated subset of mmcds,mcds1,mcds2,das
    #[arg(long)]
    algorithms: Option<String>,
    /// single, union or both
    #[arg(long = "mcds2-rule")]
    mcds2_rule: Option<String>,
    #[arg(long = "include-oracle")]
    include_oracle: bool,
    #[arg(long = "oracle-limit")]
    oracle_limit: Option<String>,
    #[arg(long)]
    retries: Option<String>,
    /// Report zero runtimes so repeated runs produce identical files
    #[arg(long = "no-runtime")]
    no_runtime: bool,
}

fn join_ids(set: &NodeSet) -> String {
    set.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn with_extension(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

fn gen(args: GenArgs) -> Result<ExitCode> {
    let spec = GenSpec {
        n: args.n,
        area_side: args.area,
        radius: args.radius,
        seed: args.seed,
        require_connected: args.connected,
        max_retries: args.retries,
    };
    let topo = topology::generate(&spec)?;
    let graph = topo.to_graph();
    let topo_path = with_extension(&args.out, "topo");
    let graph_path = with_extension(&args.out, "graph");
    formats::write_text(&topo_path, &formats::format_topology(&topo))?;
    let graph_text = format!(
        "# generator: {}\n{}",
        topology::PRNG_NAME,
        formats::format_graph(&graph)
    );
    formats::write_text(&graph_path, &graph_text)?;
    eprintln!(
        "wrote {} and {} ({} nodes, {} edges, connected: {})",
        topo_path.display(),
        graph_path.display(),
        graph.node_count(),
        graph.edge_count(),
        graph.is_connected()
    );
    Ok(ExitCode::SUCCESS)
}

fn solve(args: SolveArgs) -> Result<ExitCode> {
    let g = formats::read_graph(&args.graph)?;
    let result = args.algo.run(&g, args.mcds2_rule)?;
    let valid = check_cds(&g, &result.cds)?.is_valid();
    println!("algorithm: {}", result.algorithm);
    println!("cds: {}", join_ids(&result.cds));
    println!("size: {}", result.size);
    println!("valid: {valid}");
    println!("repaired: {}", result.repaired);
    Ok(if valid {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(3)
    })
}

fn oracle(args: OracleArgs) -> Result<ExitCode> {
    let g = formats::read_graph(&args.graph)?;
    let exact = exact_min_cds(&g, args.limit)?;
    println!("min_size: {}", exact.min_size);
    println!("witness: {}", join_ids(&exact.witness));
    println!("subsets_examined: {}", exact.subsets_examined);
    Ok(ExitCode::SUCCESS)
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| BenchError::io(path, e))
}

fn run(args: RunArgs) -> Result<ExitCode> {
    let mut cfg = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| BenchError::io(path, e))?;
            ExperimentConfig::parse(&text)?
        }
        None => ExperimentConfig::default(),
    };
    let overrides = [
        ("n_values", &args.n_values),
        ("trials", &args.trials),
        ("area_side", &args.area),
        ("radius", &args.radius),
        ("base_seed", &args.seed),
        ("algorithms", &args.algorithms),
        ("mcds2_rule", &args.mcds2_rule),
        ("oracle_limit", &args.oracle_limit),
        ("max_retries", &args.retries),
    ];
    for (key, value) in overrides {
        if let Some(v) = value {
            cfg.set(key, v)?;
        }
    }
    if args.include_oracle {
        cfg.include_oracle = true;
    }
    if args.no_runtime {
        cfg.record_runtime = false;
    }
    cfg.validate()?;

    let outcome = experiment::run_experiment(&cfg)?;
    for f in &outcome.failures {
        eprintln!(
            "trial n={} t={} seed={}: {}",
            f.n, f.trial, f.seed, f.message
        );
    }

    match &args.out_csv {
        Some(path) => output::emit_csv(&outcome.records, create(path)?)
            .map_err(|e| BenchError::io(path, e))?,
        None => output::emit_csv(&outcome.records, io::stdout().lock())
            .map_err(|e| BenchError::io("<stdout>", e))?,
    }
    if let Some(path) = &args.out_plot {
        output::emit_plot_data(&outcome.records, create(path)?)
            .map_err(|e| BenchError::io(path, e))?;
    }
    if let Some(path) = &args.raw {
        output::emit_raw(&outcome.trials, create(path)?).map_err(|e| BenchError::io(path, e))?;
    }
    eprintln!(
        "{} records from {} trial rows ({} failed trials); generator {}",
        outcome.records.len(),
        outcome.trials.len(),
        outcome.failures.len(),
        topology::PRNG_NAME
    );
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Solve(a) => solve(a),
        Command::Oracle(a) => oracle(a),
        Command::Run(a) => run(*a),
    };
    match result {
        Ok(code) => {
            let _ = io::stdout().flush();
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
