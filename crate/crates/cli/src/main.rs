use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use geodetic::bench::{run_bench, write_csv, write_pretty, BenchConfig, BenchError, DEFAULT_EXACT_MAX_N};
use geodetic::graph::{Scheme, DEFAULT_REWIRE_PROB};
use geodetic::{
    all_pairs_distances, brute_force_geodetic, diameter_bound, exact_geodetic, generate, greedy_geodetic,
    locally_greedy_geodetic, parse_edge_list, trivial_bound, write_edge_list, Algorithm, Family, GenSpec,
    GeodeticResult, Graph, IlpModel, IntervalTable, ParseOptions, SearchLimits, SolveError, VertexSet,
};

/// Geodetic number solvers, heuristics and benchmarks.
#[derive(Debug, Parser)]
#[command(name = "geodetic", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a seeded random connected graph as an edge list.
    Generate(GenerateArgs),
    /// Run one or all algorithms on an edge-list file.
    Solve(SolveArgs),
    /// Run the benchmark grid and write CSV rows.
    Bench(BenchArgs),
    /// Write the 0-1 programme in LP format.
    ExportIlp(ExportArgs),
    /// Check whether a vertex set is geodetic.
    Verify(VerifyArgs),
}

#[derive(Debug, clap::Args)]
struct GenerateArgs {
    #[arg(long)]
    family: Family,
    #[arg(long)]
    n: usize,
    /// Edge density in (0, 1]; m = floor(density * n(n-1)/2).
    #[arg(long, conflicts_with = "m", required_unless_present = "m")]
    density: Option<f64>,
    /// Exact edge count.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Watts-Strogatz rewiring probability.
    #[arg(long, default_value_t = DEFAULT_REWIRE_PROB)]
    rewire: f64,
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AlgoChoice {
    Exact,
    Brute,
    Greedy,
    GreedyAddone,
    LocallyGreedy,
    Bounds,
    All,
}

#[derive(Debug, clap::Args)]
struct GraphInput {
    /// Edge-list file.
    graph: PathBuf,
    /// Vertex ids in the file start at 1.
    #[arg(long)]
    one_based: bool,
}

#[derive(Debug, clap::Args)]
struct SolveArgs {
    #[command(flatten)]
    input: GraphInput,
    #[arg(long, value_enum, default_value_t = AlgoChoice::All)]
    algo: AlgoChoice,
    /// Exact search time budget in seconds.
    #[arg(long)]
    time_limit: Option<f64>,
    /// Exact search node budget.
    #[arg(long)]
    node_limit: Option<u64>,
}

#[derive(Debug, clap::Args)]
struct BenchArgs {
    #[arg(long, default_value = "standard")]
    scheme: Scheme,
    #[arg(long, value_delimiter = ',', default_value = "er,ws,ba")]
    families: Vec<Family>,
    #[arg(long, default_value_t = 0)]
    seed_base: u64,
    /// CSV output file; stdout when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Skip cells with more vertices.
    #[arg(long)]
    max_n: Option<usize>,
    /// Run the exact solver only up to this many vertices.
    #[arg(long, default_value_t = DEFAULT_EXACT_MAX_N)]
    exact_max_n: usize,
    /// Exact search time budget per cell, in seconds.
    #[arg(long)]
    exact_time_limit: Option<f64>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, default_value_t = DEFAULT_REWIRE_PROB)]
    rewire: f64,
    /// Also print an aligned table to stdout.
    #[arg(long)]
    pretty: bool,
    /// Leave the time columns empty so output depends only on the flags.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Debug, clap::Args)]
struct ExportArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Output path; defaults to the graph path with extension `.lp`.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Comma-separated vertex ids.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    set: Vec<usize>,
}

/// An error with the process exit code it maps to.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

const USAGE: u8 = 1;
const DATA: u8 = 2;
const INTERNAL: u8 = 3;

trait Classify<T> {
    fn code(self, code: u8) -> Result<T, Failure>;
}

impl<T, E: Into<anyhow::Error>> Classify<T> for Result<T, E> {
    fn code(self, code: u8) -> Result<T, Failure> {
        self.map_err(|e| Failure { code, error: e.into() })
    }
}

fn solve_code(e: &SolveError) -> u8 {
    match e {
        SolveError::Graph(_) => DATA,
        SolveError::TooLarge { .. } => USAGE,
        SolveError::Invariant { .. } => INTERNAL,
    }
}

fn solved(r: Result<GeodeticResult, SolveError>) -> Result<GeodeticResult, Failure> {
    r.map_err(|e| Failure {
        code: solve_code(&e),
        error: e.into(),
    })
}

fn read_graph(input: &GraphInput) -> Result<Graph, Failure> {
    let text = fs::read_to_string(&input.graph)
        .with_context(|| format!("reading {}", input.graph.display()))
        .code(DATA)?;
    let options = ParseOptions {
        one_based: input.one_based,
        require_connected: true,
    };
    parse_edge_list(&text, options)
        .with_context(|| format!("parsing {}", input.graph.display()))
        .code(DATA)
}

fn seconds(value: f64, flag: &str) -> Result<Duration, Failure> {
    Duration::try_from_secs_f64(value)
        .ok()
        .filter(|d| !d.is_zero())
        .ok_or_else(|| anyhow!("{flag} must be a positive number of seconds, got {value}"))
        .code(USAGE)
}

fn generate_cmd(args: GenerateArgs) -> Result<(), Failure> {
    let max = args.n * args.n.saturating_sub(1) / 2;
    let m = match (args.density, args.m) {
        (Some(d), _) => {
            if !(d > 0.0 && d <= 1.0) {
                return Err(anyhow!("--density must be in (0, 1], got {d}")).code(USAGE);
            }
            // tolerate representation error such as 0.4 * 190 = 76.00000000000001
            (d * max as f64 + 1e-9).floor() as usize
        }
        (None, Some(m)) => m,
        (None, None) => unreachable!("clap requires --density or --m"),
    };
    let spec = GenSpec {
        rewire_prob: args.rewire,
        ..GenSpec::new(args.family, args.n, m, args.seed)
    };
    spec.validate().code(USAGE)?;
    let graph = generate(&spec).code(DATA)?;
    fs::write(&args.output, write_edge_list(&graph))
        .with_context(|| format!("writing {}", args.output.display()))
        .code(DATA)?;
    println!("n {}", graph.n());
    println!("m {}", graph.m());
    println!("seed {}", spec.seed);
    Ok(())
}

fn report(r: &GeodeticResult) {
    let exact = matches!(r.algorithm, Algorithm::Exact | Algorithm::BruteForce);
    let value = if r.optimal || !exact {
        r.value().to_string()
    } else {
        format!("<={}", r.value())
    };
    let mut flags = Vec::new();
    if r.optimal {
        flags.push("optimal");
    } else if exact {
        flags.push("budget-exhausted");
    } else {
        flags.push("upper-bound");
    }
    if r.verified {
        flags.push("verified");
    }
    println!(
        "{:<15} {:>6}  {:>10.6}s  {:<26} {:?}",
        r.algorithm.name(),
        value,
        r.elapsed.as_secs_f64(),
        flags.join(","),
        r.vertices()
    );
}

fn solve_cmd(args: SolveArgs) -> Result<(), Failure> {
    let limits = SearchLimits {
        time: args.time_limit.map(|t| seconds(t, "--time-limit")).transpose()?,
        nodes: args.node_limit,
    };
    limits.validate().code(USAGE)?;
    let graph = read_graph(&args.input)?;
    println!("graph {} n {} m {}", args.input.graph.display(), graph.n(), graph.m());

    let algo = args.algo;
    let wants = |a: AlgoChoice| algo == a || (algo == AlgoChoice::All && a != AlgoChoice::Brute);
    if wants(AlgoChoice::Exact) {
        report(&solved(exact_geodetic(&graph, &limits))?);
    }
    if wants(AlgoChoice::Brute) {
        report(&solved(brute_force_geodetic(&graph))?);
    }
    if wants(AlgoChoice::Greedy) {
        report(&solved(greedy_geodetic(&graph, false))?);
    }
    if wants(AlgoChoice::GreedyAddone) {
        report(&solved(greedy_geodetic(&graph, true))?);
    }
    if wants(AlgoChoice::LocallyGreedy) {
        report(&solved(locally_greedy_geodetic(&graph))?);
    }
    if wants(AlgoChoice::Bounds) {
        let dist = all_pairs_distances(&graph);
        println!(
            "{:<15} {:>6}  diameter {}",
            "diameter-bound",
            diameter_bound(&dist),
            dist.diameter()
        );
        println!("{:<15} {:>6}", "trivial-bound", trivial_bound(&graph));
    }
    Ok(())
}

fn bench_code(e: &BenchError) -> u8 {
    match e {
        BenchError::Graph(_) | BenchError::Io(_) => DATA,
        BenchError::Solve(s) => solve_code(s),
        BenchError::Inconsistent { .. } => INTERNAL,
    }
}

fn bench_cmd(args: BenchArgs) -> Result<(), Failure> {
    if args.jobs == 0 {
        return Err(anyhow!("--jobs must be at least 1")).code(USAGE);
    }
    if args.families.is_empty() {
        return Err(anyhow!("--families must name at least one family")).code(USAGE);
    }
    if !(0.0..=1.0).contains(&args.rewire) {
        return Err(anyhow!("--rewire must be in [0, 1], got {}", args.rewire)).code(USAGE);
    }
    let config = BenchConfig {
        scheme: args.scheme,
        families: args.families,
        seed_base: args.seed_base,
        max_n: args.max_n,
        exact_max_n: args.exact_max_n,
        exact_limits: SearchLimits {
            time: args
                .exact_time_limit
                .map(|t| seconds(t, "--exact-time-limit"))
                .transpose()?,
            nodes: None,
        },
        jobs: args.jobs,
        rewire_prob: args.rewire,
    };
    let started = Instant::now();
    let records = run_bench(&config).map_err(|e| Failure {
        code: bench_code(&e),
        error: e.into(),
    })?;
    let timing = !args.no_timing;

    match &args.output {
        Some(path) => {
            let mut csv = Vec::new();
            write_csv(&records, timing, &mut csv).code(DATA)?;
            fs::write(path, csv)
                .with_context(|| format!("writing {}", path.display()))
                .code(DATA)?;
            eprintln!(
                "{} rows written to {} in {:.1?}",
                records.len(),
                path.display(),
                started.elapsed()
            );
        }
        None if !args.pretty => write_csv(&records, timing, io::stdout().lock()).code(DATA)?,
        None => {}
    }
    if args.pretty {
        write_pretty(&records, timing, io::stdout().lock()).code(DATA)?;
    }
    Ok(())
}

fn default_lp_path(graph: &Path) -> PathBuf {
    graph.with_extension("lp")
}

fn export_cmd(args: ExportArgs) -> Result<(), Failure> {
    let graph = read_graph(&args.input)?;
    let model = IlpModel::build(&graph).map_err(|e| Failure {
        code: solve_code(&e),
        error: e.into(),
    })?;
    let path = args.output.unwrap_or_else(|| default_lp_path(&args.input.graph));
    fs::write(&path, model.to_lp())
        .with_context(|| format!("writing {}", path.display()))
        .code(DATA)?;
    println!("wrote {}", path.display());
    println!("variables {}", model.variable_count());
    println!("constraints {}", model.constraint_count());
    Ok(())
}

fn verify_cmd(args: VerifyArgs) -> Result<(), Failure> {
    let graph = read_graph(&args.input)?;
    let n = graph.n();
    let shift = usize::from(args.input.one_based);
    let mut set = VertexSet::new(n);
    for &raw in &args.set {
        let v = raw.checked_sub(shift).filter(|&v| v < n);
        match v {
            Some(v) => {
                set.insert(v);
            }
            None => return Err(anyhow!("vertex {raw} out of range for a graph with {n} vertices")).code(USAGE),
        }
    }
    let closure = IntervalTable::for_graph(&graph).closure(&set);
    let geodetic = closure.len() == n;
    println!("geodetic {}", if geodetic { "yes" } else { "no" });
    println!("closure {} of {n}", closure.len());
    if !geodetic {
        let missing: Vec<usize> = (0..n).filter(|&v| !closure.contains(v)).map(|v| v + shift).collect();
        println!("uncovered {missing:?}");
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Generate(args) => generate_cmd(args),
        Command::Solve(args) => solve_cmd(args),
        Command::Bench(args) => bench_cmd(args),
        Command::ExportIlp(args) => export_cmd(args),
        Command::Verify(args) => verify_cmd(args),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => {
            let _ = io::stdout().flush();
            ExitCode::SUCCESS
        }
        Err(Failure { code, error }) => {
            eprintln!("error: {error:#}");
            ExitCode::from(code)
        }
    }
}
