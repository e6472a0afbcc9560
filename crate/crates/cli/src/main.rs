//! `sgdim`: exact balancing-dimension computations for signed graphs.
//!
//! Exit codes: 0 success, 1 negative verification, 2 input error,
//! 3 capacity or budget exceeded. With `--threads 1` (the default) all
//! output is deterministic and byte-identical across runs.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use sgdim::generators::{self, NegativeEdges};
use sgdim::graph::Sign;
use sgdim::io;
use sgdim::nip::{self, NipError, NipReport};
use sgdim::solver::{self, DimensionResult, SolveError, SolverConfig};
use sgdim::switching;
use sgdim::SignedGraph;

/// Environment variable consulted when `--cache` is not given.
const CACHE_ENV: &str = "SGDIM_CACHE";

#[derive(Parser)]
#[command(
    name = "sgdim",
    about = "Exact vector-valued switching computations on signed graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test balance and print a certificate.
    Balance { graph: PathBuf },
    /// Compute the balancing dimension with witness and bounds.
    Bdim {
        graph: PathBuf,
        /// Cap the searched dimension (default: the derived upper bound).
        #[arg(long)]
        max_k: Option<usize>,
        #[arg(long)]
        json: bool,
        /// Worker threads; 1 is the deterministic mode.
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Compute the strong (injective) balancing dimension.
    Sbdim {
        graph: PathBuf,
        #[arg(long)]
        max_k: Option<usize>,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Check a switching file against a graph.
    Verify {
        graph: PathBuf,
        switching: PathBuf,
        /// Additionally require all vectors to be pairwise distinct.
        #[arg(long)]
        injective: bool,
    },
    /// Emit the incidence-based positive switching and the incidence matrix.
    Mu {
        graph: PathBuf,
        /// Emit the injectivity-repaired variant instead.
        #[arg(long)]
        injective: bool,
    },
    /// Largest set of vectors in {-1,0,1}^k with pairwise negative products.
    Nu {
        k: usize,
        /// Cache file for computed values (also via SGDIM_CACHE).
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Largest family of pairwise non-orthogonal lines in {-1,0,1}^k.
    Lambda {
        k: usize,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Least k whose nu value reaches n.
    Nubar {
        n: usize,
        /// Largest k to try before reporting a capacity error.
        #[arg(long, default_value_t = 7)]
        max_k: usize,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Emit a generated graph: cycle N NEG | path N SIGN | complete N SEL |
    /// wheel N | figure1..figure4.
    Gen {
        family: String,
        params: Vec<String>,
    },
}

enum CliError {
    Input(String),
    Capacity(String),
}

impl CliError {
    fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Input(_) => ExitCode::from(2),
            CliError::Capacity(_) => ExitCode::from(3),
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Capacity(m) => m,
        }
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        match &e {
            SolveError::Capacity { .. } | SolveError::BudgetExceeded { .. } => {
                CliError::Capacity(e.to_string())
            }
            SolveError::Ternary(sgdim::ternary::TernaryError::CapExceeded { .. }) => {
                CliError::Capacity(e.to_string())
            }
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<NipError> for CliError {
    fn from(e: NipError) -> Self {
        match &e {
            NipError::Unresolved { .. } => CliError::Capacity(e.to_string()),
            NipError::Ternary(sgdim::ternary::TernaryError::CapExceeded { .. }) => {
                CliError::Capacity(e.to_string())
            }
            _ => CliError::Input(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    }
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Balance { graph } => balance(&graph),
        Command::Bdim {
            graph,
            max_k,
            json,
            threads,
        } => dimension(solver::DimensionKind::Bdim, &graph, max_k, json, threads),
        Command::Sbdim {
            graph,
            max_k,
            json,
            threads,
        } => dimension(solver::DimensionKind::Sbdim, &graph, max_k, json, threads),
        Command::Verify {
            graph,
            switching,
            injective,
        } => verify(&graph, &switching, injective),
        Command::Mu { graph, injective } => mu(&graph, injective),
        Command::Nu { k, cache } => nu_command(k, cache),
        Command::Lambda { k, cache } => lambda_command(k, cache),
        Command::Nubar { n, max_k, cache } => nubar_command(n, max_k, cache),
        Command::Gen { family, params } => gen(&family, &params),
    }
}

fn read_graph(path: &Path) -> Result<SignedGraph, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    io::parse_graph(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn read_switching(path: &Path) -> Result<switching::SwitchingAssignment, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    io::parse_switching(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn balance(path: &Path) -> Result<ExitCode, CliError> {
    let g = read_graph(path)?;
    match g.balance() {
        sgdim::BalanceCertificate::Balanced { switching } => {
            println!("balanced");
            println!("# switching to all positive (vertex value)");
            for (v, s) in switching.values().iter().enumerate() {
                println!("{v} {s:+}");
            }
        }
        sgdim::BalanceCertificate::Unbalanced { negative_cycle } => {
            println!("unbalanced");
            let cycle: Vec<String> = negative_cycle.iter().map(|v| v.to_string()).collect();
            println!("# cycle with negative sign product");
            println!("{}", cycle.join(" "));
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct JsonBound {
    name: &'static str,
    value: usize,
}

#[derive(Serialize)]
struct JsonBounds {
    lower: Vec<JsonBound>,
    upper: Vec<JsonBound>,
    effective_lower: usize,
    effective_upper: usize,
}

#[derive(Serialize)]
struct JsonWitness {
    dimension: usize,
    values: Vec<Vec<i8>>,
}

#[derive(Serialize)]
struct JsonStats {
    nodes: u64,
}

#[derive(Serialize)]
struct JsonDimension {
    kind: &'static str,
    value: usize,
    witness: JsonWitness,
    bounds: JsonBounds,
    stats: JsonStats,
    all_positive_convention: bool,
}

impl JsonDimension {
    fn from_result(r: &DimensionResult) -> Self {
        JsonDimension {
            kind: r.kind.name(),
            value: r.value,
            witness: JsonWitness {
                dimension: r.witness.dimension(),
                values: r
                    .witness
                    .values()
                    .iter()
                    .map(|v| v.trits().to_vec())
                    .collect(),
            },
            bounds: JsonBounds {
                lower: r
                    .trace
                    .lower
                    .iter()
                    .map(|&(n, v)| JsonBound {
                        name: n.name(),
                        value: v,
                    })
                    .collect(),
                upper: r
                    .trace
                    .upper
                    .iter()
                    .map(|&(n, v)| JsonBound {
                        name: n.name(),
                        value: v,
                    })
                    .collect(),
                effective_lower: r.trace.effective_lower,
                effective_upper: r.trace.effective_upper,
            },
            stats: JsonStats {
                nodes: r.stats.nodes,
            },
            all_positive_convention: r.all_positive_convention,
        }
    }
}

fn dimension(
    kind: solver::DimensionKind,
    path: &Path,
    max_k: Option<usize>,
    json: bool,
    threads: usize,
) -> Result<ExitCode, CliError> {
    let g = read_graph(path)?;
    let cfg = SolverConfig {
        max_k,
        threads,
        ..SolverConfig::default()
    };
    let result = match kind {
        solver::DimensionKind::Bdim => solver::bdim(&g, &cfg),
        solver::DimensionKind::Sbdim => solver::sbdim(&g, &cfg),
    }?;
    if json {
        let out = serde_json::to_string_pretty(&JsonDimension::from_result(&result))
            .expect("serializable");
        println!("{out}");
    } else {
        print_dimension_text(&result);
    }
    Ok(ExitCode::SUCCESS)
}

fn print_dimension_text(r: &DimensionResult) {
    println!("{} = {}", r.kind.name(), r.value);
    let fmt_bounds = |bounds: &[(solver::BoundName, usize)]| -> String {
        bounds
            .iter()
            .map(|&(n, v)| format!("{n}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    println!(
        "# lower bounds: {} | upper bounds: {} | effective [{}, {}]",
        fmt_bounds(&r.trace.lower),
        fmt_bounds(&r.trace.upper),
        r.trace.effective_lower,
        r.trace.effective_upper
    );
    println!("# nodes explored: {}", r.stats.nodes);
    if r.all_positive_convention {
        println!("# all-positive graph: value 1 by convention, constant witness");
    }
    println!("# witness:");
    print!("{}", io::serialize_switching(&r.witness));
}

fn verify(graph: &Path, switching_path: &Path, injective: bool) -> Result<ExitCode, CliError> {
    let g = read_graph(graph)?;
    let zeta = read_switching(switching_path)?;
    let report = switching::check_positive_switching(&g, &zeta, injective);
    if report.is_valid() {
        println!("pass");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("fail");
        for violation in &report.violations {
            println!("{violation}");
        }
        Ok(ExitCode::from(1))
    }
}

fn mu(path: &Path, injective: bool) -> Result<ExitCode, CliError> {
    let g = read_graph(path)?;
    let assignment = if injective {
        sgdim::injective_mu(&g)
    } else {
        sgdim::mu_from_incidence(&g)
    }
    .map_err(|e| CliError::Input(e.to_string()))?;
    println!(
        "# incidence positive switching{}, dimension {}",
        if injective { " (injective)" } else { "" },
        assignment.dimension()
    );
    print!("{}", io::serialize_switching(&assignment));
    match sgdim::build_incidence(&g) {
        Ok(b) => {
            println!("# incidence matrix ({} x {}):", b.rows(), b.cols());
            for line in b.to_string().lines() {
                println!("# {line}");
            }
        }
        Err(_) => println!("# no edges, no incidence matrix"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cache_path(explicit: Option<PathBuf>) -> Option<PathBuf> {
    explicit.or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))
}

fn with_cache<T>(
    cache: Option<PathBuf>,
    compute: impl FnOnce() -> Result<T, CliError>,
) -> Result<T, CliError> {
    let path = cache_path(cache);
    if let Some(path) = &path {
        if path.exists() {
            nip::load_cache_file(path).map_err(|e| CliError::Input(e.to_string()))?;
        }
    }
    let value = compute()?;
    if let Some(path) = &path {
        nip::save_cache_file(path).map_err(|e| CliError::Input(e.to_string()))?;
    }
    Ok(value)
}

fn print_nip_report(r: &NipReport) {
    println!("{}({}) = {}", r.kind_name(), r.k, r.value);
    println!(
        "# compatibility graph: {} vertices, {} edges",
        r.graph_vertices, r.graph_edges
    );
    println!("# value computed by exhaustive branch-and-bound clique search");
    println!("# witness vectors, one per line:");
    for v in &r.witness {
        let trits: Vec<String> = v.trits().iter().map(|t| t.to_string()).collect();
        println!("{}", trits.join(" "));
    }
}

trait KindName {
    fn kind_name(&self) -> &'static str;
}

impl KindName for NipReport {
    fn kind_name(&self) -> &'static str {
        match self.kind {
            nip::NipKind::Nu => "nu",
            nip::NipKind::Lambda => "lambda",
        }
    }
}

fn nu_command(k: usize, cache: Option<PathBuf>) -> Result<ExitCode, CliError> {
    let report = with_cache(cache, || nip::nu(k).map_err(CliError::from))?;
    print_nip_report(&report);
    Ok(ExitCode::SUCCESS)
}

fn lambda_command(k: usize, cache: Option<PathBuf>) -> Result<ExitCode, CliError> {
    let report = with_cache(cache, || nip::lambda_lines(k).map_err(CliError::from))?;
    print_nip_report(&report);
    Ok(ExitCode::SUCCESS)
}

fn nubar_command(n: usize, max_k: usize, cache: Option<PathBuf>) -> Result<ExitCode, CliError> {
    let value = with_cache(cache, || nip::nu_bar(n, max_k).map_err(CliError::from))?;
    println!("nubar({n}) = {value}");
    let consulted: Vec<String> = (1..=value)
        .map(|k| {
            let v = nip::nu(k).map(|r| r.value.to_string()).unwrap_or_default();
            format!("nu({k})={v}")
        })
        .collect();
    println!("# from: {}", consulted.join(" "));
    Ok(ExitCode::SUCCESS)
}

fn gen(family: &str, params: &[String]) -> Result<ExitCode, CliError> {
    let bad = |msg: &str| CliError::Input(format!("gen {family}: {msg}"));
    let need = |count: usize| -> Result<(), CliError> {
        if params.len() != count {
            Err(bad(&format!(
                "expected {count} parameter(s), got {}",
                params.len()
            )))
        } else {
            Ok(())
        }
    };
    let parse_n = |s: &String| -> Result<usize, CliError> {
        s.parse()
            .map_err(|_| bad(&format!("'{s}' is not a non-negative integer")))
    };
    let g = match family {
        "cycle" => {
            need(2)?;
            generators::cycle(parse_n(&params[0])?, parse_n(&params[1])?)
        }
        "path" => {
            need(2)?;
            let sign = match params[1].as_str() {
                "+" => Sign::Pos,
                "-" => Sign::Neg,
                other => return Err(bad(&format!("'{other}' is not a sign (+ or -)"))),
            };
            generators::path(parse_n(&params[0])?, sign)
        }
        "complete" => {
            need(2)?;
            let selector = match params[1].as_str() {
                "none" => NegativeEdges::None,
                "one" => NegativeEdges::One,
                "all" => NegativeEdges::All,
                other => return Err(bad(&format!("'{other}' is not one of none|one|all"))),
            };
            generators::complete(parse_n(&params[0])?, selector)
        }
        "wheel" => {
            need(1)?;
            generators::wheel_antibalanced(parse_n(&params[0])?)
        }
        "figure1" => {
            need(0)?;
            Ok(generators::figure1())
        }
        "figure2" => {
            need(0)?;
            Ok(generators::figure2())
        }
        "figure3" => {
            need(0)?;
            Ok(generators::figure3())
        }
        "figure4" => {
            need(0)?;
            Ok(generators::figure4())
        }
        other => {
            return Err(CliError::Input(format!(
                "unknown family '{other}' (cycle, path, complete, wheel, figure1..figure4)"
            )))
        }
    }
    .map_err(|e| CliError::Input(e.to_string()))?;
    print!("{}", io::serialize_graph(&g));
    Ok(ExitCode::SUCCESS)
}
