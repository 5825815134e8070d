use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};

use hypergraph4::classifier::{classify_all, signature};
use hypergraph4::geoment::{geometric_entanglement, SolverPolicy};
use hypergraph4::orbits::{enumerate_orbits, OrbitTable};
use hypergraph4::report::{emit_report, ReportFormat};
use hypergraph4::statevec::{build_state, entropy_profile, verify_stabilizers};
use hypergraph4::verify::{run_suites, Suite};
use hypergraph4::{ClassifyError, HypergraphCode};

const EXIT_IO: u8 = 1;
const EXIT_FAILED: u8 = 2;

#[derive(Parser)]
#[command(name = "hypergraph4", version, about = "Four-qubit hypergraph state classification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify all 32768 codes and report the 28 hypergraph classes.
    Classify {
        #[command(flatten)]
        policy: PolicyArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Orbit table dump, reused when valid and rewritten otherwise.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Describe one hypergraph given as comma-separated edges, e.g. "1234,123".
    Query {
        edges: String,
        #[command(flatten)]
        policy: PolicyArgs,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Run the exhaustive structural suites.
    Verify {
        /// Run only this suite.
        #[arg(long, value_parser = parse_suite)]
        suite: Option<Suite>,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
}

#[derive(Args)]
struct PolicyArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..))]
    restarts: u64,
    #[arg(long, default_value_t = 1e-12, value_parser = parse_tol)]
    tol: f64,
    #[arg(long, default_value_t = 5000)]
    max_iter: usize,
}

impl PolicyArgs {
    fn policy(&self) -> SolverPolicy {
        SolverPolicy { restarts: self.restarts as usize, tol: self.tol, max_iter: self.max_iter, seed: self.seed }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Md,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => ReportFormat::Json,
            Format::Csv => ReportFormat::Csv,
            Format::Md => ReportFormat::Markdown,
        }
    }
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

fn parse_tol(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
        Ok(t) => Err(format!("tolerance must be positive, got {t}")),
        Err(e) => Err(e.to_string()),
    }
}

fn load_table(cache: Option<&Path>) -> Result<OrbitTable, String> {
    match cache {
        Some(path) => OrbitTable::load_or_build(path).map_err(|e| e.to_string()),
        None => Ok(enumerate_orbits()),
    }
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn classify(policy: SolverPolicy, format: Format, out: Option<PathBuf>, cache: Option<PathBuf>) -> ExitCode {
    let table = match load_table(cache.as_deref()) {
        Ok(t) => t,
        Err(e) => return fail(EXIT_IO, e),
    };
    let result = match classify_all(&table, &policy) {
        Ok(r) => r,
        Err(e @ ClassifyError::Orbit(_)) => return fail(EXIT_IO, e),
        Err(e) => return fail(EXIT_FAILED, e),
    };
    let doc = match emit_report(&result, format.into()) {
        Ok(d) => d,
        Err(e) => return fail(EXIT_IO, e),
    };
    match out {
        Some(path) => {
            if let Err(e) = fs::write(&path, doc) {
                return fail(EXIT_IO, format!("writing report to {}: {e}", path.display()));
            }
        }
        None => print!("{doc}"),
    }
    ExitCode::SUCCESS
}

fn query(edges: &str, policy: SolverPolicy, cache: Option<PathBuf>) -> ExitCode {
    let h: HypergraphCode = match edges.parse() {
        Ok(h) => h,
        Err(e) => return fail(EXIT_IO, e),
    };
    let table = match load_table(cache.as_deref()) {
        Ok(t) => t,
        Err(e) => return fail(EXIT_IO, e),
    };
    let sol = match geometric_entanglement(h, &policy) {
        Ok(s) => s,
        Err(e) => return fail(EXIT_FAILED, e),
    };
    let orbit = table.orbit_of(h);
    let standard = h.standardize().unwrap_or(h);
    let show = |c: HypergraphCode| if c.is_empty() { "(none)".to_string() } else { c.to_string() };
    println!("edges: {}", show(h));
    println!("code: {}", h.raw());
    println!("rank: {}", h.rank());
    println!("standardized: {}", show(standard));
    let amps: Vec<&str> = build_state(h).amps.iter().map(|a| if *a < 0.0 { "-" } else { "+" }).collect();
    println!("amplitude signs (|0000>..|1111>, vertex 1 lowest): {}", amps.concat());
    println!(
        "orbit: id {}, representative {} ({}), size {}, rank {}, m {}",
        orbit.id,
        orbit.rep.raw(),
        show(orbit.rep.standardize().unwrap_or(orbit.rep)),
        orbit.size,
        orbit.rank,
        orbit.m.map_or("-".to_string(), |m| m.to_string())
    );
    println!("ge: {:.6} (restarts hit {}, converged {})", sol.eg, sol.restarts_hit, sol.converged);
    let p = entropy_profile(h);
    let fmt = |v: &[f64]| v.iter().map(|x| format!("{x:.4}")).collect::<Vec<_>>().join(" ");
    println!("be2 (12|34 13|24 14|23): {}", fmt(&p.be2));
    println!("be1 (1|234 2|134 3|124 4|123): {}", fmt(&p.be1));
    println!("stabilizers: {}", if verify_stabilizers(h) { "ok" } else { "FAILED" });
    if orbit.rank >= 3 {
        if let Ok(run) = signature(&table, h, &policy) {
            if let Ok(row) = hypergraph4::classifier::match_reference_row(orbit.rank, &run.signature) {
                println!("class: No.{} (table {})", row.no, row.table());
            }
        }
    }
    ExitCode::SUCCESS
}

fn verify(suite: Option<Suite>, cache: Option<PathBuf>) -> ExitCode {
    let table = match load_table(cache.as_deref()) {
        Ok(t) => t,
        Err(e) => return fail(EXIT_IO, e),
    };
    let suites = suite.map_or(Suite::ALL.to_vec(), |s| vec![s]);
    let results = run_suites(&suites, &table);
    for r in &results {
        println!("{r}");
    }
    if results.iter().all(|r| r.passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILED)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            if !e.use_stderr() {
                return ExitCode::SUCCESS;
            }
            eprintln!("\n{}", Cli::command().render_usage());
            return ExitCode::from(EXIT_IO);
        }
    };
    match cli.command {
        Command::Classify { policy, format, out, cache } => classify(policy.policy(), format, out, cache),
        Command::Query { edges, policy, cache } => query(&edges, policy.policy(), cache),
        Command::Verify { suite, cache } => verify(suite, cache),
    }
}
