//! Command-line front end for the channel-flow library.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or configuration
//! error.

pub mod commands;
pub mod config;
pub mod output;
pub mod verify;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use config::RunConfig;
use verify::{ReportDocument, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "chanflow", version, about = "Laminar channel flow: spectral solutions, oracle runs and checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Mean-velocity profile at eval.time (with the closed form for constant forcing).
    Profile { config: PathBuf },
    /// Profiles at every eval.times entry, optionally against the oracle.
    Evolve { config: PathBuf },
    /// Run a verification suite and write a JSON report.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Report path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// CSV with columns `x3,U`; checked for reflection symmetry.
        #[arg(long)]
        fixture: Option<PathBuf>,
    },
}

/// Parses a `x3,U` CSV (header required) and returns the `U` column.
pub fn read_fixture(path: &Path) -> Result<Vec<f64>, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| format!("{}: empty fixture", path.display()))?;
    let cols: Vec<&str> = header.split(',').map(str::trim).collect();
    let u_col = cols
        .iter()
        .position(|c| *c == "U")
        .ok_or_else(|| format!("{}: header must contain a `U` column", path.display()))?;
    lines
        .enumerate()
        .map(|(i, line)| {
            line.split(',')
                .nth(u_col)
                .and_then(|v| v.trim().parse::<f64>().ok())
                .filter(|v| v.is_finite())
                .ok_or_else(|| format!("{}: row {}: bad `U` value", path.display(), i + 2))
        })
        .collect()
}

fn load_config(path: &Path) -> Result<RunConfig, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    RunConfig::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn thread_count() -> Result<usize, String> {
    match std::env::var("CHANFLOW_THREADS") {
        Err(_) => Ok(0),
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("CHANFLOW_THREADS: `{v}` is not a non-negative integer")),
    }
}

fn run_table(path: &Path, evolve: bool) -> i32 {
    let cfg = match load_config(path) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let table = if evolve { commands::evolve(&cfg) } else { commands::profile(&cfg) };
    let table = match table {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    if let Err(e) = output::emit(cfg.output_path.as_deref(), &table.render(cfg.output_format)) {
        eprintln!("error: writing output: {e}");
        return EXIT_USAGE;
    }
    for (k, v) in &table.summary {
        eprintln!("{k} = {}", output::fmt_f64(*v));
    }
    EXIT_OK
}

fn run_verify(suite: Suite, seed: u64, out: Option<&Path>, fixture: Option<&Path>) -> i32 {
    let fixture = match fixture.map(read_fixture).transpose() {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let threads = match thread_count() {
        Ok(n) => n,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: thread pool: {e}");
            return EXIT_USAGE;
        }
    };
    let mut report = pool.install(|| verify::run_suite(suite, seed));
    if let Some(values) = fixture {
        report.push(verify::fixture_check(&values));
        report.sort();
    }
    let doc = ReportDocument {
        schema: 1,
        suite: suite.name(),
        seed,
        passed: report.all_passed(),
        checks: &report.entries,
    };
    if let Err(e) = output::emit(out, &output::to_json(&doc)) {
        eprintln!("error: writing report: {e}");
        return EXIT_USAGE;
    }
    for e in report.failures() {
        eprintln!("FAIL {} (measured {}, bound {})", e.name, output::fmt_f64(e.measured), output::fmt_f64(e.bound));
    }
    eprintln!(
        "{} checks, {} failed",
        report.len(),
        report.failures().count()
    );
    if doc.passed {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::Profile { config } => run_table(&config, false),
        Command::Evolve { config } => run_table(&config, true),
        Command::Verify { suite, seed, out, fixture } => {
            run_verify(suite, seed, out.as_deref(), fixture.as_deref())
        }
    }
}
