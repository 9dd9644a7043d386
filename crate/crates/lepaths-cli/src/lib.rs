//! Command-line front end for `lepaths`: poset documents in, JSON reports
//! (or ASCII region drawings) out.
//!
//! Exit codes: 0 when every assertion held, 2 when a report records a
//! violated assertion, 3 for malformed input, refused preconditions and
//! exceeded bounds.  The worker count of scans comes from `LEPATHS_WORKERS`
//! (default: all cores); reports do not depend on it.

pub mod commands;
pub mod document;
pub mod error;
pub mod report;

use std::time::Instant;

use clap::{Parser, Subcommand};

pub use commands::{CheckArgs, RegionArgs, ScanArgs, StatsArgs};
pub use document::PosetDocument;
pub use error::{CliError, CliResult, EXIT_INPUT, EXIT_OK, EXIT_VIOLATION};
pub use report::Report;

/// Environment variable holding the scan worker count.
pub const WORKERS_ENV: &str = "LEPATHS_WORKERS";

#[derive(Parser, Debug)]
#[command(
    name = "lepaths",
    version,
    about = "Linear-extension statistics and their lattice-path checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<String>,
    /// Add wall-clock timing to the report (makes it machine dependent).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Tabulate N(k) or F(k), optionally with q- and multivariate analogues.
    Stats(StatsArgs),
    /// Check log-concavity or the equality conditions for each k.
    Check(CheckArgs),
    /// Run a verification suite over many posets or regions.
    Scan(ScanArgs),
    /// Draw the lattice region of a width-two poset.
    Region(RegionArgs),
}

/// What a command produced.
#[derive(Debug)]
pub enum Output {
    Report(Box<Report>),
    Text(String),
}

impl Output {
    /// Serialized output.
    pub fn render(&self) -> String {
        match self {
            Output::Report(r) => r.to_json(),
            Output::Text(t) => t.clone(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Output::Report(r) if !r.assertions_hold => EXIT_VIOLATION,
            _ => EXIT_OK,
        }
    }
}

pub fn run(cli: &Cli) -> CliResult<Output> {
    let start = Instant::now();
    let mut report = match &cli.command {
        Command::Stats(a) => commands::cmd_stats(a)?,
        Command::Check(a) => commands::cmd_check(a)?,
        Command::Scan(a) => commands::cmd_scan(a)?,
        Command::Region(a) => return Ok(Output::Text(commands::cmd_region(a)?)),
    };
    if cli.timing {
        report.timing = Some(report::Timing {
            elapsed_ms: start.elapsed().as_millis(),
            workers: rayon::current_num_threads(),
        });
    }
    Ok(Output::Report(Box::new(report)))
}

/// Configures the global worker pool from [`WORKERS_ENV`].
pub fn init_workers() -> CliResult<()> {
    let Ok(v) = std::env::var(WORKERS_ENV) else {
        return Ok(());
    };
    let n: usize = v.parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        CliError::Input(format!(
            "{WORKERS_ENV} must be a positive integer, got {v:?}"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Input(format!("cannot start {n} workers: {e}")))
}
