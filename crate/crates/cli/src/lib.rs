//! Binary plumbing for the `photon-mux` CLI, kept in a library so the
//! integration tests can drive the argument parser in-process.

pub mod args;
pub mod config;
pub mod error;
pub mod fmt;
pub mod tasks;

use args::{Cli, CommandKind};
use clap::Parser;
use error::{CliError, CliResult};
use std::ffi::OsString;

/// Honor `PHOTON_MUX_THREADS` before any parallel work starts. A second
/// call in the same process is a no-op (the pool is already built).
fn init_thread_pool() -> CliResult<()> {
    let Ok(raw) = std::env::var("PHOTON_MUX_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw.parse().map_err(|_| {
        CliError::usage(format!(
            "PHOTON_MUX_THREADS must be a positive integer, got {raw:?}"
        ))
    })?;
    if threads == 0 {
        return Err(CliError::usage(
            "PHOTON_MUX_THREADS must be a positive integer, got 0",
        ));
    }
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global();
    Ok(())
}

fn execute(cli: Cli) -> CliResult<()> {
    let cfg = config::resolve(cli)?;
    if cfg.trials == 0 {
        return Err(CliError::usage("--trials must be at least 1"));
    }
    match cfg.command {
        CommandKind::Figure2 => tasks::figure2(&cfg),
        CommandKind::Figure3 => tasks::figure3(&cfg),
        CommandKind::Figure4 => tasks::figure4(&cfg),
        CommandKind::Table1 => tasks::table1(&cfg),
        CommandKind::Sweep => tasks::sweep(&cfg),
        CommandKind::McValidate => tasks::mc_validate(&cfg),
    }
}

/// Full CLI entry point; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    if let Err(e) = init_thread_pool() {
        eprintln!("error: {e}");
        return e.exit_code();
    }
    match execute(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
