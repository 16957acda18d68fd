//! The `y00lab` experiment driver.
//!
//! Subcommands: `metrics`, `simulate`, `attack`, `sweep`. Exit codes:
//! 0 success, 2 configuration error, 3 capability refusal.

pub mod commands;
pub mod scenario;
pub mod svg;

use clap::{Parser, Subcommand};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use crate::error::{Error, Result};
pub use commands::{cmd_attack, cmd_metrics, cmd_simulate, cmd_sweep, Provenance, TOOL_VERSION};
pub use scenario::{AttackSelect, PlaintextSpec, Scenario, SweepSpec};

#[derive(Debug, Parser)]
#[command(
    name = "y00lab",
    version,
    about = "Y-00 quantum stream cipher laboratory: simulation, attacks, and security metrics"
)]
pub struct Cli {
    /// Override the scenario's master seed.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Override the scenario's trial count.
    #[arg(long, global = true)]
    pub trials: Option<u64>,

    /// Output directory (overrides the scenario's out_dir).
    #[arg(long, global = true)]
    pub out_dir: Option<PathBuf>,

    /// Worker threads; outputs are byte-identical at any setting.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the full security-metric set for a scenario.
    Metrics { scenario: PathBuf },
    /// Run one encryption/decryption session and record the transcript.
    Simulate { scenario: PathBuf },
    /// Evaluate the scenario's selected attack.
    Attack { scenario: PathBuf },
    /// Evaluate metrics across a parameter grid.
    Sweep { spec: PathBuf },
}

/// Entry point used by the thin binary.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli.threads;
    let body = || dispatch(cli);
    let outcome = match threads {
        Some(t) if t > 0 => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(body),
            Err(e) => Err(Error::config(format!("cannot build thread pool: {e}"))),
        },
        Some(_) => Err(Error::config("--threads must be at least 1")),
        None => body(),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Config(_) | Error::Domain(_) | Error::Unsupported(_) => 2,
        Error::Refused(_) => 3,
        _ => 1,
    }
}

/// Diagnostic verbosity comes from the LOG_LEVEL environment variable —
/// the only environment input; everything else lives in the scenario file.
fn debug_enabled() -> bool {
    matches!(
        std::env::var("LOG_LEVEL").as_deref(),
        Ok("debug") | Ok("trace")
    )
}

fn dispatch(cli: Cli) -> Result<()> {
    match &cli.command {
        Command::Metrics { scenario } => {
            let (s, sha) = load_scenario(scenario, &cli)?;
            let out = output_dir(&cli, s.out_dir.as_deref());
            cmd_metrics(&s, &sha, &out)?;
        }
        Command::Simulate { scenario } => {
            let (s, sha) = load_scenario(scenario, &cli)?;
            let out = output_dir(&cli, s.out_dir.as_deref());
            let base = scenario.parent().unwrap_or_else(|| Path::new("."));
            cmd_simulate(&s, base, &sha, &out)?;
        }
        Command::Attack { scenario } => {
            let (s, sha) = load_scenario(scenario, &cli)?;
            let out = output_dir(&cli, s.out_dir.as_deref());
            cmd_attack(&s, &sha, &out)?;
        }
        Command::Sweep { spec } => {
            let (mut spec_val, sha) = SweepSpec::load(spec)?;
            apply_overrides(&mut spec_val.base, &cli);
            let out = output_dir(&cli, spec_val.base.out_dir.as_deref());
            cmd_sweep(&spec_val, &sha, &out)?;
        }
    }
    Ok(())
}

fn load_scenario(path: &Path, cli: &Cli) -> Result<(Scenario, String)> {
    let (mut s, sha) = Scenario::load(path)?;
    apply_overrides(&mut s, cli);
    if s.trials < 1 {
        return Err(Error::config("trials must be at least 1"));
    }
    if debug_enabled() {
        eprintln!(
            "[debug] scenario {}: seed={} keylen={} trials={} M={} alpha={} osk={}",
            path.display(),
            s.seed,
            s.keylen,
            s.trials,
            s.params.m,
            s.params.alpha_mag,
            s.params.osk_enabled
        );
    }
    Ok((s, sha))
}

fn apply_overrides(s: &mut Scenario, cli: &Cli) {
    if let Some(seed) = cli.seed {
        s.seed = seed;
    }
    if let Some(trials) = cli.trials {
        s.trials = trials;
    }
}

fn output_dir(cli: &Cli, scenario_dir: Option<&Path>) -> PathBuf {
    cli.out_dir
        .clone()
        .or_else(|| scenario_dir.map(Path::to_path_buf))
        .unwrap_or_else(|| PathBuf::from("."))
}
