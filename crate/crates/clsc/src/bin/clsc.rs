//! Thin command-line front end over the library: baseline tables,
//! parameter sweeps, and certificate verification.
//!
//! Exit codes: 0 success, 1 certificate or solve failure, 2 input error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use clsc::asymmetric::BonusFocVariant;
use clsc::config::ScenarioConfig;
use clsc::error::Error;
use clsc::experiments::{baseline_csv, run_verification};
use clsc::oracle::DEFAULT_SEED;
use clsc::sweep::{run_sweep, SweepAxis, SweepSpec};
use clsc::symmetric::AllocationMode;

#[derive(Parser)]
#[command(
    name = "clsc",
    about = "Closed-loop supply chain equilibrium solver",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the configured scenario and write the baseline table as CSV.
    Baseline(BaselineArgs),
    /// Sweep one or two parameters and write the grid as CSV.
    Sweep(SweepArgs),
    /// Solve, then run every optimality certificate; exit 0 iff all pass.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct BaselineArgs {
    /// Scenario config (JSON).
    #[arg(long)]
    config: PathBuf,
    /// Allocation mode(s) to tabulate.
    #[arg(long, default_value = "both", value_parser = ["proportional", "inertia", "both"])]
    mode: String,
    /// Output CSV path.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct SweepArgs {
    /// Scenario config (JSON).
    #[arg(long)]
    config: PathBuf,
    /// Axis-1 parameter name.
    #[arg(long)]
    param: String,
    #[arg(long)]
    from: f64,
    #[arg(long)]
    to: f64,
    #[arg(long)]
    steps: usize,
    /// Optional axis-2 parameter name.
    #[arg(long, requires_all = ["from2", "to2", "steps2"])]
    param2: Option<String>,
    #[arg(long, requires = "param2")]
    from2: Option<f64>,
    #[arg(long, requires = "param2")]
    to2: Option<f64>,
    #[arg(long, requires = "param2")]
    steps2: Option<usize>,
    /// Output CSV path.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    /// Scenario config (JSON).
    #[arg(long)]
    config: PathBuf,
    /// Deviation-grid density.
    #[arg(long, default_value_t = 4001)]
    grid: usize,
    /// Seed for randomized gradient-check points.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Solve the bonus stage from a first-order condition with the inertia
    /// term doubled, to demonstrate that the certificates catch it.
    #[arg(long, hide = true)]
    debug_doubled_inertia_foc: bool,
}

const EXIT_FAILURE: u8 = 1;
const EXIT_INPUT: u8 = 2;

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parameter(_)
        | Error::Domain(_)
        | Error::Config { .. }
        | Error::Json(_)
        | Error::Io(_) => EXIT_INPUT,
        Error::Regime(_) | Error::NonConvergence { .. } => EXIT_FAILURE,
    }
}

fn fail(e: Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(exit_code_for(&e))
}

fn cmd_baseline(args: BaselineArgs) -> ExitCode {
    let config = match ScenarioConfig::from_path(&args.config) {
        Ok(c) => c,
        Err(e) => return fail(e),
    };
    let modes: &[AllocationMode] = match args.mode.as_str() {
        "proportional" => &[AllocationMode::Proportional],
        "inertia" => &[AllocationMode::InertiaResponsiveness],
        _ => &[
            AllocationMode::Proportional,
            AllocationMode::InertiaResponsiveness,
        ],
    };
    let csv = match baseline_csv(&config, modes) {
        Ok(csv) => csv,
        Err(e) => return fail(e),
    };
    if let Err(e) = std::fs::write(&args.out, csv) {
        eprintln!("error: cannot write {}: {e}", args.out.display());
        return ExitCode::from(EXIT_FAILURE);
    }
    ExitCode::SUCCESS
}

fn cmd_sweep(args: SweepArgs) -> ExitCode {
    let config = match ScenarioConfig::from_path(&args.config) {
        Ok(c) => c,
        Err(e) => return fail(e),
    };
    let axis1 = SweepAxis::new(args.param, args.from, args.to, args.steps);
    let spec = match args.param2 {
        Some(param2) => SweepSpec::two_dimensional(
            axis1,
            SweepAxis::new(
                param2,
                args.from2.expect("clap enforces from2"),
                args.to2.expect("clap enforces to2"),
                args.steps2.expect("clap enforces steps2"),
            ),
        ),
        None => SweepSpec::one_dimensional(axis1),
    };
    let (csv, rows) = match run_sweep(&config, &spec) {
        Ok(result) => result,
        Err(e) => return fail(e),
    };
    if let Err(e) = std::fs::write(&args.out, csv) {
        eprintln!("error: cannot write {}: {e}", args.out.display());
        return ExitCode::from(EXIT_FAILURE);
    }
    let failed = rows.iter().filter(|r| r.status != "ok").count();
    if failed > 0 {
        eprintln!(
            "warning: {failed}/{} grid points failed to solve (see status column)",
            rows.len()
        );
        return ExitCode::from(EXIT_FAILURE);
    }
    ExitCode::SUCCESS
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    let config = match ScenarioConfig::from_path(&args.config) {
        Ok(c) => c,
        Err(e) => return fail(e),
    };
    let variant = if args.debug_doubled_inertia_foc {
        BonusFocVariant::DoubledInertia
    } else {
        BonusFocVariant::Exact
    };
    let report = match run_verification(&config, args.grid, args.seed, variant) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    print!("{}", report.render());
    if let Some(failure) = report.first_failure() {
        eprintln!("error: certificate `{}` failed", failure.name);
        return ExitCode::from(EXIT_FAILURE);
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Baseline(args) => cmd_baseline(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Verify(args) => cmd_verify(args),
    }
}
