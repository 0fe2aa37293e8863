// Copyright 2026 the bellwave authors
// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use bellwave_cli::config::RunConfig;
use bellwave_cli::{pipeline, CliError};

/// Two-qubit waveguide QED: revivals, backflow maps, dark-state lifetimes
/// and displacement-sensing bounds, as deterministic CSV.
#[derive(Parser)]
#[command(name = "bellwave", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Discrete-bath time evolution with Bell/backflow witnesses.
    Revival(RunArgs),
    /// Backflow measures over the (d, λ) grid (four-mode dynamics).
    Map(RunArgs),
    /// Dark-state decay rate vs node offset: exact vs analytic.
    Lifetime(RunArgs),
    /// Cramér-Rao displacement resolution table.
    Crb(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    /// TOML run configuration.
    #[arg(long)]
    config: PathBuf,
    /// Output CSV path (overrides [output].path).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Validate the configuration and print the effective parameter set
    /// without running.
    #[arg(long)]
    check: bool,
    /// Cap worker threads (default: all cores).
    #[arg(long)]
    threads: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, args) = match &cli.command {
        Command::Revival(a) => ("revival", a),
        Command::Map(a) => ("map", a),
        Command::Lifetime(a) => ("lifetime", a),
        Command::Crb(a) => ("crb", a),
    };
    match run(name, args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("bellwave: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(name: &str, args: &RunArgs) -> Result<(), CliError> {
    if let Some(n) = args.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Config(format!("--threads: {e}")))?;
    }

    let cfg = RunConfig::from_path(&args.config)?;
    let resolved = cfg.resolve()?;

    if args.check {
        print!("{}", resolved.effective_toml());
        eprintln!("bellwave: config OK");
        return Ok(());
    }

    let out_path = args
        .out
        .clone()
        .or_else(|| resolved.out_path.clone().map(PathBuf::from))
        .ok_or_else(|| CliError::Config("no output path: pass --out or set [output].path".into()))?;

    let (table, warnings) = match name {
        "revival" => pipeline::run_revival(&resolved)?,
        "map" => pipeline::run_map(&resolved)?,
        "lifetime" => pipeline::run_lifetime_scan(&resolved)?,
        _ => pipeline::run_crb(&resolved)?,
    };
    for w in &warnings {
        eprintln!("bellwave: warning: {w}");
    }

    let text = bellwave_cli::csvout::render(&table, &resolved.effective_toml());
    std::fs::write(&out_path, text)
        .map_err(|e| CliError::Config(format!("{}: {e}", out_path.display())))?;
    eprintln!(
        "bellwave: {name}: wrote {} rows to {}",
        table.rows.len(),
        out_path.display()
    );
    Ok(())
}
