//! Scenario runner over the Hadamard-manifold geometry library.
//!
//! Subcommands:
//!   example — reproduce the half-plane counterexample end to end
//!   probes  — run the five-clause defect suite on either model
//!   hull    — iterate geodesic joins to approximate a convex hull
//!   curve   — exp-interpolated curve vs the minimal geodesic
//!
//! Exit codes: 0 pass, 1 assertion failure, 2 usage error.

use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod config;
mod curve;
mod example;
mod hull;
mod output;
mod probes_cmd;

use config::CliError;

#[derive(Parser)]
#[command(
    name = "hadamard",
    version,
    about = "Geometry scenarios on flat space and the Poincare half-plane"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reproduce the half-plane counterexample: reference table, hull polylines, verdict
    Example(example::ExampleArgs),
    /// Run the five-clause defect probe suite and emit JSON-lines reports
    Probes(probes_cmd::ProbeArgs),
    /// Approximate the convex hull of a point set by iterated geodesic joins
    Hull(hull::HullArgs),
    /// Sample the exp-interpolated curve against the minimal geodesic
    Curve(curve::CurveArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Example(args) => example::run(args),
        Command::Probes(args) => probes_cmd::run(args),
        Command::Hull(args) => hull::run(args),
        Command::Curve(args) => curve::run(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
