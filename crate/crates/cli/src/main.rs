mod args;
mod commands;
mod input;
mod report;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use serde_json::{json, Value};

use args::{Cli, Command, OutputMode};
use input::{parse_json, IdealInput, MapInput};
use report::{digest, Report, SCHEMA_VERSION};

/// Why a run stopped: bad input (exit 2) or a mathematical failure (exit 1).
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Math(multideg::Error),
}

impl From<multideg::Error> for Failure {
    fn from(e: multideg::Error) -> Self {
        use multideg::Error::*;
        match e {
            InvalidRing(_)
            | UnknownIdentifier { .. }
            | Syntax { .. }
            | NegativeExponent { .. }
            | ExponentOverflow => Failure::Usage(e.to_string()),
            _ => Failure::Math(e),
        }
    }
}

fn error_kind(e: &multideg::Error) -> &'static str {
    use multideg::Error::*;
    match e {
        InvalidRing(_) => "invalid-ring",
        UnknownIdentifier { .. } => "unknown-identifier",
        Syntax { .. } => "syntax",
        NegativeExponent { .. } => "negative-exponent",
        ExponentOverflow => "exponent-overflow",
        NotHomogeneous(_) => "not-homogeneous",
        BudgetExceeded { .. } => "budget-exceeded",
        DimensionGuard { .. } => "dimension-guard",
        EnumerationGuard { .. } => "enumeration-guard",
        InvalidArgument(_) => "invalid-argument",
        PresentationMismatch(_) => "presentation-mismatch",
        NotAlternating(_) => "not-alternating",
        ResamplingExhausted { .. } => "resampling-exhausted",
        Invariant(_) => "invariant",
    }
}

fn dispatch(command: &Command, text: &str) -> commands::Outcome {
    let budget = command.output().pair_budget;
    match command {
        Command::Hilbert { pivot, .. } => {
            let ideal = parse_json::<IdealInput>(text)?.build(budget)?;
            commands::hilbert(&ideal, *pivot)
        }
        Command::MixedMult { .. } => {
            let ideal = parse_json::<IdealInput>(text)?.build(budget)?;
            commands::mixed_mult(&ideal)
        }
        Command::Multidegree { type_vector, .. } => {
            let ideal = parse_json::<IdealInput>(text)?.build(budget)?;
            commands::multidegree_cmd(&ideal, type_vector.as_deref())
        }
        Command::Projdeg {
            method, sampling, ..
        } => {
            let input = parse_json::<MapInput>(text)?;
            let map = input.build(budget)?;
            let matrix = input.build_matrix(map.source())?;
            commands::projdeg(
                &map,
                matrix.as_ref(),
                *method,
                sampling.seed,
                sampling.trials,
            )
        }
        Command::Formula(args) => commands::formula(args),
        Command::Satfiber { q_max, .. } => {
            let map = parse_json::<MapInput>(text)?.build(budget)?;
            commands::satfiber(&map, *q_max)
        }
        Command::CheckG { s, assert, .. } => {
            let input = parse_json::<MapInput>(text)?;
            let (ring, forms) = input.build_forms()?;
            let matrix = input.build_matrix(&ring)?;
            commands::check_g(&ring, &forms, matrix.as_ref(), *s, *assert)
        }
        Command::Slice {
            type_vector,
            sampling,
            ..
        } => {
            let ideal = parse_json::<IdealInput>(text)?.build(budget)?;
            commands::slice(&ideal, type_vector, sampling.seed, sampling.trials)
        }
    }
}

fn emit(report: &Report, mode: OutputMode) {
    let text = match mode {
        OutputMode::Pretty => serde_json::to_string_pretty(report),
        OutputMode::Compact => serde_json::to_string(report),
    }
    .expect("reports serialize");
    // a closed stdout is the reader's choice, not an error of ours
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = Cli::parse();
    let command = &cli.command;
    let output = command.output();

    let text = match command.input() {
        Some(path) => match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("mm: cannot read {}: {e}", path.display());
                return ExitCode::from(2);
            }
        },
        None => String::new(),
    };

    let start = Instant::now();
    let outcome = dispatch(command, &text);
    let elapsed = start.elapsed();

    let mut report = Report {
        schema_version: SCHEMA_VERSION,
        command: json!({"subcommand": command.name(), "argv": &argv[1..]}),
        inputs_digest: digest(text.as_bytes()),
        result: Value::Null,
        error: None,
        checks: Vec::new(),
        timing: json!({"elapsed_ms": elapsed.as_secs_f64() * 1e3}),
    };
    match outcome {
        Ok((result, checks)) => {
            let failed: Vec<&str> = checks
                .iter()
                .filter(|c| !c.passed)
                .map(|c| c.name)
                .collect();
            report.result = result;
            report.checks = checks;
            emit(&report, output.output);
            if failed.is_empty() || output.allow_failed_checks {
                ExitCode::SUCCESS
            } else {
                eprintln!("mm: failed checks: {}", failed.join(", "));
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("mm: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Math(e)) => {
            eprintln!("mm: {e}");
            report.error = Some(json!({"kind": error_kind(&e), "message": e.to_string()}));
            emit(&report, output.output);
            ExitCode::from(1)
        }
    }
}
