use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use pgacalc::{eval_str, format_error, format_value, selftest, OutputMode};

/// Exact rational plane-geometry calculator.
///
/// Evaluates a small s-expression language over the projective geometric
/// algebra Cl(2,0,1) with arbitrary-precision rational coefficients. All
/// results are exact; output is deterministic and canonical.
#[derive(Parser)]
#[command(name = "pgacalc", version, about, long_about = None)]
struct Cli {
    /// Emit machine-readable JSON records instead of text
    #[arg(long, global = true)]
    structured: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a single expression given as an argument
    Eval { expr: String },
    /// Evaluate a file with one expression per line (`;` comments, blank
    /// lines ignored); prints one output line per expression
    Batch { path: PathBuf },
    /// Run the built-in verification suites and report pass/fail counts
    Selftest,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mode = if cli.structured {
        OutputMode::Structured
    } else {
        OutputMode::Text
    };
    match cli.command {
        Command::Eval { expr } => run_eval(&expr, mode),
        Command::Batch { path } => run_batch(&path, mode),
        Command::Selftest => run_selftest(),
    }
}

fn run_eval(expr: &str, mode: OutputMode) -> ExitCode {
    match eval_str(expr) {
        Ok(value) => {
            println!("{}", format_value(&value, mode));
            ExitCode::SUCCESS
        }
        Err(err) => {
            println!("{}", format_error(&err.to_string(), mode));
            ExitCode::FAILURE
        }
    }
}

fn run_batch(path: &PathBuf, mode: OutputMode) -> ExitCode {
    let content = match std::fs::read_to_string(path) {
        Ok(c) => c,
        Err(err) => {
            eprintln!("pgacalc: cannot read {}: {err}", path.display());
            return ExitCode::from(2);
        }
    };
    let mut had_error = false;
    for (index, line) in content.lines().enumerate() {
        let file_line = (index + 1) as u32;
        let result = pgacalc::tokenize(line).and_then(|tokens| {
            // a blank or comment-only line tokenizes to the end marker alone
            if tokens.len() == 1 {
                return Ok(None);
            }
            pgacalc::parse(tokens).and_then(|e| pgacalc::evaluate(&e).map(Some))
        });
        match result {
            Ok(None) => {}
            Ok(Some(value)) => println!("{}", format_value(&value, mode)),
            Err(mut err) => {
                // each batch line is lexed on its own; re-anchor to the file line
                err.pos.line = file_line;
                println!("{}", format_error(&err.to_string(), mode));
                had_error = true;
            }
        }
    }
    if had_error {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}

fn run_selftest() -> ExitCode {
    let reports = selftest::run_all();
    let mut all_ok = true;
    let mut total_cases = 0;
    for report in &reports {
        let status = if report.passed() { "ok  " } else { "FAIL" };
        println!(
            "{status} {:<26} {:>5} cases, {} failures",
            report.name, report.cases, report.failures
        );
        all_ok &= report.passed();
        total_cases += report.cases;
    }
    println!(
        "selftest: {} suites, {} cases, {}",
        reports.len(),
        total_cases,
        if all_ok { "all passed" } else { "FAILURES" }
    );
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
