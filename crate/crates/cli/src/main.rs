//! `ghk`: generalized Hilbert-Kunz computations from JSON problem files.
//!
//! ```text
//! ghk problem.json --task ghk --out results/
//! ```
//!
//! Exit status is 0 on success, 2 when the input or a hypothesis check fails,
//! 3 when a resource budget was exceeded (partial reports are still written),
//! and 1 on I/O errors.

mod commands;
mod problem;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use ghk_core::groebner::Budget;

use commands::{Failure, Settings};
use problem::Command;

#[derive(Debug, Parser)]
#[command(name = "ghk", version, about = "Generalized Hilbert-Kunz functions and multiplicities")]
struct Args {
    /// Problem file (JSON).
    file: PathBuf,
    /// Command to run; overrides `task.command` in the file.
    #[arg(long, value_enum)]
    task: Option<Command>,
    /// Directory for reports; overrides `task.out` (default: current directory).
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,
    /// Largest Gröbner basis degree processed per row.
    #[arg(long, value_name = "N")]
    budget_gb_degree: Option<i64>,
    /// Largest number of S-pairs reduced per Gröbner basis.
    #[arg(long, value_name = "N")]
    budget_pairs: Option<u64>,
    /// Worker threads (default: all cores).
    #[arg(long, value_name = "N")]
    jobs: Option<usize>,
}

fn fail(code: u8, msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn exit_for(f: Failure) -> ExitCode {
    match f {
        Failure::Invalid(msg) => fail(2, &msg),
        Failure::Budget(msg) => fail(3, &format!("budget exceeded: {msg}")),
        Failure::Io(e) => fail(1, &format!("{e:#}")),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    if let Some(n) = args.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            return fail(1, &e.to_string());
        }
    }
    let text = match std::fs::read_to_string(&args.file) {
        Ok(t) => t,
        Err(e) => return fail(1, &format!("reading {}: {e}", args.file.display())),
    };
    let mut problem = match problem::parse(&text) {
        Ok(p) => p,
        Err(msg) => return fail(2, &msg),
    };

    // flags win over the file; the resolved values go into every report
    if let Some(c) = args.task {
        problem.task.command = Some(c);
    }
    if let Some(d) = args.budget_gb_degree {
        problem.task.budgets.gb_degree = Some(d);
    }
    if let Some(n) = args.budget_pairs {
        problem.task.budgets.pairs = Some(n);
    }
    let Some(command) = problem.task.command else {
        return fail(2, "task.command: missing (or pass --task)");
    };
    let out = args
        .out
        .or_else(|| problem.task.out.as_ref().map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("."));
    let settings = Settings {
        command,
        out,
        budget: Budget {
            max_degree: problem.task.budgets.gb_degree,
            max_pairs: problem.task.budgets.pairs,
        },
    };

    match commands::run(&problem, &settings) {
        Ok(outcome) => {
            println!("{}", outcome.summary.trim_end());
            for f in &outcome.files {
                eprintln!("wrote {}", f.display());
            }
            match outcome.status {
                Ok(()) => ExitCode::SUCCESS,
                Err(f) => exit_for(f),
            }
        }
        Err(f) => exit_for(f),
    }
}
