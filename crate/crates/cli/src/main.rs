use std::process::ExitCode;

use clap::{Parser, Subcommand};
use quasiord::structure::Property;
use quasiord_cli::commands::{self, ForestRelation, Outcome};
use quasiord_cli::config::{RunConfig, SharedArgs};
use quasiord_cli::report::{write_file, Report};
use quasiord_cli::suite::{run_suite, SuiteOptions};
use quasiord_cli::CliError;

#[derive(Parser)]
#[command(name = "quasiord", version, about = "Finite verification of quasi-orderings on Z, Q[X] and Q[X,Y]")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    shared: SharedArgs,
}

#[derive(Subcommand)]
enum Command {
    /// List the shipped quasi-orderings of a ring.
    Catalog,
    /// Run the axiom battery on quasi-orderings (all of --ring if none given).
    Check {
        ids: Vec<String>,
        /// Run the battery on a corrupted copy: swap, minus-one or transitivity.
        #[arg(long)]
        mutant: Option<String>,
    },
    /// Decide whether the first quasi-ordering is finer than the second.
    Compare { finer: String, coarser: String },
    /// Build and certify the tree of one support.
    Tree {
        #[arg(long, default_value = "0")]
        support: String,
    },
    /// Partition the whole catalog into one tree per support.
    Forest {
        #[arg(long, value_enum, default_value = "le-prime")]
        relation: ForestRelation,
    },
    /// Convexity of an ideal, and agreement with coarsening into the trivial.
    Convex {
        #[arg(long)]
        ideal: String,
        ids: Vec<String>,
    },
    /// Decide specialness.
    Special { ids: Vec<String> },
    /// Decide the Manis property.
    Manis { ids: Vec<String> },
    /// Run the acceptance battery.
    Suite {
        /// Corrupt the integer ordering to demonstrate a failing run.
        #[arg(long)]
        corrupt: bool,
    },
}

fn suite(cfg: &RunConfig, opts: SuiteOptions) -> Result<Outcome, CliError> {
    let results = run_suite(cfg, opts)?;
    for r in &results {
        eprintln!("{}", r.line());
    }
    let first_failure = results.iter().find(|r| !r.passed);
    if let Some(r) = first_failure {
        eprintln!("first failing criterion: {}", r.id);
    }
    let report = Report::new("suite", cfg, first_failure.is_none(), &results)?;
    Ok(Outcome { report, dot: Vec::new() })
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let cfg = cli.shared.resolve()?;
    let outcome = match &cli.command {
        Command::Catalog => commands::cmd_catalog(&cfg)?,
        Command::Check { ids, mutant } => commands::cmd_check(ids, mutant.as_deref(), &cfg)?,
        Command::Compare { finer, coarser } => commands::cmd_compare(finer, coarser, &cfg)?,
        Command::Tree { support } => commands::cmd_tree(support, &cfg)?,
        Command::Forest { relation } => commands::cmd_forest(*relation, &cfg)?,
        Command::Convex { ideal, ids } => commands::cmd_convex(ideal, ids, &cfg)?,
        Command::Special { ids } => commands::cmd_property(Property::Special, ids, &cfg)?,
        Command::Manis { ids } => commands::cmd_property(Property::Manis, ids, &cfg)?,
        Command::Suite { corrupt } => suite(&cfg, SuiteOptions { corrupt: *corrupt })?,
    };
    outcome.report.emit(cfg.out.as_deref())?;
    for (path, text) in &outcome.dot {
        write_file(path, text)?;
    }
    Ok(outcome.report.passed())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
