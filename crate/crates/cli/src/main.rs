use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;

use commands::{CliError, Outcome};

/// Exact model checking for sequential effect algebras.
#[derive(Debug, Parser)]
#[command(name = "sealab", version)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

/// Window bounds for the symbolic model. Unset bounds take the default
/// window's value.
#[derive(Debug, Args, Clone, Copy)]
pub struct WindowArgs {
    /// Largest a/b subscript.
    #[arg(long)]
    n: Option<u32>,
    /// Largest i and k subscript of c/d elements.
    #[arg(long)]
    ik: Option<u32>,
    /// Largest |m| subscript of c/d elements.
    #[arg(long)]
    m: Option<u32>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate an expression such as "c[1,0,0] * c[0,1,0]" or "(a1 + a2)'".
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Check the axioms on "e0" (over a window) or on a model file.
    Check {
        target: String,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Replay the failure of the average value inequality step by step.
    Counterexample,
    /// List all ordered pairs on which the average value inequality fails.
    Scan {
        target: String,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Enumerate small finite models and survey the inequality over them.
    Search {
        #[arg(long, default_value_t = 4)]
        max_order: usize,
        /// Count models up to isomorphism.
        #[arg(long, default_value_t = true, num_args = 0..=1, default_missing_value = "true",
              action = clap::ArgAction::Set)]
        mod_iso: bool,
        /// Only enumerate effect algebras, without sequential products.
        #[arg(long)]
        effect_only: bool,
        /// Write every model found and the failing pairs to this directory.
        #[arg(long)]
        emit: Option<PathBuf>,
        /// Permit orders above 6.
        #[arg(long)]
        allow_large: bool,
    },
    /// Print a model file in canonical form.
    Fmt {
        file: PathBuf,
        /// Rewrite the file instead of printing it.
        #[arg(long)]
        in_place: bool,
    },
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Eval { expr } => commands::eval(expr),
        Command::Check { target, window } => commands::check(target, window),
        Command::Counterexample => Ok(commands::counterexample()),
        Command::Scan { target, window } => commands::scan(target, window),
        Command::Search {
            max_order,
            mod_iso,
            effect_only,
            emit,
            allow_large,
        } => commands::search(sealab_core::search::SearchConfig {
            max_order: *max_order,
            require_sequential: !effect_only,
            mod_isomorphism: *mod_iso,
            emit_dir: emit.clone(),
            allow_large: *allow_large,
        }),
        Command::Fmt { file, in_place } => commands::fmt(file, *in_place),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&outcome.json).expect("JSON values serialize")
                );
            } else {
                print!("{}", outcome.text);
            }
            ExitCode::from(outcome.code)
        }
        Err(err) => {
            if cli.json {
                println!("{}", serde_json::json!({ "error": err.to_string() }));
            }
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
