//! Command-line front end for the `orbifold-gw` library.
//!
//! [`run`] parses arguments, executes one command and returns the rendered
//! output together with the process exit code, so the binary is a thin
//! wrapper and tests can drive commands in-process.

mod render;
mod suites;

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use orbifold_gw::frobenius::Status;
use orbifold_gw::Execution;

pub use render::{render, Document, NamedSeries, TableRow};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_D4: i32 = 11;
pub const EXIT_E6: i32 = 12;
pub const EXIT_HALPHEN: i32 = 13;
pub const EXIT_IDENTITIES: i32 = 14;
pub const EXIT_GENUS_ONE: i32 = 15;
pub const EXIT_GW_TABLE: i32 = 16;

/// Default WDVV truncation orders; the full check grows quickly with `T`.
pub const D4_WDVV_ORDER: i64 = 20;
pub const E6_WDVV_ORDER: i64 = 15;

#[derive(Debug, Parser)]
#[command(
    name = "orbifold-gw",
    version,
    about = "Exact q-series checks for the elliptic orbifolds P^1_{2,2,2,2} and P^1_{3,3,3}"
)]
pub struct Cli {
    /// Truncation order T: results are exact up to O(q^T).
    #[arg(long, global = true, env = "ORBIFOLD_GW_ORDER", default_value_t = 60,
          value_parser = clap::value_parser!(i64).range(2..))]
    pub order: i64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Build the f11 block with t4 t5 t6^4 repeated in place of
    /// the corrected t4^4 t5 t6.
    #[arg(long, global = true)]
    pub strict_typo: bool,

    /// Fan independent checks out over the thread pool.
    #[arg(long, global = true)]
    pub parallel: bool,

    /// Truncation order for WDVV checks [default: min(T, 20) for D4, min(T, 15) for E6].
    #[arg(long, global = true, value_parser = clap::value_parser!(i64).range(2..))]
    pub wdvv_order: Option<i64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand an eta quotient such as "eta(9)^3 * eta(3)^-1".
    Expand { expr: String },
    /// Solve the coefficient recursion for a model.
    Solve { model: Model },
    /// Run an identity suite.
    Verify { suite: Suite },
    /// Tabulate the invariants c_0 .. c_K.
    GwTable {
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(i64).range(0..))]
        kmax: i64,
    },
    /// Genus-one potential and its checks.
    GenusOne { model: Model },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    D4,
    E6,
}

impl Model {
    fn label(self) -> &'static str {
        match self {
            Model::D4 => "d4",
            Model::E6 => "e6",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    D4,
    E6,
    Halphen,
    Identities,
}

impl Suite {
    fn label(self) -> &'static str {
        match self {
            Suite::D4 => "d4",
            Suite::E6 => "e6",
            Suite::Halphen => "halphen",
            Suite::Identities => "identities",
        }
    }
}

/// Resolved settings shared by every command.
#[derive(Debug, Clone, Copy)]
pub struct Settings {
    pub order: i64,
    pub strict_typo: bool,
    pub exec: Execution,
    pub wdvv_order: Option<i64>,
}

impl Settings {
    fn wdvv_order(&self, default: i64) -> i64 {
        self.wdvv_order.unwrap_or(self.order.min(default))
    }
}

/// Rendered output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn failure_code(command: &Command) -> i32 {
    match command {
        Command::Expand { .. } => EXIT_PRECONDITION,
        Command::Solve { model: Model::D4 } | Command::Verify { suite: Suite::D4 } => EXIT_D4,
        Command::Solve { model: Model::E6 } | Command::Verify { suite: Suite::E6 } => EXIT_E6,
        Command::Verify {
            suite: Suite::Halphen,
        } => EXIT_HALPHEN,
        Command::Verify {
            suite: Suite::Identities,
        } => EXIT_IDENTITIES,
        Command::GenusOne { .. } => EXIT_GENUS_ONE,
        Command::GwTable { .. } => EXIT_GW_TABLE,
    }
}

/// Executes an already-parsed command.
pub fn execute(cli: &Cli) -> Outcome {
    let settings = Settings {
        order: cli.order,
        strict_typo: cli.strict_typo,
        exec: Execution::from_flag(cli.parallel),
        wdvv_order: cli.wdvv_order,
    };
    let doc = match &cli.command {
        Command::Expand { expr } => match expr.parse() {
            Ok(spec) => suites::expand(&spec, settings),
            Err(e) => {
                return Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: format!("error: {e}\n"),
                };
            }
        },
        Command::Solve { model } => suites::solve(*model, settings),
        Command::Verify { suite } => suites::verify(*suite, settings),
        Command::GwTable { kmax } => suites::gw_table(*kmax, settings),
        Command::GenusOne { model } => suites::genus_one(*model, settings),
    };
    match doc {
        Ok(doc) => {
            let code = if doc.status == Status::Pass {
                EXIT_OK
            } else {
                failure_code(&cli.command)
            };
            Outcome {
                code,
                stdout: render(&doc, cli.format),
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            code: EXIT_PRECONDITION,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            }
        }
    }
}
