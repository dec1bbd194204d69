//! `qdiv`: coefficient tables, quasi-modular decompositions and identity
//! checks for MacMahon's `A_k` and `C_k`.
//!
//! Exit codes: 0 success, 1 internal failure, 2 usage error, 3 no
//! decomposition exists at the requested weight bound.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qdiv_core::macmahon::Family;

pub const EXIT_INTERNAL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_NO_SOLUTION: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "qdiv", version, about = "Exact q-series for MacMahon's sum-of-divisors functions")]
pub struct Cli {
    /// Largest truncation order any command accepts.
    #[arg(long, env = "QDIV_MAX_ORDER", default_value_t = 2000, global = true, hide = true)]
    max_order: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Coefficient table of A_k or C_k.
    Coeffs(commands::coeffs::Args),
    /// Write A_k (or C_k) as a polynomial in E2, E4, E6.
    Decompose(commands::decompose::Args),
    /// Run identity checks.
    Verify(commands::verify::Args),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "UPPER")]
pub enum FamilyArg {
    A,
    C,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::A => Family::A,
            FamilyArg::C => Family::C,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Internal(anyhow::Error),
}

impl From<qdiv_core::Error> for CliError {
    fn from(e: qdiv_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Internal(e.into())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Internal(e.into())
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn check_order(order: usize, max_order: usize) -> CliResult<()> {
    if order > max_order {
        return Err(CliError::Usage(format!(
            "order {order} exceeds the cap {max_order} (raise QDIV_MAX_ORDER to allow it)"
        )));
    }
    Ok(())
}

pub fn write_output(text: &str, path: Option<&PathBuf>) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Coeffs(args) => commands::coeffs::run(args, cli.max_order),
        Command::Decompose(args) => commands::decompose::run(args, cli.max_order),
        Command::Verify(args) => commands::verify::run(args, cli.max_order),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(CliError::Internal(e)) => {
            eprintln!("internal error: {e:#}");
            ExitCode::from(EXIT_INTERNAL)
        }
    }
}
