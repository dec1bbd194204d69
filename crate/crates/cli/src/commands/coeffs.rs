use std::path::PathBuf;

use clap::ValueEnum;
use num_traits::{One, Zero};
use serde::Serialize;

use qdiv_core::macmahon::{generate, oracle, Family, Method};
use qdiv_core::{BigInt, QSeries, Rational};

use crate::output;
use crate::{check_order, write_output, CliError, CliResult, FamilyArg, OutputFormat};

/// Oracle enumeration is exponential; larger orders need `--allow-slow`.
pub const ORACLE_ORDER_CAP: usize = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Direct,
    Explicit,
    Recurrence,
    Oracle,
}

#[derive(Debug, clap::Args)]
pub struct Args {
    #[arg(long, value_enum, ignore_case = true)]
    family: FamilyArg,
    #[arg(long = "k")]
    k: usize,
    #[arg(long)]
    order: usize,
    #[arg(long, value_enum, default_value_t = MethodArg::Direct)]
    method: MethodArg,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    #[arg(long)]
    output: Option<PathBuf>,
    /// Lift the order cap on the oracle method.
    #[arg(long)]
    allow_slow: bool,
}

#[derive(Serialize)]
struct Table<'a> {
    family: Family,
    k: usize,
    method: &'static str,
    #[serde(flatten)]
    series: &'a QSeries,
}

fn oracle_series(family: Family, k: usize, order: usize) -> CliResult<QSeries> {
    let mut coeffs = vec![Rational::zero(); order + 1];
    if k == 0 {
        coeffs[0] = Rational::one();
        return Ok(QSeries::from_coeffs(coeffs));
    }
    for (n, c) in coeffs.iter_mut().enumerate().skip(1) {
        *c = Rational::from_integer(BigInt::from(oracle(family, n as u64, k as u32)?));
    }
    Ok(QSeries::from_coeffs(coeffs))
}

pub fn run(args: &Args, max_order: usize) -> CliResult<u8> {
    check_order(args.order, max_order)?;
    let family = Family::from(args.family);
    let (series, method) = match args.method {
        MethodArg::Oracle => {
            if args.order > ORACLE_ORDER_CAP && !args.allow_slow {
                return Err(CliError::Usage(format!(
                    "oracle is limited to order {ORACLE_ORDER_CAP}; pass --allow-slow to exceed it"
                )));
            }
            (oracle_series(family, args.k, args.order)?, "oracle")
        }
        MethodArg::Direct => (generate(family, args.k, args.order, Method::Direct)?, "direct"),
        MethodArg::Explicit => (generate(family, args.k, args.order, Method::Explicit)?, "explicit"),
        MethodArg::Recurrence => (generate(family, args.k, args.order, Method::Recurrence)?, "recurrence"),
    };
    let text = match args.format {
        OutputFormat::Json => output::json(&Table { family, k: args.k, method, series: &series })?,
        OutputFormat::Csv => output::csv(
            ["n", "coefficient"],
            series.coeffs().iter().enumerate().map(|(n, c)| [n.to_string(), output::r(c)]),
        ),
        OutputFormat::Text => {
            let mut out = format!("# {family}_{} via {method}, order {}\n", args.k, args.order);
            for (n, c) in series.coeffs().iter().enumerate() {
                out.push_str(&format!("{n}\t{}\n", output::r(c)));
            }
            out
        }
    };
    write_output(&text, args.output.as_ref())?;
    Ok(0)
}
