use std::path::PathBuf;

use clap::ValueEnum;

use qdiv_core::macmahon::Family;
use qdiv_core::verify::{verify_method_agreement, verify_quasimodularity, verify_theorem_f, verify_theorem_g};
use qdiv_core::VerificationReport;

use crate::output;
use crate::{check_order, write_output, CliError, CliResult, OutputFormat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    TheoremF,
    TheoremG,
    Agreement,
    Quasimodular,
}

#[derive(Debug, clap::Args)]
pub struct Args {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
    #[arg(long, default_value_t = 4)]
    k_max: usize,
    #[arg(long, default_value_t = 100)]
    order: usize,
    /// `json` or `text`.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    #[arg(long)]
    output: Option<PathBuf>,
}

type Job = Box<dyn FnOnce() -> qdiv_core::Result<VerificationReport> + Send>;

fn jobs(suite: Suite, k_max: usize, order: usize) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::TheoremF {
        jobs.push(Box::new(move || verify_theorem_f(k_max, order)));
    }
    if all || suite == Suite::TheoremG {
        jobs.push(Box::new(move || verify_theorem_g(k_max, order)));
    }
    if all || suite == Suite::Agreement {
        for family in Family::ALL {
            for k in 1..=k_max {
                jobs.push(Box::new(move || verify_method_agreement(family, k, order)));
            }
        }
    }
    if all || suite == Suite::Quasimodular {
        jobs.push(Box::new(move || verify_quasimodularity(k_max, order)));
    }
    jobs
}

pub fn run(args: &Args, max_order: usize) -> CliResult<u8> {
    check_order(args.order, max_order)?;
    if args.format == OutputFormat::Csv {
        return Err(CliError::Usage("csv applies only to coefficient tables; use json or text".into()));
    }
    let needs_k = matches!(args.suite, Suite::All | Suite::Agreement | Suite::Quasimodular);
    if needs_k && args.k_max == 0 {
        return Err(CliError::Usage("--k-max must be at least 1 for the agreement and quasimodular suites".into()));
    }

    let results: Vec<qdiv_core::Result<VerificationReport>> = std::thread::scope(|scope| {
        let handles: Vec<_> = jobs(args.suite, args.k_max, args.order).into_iter().map(|job| scope.spawn(job)).collect();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    });
    let mut reports = results.into_iter().collect::<qdiv_core::Result<Vec<_>>>()?;
    reports.sort_by(|a, b| a.identity_name.cmp(&b.identity_name));

    let text = match args.format {
        OutputFormat::Json => output::json(&reports)?,
        _ => reports.iter().map(|r| r.summary_line() + "\n").collect(),
    };
    write_output(&text, args.output.as_ref())?;
    Ok(if reports.iter().all(VerificationReport::passed) { 0 } else { 1 })
}
