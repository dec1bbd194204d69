use std::path::PathBuf;

use serde_json::json;

use qdiv_core::macmahon::{gen_direct, Family};
use qdiv_core::quasimodular::{decompose, Decomposition, NoSolution, SolveStage};

use crate::output;
use crate::{check_order, write_output, CliResult, FamilyArg, OutputFormat, EXIT_NO_SOLUTION};

#[derive(Debug, clap::Args)]
pub struct Args {
    #[arg(long = "k")]
    k: usize,
    #[arg(long, value_enum, ignore_case = true, default_value_t = FamilyArg::A)]
    family: FamilyArg,
    /// Defaults to 2k.
    #[arg(long)]
    weight_bound: Option<u32>,
    #[arg(long)]
    order: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    #[arg(long)]
    output: Option<PathBuf>,
}

fn stage_name(fail: &NoSolution) -> &'static str {
    match fail.stage {
        SolveStage::Solve => "solve",
        SolveStage::Verify => "verify",
    }
}

pub fn run(args: &Args, max_order: usize) -> CliResult<u8> {
    check_order(args.order, max_order)?;
    let family = Family::from(args.family);
    let weight_bound = args.weight_bound.unwrap_or(2 * args.k as u32);
    let description = format!("{family}_{}", args.k);
    let target = gen_direct(family, args.k, args.order);

    let (text, code) = match decompose(&target, weight_bound, args.order)? {
        Decomposition::Found(d) => {
            let d = d.with_description(description);
            let text = match args.format {
                OutputFormat::Json => {
                    let mut v = serde_json::to_value(&d)?;
                    v["status"] = json!("found");
                    output::json(&v)?
                }
                OutputFormat::Csv => output::csv(
                    ["a", "b", "c", "coefficient"],
                    d.terms.iter().map(|t| {
                        [
                            t.monomial.a.to_string(),
                            t.monomial.b.to_string(),
                            t.monomial.c.to_string(),
                            output::r(&t.coefficient),
                        ]
                    }),
                ),
                OutputFormat::Text => {
                    let mut out = format!(
                        "# {} in Q[E2,E4,E6], weight <= {}, verified through q^{}{}\n",
                        d.target_description,
                        d.weight_bound,
                        d.verified_order,
                        if d.ambiguous { " (not unique at this order)" } else { "" }
                    );
                    for t in &d.terms {
                        out.push_str(&format!("{}\t{}\n", output::r(&t.coefficient), t.monomial));
                    }
                    out
                }
            };
            (text, 0)
        }
        Decomposition::NoSolution(mut fail) => {
            fail.target_description = description;
            let text = match args.format {
                OutputFormat::Json => {
                    let mut v = serde_json::to_value(&fail)?;
                    v["status"] = json!("no_solution");
                    output::json(&v)?
                }
                OutputFormat::Csv => output::csv(
                    ["stage", "witness_exponent", "target_coefficient", "fitted_coefficient"],
                    [[
                        stage_name(&fail).to_string(),
                        fail.witness_exponent.to_string(),
                        output::r(&fail.target_coefficient),
                        output::r(&fail.fitted_coefficient),
                    ]],
                ),
                OutputFormat::Text => format!(
                    "no solution for {} at weight bound {}: {} stage fails at q^{} (target {}, fitted {})\n",
                    fail.target_description,
                    fail.weight_bound,
                    stage_name(&fail),
                    fail.witness_exponent,
                    output::r(&fail.target_coefficient),
                    output::r(&fail.fitted_coefficient)
                ),
            };
            (text, EXIT_NO_SOLUTION)
        }
    };
    write_output(&text, args.output.as_ref())?;
    Ok(code)
}
