//! Command-line front end: list the catalog, verify instances over parameter
//! ranges, print one instance's sides, race the two sides of an identity, or
//! run a truncated limiting-form suite.
//!
//! Exit codes: 0 all comparisons passed, 1 a comparison failed, 2 bad usage
//! or bad plan, 3 internal error.

use clap::{ArgGroup, Args, Parser, Subcommand};
use qid::plan::Plan;
use qid::report::Report;
use qid::{bench, classify_engine_error, limits, runner, HarnessError};
use qid_core::identities::{catalog, evaluate_side, ParamMax, Params, Side};
use serde_json::json;
use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "qid",
    version,
    about = "Exact verification of polynomial q-series identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the identity catalog as JSON.
    List,
    /// Verify catalog instances over parameter ranges.
    Verify(VerifyArgs),
    /// Print both normalized sides of a single instance.
    Show(ShowArgs),
    /// Compare the evaluation cost of both sides over a size sweep.
    Bench(BenchArgs),
    /// Check a truncated limiting form to a given q-degree.
    Limits(LimitsArgs),
}

#[derive(Args)]
#[command(group = ArgGroup::new("source").required(true).args(["id", "plan"]))]
struct VerifyArgs {
    /// Catalog entry to verify.
    #[arg(long)]
    id: Option<String>,
    /// Inclusive parameter range, as name=lo..hi or name=value. Repeatable;
    /// every parameter of the entry needs one.
    #[arg(long = "param", value_name = "NAME=LO..HI", value_parser = parse_range_arg, conflicts_with = "plan")]
    param: Vec<(String, [i64; 2])>,
    /// JSON plan file: {"instances": [{"id": ..., "params": {...}}], "threads": N}.
    #[arg(long)]
    plan: Option<PathBuf>,
    /// Write the run report (canonical JSON, timings zeroed) to this path.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Compare this run's results against a previously written report.
    #[arg(long)]
    golden: Option<PathBuf>,
    /// Worker threads (0 = library default). Overrides the plan's value.
    #[arg(long)]
    threads: Option<usize>,
    /// Negative control: perturb every right side before comparing.
    #[arg(long, hide = true)]
    corrupt: bool,
}

#[derive(Args)]
struct ShowArgs {
    /// Catalog entry to evaluate.
    #[arg(long)]
    id: String,
    /// Single parameter value, as name=value. Repeatable.
    #[arg(long = "param", value_name = "NAME=VALUE", value_parser = parse_value_arg)]
    param: Vec<(String, i64)>,
}

#[derive(Args)]
struct BenchArgs {
    /// One of: id1, id2, id2b, id3, id4.
    #[arg(long)]
    id: String,
    /// Largest size to evaluate; the sweep runs L = 0..=l-max.
    #[arg(long = "l-max")]
    l_max: i64,
}

#[derive(Args)]
struct LimitsArgs {
    /// One of: pentagonal, triple_product, lebesgue, stabilization.
    #[arg(long)]
    suite: String,
    /// Compare truncations to this q-degree.
    #[arg(long)]
    degree: i64,
}

fn parse_range_arg(s: &str) -> Result<(String, [i64; 2]), String> {
    let (name, range) = split_param(s)?;
    let bounds = match range.split_once("..") {
        Some((lo, hi)) => [parse_bound(lo)?, parse_bound(hi)?],
        None => {
            let v = parse_bound(range)?;
            [v, v]
        }
    };
    Ok((name.to_string(), bounds))
}

fn parse_value_arg(s: &str) -> Result<(String, i64), String> {
    let (name, value) = split_param(s)?;
    Ok((name.to_string(), parse_bound(value)?))
}

fn split_param(s: &str) -> Result<(&str, &str), String> {
    match s.split_once('=') {
        Some((name, rest)) if !name.is_empty() && !rest.is_empty() => Ok((name, rest)),
        _ => Err(format!("expected NAME=VALUE, got {s:?}")),
    }
}

fn parse_bound(s: &str) -> Result<i64, String> {
    s.parse::<i64>()
        .map_err(|e| format!("bad integer {s:?}: {e}"))
}

fn fmt_params(p: &BTreeMap<String, i64>) -> String {
    p.iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::List => Ok(cmd_list()),
        Command::Verify(args) => cmd_verify(args),
        Command::Show(args) => cmd_show(args),
        Command::Bench(args) => cmd_bench(args),
        Command::Limits(args) => cmd_limits(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("{err}");
            match err {
                HarnessError::Plan(_) => ExitCode::from(2),
                HarnessError::Internal(_) => ExitCode::from(3),
            }
        }
    }
}

fn cmd_list() -> u8 {
    let entries: Vec<serde_json::Value> = catalog()
        .iter()
        .map(|e| {
            json!({
                "id": e.id,
                "statement": e.statement,
                "normalizer": e.normalizer,
                "params": e.params.iter().map(|p| json!({
                    "name": p.name,
                    "min": p.min,
                    "max": match p.max {
                        ParamMax::Unbounded => serde_json::Value::Null,
                        ParamMax::HalfFloorOf(other) => json!(format!("floor({other}/2)")),
                        ParamMax::AtMost(other) => json!(other),
                    },
                })).collect::<Vec<_>>(),
                "tags": e.tags.iter().map(|t| t.as_str()).collect::<Vec<_>>(),
            })
        })
        .collect();
    println!(
        "{}",
        serde_json::to_string_pretty(&entries).expect("catalog serialization cannot fail")
    );
    0
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, HarnessError> {
    let mut plan = if let Some(path) = &args.plan {
        let text = fs::read_to_string(path)
            .map_err(|e| HarnessError::Plan(format!("cannot read plan {}: {e}", path.display())))?;
        Plan::from_json(&text)
            .map_err(|e| HarnessError::Plan(format!("invalid plan {}: {e}", path.display())))?
    } else {
        let id = args.id.as_deref().expect("clap guarantees --id or --plan");
        let mut ranges = BTreeMap::new();
        for (name, range) in &args.param {
            if ranges.insert(name.clone(), *range).is_some() {
                return Err(HarnessError::Plan(format!("duplicate --param {name}")));
            }
        }
        Plan::single(id, ranges, 0)
    };
    if let Some(threads) = args.threads {
        plan.threads = threads;
    }
    let report = runner::run_plan(&plan, args.corrupt)?;

    for r in &report.results {
        match r.status.as_str() {
            "equal" => {}
            "mismatch" => println!(
                "mismatch {} {}: difference = {}",
                r.id,
                fmt_params(&r.params),
                r.difference.as_deref().unwrap_or("?")
            ),
            _ => println!(
                "error {} {}: {}",
                r.id,
                fmt_params(&r.params),
                r.error.as_deref().unwrap_or("?")
            ),
        }
    }
    let count = |status: &str| report.results.iter().filter(|r| r.status == status).count();
    println!(
        "aggregate: {} ({} instances: {} equal, {} mismatch, {} error) wall {} us",
        report.aggregate_status,
        report.results.len(),
        count("equal"),
        count("mismatch"),
        count("error"),
        report.wall_time_us
    );

    if let Some(path) = &args.report {
        fs::write(path, report.canonical_json()).map_err(|e| {
            HarnessError::Internal(format!("cannot write report {}: {e}", path.display()))
        })?;
        println!("report written: {}", path.display());
    }

    let mut golden_failed = false;
    if let Some(path) = &args.golden {
        let text = fs::read_to_string(path).map_err(|e| {
            HarnessError::Plan(format!("cannot read golden {}: {e}", path.display()))
        })?;
        let golden: Report = serde_json::from_str(&text)
            .map_err(|e| HarnessError::Plan(format!("invalid golden {}: {e}", path.display())))?;
        match report.golden_diff(&golden) {
            None => println!("golden: match ({})", path.display()),
            Some(diff) => {
                golden_failed = true;
                println!("golden: mismatch - {diff}");
            }
        }
    }

    Ok(match report.aggregate_status.as_str() {
        "equal" if !golden_failed => 0,
        "equal" | "mismatch" => 1,
        _ => 3,
    })
}

fn cmd_show(args: ShowArgs) -> Result<u8, HarnessError> {
    let mut p = Params::new();
    for (name, value) in &args.param {
        if p.insert(name.clone(), *value).is_some() {
            return Err(HarnessError::Plan(format!("duplicate --param {name}")));
        }
    }
    let lhs = evaluate_side(&args.id, Side::Lhs, &p).map_err(classify_engine_error)?;
    let rhs = evaluate_side(&args.id, Side::Rhs, &p).map_err(classify_engine_error)?;
    println!("lhs = {}", lhs.poly);
    println!("rhs = {}", rhs.poly);
    Ok(0)
}

fn cmd_bench(args: BenchArgs) -> Result<u8, HarnessError> {
    let rows = bench::bench(&args.id, args.l_max)?;
    let with_analytic = rows.first().is_some_and(|r| r.analytic_rhs.is_some());
    println!("bench {} over L = 0..={}", args.id, args.l_max);
    let mut header = format!(
        "{:>4} {:>13} {:>13} {:>9} {:>11} {:>9} {:>9}",
        "L", "lhs_summands", "rhs_summands", "ratio", "poly_terms", "lhs_us", "rhs_us"
    );
    if with_analytic {
        header.push_str(&format!(" {:>13}", "analytic_rhs"));
    }
    println!("{header}");
    for row in &rows {
        let mut line = format!(
            "{:>4} {:>13} {:>13} {:>9.3} {:>11} {:>9} {:>9}",
            row.l,
            row.lhs_summands,
            row.rhs_summands,
            row.ratio(),
            row.poly_terms,
            row.lhs_time_us,
            row.rhs_time_us
        );
        if let Some(a) = row.analytic_rhs {
            line.push_str(&format!(" {a:>13}"));
        }
        println!("{line}");
    }
    Ok(0)
}

fn cmd_limits(args: LimitsArgs) -> Result<u8, HarnessError> {
    let outcome = limits::run_suite(&args.suite, args.degree)?;
    for c in &outcome.checks {
        println!(
            "{} {}: {}",
            if c.pass { "pass" } else { "FAIL" },
            c.name,
            c.detail
        );
    }
    let ok = outcome.passed();
    println!(
        "suite {} degree {}: {}",
        outcome.suite,
        outcome.degree,
        if ok { "pass" } else { "fail" }
    );
    Ok(if ok { 0 } else { 1 })
}
