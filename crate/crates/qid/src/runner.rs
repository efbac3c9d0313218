//! Plan expansion and parallel execution.
//!
//! Expansion turns each plan instance into the cartesian product of its
//! parameter ranges (in schema order), dropping points that violate a
//! relational cap such as `m <= n`; the run then verifies every point and
//! collects results sorted by (id, params).

use crate::plan::{Plan, PlanInstance};
use crate::report::{InstanceResult, Report, SCHEMA_VERSION};
use crate::HarnessError;
use qid_core::identities::{entry, validate_params, verify_instance, IdentityEntry, Params};
use rayon::prelude::*;
use std::time::Instant;

/// One fully instantiated verification job.
pub type Job = (String, Params);

/// Validates a plan against the catalog schemas and expands every instance
/// into concrete parameter assignments.
pub fn expand_plan(plan: &Plan) -> Result<Vec<Job>, HarnessError> {
    let mut jobs = Vec::new();
    for inst in &plan.instances {
        let e = entry(&inst.id).map_err(|err| HarnessError::Plan(err.to_string()))?;
        for spec in e.params {
            let Some(&[lo, hi]) = inst.params.get(spec.name) else {
                return Err(HarnessError::Plan(format!(
                    "{}: missing range for parameter {}",
                    inst.id, spec.name
                )));
            };
            if lo > hi {
                return Err(HarnessError::Plan(format!(
                    "{}: empty range {}..{} for parameter {}",
                    inst.id, lo, hi, spec.name
                )));
            }
            if lo < spec.min {
                return Err(HarnessError::Plan(format!(
                    "{}: parameter {} starts at {} but its minimum is {}",
                    inst.id, spec.name, lo, spec.min
                )));
            }
        }
        if let Some(name) = inst
            .params
            .keys()
            .find(|n| !e.params.iter().any(|s| s.name == n.as_str()))
        {
            return Err(HarnessError::Plan(format!(
                "{}: unexpected parameter {}",
                inst.id, name
            )));
        }
        let before = jobs.len();
        expand_instance(e, inst, &mut jobs);
        if jobs.len() == before {
            return Err(HarnessError::Plan(format!(
                "{}: no valid parameter points in the given ranges",
                inst.id
            )));
        }
    }
    Ok(jobs)
}

fn expand_instance(e: &IdentityEntry, inst: &PlanInstance, out: &mut Vec<Job>) {
    let ranges: Vec<(&str, i64, i64)> = e
        .params
        .iter()
        .map(|s| {
            let [lo, hi] = inst.params[s.name];
            (s.name, lo, hi)
        })
        .collect();
    let mut values = vec![0i64; ranges.len()];
    expand_rec(e, &inst.id, &ranges, 0, &mut values, out);
}

fn expand_rec(
    e: &IdentityEntry,
    id: &str,
    ranges: &[(&str, i64, i64)],
    depth: usize,
    values: &mut [i64],
    out: &mut Vec<Job>,
) {
    if depth == ranges.len() {
        let p: Params = ranges
            .iter()
            .zip(values.iter())
            .map(|(&(name, _, _), &v)| (name.to_string(), v))
            .collect();
        // Relational caps (m <= n, 2j <= L) prune points, not whole plans.
        if validate_params(e, &p).is_ok() {
            out.push((id.to_string(), p));
        }
        return;
    }
    let (_, lo, hi) = ranges[depth];
    for v in lo..=hi {
        values[depth] = v;
        expand_rec(e, id, ranges, depth + 1, values, out);
    }
}

/// Aggregate status over per-instance statuses: error > mismatch > equal.
pub fn aggregate(results: &[InstanceResult]) -> &'static str {
    if results.iter().any(|r| r.status == "error") {
        "error"
    } else if results.iter().any(|r| r.status == "mismatch") {
        "mismatch"
    } else {
        "equal"
    }
}

/// Expands and runs a plan on a dedicated thread pool, returning a report
/// with results sorted by (id, params). `corrupt` perturbs every right side
/// after evaluation and is only used as a negative control.
pub fn run_plan(plan: &Plan, corrupt: bool) -> Result<Report, HarnessError> {
    let jobs = expand_plan(plan)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(plan.threads)
        .build()
        .map_err(|e| HarnessError::Internal(e.to_string()))?;
    let start = Instant::now();
    let results: Result<Vec<InstanceResult>, HarnessError> = pool.install(|| {
        jobs.par_iter()
            .map(|(id, p)| {
                let outcome = verify_instance(id, p, corrupt)
                    .map_err(|e| HarnessError::Internal(e.to_string()))?;
                Ok(InstanceResult {
                    id: id.clone(),
                    params: p.clone(),
                    status: outcome.status.as_str().to_string(),
                    difference: outcome.difference.map(|d| d.to_string()),
                    error: outcome.error,
                    lhs_term_count: outcome.lhs_term_count,
                    rhs_summand_count: outcome.rhs_summand_count,
                    lhs_time_us: outcome.lhs_time_us,
                    rhs_time_us: outcome.rhs_time_us,
                })
            })
            .collect()
    });
    let mut results = results?;
    let wall_time_us = start.elapsed().as_micros() as u64;
    results.sort_by(|a, b| (a.id.as_str(), &a.params).cmp(&(b.id.as_str(), &b.params)));
    let aggregate_status = aggregate(&results).to_string();
    Ok(Report {
        schema: SCHEMA_VERSION,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        plan: plan.clone(),
        results,
        aggregate_status,
        wall_time_us,
    })
}
