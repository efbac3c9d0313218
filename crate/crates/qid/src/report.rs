//! Run reports: deterministic JSON records of a verification run.
//!
//! A report echoes the plan, lists one result per expanded instance sorted by
//! (id, params), and carries an aggregate status. Written reports are
//! canonical: all timing fields are zeroed so that repeated runs with the
//! same plan and thread budget produce byte-identical files. Measured times
//! are printed to stdout instead.

use crate::plan::Plan;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub const SCHEMA_VERSION: u32 = 1;

/// Outcome of one verified instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceResult {
    pub id: String,
    pub params: BTreeMap<String, i64>,
    /// "equal", "mismatch", or "error".
    pub status: String,
    /// Canonical text of lhs - rhs when status is "mismatch".
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub difference: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub lhs_term_count: u64,
    pub rhs_summand_count: u64,
    pub lhs_time_us: u64,
    pub rhs_time_us: u64,
}

impl InstanceResult {
    fn without_times(&self) -> InstanceResult {
        let mut r = self.clone();
        r.lhs_time_us = 0;
        r.rhs_time_us = 0;
        r
    }
}

/// A full verification run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub tool_version: String,
    pub plan: Plan,
    pub results: Vec<InstanceResult>,
    /// "equal" iff every result is "equal"; "error" dominates "mismatch".
    pub aggregate_status: String,
    pub wall_time_us: u64,
}

impl Report {
    /// Serializes with every timing field zeroed; this is the on-disk form.
    pub fn canonical_json(&self) -> String {
        let mut canon = self.clone();
        canon.wall_time_us = 0;
        canon.results = canon
            .results
            .iter()
            .map(InstanceResult::without_times)
            .collect();
        let mut text =
            serde_json::to_string_pretty(&canon).expect("report serialization cannot fail");
        text.push('\n');
        text
    }

    /// Compares per-instance results against a golden report, ignoring all
    /// timings. Returns a description of the first divergence, if any.
    pub fn golden_diff(&self, golden: &Report) -> Option<String> {
        if self.results.len() != golden.results.len() {
            return Some(format!(
                "{} results, golden has {}",
                self.results.len(),
                golden.results.len()
            ));
        }
        for (cur, gold) in self.results.iter().zip(&golden.results) {
            let (cur, gold) = (cur.without_times(), gold.without_times());
            if cur != gold {
                let show = |r: &InstanceResult| {
                    serde_json::to_string(r).expect("result serialization cannot fail")
                };
                return Some(format!(
                    "instance diverges: current {}, golden {}",
                    show(&cur),
                    show(&gold)
                ));
            }
        }
        None
    }
}
