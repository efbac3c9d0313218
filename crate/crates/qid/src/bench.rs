//! Evaluation-cost comparison between the two sides of the main identities.
//!
//! For each size the harness evaluates both sides, insists they agree, and
//! records how many summands each defining sum enumerated along with wall
//! times. The interesting signal is the growth of the right-side triple sums
//! against the linear or quadratic left sides.

use crate::HarnessError;
use qid_core::identities::{analytic_triple_count, evaluate_side, params, Side};
use std::time::Instant;

/// Entries whose sides are worth racing: single- or double-sum left sides
/// against triple-sum right sides over a shared size parameter `L`.
pub const BENCH_IDS: &[&str] = &["id1", "id2", "id2b", "id3", "id4"];

#[derive(Debug, Clone)]
pub struct BenchRow {
    pub l: i64,
    pub lhs_summands: u64,
    pub rhs_summands: u64,
    /// Term count of the (shared) verified polynomial.
    pub poly_terms: u64,
    pub lhs_time_us: u64,
    pub rhs_time_us: u64,
    /// Closed-form count of lattice points in the triple-sum region; only
    /// populated for id1, where it must match the measured count.
    pub analytic_rhs: Option<u64>,
}

impl BenchRow {
    /// Right-side summands per left-side summand.
    pub fn ratio(&self) -> f64 {
        self.rhs_summands as f64 / self.lhs_summands as f64
    }
}

/// Runs `id` for every size `0..=l_max`. Any disagreement between the sides
/// is an internal error: a bench over a broken identity has no meaning.
pub fn bench(id: &str, l_max: i64) -> Result<Vec<BenchRow>, HarnessError> {
    if !BENCH_IDS.contains(&id) {
        return Err(HarnessError::Plan(format!(
            "bench supports {}, got {id}",
            BENCH_IDS.join(", ")
        )));
    }
    let mut rows = Vec::with_capacity(l_max.max(0) as usize + 1);
    for l in 0..=l_max {
        let p = params(&[("L", l)]);
        let lhs_start = Instant::now();
        let lhs =
            evaluate_side(id, Side::Lhs, &p).map_err(|e| HarnessError::Internal(e.to_string()))?;
        let lhs_time_us = lhs_start.elapsed().as_micros() as u64;
        let rhs_start = Instant::now();
        let rhs =
            evaluate_side(id, Side::Rhs, &p).map_err(|e| HarnessError::Internal(e.to_string()))?;
        let rhs_time_us = rhs_start.elapsed().as_micros() as u64;
        if lhs.poly != rhs.poly {
            return Err(HarnessError::Internal(format!(
                "{id} sides disagree at L={l} during bench"
            )));
        }
        rows.push(BenchRow {
            l,
            lhs_summands: lhs.summands,
            rhs_summands: rhs.summands,
            poly_terms: lhs.poly.term_count() as u64,
            lhs_time_us,
            rhs_time_us,
            analytic_rhs: (id == "id1").then(|| analytic_triple_count(l)),
        });
    }
    Ok(rows)
}
