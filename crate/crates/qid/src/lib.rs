//! Verification harness on top of the exact engine: plan expansion, parallel
//! runs, deterministic reports, evaluation-cost benches, and truncated
//! limiting-form suites.

pub mod bench;
pub mod limits;
pub mod plan;
pub mod report;
pub mod runner;

use qid_core::identities::EngineError;

/// Harness failures, bucketed by the process exit code they map to.
#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    /// Malformed plan or request; the CLI exits 2.
    #[error("plan error: {0}")]
    Plan(String),
    /// Engine or I/O failure; the CLI exits 3.
    #[error("internal error: {0}")]
    Internal(String),
}

/// Buckets an engine error raised while serving a user request: schema and
/// domain problems are the caller's fault, anything else is internal.
pub fn classify_engine_error(e: EngineError) -> HarnessError {
    match e {
        EngineError::UnknownIdentity(_)
        | EngineError::MissingParameter(_)
        | EngineError::UnexpectedParameter(_)
        | EngineError::OutOfDomain { .. } => HarnessError::Plan(e.to_string()),
        _ => HarnessError::Internal(e.to_string()),
    }
}
