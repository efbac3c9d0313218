//! Plan files: JSON descriptions of which catalog instances to verify.
//!
//! A plan lists one or more instances, each naming a catalog entry and giving
//! an inclusive `[lo, hi]` range for every parameter in that entry's schema,
//! plus a thread budget for the whole run.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Inclusive parameter ranges for one catalog entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlanInstance {
    pub id: String,
    /// `name -> [lo, hi]`, both ends inclusive.
    pub params: BTreeMap<String, [i64; 2]>,
}

/// A verification plan: the instances to expand and a thread budget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Plan {
    pub instances: Vec<PlanInstance>,
    /// Worker threads for the run; 0 picks the library default.
    #[serde(default)]
    pub threads: usize,
}

impl Plan {
    /// Builds a one-instance plan, as used by `verify --id`.
    pub fn single(id: &str, params: BTreeMap<String, [i64; 2]>, threads: usize) -> Self {
        Plan {
            instances: vec![PlanInstance {
                id: id.to_string(),
                params,
            }],
            threads,
        }
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}
