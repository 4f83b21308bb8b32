//! One line per evaluated instance.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bounds::BoundSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "holds")]
    Holds,
    #[serde(rename = "violated")]
    Violated,
    #[serde(rename = "n/a")]
    NotApplicable,
}

impl Verdict {
    pub fn compare(applies: bool, value: u64, bound: u64) -> Verdict {
        match (applies, value <= bound) {
            (false, _) => Verdict::NotApplicable,
            (true, true) => Verdict::Holds,
            (true, false) => Verdict::Violated,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Violated => "violated",
            Verdict::NotApplicable => "n/a",
        })
    }
}

/// Field order is the serialized key order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentRecord {
    pub seed: u64,
    pub family: String,
    pub params: BTreeMap<String, u64>,
    pub d: usize,
    pub p: u32,
    pub n: u32,
    pub homogeneous: bool,
    pub height: Option<usize>,
    pub expected_grade: Option<usize>,
    pub mu: usize,
    pub mu_stable: bool,
    #[serde(rename = "T_used")]
    pub t_used: u32,
    pub mu_n: usize,
    pub lambda_socle_n: usize,
    pub phi_height: usize,
    pub hyp_e2: bool,
    pub hyp_height_surrogate: bool,
    pub hyp_hb: bool,
    pub bounds: BoundSet,
    pub verdict_e1: Verdict,
    pub verdict_e2: Verdict,
    pub verdict_main: Verdict,
    pub notes: Vec<String>,
    pub wall_ms: u64,
}

impl ExperimentRecord {
    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }

    pub fn from_line(line: &str) -> serde_json::Result<Self> {
        serde_json::from_str(line)
    }
}
