//! Full analysis reports, per-theorem verifiers and the catalog scan.

mod report;
mod scan;
mod theorems;

use serde::{Deserialize, Serialize, Serializer};

use crate::cycles::DEFAULT_CYCLE_CAP;
use crate::ear::DEFAULT_RECOGNIZER_LIMIT;
use crate::graph::Graph;
use crate::independence::{alpha, core_with_alpha, corona_with_alpha, DEFAULT_OMEGA_CAP};
use crate::oracle::DEFAULT_ORACLE_LIMIT;

pub use report::{AnalysisReport, OracleCheck};
pub use scan::{analyze_all, scan, ParseFailure, ScanOutcome, Summary, TheoremCounts, Triage, Violation};
pub use theorems::{verify, verify_with, Status, TheoremId, TheoremVerdict};

/// Desk-scale bounds shared by every verifier.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, rename_all = "kebab-case")]
pub struct Limits {
    /// Largest order handed to the brute-force oracle.
    pub oracle_limit: usize,
    /// Largest Ω enumerated for the Γ-family checks.
    pub omega_cap: usize,
    /// Largest odd-cycle count before reporting OVERFLOW.
    pub cycle_cap: u64,
    /// Largest order handed to the decomposition recognizers.
    pub recognizer_limit: usize,
    /// Seed for sampled Γ families.
    pub seed: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            oracle_limit: DEFAULT_ORACLE_LIMIT,
            omega_cap: DEFAULT_OMEGA_CAP,
            cycle_cap: DEFAULT_CYCLE_CAP,
            recognizer_limit: DEFAULT_RECOGNIZER_LIMIT,
            seed: 0,
        }
    }
}

/// A yes/no answer that may be out of reach; serialises as `true`, `false`
/// or `"UNDECIDED"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Decision {
    Yes,
    No,
    Undecided,
}

impl Decision {
    pub fn from_option(b: Option<bool>) -> Self {
        match b {
            Some(true) => Decision::Yes,
            Some(false) => Decision::No,
            None => Decision::Undecided,
        }
    }

    pub fn known(self) -> Option<bool> {
        match self {
            Decision::Yes => Some(true),
            Decision::No => Some(false),
            Decision::Undecided => None,
        }
    }
}

impl Serialize for Decision {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.known() {
            Some(b) => s.serialize_bool(b),
            None => s.serialize_str("UNDECIDED"),
        }
    }
}

/// |corona| + |core| − 2α; zero for the empty graph.
pub fn g_defect(g: &Graph) -> i64 {
    let a = alpha(g);
    defect_of(a, core_with_alpha(g, a).len(), corona_with_alpha(g, a).len())
}

pub(crate) fn defect_of(alpha: usize, core: usize, corona: usize) -> i64 {
    corona as i64 + core as i64 - 2 * alpha as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::cycle;

    #[test]
    fn defect_examples() {
        assert_eq!(g_defect(&cycle(5).unwrap()), 1);
        assert_eq!(g_defect(&cycle(4).unwrap()), 0);
        let k4_pendant = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
        assert_eq!(g_defect(&k4_pendant), 1);
        assert_eq!(g_defect(&Graph::empty(0)), 0);
    }

    #[test]
    fn decision_serialises_tristate() {
        let v = serde_json::to_string(&[Decision::Yes, Decision::No, Decision::Undecided]).unwrap();
        assert_eq!(v, r#"[true,false,"UNDECIDED"]"#);
    }
}
