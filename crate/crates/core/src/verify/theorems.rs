use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::cycles::CycleCount;
use crate::decomposition::check_almost_bipartite_theorem;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::independence::{gamma_matching_check_unchecked, gamma_sum_check_with_alpha, omega};
use crate::vertex_set::VertexSet;

use super::{AnalysisReport, Decision, Limits};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    Reduction,
    KeSum,
    KeCover,
    KerCore,
    Diadem,
    GammaSum,
    GammaMatch,
    AlmostBipartite,
    AbmcExtension,
    CoverExtension,
    OddBound,
    DefectReduction,
}

impl TheoremId {
    pub const ALL: [TheoremId; 12] = [
        TheoremId::Reduction,
        TheoremId::KeSum,
        TheoremId::KeCover,
        TheoremId::KerCore,
        TheoremId::Diadem,
        TheoremId::GammaSum,
        TheoremId::GammaMatch,
        TheoremId::AlmostBipartite,
        TheoremId::AbmcExtension,
        TheoremId::CoverExtension,
        TheoremId::OddBound,
        TheoremId::DefectReduction,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Reduction => "T-REDUCTION",
            TheoremId::KeSum => "T-KE-SUM",
            TheoremId::KeCover => "T-KE-COVER",
            TheoremId::KerCore => "T-KER-CORE",
            TheoremId::Diadem => "T-DIADEM",
            TheoremId::GammaSum => "T-GAMMA-SUM",
            TheoremId::GammaMatch => "T-GAMMA-MATCH",
            TheoremId::AlmostBipartite => "T-AB",
            TheoremId::AbmcExtension => "T-ABMC-EXT",
            TheoremId::CoverExtension => "T-COVER-EXT",
            TheoremId::OddBound => "T-ODD-BOUND",
            TheoremId::DefectReduction => "C-DEFECT-RED",
        }
    }

    /// The open conjecture, reported but never counted as a library fault.
    pub fn is_conjecture(self) -> bool {
        self == TheoremId::DefectReduction
    }

    /// Parses a comma-separated list; `all` selects every id.
    pub fn parse_list(s: &str) -> Result<Vec<TheoremId>> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part.eq_ignore_ascii_case("all") {
                out.extend(TheoremId::ALL);
            } else {
                out.push(part.parse()?);
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremVerdict {
    pub theorem: TheoremId,
    pub status: Status,
    pub applicable: bool,
    /// Present only when the theorem applied and was decided.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pass: Option<bool>,
    pub witness: Value,
}

impl TheoremVerdict {
    fn decided(theorem: TheoremId, pass: bool, witness: Value) -> Self {
        TheoremVerdict {
            theorem,
            status: if pass { Status::Pass } else { Status::Fail },
            applicable: true,
            pass: Some(pass),
            witness,
        }
    }

    fn not_applicable(theorem: TheoremId, why: &str) -> Self {
        TheoremVerdict {
            theorem,
            status: Status::NotApplicable,
            applicable: false,
            pass: None,
            witness: json!({ "reason": why }),
        }
    }

    fn undecided(theorem: TheoremId, why: &str) -> Self {
        TheoremVerdict {
            theorem,
            status: Status::Undecided,
            applicable: true,
            pass: None,
            witness: json!({ "reason": why }),
        }
    }
}

/// Computes the report and evaluates one theorem.
pub fn verify(theorem: TheoremId, g: &Graph, limits: &Limits) -> Result<TheoremVerdict> {
    let report = AnalysisReport::compute(g, None, limits)?;
    verify_with(theorem, g, &report, limits)
}

/// Evaluates one theorem against a precomputed report of `g`.
pub fn verify_with(
    theorem: TheoremId,
    g: &Graph,
    r: &AnalysisReport,
    limits: &Limits,
) -> Result<TheoremVerdict> {
    use TheoremId as T;
    let twice_alpha = 2 * r.alpha as i64;
    let sum = (r.core.len() + r.corona.len()) as i64;
    Ok(match theorem {
        T::Reduction => TheoremVerdict::decided(
            theorem,
            (r.g_defect == 1) == (r.lc_g_defect == 1),
            json!({ "gDefect": r.g_defect, "lcGDefect": r.lc_g_defect }),
        ),
        T::KeSum | T::KeCover if !r.ke => TheoremVerdict::not_applicable(theorem, "not König-Egerváry"),
        T::KeSum => TheoremVerdict::decided(
            theorem,
            sum == twice_alpha,
            json!({ "sum": sum, "twoAlpha": twice_alpha }),
        ),
        T::KeCover => {
            let uncovered = uncovered(g, &r.core, &r.corona);
            TheoremVerdict::decided(theorem, uncovered.is_empty(), json!({ "uncovered": uncovered }))
        }
        T::KerCore => {
            let outside = r.ker.difference(&r.core);
            TheoremVerdict::decided(theorem, outside.is_empty(), json!({ "kerOutsideCore": outside }))
        }
        T::Diadem => {
            let diadem_is_corona = r.diadem == r.corona;
            let count = (r.diadem.len() + r.nucleus.len()) as i64 == twice_alpha;
            TheoremVerdict::decided(
                theorem,
                r.ke == diadem_is_corona && r.ke == count,
                json!({
                    "ke": r.ke,
                    "diademEqualsCorona": diadem_is_corona,
                    "diademPlusNucleusEqualsTwoAlpha": count,
                }),
            )
        }
        T::GammaSum | T::GammaMatch if !r.ke => {
            TheoremVerdict::not_applicable(theorem, "not König-Egerváry")
        }
        T::GammaSum | T::GammaMatch => {
            let fam = omega(g, limits.omega_cap);
            if fam.truncated {
                return Ok(TheoremVerdict::undecided(theorem, "Ω exceeds the omega cap"));
            }
            let families = gamma_families(&fam.sets, limits.seed, &r.graph6);
            let checked = families.len();
            for gamma in families {
                let ok = if theorem == T::GammaSum {
                    gamma_sum_check_with_alpha(g, r.alpha, &gamma)?.equals_two_alpha
                } else {
                    gamma_matching_check_unchecked(g, r.alpha, &gamma)?.holds()
                };
                if !ok {
                    return Ok(TheoremVerdict::decided(theorem, false, json!({ "gamma": gamma })));
                }
            }
            TheoremVerdict::decided(theorem, true, json!({ "familiesChecked": checked, "omegaSize": fam.sets.len() }))
        }
        T::AlmostBipartite => {
            if !r.almost_bipartite || r.ke {
                return Ok(TheoremVerdict::not_applicable(theorem, "not almost bipartite, or König-Egerváry"));
            }
            let report = check_almost_bipartite_theorem(g)?;
            TheoremVerdict::decided(theorem, report.holds(), serde_json::to_value(&report.checks).unwrap())
        }
        T::AbmcExtension | T::CoverExtension => match r.lc_abmc {
            Decision::Undecided => TheoremVerdict::undecided(theorem, "Lc exceeds the recognizer limit"),
            Decision::No => TheoremVerdict::not_applicable(theorem, "Lc is not ABMC"),
            Decision::Yes if theorem == T::AbmcExtension => TheoremVerdict::decided(
                theorem,
                r.g_defect == 1,
                json!({ "gDefect": r.g_defect, "Lc": r.lc }),
            ),
            Decision::Yes => {
                let uncovered = uncovered(g, &r.core, &r.corona);
                TheoremVerdict::decided(theorem, uncovered.is_empty(), json!({ "uncovered": uncovered }))
            }
        },
        T::OddBound => match r.odd_cycle_count {
            CycleCount::Exact(k) => TheoremVerdict::decided(
                theorem,
                r.g_defect <= k as i64,
                json!({ "gDefect": r.g_defect, "oddCycles": k }),
            ),
            // more than `cycle_cap` odd cycles: the bound is settled if the
            // defect does not exceed the cap
            CycleCount::Overflow if r.g_defect <= limits.cycle_cap as i64 => TheoremVerdict::decided(
                theorem,
                true,
                json!({ "gDefect": r.g_defect, "oddCycles": "OVERFLOW" }),
            ),
            CycleCount::Overflow => TheoremVerdict::undecided(theorem, "odd-cycle count overflow"),
        },
        T::DefectReduction => TheoremVerdict::decided(
            theorem,
            r.g_defect == r.lc_g_defect,
            json!({ "gDefect": r.g_defect, "lcGDefect": r.lc_g_defect }),
        ),
    })
}

fn uncovered(g: &Graph, core: &VertexSet, corona: &VertexSet) -> VertexSet {
    corona.union(&g.neighborhood(core)).complement()
}

const GAMMA_EXHAUSTIVE: usize = 12;
const GAMMA_SAMPLES: usize = 4096;

/// Every nonempty subfamily of Ω when |Ω| ≤ 12, otherwise 4096 random ones
/// seeded by `seed` and the graph.
fn gamma_families(omega: &[VertexSet], seed: u64, graph6: &str) -> Vec<Vec<VertexSet>> {
    let pick = |mask: u64| -> Vec<VertexSet> {
        omega.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, s)| s.clone()).collect()
    };
    if omega.len() <= GAMMA_EXHAUSTIVE {
        return (1..1u64 << omega.len()).map(pick).collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ fnv1a(graph6.as_bytes()));
    (0..GAMMA_SAMPLES)
        .map(|_| loop {
            let gamma: Vec<VertexSet> = omega.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
            if !gamma.is_empty() {
                break gamma;
            }
        })
        .collect()
}

fn fnv1a(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0xcbf2_9ce4_8422_2325, |h, &b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3))
}
