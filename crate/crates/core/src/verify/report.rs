use serde::Serialize;

use crate::critical::{critical_difference, CriticalProfile};
use crate::cycles::{count_odd_cycles, CycleCount};
use crate::decomposition::{is_almost_bipartite, larson_decompose};
use crate::ear::is_abmc;
use crate::error::Result;
use crate::format::to_graph6;
use crate::graph::Graph;
use crate::independence::{alpha, core_with_alpha, corona_with_alpha};
use crate::matching::{is_factor_critical, max_matching, MatchingMap};
use crate::oracle::Oracle;
use crate::vertex_set::VertexSet;

use super::{defect_of, Decision, Limits};

/// Every invariant of one graph, as emitted by `analyze` and attached to
/// scan violations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AnalysisReport {
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub n: usize,
    pub edges: usize,
    pub alpha: usize,
    pub mu: usize,
    pub ke: bool,
    pub d: i64,
    pub core: VertexSet,
    pub corona: VertexSet,
    pub ker: VertexSet,
    pub diadem: VertexSet,
    pub nucleus: VertexSet,
    /// The maximum critical independent set that witnesses `L`.
    pub max_critical: VertexSet,
    #[serde(rename = "L")]
    pub l: VertexSet,
    #[serde(rename = "Lc")]
    pub lc: VertexSet,
    pub lc_graph6: String,
    pub two_bicritical: bool,
    pub almost_bipartite: bool,
    pub factor_critical: bool,
    pub abmc: Decision,
    pub lc_abmc: Decision,
    pub g_defect: i64,
    pub lc_g_defect: i64,
    pub odd_cycle_count: CycleCount,
    pub matching: MatchingMap,
}

impl AnalysisReport {
    pub fn compute(g: &Graph, labels: Option<Vec<String>>, limits: &Limits) -> Result<AnalysisReport> {
        let n = g.order();
        let a = alpha(g);
        let matching = max_matching(g);
        let mu = matching.size();
        let core = core_with_alpha(g, a);
        let corona = corona_with_alpha(g, a);
        let profile = CriticalProfile::compute(g);
        let dec = larson_decompose(g)?;
        let lc_g = &dec.lc_graph.graph;
        let lc_a = alpha(lc_g);
        let lc_defect = defect_of(lc_a, core_with_alpha(lc_g, lc_a).len(), corona_with_alpha(lc_g, lc_a).len());
        Ok(AnalysisReport {
            graph6: to_graph6(g),
            labels,
            n,
            edges: g.edge_count(),
            alpha: a,
            mu,
            ke: a + mu == n,
            d: profile.d,
            g_defect: defect_of(a, core.len(), corona.len()),
            core,
            corona,
            ker: profile.ker,
            diadem: profile.diadem,
            nucleus: profile.nucleus,
            two_bicritical: profile.max_critical_independent.is_empty(),
            max_critical: profile.max_critical_independent,
            l: dec.l.clone(),
            lc: dec.lc.clone(),
            lc_graph6: dec.lc_graph6(),
            almost_bipartite: is_almost_bipartite(g),
            factor_critical: is_factor_critical(g),
            abmc: Decision::from_option(is_abmc(g, limits.recognizer_limit).as_flag()),
            lc_abmc: Decision::from_option(is_abmc(lc_g, limits.recognizer_limit).as_flag()),
            lc_g_defect: lc_defect,
            odd_cycle_count: count_odd_cycles(g, limits.cycle_cap),
            matching,
        })
    }
}

/// Fast-path values recomputed by brute force.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct OracleCheck {
    pub agrees: bool,
    /// Fields whose fast-path value differs from the oracle.
    pub mismatches: Vec<String>,
}

impl OracleCheck {
    /// Returns `None` when the graph exceeds the oracle limit.
    pub fn run(g: &Graph, report: &AnalysisReport, limits: &Limits) -> Option<OracleCheck> {
        let o = Oracle::new(g, limits.oracle_limit).ok()?;
        let mut mismatches = Vec::new();
        let mut cmp = |name: &str, same: bool| {
            if !same {
                mismatches.push(name.to_string());
            }
        };
        let a = o.alpha();
        let core = o.core();
        let corona = o.corona();
        cmp("alpha", a == report.alpha);
        cmp("mu", o.matching_number() == report.mu);
        cmp("ke", o.is_konig_egervary() == report.ke);
        cmp("d", o.critical_difference() == report.d);
        cmp("core", core == report.core);
        cmp("corona", corona == report.corona);
        cmp("ker", o.ker() == report.ker);
        cmp("diadem", o.diadem() == report.diadem);
        cmp("nucleus", o.nucleus() == report.nucleus);
        cmp("twoBicritical", o.is_2bicritical() == report.two_bicritical);
        cmp("L", o.larson_candidates() == vec![report.l.clone()]);
        cmp("gDefect", defect_of(a, core.len(), corona.len()) == report.g_defect);
        let lc = g.induced_subgraph(&report.lc).graph;
        let lo = Oracle::new(&lc, limits.oracle_limit).ok()?;
        cmp(
            "lcGDefect",
            defect_of(lo.alpha(), lo.core().len(), lo.corona().len()) == report.lc_g_defect,
        );
        cmp("d (double cover)", critical_difference(g) == o.critical_independence_difference());
        if let CycleCount::Exact(k) = report.odd_cycle_count {
            if g.order() <= 10 {
                cmp("oddCycleCount", o.odd_cycle_count() == k);
            }
        }
        Some(OracleCheck {
            agrees: mismatches.is_empty(),
            mismatches,
        })
    }
}
