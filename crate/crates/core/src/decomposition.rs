//! Larson's independence decomposition and almost-bipartite graphs.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::critical::{is_2bicritical, max_critical_independent_set};
use crate::cycles::{count_odd_cycles, for_each_cycle, CycleCount};
use crate::error::{Error, Result};
use crate::format::to_graph6;
use crate::graph::{Graph, Induced};
use crate::independence::{alpha, core_with_alpha, corona_with_alpha, is_konig_egervary};
use crate::critical::ker;
use crate::vertex_set::VertexSet;

/// `L = J ∪ N(J)` for a maximum critical independent set `J`, and its
/// complement `Lc`.
#[derive(Clone, Debug)]
pub struct LarsonDecomposition {
    pub j: VertexSet,
    pub l: VertexSet,
    pub lc: VertexSet,
    pub l_graph: Induced,
    pub lc_graph: Induced,
}

impl LarsonDecomposition {
    pub fn lc_graph6(&self) -> String {
        to_graph6(&self.lc_graph.graph)
    }
}

/// Computes the decomposition and checks its four defining properties,
/// reporting a failed check as [`Error::Internal`].
pub fn larson_decompose(g: &Graph) -> Result<LarsonDecomposition> {
    let j = max_critical_independent_set(g);
    let l = j.union(&g.neighborhood(&j));
    let lc = l.complement();
    let dec = LarsonDecomposition {
        l_graph: g.induced_subgraph(&l),
        lc_graph: g.induced_subgraph(&lc),
        j,
        l,
        lc,
    };
    if alpha(g) != alpha(&dec.l_graph.graph) + alpha(&dec.lc_graph.graph) {
        return Err(Error::Internal("α is not additive over L and Lc".into()));
    }
    if !is_konig_egervary(&dec.l_graph.graph) {
        return Err(Error::Internal("G[L] is not König-Egerváry".into()));
    }
    if !is_2bicritical(&dec.lc_graph.graph) {
        return Err(Error::Internal("G[Lc] is not 2-bicritical".into()));
    }
    Ok(dec)
}

/// Exactly one odd cycle. Counting stops at the second one, so no cap is
/// involved.
pub fn is_almost_bipartite(g: &Graph) -> bool {
    count_odd_cycles(g, 1) == CycleCount::Exact(1)
}

fn the_odd_cycle(g: &Graph) -> Option<Vec<usize>> {
    let mut found = None;
    for_each_cycle(g, |c| {
        if c.len() % 2 == 1 {
            found = Some(c.to_vec());
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    found
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct AlmostBipartiteReport {
    pub alpha: usize,
    pub core: VertexSet,
    pub corona: VertexSet,
    pub ker: VertexSet,
    pub odd_cycle: Vec<usize>,
    #[serde(rename = "Lc")]
    pub lc: VertexSet,
    pub checks: Vec<Check>,
}

impl AlmostBipartiteReport {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// For an almost bipartite graph that is not König–Egerváry: ker = core,
/// |corona| + |core| = 2α + 1, corona ∪ N(core) = V, and the Larson
/// complement is exactly the odd cycle (in particular nonempty).
pub fn check_almost_bipartite_theorem(g: &Graph) -> Result<AlmostBipartiteReport> {
    if !is_almost_bipartite(g) {
        return Err(Error::Precondition("graph is not almost bipartite".into()));
    }
    if is_konig_egervary(g) {
        return Err(Error::Precondition("graph is König-Egerváry".into()));
    }
    let a = alpha(g);
    let core = core_with_alpha(g, a);
    let corona = corona_with_alpha(g, a);
    let ker = ker(g);
    let dec = larson_decompose(g)?;
    let odd_cycle = the_odd_cycle(g).ok_or_else(|| Error::Internal("odd cycle vanished".into()))?;
    let cycle_set = VertexSet::from_iter(g.order(), odd_cycle.iter().copied());
    let sum = corona.len() + core.len();
    let uncovered = corona.union(&g.neighborhood(&core)).complement();
    let lc_g = &dec.lc_graph.graph;
    let lc_is_cycle = dec.lc == cycle_set
        && lc_g.is_connected()
        && (0..lc_g.order()).all(|v| lc_g.degree(v) == 2);
    let checks = vec![
        Check {
            name: "ker = core",
            holds: ker == core,
            detail: format!("ker {ker}, core {core}"),
        },
        Check {
            name: "|corona| + |core| = 2α + 1",
            holds: sum == 2 * a + 1,
            detail: format!("{} + {} = {sum}, 2α + 1 = {}", corona.len(), core.len(), 2 * a + 1),
        },
        Check {
            name: "corona ∪ N(core) = V",
            holds: uncovered.is_empty(),
            detail: format!("uncovered {uncovered}"),
        },
        Check {
            name: "Lc is the odd cycle",
            holds: lc_is_cycle && !dec.lc.is_empty(),
            detail: format!("Lc {}, odd cycle {cycle_set}", dec.lc),
        },
    ];
    Ok(AlmostBipartiteReport {
        alpha: a,
        core,
        corona,
        ker,
        odd_cycle,
        lc: dec.lc,
        checks,
    })
}
