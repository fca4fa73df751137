//! Critical difference, critical independent sets, ker, diadem and nucleus.
//!
//! Everything here reduces to one primitive: the largest difference of an
//! independent set that contains a forced set `F` and avoids a forbidden set
//! `O`. With `H = G − N[F]` and `O' = O ∩ V(H)` that value is
//! `|F| − |N(F)| + max{d_H(Y) : Y ⊆ V(H) − O'}`, and the inner maximum is
//! `|V(H) − O'| − μ(B)` for the bipartite graph `B` whose left side is
//! `V(H) − O'`, whose right side is `V(H)` and whose edges are those of `H`
//! (König on the double cover). Restricting to independent `Y` loses nothing:
//! `Y − N(Y)` never has a smaller difference.

use serde::Serialize;

use crate::graph::Graph;
use crate::independence::alpha_at_least;
use crate::matching::{bipartite_matching_size, max_matching_bipartite};
use crate::vertex_set::VertexSet;

/// `|X| − |N(X)|`.
pub fn set_difference(g: &Graph, x: &VertexSet) -> i64 {
    x.len() as i64 - g.neighborhood(x).len() as i64
}

/// d(G) through the bipartite double cover: α(D) − n with α(D) = 2n − μ(D).
pub fn critical_difference(g: &Graph) -> i64 {
    let n = g.order();
    let cover = g.bipartite_double_cover();
    let left = VertexSet::from_iter(2 * n, 0..n);
    let right = left.complement();
    let mu = max_matching_bipartite(&cover, &left, &right)
        .expect("double cover is bipartite")
        .size();
    n as i64 - mu as i64
}

/// d_I(G), the largest difference of an independent set.
pub fn critical_independence_difference(g: &Graph) -> i64 {
    best_restricted(g, &g.empty_set(), &g.empty_set()).unwrap()
}

/// Largest `d(X)` over independent `X ⊇ forced` with `X ∩ forbidden = ∅`;
/// `None` when no such set exists.
pub fn best_restricted(g: &Graph, forced: &VertexSet, forbidden: &VertexSet) -> Option<i64> {
    if !forced.is_disjoint(forbidden) || !g.is_independent(forced) {
        return None;
    }
    let nf = g.neighborhood(forced);
    let h = nf.union(forced).complement();
    let left: Vec<usize> = h.difference(forbidden).iter().collect();
    let mut index = vec![usize::MAX; g.order()];
    for (i, v) in h.iter().enumerate() {
        index[v] = i;
    }
    let adj: Vec<Vec<usize>> = left
        .iter()
        .map(|&v| g.neighbors(v).intersection(&h).iter().map(|w| index[w]).collect())
        .collect();
    let mu = bipartite_matching_size(&adj, h.len());
    Some(forced.len() as i64 - nf.len() as i64 + left.len() as i64 - mu as i64)
}

pub fn is_critical_independent(g: &Graph, x: &VertexSet, d: i64) -> bool {
    g.is_independent(x) && set_difference(g, x) == d
}

/// Depth-first search over include/exclude decisions in label order,
/// pruned by the exact restricted bound. Only strictly larger sets replace
/// the incumbent, so the result is the lexicographically least critical
/// independent set of maximum cardinality.
struct MaxCriticalSearch<'g> {
    g: &'g Graph,
    d: i64,
    best: Option<VertexSet>,
    /// stop once a set of at least this size is found
    target: Option<usize>,
}

impl MaxCriticalSearch<'_> {
    fn feasible(&self, forced: &VertexSet, forbidden: &VertexSet) -> bool {
        best_restricted(self.g, forced, forbidden) == Some(self.d)
    }

    fn done(&self) -> bool {
        match (self.target, &self.best) {
            (Some(t), Some(b)) => b.len() >= t,
            _ => false,
        }
    }

    fn search(&mut self, next: usize, forced: &mut VertexSet, forbidden: &mut VertexSet) {
        let g = self.g;
        let blocked = g.closed_neighborhood(forced).union(forbidden);
        let rest = VertexSet::from_iter(g.order(), next..g.order()).difference(&blocked);
        let need = match &self.best {
            Some(b) => b.len() + 1,
            None => 0,
        };
        if forced.len() + rest.len() < need
            || !alpha_at_least(g, &rest, need.saturating_sub(forced.len()))
        {
            return;
        }
        let Some(v) = rest.first() else {
            self.best = Some(forced.clone());
            return;
        };
        forced.insert(v);
        if self.feasible(forced, forbidden) {
            self.search(v + 1, forced, forbidden);
        }
        forced.remove(v);
        if self.done() {
            return;
        }
        forbidden.insert(v);
        if self.feasible(forced, forbidden) {
            self.search(v + 1, forced, forbidden);
        }
        forbidden.remove(v);
    }
}

fn search_max_critical(g: &Graph, d: i64, avoid: &VertexSet, target: Option<usize>) -> Option<VertexSet> {
    let mut s = MaxCriticalSearch {
        g,
        d,
        best: None,
        target,
    };
    let mut forced = g.empty_set();
    let mut forbidden = avoid.clone();
    if s.feasible(&forced, &forbidden) {
        s.search(0, &mut forced, &mut forbidden);
    }
    s.best
}

/// The lexicographically least critical independent set of maximum
/// cardinality.
pub fn max_critical_independent_set(g: &Graph) -> VertexSet {
    let d = critical_difference(g);
    search_max_critical(g, d, &g.empty_set(), None).expect("some critical independent set exists")
}

/// Intersection of all critical independent sets: `v` belongs iff every
/// independent set avoiding `v` falls short of d(G).
pub fn ker(g: &Graph) -> VertexSet {
    ker_with_d(g, critical_difference(g))
}

pub fn ker_with_d(g: &Graph, d: i64) -> VertexSet {
    let n = g.order();
    VertexSet::from_iter(
        n,
        (0..n).filter(|&v| best_restricted(g, &g.empty_set(), &VertexSet::singleton(n, v)) != Some(d)),
    )
}

/// Union of all critical independent sets: `v` belongs iff some critical
/// independent set contains it.
pub fn diadem(g: &Graph) -> VertexSet {
    diadem_with_d(g, critical_difference(g))
}

pub fn diadem_with_d(g: &Graph, d: i64) -> VertexSet {
    let n = g.order();
    VertexSet::from_iter(
        n,
        (0..n).filter(|&v| best_restricted(g, &VertexSet::singleton(n, v), &g.empty_set()) == Some(d)),
    )
}

/// Intersection of all maximum-cardinality critical independent sets.
pub fn nucleus(g: &Graph) -> VertexSet {
    let d = critical_difference(g);
    let j = search_max_critical(g, d, &g.empty_set(), None).unwrap();
    nucleus_with(g, d, &j)
}

fn nucleus_with(g: &Graph, d: i64, max_critical: &VertexSet) -> VertexSet {
    let n = g.order();
    let k = max_critical.len();
    VertexSet::from_iter(
        n,
        max_critical.iter().filter(|&v| {
            search_max_critical(g, d, &VertexSet::singleton(n, v), Some(k))
                .is_none_or(|s| s.len() < k)
        }),
    )
}

/// Whether `|N(S)| > |S|` for every nonempty independent `S`.
pub fn is_2bicritical(g: &Graph) -> bool {
    let n = g.order();
    (0..n).all(|v| {
        best_restricted(g, &VertexSet::singleton(n, v), &g.empty_set()).unwrap() < 0
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalProfile {
    pub d: i64,
    pub d_i: i64,
    pub max_critical_independent: VertexSet,
    pub ker: VertexSet,
    pub diadem: VertexSet,
    pub nucleus: VertexSet,
}

impl CriticalProfile {
    pub fn compute(g: &Graph) -> CriticalProfile {
        let d = critical_difference(g);
        let d_i = critical_independence_difference(g);
        debug_assert_eq!(d, d_i);
        let j = search_max_critical(g, d, &g.empty_set(), None).unwrap();
        CriticalProfile {
            d,
            d_i,
            ker: ker_with_d(g, d),
            diadem: diadem_with_d(g, d),
            nucleus: nucleus_with(g, d, &j),
            max_critical_independent: j,
        }
    }

    pub fn is_2bicritical(&self) -> bool {
        self.max_critical_independent.is_empty()
    }
}
