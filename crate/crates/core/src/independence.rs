//! Independence number, maximum independent sets, core and corona.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::{match_into, matching_number, MatchingMap};
use crate::vertex_set::VertexSet;

pub const DEFAULT_OMEGA_CAP: usize = 100_000;

/// Branch and bound over vertex bitsets. Vertices of residual degree ≤ 1 are
/// taken greedily; otherwise the search branches on a maximum-degree vertex
/// and prunes with a greedy clique cover.
struct MisSearch<'g> {
    g: &'g Graph,
    cur: Vec<usize>,
    best: Vec<usize>,
    /// stop as soon as a set of this size is found
    target: Option<usize>,
}

impl MisSearch<'_> {
    fn done(&self) -> bool {
        self.target.is_some_and(|t| self.best.len() >= t)
    }

    fn clique_cover(&self, cand: &VertexSet) -> usize {
        let mut rem = cand.clone();
        let mut count = 0;
        while let Some(v) = rem.first() {
            rem.remove(v);
            let mut common = rem.intersection(self.g.neighbors(v));
            while let Some(u) = common.first() {
                rem.remove(u);
                common.intersect_with(self.g.neighbors(u));
            }
            count += 1;
        }
        count
    }

    fn search(&mut self, mut cand: VertexSet) {
        let mark = self.cur.len();
        while let Some(v) = cand
            .iter()
            .find(|&v| self.g.neighbors(v).intersection_len(&cand) <= 1)
        {
            self.cur.push(v);
            cand.difference_with(self.g.neighbors(v));
            cand.remove(v);
        }
        if cand.is_empty() {
            if self.cur.len() > self.best.len() {
                self.best = self.cur.clone();
            }
        } else if self.cur.len() + self.clique_cover(&cand) > self.best.len() {
            let v = cand
                .iter()
                .max_by_key(|&v| (self.g.neighbors(v).intersection_len(&cand), usize::MAX - v))
                .unwrap();
            let mut with = cand.difference(self.g.neighbors(v));
            with.remove(v);
            self.cur.push(v);
            self.search(with);
            self.cur.pop();
            if !self.done() {
                cand.remove(v);
                self.search(cand);
            }
        }
        self.cur.truncate(mark);
    }
}

fn mis_within(g: &Graph, cand: &VertexSet, target: Option<usize>) -> Vec<usize> {
    let mut s = MisSearch {
        g,
        cur: Vec::new(),
        best: Vec::new(),
        target,
    };
    s.search(cand.clone());
    s.best
}

/// A maximum independent set of `g[cand]`.
pub fn maximum_independent_set_within(g: &Graph, cand: &VertexSet) -> VertexSet {
    VertexSet::from_iter(g.order(), mis_within(g, cand, None))
}

pub fn maximum_independent_set(g: &Graph) -> VertexSet {
    maximum_independent_set_within(g, &g.vertices())
}

/// α(g[cand]) without materialising the induced subgraph.
pub fn alpha_within(g: &Graph, cand: &VertexSet) -> usize {
    mis_within(g, cand, None).len()
}

/// Whether α(g[cand]) ≥ k; stops at the first witness.
pub fn alpha_at_least(g: &Graph, cand: &VertexSet, k: usize) -> bool {
    k == 0 || mis_within(g, cand, Some(k)).len() >= k
}

pub fn alpha(g: &Graph) -> usize {
    alpha_within(g, &g.vertices())
}

/// Ω(G), possibly truncated to its first `cap` members in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaximumIndependentFamily {
    pub alpha: usize,
    pub sets: Vec<VertexSet>,
    pub truncated: bool,
}

pub fn omega(g: &Graph, cap: usize) -> MaximumIndependentFamily {
    let a = alpha(g);
    let mut fam = MaximumIndependentFamily {
        alpha: a,
        sets: Vec::new(),
        truncated: false,
    };
    let mut chosen = g.empty_set();
    enumerate_maximum(g, a, g.vertices(), &mut chosen, cap, &mut fam);
    fam
}

fn enumerate_maximum(
    g: &Graph,
    a: usize,
    cand: VertexSet,
    chosen: &mut VertexSet,
    cap: usize,
    fam: &mut MaximumIndependentFamily,
) {
    if fam.truncated {
        return;
    }
    if chosen.len() == a {
        if fam.sets.len() == cap {
            fam.truncated = true;
        } else {
            fam.sets.push(chosen.clone());
        }
        return;
    }
    let need = a - chosen.len();
    if cand.len() < need || !alpha_at_least(g, &cand, need) {
        return;
    }
    let v = cand.first().unwrap();
    let mut with = cand.difference(g.neighbors(v));
    with.remove(v);
    chosen.insert(v);
    enumerate_maximum(g, a, with, chosen, cap, fam);
    chosen.remove(v);
    let mut without = cand;
    without.remove(v);
    enumerate_maximum(g, a, without, chosen, cap, fam);
}

/// core(G) by α-queries: `v` is in every maximum independent set iff
/// deleting it lowers α.
pub fn core(g: &Graph) -> VertexSet {
    core_with_alpha(g, alpha(g))
}

pub fn core_with_alpha(g: &Graph, a: usize) -> VertexSet {
    let all = g.vertices();
    VertexSet::from_iter(
        g.order(),
        (0..g.order()).filter(|&v| {
            let mut rest = all.clone();
            rest.remove(v);
            !alpha_at_least(g, &rest, a)
        }),
    )
}

/// corona(G) by α-queries: `v` lies in some maximum independent set iff
/// α(G − N[v]) = α(G) − 1.
pub fn corona(g: &Graph) -> VertexSet {
    corona_with_alpha(g, alpha(g))
}

pub fn corona_with_alpha(g: &Graph, a: usize) -> VertexSet {
    VertexSet::from_iter(
        g.order(),
        (0..g.order()).filter(|&v| {
            let rest = g.closed_neighborhood(&VertexSet::singleton(g.order(), v)).complement();
            alpha_at_least(g, &rest, a - 1)
        }),
    )
}

pub fn is_konig_egervary(g: &Graph) -> bool {
    alpha(g) + matching_number(g) == g.order()
}

fn validate_gamma(g: &Graph, a: usize, gamma: &[VertexSet]) -> Result<()> {
    if gamma.is_empty() {
        return Err(Error::EmptyFamily);
    }
    for s in gamma {
        if s.universe() != g.order() {
            return Err(Error::Precondition("set over a different vertex range".into()));
        }
        if let Some((u, v)) = g.find_edge_inside(s) {
            return Err(Error::NotIndependent(u, v));
        }
        if s.len() != a {
            return Err(Error::NotMaximum);
        }
    }
    Ok(())
}

fn union_and_intersection(g: &Graph, gamma: &[VertexSet]) -> (VertexSet, VertexSet) {
    let mut u = g.empty_set();
    let mut i = g.vertices();
    for s in gamma {
        u.union_with(s);
        i.intersect_with(s);
    }
    (u, i)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaSum {
    pub sum: usize,
    pub equals_two_alpha: bool,
}

/// |⋃Γ| + |⋂Γ| for a nonempty family of maximum independent sets, compared
/// with 2α.
pub fn gamma_sum_check(g: &Graph, gamma: &[VertexSet]) -> Result<GammaSum> {
    gamma_sum_check_with_alpha(g, alpha(g), gamma)
}

pub fn gamma_sum_check_with_alpha(g: &Graph, a: usize, gamma: &[VertexSet]) -> Result<GammaSum> {
    validate_gamma(g, a, gamma)?;
    let (u, i) = union_and_intersection(g, gamma);
    let sum = u.len() + i.len();
    Ok(GammaSum {
        sum,
        equals_two_alpha: sum == 2 * a,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaMatching {
    /// V − ⋃Γ can be matched into ⋂Γ
    pub matchable: bool,
    pub matching: Option<MatchingMap>,
    /// ⋃Γ ∪ N(⋂Γ) = V
    pub covers: bool,
    /// vertices missed by ⋃Γ ∪ N(⋂Γ)
    pub uncovered: VertexSet,
}

impl GammaMatching {
    pub fn holds(&self) -> bool {
        self.matchable && self.covers
    }
}

pub fn gamma_matching_check(g: &Graph, gamma: &[VertexSet]) -> Result<GammaMatching> {
    let a = alpha(g);
    if a + matching_number(g) != g.order() {
        return Err(Error::NotKonigEgervary);
    }
    gamma_matching_check_unchecked(g, a, gamma)
}

/// As [`gamma_matching_check`] with the König–Egerváry test left to the
/// caller.
pub fn gamma_matching_check_unchecked(
    g: &Graph,
    a: usize,
    gamma: &[VertexSet],
) -> Result<GammaMatching> {
    validate_gamma(g, a, gamma)?;
    let (u, i) = union_and_intersection(g, gamma);
    let outside = u.complement();
    let matching = match_into(g, &outside, &i)?;
    let covered = u.union(&g.neighborhood(&i));
    let uncovered = covered.complement();
    Ok(GammaMatching {
        matchable: matching.is_some(),
        matching,
        covers: uncovered.is_empty(),
        uncovered,
    })
}
