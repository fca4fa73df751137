//! Maximum matchings and the matching-based predicates built on them.

mod bipartite;
mod blossom;

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub(crate) use bipartite::matching_size as bipartite_matching_size;

/// Default order limit for [`berge_is_maximum`].
pub const DEFAULT_BERGE_LIMIT: usize = 24;

/// A matching viewed as an involution: `mate(v) == v` iff `v` is unmatched.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatchingMap {
    mate: Vec<usize>,
}

impl MatchingMap {
    pub fn empty(n: usize) -> Self {
        MatchingMap {
            mate: (0..n).collect(),
        }
    }

    /// Builds a matching from pairs; panics if a vertex is used twice.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Self {
        let mut m = Self::empty(n);
        for &(u, v) in pairs {
            assert!(m.mate[u] == u && m.mate[v] == v && u != v, "not a matching");
            m.mate[u] = v;
            m.mate[v] = u;
        }
        m
    }

    pub fn order(&self) -> usize {
        self.mate.len()
    }

    pub fn mate(&self, v: usize) -> usize {
        self.mate[v]
    }

    pub fn is_matched(&self, v: usize) -> bool {
        self.mate[v] != v
    }

    pub fn size(&self) -> usize {
        self.mate.iter().enumerate().filter(|&(v, &m)| m != v).count() / 2
    }

    /// Matched pairs `(u, v)` with `u < v`, sorted.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.mate
            .iter()
            .enumerate()
            .filter(|&(v, &m)| v < m)
            .map(|(v, &m)| (v, m))
            .collect()
    }

    pub fn unmatched(&self) -> VertexSet {
        VertexSet::from_iter(self.order(), (0..self.order()).filter(|&v| !self.is_matched(v)))
    }

    /// The involution property and that every pair is an edge of `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.order() == g.order()
            && self.mate.iter().enumerate().all(|(v, &m)| {
                m < self.order() && self.mate[m] == v && (m == v || g.has_edge(v, m))
            })
    }
}

impl Serialize for MatchingMap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs = self.pairs();
        let mut seq = s.serialize_seq(Some(pairs.len()))?;
        for (u, v) in pairs {
            seq.serialize_element(&[u, v])?;
        }
        seq.end()
    }
}

pub fn max_matching(g: &Graph) -> MatchingMap {
    let mut mate = blossom::maximum_matching(g);
    for (v, m) in mate.iter_mut().enumerate() {
        if *m == blossom::UNMATCHED {
            *m = v;
        }
    }
    MatchingMap { mate }
}

pub fn matching_number(g: &Graph) -> usize {
    max_matching(g).size()
}

/// Runs Hopcroft–Karp from `left` into `right` using only edges of `g`
/// between the two sets.
fn match_across(g: &Graph, left: &VertexSet, right: &VertexSet) -> (MatchingMap, usize) {
    let left_v = left.to_vec();
    let right_v = right.to_vec();
    let mut index = vec![usize::MAX; g.order()];
    for (i, &r) in right_v.iter().enumerate() {
        index[r] = i;
    }
    let adj: Vec<Vec<usize>> = left_v
        .iter()
        .map(|&l| g.neighbors(l).intersection(right).iter().map(|r| index[r]).collect())
        .collect();
    let hk = bipartite::HopcroftKarp::run(&adj, right_v.len());
    let mut m = MatchingMap::empty(g.order());
    for (i, r) in hk.mate_left.iter().enumerate() {
        if let Some(r) = *r {
            let (u, v) = (left_v[i], right_v[r]);
            m.mate[u] = v;
            m.mate[v] = u;
        }
    }
    let size = hk.size();
    (m, size)
}

/// Maximum matching of a bipartite graph with the given colour classes.
pub fn max_matching_bipartite(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<MatchingMap> {
    if let Some(v) = a.intersection(b).first() {
        return Err(Error::InvalidBipartition(format!("vertex {v} lies in both parts")));
    }
    if let Some(v) = a.union(b).complement().first() {
        return Err(Error::InvalidBipartition(format!("vertex {v} lies in neither part")));
    }
    for part in [a, b] {
        if let Some((u, v)) = g.find_edge_inside(part) {
            return Err(Error::InvalidBipartition(format!("edge {u}-{v} inside a part")));
        }
    }
    Ok(match_across(g, a, b).0)
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    g.order() % 2 == 0 && 2 * matching_number(g) == g.order()
}

pub fn has_near_perfect_matching(g: &Graph) -> bool {
    g.order() % 2 == 1 && 2 * matching_number(g) + 1 == g.order()
}

/// `G − v` has a perfect matching for every `v`. The empty graph is not
/// factor-critical (factor-critical graphs have odd order).
pub fn is_factor_critical(g: &Graph) -> bool {
    let n = g.order();
    n % 2 == 1
        && (0..n).all(|v| {
            let h = g.remove_vertices(&VertexSet::singleton(n, v)).graph;
            2 * matching_number(&h) == n - 1
        })
}

/// Whether some perfect matching of `g` uses the edge `uv`.
pub fn edge_in_perfect_matching(g: &Graph, u: usize, v: usize) -> bool {
    if !g.has_edge(u, v) {
        return false;
    }
    let h = g.remove_vertices(&VertexSet::from_iter(g.order(), [u, v])).graph;
    has_perfect_matching(&h)
}

/// Connected, bipartite, and every edge lies in a perfect matching.
pub fn is_bipartite_matching_covered(g: &Graph) -> bool {
    g.order() >= 2
        && g.is_connected()
        && g.is_bipartite()
        && g.edges().into_iter().all(|(u, v)| edge_in_perfect_matching(g, u, v))
}

/// A matching of `g` saturating `a` with every mate in `b`, if one exists.
pub fn match_into(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<Option<MatchingMap>> {
    if let Some(v) = a.intersection(b).first() {
        return Err(Error::OverlappingSets(v));
    }
    let (m, size) = match_across(g, a, b);
    Ok((size == a.len()).then_some(m))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BergeOutcome {
    pub maximum: bool,
    /// An independent set disjoint from S that cannot be matched into S; the
    /// smallest such set, least in canonical order among those.
    pub witness: Option<VertexSet>,
}

/// Decides maximality of an independent set `s` by checking that every
/// independent set disjoint from it matches into it.
pub fn berge_is_maximum(g: &Graph, s: &VertexSet) -> Result<BergeOutcome> {
    berge_is_maximum_bounded(g, s, DEFAULT_BERGE_LIMIT)
}

pub fn berge_is_maximum_bounded(g: &Graph, s: &VertexSet, limit: usize) -> Result<BergeOutcome> {
    if g.order() > limit {
        return Err(Error::TooLarge {
            what: "Berge maximality check",
            order: g.order(),
            limit,
        });
    }
    if let Some((u, v)) = g.find_edge_inside(s) {
        return Err(Error::NotIndependent(u, v));
    }
    let outside = s.complement();
    for k in 1..=outside.len() {
        let mut found = None;
        let mut chosen = g.empty_set();
        independent_k_subsets(g, &outside, k, &mut chosen, &mut |t| {
            let (_, size) = match_across(g, t, s);
            if size < t.len() {
                found = Some(t.clone());
                false
            } else {
                true
            }
        });
        if let Some(w) = found {
            return Ok(BergeOutcome {
                maximum: false,
                witness: Some(w),
            });
        }
    }
    Ok(BergeOutcome {
        maximum: true,
        witness: None,
    })
}

/// Visits independent `k`-subsets of `cand` in canonical order until `f`
/// returns false; returns false if stopped early.
fn independent_k_subsets(
    g: &Graph,
    cand: &VertexSet,
    k: usize,
    chosen: &mut VertexSet,
    f: &mut dyn FnMut(&VertexSet) -> bool,
) -> bool {
    if chosen.len() == k {
        return f(chosen);
    }
    let mut rest = cand.clone();
    while let Some(v) = rest.first() {
        if rest.len() + chosen.len() < k {
            break;
        }
        rest.remove(v);
        chosen.insert(v);
        let next = rest.difference(g.neighbors(v));
        let go = independent_k_subsets(g, &next, k, chosen, f);
        chosen.remove(v);
        if !go {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path, star};

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_iter(n, v.iter().copied())
    }

    fn k4_pendant() -> Graph {
        Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)]).unwrap()
    }

    #[test]
    fn max_matching_examples() {
        assert_eq!(max_matching(&cycle(5).unwrap()).size(), 2);
        assert_eq!(max_matching(&cycle(4).unwrap()).size(), 2);
        let m = max_matching(&k4_pendant());
        assert_eq!(m.size(), 2);
        assert!(m.is_valid_for(&k4_pendant()));
        assert_eq!(max_matching(&Graph::empty(0)).size(), 0);
    }

    #[test]
    fn blossom_needed() {
        // triangle 0-1-2 with tails 2-3 and 0-4: augmenting through the blossom
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (0, 4), (3, 5)]).unwrap();
        assert_eq!(max_matching(&g).size(), 3);
    }

    #[test]
    fn bipartite_examples() {
        for (g, want) in [
            (cycle(4).unwrap(), 2),
            (star(3).unwrap(), 1),
            (path(3).unwrap(), 1),
        ] {
            let (a, b) = g.bipartition().unwrap();
            let m = max_matching_bipartite(&g, &a, &b).unwrap();
            assert_eq!(m.size(), want);
            assert!(m.is_valid_for(&g));
        }
    }

    #[test]
    fn bipartite_rejects_bad_parts() {
        let p3 = path(3).unwrap();
        assert!(matches!(
            max_matching_bipartite(&p3, &set(3, &[0, 1]), &set(3, &[2])),
            Err(Error::InvalidBipartition(_))
        ));
        assert!(max_matching_bipartite(&p3, &set(3, &[0]), &set(3, &[1])).is_err());
        assert!(max_matching_bipartite(&p3, &set(3, &[0, 1]), &set(3, &[1, 2])).is_err());
    }

    #[test]
    fn perfect_and_near_perfect() {
        let c4 = cycle(4).unwrap();
        let c5 = cycle(5).unwrap();
        let k13 = star(3).unwrap();
        assert!(has_perfect_matching(&c4));
        assert!(has_near_perfect_matching(&c5) && !has_perfect_matching(&c5));
        assert!(!has_perfect_matching(&k13) && !has_near_perfect_matching(&k13));
    }

    #[test]
    fn factor_critical_examples() {
        assert!(is_factor_critical(&cycle(5).unwrap()));
        assert!(!is_factor_critical(&complete(2).unwrap()));
        assert!(is_factor_critical(&complete(1).unwrap()));
        assert!(!is_factor_critical(&Graph::empty(0)));
        assert!(!is_factor_critical(&path(3).unwrap()));
    }

    #[test]
    fn match_into_examples() {
        let p3 = path(3).unwrap();
        assert!(match_into(&p3, &set(3, &[1]), &set(3, &[0, 2])).unwrap().is_some());
        let k13 = star(3).unwrap();
        assert!(match_into(&k13, &set(4, &[1, 2, 3]), &set(4, &[0])).unwrap().is_none());
        let c5 = cycle(5).unwrap();
        let m = match_into(&c5, &set(5, &[1]), &set(5, &[0, 2])).unwrap().unwrap();
        assert_eq!(m.mate(1), 0);
        assert_eq!(
            match_into(&c5, &set(5, &[1, 2]), &set(5, &[2, 3])),
            Err(Error::OverlappingSets(2))
        );
        // empty A is trivially matchable
        assert!(match_into(&c5, &set(5, &[]), &set(5, &[0])).unwrap().is_some());
    }

    #[test]
    fn berge_examples() {
        let p3 = path(3).unwrap();
        assert!(berge_is_maximum(&p3, &set(3, &[0, 2])).unwrap().maximum);

        // {v2} has no neighbour in {v0}; it is the smallest failing set
        let c5 = cycle(5).unwrap();
        let out = berge_is_maximum(&c5, &set(5, &[0])).unwrap();
        assert!(!out.maximum);
        assert_eq!(out.witness.unwrap().to_vec(), vec![2]);

        let c4 = cycle(4).unwrap();
        assert!(berge_is_maximum(&c4, &set(4, &[0, 2])).unwrap().maximum);

        assert_eq!(
            berge_is_maximum(&c5, &set(5, &[0, 1])),
            Err(Error::NotIndependent(0, 1))
        );
        assert!(matches!(
            berge_is_maximum_bounded(&c5, &set(5, &[0]), 4),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn matching_covered_examples() {
        assert!(is_bipartite_matching_covered(&complete(2).unwrap()));
        assert!(is_bipartite_matching_covered(&cycle(6).unwrap()));
        assert!(!is_bipartite_matching_covered(&path(4).unwrap()));
        assert!(!is_bipartite_matching_covered(&cycle(5).unwrap()));
    }
}
