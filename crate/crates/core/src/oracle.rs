//! Brute-force reference implementations over vertex bitmasks.
//!
//! Every value here is computed straight from its definition by enumerating
//! subsets, with no shared code from the fast paths beyond [`Graph`]. Graphs
//! larger than the configured limit are refused.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub const DEFAULT_ORACLE_LIMIT: usize = 16;
/// Hard ceiling so masks fit in a `u64` and enumeration stays finite.
pub const MAX_ORACLE_LIMIT: usize = 24;

pub struct Oracle {
    n: usize,
    adj: Vec<u64>,
    independent: Vec<u64>,
}

fn popcount(m: u64) -> i64 {
    m.count_ones() as i64
}

impl Oracle {
    pub fn new(g: &Graph, limit: usize) -> Result<Oracle> {
        let limit = limit.min(MAX_ORACLE_LIMIT);
        let n = g.order();
        if n > limit {
            return Err(Error::TooLarge {
                what: "the brute-force oracle",
                order: n,
                limit,
            });
        }
        let adj: Vec<u64> = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u64, |m, w| m | 1 << w))
            .collect();
        let mut oracle = Oracle {
            n,
            adj,
            independent: Vec::new(),
        };
        oracle.independent = (0..1u64 << n).filter(|&m| oracle.is_independent(m)).collect();
        Ok(oracle)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    fn to_set(&self, m: u64) -> VertexSet {
        VertexSet::from_iter(self.n, (0..self.n).filter(|&v| m >> v & 1 == 1))
    }

    fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    fn neighborhood(&self, m: u64) -> u64 {
        (0..self.n).filter(|&v| m >> v & 1 == 1).fold(0, |acc, v| acc | self.adj[v])
    }

    fn is_independent(&self, m: u64) -> bool {
        self.neighborhood(m) & m == 0
    }

    fn difference(&self, m: u64) -> i64 {
        popcount(m) - popcount(self.neighborhood(m))
    }

    /// Sorted by the canonical set order.
    fn sorted(&self, masks: impl IntoIterator<Item = u64>) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = masks.into_iter().map(|m| self.to_set(m)).collect();
        out.sort();
        out
    }

    fn intersection_of(&self, masks: &[u64]) -> u64 {
        masks.iter().fold(self.full(), |a, &m| a & m)
    }

    fn union_of(&self, masks: &[u64]) -> u64 {
        masks.iter().fold(0, |a, &m| a | m)
    }

    pub fn alpha(&self) -> usize {
        self.independent.iter().map(|m| m.count_ones()).max().unwrap_or(0) as usize
    }

    fn omega_masks(&self) -> Vec<u64> {
        let a = self.alpha() as u32;
        self.independent.iter().copied().filter(|m| m.count_ones() == a).collect()
    }

    pub fn omega(&self) -> Vec<VertexSet> {
        self.sorted(self.omega_masks())
    }

    pub fn core(&self) -> VertexSet {
        self.to_set(self.intersection_of(&self.omega_masks()))
    }

    pub fn corona(&self) -> VertexSet {
        self.to_set(self.union_of(&self.omega_masks()))
    }

    /// μ(G) by recursion on the lowest unmatched vertex.
    pub fn matching_number(&self) -> usize {
        fn go(adj: &[u64], free: u64) -> usize {
            if free == 0 {
                return 0;
            }
            let v = free.trailing_zeros() as usize;
            let rest = free & !(1 << v);
            let mut best = go(adj, rest);
            let mut cand = adj[v] & rest;
            while cand != 0 {
                let w = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                best = best.max(1 + go(adj, rest & !(1 << w)));
            }
            best
        }
        go(&self.adj, self.full())
    }

    pub fn is_konig_egervary(&self) -> bool {
        self.alpha() + self.matching_number() == self.n
    }

    /// max |X| − |N(X)| over every subset X.
    pub fn critical_difference(&self) -> i64 {
        (0..=self.full()).map(|m| self.difference(m)).max().unwrap()
    }

    /// max |X| − |N(X)| over independent X.
    pub fn critical_independence_difference(&self) -> i64 {
        self.independent.iter().map(|&m| self.difference(m)).max().unwrap()
    }

    fn critical_masks(&self) -> Vec<u64> {
        let d = self.critical_independence_difference();
        self.independent.iter().copied().filter(|&m| self.difference(m) == d).collect()
    }

    pub fn critical_independent_sets(&self) -> Vec<VertexSet> {
        self.sorted(self.critical_masks())
    }

    fn maximum_critical_masks(&self) -> Vec<u64> {
        let crit = self.critical_masks();
        let k = crit.iter().map(|m| m.count_ones()).max().unwrap();
        crit.into_iter().filter(|m| m.count_ones() == k).collect()
    }

    pub fn maximum_critical_independent_sets(&self) -> Vec<VertexSet> {
        self.sorted(self.maximum_critical_masks())
    }

    pub fn ker(&self) -> VertexSet {
        self.to_set(self.intersection_of(&self.critical_masks()))
    }

    pub fn diadem(&self) -> VertexSet {
        self.to_set(self.union_of(&self.critical_masks()))
    }

    pub fn nucleus(&self) -> VertexSet {
        self.to_set(self.intersection_of(&self.maximum_critical_masks()))
    }

    /// `J ∪ N(J)` for every maximum critical independent set `J`.
    pub fn larson_candidates(&self) -> Vec<VertexSet> {
        let mut out = self.sorted(
            self.maximum_critical_masks()
                .into_iter()
                .map(|j| j | self.neighborhood(j)),
        );
        out.dedup();
        out
    }

    /// The defining quantifier: |N(S)| > |S| for all nonempty independent S.
    pub fn is_2bicritical(&self) -> bool {
        self.independent
            .iter()
            .all(|&m| m == 0 || popcount(self.neighborhood(m)) > popcount(m))
    }

    /// Number of odd cycles, each counted once as a vertex sequence up to
    /// rotation and reflection.
    pub fn odd_cycle_count(&self) -> u64 {
        let mut count = 0;
        for len in (3..=self.n).step_by(2) {
            for m in 0..=self.full() {
                if m.count_ones() as usize == len {
                    count += self.hamiltonian_cycles(m);
                }
            }
        }
        count
    }

    /// Hamiltonian cycles of the subgraph induced by `m`.
    fn hamiltonian_cycles(&self, m: u64) -> u64 {
        let start = m.trailing_zeros() as usize;
        let mut total = 0;
        let mut stack = vec![(start, 1u64 << start)];
        while let Some((v, seen)) = stack.pop() {
            if seen == m {
                if self.adj[v] >> start & 1 == 1 {
                    total += 1;
                }
                continue;
            }
            let mut next = self.adj[v] & m & !seen;
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                stack.push((w, seen | 1 << w));
            }
        }
        // each cycle is traced once in each direction
        total / 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, star};

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_iter(n, v.iter().copied())
    }

    #[test]
    fn refuses_large_graphs() {
        assert!(matches!(
            Oracle::new(&Graph::empty(30), 20),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn small_values() {
        let o = Oracle::new(&cycle(5).unwrap(), 16).unwrap();
        assert_eq!(o.alpha(), 2);
        assert_eq!(o.omega().len(), 5);
        assert_eq!(o.matching_number(), 2);
        assert!(!o.is_konig_egervary());
        assert_eq!(o.critical_difference(), 0);
        assert_eq!(o.critical_independent_sets(), vec![VertexSet::empty(5)]);
        assert!(o.is_2bicritical());
        assert_eq!(o.odd_cycle_count(), 1);

        let k13 = Oracle::new(&star(3).unwrap(), 16).unwrap();
        assert_eq!(k13.critical_difference(), 2);
        assert_eq!(k13.ker(), set(4, &[1, 2, 3]));

        let k4 = Oracle::new(&complete(4).unwrap(), 16).unwrap();
        assert_eq!(k4.odd_cycle_count(), 4);
        assert_eq!(Oracle::new(&complete(5).unwrap(), 16).unwrap().odd_cycle_count(), 22);
    }

    #[test]
    fn empty_graph() {
        let o = Oracle::new(&Graph::empty(0), 16).unwrap();
        assert_eq!(o.alpha(), 0);
        assert_eq!(o.critical_difference(), 0);
        assert_eq!(o.omega(), vec![VertexSet::empty(0)]);
        assert!(o.is_2bicritical());
    }
}
