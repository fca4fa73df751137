//! Hopcroft–Karp on an explicit left/right adjacency.

use std::collections::VecDeque;

const INF: usize = usize::MAX;

pub(crate) struct HopcroftKarp<'a> {
    adj: &'a [Vec<usize>],
    pub(crate) mate_left: Vec<Option<usize>>,
    pub(crate) mate_right: Vec<Option<usize>>,
    dist: Vec<usize>,
}

impl<'a> HopcroftKarp<'a> {
    /// `adj[l]` lists right-side indices adjacent to left vertex `l`, in the
    /// order they should be tried.
    pub(crate) fn run(adj: &'a [Vec<usize>], right_count: usize) -> Self {
        let mut hk = HopcroftKarp {
            adj,
            mate_left: vec![None; adj.len()],
            mate_right: vec![None; right_count],
            dist: vec![INF; adj.len()],
        };
        while hk.layer() {
            for l in 0..adj.len() {
                if hk.mate_left[l].is_none() {
                    hk.augment(l);
                }
            }
        }
        hk
    }

    pub(crate) fn size(&self) -> usize {
        self.mate_left.iter().flatten().count()
    }

    fn layer(&mut self) -> bool {
        let mut queue = VecDeque::new();
        for (l, m) in self.mate_left.iter().enumerate() {
            if m.is_none() {
                self.dist[l] = 0;
                queue.push_back(l);
            } else {
                self.dist[l] = INF;
            }
        }
        let mut found = false;
        while let Some(l) = queue.pop_front() {
            for &r in &self.adj[l] {
                match self.mate_right[r] {
                    None => found = true,
                    Some(l2) if self.dist[l2] == INF => {
                        self.dist[l2] = self.dist[l] + 1;
                        queue.push_back(l2);
                    }
                    Some(_) => {}
                }
            }
        }
        found
    }

    fn augment(&mut self, l: usize) -> bool {
        for i in 0..self.adj[l].len() {
            let r = self.adj[l][i];
            let ok = match self.mate_right[r] {
                None => true,
                Some(l2) => self.dist[l2] == self.dist[l] + 1 && self.augment(l2),
            };
            if ok {
                self.mate_left[l] = Some(r);
                self.mate_right[r] = Some(l);
                return true;
            }
        }
        self.dist[l] = INF;
        false
    }
}

/// Maximum matching size of a bipartite graph given by adjacency lists.
pub(crate) fn matching_size(adj: &[Vec<usize>], right_count: usize) -> usize {
    HopcroftKarp::run(adj, right_count).size()
}
