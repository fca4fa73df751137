//! Immutable simple graphs on dense labels `0..n` and the structural
//! queries every other module relies on.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

/// Result of [`Graph::induced_subgraph`]: the subgraph relabelled to
/// `0..|X|` in increasing order of the original labels.
#[derive(Clone, Debug)]
pub struct Induced {
    pub graph: Graph,
    /// `to_old[new] = old`
    pub to_old: Vec<usize>,
    /// `to_new[old] = Some(new)` for kept vertices
    pub to_new: Vec<Option<usize>>,
}

impl Induced {
    /// Maps a set of subgraph labels back to the host graph.
    pub fn lift(&self, s: &VertexSet, host_order: usize) -> VertexSet {
        VertexSet::from_iter(host_order, s.iter().map(|v| self.to_old[v]))
    }
}

/// Mutable edge accumulator; duplicates collapse.
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    adj: Vec<VertexSet>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            adj: vec![VertexSet::empty(n); n],
        }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Appends a fresh isolated vertex and returns its label.
    pub fn add_vertex(&mut self) -> usize {
        let n = self.adj.len() + 1;
        for s in &mut self.adj {
            *s = s.widen(n);
        }
        self.adj.push(VertexSet::empty(n));
        n - 1
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].contains(v)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.adj.len();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, order: n });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    /// Deletes every edge at `v`, leaving it isolated.
    pub(crate) fn isolate(&mut self, v: usize) {
        for w in self.adj[v].clone().iter() {
            self.adj[w].remove(v);
        }
        self.adj[v] = VertexSet::empty(self.adj.len());
    }

    pub fn build(self) -> Graph {
        Graph {
            n: self.adj.len(),
            adj: self.adj,
        }
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        GraphBuilder::new(n).build()
    }

    /// Loops and out-of-range endpoints are errors; repeated edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut b = GraphBuilder::new(n);
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::empty(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// N(X), which may intersect X.
    pub fn neighborhood(&self, x: &VertexSet) -> VertexSet {
        assert_eq!(x.universe(), self.n);
        let mut out = VertexSet::empty(self.n);
        for v in x {
            out.union_with(&self.adj[v]);
        }
        out
    }

    /// N[X] = X ∪ N(X).
    pub fn closed_neighborhood(&self, x: &VertexSet) -> VertexSet {
        let mut out = self.neighborhood(x);
        out.union_with(x);
        out
    }

    pub fn is_independent(&self, x: &VertexSet) -> bool {
        self.find_edge_inside(x).is_none()
    }

    pub fn find_edge_inside(&self, x: &VertexSet) -> Option<(usize, usize)> {
        assert_eq!(x.universe(), self.n);
        for u in x {
            if let Some(v) = self.adj[u].intersection(x).first() {
                return Some((u.min(v), u.max(v)));
            }
        }
        None
    }

    pub fn induced_subgraph(&self, x: &VertexSet) -> Induced {
        assert_eq!(x.universe(), self.n);
        let to_old = x.to_vec();
        let mut to_new = vec![None; self.n];
        for (i, &v) in to_old.iter().enumerate() {
            to_new[v] = Some(i);
        }
        let m = to_old.len();
        let adj = to_old
            .iter()
            .map(|&v| VertexSet::from_iter(m, self.adj[v].iter().filter_map(|w| to_new[w])))
            .collect();
        Induced {
            graph: Graph { n: m, adj },
            to_old,
            to_new,
        }
    }

    /// G − X, relabelled.
    pub fn remove_vertices(&self, x: &VertexSet) -> Induced {
        self.induced_subgraph(&x.complement())
    }

    /// Vertex sets of connected components, ordered by least member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n);
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = VertexSet::singleton(self.n, s);
            let mut frontier = comp.clone();
            while !frontier.is_empty() {
                let next = self.neighborhood(&frontier).difference(&comp);
                comp.union_with(&next);
                frontier = next;
            }
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// A 2-colouring (A, B) if the graph is bipartite. In every component the
    /// least vertex is placed in A.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for w in &self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let a = VertexSet::from_iter(self.n, (0..self.n).filter(|&v| color[v] == Some(false)));
        let b = a.complement();
        Some((a, b))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// The bipartite double cover: vertex `v` keeps label `v`, its copy `v′`
    /// gets label `n + v`, and every edge `uv` becomes `u–v′` and `v–u′`.
    pub fn bipartite_double_cover(&self) -> Graph {
        let n = self.n;
        let mut b = GraphBuilder::new(2 * n);
        for (u, v) in self.edges() {
            b.add_edge(u, n + v).unwrap();
            b.add_edge(v, n + u).unwrap();
        }
        b.build()
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut b = GraphBuilder::new(self.n);
        for (u, v) in self.edges() {
            b.add_edge(perm[u], perm[v]).unwrap();
        }
        b.build()
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut b = GraphBuilder::new(n);
        for (u, v) in self.edges() {
            b.add_edge(u, v).unwrap();
        }
        for (u, v) in other.edges() {
            b.add_edge(self.n + u, self.n + v).unwrap();
        }
        b.build()
    }

    pub fn to_builder(&self) -> GraphBuilder {
        GraphBuilder {
            adj: self.adj.clone(),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
