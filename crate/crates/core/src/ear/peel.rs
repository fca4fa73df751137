//! Helpers shared by the reverse-peeling recognizers.

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Follows the graph from `start` through `first`, continuing across
/// degree-2 vertices until it reaches a vertex of another degree, a vertex
/// for which `stop` holds, or `start` again. Returns the whole walk.
pub(super) fn walk(g: &Graph, start: usize, first: usize, stop: impl Fn(usize) -> bool) -> Vec<usize> {
    let mut path = vec![start];
    let (mut prev, mut cur) = (start, first);
    loop {
        path.push(cur);
        if cur == start || g.degree(cur) != 2 || stop(cur) {
            return path;
        }
        let next = g.neighbors(cur).iter().find(|&w| w != prev).unwrap();
        prev = cur;
        cur = next;
    }
}

/// Vertices that still carry edges.
pub(super) fn alive(g: &Graph) -> VertexSet {
    VertexSet::from_iter(g.order(), (0..g.order()).filter(|&v| g.degree(v) > 0))
}

/// Deletes the internal vertices of `path`, or its only edge.
pub(super) fn remove_path(g: &Graph, path: &[usize]) -> Graph {
    let mut b = g.to_builder();
    if path.len() == 2 {
        b.remove_edge(path[0], path[1]);
    } else {
        for &v in &path[1..path.len() - 1] {
            b.isolate(v);
        }
    }
    b.build()
}

pub(super) fn remove_vertices(g: &Graph, vs: &[usize]) -> Graph {
    let mut b = g.to_builder();
    for &v in vs {
        b.isolate(v);
    }
    b.build()
}

/// Inverse of a partial label map, filled as vertices are placed.
pub(super) struct LabelMap {
    pub(super) to_host: Vec<usize>,
    to_build: Vec<usize>,
}

impl LabelMap {
    pub(super) fn new(host_order: usize) -> Self {
        LabelMap {
            to_host: Vec::new(),
            to_build: vec![usize::MAX; host_order],
        }
    }

    pub(super) fn push(&mut self, host: usize) {
        self.to_build[host] = self.to_host.len();
        self.to_host.push(host);
    }

    pub(super) fn extend(&mut self, hosts: &[usize]) {
        for &h in hosts {
            self.push(h);
        }
    }

    pub(super) fn build_label(&self, host: usize) -> usize {
        let b = self.to_build[host];
        debug_assert_ne!(b, usize::MAX);
        b
    }
}
