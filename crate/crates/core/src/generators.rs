//! Deterministic graph families.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

/// The K4 edges in the order used by [`odd_homeomorph_k4`].
pub const K4_EDGES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// K_{1,k}; the centre is vertex 0.
    Star(usize),
    CompleteBipartite(usize, usize),
    OddHomeomorphK4([usize; 6]),
    Gnp { n: usize, p: f64, seed: u64 },
}

pub fn generate(family: &Family) -> Result<Graph> {
    match *family {
        Family::Path(n) => path(n),
        Family::Cycle(n) => cycle(n),
        Family::Complete(n) => complete(n),
        Family::Star(k) => star(k),
        Family::CompleteBipartite(a, b) => complete_bipartite(a, b),
        Family::OddHomeomorphK4(lengths) => odd_homeomorph_k4(lengths),
        Family::Gnp { n, p, seed } => gnp(n, p, seed),
    }
}

pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParams(format!("cycle needs n ≥ 3, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    Graph::from_edges(n, &edges)
}

pub fn star(k: usize) -> Result<Graph> {
    complete_bipartite(1, k)
}

/// Parts are `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..a)
        .flat_map(|i| (a..a + b).map(move |j| (i, j)))
        .collect();
    Graph::from_edges(a + b, &edges)
}

/// Appends a path of `len` edges from `from` to `to`, creating `len - 1`
/// fresh internal vertices in order from `from`.
pub(crate) fn append_path(b: &mut GraphBuilder, from: usize, to: usize, len: usize) -> Result<()> {
    debug_assert!(len >= 1);
    let mut prev = from;
    for _ in 1..len {
        let x = b.add_vertex();
        b.add_edge(prev, x)?;
        prev = x;
    }
    b.add_edge(prev, to)
}

/// K4 with edge `K4_EDGES[i]` replaced by a path of `lengths[i]` edges.
/// Corners keep labels 0..3; internal vertices follow in edge order.
pub fn odd_homeomorph_k4(lengths: [usize; 6]) -> Result<Graph> {
    if let Some(&l) = lengths.iter().find(|&&l| l == 0 || l % 2 == 0) {
        return Err(Error::InvalidParams(format!(
            "odd homeomorph of K4 needs odd lengths ≥ 1, got {l}"
        )));
    }
    let mut b = GraphBuilder::new(4);
    for (&(u, v), &l) in K4_EDGES.iter().zip(&lengths) {
        append_path(&mut b, u, v, l)?;
    }
    Ok(b.build())
}

/// Erdős–Rényi G(n, p) driven by a ChaCha8 stream.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParams(format!("edge probability {p} not in [0,1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = GraphBuilder::new(n);
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                b.add_edge(i, j)?;
            }
        }
    }
    Ok(b.build())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_families() {
        assert_eq!(cycle(5).unwrap().edge_count(), 5);
        assert!(cycle(2).is_err());
        assert_eq!(path(0).unwrap().order(), 0);
        assert_eq!(path(1).unwrap().edge_count(), 0);
        let s = star(3).unwrap();
        assert_eq!(s.degree(0), 3);
        assert_eq!(complete_bipartite(2, 3).unwrap().edge_count(), 6);
    }

    #[test]
    fn homeomorph_identity_is_k4() {
        assert_eq!(odd_homeomorph_k4([1; 6]).unwrap(), complete(4).unwrap());
    }

    #[test]
    fn homeomorph_subdivides_first_edge() {
        let g = odd_homeomorph_k4([3, 1, 1, 1, 1, 1]).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.edge_count(), 8);
        assert!(!g.has_edge(0, 1));
        assert!(g.has_edge(0, 4) && g.has_edge(4, 5) && g.has_edge(5, 1));
        assert_eq!((0..4).map(|v| g.degree(v)).collect::<Vec<_>>(), vec![3; 4]);
    }

    #[test]
    fn homeomorph_rejects_even_lengths() {
        assert!(matches!(
            odd_homeomorph_k4([2, 1, 1, 1, 1, 1]),
            Err(Error::InvalidParams(_))
        ));
        assert!(odd_homeomorph_k4([0, 1, 1, 1, 1, 1]).is_err());
    }

    #[test]
    fn gnp_is_seed_deterministic() {
        assert_eq!(gnp(12, 0.4, 9).unwrap(), gnp(12, 0.4, 9).unwrap());
        assert_ne!(gnp(12, 0.4, 9).unwrap(), gnp(12, 0.4, 10).unwrap());
        assert_eq!(gnp(6, 1.0, 0).unwrap(), complete(6).unwrap());
        assert!(gnp(3, 1.5, 0).is_err());
    }
}
