//! Ear-pendant recognition by reverse peeling.
//!
//! Ears may be closed (both ends on the same old vertex). In any ear-pendant
//! decomposition every intermediate graph has minimum degree at least two,
//! so the last ear added is a maximal thread of degree-2 vertices between
//! two vertices of degree at least three (or from one such vertex back to
//! itself), and the last pendant is an odd cycle of degree-2 vertices around
//! one vertex of degree three, followed by a degree-2 thread. The search
//! tries every such last step, keeps only remainders that are connected and
//! 2-bicritical (every graph with a decomposition is), and memoises dead
//! ends.

use std::collections::HashSet;

use crate::critical::is_2bicritical;
use crate::generators::K4_EDGES;
use crate::graph::Graph;

use super::peel::{alive, remove_path, remove_vertices, walk, LabelMap};
use super::{Base, EarDecomposition, Kind, Recognition, Recognized, Step};

pub const DEFAULT_RECOGNIZER_LIMIT: usize = 20;

enum Move {
    Ear(Vec<usize>),
    /// `cycle[0]` carries the path; `path` runs from it to the end vertex.
    Pendant { cycle: Vec<usize>, path: Vec<usize> },
}

enum FoundBase {
    Cycle(Vec<usize>),
    K4 { branch: [usize; 4], threads: Vec<Vec<usize>> },
}

fn not_two(g: &Graph) -> impl Fn(usize) -> bool + '_ {
    move |v| g.degree(v) != 2
}

fn base_of(g: &Graph) -> Option<FoundBase> {
    let live = alive(g);
    let sub = g.induced_subgraph(&live).graph;
    if !sub.is_connected() {
        return None;
    }
    let deg3: Vec<usize> = live.iter().filter(|&v| g.degree(v) == 3).collect();
    if live.iter().any(|v| g.degree(v) != 2 && g.degree(v) != 3) {
        return None;
    }
    match deg3.len() {
        0 if live.len() % 2 == 1 && live.len() >= 3 => {
            let s = live.first().unwrap();
            let mut seq = walk(g, s, g.neighbors(s).first().unwrap(), |_| false);
            seq.pop();
            Some(FoundBase::Cycle(seq))
        }
        4 => {
            let branch: [usize; 4] = deg3.try_into().unwrap();
            let pos = |v: usize| branch.iter().position(|&b| b == v);
            let mut threads: Vec<Option<Vec<usize>>> = vec![None; 6];
            for (i, &b) in branch.iter().enumerate() {
                for x in g.neighbors(b) {
                    let t = walk(g, b, x, not_two(g));
                    let j = pos(*t.last().unwrap())?;
                    if j == i {
                        return None;
                    }
                    if i < j {
                        let slot = K4_EDGES.iter().position(|&e| e == (i, j)).unwrap();
                        if threads[slot].is_some() || t.len() % 2 == 1 {
                            return None;
                        }
                        threads[slot] = Some(t);
                    }
                }
            }
            let threads: Option<Vec<Vec<usize>>> = threads.into_iter().collect();
            Some(FoundBase::K4 { branch, threads: threads? })
        }
        _ => None,
    }
}

fn moves(g: &Graph) -> Vec<Move> {
    let mut out = Vec::new();
    let live = alive(g);
    for u in live.iter().filter(|&u| g.degree(u) >= 3) {
        for x in g.neighbors(u) {
            let p = walk(g, u, x, not_two(g));
            let end = *p.last().unwrap();
            let keep = if end == u { p[1] < p[p.len() - 2] } else { u < end };
            if keep && p.len() % 2 == 0 {
                out.push(Move::Ear(p));
            }
        }
    }
    for c in live.iter().filter(|&c| g.degree(c) == 3) {
        let nb = g.neighbors(c).to_vec();
        for (k, &x) in nb.iter().enumerate() {
            let others: Vec<usize> = nb.iter().copied().filter(|&w| w != x).collect();
            let round = walk(g, c, others[0], not_two(g));
            if *round.last().unwrap() != c || round[round.len() - 2] != others[1] {
                continue;
            }
            let cycle = round[..round.len() - 1].to_vec();
            if cycle.len() % 2 == 0 {
                continue;
            }
            let path = walk(g, c, nb[k], not_two(g));
            if *path.last().unwrap() != c {
                out.push(Move::Pendant { cycle, path });
            }
        }
    }
    out
}

fn apply(g: &Graph, mv: &Move) -> Graph {
    match mv {
        Move::Ear(p) => remove_path(g, p),
        Move::Pendant { cycle, path } => {
            let mut gone = cycle.clone();
            gone.extend_from_slice(&path[1..path.len() - 1]);
            remove_vertices(g, &gone)
        }
    }
}

fn viable(g: &Graph) -> bool {
    let sub = g.induced_subgraph(&alive(g)).graph;
    sub.order() >= 3
        && sub.is_connected()
        && (0..sub.order()).all(|v| sub.degree(v) >= 2)
        && is_2bicritical(&sub)
}

struct Search {
    dead: HashSet<Graph>,
}

impl Search {
    /// Base and steps in construction order.
    fn run(&mut self, g: &Graph) -> Option<(FoundBase, Vec<Move>)> {
        if let Some(b) = base_of(g) {
            return Some((b, Vec::new()));
        }
        if self.dead.contains(g) {
            return None;
        }
        for mv in moves(g) {
            let next = apply(g, &mv);
            if !viable(&next) {
                continue;
            }
            if let Some((b, mut steps)) = self.run(&next) {
                steps.push(mv);
                return Some((b, steps));
            }
        }
        self.dead.insert(g.clone());
        None
    }
}

fn assemble(g: &Graph, base: FoundBase, moves: Vec<Move>) -> Recognized {
    let mut map = LabelMap::new(g.order());
    let base = match base {
        FoundBase::Cycle(seq) => {
            map.extend(&seq);
            Base::OddCycle(seq.len())
        }
        FoundBase::K4 { branch, threads } => {
            map.extend(&branch);
            let mut lengths = [0; 6];
            for (slot, t) in threads.iter().enumerate() {
                map.extend(&t[1..t.len() - 1]);
                lengths[slot] = t.len() - 1;
            }
            Base::OddHomeomorphK4(lengths)
        }
    };
    let steps = moves
        .into_iter()
        .map(|mv| match mv {
            Move::Ear(p) => {
                let step = Step::Ear {
                    u: map.build_label(p[0]),
                    v: map.build_label(*p.last().unwrap()),
                    len: p.len() - 1,
                };
                map.extend(&p[1..p.len() - 1]);
                step
            }
            Move::Pendant { cycle, path } => {
                let step = Step::Pendant {
                    cycle_len: cycle.len(),
                    path_len: path.len() - 1,
                    end: map.build_label(*path.last().unwrap()),
                };
                map.extend(&cycle);
                map.extend(&path[1..path.len() - 1]);
                step
            }
        })
        .collect();
    Recognized {
        decomposition: EarDecomposition {
            kind: Kind::EarPendant,
            base,
            steps,
        },
        vertex_map: map.to_host,
    }
}

/// An ear-pendant decomposition of a connected graph, if one exists.
/// Graphs with more than `limit` vertices are left undecided.
pub fn find_ear_pendant_decomposition(g: &Graph, limit: usize) -> Recognition {
    if g.order() > limit {
        return Recognition::Undecided;
    }
    if g.order() < 3 || !g.is_connected() || (0..g.order()).any(|v| g.degree(v) < 2) {
        return Recognition::Absent;
    }
    let mut search = Search { dead: HashSet::new() };
    match search.run(g) {
        Some((base, moves)) => {
            let r = assemble(g, base, moves);
            debug_assert_eq!(r.rebuild().as_ref(), Ok(g));
            Recognition::Found(r)
        }
        None => Recognition::Absent,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ear::build;
    use crate::generators::{complete, cycle, odd_homeomorph_k4};

    fn found(g: &Graph) -> Recognized {
        match find_ear_pendant_decomposition(g, 20) {
            Recognition::Found(r) => {
                assert_eq!(&r.rebuild().unwrap(), g);
                r
            }
            other => panic!("{g:?}: {other:?}"),
        }
    }

    #[test]
    fn examples() {
        let r = found(&cycle(5).unwrap());
        assert_eq!(r.decomposition.base, Base::OddCycle(5));
        assert!(r.decomposition.steps.is_empty());

        assert_eq!(find_ear_pendant_decomposition(&complete(2).unwrap(), 20), Recognition::Absent);

        let r = found(&complete(4).unwrap());
        assert_eq!(r.decomposition.base, Base::OddHomeomorphK4([1; 6]));
    }

    #[test]
    fn larger_graphs() {
        found(&complete(5).unwrap());
        found(&complete(7).unwrap());
        found(&odd_homeomorph_k4([3, 1, 5, 1, 1, 3]).unwrap());
        // two triangles joined by a path
        let d = EarDecomposition {
            kind: Kind::EarPendant,
            base: Base::OddCycle(3),
            steps: vec![Step::Pendant { cycle_len: 5, path_len: 2, end: 1 }],
        };
        let r = found(&build(&d).unwrap());
        assert_eq!(r.decomposition.steps.len(), 1);
    }

    #[test]
    fn bowtie_needs_a_closed_ear() {
        let bowtie = Graph::from_edges(5, &[(0, 1), (0, 4), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        let r = found(&bowtie);
        assert_eq!(r.decomposition.steps, vec![Step::Ear { u: 2, v: 2, len: 3 }]);
    }

    #[test]
    fn rejects() {
        assert_eq!(find_ear_pendant_decomposition(&cycle(6).unwrap(), 20), Recognition::Absent);
        let two_triangles = complete(3).unwrap().disjoint_union(&complete(3).unwrap());
        assert_eq!(find_ear_pendant_decomposition(&two_triangles, 20), Recognition::Absent);
        assert_eq!(find_ear_pendant_decomposition(&complete(21).unwrap(), 20), Recognition::Undecided);
    }
}
