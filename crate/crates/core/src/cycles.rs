//! Simple-cycle enumeration.
//!
//! A cycle is reported once, as the vertex sequence starting at its least
//! vertex and continuing towards the smaller of that vertex's two cycle
//! neighbours.

use std::ops::ControlFlow;

use serde::{Serialize, Serializer};

use crate::graph::Graph;

pub const DEFAULT_CYCLE_CAP: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycleCount {
    Exact(u64),
    /// More than the cap.
    Overflow,
}

impl CycleCount {
    pub fn exact(self) -> Option<u64> {
        match self {
            CycleCount::Exact(k) => Some(k),
            CycleCount::Overflow => None,
        }
    }
}

impl Serialize for CycleCount {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            CycleCount::Exact(k) => s.serialize_u64(*k),
            CycleCount::Overflow => s.serialize_str("OVERFLOW"),
        }
    }
}

/// Calls `visit` on every simple cycle until it breaks.
pub fn for_each_cycle<F>(g: &Graph, mut visit: F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let n = g.order();
    let mut on_path = vec![false; n];
    let mut path = Vec::with_capacity(n);
    for start in 0..n {
        path.push(start);
        on_path[start] = true;
        let flow = extend(g, start, &mut path, &mut on_path, &mut visit);
        on_path[start] = false;
        path.pop();
        if flow.is_break() {
            return;
        }
    }
}

fn extend<F>(
    g: &Graph,
    start: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let v = *path.last().unwrap();
    for w in g.neighbors(v) {
        if w < start {
            continue;
        }
        if w == start {
            if path.len() >= 3 && path[1] < v {
                visit(path)?;
            }
        } else if !on_path[w] {
            path.push(w);
            on_path[w] = true;
            let flow = extend(g, start, path, on_path, visit);
            on_path[w] = false;
            path.pop();
            flow?;
        }
    }
    ControlFlow::Continue(())
}

/// Number of odd simple cycles, or `Overflow` once it exceeds `cap`.
pub fn count_odd_cycles(g: &Graph, cap: u64) -> CycleCount {
    let mut count = 0u64;
    let mut overflow = false;
    for_each_cycle(g, |c| {
        if c.len() % 2 == 1 {
            count += 1;
            if count > cap {
                overflow = true;
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    });
    if overflow {
        CycleCount::Overflow
    } else {
        CycleCount::Exact(count)
    }
}

/// All odd cycles if there are at most `cap` of them.
pub fn odd_cycles(g: &Graph, cap: usize) -> Option<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut overflow = false;
    for_each_cycle(g, |c| {
        if c.len() % 2 == 1 {
            if out.len() == cap {
                overflow = true;
                return ControlFlow::Break(());
            }
            out.push(c.to_vec());
        }
        ControlFlow::Continue(())
    });
    (!overflow).then_some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, odd_homeomorph_k4};

    fn all_cycles(g: &Graph) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for_each_cycle(g, |c| {
            out.push(c.to_vec());
            ControlFlow::Continue(())
        });
        out
    }

    #[test]
    fn examples() {
        assert_eq!(count_odd_cycles(&cycle(5).unwrap(), 100), CycleCount::Exact(1));
        assert_eq!(count_odd_cycles(&cycle(4).unwrap(), 100), CycleCount::Exact(0));
        assert_eq!(count_odd_cycles(&complete(4).unwrap(), 100), CycleCount::Exact(4));
    }

    #[test]
    fn k4_has_seven_cycles() {
        // four triangles and three 4-cycles
        let cs = all_cycles(&complete(4).unwrap());
        assert_eq!(cs.len(), 7);
        assert_eq!(cs.iter().filter(|c| c.len() == 4).count(), 3);
    }

    #[test]
    fn k5_cycle_count_matches_formula() {
        // sum over k of C(5,k)(k-1)!/2 = 10 + 15 + 12
        assert_eq!(all_cycles(&complete(5).unwrap()).len(), 37);
        assert_eq!(count_odd_cycles(&complete(5).unwrap(), 1000), CycleCount::Exact(22));
    }

    #[test]
    fn cap_overflows() {
        let k4 = complete(4).unwrap();
        assert_eq!(count_odd_cycles(&k4, 3), CycleCount::Overflow);
        assert_eq!(count_odd_cycles(&k4, 4), CycleCount::Exact(4));
        assert!(odd_cycles(&k4, 3).is_none());
        assert_eq!(odd_cycles(&k4, 4).unwrap().len(), 4);
    }

    #[test]
    fn canonical_rotation() {
        assert_eq!(all_cycles(&cycle(5).unwrap()), vec![vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn odd_homeomorph_cycle_parity() {
        // every cycle of K4 uses three or four edges; subdividing all edges by
        // odd paths keeps triangles odd and 4-cycles even
        let g = odd_homeomorph_k4([3, 3, 1, 1, 1, 3]).unwrap();
        assert_eq!(count_odd_cycles(&g, 100), CycleCount::Exact(4));
    }
}
