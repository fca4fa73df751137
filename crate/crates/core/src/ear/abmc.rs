//! Almost-bipartite matching covered graphs: recognition, random
//! generation, the property report, and rearrangement into an odd ear
//! decomposition from an odd cycle.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::critical::{is_2bicritical, ker};
use crate::decomposition::{larson_decompose, Check};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::independence::{alpha, core_with_alpha, corona_with_alpha};
use crate::matching::{is_bipartite_matching_covered, is_factor_critical};

use super::peel::{alive, remove_path, walk, LabelMap};
use super::{build, Base, EarDecomposition, Kind, Recognition, Recognized, Step};

fn live_part(g: &Graph) -> Graph {
    g.induced_subgraph(&alive(g)).graph
}

/// Reverse peeling of odd ears from a bipartite matching covered graph down
/// to the edge `uw`. Every intermediate graph of such a decomposition is
/// itself bipartite matching covered, which is the pruning rule.
struct BmcPeel {
    u: usize,
    w: usize,
    dead: HashSet<Graph>,
}

impl BmcPeel {
    fn run(&mut self, g: &Graph) -> Option<Vec<Vec<usize>>> {
        if g.edge_count() == 1 {
            return Some(Vec::new());
        }
        if self.dead.contains(g) {
            return None;
        }
        let (u, w) = (self.u, self.w);
        let pinned = |v: usize| v == u || v == w;
        let starts: Vec<usize> = alive(g).iter().filter(|&s| g.degree(s) >= 3 || pinned(s)).collect();
        for s in starts {
            for x in g.neighbors(s) {
                let p = walk(g, s, x, |v| g.degree(v) != 2 || pinned(v));
                let t = *p.last().unwrap();
                if t == s || s > t || p.len() % 2 == 1 {
                    continue;
                }
                if p.len() == 2 && pinned(s) && pinned(t) {
                    continue;
                }
                let next = remove_path(g, &p);
                if !next.has_edge(self.u, self.w) || !is_bipartite_matching_covered(&live_part(&next)) {
                    continue;
                }
                if let Some(mut ears) = self.run(&next) {
                    ears.push(p);
                    return Some(ears);
                }
            }
        }
        self.dead.insert(g.clone());
        None
    }
}

/// An ABMC decomposition of `g`, if one exists. The closing even ear is a
/// degree-2 thread between the ends of an edge `uw`; what remains must be
/// bipartite matching covered and peel back to `uw` by odd ears.
pub fn is_abmc(g: &Graph, limit: usize) -> Recognition {
    if g.order() > limit {
        return Recognition::Undecided;
    }
    if g.order() < 3 || !g.is_connected() {
        return Recognition::Absent;
    }
    for (u, w) in g.edges() {
        for x in g.neighbors(u) {
            if x == w || g.degree(x) != 2 {
                continue;
            }
            let even = walk(g, u, x, |v| v == w || g.degree(v) != 2);
            if *even.last().unwrap() != w || even.len() % 2 == 0 {
                continue;
            }
            let rest = remove_path(g, &even);
            if rest.degree(x) != 0 || !is_bipartite_matching_covered(&live_part(&rest)) {
                continue;
            }
            let mut peel = BmcPeel { u, w, dead: HashSet::new() };
            if let Some(ears) = peel.run(&rest) {
                let mut map = LabelMap::new(g.order());
                map.extend(&[u, w]);
                let mut steps = Vec::new();
                for p in ears {
                    steps.push(Step::Ear {
                        u: map.build_label(p[0]),
                        v: map.build_label(*p.last().unwrap()),
                        len: p.len() - 1,
                    });
                    map.extend(&p[1..p.len() - 1]);
                }
                steps.push(Step::EvenEar { u: 0, v: 1, len: even.len() - 1 });
                map.extend(&even[1..even.len() - 1]);
                let r = Recognized {
                    decomposition: EarDecomposition { kind: Kind::Abmc, base: Base::K2, steps },
                    vertex_map: map.to_host,
                };
                debug_assert_eq!(r.rebuild().as_ref(), Ok(g));
                return Recognition::Found(r);
            }
        }
    }
    Recognition::Absent
}

/// Parameters of a random ABMC graph: `odd_ears` odd ears on K2 with lengths
/// drawn from the odd values in `odd_len_min..=odd_len_max`, closed by an
/// even ear with length drawn from the even values in
/// `even_len_min..=even_len_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbmcRecipe {
    pub odd_ears: usize,
    pub odd_len_min: usize,
    pub odd_len_max: usize,
    pub even_len_min: usize,
    pub even_len_max: usize,
    pub seed: u64,
}

impl AbmcRecipe {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidParams(m.into()));
        if self.odd_len_min % 2 == 0 || self.odd_len_max % 2 == 0 || self.odd_len_min > self.odd_len_max {
            return bad("odd ear lengths must be odd with min ≤ max");
        }
        if self.even_len_min < 2
            || self.even_len_min % 2 == 1
            || self.even_len_max % 2 == 1
            || self.even_len_min > self.even_len_max
        {
            return bad("even ear lengths must be even, at least 2, with min ≤ max");
        }
        Ok(())
    }
}

/// The decomposition behind [`random_abmc`]. Each odd ear joins a random
/// vertex of the colour class of 0 to a random vertex of the class of 1, so
/// the graph stays bipartite; a length-1 ear that would repeat an edge is
/// lengthened to 3.
pub fn random_abmc_decomposition(recipe: &AbmcRecipe) -> Result<EarDecomposition> {
    recipe.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(recipe.seed);
    let mut b = GraphBuilder::new(2);
    b.add_edge(0, 1)?;
    let mut class: [Vec<usize>; 2] = [vec![0], vec![1]];
    let mut steps = Vec::new();
    for _ in 0..recipe.odd_ears {
        let mut len = recipe.odd_len_min + 2 * rng.gen_range(0..=(recipe.odd_len_max - recipe.odd_len_min) / 2);
        let a = class[0][rng.gen_range(0..class[0].len())];
        let c = class[1][rng.gen_range(0..class[1].len())];
        if len == 1 && b.has_edge(a, c) {
            len = 3;
        }
        let first = b.order();
        crate::generators::append_path(&mut b, a, c, len)?;
        for (i, v) in (first..b.order()).enumerate() {
            class[(i + 1) % 2].push(v);
        }
        steps.push(Step::Ear { u: a, v: c, len });
    }
    let len = recipe.even_len_min + 2 * rng.gen_range(0..=(recipe.even_len_max - recipe.even_len_min) / 2);
    steps.push(Step::EvenEar { u: 0, v: 1, len });
    Ok(EarDecomposition { kind: Kind::Abmc, base: Base::K2, steps })
}

pub fn random_abmc(recipe: &AbmcRecipe) -> Result<Graph> {
    build(&random_abmc_decomposition(recipe)?)
}

#[derive(Clone, Debug, Serialize)]
pub struct AbmcLemmaReport {
    pub checks: Vec<Check>,
}

impl AbmcLemmaReport {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// Evaluates the eight properties every ABMC graph has: n = 2α + 1,
/// core = ∅, ker = ∅, corona = V, non-bipartite, factor-critical,
/// 2-bicritical, and Lc = V.
pub fn check_abmc_lemma(g: &Graph) -> Result<AbmcLemmaReport> {
    let n = g.order();
    let a = alpha(g);
    let core = core_with_alpha(g, a);
    let corona = corona_with_alpha(g, a);
    let ker = ker(g);
    let dec = larson_decompose(g)?;
    let missing = corona.complement();
    let check = |name, holds, detail: String| Check { name, holds, detail };
    let checks = vec![
        check("n = 2α + 1", n == 2 * a + 1, format!("n = {n}, α = {a}")),
        check("core = ∅", core.is_empty(), format!("core {core}")),
        check("ker = ∅", ker.is_empty(), format!("ker {ker}")),
        check("corona = V", missing.is_empty(), format!("outside corona {missing}")),
        check("not bipartite", !g.is_bipartite(), String::new()),
        check("factor-critical", is_factor_critical(g), String::new()),
        check("2-bicritical", is_2bicritical(g), format!("max critical set {}", dec.j)),
        check("Lc = V", dec.l.is_empty(), format!("L {}", dec.l)),
    ];
    Ok(AbmcLemmaReport { checks })
}

/// Reorders an ABMC decomposition into an odd ear decomposition whose base
/// is the cycle formed by K2 and the even ear, followed by the odd ears in
/// their original order. The map sends new labels to the labels of
/// `build(dec)`.
pub fn rearrange_to_odd_ear(dec: &EarDecomposition) -> Result<Recognized> {
    let Some((&Step::EvenEar { u, v, len }, odd)) = dec.steps.split_last() else {
        return Err(Error::Precondition("not an ABMC decomposition".into()));
    };
    if dec.kind != Kind::Abmc || dec.base != Base::K2 {
        return Err(Error::Precondition("not an ABMC decomposition".into()));
    }
    let original = build(dec)?;
    let total = original.order();
    // even-ear internals are the last len - 1 labels, in order from u
    let x: Vec<usize> = (total - (len - 1)..total).collect();
    let mut cycle = vec![u, v];
    cycle.extend(x.iter().rev());
    let mut map = LabelMap::new(total);
    map.extend(&cycle);
    let mut next_old = 2;
    let mut steps = Vec::new();
    for step in odd {
        let Step::Ear { u: a, v: b, len: l } = *step else {
            return Err(Error::Precondition("unexpected step in an ABMC decomposition".into()));
        };
        steps.push(Step::Ear { u: map.build_label(a), v: map.build_label(b), len: l });
        let internals: Vec<usize> = (next_old..next_old + l - 1).collect();
        map.extend(&internals);
        next_old += l - 1;
    }
    let r = Recognized {
        decomposition: EarDecomposition { kind: Kind::OddEar, base: Base::OddCycle(len + 1), steps },
        vertex_map: map.to_host,
    };
    if r.rebuild()? != original {
        return Err(Error::Internal("rearranged decomposition builds a different graph".into()));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle};

    fn recipe(odd_ears: usize, odd: (usize, usize), even: (usize, usize), seed: u64) -> AbmcRecipe {
        AbmcRecipe {
            odd_ears,
            odd_len_min: odd.0,
            odd_len_max: odd.1,
            even_len_min: even.0,
            even_len_max: even.1,
            seed,
        }
    }

    #[test]
    fn recognition_examples() {
        let k3 = is_abmc(&complete(3).unwrap(), 20);
        let r = k3.found().unwrap();
        assert_eq!(r.decomposition.steps, vec![Step::EvenEar { u: 0, v: 1, len: 2 }]);

        let c5 = is_abmc(&cycle(5).unwrap(), 20);
        let r = c5.found().unwrap();
        assert_eq!(r.decomposition.steps, vec![Step::EvenEar { u: 0, v: 1, len: 4 }]);
        assert_eq!(r.rebuild().unwrap(), cycle(5).unwrap());

        assert_eq!(is_abmc(&cycle(4).unwrap(), 20), Recognition::Absent);
        assert_eq!(is_abmc(&complete(4).unwrap(), 20), Recognition::Absent);
    }

    #[test]
    fn recipe_examples() {
        assert_eq!(random_abmc(&recipe(0, (1, 1), (2, 2), 7)).unwrap(), complete(3).unwrap());
        let g = random_abmc(&recipe(1, (3, 3), (2, 2), 7)).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (0, 4), (1, 3), (1, 4), (2, 3)]);
        assert!(check_abmc_lemma(&g).unwrap().holds());
        assert!(random_abmc(&recipe(1, (2, 3), (2, 2), 0)).is_err());
        assert!(random_abmc(&recipe(1, (1, 3), (3, 4), 0)).is_err());
    }

    #[test]
    fn lemma_examples() {
        for g in [complete(3).unwrap(), cycle(5).unwrap()] {
            let r = check_abmc_lemma(&g).unwrap();
            assert_eq!(r.checks.len(), 8);
            assert!(r.holds(), "{:?}", r.checks);
        }
        assert!(!check_abmc_lemma(&cycle(4).unwrap()).unwrap().holds());
    }

    #[test]
    fn generated_graphs_are_recognised_and_rearranged() {
        for seed in 0..20 {
            let d = random_abmc_decomposition(&recipe(4, (1, 5), (2, 4), seed)).unwrap();
            let g = build(&d).unwrap();
            assert!(check_abmc_lemma(&g).unwrap().holds(), "{d}");
            let found = is_abmc(&g, 30);
            assert_eq!(found.found().unwrap().rebuild().unwrap(), g);
            let odd = rearrange_to_odd_ear(&d).unwrap();
            assert!(is_factor_critical(&build(&odd.decomposition).unwrap()));
        }
    }
}
