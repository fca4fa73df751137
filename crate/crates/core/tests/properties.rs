use proptest::prelude::*;

use corona_core::critical::{critical_difference, critical_independence_difference, is_2bicritical, ker};
use corona_core::decomposition::larson_decompose;
use corona_core::ear::{build, find_ear_pendant_decomposition, is_abmc, random_abmc_decomposition, AbmcRecipe, Base, EarDecomposition, Kind, Step};
use corona_core::format::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
use corona_core::independence::{alpha, core, corona, maximum_independent_set};
use corona_core::matching::{has_perfect_matching, is_factor_critical, matching_number, max_matching};
use corona_core::verify::g_defect;
use corona_core::{Graph, VertexSet};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges: Vec<(usize, usize)> = (1..n)
                .flat_map(|j| (0..j).map(move |i| (i, j)))
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn ear_pendant_decomposition() -> impl Strategy<Value = EarDecomposition> {
    let base = prop_oneof![
        (1usize..=3).prop_map(|k| Base::OddCycle(2 * k + 1)),
        proptest::array::uniform6(0usize..=1).prop_map(|ls| Base::OddHomeomorphK4(ls.map(|l| 2 * l + 1))),
    ];
    let step = prop_oneof![
        (any::<prop::sample::Index>(), any::<prop::sample::Index>(), 0usize..=2).prop_map(|(u, v, l)| (0, u, v, l)),
        (any::<prop::sample::Index>(), any::<prop::sample::Index>(), 0usize..=1).prop_map(|(u, v, l)| (1, u, v, l)),
    ];
    (base, proptest::collection::vec(step, 0..3)).prop_map(|(base, raw)| {
        let mut order = match base {
            Base::OddCycle(k) => k,
            Base::OddHomeomorphK4(ls) => 4 + ls.iter().map(|l| l - 1).sum::<usize>(),
            Base::K2 => 2,
        };
        let mut steps = Vec::new();
        for (kind, u, v, l) in raw {
            let step = if kind == 0 {
                let (u, v) = (u.index(order), v.index(order));
                // a length-1 ear must be a new edge between distinct vertices
                let len = 2 * l + 1 + if l == 0 { 2 } else { 0 };
                Step::Ear { u, v, len }
            } else {
                Step::Pendant { cycle_len: 2 * l + 3, path_len: 1 + v.index(2), end: u.index(order) }
            };
            order += step.new_vertices();
            steps.push(step);
        }
        EarDecomposition { kind: Kind::EarPendant, base, steps }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in graph(20)) {
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in graph(12)) {
        prop_assert_eq!(parse_edge_list(&to_edge_list(&g, None)).unwrap().graph, g);
    }

    #[test]
    fn matching_and_independence_basics(g in graph(12)) {
        let m = max_matching(&g);
        prop_assert!(m.is_valid_for(&g));
        prop_assert_eq!(m.size(), matching_number(&g));
        let s = maximum_independent_set(&g);
        prop_assert!(g.is_independent(&s));
        prop_assert_eq!(s.len(), alpha(&g));
        // α(G) + μ(G) ≤ n always, with equality exactly for KE graphs
        prop_assert!(alpha(&g) + m.size() <= g.order());
        prop_assert_eq!(has_perfect_matching(&g), 2 * m.size() == g.order());
    }

    #[test]
    fn core_corona_shape(g in graph(11)) {
        let (c, r) = (core(&g), corona(&g));
        prop_assert!(c.is_subset(&r));
        prop_assert!(g.is_independent(&c));
        prop_assert!(ker(&g).is_subset(&c));
        if g.order() > 0 {
            prop_assert!(c.len() <= alpha(&g) && alpha(&g) <= r.len());
        }
    }

    #[test]
    fn critical_differences_agree(g in graph(12)) {
        let d = critical_difference(&g);
        prop_assert!(d >= 0);
        prop_assert_eq!(d, critical_independence_difference(&g));
    }

    #[test]
    fn larson_split_is_a_partition(g in graph(11)) {
        let dec = larson_decompose(&g).unwrap();
        prop_assert!(dec.l.is_disjoint(&dec.lc));
        prop_assert_eq!(dec.l.union(&dec.lc).len(), g.order());
        prop_assert_eq!(alpha(&g), alpha(&dec.l_graph.graph) + alpha(&dec.lc_graph.graph));
        prop_assert!(is_2bicritical(&dec.lc_graph.graph));
        // KE exactly when the 2-bicritical part vanishes
        prop_assert_eq!(dec.lc.is_empty(), alpha(&g) + matching_number(&g) == g.order());
    }

    #[test]
    fn invariants_survive_relabelling((g, perm) in graph_and_perm(10)) {
        let h = g.relabel(&perm);
        prop_assert_eq!(alpha(&g), alpha(&h));
        prop_assert_eq!(matching_number(&g), matching_number(&h));
        prop_assert_eq!(critical_difference(&g), critical_difference(&h));
        prop_assert_eq!(g_defect(&g), g_defect(&h));
        prop_assert_eq!(core(&h), VertexSet::from_iter(g.order(), core(&g).iter().map(|v| perm[v])));
    }

    #[test]
    fn ear_pendant_graphs_are_2bicritical(d in ear_pendant_decomposition()) {
        let g = build(&d).unwrap();
        prop_assert!(is_2bicritical(&g));
        if g.order() <= 14 {
            let r = find_ear_pendant_decomposition(&g, 14);
            prop_assert!(r.found().is_some());
            prop_assert_eq!(r.found().unwrap().rebuild().unwrap(), g);
        }
        let text = d.to_string();
        prop_assert_eq!(text.parse::<EarDecomposition>().unwrap(), d);
    }

    #[test]
    fn random_abmc_graphs_are_recognised(odd_ears in 0usize..4, seed in any::<u64>()) {
        let recipe = AbmcRecipe { odd_ears, odd_len_min: 1, odd_len_max: 3, even_len_min: 2, even_len_max: 4, seed };
        let g = build(&random_abmc_decomposition(&recipe).unwrap()).unwrap();
        prop_assert!(is_factor_critical(&g));
        prop_assert_eq!(g_defect(&g), 1);
        let r = is_abmc(&g, 20);
        prop_assert!(r.found().is_some());
    }
}
