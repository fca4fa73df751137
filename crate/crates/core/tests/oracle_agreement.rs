use corona_core::critical::{
    critical_difference, critical_independence_difference, diadem, is_2bicritical,
    is_critical_independent, ker, max_critical_independent_set, nucleus,
};
use corona_core::cycles::{count_odd_cycles, CycleCount};
use corona_core::decomposition::larson_decompose;
use corona_core::format::parse_graph6_stream;
use corona_core::generators::gnp;
use corona_core::independence::{alpha, core, corona, is_konig_egervary, omega};
use corona_core::matching::matching_number;
use corona_core::oracle::Oracle;
use corona_core::Graph;

fn catalog() -> Vec<Graph> {
    let text = include_str!("fixtures/graphs_upto7.g6");
    parse_graph6_stream(text)
        .into_iter()
        .map(|(_, g)| g.unwrap())
        .collect()
}

fn compare(g: &Graph) {
    let o = Oracle::new(g, 16).unwrap();
    let ctx = corona_core::format::to_graph6(g);
    assert_eq!(alpha(g), o.alpha(), "{ctx}");
    assert_eq!(matching_number(g), o.matching_number(), "{ctx}");
    assert_eq!(is_konig_egervary(g), o.is_konig_egervary(), "{ctx}");
    assert_eq!(core(g), o.core(), "{ctx}");
    assert_eq!(corona(g), o.corona(), "{ctx}");
    assert_eq!(omega(g, 100_000).sets, o.omega(), "{ctx}");
    let d = critical_difference(g);
    assert_eq!(d, o.critical_difference(), "{ctx}");
    assert_eq!(critical_independence_difference(g), o.critical_independence_difference(), "{ctx}");
    assert_eq!(ker(g), o.ker(), "{ctx}");
    assert_eq!(diadem(g), o.diadem(), "{ctx}");
    assert_eq!(nucleus(g), o.nucleus(), "{ctx}");
    let j = max_critical_independent_set(g);
    let maxes = o.maximum_critical_independent_sets();
    assert!(is_critical_independent(g, &j, d), "{ctx}");
    assert_eq!(j, maxes[0], "{ctx}");
    assert_eq!(is_2bicritical(g), o.is_2bicritical(), "{ctx}");
    let dec = larson_decompose(g).unwrap();
    assert_eq!(o.larson_candidates(), vec![dec.l.clone()], "{ctx}");
    if g.order() <= 10 {
        assert_eq!(count_odd_cycles(g, u64::MAX), CycleCount::Exact(o.odd_cycle_count()), "{ctx}");
    }
}

#[test]
fn fast_paths_match_oracle_on_catalog() {
    let graphs = catalog();
    assert_eq!(graphs.len(), 1253);
    for g in &graphs {
        compare(g);
    }
}

#[test]
fn fast_paths_match_oracle_on_random_graphs() {
    for seed in 0..300u64 {
        let n = 8 + (seed % 7) as usize;
        let p = [0.15, 0.3, 0.5][(seed % 3) as usize];
        compare(&gnp(n, p, seed).unwrap());
    }
}
