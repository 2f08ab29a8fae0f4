mod common;

use std::collections::BTreeSet;

use degpow_core::graph::{canonical_form, contains_cycle, degree_power_sum, graph6};
use degpow_core::search::{
    classify_maximizers, enumerate_c5_free, ex_p, ex_p_with, max_degree_ratio, SearchOptions,
};
use degpow_core::{BigCount, Error, SmallGraph};

#[test]
fn pruned_search_matches_naive_enumeration() {
    for n in 1..=6 {
        for p in 1..=3 {
            let (want, forms, _) = common::naive_ex_p(n, p);
            for maximal_only in [true, false] {
                let opts = SearchOptions { maximal_only, ..SearchOptions::default() };
                let r = ex_p_with(n, p, &opts).unwrap();
                assert_eq!(r.value, BigCount::from(want as u64), "n={n} p={p} maximal_only={maximal_only}");
                let got: BTreeSet<_> = r.maximizers.iter().map(canonical_form).collect();
                assert_eq!(got, forms, "n={n} p={p}");
            }
        }
    }
}

#[test]
fn visited_count_at_five_matches_naive() {
    let (_, _, naive) = common::naive_ex_p(5, 1);
    let mut all_free = true;
    let count = enumerate_c5_free(5, |g| all_free &= !contains_cycle(g, 5)).unwrap();
    assert!(all_free);
    assert_eq!(count, naive);
    let opts = SearchOptions { prune: false, maximal_only: false, ..SearchOptions::default() };
    assert_eq!(ex_p_with(5, 2, &opts).unwrap().visited, naive);
}

#[test]
fn reported_maximizers_are_consistent() {
    for n in 4..=8 {
        for p in 1..=3 {
            let r = ex_p(n, p).unwrap();
            let forms: BTreeSet<_> = r.maximizers.iter().map(canonical_form).collect();
            assert_eq!(forms.len(), r.maximizers.len(), "duplicates at n={n} p={p}");
            for (g, s) in r.maximizers.iter().zip(&r.maximizer_stats) {
                assert!(!contains_cycle(g, 5));
                assert_eq!(degree_power_sum(&g.degree_sequence(), p).unwrap(), r.value);
                assert_eq!(&graph6::decode(&s.graph6).unwrap(), g);
                assert_eq!(s.max_degree, g.max_degree());
                assert_eq!(s.edge_count, g.edge_count());
            }
        }
    }
}

#[test]
fn worker_count_is_irrelevant() {
    for (n, p) in [(8, 1), (8, 3)] {
        let one = ex_p_with(n, p, &SearchOptions { workers: Some(1), ..SearchOptions::default() }).unwrap();
        let many = ex_p_with(n, p, &SearchOptions { workers: Some(4), ..SearchOptions::default() }).unwrap();
        assert_eq!(one, many);
        assert_eq!(one.to_json(), many.to_json());
    }
}

#[test]
fn small_order_examples() {
    let r = ex_p(5, 2).unwrap();
    assert_eq!(r.value.to_string(), "44");
    // K2 joined to three isolated vertices, and K4 with a pendant
    let join = SmallGraph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
    let k4p = SmallGraph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4)]).unwrap();
    let forms: BTreeSet<_> = r.maximizers.iter().map(canonical_form).collect();
    assert_eq!(forms, [canonical_form(&join), canonical_form(&k4p)].into_iter().collect());
    let c = classify_maximizers(&r);
    assert!(!c.all_complete_bipartite);
    let ratios: Vec<String> = max_degree_ratio(&r).iter().map(|q| q.to_string()).collect();
    assert_eq!(ratios, vec!["4/5", "4/5"]);

    assert_eq!(ex_p(5, 1).unwrap().value.to_string(), "14");
    assert_eq!(ex_p(4, 3).unwrap().value.to_string(), "108");
}

#[test]
fn biclique_summary() {
    // p = 1 at n = 8: the balanced biclique is the only maximizer
    let r = ex_p(8, 1).unwrap();
    let c = classify_maximizers(&r);
    assert!(c.all_complete_bipartite);
    assert_eq!(r.maximizer_stats[0].is_complete_bipartite, Some((4, 4)));
    assert_eq!(c.max_degree_ratios, vec!["1/2"]);
}

#[test]
fn order_limit() {
    assert!(matches!(ex_p(12, 2), Err(Error::Capacity(_))));
    let forced = SearchOptions { force: true, ..SearchOptions::default() };
    assert!(ex_p_with(3, 2, &forced).is_ok());
}
