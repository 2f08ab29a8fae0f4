//! Brute-force oracles shared by the integration tests. They use plain
//! adjacency matrices and exhaustive loops, independent of the bitmask code.
#![allow(dead_code)]

use std::collections::BTreeSet;

use degpow_core::graph::canonical_form;
use degpow_core::SmallGraph;

pub fn matrix(g: &SmallGraph) -> Vec<Vec<bool>> {
    let n = g.order();
    (0..n).map(|i| (0..n).map(|j| g.has_edge(i, j)).collect()).collect()
}

/// Does `adj` contain a cycle on exactly `k` distinct vertices? Tries every
/// ordered tuple starting at its smallest vertex.
pub fn has_cycle(adj: &[Vec<bool>], k: usize) -> bool {
    fn extend(adj: &[Vec<bool>], k: usize, path: &mut Vec<usize>) -> bool {
        let n = adj.len();
        let last = *path.last().unwrap();
        if path.len() == k {
            return adj[last][path[0]];
        }
        for next in path[0] + 1..n {
            if adj[last][next] && !path.contains(&next) {
                path.push(next);
                if extend(adj, k, path) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    if k < 3 {
        return false;
    }
    (0..adj.len()).any(|s| extend(adj, k, &mut vec![s]))
}

/// Every labeled graph on `n` vertices, in mask order.
pub fn all_graphs(n: usize) -> impl Iterator<Item = SmallGraph> {
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let m = slots.len();
    (0u64..1 << m).map(move |mask| {
        let edges: Vec<_> = (0..m).filter(|b| mask >> b & 1 == 1).map(|b| slots[b]).collect();
        SmallGraph::from_edges(n, &edges).unwrap()
    })
}

pub fn power_sum(g: &SmallGraph, p: u32) -> u128 {
    (0..g.order()).map(|v| (g.degree(v) as u128).pow(p)).sum()
}

/// Naive `ex_p(n, C5)`: value, canonical maximizer forms and the number of
/// C5-free labeled graphs seen.
pub fn naive_ex_p(n: usize, p: u32) -> (u128, BTreeSet<Vec<u8>>, u64) {
    let mut best = 0;
    let mut forms = BTreeSet::new();
    let mut free = 0;
    for g in all_graphs(n) {
        if has_cycle(&matrix(&g), 5) {
            continue;
        }
        free += 1;
        let v = power_sum(&g, p);
        if v > best {
            best = v;
            forms.clear();
        }
        if v == best {
            forms.insert(canonical_form(&g));
        }
    }
    (best, forms, free)
}

/// Is `g` complete bipartite with both parts nonempty? Tries every bipartition.
pub fn naive_biclique(g: &SmallGraph) -> Option<(usize, usize)> {
    let n = g.order();
    for mask in 1u64..(1 << n) - 1 {
        let side = |v: usize| mask >> v & 1 == 1;
        let ok = (0..n).all(|i| (i + 1..n).all(|j| g.has_edge(i, j) == (side(i) != side(j))));
        if ok {
            let a = mask.count_ones() as usize;
            return Some((a.min(n - a), a.max(n - a)));
        }
    }
    None
}
