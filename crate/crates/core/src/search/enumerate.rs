//! Labeled enumeration of graphs without a fixed-length cycle.
//!
//! Edges are decided in a fixed order (`(0,1), (0,2), (1,2), (0,3), …`). An
//! edge is only included when it closes no forbidden cycle; since containing a
//! cycle is monotone under adding edges, every cut subtree holds only graphs
//! with the cycle. Each leaf is a distinct labeled cycle-free graph.
//!
//! Parallel runs split the tree on the first [`PREFIX_DEPTH`] decisions and
//! walk each prefix subtree independently; results are merged in prefix order.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{bit, has_cycle_through_edge, SmallGraph, MAX_ORDER};

/// Default order limit for exhaustive runs.
pub const DEFAULT_ORDER_LIMIT: usize = 9;

/// Number of leading edge decisions that define independent work units.
pub const PREFIX_DEPTH: usize = 12;

/// Environment variable capping the worker count.
pub const THREADS_ENV: &str = "DEGPOW_THREADS";

pub(crate) fn check_order(n: usize, force: bool) -> Result<()> {
    if n > MAX_ORDER {
        return Err(Error::capacity(format!("order {n} exceeds the {MAX_ORDER}-vertex limit")));
    }
    if n > DEFAULT_ORDER_LIMIT && !force {
        return Err(Error::capacity(format!(
            "exhaustive search at n={n} exceeds the default limit n<={DEFAULT_ORDER_LIMIT}; rerun with force enabled (--force)"
        )));
    }
    Ok(())
}

/// Edge slots in decision order.
pub(crate) fn edge_order(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// A partially decided graph: rows plus the index of the next undecided edge.
#[derive(Clone)]
pub(crate) struct Prefix {
    pub rows: [u64; MAX_ORDER],
    pub next: usize,
}

/// All surviving states after the first `depth` decisions, in DFS order with
/// "exclude" explored before "include".
pub(crate) fn prefixes(n: usize, cycle_len: usize, depth: usize) -> Vec<Prefix> {
    let edges = edge_order(n);
    let depth = depth.min(edges.len());
    let mut out = Vec::new();
    let mut rows = [0u64; MAX_ORDER];
    fn rec(
        edges: &[(usize, usize)],
        k: usize,
        depth: usize,
        idx: usize,
        rows: &mut [u64; MAX_ORDER],
        out: &mut Vec<Prefix>,
    ) {
        if idx == depth {
            out.push(Prefix { rows: *rows, next: idx });
            return;
        }
        rec(edges, k, depth, idx + 1, rows, out);
        let (i, j) = edges[idx];
        if !has_cycle_through_edge(rows, i, j, k) {
            rows[i] |= bit(j);
            rows[j] |= bit(i);
            rec(edges, k, depth, idx + 1, rows, out);
            rows[i] &= !bit(j);
            rows[j] &= !bit(i);
        }
    }
    rec(&edges, cycle_len, depth, 0, &mut rows, &mut out);
    out
}

/// Walks every completion of `prefix`, calling `visit` on each leaf.
pub(crate) fn walk<V: FnMut(&[u64; MAX_ORDER])>(
    edges: &[(usize, usize)],
    cycle_len: usize,
    prefix: &Prefix,
    visit: &mut V,
) {
    fn rec<V: FnMut(&[u64; MAX_ORDER])>(
        edges: &[(usize, usize)],
        k: usize,
        idx: usize,
        rows: &mut [u64; MAX_ORDER],
        visit: &mut V,
    ) {
        if idx == edges.len() {
            visit(rows);
            return;
        }
        rec(edges, k, idx + 1, rows, visit);
        let (i, j) = edges[idx];
        if !has_cycle_through_edge(rows, i, j, k) {
            rows[i] |= bit(j);
            rows[j] |= bit(i);
            rec(edges, k, idx + 1, rows, visit);
            rows[i] &= !bit(j);
            rows[j] &= !bit(i);
        }
    }
    let mut rows = prefix.rows;
    rec(edges, cycle_len, prefix.next, &mut rows, visit);
}

/// Runs `f` on a rayon pool sized by `workers` (or the global default),
/// capped by `DEGPOW_THREADS` when set.
pub(crate) fn with_pool<R: Send>(workers: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    let cap = std::env::var(THREADS_ENV).ok().and_then(|v| v.parse::<usize>().ok()).filter(|&c| c > 0);
    let wanted = match (workers, cap) {
        (Some(w), Some(c)) => Some(w.min(c)),
        (Some(w), None) => Some(w),
        (None, Some(c)) => Some(c.min(rayon::current_num_threads())),
        (None, None) => None,
    };
    match wanted {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

/// Visits every labeled graph on `n` vertices without a 5-cycle, exactly once.
/// Returns the number of graphs visited.
pub fn enumerate_c5_free<V: FnMut(&SmallGraph)>(n: usize, visitor: V) -> Result<u64> {
    enumerate_cycle_free(n, 5, false, visitor)
}

/// As [`enumerate_c5_free`] for a forbidden cycle on `cycle_len` vertices.
/// `force` lifts the default order limit.
pub fn enumerate_cycle_free<V: FnMut(&SmallGraph)>(
    n: usize,
    cycle_len: usize,
    force: bool,
    mut visitor: V,
) -> Result<u64> {
    check_order(n, force)?;
    let edges = edge_order(n);
    let mut count = 0u64;
    let root = Prefix {
        rows: [0; MAX_ORDER],
        next: 0,
    };
    walk(&edges, cycle_len, &root, &mut |rows| {
        count += 1;
        visitor(&SmallGraph::from_rows_unchecked(n, &rows[..n]));
    });
    Ok(count)
}

/// Parallel fold over every labeled `C_k`-free graph on `n` vertices.
///
/// Each prefix subtree folds from `identity()`; partial results are reduced in
/// prefix order, so the output does not depend on the worker count.
pub fn par_fold_cycle_free<A, I, F, R>(
    n: usize,
    cycle_len: usize,
    force: bool,
    workers: Option<usize>,
    identity: I,
    fold: F,
    reduce: R,
) -> Result<(A, u64)>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(A, &SmallGraph) -> A + Sync + Send,
    R: Fn(A, A) -> A + Sync + Send,
{
    check_order(n, force)?;
    let edges = edge_order(n);
    let parts = prefixes(n, cycle_len, PREFIX_DEPTH);
    let partials: Vec<(A, u64)> = with_pool(workers, || {
        parts
            .par_iter()
            .map(|pre| {
                let mut acc = Some(identity());
                let mut count = 0u64;
                walk(&edges, cycle_len, pre, &mut |rows| {
                    count += 1;
                    let g = SmallGraph::from_rows_unchecked(n, &rows[..n]);
                    acc = Some(fold(acc.take().expect("accumulator present"), &g));
                });
                (acc.expect("accumulator present"), count)
            })
            .collect()
    });
    let mut total = 0;
    let mut acc = identity();
    for (a, c) in partials {
        total += c;
        acc = reduce(acc, a);
    }
    Ok((acc, total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::contains_cycle;

    fn naive_count(n: usize, k: usize) -> u64 {
        let edges = edge_order(n);
        (0u64..1 << edges.len())
            .filter(|mask| {
                let list: Vec<_> = (0..edges.len()).filter(|b| mask >> b & 1 == 1).map(|b| edges[b]).collect();
                !contains_cycle(&SmallGraph::from_edges(n, &list).unwrap(), k)
            })
            .count() as u64
    }

    #[test]
    fn trivial_orders() {
        assert_eq!(enumerate_c5_free(0, |_| {}).unwrap(), 1);
        assert_eq!(enumerate_c5_free(1, |_| {}).unwrap(), 1);
        assert_eq!(enumerate_c5_free(3, |_| {}).unwrap(), 8);
        assert_eq!(enumerate_c5_free(4, |_| {}).unwrap(), 64);
    }

    #[test]
    fn order_five_matches_naive_count() {
        let want = naive_count(5, 5);
        let mut seen = std::collections::HashSet::new();
        let got = enumerate_c5_free(5, |g| {
            assert!(!contains_cycle(g, 5));
            assert!(seen.insert(*g), "visited twice: {g:?}");
        })
        .unwrap();
        assert_eq!(got, want);
        assert_eq!(seen.len() as u64, want);
    }

    #[test]
    fn other_cycle_lengths() {
        for k in [3, 4, 6] {
            assert_eq!(enumerate_cycle_free(6, k, false, |_| {}).unwrap(), naive_count(6, k), "k={k}");
        }
    }

    #[test]
    fn capacity_limit() {
        assert!(matches!(enumerate_c5_free(10, |_| {}), Err(Error::Capacity(_))));
        assert!(matches!(enumerate_cycle_free(65, 5, true, |_| {}), Err(Error::Capacity(_))));
    }

    #[test]
    fn parallel_fold_matches_sequential() {
        let seq = enumerate_c5_free(6, |_| {}).unwrap();
        for workers in [1, 3] {
            let (edges, count) =
                par_fold_cycle_free(6, 5, false, Some(workers), || 0usize, |m, g| m.max(g.edge_count()), usize::max)
                    .unwrap();
            assert_eq!(count, seq);
            assert_eq!(edges, 9);
        }
    }
}
