use super::{bit, Bits, SmallGraph};

/// Whether adding (or keeping) edge `uv` closes a cycle on exactly `k`
/// vertices, i.e. whether some `v → u` path with `k - 1` edges avoids `u` and
/// `v` in its interior.
///
/// The edge itself need not be present in `rows`. `k = 5` takes a dedicated
/// path: enumerate the middle pair of endpoints and intersect neighbourhoods.
pub fn has_cycle_through_edge(rows: &[u64], u: usize, v: usize, k: usize) -> bool {
    if k < 3 || u == v {
        return false;
    }
    let excl = bit(u) | bit(v);
    match k {
        3 => rows[u] & rows[v] & !excl != 0,
        5 => c5_through(rows, u, v),
        _ => path_between(rows, v, u, k - 1, excl),
    }
}

#[inline]
fn c5_through(rows: &[u64], u: usize, v: usize) -> bool {
    let excl = bit(u) | bit(v);
    let nu = rows[u] & !excl;
    for a in Bits(rows[v] & !excl) {
        let ra = rows[a];
        for c in Bits(nu & !bit(a)) {
            if ra & rows[c] & !(excl | bit(a) | bit(c)) != 0 {
                return true;
            }
        }
    }
    false
}

// Is there a path from `cur` to `target` using exactly `edges` more edges whose
// interior vertices avoid `used`?
fn path_between(rows: &[u64], cur: usize, target: usize, edges: usize, used: u64) -> bool {
    if edges == 1 {
        return rows[cur] & bit(target) != 0;
    }
    for w in Bits(rows[cur] & !used) {
        if path_between(rows, w, target, edges - 1, used | bit(w)) {
            return true;
        }
    }
    false
}

/// True iff `g` contains a cycle on exactly `k` distinct vertices.
pub fn contains_cycle(g: &SmallGraph, k: usize) -> bool {
    if k < 3 || k > g.order() {
        return false;
    }
    let rows = g.rows();
    g.edges().any(|(u, v)| has_cycle_through_edge(rows, u, v, k))
}

/// True iff `g` contains a simple path on `k` vertices (`k - 1` edges).
pub fn contains_path_order(g: &SmallGraph, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if k > g.order() {
        return false;
    }
    let rows = g.rows();
    (0..g.order()).any(|s| extend_path(rows, s, k - 1, bit(s)))
}

fn extend_path(rows: &[u64], cur: usize, more: usize, used: u64) -> bool {
    if more == 0 {
        return true;
    }
    Bits(rows[cur] & !used).any(|w| extend_path(rows, w, more - 1, used | bit(w)))
}
