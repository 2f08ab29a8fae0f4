//! Exact `ex_p(n, C_k)` by branch and bound over the edge-decision tree.
//!
//! At a node with `idx` decisions made, vertex `v` can still gain at most
//! `r_v` edges (undecided slots at `v`), so `Σ (d_v + r_v)^p` bounds every
//! completion. A subtree is cut only when this bound is strictly below the
//! best value seen, which keeps every tied maximizer.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::{check_order, edge_order, prefixes, with_pool, Prefix, PREFIX_DEPTH};
use crate::error::{Error, Result};
use crate::graph::{
    bit, canonical_form, canonical_graph, graph6, has_cycle_through_edge, is_complete_bipartite, BigCount,
    SmallGraph, MAX_ORDER,
};

/// Knobs for [`ex_p_with`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Order of the forbidden cycle.
    pub cycle_len: usize,
    /// Worker threads; `None` uses the rayon default. `DEGPOW_THREADS` caps either.
    pub workers: Option<usize>,
    /// Only score edge-maximal graphs. Loses no maximizer, since adding an
    /// edge raises two degrees.
    pub maximal_only: bool,
    /// Cut subtrees whose degree bound falls below the incumbent.
    pub prune: bool,
    /// Lift the default order limit.
    pub force: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            cycle_len: 5,
            workers: None,
            maximal_only: true,
            prune: true,
            force: false,
        }
    }
}

/// Per-maximizer summary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaximizerStats {
    pub graph6: String,
    #[serde(rename = "biclique")]
    pub is_complete_bipartite: Option<(usize, usize)>,
    pub max_degree: usize,
    pub edge_count: usize,
}

/// Outcome of an exact search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub n: usize,
    pub p: u32,
    pub cycle_len: usize,
    pub value: BigCount,
    /// Canonical representatives, sorted by canonical form.
    pub maximizers: Vec<SmallGraph>,
    pub maximizer_stats: Vec<MaximizerStats>,
    /// Complete graphs (leaves) scored by the search.
    pub visited: u64,
}

#[derive(Serialize)]
struct SearchJson<'a> {
    n: usize,
    p: u32,
    ex_p: &'a BigCount,
    maximizers: Vec<MaximizerJson<'a>>,
    visited: u64,
}

#[derive(Serialize)]
struct MaximizerJson<'a> {
    graph6: &'a str,
    biclique: Option<(usize, usize)>,
    max_degree: usize,
}

impl SearchResult {
    /// The JSON object exchanged with the command line.
    pub fn to_json(&self) -> serde_json::Value {
        let doc = SearchJson {
            n: self.n,
            p: self.p,
            ex_p: &self.value,
            maximizers: self
                .maximizer_stats
                .iter()
                .map(|s| MaximizerJson {
                    graph6: &s.graph6,
                    biclique: s.is_complete_bipartite,
                    max_degree: s.max_degree,
                })
                .collect(),
            visited: self.visited,
        };
        serde_json::to_value(doc).expect("search result serializes")
    }
}

/// `ex_p(n, C_5)` with default options.
pub fn ex_p(n: usize, p: u32) -> Result<SearchResult> {
    ex_p_with(n, p, &SearchOptions::default())
}

struct Engine {
    n: usize,
    k: usize,
    edges: Vec<(usize, usize)>,
    /// `remaining[idx][v]`: undecided slots at `v` once `idx` edges are decided.
    remaining: Vec<[u8; MAX_ORDER]>,
    /// `powers[d] = d^p`.
    powers: Vec<u128>,
    maximal_only: bool,
    prune: bool,
}

#[derive(Default)]
struct Partial {
    best: u128,
    found: BTreeMap<Vec<u8>, SmallGraph>,
    visited: u64,
}

impl Engine {
    fn new(n: usize, p: u32, opts: &SearchOptions) -> Result<Self> {
        let edges = edge_order(n);
        let mut powers = Vec::with_capacity(n.max(1));
        for d in 0..n.max(1) {
            powers.push((d as u128).checked_pow(p).ok_or_else(too_large)?);
        }
        let top = powers.last().copied().unwrap_or(0);
        top.checked_mul(n as u128).ok_or_else(too_large)?;
        let mut remaining = vec![[0u8; MAX_ORDER]; edges.len() + 1];
        for idx in (0..edges.len()).rev() {
            let mut row = remaining[idx + 1];
            let (i, j) = edges[idx];
            row[i] += 1;
            row[j] += 1;
            remaining[idx] = row;
        }
        Ok(Engine {
            n,
            k: opts.cycle_len,
            edges,
            remaining,
            powers,
            maximal_only: opts.maximal_only,
            prune: opts.prune,
        })
    }

    fn bound(&self, idx: usize, deg: &[u8; MAX_ORDER]) -> u128 {
        let rem = &self.remaining[idx];
        (0..self.n).map(|v| self.powers[(deg[v] + rem[v]) as usize]).sum()
    }

    fn is_maximal(&self, rows: &[u64; MAX_ORDER]) -> bool {
        self.edges
            .iter()
            .all(|&(i, j)| rows[i] & bit(j) != 0 || has_cycle_through_edge(rows, i, j, self.k))
    }

    fn leaf(&self, rows: &[u64; MAX_ORDER], deg: &[u8; MAX_ORDER], out: &mut Partial) {
        out.visited += 1;
        let value: u128 = (0..self.n).map(|v| self.powers[deg[v] as usize]).sum();
        if value < out.best || (self.maximal_only && !self.is_maximal(rows)) {
            return;
        }
        if value > out.best {
            out.best = value;
            out.found.clear();
        }
        let g = SmallGraph::from_rows_unchecked(self.n, &rows[..self.n]);
        out.found.entry(canonical_form(&g)).or_insert_with(|| canonical_graph(&g));
    }

    fn descend(&self, idx: usize, rows: &mut [u64; MAX_ORDER], deg: &mut [u8; MAX_ORDER], out: &mut Partial) {
        if idx == self.edges.len() {
            self.leaf(rows, deg, out);
            return;
        }
        if self.prune && self.bound(idx, deg) < out.best {
            return;
        }
        let (i, j) = self.edges[idx];
        // Include first: it reaches large values early and tightens the cut.
        if !has_cycle_through_edge(rows, i, j, self.k) {
            rows[i] |= bit(j);
            rows[j] |= bit(i);
            deg[i] += 1;
            deg[j] += 1;
            self.descend(idx + 1, rows, deg, out);
            rows[i] &= !bit(j);
            rows[j] &= !bit(i);
            deg[i] -= 1;
            deg[j] -= 1;
        }
        self.descend(idx + 1, rows, deg, out);
    }

    fn run_prefix(&self, pre: &Prefix, floor: u128) -> Partial {
        let mut rows = pre.rows;
        let mut deg = [0u8; MAX_ORDER];
        for v in 0..self.n {
            deg[v] = rows[v].count_ones() as u8;
        }
        let mut out = Partial {
            best: floor,
            ..Partial::default()
        };
        self.descend(pre.next, &mut rows, &mut deg, &mut out);
        out
    }
}

fn too_large() -> Error {
    Error::capacity("degree powers exceed 128-bit range at this (n, p)")
}

/// Largest `e_p` over complete bipartite graphs on `n` vertices: a valid
/// starting incumbent whenever the forbidden cycle is odd.
fn biclique_floor(n: usize, powers: &[u128]) -> u128 {
    (1..n)
        .map(|b| b as u128 * powers[n - b] + (n - b) as u128 * powers[b])
        .max()
        .unwrap_or(0)
}

/// Exact maximum of `e_p` over `C_k`-free graphs on `n` vertices, with every
/// maximizer up to isomorphism.
///
/// The tree is split on its first decisions; subtrees run independently from
/// a common incumbent and merge in a fixed order, so the result does not
/// depend on the worker count. Values must fit in 128 bits
/// (`n·(n−1)^p < 2^128`), which holds at `n <= 9` for `p <= 40`.
pub fn ex_p_with(n: usize, p: u32, opts: &SearchOptions) -> Result<SearchResult> {
    if p == 0 {
        return Err(Error::validation("power p must be at least 1"));
    }
    if opts.cycle_len < 3 {
        return Err(Error::validation(format!("cycle length must be at least 3, got {}", opts.cycle_len)));
    }
    if n == 0 {
        return Err(Error::validation("order must be at least 1"));
    }
    check_order(n, opts.force)?;
    let engine = Engine::new(n, p, opts)?;
    // The incumbent is lowered by one so graphs attaining it are still recorded.
    let floor = if opts.prune && opts.cycle_len % 2 == 1 {
        biclique_floor(n, &engine.powers).saturating_sub(1)
    } else {
        0
    };
    let parts = prefixes(n, opts.cycle_len, PREFIX_DEPTH);
    let partials: Vec<Partial> =
        with_pool(opts.workers, || parts.par_iter().map(|pre| engine.run_prefix(pre, floor)).collect());

    let best = partials.iter().filter(|p| !p.found.is_empty()).map(|p| p.best).max().unwrap_or(0);
    let mut found = BTreeMap::new();
    let mut visited = 0;
    for part in partials {
        visited += part.visited;
        if part.best == best {
            found.extend(part.found);
        }
    }
    let maximizers: Vec<SmallGraph> = found.into_values().collect();
    let maximizer_stats = maximizers
        .iter()
        .map(|g| MaximizerStats {
            graph6: graph6::encode(g),
            is_complete_bipartite: is_complete_bipartite(g),
            max_degree: g.max_degree(),
            edge_count: g.edge_count(),
        })
        .collect();
    Ok(SearchResult {
        n,
        p,
        cycle_len: opts.cycle_len,
        value: BigCount(BigUint::from(best)),
        maximizers,
        maximizer_stats,
        visited,
    })
}

/// Biclique classification of the maximizers of a search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationSummary {
    pub n: usize,
    pub p: u32,
    pub ex_p: BigCount,
    pub maximizers: Vec<MaximizerStats>,
    /// `Δ/n` per maximizer, as reduced fractions.
    pub max_degree_ratios: Vec<String>,
    pub all_complete_bipartite: bool,
    pub note: String,
}

/// Classifies each maximizer and notes whether all of them are complete bipartite.
pub fn classify_maximizers(r: &SearchResult) -> ClassificationSummary {
    let all = !r.maximizer_stats.is_empty() && r.maximizer_stats.iter().all(|s| s.is_complete_bipartite.is_some());
    let non: Vec<&str> = r
        .maximizer_stats
        .iter()
        .filter(|s| s.is_complete_bipartite.is_none())
        .map(|s| s.graph6.as_str())
        .collect();
    let note = if all {
        let parts: Vec<String> = r
            .maximizer_stats
            .iter()
            .filter_map(|s| s.is_complete_bipartite)
            .map(|(a, b)| format!("K_{{{a},{b}}}"))
            .collect();
        format!("all maximizers complete bipartite: {}", parts.join(", "))
    } else {
        format!(
            "{} of {} maximizers not complete bipartite ({}); small-n regime",
            non.len(),
            r.maximizer_stats.len(),
            non.join(", ")
        )
    };
    ClassificationSummary {
        n: r.n,
        p: r.p,
        ex_p: r.value.clone(),
        maximizers: r.maximizer_stats.clone(),
        max_degree_ratios: max_degree_ratio(r).iter().map(|q| q.to_string()).collect(),
        all_complete_bipartite: all,
        note,
    }
}

/// `Δ(G)/n` for every maximizer.
pub fn max_degree_ratio(r: &SearchResult) -> Vec<BigRational> {
    r.maximizer_stats
        .iter()
        .map(|s| BigRational::new(s.max_degree.into(), r.n.into()))
        .collect()
}
