//! Explicit small graphs stored as adjacency bitmasks, degree sequences and
//! exact degree power sums.

mod biclique;
mod canon;
mod cycles;
pub mod graph6;

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use biclique::is_complete_bipartite;
pub use canon::{canonical_form, canonical_graph};
pub use cycles::{contains_cycle, contains_path_order, has_cycle_through_edge};

/// Largest order a [`SmallGraph`] can hold: one `u64` row per vertex.
pub const MAX_ORDER: usize = 64;

/// A simple undirected graph on at most [`MAX_ORDER`] vertices.
///
/// Row `i` of the adjacency array is the bitmask of neighbours of `i`. Rows at
/// or beyond `order` are always zero, so derived equality and hashing compare
/// labeled graphs.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    order: usize,
    adj: [u64; MAX_ORDER],
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask, lowest first.
#[derive(Clone, Copy)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

impl SmallGraph {
    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::capacity(format!(
                "order {order} exceeds the {MAX_ORDER}-vertex limit"
            )));
        }
        Ok(SmallGraph {
            order,
            adj: [0; MAX_ORDER],
        })
    }

    /// Builds a graph from an edge list. Duplicate pairs collapse.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(order)?;
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, checking every invariant.
    pub fn from_rows(order: usize, rows: &[u64]) -> Result<Self> {
        let mut g = Self::empty(order)?;
        if rows.len() != order {
            return Err(Error::validation(format!(
                "expected {order} adjacency rows, got {}",
                rows.len()
            )));
        }
        let mask = low_mask(order);
        for (i, &r) in rows.iter().enumerate() {
            if r & !mask != 0 {
                return Err(Error::validation(format!("row {i} has bits beyond order {order}")));
            }
            if r & bit(i) != 0 {
                return Err(Error::validation(format!("self-loop at vertex {i}")));
            }
            g.adj[i] = r;
        }
        for i in 0..order {
            for j in Bits(g.adj[i]) {
                if g.adj[j] & bit(i) == 0 {
                    return Err(Error::validation(format!("asymmetric adjacency between {i} and {j}")));
                }
            }
        }
        Ok(g)
    }

    /// Rows are trusted to be symmetric, loop-free and within `order`.
    pub(crate) fn from_rows_unchecked(order: usize, rows: &[u64]) -> Self {
        let mut adj = [0; MAX_ORDER];
        adj[..order].copy_from_slice(&rows[..order]);
        SmallGraph { order, adj }
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        if a >= self.order || b >= self.order {
            return Err(Error::validation(format!(
                "edge ({a},{b}) has an endpoint outside 0..{}",
                self.order
            )));
        }
        if a == b {
            return Err(Error::validation(format!("self-loop ({a},{a})")));
        }
        self.adj[a] |= bit(b);
        self.adj[b] |= bit(a);
        Ok(())
    }

    pub fn remove_edge(&mut self, a: usize, b: usize) {
        if a < self.order && b < self.order {
            self.adj[a] &= !bit(b);
            self.adj[b] &= !bit(a);
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.order && self.adj[a] & bit(b) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj[..self.order]
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j`, ordered by `i` then `j`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |i| Bits(self.adj[i] & !low_mask(i + 1)).map(move |j| (i, j)))
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence((0..self.order).map(|v| self.degree(v)).collect())
    }

    /// Subgraph induced by the vertices in `mask`, relabeled to `0..k` in
    /// increasing original order.
    pub fn induced(&self, mask: u64) -> SmallGraph {
        let verts: Vec<usize> = Bits(mask & low_mask(self.order)).collect();
        let mut rows = [0u64; MAX_ORDER];
        for (ni, &vi) in verts.iter().enumerate() {
            for (nj, &vj) in verts.iter().enumerate() {
                if self.adj[vi] & bit(vj) != 0 {
                    rows[ni] |= bit(nj);
                }
            }
        }
        SmallGraph::from_rows_unchecked(verts.len(), &rows)
    }

    /// Relabels vertex `v` to `perm[v]`. `perm` must be a permutation of `0..order`.
    pub fn permuted(&self, perm: &[usize]) -> Result<SmallGraph> {
        let n = self.order;
        let mut seen = 0u64;
        if perm.len() != n {
            return Err(Error::validation("permutation length differs from order"));
        }
        for &p in perm {
            if p >= n || seen & bit(p) != 0 {
                return Err(Error::validation("not a permutation"));
            }
            seen |= bit(p);
        }
        let mut rows = [0u64; MAX_ORDER];
        for v in 0..n {
            for w in Bits(self.adj[v]) {
                rows[perm[v]] |= bit(perm[w]);
            }
        }
        Ok(SmallGraph::from_rows_unchecked(n, &rows))
    }

    /// Connected components as vertex masks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut left = low_mask(self.order);
        let mut out = Vec::new();
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let mut comp = bit(start);
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for v in Bits(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            left &= !comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Edge-wise complement.
    pub fn complement(&self) -> SmallGraph {
        let mask = low_mask(self.order);
        let rows: Vec<u64> = (0..self.order).map(|v| !self.adj[v] & mask & !bit(v)).collect();
        SmallGraph::from_rows_unchecked(self.order, &rows)
    }

    /// Cycle `C_n` on vertices `0..n` in order.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::validation(format!("cycle needs at least 3 vertices, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges)
    }

    /// Path `P_n` on `n` vertices.
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for i in 0..n {
            g.adj[i] = low_mask(n) & !bit(i);
        }
        Ok(g)
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let mut g = Self::empty(a + b)?;
        for i in 0..a {
            for j in a..a + b {
                g.add_edge(i, j)?;
            }
        }
        Ok(g)
    }

    /// The Petersen graph: outer 5-cycle, inner pentagram, spokes.
    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, i + 5));
        }
        Self::from_edges(10, &edges).expect("static edge list")
    }
}

impl fmt::Debug for SmallGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SmallGraph(n={}, edges=[", self.order)?;
        for (k, (i, j)) in self.edges().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{i}-{j}")?;
        }
        write!(f, "])")
    }
}

/// Degrees of a graph, one entry per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeSequence(pub Vec<usize>);

impl DegreeSequence {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entries sorted in non-increasing order.
    pub fn sorted_desc(&self) -> Vec<usize> {
        let mut d = self.0.clone();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// `Σ d^p`, exact.
    pub fn power_sum(&self, p: u32) -> Result<BigCount> {
        degree_power_sum(self, p)
    }
}

/// Arbitrary-precision non-negative count.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BigCount(pub BigUint);

impl BigCount {
    pub fn zero() -> Self {
        BigCount(BigUint::zero())
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl From<BigUint> for BigCount {
    fn from(v: BigUint) -> Self {
        BigCount(v)
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl std::str::FromStr for BigCount {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<BigUint>()
            .map(BigCount)
            .map_err(|e| Error::parse(0, format!("not a decimal count: {e}")))
    }
}

// Decimal strings keep counts above 2^53 intact in JSON.
impl Serialize for BigCount {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_str_radix(10))
    }
}

impl<'de> Deserialize<'de> for BigCount {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `base^p` as a big integer.
pub(crate) fn big_pow(base: u64, p: u32) -> BigUint {
    if base <= 1 {
        return if base == 0 && p > 0 { BigUint::zero() } else { BigUint::one() };
    }
    num_traits::pow(BigUint::from(base), p as usize)
}

/// Exact `Σ d_i^p` over a degree sequence. `p` must be positive.
pub fn degree_power_sum(d: &DegreeSequence, p: u32) -> Result<BigCount> {
    if p == 0 {
        return Err(Error::validation("power p must be at least 1"));
    }
    let mut counts = std::collections::BTreeMap::<usize, u64>::new();
    for &x in &d.0 {
        *counts.entry(x).or_default() += 1;
    }
    let total = counts
        .into_iter()
        .fold(BigUint::zero(), |acc, (deg, mult)| acc + big_pow(deg as u64, p) * mult);
    Ok(BigCount(total))
}
