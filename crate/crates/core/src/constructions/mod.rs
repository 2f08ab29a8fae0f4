//! Graph families used in the C5-free extremal argument, both as explicit
//! [`SmallGraph`]s and as exact degree profiles at arbitrary order.
//!
//! Vertex layout of the hub-based families (`GPrime`, `GStar`, `HubAttachment`):
//! the hub `u` is vertex 0. For `GPrime(n, d)` and `GStar(n, d)` the triangle
//! partners `v1, v2` are vertices 1 and 2, the pendant side `A1` is `3..=d`
//! and the far side `B` is `d+1..n`; in `GStar` the two spine vertices
//! `w1, w2` are `d+1` and `d+2`.

mod parse;

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{big_pow, bit, contains_path_order, BigCount, Bits, DegreeSequence, SmallGraph, MAX_ORDER};

/// Declarative description of one concrete family member.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConstructionSpec {
    /// Complete `r`-partite graph on `n` vertices with parts as equal as possible.
    Turan { n: u64, r: u64 },
    CompleteBipartite { a: u64, b: u64 },
    /// `K_k` joined to `m` independent vertices.
    JoinCliqueEmpty { k: u64, m: u64 },
    /// Hub with `pendants` pendant edges (S1) and `triangles` triangles (S2) through it.
    HubAttachment { pendants: u64, triangles: u64 },
    /// Hub of degree `hub_degree` carrying one triangle and `hub_degree - 2`
    /// pendants; the far side is independent and fully joined to the pendants.
    GPrime { n: u64, hub_degree: u64 },
    /// As `GPrime`, but two far-side vertices form the small class of a
    /// biclique with the rest of the far side, which stays joined to the pendants.
    GStar { n: u64, hub_degree: u64 },
}

impl ConstructionSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            ConstructionSpec::Turan { n, r } => {
                if r < 1 || r > n {
                    return Err(Error::validation(format!("turan requires 1 <= r <= n, got n={n}, r={r}")));
                }
            }
            ConstructionSpec::GPrime { n, hub_degree: d } => {
                if d < 2 {
                    return Err(Error::validation(format!("gprime requires hub degree >= 2, got {d}")));
                }
                if n < d + 2 {
                    return Err(Error::validation(format!(
                        "gprime requires a nonempty far side (n - d - 1 >= 1), got n={n}, d={d}"
                    )));
                }
            }
            ConstructionSpec::GStar { n, hub_degree: d } => {
                if d < 2 {
                    return Err(Error::validation(format!("gstar requires hub degree >= 2, got {d}")));
                }
                if n < d + 4 {
                    return Err(Error::validation(format!(
                        "gstar requires at least one far-side vertex besides w1, w2 (n - d - 1 >= 3), got n={n}, d={d}"
                    )));
                }
            }
            _ => {}
        }
        self.checked_order().map(|_| ())
    }

    fn checked_order(&self) -> Result<u64> {
        let o = match *self {
            ConstructionSpec::Turan { n, .. } => Some(n),
            ConstructionSpec::CompleteBipartite { a, b } => a.checked_add(b),
            ConstructionSpec::JoinCliqueEmpty { k, m } => k.checked_add(m),
            ConstructionSpec::HubAttachment { pendants, triangles } => triangles
                .checked_mul(2)
                .and_then(|t| t.checked_add(pendants))
                .and_then(|t| t.checked_add(1)),
            ConstructionSpec::GPrime { n, .. } | ConstructionSpec::GStar { n, .. } => Some(n),
        };
        o.ok_or_else(|| Error::capacity("construction order overflows u64"))
    }

    /// Number of vertices of the described graph.
    pub fn order(&self) -> Result<u64> {
        self.validate()?;
        self.checked_order()
    }
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ConstructionSpec::Turan { n, r } => write!(f, "turan:n={n},r={r}"),
            ConstructionSpec::CompleteBipartite { a, b } => write!(f, "kbip:a={a},b={b}"),
            ConstructionSpec::JoinCliqueEmpty { k, m } => write!(f, "joinke:k={k},m={m}"),
            ConstructionSpec::HubAttachment { pendants, triangles } => write!(f, "hub:p={pendants},t={triangles}"),
            ConstructionSpec::GPrime { n, hub_degree } => write!(f, "gprime:n={n},d={hub_degree}"),
            ConstructionSpec::GStar { n, hub_degree } => write!(f, "gstar:n={n},d={hub_degree}"),
        }
    }
}

/// Degree multiset as `(multiplicity, degree)` pairs.
///
/// Profiles produced by [`degree_profile`] list one entry per structural role
/// (so equal degrees may appear twice); [`DegreeProfile::normalized`] merges them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub n: u64,
    pub profile: Vec<(u64, u64)>,
}

impl DegreeProfile {
    pub fn new(entries: Vec<(u64, u64)>) -> Result<Self> {
        let mut n = 0u64;
        let mut parity = 0u64;
        for &(mult, deg) in &entries {
            n = n
                .checked_add(mult)
                .ok_or_else(|| Error::capacity("profile order overflows u64"))?;
            parity ^= (mult & deg) & 1;
        }
        if parity != 0 {
            return Err(Error::validation("degree sum is odd"));
        }
        Ok(DegreeProfile { n, profile: entries })
    }

    /// Equal degrees merged, empty roles dropped, sorted by degree descending.
    pub fn normalized(&self) -> DegreeProfile {
        let mut merged = std::collections::BTreeMap::<u64, u64>::new();
        for &(mult, deg) in &self.profile {
            if mult > 0 {
                *merged.entry(deg).or_default() += mult;
            }
        }
        DegreeProfile {
            n: self.n,
            profile: merged.into_iter().rev().map(|(d, m)| (m, d)).collect(),
        }
    }

    /// Normalized profile of an explicit degree sequence.
    pub fn from_sequence(seq: &DegreeSequence) -> DegreeProfile {
        DegreeProfile {
            n: seq.len() as u64,
            profile: seq.0.iter().map(|&d| (1, d as u64)).collect(),
        }
        .normalized()
    }

    /// Expands to an explicit degree sequence, largest degrees first.
    pub fn to_sequence(&self) -> DegreeSequence {
        let mut out = Vec::with_capacity(self.n as usize);
        for (mult, deg) in self.normalized().profile {
            out.extend(std::iter::repeat_n(deg as usize, mult as usize));
        }
        DegreeSequence(out)
    }

    /// Exact `Σ mult · deg^p`, without expanding the multiset.
    pub fn power_sum(&self, p: u32) -> Result<BigCount> {
        if p == 0 {
            return Err(Error::validation("power p must be at least 1"));
        }
        let total = self
            .profile
            .iter()
            .fold(BigUint::zero(), |acc, &(mult, deg)| acc + big_pow(deg, p) * mult);
        Ok(BigCount(total))
    }

    pub fn max_degree(&self) -> u64 {
        self.profile.iter().filter(|e| e.0 > 0).map(|e| e.1).max().unwrap_or(0)
    }
}

/// Exact degree profile of `spec` at any order; no adjacency is materialized.
pub fn degree_profile(spec: &ConstructionSpec) -> Result<DegreeProfile> {
    spec.validate()?;
    let entries = match *spec {
        ConstructionSpec::Turan { n, r } => {
            let (q, rem) = (n / r, n % r);
            let mut parts = vec![((r - rem) * q, n - q)];
            if rem > 0 {
                parts.insert(0, (rem * (q + 1), n - q - 1));
            }
            parts
        }
        ConstructionSpec::CompleteBipartite { a, b } => vec![(a, b), (b, a)],
        ConstructionSpec::JoinCliqueEmpty { k, m } => vec![(k, (k + m).saturating_sub(1)), (m, k)],
        ConstructionSpec::HubAttachment { pendants, triangles } => {
            vec![(1, pendants + 2 * triangles), (pendants, 1), (2 * triangles, 2)]
        }
        ConstructionSpec::GPrime { n, hub_degree: d } => {
            vec![(1, d), (d - 2, n - d), (2, 2), (n - d - 1, d - 2)]
        }
        ConstructionSpec::GStar { n, hub_degree: d } => {
            vec![(1, d), (d - 2, n - d - 2), (2, 2), (2, n - d - 3), (n - d - 3, d)]
        }
    };
    DegreeProfile::new(entries)
}

/// Explicit graph for `spec`; the order must not exceed [`MAX_ORDER`].
pub fn build(spec: &ConstructionSpec) -> Result<SmallGraph> {
    let order = spec.order()?;
    if order > MAX_ORDER as u64 {
        return Err(Error::capacity(format!(
            "{spec} has order {order}, above the {MAX_ORDER}-vertex limit for explicit graphs"
        )));
    }
    let n = order as usize;
    let mut g = SmallGraph::empty(n)?;
    match *spec {
        ConstructionSpec::Turan { r, .. } => {
            let r = r as usize;
            let (q, rem) = (n / r, n % r);
            let mut part = Vec::with_capacity(n);
            for p in 0..r {
                let size = if p < rem { q + 1 } else { q };
                part.extend(std::iter::repeat_n(p, size));
            }
            for i in 0..n {
                for j in i + 1..n {
                    if part[i] != part[j] {
                        g.add_edge(i, j)?;
                    }
                }
            }
        }
        ConstructionSpec::CompleteBipartite { a, b } => {
            g = SmallGraph::complete_bipartite(a as usize, b as usize)?;
        }
        ConstructionSpec::JoinCliqueEmpty { k, .. } => {
            let k = k as usize;
            for i in 0..k {
                for j in i + 1..n {
                    g.add_edge(i, j)?;
                }
            }
        }
        ConstructionSpec::HubAttachment { pendants, triangles } => {
            let mut comps = vec![SmallGraph::empty(1)?; pendants as usize];
            comps.extend(std::iter::repeat_n(SmallGraph::complete(2)?, triangles as usize));
            g = attach_at_hub(&comps)?;
        }
        ConstructionSpec::GPrime { hub_degree, .. } => {
            let d = hub_degree as usize;
            hub_with_triangle(&mut g, d)?;
            for a in 3..=d {
                for b in d + 1..n {
                    g.add_edge(a, b)?;
                }
            }
        }
        ConstructionSpec::GStar { hub_degree, .. } => {
            let d = hub_degree as usize;
            hub_with_triangle(&mut g, d)?;
            let (w1, w2) = (d + 1, d + 2);
            for b in d + 3..n {
                g.add_edge(w1, b)?;
                g.add_edge(w2, b)?;
                for a in 3..=d {
                    g.add_edge(a, b)?;
                }
            }
        }
    }
    Ok(g)
}

// Hub 0 adjacent to 1..=d, plus the edge 1-2.
fn hub_with_triangle(g: &mut SmallGraph, d: usize) -> Result<()> {
    for v in 1..=d {
        g.add_edge(0, v)?;
    }
    g.add_edge(1, 2)
}

/// Identifies one labeled vertex of several gadgets into a single hub.
///
/// Each entry of `components` is placed inside the hub's neighbourhood, so the
/// hub becomes adjacent to all of its vertices. Components containing a path
/// on four vertices are rejected since the hub would close a 5-cycle through it.
pub fn attach_at_hub(components: &[SmallGraph]) -> Result<SmallGraph> {
    let total: usize = 1 + components.iter().map(|c| c.order()).sum::<usize>();
    let mut g = SmallGraph::empty(total)?;
    let mut offset = 1;
    for (idx, comp) in components.iter().enumerate() {
        if contains_path_order(comp, 4) {
            return Err(Error::validation(format!(
                "component {idx} contains a path on 4 vertices and would create a 5-cycle through the hub"
            )));
        }
        for v in 0..comp.order() {
            g.add_edge(0, offset + v)?;
        }
        for (a, b) in comp.edges() {
            g.add_edge(offset + a, offset + b)?;
        }
        offset += comp.order();
    }
    Ok(g)
}

/// `⌊n/2⌋·⌈n/2⌉^p + ⌈n/2⌉·⌊n/2⌋^p`, the power sum of the balanced complete bipartite graph.
pub fn ep_turan2_closed_form(n: u64, p: u32) -> BigCount {
    let (lo, hi) = (n / 2, n.div_ceil(2));
    BigCount(big_pow(hi, p) * lo + big_pow(lo, p) * hi)
}

/// Complete bipartite graph on the same vertex set with parts
/// `X = (V \ N(u)) ∪ {u}` and `Y = N(u)`.
pub fn bipartite_completion(g: &SmallGraph, u: usize) -> Result<SmallGraph> {
    if u >= g.order() {
        return Err(Error::validation(format!("vertex {u} outside 0..{}", g.order())));
    }
    let y = g.neighbors(u);
    if y == 0 {
        return Err(Error::validation(format!("vertex {u} has no neighbours; the completion would be edgeless")));
    }
    let mut h = SmallGraph::empty(g.order())?;
    for a in (0..g.order()).filter(|&v| y & bit(v) == 0) {
        for b in Bits(y) {
            h.add_edge(a, b)?;
        }
    }
    Ok(h)
}
