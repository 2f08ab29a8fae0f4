//! Structural checks around a hub vertex `u` of a `C_5`-free graph.
//!
//! `A = N(u)` splits into the components of `G[A]` (gadgets): isolated
//! vertices are `S1`, single edges are `S2`. `B` is everything outside
//! `{u} ∪ A`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, contains_cycle, contains_path_order, Bits, SmallGraph};

/// Component census of `G[N(hub)]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub hub: usize,
    pub isolated: usize,
    pub single_edge: usize,
    /// Orders of the remaining components, ascending.
    pub other: Vec<usize>,
    /// No component contains a path on four vertices.
    pub valid: bool,
}

impl DecompositionReport {
    pub fn component_count(&self) -> usize {
        self.isolated + self.single_edge + self.other.len()
    }
}

fn check_vertex(g: &SmallGraph, u: usize) -> Result<()> {
    if u >= g.order() {
        return Err(Error::validation(format!("vertex {u} out of range for order {}", g.order())));
    }
    Ok(())
}

fn check_c5_free(g: &SmallGraph) -> Result<()> {
    if contains_cycle(g, 5) {
        return Err(Error::validation("graph contains a 5-cycle"));
    }
    Ok(())
}

/// Classifies the components of `G[N(u)]`.
pub fn neighborhood_decomposition(g: &SmallGraph, u: usize) -> Result<DecompositionReport> {
    check_vertex(g, u)?;
    check_c5_free(g)?;
    let nbhd = g.induced(g.neighbors(u));
    let mut report = DecompositionReport {
        hub: u,
        isolated: 0,
        single_edge: 0,
        other: Vec::new(),
        valid: true,
    };
    for comp in nbhd.components() {
        match comp.count_ones() {
            1 => report.isolated += 1,
            2 => report.single_edge += 1,
            k => {
                report.other.push(k as usize);
                if contains_path_order(&nbhd.induced(comp), 4) {
                    report.valid = false;
                }
            }
        }
    }
    report.other.sort_unstable();
    Ok(report)
}

/// Which case of the attachment rules a far vertex or far edge matched.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Attachment {
    /// No neighbour in `N(u)`.
    None,
    /// Neighbours only in `S1` gadgets.
    S1Only,
    /// One or two neighbours, all inside a single `S2` gadget.
    SingleS2,
    /// A single neighbour inside a larger gadget.
    SingleVertex,
}

/// A pattern the permissive reading accepts but a strict one might not.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AmbiguityFlag {
    pub vertex: usize,
    /// Number of distinct `S1` gadgets the vertex attaches to.
    pub s1_gadgets: usize,
}

/// The first far vertex or far edge that matched no case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// One vertex for the per-vertex rule, two for the per-edge rule.
    pub vertices: Vec<usize>,
    /// Neighbours in `N(u)` of each listed vertex.
    pub hub_side: Vec<Vec<usize>>,
    pub rule: String,
}

/// Outcome of [`validate_observations`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObservationReport {
    pub hub: usize,
    pub pass: bool,
    pub far_vertices: usize,
    pub far_edges: usize,
    /// Case matched by each far vertex, in vertex order.
    pub cases: Vec<(usize, Attachment)>,
    pub flags: Vec<AmbiguityFlag>,
    pub counterexample: Option<Counterexample>,
}

fn list(mask: u64) -> Vec<usize> {
    Bits(mask).collect()
}

/// Checks how every far vertex and far edge attaches to the gadgets at `u`.
///
/// Far vertex `w` must have no neighbour in `N(u)`, or neighbours only in
/// `S1` gadgets, or neighbours only inside one `S2` gadget, or exactly one
/// neighbour in `N(u)`. A far edge `w1w2` must have both ends attached to the
/// same single vertex, or one end with no neighbour in `N(u)`.
///
/// Requires `g` to be `C_5`-free, `u` of maximum degree and `G[N(u)]` to
/// contain an edge. A vertex attached to two or more `S1` gadgets passes and
/// is flagged.
pub fn validate_observations(g: &SmallGraph, u: usize) -> Result<ObservationReport> {
    check_vertex(g, u)?;
    check_c5_free(g)?;
    if g.degree(u) != g.max_degree() {
        return Err(Error::validation(format!(
            "vertex {u} has degree {} below the maximum {}",
            g.degree(u),
            g.max_degree()
        )));
    }
    let a = g.neighbors(u);
    if Bits(a).all(|v| g.neighbors(v) & a == 0) {
        return Err(Error::validation(format!("no edge inside the neighbourhood of {u}")));
    }
    // gadget masks of G[N(u)], in original labels
    let mut gadget_of = [u64::MAX; 64];
    let mut gadgets = Vec::new();
    let mut left = a;
    while left != 0 {
        let start = left.trailing_zeros() as usize;
        let mut comp = bit(start);
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= g.neighbors(v) & a;
            }
            frontier = next & !comp;
            comp |= next;
        }
        for v in Bits(comp) {
            gadget_of[v] = gadgets.len() as u64;
        }
        gadgets.push(comp);
        left &= !comp;
    }
    let far = (0..g.order()).filter(|&w| w != u && a & bit(w) == 0);

    let mut report = ObservationReport {
        hub: u,
        pass: true,
        far_vertices: 0,
        far_edges: 0,
        cases: Vec::new(),
        flags: Vec::new(),
        counterexample: None,
    };
    let mut far_mask = 0u64;
    for w in far {
        far_mask |= bit(w);
        report.far_vertices += 1;
        let na = g.neighbors(w) & a;
        let mut touched: Vec<u64> = Bits(na).map(|v| gadget_of[v]).collect();
        touched.sort_unstable();
        touched.dedup();
        let sizes: Vec<u32> = touched.iter().map(|&i| gadgets[i as usize].count_ones()).collect();
        let case = if na == 0 {
            Some(Attachment::None)
        } else if sizes.iter().all(|&s| s == 1) {
            if touched.len() >= 2 {
                report.flags.push(AmbiguityFlag {
                    vertex: w,
                    s1_gadgets: touched.len(),
                });
            }
            Some(Attachment::S1Only)
        } else if touched.len() == 1 && sizes[0] == 2 {
            Some(Attachment::SingleS2)
        } else if na.count_ones() == 1 {
            Some(Attachment::SingleVertex)
        } else {
            None
        };
        match case {
            Some(c) => report.cases.push((w, c)),
            None => {
                report.pass = false;
                report.counterexample.get_or_insert(Counterexample {
                    vertices: vec![w],
                    hub_side: vec![list(na)],
                    rule: "far vertex attachment".into(),
                });
            }
        }
    }
    for w1 in Bits(far_mask) {
        for w2 in Bits(g.neighbors(w1) & far_mask) {
            if w2 <= w1 {
                continue;
            }
            report.far_edges += 1;
            let (n1, n2) = (g.neighbors(w1) & a, g.neighbors(w2) & a);
            let same_single = n1 == n2 && n1.count_ones() == 1;
            if !(same_single || n1 == 0 || n2 == 0) {
                report.pass = false;
                report.counterexample.get_or_insert(Counterexample {
                    vertices: vec![w1, w2],
                    hub_side: vec![list(n1), list(n2)],
                    rule: "far edge attachment".into(),
                });
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build, ConstructionSpec};

    fn edges(n: usize, e: &[(usize, usize)]) -> SmallGraph {
        SmallGraph::from_edges(n, e).unwrap()
    }

    #[test]
    fn decomposition_examples() {
        let f2 = edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]);
        let r = neighborhood_decomposition(&f2, 0).unwrap();
        assert_eq!((r.isolated, r.single_edge, r.other.clone(), r.valid), (0, 2, vec![], true));
        let star = SmallGraph::complete_bipartite(1, 5).unwrap();
        let r = neighborhood_decomposition(&star, 0).unwrap();
        assert_eq!((r.isolated, r.single_edge, r.component_count()), (5, 0, 5));
        // girth 5: neighbourhoods are independent, but the 5-cycles fail the precondition
        let pet = SmallGraph::petersen();
        assert!(neighborhood_decomposition(&pet, 0).is_err());
        let c6 = SmallGraph::cycle(6).unwrap();
        for u in 0..6 {
            let r = neighborhood_decomposition(&c6, u).unwrap();
            assert_eq!((r.isolated, r.single_edge, r.other.len()), (2, 0, 0));
        }
        // K4 plus a pendant: N(0) holds a triangle
        let g = edges(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4)]);
        let r = neighborhood_decomposition(&g, 0).unwrap();
        assert_eq!((r.isolated, r.other.clone(), r.valid), (1, vec![3], true));
    }

    #[test]
    fn decomposition_rejects_c5() {
        let c5 = SmallGraph::cycle(5).unwrap();
        assert!(matches!(neighborhood_decomposition(&c5, 0), Err(Error::Validation(_))));
        assert!(neighborhood_decomposition(&SmallGraph::path(3).unwrap(), 3).is_err());
    }

    #[test]
    fn constructions_pass() {
        for spec in [
            ConstructionSpec::GPrime { n: 12, hub_degree: 6 },
            ConstructionSpec::GStar { n: 14, hub_degree: 7 },
        ] {
            let g = build(&spec).unwrap();
            let r = validate_observations(&g, 0).unwrap();
            assert!(r.pass, "{spec}: {r:?}");
            assert_eq!(r.far_vertices + g.degree(0) + 1, g.order());
        }
    }

    #[test]
    fn preconditions() {
        let c6 = SmallGraph::cycle(6).unwrap();
        assert!(matches!(validate_observations(&c6, 0), Err(Error::Validation(_))));
        // vertex 4 is a pendant, not of maximum degree
        let g = edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (3, 4)]);
        assert!(validate_observations(&g, 4).is_err());
    }

    #[test]
    fn multi_s1_attachment_is_flagged() {
        // hub 0 with triangle 0-1-2 and pendants 3, 4; far vertex 5 sees 3 and 4
        let g = edges(6, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (5, 3), (5, 4)]);
        let r = validate_observations(&g, 0).unwrap();
        assert!(r.pass);
        assert_eq!(r.flags, vec![AmbiguityFlag { vertex: 5, s1_gadgets: 2 }]);
    }
}
