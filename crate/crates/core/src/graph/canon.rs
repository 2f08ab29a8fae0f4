//! Canonical labeling by partition refinement and exhaustive individualization.
//!
//! The initial unit partition is refined to an equitable ordered partition
//! (which splits by degree first). When cells remain, every vertex of the first
//! non-singleton cell is individualized in turn and the search recurses. Each
//! leaf is a discrete partition, i.e. a vertex ordering; the canonical graph is
//! the relabeling whose adjacency rows are lexicographically smallest.
//!
//! Vertices of a cell that are twins of an already tried vertex are skipped:
//! the transposition of twins is an automorphism fixing the current partition,
//! so their subtrees yield the same leaf certificates.

use super::{bit, graph6, Bits, SmallGraph, MAX_ORDER};

type Cells = Vec<Vec<usize>>;

fn cell_mask(cell: &[usize]) -> u64 {
    cell.iter().fold(0, |m, &v| m | bit(v))
}

fn refine(rows: &[u64], cells: &mut Cells) {
    loop {
        let masks: Vec<u64> = cells.iter().map(|c| cell_mask(c)).collect();
        let mut next: Cells = Vec::with_capacity(cells.len());
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|m| (rows[v] & m).count_ones()).collect(), v))
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        let changed = next.len() > cells.len();
        *cells = next;
        if !changed {
            break;
        }
    }
}

#[inline]
fn twins(rows: &[u64], a: usize, b: usize) -> bool {
    rows[a] & !bit(b) == rows[b] & !bit(a)
}

struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    best: Option<[u64; MAX_ORDER]>,
}

impl Search<'_> {
    fn leaf(&mut self, cells: &Cells) {
        let mut pos = [0usize; MAX_ORDER];
        for (i, c) in cells.iter().enumerate() {
            pos[c[0]] = i;
        }
        let mut out = [0u64; MAX_ORDER];
        for v in 0..self.n {
            let mut r = 0u64;
            for w in Bits(self.rows[v]) {
                r |= bit(pos[w]);
            }
            out[pos[v]] = r;
        }
        match &self.best {
            Some(b) if b[..self.n] <= out[..self.n] => {}
            _ => self.best = Some(out),
        }
    }

    fn descend(&mut self, mut cells: Cells) {
        refine(self.rows, &mut cells);
        let Some(t) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[t] {
            if tried.iter().any(|&u| twins(self.rows, u, v)) {
                continue;
            }
            tried.push(v);
            let mut child: Cells = Vec::with_capacity(cells.len() + 1);
            child.extend(cells[..t].iter().cloned());
            child.push(vec![v]);
            child.push(cells[t].iter().copied().filter(|&w| w != v).collect());
            child.extend(cells[t + 1..].iter().cloned());
            self.descend(child);
        }
    }
}

/// The canonical relabeling of `g`: isomorphic graphs map to identical graphs.
pub fn canonical_graph(g: &SmallGraph) -> SmallGraph {
    let n = g.order();
    if n == 0 {
        return *g;
    }
    let mut s = Search {
        rows: g.rows(),
        n,
        best: None,
    };
    s.descend(vec![(0..n).collect()]);
    let best = s.best.expect("search reaches at least one leaf");
    SmallGraph::from_rows_unchecked(n, &best[..n])
}

/// Canonical byte string of `g`: the graph6 encoding of [`canonical_graph`].
/// Equal outputs iff the inputs are isomorphic.
pub fn canonical_form(g: &SmallGraph) -> Vec<u8> {
    graph6::encode(&canonical_graph(g)).into_bytes()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn relabeled_cycle_has_same_form() {
        let c5 = SmallGraph::cycle(5).unwrap();
        let h = c5.permuted(&[3, 0, 4, 1, 2]).unwrap();
        assert_ne!(c5, h);
        assert_eq!(canonical_form(&c5), canonical_form(&h));
        assert_ne!(canonical_form(&c5), canonical_form(&SmallGraph::path(5).unwrap()));
    }

    #[test]
    fn eleven_graphs_on_four_vertices() {
        let pairs: Vec<_> = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).collect();
        let mut forms = HashSet::new();
        for mask in 0u32..64 {
            let edges: Vec<_> = (0..6).filter(|b| mask >> b & 1 == 1).map(|b| pairs[b]).collect();
            forms.insert(canonical_form(&SmallGraph::from_edges(4, &edges).unwrap()));
        }
        assert_eq!(forms.len(), 11);
    }

    #[test]
    fn regular_graphs_distinguished() {
        // C6 and two disjoint triangles are both 2-regular on 6 vertices.
        let c6 = SmallGraph::cycle(6).unwrap();
        let tt = SmallGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_ne!(canonical_form(&c6), canonical_form(&tt));
    }

    #[test]
    fn petersen_relabeling() {
        let p = SmallGraph::petersen();
        let q = p.permuted(&[9, 2, 7, 4, 5, 0, 1, 8, 3, 6]).unwrap();
        assert_eq!(canonical_graph(&p), canonical_graph(&q));
    }
}
