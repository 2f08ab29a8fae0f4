use super::{bit, low_mask, Bits, SmallGraph};

/// Part sizes `(a, b)` with `a <= b` if `g` is `K_{a,b}` with both parts
/// nonempty; `None` otherwise. The empty graph and `K_1` are not bicliques.
pub fn is_complete_bipartite(g: &SmallGraph) -> Option<(usize, usize)> {
    let n = g.order();
    if n < 2 {
        return None;
    }
    let all = low_mask(n);
    // In K_{a,b} each vertex's neighbourhood is exactly the other part.
    let x_side = g.neighbors(0);
    if x_side == 0 {
        return None;
    }
    let y_side = all & !x_side;
    for v in Bits(y_side) {
        if g.neighbors(v) != x_side {
            return None;
        }
    }
    for v in Bits(x_side) {
        if g.neighbors(v) != y_side {
            return None;
        }
    }
    debug_assert!(y_side & bit(0) != 0);
    let (a, b) = (y_side.count_ones() as usize, x_side.count_ones() as usize);
    Some((a.min(b), a.max(b)))
}
