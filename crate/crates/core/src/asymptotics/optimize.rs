use num_bigint::BigUint;
use num_traits::{Float, FromPrimitive};

use crate::error::{Error, Result};
use crate::graph::big_pow;

/// Points of the coarse bracketing grid on `[1/2, 1]`.
pub const GRID_POINTS: usize = 1024;

const MAX_GOLDEN_STEPS: usize = 400;

/// `x(1−x)^p + x^p(1−x)`, the leading coefficient of `e_p(K_{xn,(1−x)n})`.
pub fn objective<F: Float>(x: F, p: u32) -> F {
    let one = F::one();
    let p = p as i32;
    x * (one - x).powi(p) + x.powi(p) * (one - x)
}

/// Maximizer of [`objective`] on `[1/2, 1]`, to within `tol`.
///
/// A uniform grid picks the best cell, golden-section search refines inside
/// its neighbours, and the result is then checked against the endpoint
/// `x = 1/2` directly: by the symmetry `f(x) = f(1 − x)` the derivative
/// vanishes there, and for small `p` the endpoint is the maximum.
pub fn optimize_c<F: Float + FromPrimitive>(p: u32, tol: F) -> Result<F> {
    if p == 0 {
        return Err(Error::validation("p must be at least 1"));
    }
    if tol <= F::zero() || !tol.is_finite() {
        return Err(Error::validation("tolerance must be positive and finite"));
    }
    let c = |v: f64| F::from_f64(v).expect("float constant");
    let half = c(0.5);
    let h = half / c(GRID_POINTS as f64);
    let f = |x: F| objective(x, p);

    let mut best_k = 0;
    let mut best_v = f(half);
    for k in 1..=GRID_POINTS {
        let v = f(half + h * c(k as f64));
        if v > best_v {
            best_k = k;
            best_v = v;
        }
    }
    let mut lo = half + h * c(best_k.saturating_sub(1) as f64);
    let mut hi = (half + h * c((best_k + 1) as f64)).min(F::one());

    let inv_phi = (c(5.0).sqrt() - F::one()) / c(2.0);
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    let mut steps = 0;
    while hi - lo > tol && steps < MAX_GOLDEN_STEPS {
        if f1 >= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
        steps += 1;
    }
    let x = (lo + hi) / c(2.0);
    Ok(if f(half) >= f(x) { half } else { x })
}

fn biclique_ep(n: u64, b: u64, p: u32) -> BigUint {
    big_pow(n - b, p) * b + big_pow(b, p) * (n - b)
}

/// Class size `b` maximizing `e_p(K_{b, n−b})` over `1 <= b <= n − 1`, exact.
///
/// The objective is symmetric under `b ↦ n − b`; the larger class size of a
/// maximizing split is returned, so `b >= n/2`.
pub fn best_biclique_split(n: u64, p: u32) -> Result<u64> {
    if n < 2 {
        return Err(Error::validation("a biclique split needs n >= 2"));
    }
    if p == 0 {
        return Err(Error::validation("p must be at least 1"));
    }
    let mut best = n.div_ceil(2);
    let mut best_v = biclique_ep(n, best, p);
    for b in best + 1..n {
        let v = biclique_ep(n, b, p);
        if v >= best_v {
            best = b;
            best_v = v;
        }
    }
    Ok(best)
}
