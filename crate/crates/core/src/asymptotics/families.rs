//! Degree profiles of the candidate extremal structures and of the upper-bound
//! configurations that the case analysis compares against them.
//!
//! Every term reads as "`count` vertices of degree `degree`", both affine in `n`.
//! The hub degree is `a·n` exactly; lower-order slack is not modelled.

use super::{AffineForm, ParametricFamily};
use crate::error::{Error, Result};
use crate::scalar::{pow, Scalar};

/// Symbolic family identifier with its real parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum Family<T> {
    /// Hub of degree `a·n` with one triangle and `a·n − 2` pendants; the far
    /// side is independent and fully joined to the pendants.
    GPrime { a: T },
    /// As `GPrime` with a two-vertex spine `w1, w2` joined to the rest of the far side.
    GStar { a: T },
    /// Balanced complete bipartite graph, at even or odd `n`.
    Turan2 { odd: bool },
    /// Complete bipartite graph with classes `c·n` and `(1 − c)·n`.
    Biclique { c: T },
    /// Bound for a far-side vertex `v` with `y·n` far-side neighbours.
    Case31Bound { a: T, y: T },
    /// Bound for a far-side vertex with a single neighbour on the hub side.
    Case33Bound { a: T },
    /// Triangle partners of the hub with `x ≥ 1` and `y ≥ 1` extra far-side neighbours.
    Case4Both { a: T, x: T, y: T },
    /// Only one triangle partner with `x ≥ 1` extra far-side neighbours.
    Case4Single { a: T, x: T },
}

fn check_a<T: Scalar>(a: &T) -> Result<()> {
    if *a <= T::zero() || *a >= T::one() {
        return Err(Error::validation(format!("hub proportion a must lie in (0, 1), got {a}")));
    }
    Ok(())
}

fn at_least_one<T: Scalar>(v: &T, name: &str) -> Result<()> {
    if *v < T::one() {
        return Err(Error::validation(format!("{name} must be at least 1, got {v}")));
    }
    Ok(())
}

/// Term list of the requested family.
pub fn family_of<T: Scalar>(spec: &Family<T>) -> Result<ParametricFamily<T>> {
    let k = |c: i64| <T as Scalar>::from_i64(c);
    let lin = |s: &T, c: i64| AffineForm::linear(s.clone(), c);
    let cst = |c: i64| AffineForm::constant(k(c));
    let one = T::one();
    let fam = match spec {
        Family::GPrime { a } => {
            check_a(a)?;
            let b = one - a.clone();
            ParametricFamily::new(
                "gprime",
                vec![
                    (cst(1), lin(a, 0)),
                    (cst(2), cst(2)),
                    (lin(a, -2), lin(&b, 0)),
                    (lin(&b, -1), lin(a, -2)),
                ],
            )
        }
        Family::GStar { a } => {
            check_a(a)?;
            let b = one - a.clone();
            ParametricFamily::new(
                "gstar",
                vec![
                    (lin(&b, -2), lin(a, 0)),
                    (lin(a, -2), lin(&b, -2)),
                    (cst(2), lin(&b, -3)),
                    (cst(2), cst(2)),
                ],
            )
        }
        Family::Turan2 { odd } => {
            let half = one.clone() / k(2);
            let (lo, hi) = if *odd {
                (AffineForm::new(half.clone(), -half.clone()), AffineForm::new(half.clone(), half))
            } else {
                (lin(&half, 0), lin(&half, 0))
            };
            ParametricFamily::new(if *odd { "turan2-odd" } else { "turan2-even" }, vec![(lo.clone(), hi.clone()), (hi, lo)])
        }
        Family::Biclique { c } => {
            check_a(c)?;
            let b = one - c.clone();
            ParametricFamily::new("biclique", vec![(lin(c, 0), lin(&b, 0)), (lin(&b, 0), lin(c, 0))])
        }
        Family::Case31Bound { a, y } => {
            check_a(a)?;
            let b = one - a.clone();
            if *y <= T::zero() || *y > b {
                return Err(Error::validation(format!("y must satisfy 0 < y <= 1 - a, got y={y}")));
            }
            let rest = b.clone() - y.clone();
            ParametricFamily::new(
                "case3.1-bound",
                vec![
                    (cst(1), lin(a, 0)),
                    (cst(2), cst(2)),
                    (cst(1), lin(a, 0)),
                    (lin(&rest, -2), lin(a, 0)),
                    (lin(a, -2), lin(&rest, 0)),
                    (lin(y, -1), lin(&rest, 0)),
                    (cst(1), lin(&b, -2)),
                ],
            )
        }
        Family::Case33Bound { a } => {
            check_a(a)?;
            let b = one - a.clone();
            ParametricFamily::new(
                "case3.3-bound",
                vec![
                    (cst(2), cst(2)),
                    (cst(1), lin(a, 0)),
                    (cst(1), lin(&b, 0)),
                    (lin(a, -3), cst(1)),
                    (lin(&b, -1), lin(&b, -1)),
                ],
            )
        }
        Family::Case4Both { a, x, y } => {
            check_a(a)?;
            at_least_one(x, "x")?;
            at_least_one(y, "y")?;
            let b = one - a.clone();
            let two = k(2);
            let three = k(3);
            let xy = x.clone() + y.clone();
            ParametricFamily::new(
                "case4-both",
                vec![
                    (cst(1), AffineForm::constant(two.clone() + x.clone())),
                    (cst(1), AffineForm::constant(two.clone() + y.clone())),
                    (cst(1), lin(a, 0)),
                    (AffineForm::constant(xy.clone()), cst(2)),
                    (lin(a, -2), AffineForm::new(b.clone(), -(two + xy.clone()))),
                    (AffineForm::new(b.clone(), -(three.clone() + xy)), lin(a, 0)),
                    (cst(1), AffineForm::new(b.clone(), -(three.clone() + y.clone()))),
                    (cst(1), AffineForm::new(b, -(three + x.clone()))),
                ],
            )
        }
        Family::Case4Single { a, x } => {
            check_a(a)?;
            at_least_one(x, "x")?;
            let b = one - a.clone();
            ParametricFamily::new(
                "case4-single",
                vec![
                    (AffineForm::constant(x.clone()), cst(2)),
                    (cst(1), cst(2)),
                    (cst(1), AffineForm::constant(k(2) + x.clone())),
                    (cst(1), lin(a, 0)),
                    (lin(a, -2), AffineForm::new(b.clone(), -(k(1) + x.clone()))),
                    (AffineForm::new(b.clone(), -(k(2) + x.clone())), lin(a, -1)),
                    (cst(1), lin(&b, -2)),
                ],
            )
        }
    };
    Ok(fam)
}

/// Coefficient of `ω·n^p` when the hub-side degree of a far vertex falls
/// short of `a·n` by an unbounded `ω = o(n)`: `(1 − a)^p − a^p`.
pub fn omega_coefficient<T: Scalar>(a: &T, p: u32) -> Result<T> {
    check_a(a)?;
    Ok(pow(&(T::one() - a.clone()), p) - pow(a, p))
}
