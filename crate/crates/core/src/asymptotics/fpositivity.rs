//! The gap `f(a, y)` between the leading coefficient of the hub-extremal
//! structure and that of the bound for a far-side vertex with `y·n` far-side
//! neighbours:
//!
//! `f(a, y) = a(1−a)^p + a^p(1−a) − [(y+a)(1−a−y)^p + (1−a−y)a^p]`.
//!
//! `f` is homogeneous of degree `p + 1` in `(a, y, 1)`, so on a grid with
//! common denominator `m` it is evaluated exactly in integers as
//! `F(A, Y, m) = m^(p+1)·f(A/m, Y/m)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{pow, Ring};
use crate::Rational;

/// `f` with the constant `1` replaced by `one`, so integer grids can use a
/// scaled unit.
pub fn f_homogeneous<T: Ring>(a: &T, y: &T, one: &T, p: u32) -> T {
    let b = one.clone() - a.clone();
    let rest = b.clone() - y.clone();
    let ap = pow(a, p);
    let lead = a.clone() * pow(&b, p) + ap.clone() * b;
    let bound = (y.clone() + a.clone()) * pow(&rest, p) + rest * ap;
    lead - bound
}

/// `f(a, y)` on its domain `1/2 <= a < 1`, `0 < y <= 1 − a`.
pub fn f_value<T: Ring>(a: &T, y: &T, p: u32) -> Result<T> {
    let one = T::one();
    let two = one.clone() + one.clone();
    if two * a.clone() < one || *a >= one {
        return Err(Error::validation(format!("a must satisfy 1/2 <= a < 1, got {a}")));
    }
    if *y <= T::zero() || *y > one.clone() - a.clone() {
        return Err(Error::validation(format!("y must satisfy 0 < y <= 1 - a, got {y}")));
    }
    Ok(f_homogeneous(a, y, &one, p))
}

/// Outcome of a grid sweep of `f`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FPositivityReport {
    pub p: u32,
    #[serde(serialize_with = "ser_display")]
    pub step: Rational,
    pub points: u64,
    #[serde(serialize_with = "ser_display")]
    pub min_value: Rational,
    #[serde(serialize_with = "ser_pair")]
    pub argmin: (Rational, Rational),
    pub pass: bool,
}

fn ser_display<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn ser_pair<S: serde::Serializer>(r: &(Rational, Rational), s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(2))?;
    seq.serialize_element(&r.0.to_string())?;
    seq.serialize_element(&r.1.to_string())?;
    seq.end()
}

// Minimum of F over the scaled grid: rows A = half + i·s < m, columns
// Y = j·s (j >= 1) with Y <= m − A. Returns (F, A, Y, points).
fn sweep<T>(half: T, s: T, m: T, p: u32) -> (T, T, T, u64)
where
    T: Ring + Send + Sync,
{
    let mut rows = Vec::new();
    let mut a = half;
    while a < m {
        rows.push(a.clone());
        a = a + s.clone();
    }
    let per_row: Vec<Option<(T, T, u64)>> = rows
        .par_iter()
        .map(|a| {
            let mut best: Option<(T, T)> = None;
            let mut count = 0u64;
            let limit = m.clone() - a.clone();
            let mut y = s.clone();
            while y <= limit {
                let v = f_homogeneous(a, &y, &m, p);
                count += 1;
                if best.as_ref().is_none_or(|(bv, _)| v < *bv) {
                    best = Some((v, y.clone()));
                }
                y = y + s.clone();
            }
            best.map(|(v, y)| (v, y, count))
        })
        .collect();
    // Deterministic reduction in row order; ties keep the earliest point.
    let mut out: Option<(T, T, T)> = None;
    let mut points = 0;
    for (a, row) in rows.into_iter().zip(per_row) {
        if let Some((v, y, c)) = row {
            points += c;
            if out.as_ref().is_none_or(|(bv, _, _)| v < *bv) {
                out = Some((v, a, y));
            }
        }
    }
    let (v, a, y) = out.expect("grid contains at least one point");
    (v, a, y, points)
}

/// Sweeps `a ∈ {1/2, 1/2 + step, …} ∩ [1/2, 1)` and `y ∈ {step, 2·step, …} ∩ (0, 1 − a]`,
/// evaluating `f` exactly. Passes iff the minimum is strictly positive.
pub fn verify_f_positive(p: u32, step: &Rational) -> Result<FPositivityReport> {
    if !step.is_positive() || *step > Rational::new(1.into(), 2.into()) {
        return Err(Error::validation(format!("step must lie in (0, 1/2], got {step}")));
    }
    // common denominator of 1/2 and the step
    let m = step.denom().lcm(&BigInt::from(2));
    let s = (step * Rational::from_integer(m.clone())).to_integer();
    let half: BigInt = &m / 2;
    let scale = num_traits::pow(m.clone(), p as usize + 1);

    // 4·m^(p+1) bounds |F| on the domain; use i128 when that fits.
    let small = (&scale * 4u32).to_i128().is_some() && m.to_i128().is_some();
    let (v, a, y, points) = if small {
        let (v, a, y, pts) = sweep(
            half.to_i128().unwrap(),
            s.to_i128().unwrap(),
            m.to_i128().unwrap(),
            p,
        );
        (BigInt::from_i128(v).unwrap(), BigInt::from(a), BigInt::from(y), pts)
    } else {
        sweep(half, s, m.clone(), p)
    };
    let min_value = Rational::new(v, scale);
    let argmin = (Rational::new(a, m.clone()), Rational::new(y, m));
    Ok(FPositivityReport {
        p,
        step: step.clone(),
        points,
        pass: min_value > Rational::zero(),
        min_value,
        argmin,
    })
}
