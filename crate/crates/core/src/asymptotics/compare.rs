use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{expand_ep, NPolynomial, ParametricFamily};
use crate::Rational;

/// Large-`n` comparison of two families' power sums.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FamilyComparison {
    /// `Greater` when the first family is eventually larger.
    #[serde(serialize_with = "ser_ordering")]
    pub ordering: Ordering,
    /// Highest power of `n` where the expansions differ.
    pub deciding_power: Option<usize>,
    /// Coefficient of the difference (first minus second) at `deciding_power`.
    #[serde(serialize_with = "ser_rational")]
    pub gap: Rational,
    /// Every integer `n >= threshold` has the sign given by `ordering`.
    #[serde(serialize_with = "ser_opt_bigint")]
    pub threshold: Option<BigInt>,
    #[serde(skip)]
    pub difference: NPolynomial<Rational>,
}

fn ser_ordering<S: serde::Serializer>(o: &Ordering, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(match o {
        Ordering::Less => "second",
        Ordering::Equal => "equal",
        Ordering::Greater => "first",
    })
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn ser_opt_bigint<S: serde::Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(b) => s.serialize_str(&b.to_string()),
        None => s.serialize_none(),
    }
}

/// Compares `e_p` of two families by their coefficient vectors, top power down.
///
/// The threshold comes from the bound `|Σ_{k<m} d_k n^k| <= S·n^(m−1)` with
/// `S = Σ_{k<m} |d_k|`, valid for `n >= 1`: the leading term wins once
/// `n > S / |d_m|`.
pub fn compare_families(
    first: &ParametricFamily<Rational>,
    second: &ParametricFamily<Rational>,
    p: u32,
) -> FamilyComparison {
    let diff = &expand_ep(first, p) - &expand_ep(second, p);
    let Some(m) = diff.degree() else {
        return FamilyComparison {
            ordering: Ordering::Equal,
            deciding_power: None,
            gap: Rational::zero(),
            threshold: None,
            difference: diff,
        };
    };
    let lead = diff.coefficient(m);
    let lower: Rational = diff.coeffs()[..m].iter().map(|c| c.abs()).sum();
    let bound = (lower / lead.abs()).floor().to_integer() + BigInt::one();
    let ordering = if lead.is_positive() { Ordering::Greater } else { Ordering::Less };
    FamilyComparison {
        ordering,
        deciding_power: Some(m),
        gap: lead,
        threshold: Some(bound.max(BigInt::one())),
        difference: diff,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asymptotics::{family_of, rational, Family};

    #[test]
    fn turan_beats_gprime_at_half() {
        let gp = family_of(&Family::GPrime { a: rational(1, 2) }).unwrap();
        let t2 = family_of(&Family::Turan2 { odd: false }).unwrap();
        let cmp = compare_families(&gp, &t2, 2);
        assert_eq!(cmp.ordering, Ordering::Less);
        assert_eq!(cmp.deciding_power, Some(2));
        assert_eq!(cmp.gap, rational(-3, 2));
        // independent check by evaluation at n = 10^4
        let n = rational(10_000, 1);
        assert!(gp.eval_ep(&n, 2) < t2.eval_ep(&n, 2));
    }

    #[test]
    fn threshold_is_certified() {
        let gs = family_of(&Family::GStar { a: rational(3, 5) }).unwrap();
        let gp = family_of(&Family::GPrime { a: rational(3, 5) }).unwrap();
        for p in 2..6 {
            let cmp = compare_families(&gs, &gp, p);
            assert_eq!(cmp.deciding_power, Some(p as usize));
            let n0 = cmp.threshold.clone().unwrap();
            for extra in 0..50i64 {
                let n = Rational::from_integer(&n0 + extra);
                let d = cmp.difference.eval(&n);
                assert_eq!(d.is_positive(), cmp.ordering == Ordering::Greater, "p={p} n={n}");
                assert!(!d.is_zero());
            }
        }
    }

    #[test]
    fn equal_families() {
        let gp = family_of(&Family::GPrime { a: rational(7, 10) }).unwrap();
        let cmp = compare_families(&gp, &gp, 4);
        assert_eq!(cmp.ordering, Ordering::Equal);
        assert_eq!(cmp.threshold, None);
    }
}
