use std::fmt;
use std::ops::{Add, Neg, Sub};


use super::ParametricFamily;
use crate::scalar::{binomial, pow, Scalar};

/// Polynomial in `n`; `coeffs[k]` multiplies `n^k`. Trailing zeros are trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NPolynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> NPolynomial<T> {
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        NPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        NPolynomial { coeffs: Vec::new() }
    }

    /// Coefficient of `n^k`; zero beyond the degree.
    pub fn coefficient(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation.
    pub fn eval(&self, n: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * n.clone() + c.clone())
    }

    fn add_at(&mut self, k: usize, v: T) {
        if self.coeffs.len() <= k {
            self.coeffs.resize(k + 1, T::zero());
        }
        self.coeffs[k] = self.coeffs[k].clone() + v;
    }

    fn trimmed(self) -> Self {
        Self::from_coeffs(self.coeffs)
    }
}

impl<T: Scalar> Add for &NPolynomial<T> {
    type Output = NPolynomial<T>;

    fn add(self, rhs: Self) -> NPolynomial<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        NPolynomial::from_coeffs((0..len).map(|k| self.coefficient(k) + rhs.coefficient(k)).collect())
    }
}

impl<T: Scalar> Neg for &NPolynomial<T> {
    type Output = NPolynomial<T>;

    fn neg(self) -> NPolynomial<T> {
        NPolynomial {
            coeffs: self.coeffs.iter().map(|c| T::zero() - c.clone()).collect(),
        }
    }
}

impl<T: Scalar> Sub for &NPolynomial<T> {
    type Output = NPolynomial<T>;

    fn sub(self, rhs: Self) -> NPolynomial<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for NPolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})n")?,
                _ => write!(f, "({c})n^{k}")?,
            }
        }
        Ok(())
    }
}

/// Expands `Σ count·degree^p` of `fam` into powers of `n` by the binomial
/// theorem. The result has degree at most `p + 1`.
pub fn expand_ep<T: Scalar>(fam: &ParametricFamily<T>, p: u32) -> NPolynomial<T> {
    let binoms: Vec<T> = (0..=p).map(|k| binomial(p, k)).collect();
    let mut out = NPolynomial::zero();
    for (count, degree) in &fam.terms {
        // (s·n + b)^p = Σ_k C(p,k) s^k b^(p-k) n^k
        let power: Vec<T> = (0..=p)
            .map(|k| {
                binoms[k as usize].clone() * pow(&degree.slope, k) * pow(&degree.intercept, p - k)
            })
            .collect();
        for (k, term) in power.into_iter().enumerate() {
            if term.is_zero() {
                continue;
            }
            out.add_at(k + 1, count.slope.clone() * term.clone());
            out.add_at(k, count.intercept.clone() * term);
        }
    }
    out.trimmed()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asymptotics::{rational, AffineForm};
    use crate::Rational;
    use num_traits::Zero;

    #[test]
    fn expands_single_term() {
        // (n + 1)·(2n - 1)^2 = 4n^3 + 0n^2 - 3n + 1
        let fam = ParametricFamily::new(
            "t",
            vec![(AffineForm::linear(rational(1, 1), 1), AffineForm::linear(rational(2, 1), -1))],
        );
        let poly = expand_ep(&fam, 2);
        assert_eq!(
            poly.coeffs(),
            &[rational(1, 1), rational(-3, 1), Rational::zero(), rational(4, 1)]
        );
        assert_eq!(poly.coefficient(9), Rational::zero());
        assert_eq!(poly.degree(), Some(3));
    }

    #[test]
    fn float_and_exact_agree() {
        let exact = ParametricFamily::new(
            "t",
            vec![(AffineForm::linear(rational(1, 3), -2), AffineForm::linear(rational(2, 3), 5))],
        );
        let float = ParametricFamily::new(
            "t",
            vec![(AffineForm::linear(1.0 / 3.0, -2), AffineForm::linear(2.0 / 3.0, 5))],
        );
        let pe = expand_ep(&exact, 4);
        let pf = expand_ep(&float, 4);
        for k in 0..=5 {
            let e = crate::scalar::Scalar::to_f64_lossy(&pe.coefficient(k));
            assert!((e - pf.coefficient(k)).abs() < 1e-9 * e.abs().max(1.0));
        }
    }

    #[test]
    fn arithmetic_trims() {
        let a = NPolynomial::from_coeffs(vec![rational(1, 1), rational(2, 1)]);
        let d = &a - &a;
        assert!(d.is_zero());
        assert_eq!(d.degree(), None);
        assert_eq!(a.eval(&rational(3, 1)), rational(7, 1));
    }
}
