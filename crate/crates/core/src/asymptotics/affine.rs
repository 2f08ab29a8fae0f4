use std::fmt;

use num_traits::{ToPrimitive, Zero};

use crate::constructions::DegreeProfile;
use crate::error::{Error, Result};
use crate::scalar::{pow, Scalar};
use crate::Rational;

/// `slope·n + intercept`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineForm<T> {
    pub slope: T,
    pub intercept: T,
}

impl<T: Scalar> AffineForm<T> {
    pub fn new(slope: T, intercept: T) -> Self {
        AffineForm { slope, intercept }
    }

    pub fn constant(c: T) -> Self {
        AffineForm::new(T::zero(), c)
    }

    /// `slope·n + c` for an integer constant.
    pub fn linear(slope: T, c: i64) -> Self {
        AffineForm::new(slope, <T as Scalar>::from_i64(c))
    }

    pub fn eval(&self, n: &T) -> T {
        self.slope.clone() * n.clone() + self.intercept.clone()
    }
}

impl<T: fmt::Display + Zero> fmt::Display for AffineForm<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.slope.is_zero(), self.intercept.is_zero()) {
            (true, _) => write!(f, "{}", self.intercept),
            (false, true) => write!(f, "({})n", self.slope),
            (false, false) => write!(f, "({})n + ({})", self.slope, self.intercept),
        }
    }
}

/// Symbolic degree profile: each term contributes `count(n)` vertices of
/// degree `degree(n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ParametricFamily<T> {
    pub name: String,
    pub terms: Vec<(AffineForm<T>, AffineForm<T>)>,
}

impl<T: Scalar> ParametricFamily<T> {
    pub fn new(name: impl Into<String>, terms: Vec<(AffineForm<T>, AffineForm<T>)>) -> Self {
        ParametricFamily {
            name: name.into(),
            terms,
        }
    }

    /// Direct evaluation of `Σ count(n)·degree(n)^p`, term by term.
    pub fn eval_ep(&self, n: &T, p: u32) -> T {
        self.terms.iter().fold(T::zero(), |acc, (count, degree)| {
            acc + count.eval(n) * pow(&degree.eval(n), p)
        })
    }
}

impl ParametricFamily<Rational> {
    /// Instantiates the family at integer order `n` as a degree profile.
    ///
    /// Fails unless every count and degree is a non-negative integer there.
    pub fn profile_at(&self, n: u64) -> Result<DegreeProfile> {
        let nn = Rational::from_integer(n.into());
        let as_u64 = |v: Rational, what: &str| -> Result<u64> {
            if !v.is_integer() {
                return Err(Error::validation(format!("{} has non-integer {what} {v} at n={n}", self.name)));
            }
            v.to_integer()
                .to_u64()
                .ok_or_else(|| Error::validation(format!("{} has negative {what} {v} at n={n}", self.name)))
        };
        let entries = self
            .terms
            .iter()
            .map(|(c, d)| Ok((as_u64(c.eval(&nn), "count")?, as_u64(d.eval(&nn), "degree")?)))
            .collect::<Result<Vec<_>>>()?;
        let prof = DegreeProfile::new(entries)?;
        if prof.n != n {
            return Err(Error::validation(format!(
                "{} has {} vertices at n={n}, not n",
                self.name, prof.n
            )));
        }
        Ok(prof)
    }
}
