//! Degree power sums `e_p(G) = Σ d_i^p` of C5-free graphs.
//!
//! * [`graph`]: bitmask graphs, exact power sums, cycle/path detection,
//!   canonical forms and graph6.
//! * [`constructions`]: the graph families of the extremal argument, explicit
//!   or as degree profiles at any order.
//! * [`asymptotics`]: polynomial-in-`n` expansion of family power sums,
//!   coefficient comparisons and the optimizer for the extremal split.
//! * [`search`]: exhaustive computation of `ex_p(n, C5)` at small `n` and
//!   structural validators.
//! * [`claims`]: named verification checks with JSON reports.

pub mod asymptotics;
pub mod claims;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod scalar;
pub mod search;

pub use error::{Error, Result};
pub use graph::{BigCount, DegreeSequence, SmallGraph};

/// Exact rational scalar used for every coefficient claim.
pub type Rational = num_rational::BigRational;

/// Polynomial in `n` with exact rational coefficients.
pub type ExactPolynomial = asymptotics::NPolynomial<Rational>;
/// Parametric family with exact rational slopes and intercepts.
pub type ExactFamily = asymptotics::ParametricFamily<Rational>;
/// Affine form `slope·n + intercept` over the rationals.
pub type ExactAffine = asymptotics::AffineForm<Rational>;

/// Floating-point counterparts for quick numerical exploration.
pub type FloatPolynomial = asymptotics::NPolynomial<f64>;
pub type FloatFamily = asymptotics::ParametricFamily<f64>;
