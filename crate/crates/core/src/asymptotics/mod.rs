//! Exact expansion of `e_p` for parametric graph families as polynomials in
//! the order `n`, and the coefficient checks built on it.
//!
//! A family is a list of `(count, degree)` pairs, each an affine form in `n`.
//! Its power sum `Σ count·degree^p` is a polynomial of degree at most `p + 1`.
//! Comparing two families for large `n` reduces to comparing coefficient
//! vectors from the top down.

mod affine;
mod compare;
mod families;
mod fpositivity;
mod optimize;
mod poly;
mod rational;

pub use affine::{AffineForm, ParametricFamily};
pub use compare::{compare_families, FamilyComparison};
pub use families::{family_of, omega_coefficient, Family};
pub use fpositivity::{f_homogeneous, f_value, verify_f_positive, FPositivityReport};
pub use optimize::{best_biclique_split, objective, optimize_c, GRID_POINTS};
pub use poly::{expand_ep, NPolynomial};
pub use rational::{parse_rational, rational};
