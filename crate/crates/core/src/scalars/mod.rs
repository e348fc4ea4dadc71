//! Exact coefficient arithmetic.
//!
//! Everything is exact: Laurent polynomials in `r, s` with rational exponents
//! and `z, w` with integer exponents, their fraction field in normal form,
//! truncated power series, and quantum integers.

mod eval;
mod gcd;
mod laurent;
mod qint;
mod ratfunc;
mod series;

pub use eval::{eval_numeric, NumericPoint};
pub use laurent::{ExpVec, LaurentPoly};
pub use qint::{q_factorial, q_integer, q_monomial, q_pow, q_powi, rs_binomial, rs_factorial, rs_integer, specialize_one_param};
pub use ratfunc::RatFunc;
pub use series::{TruncSeries, DEFAULT_ORDER};

pub use num_rational::{BigRational, Rational64};

/// Shorthand for the rational `n / d`.
pub fn rat(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}
