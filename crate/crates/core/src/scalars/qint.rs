//! Two-parameter and one-parameter quantum integers, and the specialization `s = r^{-1}`.

use num_rational::{BigRational, Rational64};
use num_traits::One;

use super::gcd::laurent_div_exact;
use super::laurent::{ExpVec, LaurentPoly};
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// `[m]_{r,s} = r^{m-1} + r^{m-2}s + … + s^{m-1}`.
pub fn rs_integer(m: u32) -> RatFunc {
    RatFunc::from_poly(rs_integer_poly(m))
}

fn rs_integer_poly(m: u32) -> LaurentPoly {
    let m = m as i64;
    LaurentPoly::from_terms(
        (0..m)
            .map(|k| (ExpVec::rs(Rational64::from_integer(m - 1 - k), Rational64::from_integer(k)), BigRational::one()))
            .collect(),
    )
}

/// `[m]_{r,s}! = [m]_{r,s} [m-1]_{r,s} … [1]_{r,s}`, with `[0]! = 1`.
pub fn rs_factorial(m: u32) -> RatFunc {
    RatFunc::from_poly(rs_factorial_poly(m))
}

fn rs_factorial_poly(m: u32) -> LaurentPoly {
    (1..=m).fold(LaurentPoly::one(), |acc, k| &acc * &rs_integer_poly(k))
}

/// Two-parameter binomial `[m]! / ([k]! [m-k]!)`, computed by exact division.
pub fn rs_binomial(m: u32, k: u32) -> Result<RatFunc> {
    if k > m {
        return Err(Error::Invalid(format!("binomial with k = {k} > m = {m}")));
    }
    let den = &rs_factorial_poly(k) * &rs_factorial_poly(m - k);
    let q = laurent_div_exact(&rs_factorial_poly(m), &den).ok_or_else(|| Error::Invalid("inexact quantum binomial".into()))?;
    Ok(RatFunc::from_poly(q))
}

/// `q^h` with `q = r^{1/2} s^{-1/2}`, i.e. `r^{h/2} s^{-h/2}`.
pub fn q_monomial(half_power: Rational64) -> LaurentPoly {
    let h = half_power / Rational64::from_integer(2);
    LaurentPoly::rs(h, -h)
}

/// `q^k` as a rational function.
pub fn q_pow(k: Rational64) -> RatFunc {
    RatFunc::from_poly(q_monomial(k))
}

/// `q^k` for integer `k`.
pub fn q_powi(k: i64) -> RatFunc {
    q_pow(Rational64::from_integer(k))
}

/// One-parameter `[m]_q = (q^m - q^{-m}) / (q - q^{-1})`, with `[-m]_q = -[m]_q`.
pub fn q_integer(m: i64) -> RatFunc {
    let sign = if m < 0 { -1 } else { 1 };
    let m = m.abs();
    let p = LaurentPoly::from_terms(
        (0..m).map(|k| (q_monomial(Rational64::from_integer(m - 1 - 2 * k)).terms()[0].0.clone(), BigRational::one())).collect(),
    );
    RatFunc::from_poly(p.scale(&BigRational::from_integer(sign.into())))
}

/// `[m]_q!`.
pub fn q_factorial(m: u32) -> RatFunc {
    (1..=m as i64).fold(RatFunc::one(), |acc, k| &acc * &q_integer(k))
}

/// Substitutes `s := r^{-1}`, sending `r^a s^b` to `r^{a-b}`; `q` becomes `r`.
pub fn specialize_one_param(x: &RatFunc) -> Result<RatFunc> {
    let f = |e: &ExpVec| ExpVec { a: e.a - e.b, b: Rational64::from_integer(0), ..e.clone() };
    let den = x.den().map_exponents(f);
    if den.is_zero() {
        return Err(Error::Invalid("denominator vanishes under s = r^-1".into()));
    }
    RatFunc::new(x.num().map_exponents(f), den)
}
