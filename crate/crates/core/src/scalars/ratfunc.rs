//! Rational functions in `r, s, z, w` with a canonical normal form.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Zero};

use super::gcd::{cancel_common, laurent_div_exact};
use super::laurent::{ExpVec, LaurentPoly};
use crate::error::{Error, Result};

/// A quotient `num / den` kept in normal form.
///
/// Normal form: numerator and denominator share no non-unit factor, the
/// denominator has componentwise minimal exponent zero and its lexicographically
/// least coefficient is 1. A monomial denominator is absorbed into the
/// numerator, so Laurent polynomials have `den == 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(k))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RatFunc { num: p, den: LaurentPoly::one() }
    }

    /// `r^a s^b` for rational `a, b`.
    pub fn rs(a: Rational64, b: Rational64) -> Self {
        Self::from_poly(LaurentPoly::rs(a, b))
    }

    /// `r^a s^b` with exponents given as `(numer, denom)` pairs.
    pub fn rs_frac(a: (i64, i64), b: (i64, i64)) -> Self {
        Self::rs(Rational64::new(a.0, a.1), Rational64::new(b.0, b.1))
    }

    pub fn r() -> Self {
        Self::from_poly(LaurentPoly::r())
    }

    pub fn s() -> Self {
        Self::from_poly(LaurentPoly::s())
    }

    pub fn z() -> Self {
        Self::from_poly(LaurentPoly::z())
    }

    pub fn w() -> Self {
        Self::from_poly(LaurentPoly::w())
    }

    /// Builds and normalizes `num / den`.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if let Some((c, e)) = den.as_monomial() {
            let inv = c.recip();
            return RatFunc { num: num.mul_monomial(&inv, &e.neg()), den: LaurentPoly::one() };
        }
        let (n, d) =
            if let Some(q) = laurent_div_exact(&num, &den) { (q, LaurentPoly::one()) } else { cancel_common(&num, &den) };
        if let Some((c, e)) = d.as_monomial() {
            let inv = c.recip();
            return RatFunc { num: n.mul_monomial(&inv, &e.neg()), den: LaurentPoly::one() };
        }
        let shift = d.min_exponents().expect("nonzero").neg();
        let lc = d.least_coeff().expect("nonzero").recip();
        RatFunc { num: n.mul_monomial(&lc, &shift), den: d.mul_monomial(&lc, &shift) }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The Laurent polynomial this equals, if the denominator is trivial.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    /// Coefficient and exponent when the value is `c * r^a s^b z^c w^d`.
    pub fn as_monomial(&self) -> Option<(&BigRational, &ExpVec)> {
        self.as_poly().and_then(|p| p.as_monomial())
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        self.as_poly().and_then(|p| p.as_constant())
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, o: &RatFunc) -> Result<Self> {
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(&self.num * &o.den, &self.den * &o.num))
    }

    /// Integer power; negative powers require a nonzero value.
    pub fn powi(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return self.inv()?.powi(-k);
        }
        if let Some(p) = self.as_poly() {
            if let Some(m) = p.monomial_powi(k) {
                return Ok(Self::from_poly(m));
            }
        }
        Ok(RatFunc { num: self.num.pow(k as u32), den: self.den.pow(k as u32) })
    }

    /// Rational power of a monomial value, e.g. the square root of `p_ij`.
    pub fn monomial_pow(&self, e: Rational64) -> Result<Self> {
        let (c, x) = self.as_monomial().ok_or(Error::NotMonomial)?;
        if !c.is_one() {
            if e.is_integer() {
                return self.powi(*e.numer());
            }
            return Err(Error::NotMonomial);
        }
        let zc = Rational64::from_integer(x.c) * e;
        let wd = Rational64::from_integer(x.d) * e;
        if !zc.is_integer() || !wd.is_integer() {
            return Err(Error::NotMonomial);
        }
        Ok(Self::from_poly(LaurentPoly::monomial(
            BigRational::one(),
            ExpVec { a: x.a * e, b: x.b * e, c: zc.to_integer(), d: wd.to_integer() },
        )))
    }

    /// Applies an exponent substitution to numerator and denominator.
    pub fn map_exponents<F: Fn(&ExpVec) -> ExpVec>(&self, f: F) -> Result<Self> {
        Self::new(self.num.map_exponents(&f), self.den.map_exponents(&f))
    }

    /// Substitutes `z -> c * z^k` (used for `R(z xi)` with monomial `xi`).
    pub fn subst_z_monomial(&self, c: &LaurentPoly, k: i64) -> Result<Self> {
        let sub = |p: &LaurentPoly| -> LaurentPoly {
            let mut acc = LaurentPoly::zero();
            for (e, coef) in p.terms() {
                let rest = LaurentPoly::monomial(coef.clone(), ExpVec { c: e.c * k, ..e.clone() });
                let cp = c.monomial_powi(e.c).expect("monomial substitution");
                acc = &acc + &(&rest * &cp);
            }
            acc
        };
        Self::new(sub(&self.num), sub(&self.den))
    }
}

fn add_impl(x: &RatFunc, y: &RatFunc, neg: bool) -> RatFunc {
    let yn = if neg { -&y.num } else { y.num.clone() };
    if x.den == y.den {
        if x.den.is_one() {
            return RatFunc { num: &x.num + &yn, den: LaurentPoly::one() };
        }
        return RatFunc::normalize(&x.num + &yn, x.den.clone());
    }
    if x.is_zero() {
        return RatFunc { num: yn, den: y.den.clone() };
    }
    if y.is_zero() {
        return x.clone();
    }
    let num = &(&x.num * &y.den) + &(&yn * &x.den);
    RatFunc::normalize(num, &x.den * &y.den)
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        add_impl(self, o, false)
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        add_impl(self, o, true)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc { num: &self.num * &o.num, den: LaurentPoly::one() };
        }
        RatFunc::normalize(&self.num * &o.num, &self.den * &o.den)
    }
}

/// Panics on division by zero; use [`RatFunc::checked_div`] for a fallible version.
impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn div(self, o: &RatFunc) -> RatFunc {
        self.checked_div(o).expect("division by zero rational function")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: RatFunc) -> RatFunc {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: &RatFunc) -> RatFunc {
                (&self).$m(o)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl From<i64> for RatFunc {
    fn from(k: i64) -> Self {
        RatFunc::from_int(k)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

fn parse_rat(s: &str) -> Result<Rational64> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    let bad = || Error::Parse(format!("bad exponent `{s}`"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Rational64::new(p, q))
        }
        None => Ok(Rational64::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn parse_term(t: &str) -> Result<(ExpVec, BigRational)> {
    let mut e = ExpVec::zero();
    let mut c = BigRational::one();
    for factor in t.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in `{t}`")));
        }
        let (name, exp) = match factor.split_once('^') {
            Some((n, x)) => (n, parse_rat(x)?),
            None => (factor, Rational64::one()),
        };
        match name {
            "r" => e.a += exp,
            "s" => e.b += exp,
            "z" | "w" => {
                if !exp.is_integer() {
                    return Err(Error::Parse(format!("non-integer exponent of {name}")));
                }
                if name == "z" {
                    e.c += exp.to_integer();
                } else {
                    e.d += exp.to_integer();
                }
            }
            lit => {
                let v = match lit.split_once('/') {
                    Some((p, q)) => {
                        let p: BigInt = p.parse().map_err(|_| Error::Parse(format!("bad coefficient `{lit}`")))?;
                        let q: BigInt = q.parse().map_err(|_| Error::Parse(format!("bad coefficient `{lit}`")))?;
                        if q.is_zero() {
                            return Err(Error::Parse("zero denominator".into()));
                        }
                        BigRational::new(p, q)
                    }
                    None => BigRational::from_integer(lit.parse().map_err(|_| Error::Parse(format!("bad coefficient `{lit}`")))?),
                };
                c *= v;
            }
        }
    }
    Ok((e, c))
}

impl FromStr for LaurentPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(LaurentPoly::zero());
        }
        // Split on binary + and - (those surrounded by spaces), keeping signs.
        let mut terms = Vec::new();
        let mut sign = BigRational::one();
        let mut rest = s;
        if let Some(stripped) = rest.strip_prefix('-') {
            sign = -sign;
            rest = stripped;
        }
        loop {
            let next = [" + ", " - "].iter().filter_map(|pat| rest.find(pat).map(|i| (i, *pat))).min();
            let (chunk, after) = match next {
                Some((i, pat)) => (&rest[..i], Some((&rest[i + 3..], pat))),
                None => (rest, None),
            };
            let (e, c) = parse_term(chunk)?;
            terms.push((e, c * &sign));
            match after {
                Some((tail, pat)) => {
                    sign = if pat == " - " { -BigRational::one() } else { BigRational::one() };
                    rest = tail;
                }
                None => break,
            }
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

impl FromStr for RatFunc {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(body) = s.strip_prefix('(') {
            if let Some(idx) = body.find(")/(") {
                let num: LaurentPoly = body[..idx].parse()?;
                let den_str = body[idx + 3..].strip_suffix(')').ok_or_else(|| Error::Parse(format!("unbalanced `{s}`")))?;
                let den: LaurentPoly = den_str.parse()?;
                return RatFunc::new(num, den);
            }
        }
        Ok(RatFunc::from_poly(s.parse()?))
    }
}
