//! Laurent polynomials in `r, s` (rational exponents) and `z, w` (integer exponents).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, Zero};

/// Exponent vector of a monomial `r^a s^b z^c w^d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExpVec {
    pub a: Rational64,
    pub b: Rational64,
    pub c: i64,
    pub d: i64,
}

impl ExpVec {
    pub fn zero() -> Self {
        ExpVec { a: Rational64::zero(), b: Rational64::zero(), c: 0, d: 0 }
    }

    pub fn rs(a: Rational64, b: Rational64) -> Self {
        ExpVec { a, b, c: 0, d: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c == 0 && self.d == 0
    }

    pub fn add(&self, o: &ExpVec) -> ExpVec {
        ExpVec { a: self.a + o.a, b: self.b + o.b, c: self.c + o.c, d: self.d + o.d }
    }

    pub fn sub(&self, o: &ExpVec) -> ExpVec {
        ExpVec { a: self.a - o.a, b: self.b - o.b, c: self.c - o.c, d: self.d - o.d }
    }

    pub fn neg(&self) -> ExpVec {
        ExpVec { a: -self.a, b: -self.b, c: -self.c, d: -self.d }
    }

    pub fn scale(&self, k: i64) -> ExpVec {
        ExpVec { a: self.a * Rational64::from_integer(k), b: self.b * Rational64::from_integer(k), c: self.c * k, d: self.d * k }
    }

    /// Componentwise minimum.
    pub fn meet(&self, o: &ExpVec) -> ExpVec {
        ExpVec { a: self.a.min(o.a), b: self.b.min(o.b), c: self.c.min(o.c), d: self.d.min(o.d) }
    }
}

impl fmt::Display for ExpVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        let rat = |name: &str, e: &Rational64, parts: &mut Vec<String>| {
            if e.is_zero() {
                return;
            }
            if e.is_one() {
                parts.push(name.to_string());
            } else if e.is_integer() && e.is_positive() {
                parts.push(format!("{}^{}", name, e.numer()));
            } else if e.is_integer() {
                parts.push(format!("{}^({})", name, e.numer()));
            } else {
                parts.push(format!("{}^({}/{})", name, e.numer(), e.denom()));
            }
        };
        rat("r", &self.a, &mut parts);
        rat("s", &self.b, &mut parts);
        rat("z", &Rational64::from_integer(self.c), &mut parts);
        rat("w", &Rational64::from_integer(self.d), &mut parts);
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// A finite sum of monomials with exact rational coefficients.
///
/// Terms are kept sorted by exponent vector with no zero coefficients, so the
/// derived equality is equality of polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(ExpVec, BigRational)>,
}

fn rat_i(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, ExpVec::zero())
    }

    pub fn from_int(k: i64) -> Self {
        Self::constant(rat_i(k))
    }

    pub fn monomial(c: BigRational, e: ExpVec) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { terms: vec![(e, c)] }
        }
    }

    /// `r^a s^b` with unit coefficient.
    pub fn rs(a: Rational64, b: Rational64) -> Self {
        Self::monomial(BigRational::one(), ExpVec::rs(a, b))
    }

    pub fn r() -> Self {
        Self::rs(Rational64::one(), Rational64::zero())
    }

    pub fn s() -> Self {
        Self::rs(Rational64::zero(), Rational64::one())
    }

    pub fn z() -> Self {
        Self::monomial(BigRational::one(), ExpVec { c: 1, ..ExpVec::zero() })
    }

    pub fn w() -> Self {
        Self::monomial(BigRational::one(), ExpVec { d: 1, ..ExpVec::zero() })
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms(mut raw: Vec<(ExpVec, BigRational)>) -> Self {
        raw.sort_by(|x, y| x.0.cmp(&y.0));
        let mut terms: Vec<(ExpVec, BigRational)> = Vec::with_capacity(raw.len());
        for (e, c) in raw {
            match terms.last_mut() {
                Some(last) if last.0 == e => last.1 += c,
                _ => {
                    if let Some(last) = terms.last() {
                        if last.1.is_zero() {
                            terms.pop();
                        }
                    }
                    terms.push((e, c));
                }
            }
        }
        if let Some(last) = terms.last() {
            if last.1.is_zero() {
                terms.pop();
            }
        }
        LaurentPoly { terms }
    }

    pub fn terms(&self) -> &[(ExpVec, BigRational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_zero() && self.terms[0].1.is_one()
    }

    pub fn as_monomial(&self) -> Option<(&BigRational, &ExpVec)> {
        if self.terms.len() == 1 {
            Some((&self.terms[0].1, &self.terms[0].0))
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 if self.terms[0].0.is_zero() => Some(self.terms[0].1.clone()),
            _ => None,
        }
    }

    /// Coefficient of the lexicographically least monomial.
    pub fn least_coeff(&self) -> Option<&BigRational> {
        self.terms.first().map(|t| &t.1)
    }

    /// Componentwise minimum of all exponents (the monomial content).
    pub fn min_exponents(&self) -> Option<ExpVec> {
        let mut it = self.terms.iter();
        let first = it.next()?.0.clone();
        Some(it.fold(first, |acc, t| acc.meet(&t.0)))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    pub fn mul_monomial(&self, c: &BigRational, e: &ExpVec) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(x, k)| (x.add(e), k * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        if let Some((c, e)) = self.as_monomial() {
            return Self::monomial(num_traits::pow(c.clone(), k as usize), e.scale(k as i64));
        }
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power of a monomial; `None` if the polynomial is not a monomial.
    pub fn monomial_powi(&self, k: i64) -> Option<Self> {
        let (c, e) = self.as_monomial()?;
        let cc = if k >= 0 { num_traits::pow(c.clone(), k as usize) } else { num_traits::pow(c.recip(), (-k) as usize) };
        Some(Self::monomial(cc, e.scale(k)))
    }

    /// Applies an exponent map term by term and recombines equal monomials.
    pub fn map_exponents<F: Fn(&ExpVec) -> ExpVec>(&self, f: F) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (f(e), c.clone())).collect())
    }

    /// Collects terms by the power of `z`, returning `(power, coefficient)` pairs.
    pub fn split_by_z(&self) -> Vec<(i64, LaurentPoly)> {
        let mut out: Vec<(i64, Vec<(ExpVec, BigRational)>)> = Vec::new();
        for (e, c) in &self.terms {
            let rest = ExpVec { c: 0, ..e.clone() };
            match out.iter_mut().find(|(p, _)| *p == e.c) {
                Some((_, v)) => v.push((rest, c.clone())),
                None => out.push((e.c, vec![(rest, c.clone())])),
            }
        }
        let mut res: Vec<(i64, LaurentPoly)> = out.into_iter().map(|(p, v)| (p, LaurentPoly::from_terms(v))).collect();
        res.sort_by_key(|x| x.0);
        res
    }

    fn merge(a: &[(ExpVec, BigRational)], b: &[(ExpVec, BigRational)], negate_b: bool) -> Self {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate_b { -b[j].1.clone() } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate_b { -t.1.clone() } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        LaurentPoly { terms: out }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Print in descending order, which reads more naturally.
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let unit = e.is_zero();
            if mag.is_one() {
                write!(f, "{}", e)?;
            } else if unit {
                write!(f, "{}", mag)?;
            } else {
                write!(f, "{}*{}", mag, e)?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::merge(&self.terms, &o.terms, false)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::merge(&self.terms, &o.terms, true)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: LaurentPoly) -> LaurentPoly {
        &self + &o
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: LaurentPoly) -> LaurentPoly {
        &self - &o
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || o.is_zero() {
            return LaurentPoly::zero();
        }
        if let Some((c, e)) = o.as_monomial() {
            return self.mul_monomial(c, e);
        }
        if let Some((c, e)) = self.as_monomial() {
            return o.mul_monomial(c, e);
        }
        let mut raw = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                raw.push((e1.add(e2), c1 * c2));
            }
        }
        LaurentPoly::from_terms(raw)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: LaurentPoly) -> LaurentPoly {
        &self * &o
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rq(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn display_canonical_form() {
        let p = &LaurentPoly::rs(rq(1, 2), rq(-1, 2)) + &LaurentPoly::from_int(-3);
        assert_eq!(p.to_string(), "r^(1/2)*s^(-1/2) - 3");
        let m = LaurentPoly::monomial(rat_i(2), ExpVec { a: rq(2, 1), b: rq(0, 1), c: 1, d: -1 });
        assert_eq!(m.to_string(), "2*r^2*z*w^(-1)");
    }

    #[test]
    fn cancellation_removes_terms() {
        let a = &LaurentPoly::r() + &LaurentPoly::s();
        let b = &a - &LaurentPoly::s();
        assert_eq!(b, LaurentPoly::r());
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn power_of_binomial() {
        let a = &LaurentPoly::r() + &LaurentPoly::s();
        let sq = a.pow(2);
        assert_eq!(sq.len(), 3);
        assert_eq!(&a * &a, sq);
    }

    #[test]
    fn split_by_z_groups_powers() {
        let p = &(&LaurentPoly::z() * &LaurentPoly::r()) + &LaurentPoly::s();
        let parts = p.split_by_z();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0], (0, LaurentPoly::s()));
        assert_eq!(parts[1], (1, LaurentPoly::r()));
    }
}
