//! Truncated power series in `z` with rational-function coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::laurent::LaurentPoly;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// Default truncation order for series computations.
pub const DEFAULT_ORDER: usize = 12;

/// `Σ_{k < order} coeffs[k] z^k`; powers `≥ order` are discarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    order: usize,
    coeffs: Vec<RatFunc>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        TruncSeries { order, coeffs: vec![RatFunc::zero(); order] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(RatFunc::one(), order)
    }

    pub fn constant(c: RatFunc, order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    /// Builds a series from leading coefficients; extra entries are dropped.
    pub fn from_coeffs(mut coeffs: Vec<RatFunc>, order: usize) -> Self {
        coeffs.resize(order, RatFunc::zero());
        TruncSeries { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &RatFunc {
        &self.coeffs[k]
    }

    pub fn add(&self, o: &TruncSeries) -> TruncSeries {
        let order = self.order.min(o.order);
        TruncSeries { order, coeffs: (0..order).map(|k| &self.coeffs[k] + &o.coeffs[k]).collect() }
    }

    pub fn sub(&self, o: &TruncSeries) -> TruncSeries {
        let order = self.order.min(o.order);
        TruncSeries { order, coeffs: (0..order).map(|k| &self.coeffs[k] - &o.coeffs[k]).collect() }
    }

    pub fn scale(&self, c: &RatFunc) -> TruncSeries {
        TruncSeries { order: self.order, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn mul(&self, o: &TruncSeries) -> TruncSeries {
        let order = self.order.min(o.order);
        let mut coeffs = vec![RatFunc::zero(); order];
        for (i, a) in self.coeffs.iter().enumerate().take(order) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(order - i) {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        TruncSeries { order, coeffs }
    }

    /// Expansion at `z = 0` of a rational function in `z`.
    pub fn from_ratfunc(x: &RatFunc, order: usize) -> Result<TruncSeries> {
        let num = x.num().split_by_z();
        let den = x.den().split_by_z();
        let Some(&(d0, _)) = den.first() else {
            return Err(Error::DivisionByZero);
        };
        if num.is_empty() {
            return Ok(Self::zero(order));
        }
        let n0 = num[0].0;
        if n0 < d0 {
            return Err(Error::Invalid(format!("{x} has a pole at z = 0")));
        }
        let shift = (n0 - d0) as usize;
        let dense = |parts: &[(i64, LaurentPoly)], base: i64, lead: usize| {
            let mut c = vec![RatFunc::zero(); order];
            for (p, poly) in parts {
                let k = (p - base) as usize + lead;
                if k < order {
                    c[k] = RatFunc::from_poly(poly.clone());
                }
            }
            TruncSeries { order, coeffs: c }
        };
        let d = dense(&den, d0, 0);
        let nn = dense(&num, n0, shift);
        Ok(nn.mul(&d.inv()?))
    }

    /// Substitutes `z -> c z` for a scalar `c`.
    pub fn rescale_z(&self, c: &RatFunc) -> TruncSeries {
        let mut pow = RatFunc::one();
        let mut coeffs = Vec::with_capacity(self.order);
        for a in &self.coeffs {
            coeffs.push(a * &pow);
            pow = &pow * c;
        }
        TruncSeries { order: self.order, coeffs }
    }

    /// Multiplicative inverse; requires an invertible constant term.
    pub fn inv(&self) -> Result<TruncSeries> {
        if self.order == 0 {
            return Ok(self.clone());
        }
        let c0inv = self.coeffs[0].inv()?;
        let mut out = vec![RatFunc::zero(); self.order];
        out[0] = c0inv.clone();
        for n in 1..self.order {
            let mut acc = RatFunc::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc = &acc + &(&self.coeffs[k] * &out[n - k]);
                }
            }
            out[n] = -(&acc * &c0inv);
        }
        Ok(TruncSeries { order: self.order, coeffs: out })
    }

    /// `exp(g)` for a series with zero constant term.
    pub fn exp(&self) -> Result<TruncSeries> {
        if self.order > 0 && !self.coeffs[0].is_zero() {
            return Err(Error::Invalid("exp needs a series without constant term".into()));
        }
        let mut h = vec![RatFunc::zero(); self.order];
        if self.order > 0 {
            h[0] = RatFunc::one();
        }
        for n in 1..self.order {
            let mut acc = RatFunc::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    let kk = RatFunc::from_int(k as i64);
                    acc = &acc + &(&(&kk * &self.coeffs[k]) * &h[n - k]);
                }
            }
            let inv_n = RatFunc::from_rational(BigRational::new(BigInt::from(1), BigInt::from(n as i64)));
            h[n] = &acc * &inv_n;
        }
        Ok(TruncSeries { order: self.order, coeffs: h })
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(z^{})", self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn geometric(c: &RatFunc, order: usize) -> TruncSeries {
        // 1 / (1 - c z)
        let mut v = Vec::new();
        let mut p = RatFunc::one();
        for _ in 0..order {
            v.push(p.clone());
            p = &p * c;
        }
        TruncSeries::from_coeffs(v, order)
    }

    #[test]
    fn inverse_of_geometric() {
        let g = geometric(&RatFunc::r(), 6);
        let lin = TruncSeries::from_coeffs(vec![RatFunc::one(), -RatFunc::r()], 6);
        assert_eq!(g.inv().unwrap(), lin);
        assert_eq!(g.mul(&lin), TruncSeries::one(6));
    }

    #[test]
    fn exp_of_log_geometric() {
        // log(1/(1 - z)) = Σ z^m / m
        let order = 7;
        let log: Vec<RatFunc> = (0..order)
            .map(|m| if m == 0 { RatFunc::zero() } else { RatFunc::from_rational(BigRational::new(1.into(), (m as i64).into())) })
            .collect();
        let e = TruncSeries::from_coeffs(log, order).exp().unwrap();
        assert_eq!(e, geometric(&RatFunc::one(), order));
    }

    #[test]
    fn truncation_is_closed() {
        let a = geometric(&RatFunc::s(), 4);
        assert_eq!(a.mul(&a).order(), 4);
        assert_eq!(a.mul(&a).coeff(3), &(RatFunc::from_int(4) * RatFunc::s() * RatFunc::s() * RatFunc::s()));
    }
}
