//! Exact numeric evaluation at rational points with chosen rational roots.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::laurent::LaurentPoly;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// An evaluation point `(r, s, z, w)`.
///
/// `root_order` is the largest exponent denominator allowed for `r` and `s`;
/// the positive `root_order`-th roots of `r` and `s` must be rational.
#[derive(Clone, Debug)]
pub struct NumericPoint {
    root_order: i64,
    r_root: BigRational,
    s_root: BigRational,
    z: BigRational,
    w: BigRational,
}

fn exact_root(x: &BigRational, n: u32) -> Option<BigRational> {
    if x.is_negative() && n.is_multiple_of(2) {
        return None;
    }
    let root = |v: &BigInt| -> Option<BigInt> {
        let r = v.nth_root(n);
        if num_traits::pow(r.clone(), n as usize) == *v {
            Some(r)
        } else {
            None
        }
    };
    Some(BigRational::new(root(x.numer())?, root(x.denom())?))
}

impl NumericPoint {
    pub fn new(r: BigRational, s: BigRational, z: BigRational, w: BigRational, root_order: u32) -> Result<Self> {
        if root_order == 0 {
            return Err(Error::Invalid("root order must be positive".into()));
        }
        if r.is_zero() || s.is_zero() {
            return Err(Error::Invalid("r and s must be nonzero".into()));
        }
        let bad = |name: &str| Error::Invalid(format!("{name} has no rational {root_order}-th root"));
        let r_root = exact_root(&r, root_order).ok_or_else(|| bad("r"))?;
        let s_root = exact_root(&s, root_order).ok_or_else(|| bad("s"))?;
        Ok(NumericPoint { root_order: root_order as i64, r_root, s_root, z, w })
    }

    /// Convenience constructor from integers.
    pub fn from_ints(r: i64, s: i64, z: i64, w: i64, root_order: u32) -> Result<Self> {
        let q = |k: i64| BigRational::from_integer(k.into());
        Self::new(q(r), q(s), q(z), q(w), root_order)
    }

    fn pow_q(base: &BigRational, k: i64) -> Result<BigRational> {
        if k >= 0 {
            Ok(num_traits::pow(base.clone(), k as usize))
        } else if base.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(num_traits::pow(base.recip(), (-k) as usize))
        }
    }

    pub fn eval_poly(&self, p: &LaurentPoly) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for (e, c) in p.terms() {
            let l = self.root_order;
            let ka = e.a * l;
            let kb = e.b * l;
            if !ka.is_integer() || !kb.is_integer() {
                return Err(Error::Invalid(format!("exponent of {e} incompatible with root order {l}")));
            }
            let mut t = c.clone();
            t *= Self::pow_q(&self.r_root, ka.to_integer())?;
            t *= Self::pow_q(&self.s_root, kb.to_integer())?;
            t *= Self::pow_q(&self.z, e.c)?;
            t *= Self::pow_q(&self.w, e.d)?;
            acc += t;
        }
        Ok(acc)
    }

    pub fn eval(&self, x: &RatFunc) -> Result<BigRational> {
        let d = self.eval_poly(x.den())?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.eval_poly(x.num())? / d)
    }
}

/// Evaluates `x` at a point; shorthand for [`NumericPoint::eval`].
pub fn eval_numeric(x: &RatFunc, pt: &NumericPoint) -> Result<BigRational> {
    pt.eval(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::qint::{rs_binomial, rs_integer};

    fn int(k: i64) -> BigRational {
        BigRational::from_integer(k.into())
    }

    #[test]
    fn examples() {
        let pt = NumericPoint::from_ints(4, 9, 1, 1, 2).unwrap();
        assert_eq!(pt.eval(&RatFunc::one()).unwrap(), int(1));
        assert_eq!(pt.eval(&(RatFunc::r() + RatFunc::s())).unwrap(), int(13));
        assert_eq!(pt.eval(&rs_binomial(2, 1).unwrap()).unwrap(), int(13));
        assert_eq!(pt.eval(&RatFunc::rs_frac((1, 2), (-1, 2))).unwrap(), BigRational::new(2.into(), 3.into()));
        let p1 = NumericPoint::from_ints(2, 1, 0, 0, 1).unwrap();
        assert_eq!(p1.eval(&rs_integer(3)).unwrap(), int(7));
    }

    #[test]
    fn errors() {
        assert!(NumericPoint::from_ints(2, 9, 1, 1, 2).is_err());
        let pt = NumericPoint::from_ints(4, 4, 1, 1, 2).unwrap();
        let x = RatFunc::one() / (RatFunc::r() - RatFunc::s());
        assert!(matches!(pt.eval(&x), Err(Error::DivisionByZero)));
        assert!(pt.eval(&RatFunc::rs_frac((1, 4), (0, 1))).is_err());
    }
}
