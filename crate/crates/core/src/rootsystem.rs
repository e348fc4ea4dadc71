//! Classical root systems in their ε-realizations.
//!
//! Type `A_n` lives in `Z^{n+1}` (the `gl_{n+1}` lattice); types `B_n, C_n, D_n`
//! live in `Q^n`. The inner product is normalized so that short roots have
//! square length 2, which makes `(ε_i, ε_i) = 2` in type B.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalars::{LaurentPoly, RatFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        }
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            other => Err(Error::Parse(format!("unknown root system family `{other}`"))),
        }
    }
}

/// A classical type with its rank, e.g. `B_2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RSType {
    pub family: Family,
    pub rank: usize,
}

impl fmt::Display for RSType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl RSType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::D => rank >= 3,
            _ => rank >= 1,
        };
        if ok {
            Ok(RSType { family, rank })
        } else {
            Err(Error::InvalidRank { family: family.letter(), rank })
        }
    }

    /// Panicking constructor for literals in tests and examples.
    pub fn of(family: Family, rank: usize) -> Self {
        Self::new(family, rank).expect("valid root system type")
    }

    /// Dimension of the ambient ε-space.
    pub fn eps_dim(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            _ => self.rank,
        }
    }

    /// Dimension `N` of the first fundamental representation.
    pub fn vec_dim(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n + 1,
            Family::B => 2 * n + 1,
            Family::C | Family::D => 2 * n,
        }
    }
}

/// A vector in ε-coordinates (integers for roots, rationals for weights).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RVec(pub Vec<Rational64>);

impl RVec {
    pub fn zero(dim: usize) -> Self {
        RVec(vec![Rational64::zero(); dim])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        RVec(v.iter().map(|&x| Rational64::from_integer(x)).collect())
    }

    /// The basis vector `ε_i` (1-based).
    pub fn eps(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i - 1] = Rational64::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    pub fn scale(&self, k: Rational64) -> Self {
        RVec(self.0.iter().map(|x| x * k).collect())
    }

    pub fn scale_i(&self, k: i64) -> Self {
        self.scale(Rational64::from_integer(k))
    }

    pub fn sum(&self) -> Rational64 {
        self.0.iter().fold(Rational64::zero(), |a, b| a + b)
    }

    pub fn dot(&self, o: &RVec) -> Rational64 {
        self.0.iter().zip(&o.0).fold(Rational64::zero(), |a, (x, y)| a + x * y)
    }
}

impl fmt::Display for RVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl Add for &RVec {
    type Output = RVec;
    fn add(self, o: &RVec) -> RVec {
        RVec(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &RVec {
    type Output = RVec;
    fn sub(self, o: &RVec) -> RVec {
        RVec(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RVec {
    type Output = RVec;
    fn neg(self) -> RVec {
        RVec(self.0.iter().map(|a| -a).collect())
    }
}

/// Simple roots in the fixed order.
pub fn simple_roots(t: RSType) -> Vec<RVec> {
    let n = t.rank;
    let dim = t.eps_dim();
    let e = |i: usize| RVec::eps(dim, i);
    let mut out: Vec<RVec> = Vec::with_capacity(n);
    let chain = match t.family {
        Family::A => n,
        _ => n - 1,
    };
    for i in 1..=chain {
        out.push(&e(i) - &e(i + 1));
    }
    match t.family {
        Family::A => {}
        Family::B => out.push(e(n)),
        Family::C => out.push(e(n).scale_i(2)),
        Family::D => out.push(&e(n - 1) + &e(n)),
    }
    out
}

/// The positive roots, enumerated from the closed-form ε-descriptions.
pub fn positive_roots(t: RSType) -> Vec<RVec> {
    let n = t.rank;
    let dim = t.eps_dim();
    let e = |i: usize| RVec::eps(dim, i);
    let mut out = Vec::new();
    if t.family == Family::A {
        for i in 1..=n + 1 {
            for j in i + 1..=n + 1 {
                out.push(&e(i) - &e(j));
            }
        }
        return out;
    }
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(&e(i) - &e(j));
            out.push(&e(i) + &e(j));
        }
        match t.family {
            Family::B => out.push(e(i)),
            Family::C => out.push(e(i).scale_i(2)),
            _ => {}
        }
    }
    out
}

pub fn is_positive_root(t: RSType, v: &RVec) -> bool {
    positive_roots(t).iter().any(|g| g == v)
}

pub fn is_root(t: RSType, v: &RVec) -> bool {
    is_positive_root(t, v) || is_positive_root(t, &-v)
}

/// The invariant form `(λ, μ)`.
pub fn inner(t: RSType, l: &RVec, m: &RVec) -> Rational64 {
    let d = l.dot(m);
    match t.family {
        Family::B => d * Rational64::from_integer(2),
        _ => d,
    }
}

/// `d_i = (α_i, α_i) / 2` (1-based index).
pub fn d_i(t: RSType, i: usize) -> i64 {
    let a = &simple_roots(t)[i - 1];
    (inner(t, a, a) / Rational64::from_integer(2)).to_integer()
}

/// Cartan entry `a_ij = 2(α_i, α_j)/(α_i, α_i)` (1-based).
pub fn cartan_entry(t: RSType, i: usize, j: usize) -> i64 {
    let pi = simple_roots(t);
    (Rational64::from_integer(2) * inner(t, &pi[i - 1], &pi[j - 1]) / inner(t, &pi[i - 1], &pi[i - 1])).to_integer()
}

/// Solves `A x = b` over the rationals for square `A`; `None` if singular or inconsistent.
pub(crate) fn solve_rational(a: &[Vec<Rational64>], b: &[Rational64]) -> Option<Vec<Rational64>> {
    let rows = a.len();
    let cols = a.first().map(|r| r.len()).unwrap_or(0);
    let mut m: Vec<Vec<Rational64>> = a
        .iter()
        .zip(b)
        .map(|(r, x)| {
            let mut r = r.clone();
            r.push(*x);
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&k| !m[k][col].is_zero()) else { continue };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= inv;
        }
        for k in 0..rows {
            if k != row && !m[k][col].is_zero() {
                let f = m[k][col];
                let pr = m[row].clone();
                for (x, y) in m[k].iter_mut().zip(pr) {
                    *x -= f * y;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if pivots.len() < cols {
        return None;
    }
    if m[row..].iter().any(|r| !r[cols].is_zero()) {
        return None;
    }
    Some(pivots.iter().enumerate().map(|(k, _)| m[k][cols]).collect())
}

/// Coordinates of `v` in the basis of simple roots, if `v` lies in their rational span.
pub fn alpha_coords(t: RSType, v: &RVec) -> Option<Vec<Rational64>> {
    let pi = simple_roots(t);
    // Rows are ε-components, columns are simple roots.
    let a: Vec<Vec<Rational64>> = (0..t.eps_dim()).map(|k| pi.iter().map(|r| r.0[k]).collect()).collect();
    solve_rational(&a, &v.0)
}

/// Integer α-coordinates of an element of the root lattice `Q`.
pub fn q_coords(t: RSType, v: &RVec) -> Result<Vec<i64>> {
    let c = alpha_coords(t, v).ok_or_else(|| Error::Invalid(format!("{v} is not in the root lattice")))?;
    c.iter()
        .map(|x| if x.is_integer() { Ok(x.to_integer()) } else { Err(Error::Invalid(format!("{v} is not in the root lattice"))) })
        .collect()
}

/// `Σ c_i α_i` as an ε-vector.
pub fn from_alpha_coords(t: RSType, c: &[i64]) -> RVec {
    let pi = simple_roots(t);
    let mut v = RVec::zero(t.eps_dim());
    for (k, &ck) in c.iter().enumerate() {
        v = &v + &pi[k].scale_i(ck);
    }
    v
}

/// The Ringel form on simple roots (1-based).
pub fn ringel_simple(t: RSType, i: usize, j: usize) -> i64 {
    let n = t.rank;
    if t.family == Family::D && ((i, j) == (n - 1, n) || (i, j) == (n, n - 1)) {
        return if i == n - 1 { -1 } else { 1 };
    }
    match i.cmp(&j) {
        std::cmp::Ordering::Less => d_i(t, i) * cartan_entry(t, i, j),
        std::cmp::Ordering::Equal => d_i(t, i),
        std::cmp::Ordering::Greater => 0,
    }
}

/// The Ringel form `⟨λ, μ⟩` on the root lattice.
pub fn ringel(t: RSType, l: &RVec, m: &RVec) -> Result<i64> {
    let a = q_coords(t, l)?;
    let b = q_coords(t, m)?;
    let mut acc = 0;
    for i in 0..t.rank {
        for j in 0..t.rank {
            if a[i] != 0 && b[j] != 0 {
                acc += a[i] * b[j] * ringel_simple(t, i + 1, j + 1);
            }
        }
    }
    Ok(acc)
}

/// Height of an element of `Q^+`.
pub fn height(t: RSType, v: &RVec) -> Result<i64> {
    Ok(q_coords(t, v)?.iter().sum())
}

pub fn highest_root(t: RSType) -> RVec {
    positive_roots(t).into_iter().max_by_key(|g| height(t, g).expect("roots lie in Q")).expect("nonempty root system")
}

/// `max{p : β − pα ∈ Φ}` for positive roots `α, β`.
pub fn p_max(t: RSType, beta: &RVec, alpha: &RVec) -> Result<i64> {
    for v in [beta, alpha] {
        if !is_positive_root(t, v) {
            return Err(Error::NotARoot(v.to_string()));
        }
    }
    let mut p = 0;
    while is_root(t, &(beta - &alpha.scale_i(p + 1))) {
        p += 1;
    }
    Ok(p)
}

fn gamma_exp(t: RSType, g: &RVec) -> Result<Rational64> {
    if !is_root(t, g) {
        return Err(Error::NotARoot(g.to_string()));
    }
    Ok(inner(t, g, g) / Rational64::from_integer(2))
}

/// `r_γ = r^{(γ,γ)/2}`.
pub fn r_gamma(t: RSType, g: &RVec) -> Result<LaurentPoly> {
    Ok(LaurentPoly::rs(gamma_exp(t, g)?, Rational64::zero()))
}

/// `s_γ = s^{(γ,γ)/2}`.
pub fn s_gamma(t: RSType, g: &RVec) -> Result<LaurentPoly> {
    Ok(LaurentPoly::rs(Rational64::zero(), gamma_exp(t, g)?))
}

/// `r_i = r^{d_i}` as a rational function.
pub fn r_i(t: RSType, i: usize) -> RatFunc {
    RatFunc::rs(Rational64::from_integer(d_i(t, i)), Rational64::zero())
}

/// `s_i = s^{d_i}` as a rational function.
pub fn s_i(t: RSType, i: usize) -> RatFunc {
    RatFunc::rs(Rational64::zero(), Rational64::from_integer(d_i(t, i)))
}

/// Fundamental weights `ϖ_j` with `(α_i, ϖ_j) = d_i δ_ij`.
///
/// In type A the representative `ε_1 + … + ε_j` of the `gl` lattice is used.
pub fn fundamental_weights(t: RSType) -> Vec<RVec> {
    let n = t.rank;
    let dim = t.eps_dim();
    if t.family == Family::A {
        return (1..=n).map(|j| (1..=j).fold(RVec::zero(dim), |acc, i| &acc + &RVec::eps(dim, i))).collect();
    }
    let pi = simple_roots(t);
    let gram: Vec<Vec<Rational64>> = pi.iter().map(|a| pi.iter().map(|b| inner(t, a, b)).collect()).collect();
    (1..=n)
        .map(|j| {
            let rhs: Vec<Rational64> =
                (1..=n).map(|i| if i == j { Rational64::from_integer(d_i(t, i)) } else { Rational64::zero() }).collect();
            let c = solve_rational(&gram, &rhs).expect("Gram matrix of simple roots is invertible");
            pi.iter().zip(&c).fold(RVec::zero(dim), |acc, (a, x)| &acc + &a.scale(*x))
        })
        .collect()
}

/// True when all α-coordinates of `v` are nonnegative integers.
pub fn in_q_plus(t: RSType, v: &RVec) -> bool {
    q_coords(t, v).map(|c| c.iter().all(|x| !x.is_negative())).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_types(max: usize) -> Vec<RSType> {
        let mut v = Vec::new();
        for n in 1..=max {
            for f in [Family::A, Family::B, Family::C, Family::D] {
                if let Ok(t) = RSType::new(f, n) {
                    v.push(t);
                }
            }
        }
        v
    }

    #[test]
    fn simple_root_examples() {
        let a2 = simple_roots(RSType::of(Family::A, 2));
        assert_eq!(a2, vec![RVec::from_ints(&[1, -1, 0]), RVec::from_ints(&[0, 1, -1])]);
        let b2 = simple_roots(RSType::of(Family::B, 2));
        assert_eq!(b2, vec![RVec::from_ints(&[1, -1]), RVec::from_ints(&[0, 1])]);
        let d3 = simple_roots(RSType::of(Family::D, 3));
        assert_eq!(d3[2], RVec::from_ints(&[0, 1, 1]));
        assert!(RSType::new(Family::D, 2).is_err());
        assert!(RSType::new(Family::A, 0).is_err());
    }

    #[test]
    fn root_counts() {
        for t in all_types(5) {
            let n = t.rank;
            let expected = match t.family {
                Family::A => n * (n + 1) / 2,
                Family::B | Family::C => n * n,
                Family::D => n * (n - 1),
            };
            let roots = positive_roots(t);
            assert_eq!(roots.len(), expected, "{t}");
            for g in &roots {
                assert!(in_q_plus(t, g), "{t} {g}");
            }
        }
        let b2 = positive_roots(RSType::of(Family::B, 2));
        for v in [[1, -1], [1, 0], [1, 1], [0, 1]] {
            assert!(b2.contains(&RVec::from_ints(&v)));
        }
    }

    #[test]
    fn ringel_examples() {
        let b2 = RSType::of(Family::B, 2);
        assert_eq!(ringel_simple(b2, 1, 2), -2);
        assert_eq!(ringel_simple(b2, 2, 1), 0);
        for t in all_types(5) {
            for i in 1..=t.rank {
                assert_eq!(ringel_simple(t, i, i), d_i(t, i));
            }
        }
        let d4 = RSType::of(Family::D, 4);
        assert_eq!(ringel_simple(d4, 4, 3), 1);
        assert_eq!(ringel_simple(d4, 3, 4), -1);
    }

    #[test]
    fn ringel_symmetrizes_to_inner() {
        for t in all_types(5) {
            let pi = simple_roots(t);
            for a in &pi {
                for b in &pi {
                    let s = ringel(t, a, b).unwrap() + ringel(t, b, a).unwrap();
                    assert_eq!(Rational64::from_integer(s), inner(t, a, b), "{t}");
                }
            }
        }
    }

    #[test]
    fn ringel_rejects_weights() {
        let b2 = RSType::of(Family::B, 2);
        let half = RVec(vec![Rational64::new(1, 2), Rational64::new(1, 2)]);
        assert!(ringel(b2, &half, &half).is_err());
    }

    #[test]
    fn rs_gamma_examples() {
        let b2 = RSType::of(Family::B, 2);
        assert_eq!(r_gamma(b2, &simple_roots(b2)[0]).unwrap(), LaurentPoly::r().pow(2));
        let a2 = RSType::of(Family::A, 2);
        assert_eq!(s_gamma(a2, &RVec::from_ints(&[1, 0, -1])).unwrap(), LaurentPoly::s());
        for t in all_types(4) {
            for (i, a) in simple_roots(t).iter().enumerate() {
                assert_eq!(r_gamma(t, a).unwrap(), LaurentPoly::rs(d_i(t, i + 1).into(), 0.into()));
            }
        }
    }

    #[test]
    fn p_max_and_height() {
        let a2 = RSType::of(Family::A, 2);
        let pa = simple_roots(a2);
        assert_eq!(p_max(a2, &pa[1], &pa[0]).unwrap(), 0);
        let b2 = RSType::of(Family::B, 2);
        let pb = simple_roots(b2);
        assert_eq!(p_max(b2, &pb[1], &pb[0]).unwrap(), 0);
        assert_eq!(p_max(b2, &RVec::from_ints(&[1, 0]), &pb[1]).unwrap(), 1);
        assert_eq!(height(b2, &from_alpha_coords(b2, &[1, 2])).unwrap(), 3);
        assert_eq!(highest_root(b2), RVec::from_ints(&[1, 1]));
    }

    #[test]
    fn fundamental_weight_duality() {
        for t in all_types(5) {
            let pi = simple_roots(t);
            let w = fundamental_weights(t);
            for (i, a) in pi.iter().enumerate() {
                for (j, v) in w.iter().enumerate() {
                    let expect = if i == j { d_i(t, i + 1) } else { 0 };
                    assert_eq!(inner(t, a, v), Rational64::from_integer(expect), "{t}");
                }
            }
        }
    }
}
