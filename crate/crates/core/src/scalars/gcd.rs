//! Multivariate polynomial gcd over Q, used to bring rational functions to normal form.
//!
//! Laurent polynomials with rational exponents are lifted to ordinary
//! polynomials in four variables by clearing exponent denominators and
//! shifting by the monomial content. The gcd itself is the recursive
//! primitive pseudo-remainder sequence.

use num_integer::Integer;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Zero};

use super::laurent::{ExpVec, LaurentPoly};

const NV: usize = 4;
type Exps = [u32; NV];

/// Sparse polynomial in `NV` variables, terms sorted by descending lex exponent.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct MPoly {
    terms: Vec<(Exps, BigRational)>,
}

fn cmp_desc(a: &Exps, b: &Exps) -> std::cmp::Ordering {
    b.cmp(a)
}

impl MPoly {
    fn zero() -> Self {
        MPoly { terms: Vec::new() }
    }

    fn one() -> Self {
        MPoly { terms: vec![([0; NV], BigRational::one())] }
    }

    fn from_raw(mut raw: Vec<(Exps, BigRational)>) -> Self {
        raw.sort_by(|x, y| cmp_desc(&x.0, &y.0));
        let mut terms: Vec<(Exps, BigRational)> = Vec::with_capacity(raw.len());
        for (e, c) in raw {
            match terms.last_mut() {
                Some(last) if last.0 == e => last.1 += c,
                _ => terms.push((e, c)),
            }
        }
        terms.retain(|t| !t.1.is_zero());
        MPoly { terms }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.0 == [0; NV])
    }

    fn sub(&self, o: &MPoly) -> MPoly {
        let mut raw = self.terms.clone();
        raw.extend(o.terms.iter().map(|(e, c)| (*e, -c.clone())));
        MPoly::from_raw(raw)
    }

    fn mul(&self, o: &MPoly) -> MPoly {
        let mut raw = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let mut e = *e1;
                for k in 0..NV {
                    e[k] += e2[k];
                }
                raw.push((e, c1 * c2));
            }
        }
        MPoly::from_raw(raw)
    }

    fn scale(&self, c: &BigRational) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    fn deg(&self, k: usize) -> u32 {
        self.terms.iter().map(|t| t.0[k]).max().unwrap_or(0)
    }

    /// Coefficients of `x_k^d` for d = 0..=deg, each free of `x_k`.
    fn univariate(&self, k: usize) -> Vec<MPoly> {
        let d = self.deg(k) as usize;
        let mut raw: Vec<Vec<(Exps, BigRational)>> = vec![Vec::new(); d + 1];
        for (e, c) in &self.terms {
            let mut e2 = *e;
            e2[k] = 0;
            raw[e[k] as usize].push((e2, c.clone()));
        }
        raw.into_iter().map(MPoly::from_raw).collect()
    }

    fn from_univariate(coeffs: &[MPoly], k: usize) -> MPoly {
        let mut raw = Vec::new();
        for (d, c) in coeffs.iter().enumerate() {
            for (e, x) in &c.terms {
                let mut e2 = *e;
                e2[k] += d as u32;
                raw.push((e2, x.clone()));
            }
        }
        MPoly::from_raw(raw)
    }

    /// Exact division in lex order; `None` when `d` does not divide `self`.
    fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        if d.is_zero() {
            return None;
        }
        let (ld_e, ld_c) = d.terms[0].clone();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while !rem.is_zero() {
            let (le, lc) = rem.terms[0].clone();
            let mut qe = [0u32; NV];
            for k in 0..NV {
                if le[k] < ld_e[k] {
                    return None;
                }
                qe[k] = le[k] - ld_e[k];
            }
            let qc = lc / &ld_c;
            let t = MPoly { terms: vec![(qe, qc.clone())] };
            rem = rem.sub(&t.mul(d));
            quot.push((qe, qc));
        }
        Some(MPoly::from_raw(quot))
    }

    /// Scales so the leading coefficient is one.
    fn monic(&self) -> MPoly {
        match self.terms.first() {
            None => MPoly::zero(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    fn first_var(&self) -> Option<usize> {
        (0..NV).find(|&k| self.deg(k) > 0)
    }
}

/// Gcd normalized to be monic in lex order (the unit ambiguity over Q).
pub(crate) fn gcd(f: &MPoly, g: &MPoly) -> MPoly {
    if f.is_zero() {
        return g.monic();
    }
    if g.is_zero() {
        return f.monic();
    }
    if f.is_constant() || g.is_constant() {
        return MPoly::one();
    }
    let kf = f.first_var().unwrap_or(NV);
    let kg = g.first_var().unwrap_or(NV);
    let k = kf.min(kg);
    if kf > k {
        // f is free of x_k, so it divides only the content of g in x_k.
        return gcd(f, &content(g, k));
    }
    if kg > k {
        return gcd(&content(f, k), g);
    }
    let cf = content(f, k);
    let cg = content(g, k);
    let c = gcd(&cf, &cg);
    let pf = f.div_exact(&cf).expect("content divides");
    let pg = g.div_exact(&cg).expect("content divides");
    let h = prs(&pf, &pg, k);
    c.mul(&h).monic()
}

fn content(f: &MPoly, k: usize) -> MPoly {
    let mut acc = MPoly::zero();
    for c in f.univariate(k) {
        if c.is_zero() {
            continue;
        }
        acc = gcd(&acc, &c);
        if acc.is_constant() {
            return MPoly::one();
        }
    }
    acc
}

fn primitive(f: &MPoly, k: usize) -> MPoly {
    if f.is_zero() {
        return MPoly::zero();
    }
    let c = content(f, k);
    f.div_exact(&c).expect("content divides").monic()
}

fn prem(a: &MPoly, b: &MPoly, k: usize) -> MPoly {
    let bu = b.univariate(k);
    let db = bu.len() - 1;
    let lb = bu[db].clone();
    let mut au = a.univariate(k);
    while au.len() > db && !(au.len() == 1 && au[0].is_zero()) {
        let da = au.len() - 1;
        let la = au[da].clone();
        let mut next: Vec<MPoly> = au.iter().map(|c| c.mul(&lb)).collect();
        for (i, c) in bu.iter().enumerate() {
            let idx = i + da - db;
            next[idx] = next[idx].sub(&c.mul(&la));
        }
        while next.len() > 1 && next.last().map(|c| c.is_zero()).unwrap_or(false) {
            next.pop();
        }
        if next.len() == 1 && next[0].is_zero() {
            return MPoly::zero();
        }
        au = next;
        if au.len() - 1 < db {
            break;
        }
    }
    MPoly::from_univariate(&au, k)
}

fn prs(f: &MPoly, g: &MPoly, k: usize) -> MPoly {
    let (mut a, mut b) = if f.deg(k) >= g.deg(k) { (f.clone(), g.clone()) } else { (g.clone(), f.clone()) };
    while !b.is_zero() {
        if b.deg(k) == 0 {
            return MPoly::one();
        }
        let r = prem(&a, &b, k);
        a = b;
        b = primitive(&r, k);
    }
    if a.deg(k) == 0 {
        MPoly::one()
    } else {
        primitive(&a, k)
    }
}

/// Lifting data: `r = R^lr`, `s = S^ls`, plus the monomial shift.
struct Lift {
    lr: i64,
    ls: i64,
}

impl Lift {
    fn for_polys(ps: &[&LaurentPoly]) -> Lift {
        let mut lr = 1i64;
        let mut ls = 1i64;
        for p in ps {
            for (e, _) in p.terms() {
                lr = lr.lcm(e.a.denom());
                ls = ls.lcm(e.b.denom());
            }
        }
        Lift { lr, ls }
    }

    fn raise(&self, p: &LaurentPoly) -> (MPoly, ExpVec) {
        let shift = p.min_exponents().unwrap_or_else(ExpVec::zero);
        let raw = p
            .terms()
            .iter()
            .map(|(e, c)| {
                let d = e.sub(&shift);
                let a = d.a * Rational64::from_integer(self.lr);
                let b = d.b * Rational64::from_integer(self.ls);
                debug_assert!(a.is_integer() && b.is_integer());
                ([*a.numer() as u32, *b.numer() as u32, d.c as u32, d.d as u32], c.clone())
            })
            .collect();
        (MPoly::from_raw(raw), shift)
    }

    fn lower(&self, m: &MPoly) -> LaurentPoly {
        LaurentPoly::from_terms(
            m.terms
                .iter()
                .map(|(e, c)| {
                    (
                        ExpVec {
                            a: Rational64::new(e[0] as i64, self.lr),
                            b: Rational64::new(e[1] as i64, self.ls),
                            c: e[2] as i64,
                            d: e[3] as i64,
                        },
                        c.clone(),
                    )
                })
                .collect(),
        )
    }
}

/// Returns `(a/g, b/g)` for `g = gcd(a, b)` computed in the Laurent ring.
pub(crate) fn cancel_common(a: &LaurentPoly, b: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    let lift = Lift::for_polys(&[a, b]);
    let (ma, sa) = lift.raise(a);
    let (mb, sb) = lift.raise(b);
    let g = gcd(&ma, &mb);
    if g.is_constant() {
        return (a.clone(), b.clone());
    }
    let qa = ma.div_exact(&g).expect("gcd divides");
    let qb = mb.div_exact(&g).expect("gcd divides");
    let one = BigRational::one();
    (lift.lower(&qa).mul_monomial(&one, &sa), lift.lower(&qb).mul_monomial(&one, &sb))
}

/// Exact Laurent division `a / b`, or `None` if `b` does not divide `a`.
pub(crate) fn laurent_div_exact(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    if b.is_zero() {
        return None;
    }
    let lift = Lift::for_polys(&[a, b]);
    let (ma, sa) = lift.raise(a);
    let (mb, sb) = lift.raise(b);
    let q = ma.div_exact(&mb)?;
    Some(lift.lower(&q).mul_monomial(&BigRational::one(), &sa.sub(&sb)))
}
