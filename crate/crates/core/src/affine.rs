//! Affine R-matrices with a spectral parameter `z`.
//!
//! The Baxterized matrices are linear combinations of `R̂`, `R̂^{-1}` and the
//! identity with coefficients polynomial in `z`, so their entries live in the
//! rational-function field in `r, s, z, w`. The normalization `f(z)` is a
//! formal power series, and identities involving it are checked by splitting
//! each side into an exact rational part times a truncated series.

use num_rational::Rational64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::freealgebra::Params;
use crate::report::CheckReport;
use crate::rmatrix::{c_matrix, inverse_via_minpoly, minimal_polynomial, rhat, rhat_one_param, MinimalPolynomial};
use crate::rootsystem::{Family, RSType};
use crate::scalars::{q_powi, ExpVec, LaurentPoly, RatFunc, TruncSeries};
use crate::sparse::{flip, leg1, leg2, on_legs, partial_transpose_prime, transpose_prime, SparseOperator};

/// Default series order for the crossing identities.
pub const DEFAULT_AFFINE_ORDER: usize = 10;

fn q(k: i64) -> RatFunc {
    q_powi(k)
}

fn rs_int(a: i64, b: i64) -> RatFunc {
    RatFunc::rs(a.into(), b.into())
}

fn rs_half(a: i64, b: i64) -> RatFunc {
    RatFunc::rs(Rational64::new(a, 2), Rational64::new(b, 2))
}

/// The shift scalar `ξ` and the crossing scalar `v` of the affine crossing identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineScalars {
    pub xi_aff: RatFunc,
    pub v_aff: RatFunc,
}

pub fn affine_scalars(t: RSType) -> Result<AffineScalars> {
    let n = t.rank as i64;
    let (xi, v) = match t.family {
        Family::B => (q(-4 * n + 2), q(-2)),
        Family::C => (q(-2 - 2 * n), q(-1)),
        Family::D => (q(2 - 2 * n), q(-1)),
        Family::A => return Err(Error::Invalid("affine crossing scalars are defined for types B, C, D".into())),
    };
    Ok(AffineScalars { xi_aff: xi, v_aff: v })
}

/// Coefficients `(a, b, c)` of `R̂(z) = a z(z−1) R̂^{-1} + b z Id − c (z−1) R̂` in `q`-form.
pub fn baxter_coefficients(t: RSType) -> Option<(RatFunc, RatFunc, RatFunc)> {
    let n = t.rank as i64;
    let one = RatFunc::one();
    match t.family {
        Family::B => Some((q(-2), &(&one - &q(-4 * n + 2)) * &(&one - &q(-4)), q(-4 * n))),
        Family::C => Some((q(-1), &(&one - &q(-2 * n - 2)) * &(&one - &q(-2)), q(-2 * n - 3))),
        Family::D => Some((q(-1), &(&one - &q(-2 * n + 2)) * &(&one - &q(-2)), q(-2 * n + 1))),
        Family::A => None,
    }
}

/// The same coefficients written in `r, s`.
pub fn baxter_coefficients_rs(t: RSType) -> Option<(RatFunc, RatFunc, RatFunc)> {
    let n = t.rank as i64;
    let one = RatFunc::one();
    match t.family {
        Family::B => {
            Some((rs_int(-1, 1), &(&one - &rs_int(-2 * n + 1, 2 * n - 1)) * &(&one - &rs_int(-2, 2)), rs_int(-2 * n, 2 * n)))
        }
        Family::C => {
            Some((rs_half(-1, 1), &(&one - &rs_int(-n - 1, n + 1)) * &(&one - &rs_int(-1, 1)), rs_half(-2 * n - 3, 2 * n + 3)))
        }
        Family::D => {
            Some((rs_half(-1, 1), &(&one - &rs_int(-n + 1, n - 1)) * &(&one - &rs_int(-1, 1)), rs_half(-2 * n + 1, 2 * n - 1)))
        }
        Family::A => None,
    }
}

/// `R̂`, its inverse and minimal polynomial in the given mode.
fn finite_data(t: RSType, params: Params) -> Result<(SparseOperator, SparseOperator, MinimalPolynomial)> {
    let rh = rhat(t, params)?;
    let mp = minimal_polynomial(&rh)?;
    let inv = inverse_via_minpoly(&rh, &mp)?;
    Ok((rh, inv, mp))
}

fn baxterize_from(t: RSType, rh: &SparseOperator, rh_inv: &SparseOperator) -> Result<SparseOperator> {
    let z = RatFunc::z();
    let one = RatFunc::one();
    let zm1 = &z - &one;
    let id = SparseOperator::identity(rh.dim());
    Ok(match baxter_coefficients(t) {
        Some((a, b, c)) => rh_inv.scale(&(&(&a * &z) * &zm1)).add(&id.scale(&(&b * &z))).sub(&rh.scale(&(&c * &zm1))),
        // Type A: R̂(z) = R̂ − q² z R̂^{-1}.
        None => rh.sub(&rh_inv.scale(&(&q(2) * &z))),
    })
}

/// The Baxterized `R̂(z)` in the given parameter mode.
pub fn baxterize(t: RSType, params: Params) -> Result<SparseOperator> {
    let (rh, inv, _) = finite_data(t, params)?;
    baxterize_from(t, &rh, &inv)
}

/// The type-A two-parameter affine matrix transcribed entry by entry.
pub fn a_affine_transcribed(t: RSType) -> Result<SparseOperator> {
    if t.family != Family::A {
        return Err(Error::Invalid("the transcribed affine matrix is type A".into()));
    }
    let n = t.vec_dim();
    let z = RatFunc::z();
    let one = RatFunc::one();
    let rs = rs_int(1, -1);
    let mut m = SparseOperator::zero(n * n);
    let add = |m: &mut SparseOperator, (i, k): (usize, usize), (j, l): (usize, usize), c: &RatFunc| {
        crate::sparse::add_tensor_unit(m, n, (i, k), (j, l), c)
    };
    for i in 1..=n {
        add(&mut m, (i, i), (i, i), &(&one - &(&z * &rs)));
        for j in 1..=n {
            if i > j {
                add(&mut m, (i, j), (j, i), &(&(&one - &z) * &RatFunc::r()));
                add(&mut m, (i, i), (j, j), &(&one - &rs));
            } else if i < j {
                add(&mut m, (i, j), (j, i), &(&(&one - &z) * &rs_int(0, -1)));
                add(&mut m, (i, i), (j, j), &(&(&one - &rs) * &z));
            }
        }
    }
    Ok(m)
}

/// Substitutes `z ↦ w` in every entry.
pub fn z_to_w(m: &SparseOperator) -> Result<SparseOperator> {
    m.map_entries(|_, _, x| x.map_exponents(|e| ExpVec { c: 0, d: e.c + e.d, ..e.clone() }))
}

/// Substitutes `z ↦ z w` in every entry.
pub fn z_to_zw(m: &SparseOperator) -> Result<SparseOperator> {
    m.map_entries(|_, _, x| x.map_exponents(|e| ExpVec { d: e.c + e.d, ..e.clone() }))
}

/// Substitutes `z ↦ c z` for a monomial scalar `c`.
pub fn z_rescale(m: &SparseOperator, c: &RatFunc) -> Result<SparseOperator> {
    let poly = c.as_poly().filter(|p| p.len() == 1).cloned().ok_or(Error::NotMonomial)?;
    m.map_entries(|_, _, x| x.subst_z_monomial(&poly, 1))
}

/// Substitutes a constant for `z`.
pub fn z_at(m: &SparseOperator, value: i64) -> Result<SparseOperator> {
    let v = LaurentPoly::from_int(value);
    m.map_entries(|_, _, x| {
        let sub = |p: &LaurentPoly| -> LaurentPoly {
            p.split_by_z().into_iter().fold(LaurentPoly::zero(), |acc, (k, c)| {
                let f = if k >= 0 { v.pow(k as u32) } else { LaurentPoly::one() };
                &acc + &(&c * &f)
            })
        };
        if x.num().split_by_z().iter().chain(x.den().split_by_z().iter()).any(|(k, _)| *k < 0) {
            return Err(Error::Invalid("negative power of z".into()));
        }
        RatFunc::new(sub(x.num()), sub(x.den()))
    })
}

/// `R_{12}(z) R_{13}(zw) R_{23}(w) = R_{23}(w) R_{13}(zw) R_{12}(z)` exactly, with `R(z) = R̂(z) τ`.
pub fn check_ybe_spectral(t: RSType, params: Params) -> Result<CheckReport> {
    let n = t.vec_dim();
    let r = baxterize(t, params)?.mul(&flip(n));
    let r12 = on_legs(&r, n, (1, 2))?;
    let r13 = on_legs(&z_to_zw(&r)?, n, (1, 3))?;
    let r23 = on_legs(&z_to_w(&r)?, n, (2, 3))?;
    let (lhs, rhs) = rayon::join(|| r12.mul(&r13).mul(&r23), || r23.mul(&r13).mul(&r12));
    Ok(CheckReport::compare("spectral Yang-Baxter equation", &lhs, &rhs))
}

/// Power series of `f(z)` to the given order, from the closed form of its logarithm:
/// every factor `1 − z c ξ^{2k}` contributes `−Σ_m (z c)^m / (m (1 − ξ^{2m}))` over `k ≥ 0`.
pub fn f_series(t: RSType, order: usize) -> Result<TruncSeries> {
    let AffineScalars { xi_aff: xi, v_aff: v } = affine_scalars(t)?;
    let v2 = &v * &v;
    let v2i = v2.inv()?;
    let xi_i = xi.inv()?;
    let numer = [RatFunc::one(), &v2 * &xi, &v2i * &xi, &xi * &xi];
    let denom = [xi_i, xi.clone(), v2i, v2];
    let mut log = vec![RatFunc::zero(); order];
    for (m, slot) in log.iter_mut().enumerate().skip(1) {
        let mi = m as i64;
        let geo = (&RatFunc::one() - &xi.powi(2 * mi)?).inv()?;
        let mut acc = RatFunc::zero();
        for c in &denom {
            acc = &acc + &c.powi(mi)?;
        }
        for c in &numer {
            acc = &acc - &c.powi(mi)?;
        }
        *slot = &(&acc * &geo) * &RatFunc::from_rational(crate::scalars::BigRational::new(1.into(), mi.into()));
    }
    TruncSeries::from_coeffs(log, order).exp()
}

/// The `k = 0` factor of the product for `f(z)`, a rational function of `z`.
pub fn f_first_factor(t: RSType) -> Result<RatFunc> {
    let AffineScalars { xi_aff: xi, v_aff: v } = affine_scalars(t)?;
    let z = RatFunc::z();
    let one = RatFunc::one();
    let lin = |c: &RatFunc| &one - &(&z * c);
    let v2 = &v * &v;
    let v2i = v2.inv()?;
    let num = &(&(&lin(&one) * &lin(&(&v2 * &xi))) * &lin(&(&v2i * &xi))) * &lin(&(&xi * &xi));
    let den = &(&(&lin(&xi.inv()?) * &lin(&xi)) * &lin(&v2i)) * &lin(&v2);
    num.checked_div(&den)
}

/// A power series `Σ_n c_n z^n / (p;p)_n` with Laurent-polynomial numerators `c_n`.
///
/// Products of `q`-Pochhammer symbols stay polynomial in this form, which keeps
/// high orders cheap compared with series over the rational-function field.
#[derive(Clone, Debug, PartialEq)]
pub struct PochhammerSeries {
    pub base: LaurentPoly,
    pub numerators: Vec<LaurentPoly>,
}

/// `(x;p)_j = Π_{i<j} (1 − x p^i)`.
pub fn pochhammer(x: &LaurentPoly, p: &LaurentPoly, j: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    let mut xp = x.clone();
    for _ in 0..j {
        acc = &acc * &(&LaurentPoly::one() - &xp);
        xp = &xp * p;
    }
    acc
}

/// Gaussian binomials `[n, k]_p` for `n < order`.
fn gaussian_binomials(p: &LaurentPoly, order: usize) -> Vec<Vec<LaurentPoly>> {
    let mut rows: Vec<Vec<LaurentPoly>> = vec![vec![LaurentPoly::one()]];
    for n in 1..order {
        let prev = &rows[n - 1];
        let mut row = vec![LaurentPoly::one(); n + 1];
        let mut pk = p.clone();
        for k in 1..n {
            row[k] = &prev[k - 1] + &(&pk * &prev[k]);
            pk = &pk * p;
        }
        rows.push(row);
    }
    rows
}

impl PochhammerSeries {
    /// `(c z; p)_∞` if `numerator`, else `1 / (c z; p)_∞`.
    pub fn factor(c: &LaurentPoly, p: &LaurentPoly, numerator: bool, order: usize) -> Self {
        let numerators = (0..order)
            .map(|k| {
                let ck = c.pow(k as u32);
                if !numerator {
                    return ck;
                }
                let term = &ck * &p.pow((k * k.saturating_sub(1) / 2) as u32);
                if k % 2 == 1 {
                    -term
                } else {
                    term
                }
            })
            .collect();
        PochhammerSeries { base: p.clone(), numerators }
    }

    pub fn order(&self) -> usize {
        self.numerators.len()
    }

    pub fn mul(&self, o: &Self) -> Self {
        let order = self.order().min(o.order());
        let binom = gaussian_binomials(&self.base, order);
        let numerators = (0..order)
            .into_par_iter()
            .map(|n| {
                (0..=n).fold(LaurentPoly::zero(), |acc, k| &acc + &(&binom[n][k] * &(&self.numerators[k] * &o.numerators[n - k])))
            })
            .collect();
        PochhammerSeries { base: self.base.clone(), numerators }
    }

    /// Converts to a series over the rational-function field.
    pub fn to_series(&self) -> Result<TruncSeries> {
        let coeffs = (0..self.order())
            .map(|n| RatFunc::new(self.numerators[n].clone(), pochhammer(&self.base, &self.base, n)))
            .collect::<Result<Vec<_>>>()?;
        Ok(TruncSeries::from_coeffs(coeffs, self.order()))
    }
}

fn as_laurent(x: &RatFunc) -> Result<LaurentPoly> {
    x.as_poly().cloned().ok_or(Error::NotMonomial)
}

/// `f(c z)`, or `1 / f(c z)` when `invert`, as a product of Pochhammer factors in base `ξ²`.
pub fn f_pochhammer(t: RSType, order: usize, c: &RatFunc, invert: bool) -> Result<PochhammerSeries> {
    let AffineScalars { xi_aff: xi, v_aff: v } = affine_scalars(t)?;
    let v2 = &v * &v;
    let v2i = v2.inv()?;
    let numer = [RatFunc::one(), &v2 * &xi, &v2i * &xi, &xi * &xi];
    let denom = [xi.inv()?, xi.clone(), v2i, v2];
    let p = as_laurent(&(&xi * &xi))?;
    let mut acc = PochhammerSeries { base: p.clone(), numerators: vec![LaurentPoly::one(); order] };
    acc.numerators.iter_mut().skip(1).for_each(|x| *x = LaurentPoly::zero());
    for (cs, is_num) in [(&numer, !invert), (&denom, invert)] {
        for a in cs.iter() {
            acc = acc.mul(&PochhammerSeries::factor(&as_laurent(&(a * c))?, &p, is_num, order));
        }
    }
    Ok(acc)
}

/// The one-parameter spectral matrix `R_q(z) = R̂_q(z) τ` and a polynomial
/// multiple `N(z) = d D(z) R_q(z)^{-1}`, where `D(z) = Π_k g_k(z)` is the
/// product of the eigenvalues of `R̂_q(z)` and `d` clears the denominators of
/// the eigenprojectors.
pub struct SpectralData {
    pub r: SparseOperator,
    pub n_inv: SparseOperator,
    pub denominator: LaurentPoly,
}

pub fn spectral_data(t: RSType) -> Result<SpectralData> {
    let (rh, rh_inv, mp) = finite_data(t, Params::OneParam)?;
    let rz = baxterize_from(t, &rh, &rh_inv)?;
    let (a, b, c) = baxter_coefficients(t).ok_or_else(|| Error::Invalid("type A has no crossing data".into()))?;
    let z = RatFunc::z();
    let zm1 = &z - &RatFunc::one();
    let dim = rh.dim();
    let id = SparseOperator::identity(dim);
    let roots = &mp.roots;
    // R̂(z) acts on the λ-eigenspace by a z(z−1)/λ + b z − c (z−1) λ.
    let g: Vec<RatFunc> = roots
        .iter()
        .map(|lam| Ok(&(&(&(&a * &z) * &zm1) * &lam.inv()?) + &(&(&b * &z) - &(&(&c * &zm1) * lam))))
        .collect::<Result<_>>()?;
    let others = |k: usize| (0..roots.len()).filter(move |&j| j != k);
    let d_k: Vec<RatFunc> =
        (0..roots.len()).map(|k| others(k).fold(RatFunc::one(), |acc, j| &acc * &(&roots[k] - &roots[j]))).collect();
    let mut n_inv = SparseOperator::zero(dim);
    for k in 0..roots.len() {
        let proj = others(k).fold(id.clone(), |acc, j| acc.mul(&rh.sub(&id.scale(&roots[j]))));
        let coeff = others(k).fold(RatFunc::one(), |acc, j| &(&acc * &d_k[j]) * &g[j]);
        n_inv = n_inv.add(&proj.scale(&coeff));
    }
    let d = d_k.iter().fold(RatFunc::one(), |acc, x| &acc * x);
    let big_d = g.iter().fold(RatFunc::one(), |acc, x| &acc * x);
    let n = t.vec_dim();
    Ok(SpectralData { r: rz.mul(&flip(n)), n_inv: flip(n).mul(&n_inv), denominator: as_laurent(&(&d * &big_d))? })
}

/// Returns `g` if `m = g I`, otherwise `None`.
fn scalar_of(m: &SparseOperator) -> Option<RatFunc> {
    if !m.is_diagonal() || m.nnz() != m.dim() {
        return None;
    }
    let d = m.diagonal_entries();
    d.iter().all(|x| *x == d[0]).then(|| d[0].clone())
}

/// One affine crossing identity in polynomial form: the claim is
/// `matrix = (h(z) / denominator(z)) I` with `h(z) · series ≡ expected · denominator(z)`.
pub struct AffineIdentity {
    pub index: usize,
    pub matrix: SparseOperator,
    pub denominator: LaurentPoly,
    pub series: PochhammerSeries,
    pub expected: LaurentPoly,
}

fn rescale_poly(p: &LaurentPoly, c: &RatFunc) -> Result<LaurentPoly> {
    as_laurent(&RatFunc::from_poly(p.clone()).subst_z_monomial(&as_laurent(c)?, 1)?)
}

/// The four affine crossing identities for `R̃_q(z) = f(z) R_q(z)`, split into
/// polynomial matrix parts built from `R_q` and series parts built from `f`.
pub fn affine_crossing_parts(t: RSType, order: usize) -> Result<Vec<AffineIdentity>> {
    let AffineScalars { xi_aff: xi, v_aff: v } = affine_scalars(t)?;
    let data = spectral_data(t)?;
    let n = t.vec_dim();
    let c = c_matrix(t, Params::OneParam)?;
    let inv_diag = |m: &SparseOperator| -> Result<SparseOperator> {
        Ok(SparseOperator::diagonal(m.diagonal_entries().iter().map(|x| x.inv()).collect::<Result<_>>()?))
    };
    let ci = inv_diag(&c)?;
    let ct = transpose_prime(&c);
    let cti = inv_diag(&ct)?;
    let xi_inv = xi.inv()?;
    let pt = |m: &SparseOperator, leg| partial_transpose_prime(m, n, leg);
    let (r, ni) = (&data.r, &data.n_inv);
    let (r_up, ni_up) = (z_rescale(r, &xi)?, z_rescale(ni, &xi)?);
    let (r_dn, ni_dn) = (z_rescale(r, &xi_inv)?, z_rescale(ni, &xi_inv)?);
    let den = &data.denominator;
    let (den_up, den_dn) = (rescale_poly(den, &xi)?, rescale_poly(den, &xi_inv)?);

    let one = RatFunc::one();
    let scalar = as_laurent(&(&(&xi * &xi) * &(&v * &v)))?;
    let scalar_inv = as_laurent(&RatFunc::from_poly(scalar.clone()).inv()?)?;

    let matrices = [
        r.mul(&leg1(&c)).mul(&pt(&r_up, 1)?).mul(&leg1(&ci)),
        leg1(&cti).mul(&ni_up).mul(&leg1(&ct)).mul(&pt(ni, 1)?),
        leg2(&cti).mul(&r_dn).mul(&leg2(&ct)).mul(&pt(r, 2)?),
        ni.mul(&leg2(&c)).mul(&pt(&ni_dn, 2)?).mul(&leg2(&ci)),
    ];
    let denominators = [LaurentPoly::one(), &den_up * den, LaurentPoly::one(), den * &den_dn];
    let shifts = [(&xi, false), (&xi, true), (&xi_inv, false), (&xi_inv, true)];
    let series = shifts
        .iter()
        .map(|(sh, inv)| Ok(f_pochhammer(t, order, &one, *inv)?.mul(&f_pochhammer(t, order, sh, *inv)?)))
        .collect::<Result<Vec<_>>>()?;
    let expected = [scalar.clone(), scalar_inv.clone(), scalar, scalar_inv];
    Ok(matrices
        .into_iter()
        .zip(denominators)
        .zip(series)
        .zip(expected)
        .enumerate()
        .map(|(k, (((matrix, denominator), series), expected))| AffineIdentity {
            index: k + 1,
            matrix,
            denominator,
            series,
            expected,
        })
        .collect())
}

fn z_coefficients(p: &LaurentPoly, order: usize) -> Result<Vec<LaurentPoly>> {
    let mut out = vec![LaurentPoly::zero(); order];
    for (k, c) in p.split_by_z() {
        if k < 0 {
            return Err(Error::Invalid("negative power of z".into()));
        }
        if (k as usize) < order {
            out[k as usize] = c;
        }
    }
    Ok(out)
}

/// Checks one identity to order `order`, returning the first failing power of `z`.
pub fn check_affine_identity(p: &AffineIdentity, order: usize) -> Result<CheckReport> {
    let name = format!("affine crossing identity {}", p.index);
    let Some(g) = scalar_of(&p.matrix) else {
        return Ok(CheckReport::fail(name, "matrix part is not a scalar multiple of I"));
    };
    let h = z_coefficients(&as_laurent(&g)?, order)?;
    let k = z_coefficients(&p.denominator, order)?;
    if k[0].is_zero() {
        return Err(Error::Invalid("denominator vanishes at z = 0".into()));
    }
    let base = &p.series.base;
    // Coefficient n of h·S times (p;p)_n, against expected · k_n · (p;p)_n.
    let bad = (0..order.min(p.series.order())).into_par_iter().find_first(|&n| {
        let lhs = (0..=n).fold(LaurentPoly::zero(), |acc, j| {
            let shift = pochhammer(&base.pow((n - j + 1) as u32), base, j);
            &acc + &(&(&h[j] * &p.series.numerators[n - j]) * &shift)
        });
        let rhs = &(&p.expected * &k[n]) * &pochhammer(base, base, n);
        lhs != rhs
    });
    Ok(match bad {
        None => CheckReport::pass(name),
        Some(n) => CheckReport::fail(name, format!("first failing order z^{n}")),
    })
}

/// Verifies the four affine crossing identities to the given series order.
pub fn affine_crossing_check(t: RSType, order: usize) -> Result<Vec<CheckReport>> {
    if order < 1 {
        return Err(Error::Invalid("series order must be positive".into()));
    }
    affine_crossing_parts(t, order)?.par_iter().map(|p| check_affine_identity(p, order)).collect()
}

/// `R̂_{r,s}(z) = (ψ⊗ψ)^{-1} ξ R̂_q(z) ξ^{-1} (ψ⊗ψ)`, with `R̂_{r,s}(z)` Baxterized from `R̂_{r,s}`
/// and, in type A, also compared with the transcribed matrix.
pub fn affine_twist_check(t: RSType) -> Result<Vec<CheckReport>> {
    let two = baxterize(t, Params::TwoParam)?;
    let xi = crate::rmatrix::xi_diagonal(t)?;
    let s = crate::rmatrix::s_diagonal(t);
    let d: Vec<RatFunc> = xi.iter().zip(&s).map(|(x, y)| x.checked_div(y)).collect::<Result<_>>()?;
    let conj = baxterize(t, Params::OneParam)?.conjugate_diagonal(&d)?;
    let mut out = vec![CheckReport::compare("affine twist identity", &two, &conj)];
    if t.family == Family::A {
        out.push(CheckReport::compare("affine type-A transcription", &two, &a_affine_transcribed(t)?));
    }
    Ok(out)
}

/// `R̂(0)` as the stated multiple of `R̂`: `q^{−4n}` in B, `q^{−2n−3}` in C, `q^{−2n+1}` in D, 1 in A.
pub fn z_zero_check(t: RSType, params: Params) -> Result<CheckReport> {
    let at0 = z_at(&baxterize(t, params)?, 0)?;
    let factor = baxter_coefficients(t).map(|(_, _, c)| c).unwrap_or_else(RatFunc::one);
    Ok(CheckReport::compare("R̂(0) reduction", &at0, &rhat(t, params)?.scale(&factor)))
}

/// The one-parameter Baxterized matrix for direct use.
pub fn baxterize_one(t: RSType) -> Result<SparseOperator> {
    let rh = rhat_one_param(t);
    let mp = minimal_polynomial(&rh)?;
    baxterize_from(t, &rh, &inverse_via_minpoly(&rh, &mp)?)
}
