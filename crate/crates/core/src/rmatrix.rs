//! Finite R-matrices on `V ⊗ V` for the first fundamental representation.
//!
//! Basis vectors of `V` are `v_1, …, v_N` with `i' = N + 1 − i`; `v_i` has
//! weight `ε_i`, `v_{i'}` has weight `−ε_i`, and in type B the middle vector
//! `v_{n+1}` has weight 0. Type A uses the `gl_{n+1}` weights `ε_1, …, ε_{n+1}`.
//! `R = R̂ ∘ τ` throughout.

use num_rational::Rational64;
use num_traits::{Signed, Zero};

use crate::bicharacter::{cartan_pairing_eps, psi_diag, zeta_on_p, RsExp};
use crate::error::{Error, Result};
use crate::freealgebra::Params;
use crate::report::CheckReport;
use crate::rootsystem::{Family, RSType, RVec};
use crate::scalars::{q_pow, q_powi, LaurentPoly, RatFunc};
use crate::sparse::{
    add_tensor_unit, flip, leg1, leg2, on_legs, partial_transpose_prime, transpose_prime, Mismatch, SparseOperator,
};

/// `i' = N + 1 − i`.
pub fn prime(t: RSType, i: usize) -> usize {
    t.vec_dim() + 1 - i
}

/// Weight label of the basis vector `v_k` (1-based).
pub fn basis_weight(t: RSType, k: usize) -> RVec {
    let d = t.eps_dim();
    let n = t.rank;
    match t.family {
        Family::A => RVec::eps(d, k),
        Family::B if k == n + 1 => RVec::zero(d),
        _ if k <= n => RVec::eps(d, k),
        _ => -&RVec::eps(d, prime(t, k)),
    }
}

fn q(k: i64) -> RatFunc {
    q_powi(k)
}

fn rs_mono(a: i64, b: i64) -> RatFunc {
    RatFunc::rs(a.into(), b.into())
}

/// Side of `V ⊗ V` as `N`.
fn side_dim(m: &SparseOperator) -> Result<usize> {
    let d = m.dim();
    let n = (d as f64).sqrt().round() as usize;
    if n * n != d {
        return Err(Error::Invalid(format!("operator of size {d} does not act on V⊗V")));
    }
    Ok(n)
}

/// The type-A matrix `Σ E_ii⊗E_ii + up Σ_{i<j} E_ji⊗E_ij + down Σ_{i<j} E_ij⊗E_ji + low Σ_{i<j} E_jj⊗E_ii`.
fn type_a(n: usize, up: &RatFunc, down: &RatFunc, low: &RatFunc) -> SparseOperator {
    let mut m = SparseOperator::zero(n * n);
    for i in 1..=n {
        add_tensor_unit(&mut m, n, (i, i), (i, i), &RatFunc::one());
        for j in i + 1..=n {
            add_tensor_unit(&mut m, n, (j, i), (i, j), up);
            add_tensor_unit(&mut m, n, (i, j), (j, i), down);
            add_tensor_unit(&mut m, n, (j, j), (i, i), low);
        }
    }
    m
}

/// Common shape of the B/C/D matrices; `swap(i, j)` weighs `E_ij⊗E_ji` and
/// `tt(i, j)` is the factor of `E_{i'j}⊗E_{ij'}` for `i < j`.
fn orthogonal_rhat(t: RSType, swap: &dyn Fn(usize, usize) -> RatFunc, tt: &dyn Fn(usize, usize) -> RatFunc) -> SparseOperator {
    let n = t.rank;
    let nn = t.vec_dim();
    let p = |i: usize| nn + 1 - i;
    let is_b = t.family == Family::B;
    let (dg, anti, kpre, lower) =
        if is_b { (q(-2), q(2), &q(2) - &q(-2), &q(-2) - &q(2)) } else { (q(-1), q(1), &q(1) - &q(-1), &q(-1) - &q(1)) };
    let mut m = SparseOperator::zero(nn * nn);
    for i in 1..=nn {
        if is_b && i == n + 1 {
            add_tensor_unit(&mut m, nn, (i, i), (i, i), &RatFunc::one());
        } else {
            add_tensor_unit(&mut m, nn, (i, i), (i, i), &dg);
            add_tensor_unit(&mut m, nn, (i, p(i)), (p(i), i), &anti);
        }
    }
    for i in 1..=nn {
        for j in 1..=nn {
            if j != i && j != p(i) {
                add_tensor_unit(&mut m, nn, (i, j), (j, i), &swap(i, j));
            }
        }
    }
    let one = RatFunc::one();
    for i in 1..=n {
        let ii = i as i64;
        let nn_ = n as i64;
        let corr = match t.family {
            Family::B => &kpre * &(&q(4 * (nn_ - ii) + 2) - &one),
            Family::C => &lower * &(&q(2 * (nn_ + 1 - ii)) + &one),
            Family::D => &lower * &(&one - &q(2 * (nn_ - ii))),
            Family::A => unreachable!("type A has its own builder"),
        };
        add_tensor_unit(&mut m, nn, (p(i), p(i)), (i, i), &corr);
    }
    for i in 1..=nn {
        for j in 1..=nn {
            if j == p(i) {
                continue;
            }
            if i > j {
                add_tensor_unit(&mut m, nn, (i, i), (j, j), &lower);
            } else if i < j {
                add_tensor_unit(&mut m, nn, (p(i), j), (i, p(j)), &(&kpre * &tt(i, j)));
            }
        }
    }
    m
}

/// `t_i(q)` of the one-parameter displays.
fn t_value(t: RSType, i: usize) -> RatFunc {
    let n = t.rank as i64;
    let i = i as i64;
    match t.family {
        Family::B if i < n + 1 => q(2 * (n - i) + 1),
        Family::B if i == n + 1 => q(1),
        Family::B => q(2 * (n + 1 - i) + 1),
        Family::C if i <= n => q(n + 1 - i),
        Family::C => -q(n - i),
        Family::D if i <= n => q(n - i),
        Family::D => q(n + 1 - i),
        Family::A => unreachable!("no t-table in type A"),
    }
}

/// The one-parameter `R̂_q` with `q = r^{1/2}s^{-1/2}`.
pub fn rhat_one_param(t: RSType) -> SparseOperator {
    if t.family == Family::A {
        let n = t.vec_dim();
        return type_a(n, &q(1), &q(1), &(&RatFunc::one() - &q(2)));
    }
    let tt = |i: usize, j: usize| &t_value(t, i) / &t_value(t, j);
    orthogonal_rhat(t, &|_, _| RatFunc::one(), &tt)
}

/// `D = Σ ζ(ε_j, ε_i) E_ii ⊗ E_jj`, the matrix of `ξ_{V,V}`, as its diagonal.
pub fn xi_diagonal(t: RSType) -> Result<Vec<RatFunc>> {
    let z = zeta_on_p(t);
    let nn = t.vec_dim();
    let w: Vec<RVec> = (1..=nn).map(|k| basis_weight(t, k)).collect();
    let mut out = Vec::with_capacity(nn * nn);
    for i in 0..nn {
        for j in 0..nn {
            out.push(z.value(&w[j], &w[i])?);
        }
    }
    Ok(out)
}

pub fn xi_matrix(t: RSType) -> Result<SparseOperator> {
    Ok(SparseOperator::diagonal(xi_diagonal(t)?))
}

/// `S = Σ ψ_i ψ_j E_ii ⊗ E_jj`, the matrix of `ψ ⊗ ψ`, as its diagonal.
pub fn s_diagonal(t: RSType) -> Vec<RatFunc> {
    let psi = psi_diag(t);
    let mut out = Vec::with_capacity(psi.len() * psi.len());
    for a in &psi {
        for b in &psi {
            out.push(a.mul(*b).to_ratfunc());
        }
    }
    out
}

pub fn s_matrix(t: RSType) -> SparseOperator {
    SparseOperator::diagonal(s_diagonal(t))
}

/// `ξ R̂_q ξ^{-1}`, the intertwiner of `ρ̃_{r,s} ⊗ ρ̃_{r,s}`.
pub fn rhat_xi_conjugated(t: RSType) -> Result<SparseOperator> {
    rhat_one_param(t).conjugate_diagonal(&xi_diagonal(t)?)
}

/// `R̂_{r,s} = (ψ⊗ψ)^{-1} ξ R̂_q ξ^{-1} (ψ⊗ψ)`.
pub fn rhat_two_param(t: RSType) -> Result<SparseOperator> {
    let xi = xi_diagonal(t)?;
    let s = s_diagonal(t);
    let d: Vec<RatFunc> = xi.iter().zip(&s).map(|(x, y)| x.checked_div(y)).collect::<Result<_>>()?;
    rhat_one_param(t).conjugate_diagonal(&d)
}

/// `R̂` in the requested parameter mode.
pub fn rhat(t: RSType, params: Params) -> Result<SparseOperator> {
    match params {
        Params::OneParam => Ok(rhat_one_param(t)),
        Params::TwoParam => rhat_two_param(t),
    }
}

/// `t_i t_j^{-1} ψ_i^{-1} ψ_{i'}^{-1} ψ_j ψ_{j'}` from its closed-form case list.
fn twisted_t_ratio(t: RSType, i: usize, j: usize) -> RatFunc {
    let n = t.rank as i64;
    let (i, j) = (i as i64, j as i64);
    match t.family {
        Family::B => {
            if j < n + 1 {
                rs_mono(0, 2 * (i - j))
            } else if j == n + 1 {
                rs_mono(0, 2 * (i - n))
            } else if i < n + 1 {
                rs_mono(2 * (j - n - 1) - 1, 2 * (i - n) - 1)
            } else if i == n + 1 {
                rs_mono(2 * (j - n - 1) - 1, -1)
            } else {
                rs_mono(2 * (j - i), 0)
            }
        }
        Family::C => {
            if j <= n {
                rs_mono(0, i - j)
            } else if i <= n {
                -rs_mono(j - n, i - n - 1)
            } else {
                rs_mono(j - i, 0)
            }
        }
        Family::D => {
            if j <= n {
                rs_mono(0, i - j)
            } else if i <= n {
                rs_mono(j - n - 1, i - n)
            } else {
                rs_mono(j - i, 0)
            }
        }
        Family::A => unreachable!("no t-table in type A"),
    }
}

/// The two-parameter matrix assembled entry by entry, independently of the
/// conjugation: type A from its explicit display, types B/C/D with swap
/// weights `a_ij = (ω'_{ε_j}, ω_{ε_i})^{-1}` and the closed-form last-term table.
pub fn rhat_two_param_assembled(t: RSType) -> Result<SparseOperator> {
    if t.family == Family::A {
        let n = t.vec_dim();
        return Ok(type_a(n, &RatFunc::r(), &RatFunc::s().inv()?, &(&RatFunc::one() - &rs_mono(1, -1))));
    }
    let nn = t.vec_dim();
    let mut swaps = vec![vec![RatFunc::zero(); nn + 1]; nn + 1];
    for i in 1..=nn {
        for j in 1..=nn {
            let a = cartan_pairing_eps(t, &basis_weight(t, j), &basis_weight(t, i))?;
            swaps[i][j] = a.inv().to_ratfunc();
        }
    }
    let tt = |i: usize, j: usize| twisted_t_ratio(t, i, j);
    Ok(orthogonal_rhat(t, &|i, j| swaps[i][j].clone(), &tt))
}

/// `R = R̂ ∘ τ`.
pub fn r_from_rhat(rhat: &SparseOperator) -> Result<SparseOperator> {
    Ok(rhat.mul(&flip(side_dim(rhat)?)))
}

/// `R̂_{12} R̂_{23} R̂_{12} = R̂_{23} R̂_{12} R̂_{23}` on `V^{⊗3}`.
pub fn check_braid(rhat: &SparseOperator) -> Result<CheckReport> {
    let n = side_dim(rhat)?;
    let a = on_legs(rhat, n, (1, 2))?;
    let b = on_legs(rhat, n, (2, 3))?;
    let lhs = a.mul(&b).mul(&a);
    let rhs = b.mul(&a).mul(&b);
    Ok(CheckReport::compare("braid relation", &lhs, &rhs))
}

/// `R_{12} R_{13} R_{23} = R_{23} R_{13} R_{12}` on `V^{⊗3}`.
pub fn check_ybe(r: &SparseOperator) -> Result<CheckReport> {
    let n = side_dim(r)?;
    let r12 = on_legs(r, n, (1, 2))?;
    let r13 = on_legs(r, n, (1, 3))?;
    let r23 = on_legs(r, n, (2, 3))?;
    let lhs = r12.mul(&r13).mul(&r23);
    let rhs = r23.mul(&r13).mul(&r12);
    Ok(CheckReport::compare("Yang-Baxter equation", &lhs, &rhs))
}

/// `D R_q D` solves the Yang–Baxter equation for `D = ξ`, which satisfies `d_ij = d_ji^{-1}`.
pub fn ybe_twist_lemma_check(t: RSType) -> Result<Vec<CheckReport>> {
    let nn = t.vec_dim();
    let xi = xi_diagonal(t)?;
    let mut skew = true;
    for i in 0..nn {
        for j in 0..nn {
            if &xi[i * nn + j] * &xi[j * nn + i] != RatFunc::one() {
                skew = false;
            }
        }
    }
    let d = SparseOperator::diagonal(xi);
    let r = r_from_rhat(&rhat_one_param(t))?;
    let drd = d.mul(&r).mul(&d);
    let mut out = vec![CheckReport::from_bool("d_ij d_ji = 1", skew, "ξ is not skew")];
    let mut y = check_ybe(&drd)?;
    y.name = "Yang-Baxter equation for D R_q D".into();
    out.push(y);
    Ok(out)
}

/// A monic minimal polynomial together with its roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalPolynomial {
    /// Coefficients in ascending order; the last one is 1.
    pub coeffs: Vec<RatFunc>,
    /// Distinct roots, one per linear factor.
    pub roots: Vec<RatFunc>,
}

impl MinimalPolynomial {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: &RatFunc) -> RatFunc {
        self.coeffs.iter().rev().fold(RatFunc::zero(), |acc, c| &(&acc * x) + c)
    }

    /// Linear factors `(λ, [−λ, 1])`, one per eigenvalue.
    pub fn factors(&self) -> Vec<(RatFunc, Vec<RatFunc>)> {
        self.roots.iter().map(|x| (x.clone(), vec![-x, RatFunc::one()])).collect()
    }

    /// Whether `x` is a root.
    pub fn has_root(&self, x: &RatFunc) -> bool {
        self.roots.contains(x)
    }
}

fn poly_from_roots(roots: &[RatFunc]) -> Vec<RatFunc> {
    let mut p = vec![RatFunc::one()];
    for x in roots {
        let mut next = vec![RatFunc::zero(); p.len() + 1];
        for (k, c) in p.iter().enumerate() {
            next[k + 1] = &next[k + 1] + c;
            next[k] = &next[k] - &(c * x);
        }
        p = next;
    }
    p
}

/// Solves `target = Σ c_k basis_k` exactly, or returns `None` if impossible.
fn solve_in_span(basis: &[SparseOperator], target: &SparseOperator) -> Option<Vec<RatFunc>> {
    let d = basis.len();
    let keys: std::collections::BTreeSet<(usize, usize)> =
        basis.iter().chain(std::iter::once(target)).flat_map(|m| m.entries().map(|(k, _)| *k)).collect();
    // Echelon rows: (pivot column, row values, rhs).
    let mut rows: Vec<(usize, Vec<RatFunc>, RatFunc)> = Vec::new();
    for (i, j) in keys {
        let mut v: Vec<RatFunc> = basis.iter().map(|m| m.get(i, j)).collect();
        let mut b = target.get(i, j);
        for (pc, pv, pb) in &rows {
            if !v[*pc].is_zero() {
                let f = v[*pc].clone();
                for k in 0..d {
                    if !pv[k].is_zero() {
                        v[k] = &v[k] - &(&f * &pv[k]);
                    }
                }
                b = &b - &(&f * pb);
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            Some(pc) => {
                let inv = v[pc].inv().expect("nonzero pivot");
                let v: Vec<RatFunc> = v.iter().map(|x| x * &inv).collect();
                let b = &b * &inv;
                // Keep the echelon fully reduced.
                for (_, rv, rb) in rows.iter_mut() {
                    if !rv[pc].is_zero() {
                        let f = rv[pc].clone();
                        for k in 0..d {
                            if !v[k].is_zero() {
                                rv[k] = &rv[k] - &(&f * &v[k]);
                            }
                        }
                        *rb = &*rb - &(&f * &b);
                    }
                }
                rows.push((pc, v, b));
            }
            None => {
                if !b.is_zero() {
                    return None;
                }
            }
        }
    }
    let mut c = vec![RatFunc::zero(); d];
    for (pc, _, b) in rows {
        c[pc] = b;
    }
    Some(c)
}

fn candidate_roots(coeffs: &[RatFunc]) -> Vec<RatFunc> {
    let mut out: Vec<RatFunc> = Vec::new();
    let mut bound = Rational64::zero();
    for c in coeffs {
        for (e, _) in c.num().terms() {
            bound = bound.max(e.a.abs() + e.b.abs());
        }
    }
    let d = coeffs.len() - 1;
    if d >= 1 {
        // The sum of the roots, up to cancellation, lists them as its terms.
        for (e, c) in coeffs[d - 1].num().terms() {
            out.push(RatFunc::from_poly(-&LaurentPoly::monomial(c.clone(), e.clone())));
        }
    }
    let k_max = (bound * Rational64::from_integer(4)).to_integer() + 8;
    for k in -k_max..=k_max {
        let m = q_pow(Rational64::new(k, 2));
        out.push(-&m);
        out.push(m);
    }
    let mut dedup: Vec<RatFunc> = Vec::new();
    for x in out {
        if !dedup.contains(&x) {
            dedup.push(x);
        }
    }
    dedup
}

/// The monic minimal polynomial of `m` by Krylov dependence of its powers,
/// split into linear factors over monomials `±c·r^a s^b`.
pub fn minimal_polynomial(m: &SparseOperator) -> Result<MinimalPolynomial> {
    let mut powers = vec![SparseOperator::identity(m.dim())];
    for d in 1..=m.dim() {
        let next = powers[d - 1].mul(m);
        if let Some(c) = solve_in_span(&powers, &next) {
            let mut coeffs: Vec<RatFunc> = c.iter().map(|x| -x).collect();
            coeffs.push(RatFunc::one());
            let mp = MinimalPolynomial { coeffs, roots: Vec::new() };
            let roots: Vec<RatFunc> = candidate_roots(&mp.coeffs).into_iter().filter(|x| mp.eval(x).is_zero()).collect();
            if roots.len() != d || poly_from_roots(&roots) != mp.coeffs {
                return Err(Error::Invalid(format!(
                    "minimal polynomial of degree {d} does not split over monomials (found {} roots)",
                    roots.len()
                )));
            }
            return Ok(MinimalPolynomial { roots, ..mp });
        }
        powers.push(next);
    }
    Err(Error::Invalid("no polynomial relation found".into()))
}

/// `m^{-1}` written as a polynomial in `m` through its minimal polynomial.
pub fn inverse_via_minpoly(m: &SparseOperator, mp: &MinimalPolynomial) -> Result<SparseOperator> {
    let c0 = &mp.coeffs[0];
    if c0.is_zero() {
        return Err(Error::Singular);
    }
    let d = mp.degree();
    // m^{-1} = −(m^{d−1} + c_{d−1} m^{d−2} + … + c_1) / c_0.
    let mut acc = SparseOperator::identity(m.dim());
    for k in (1..d).rev() {
        acc = acc.mul(m).add(&SparseOperator::identity(m.dim()).scale(&mp.coeffs[k]));
    }
    if d == 1 {
        acc = SparseOperator::identity(m.dim());
    }
    let scale = -&c0.inv()?;
    Ok(acc.scale(&scale))
}

/// The eigenprojector onto the `root`-eigenspace, by Lagrange interpolation.
pub fn eigenprojector(m: &SparseOperator, mp: &MinimalPolynomial, root: &RatFunc) -> Result<SparseOperator> {
    if !mp.has_root(root) {
        return Err(Error::Invalid(format!("{root} is not a root of the minimal polynomial")));
    }
    let id = SparseOperator::identity(m.dim());
    let mut p = id.clone();
    for other in mp.roots.iter().filter(|x| *x != root) {
        let factor = m.sub(&id.scale(other)).scale(&(root - other).inv()?);
        p = p.mul(&factor);
    }
    Ok(p)
}

/// `ρ = (ρ_1, …, ρ_N)` for types B, C, D.
pub fn rho(t: RSType) -> Result<Vec<Rational64>> {
    let n = t.rank as i64;
    let nn = t.vec_dim();
    let r = Rational64::new;
    let out = (1..=nn as i64)
        .map(|i| match t.family {
            Family::B if i <= n => Ok(r(2 * (n - i) + 1, 2)),
            Family::B if i == n + 1 => Ok(r(1, 2)),
            Family::B => Ok(r(-(2 * (i - n - 1)) + 1, 2)),
            Family::C if i <= n => Ok(r(n + 1 - i, 1)),
            Family::C => Ok(r(n - i, 1)),
            Family::D if i <= n => Ok(r(n - i, 1)),
            Family::D => Ok(r(n + 1 - i, 1)),
            Family::A => Err(Error::Invalid("C- and K-matrices are defined for types B, C, D".into())),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(out)
}

/// `C_q` (one-parameter) or `C_{r,s} = ψ^{-1} C_q ψ̄^{-1}` with `ψ̄_i = ψ_{i'}` (two-parameter).
pub fn c_matrix(t: RSType, params: Params) -> Result<SparseOperator> {
    let rho = rho(t)?;
    let n = t.rank;
    let psi = psi_diag(t);
    let nn = t.vec_dim();
    let two = Rational64::from_integer(2);
    let diag = (1..=nn)
        .map(|i| {
            let rho_i = rho[i - 1];
            let cq = match t.family {
                Family::B => q_pow(two * rho_i),
                Family::C if i <= n => q_pow(rho_i),
                Family::C => -q_pow(rho_i),
                _ => q_pow(rho_i),
            };
            match params {
                Params::OneParam => cq,
                Params::TwoParam => &cq * &psi[i - 1].mul(psi[prime(t, i) - 1]).inv().to_ratfunc(),
            }
        })
        .collect();
    Ok(SparseOperator::diagonal(diag))
}

/// `K = Σ c_ii c_jj^{-1} E_{i'j} ⊗ E_{ij'}` with `c = C_q`.
pub fn k_matrix(t: RSType) -> Result<SparseOperator> {
    let c = c_matrix(t, Params::OneParam)?.diagonal_entries();
    let nn = t.vec_dim();
    let mut m = SparseOperator::zero(nn * nn);
    for i in 1..=nn {
        for j in 1..=nn {
            let x = c[i - 1].checked_div(&c[j - 1])?;
            add_tensor_unit(&mut m, nn, (prime(t, i), j), (i, prime(t, j)), &x);
        }
    }
    Ok(m)
}

/// Finds the eigenvalue `λ` of `R̂_q` and scalar `c` with `K = c P_λ`, if any.
pub fn k_eigenprojector(t: RSType) -> Result<Option<(RatFunc, RatFunc)>> {
    let rh = rhat_one_param(t);
    let mp = minimal_polynomial(&rh)?;
    let k = k_matrix(t)?;
    let Some(((i, j), kij)) = k.entries().next().map(|(a, b)| (*a, b.clone())) else {
        return Ok(None);
    };
    for root in &mp.roots {
        let p = eigenprojector(&rh, &mp, root)?;
        let pij = p.get(i, j);
        if pij.is_zero() {
            continue;
        }
        let c = kij.checked_div(&pij)?;
        if p.scale(&c) == k {
            return Ok(Some((root.clone(), c)));
        }
    }
    Ok(None)
}

fn diag_inverse(c: &SparseOperator) -> Result<SparseOperator> {
    let d = c.diagonal_entries().iter().map(|x| x.inv()).collect::<Result<Vec<_>>>()?;
    Ok(SparseOperator::diagonal(d))
}

/// The four crossing products, each of which should equal the identity:
/// `R C_1 R^{t_1'} C_1^{-1}`, `(C^{t'})_1^{-1} R^{-1} (C^{t'})_1 (R^{-1})^{t_1'}`,
/// `(C^{t'})_2^{-1} R (C^{t'})_2 R^{t_2'}`, `R^{-1} C_2 (R^{-1})^{t_2'} C_2^{-1}`.
pub fn crossing_products(r: &SparseOperator, r_inv: &SparseOperator, c: &SparseOperator) -> Result<[SparseOperator; 4]> {
    let n = c.dim();
    let ci = diag_inverse(c)?;
    let ct = transpose_prime(c);
    let cti = diag_inverse(&ct)?;
    let pt = |m: &SparseOperator, leg| partial_transpose_prime(m, n, leg);
    Ok([
        r.mul(&leg1(c)).mul(&pt(r, 1)?).mul(&leg1(&ci)),
        leg1(&cti).mul(r_inv).mul(&leg1(&ct)).mul(&pt(r_inv, 1)?),
        leg2(&cti).mul(r).mul(&leg2(&ct)).mul(&pt(r, 2)?),
        r_inv.mul(&leg2(c)).mul(&pt(r_inv, 2)?).mul(&leg2(&ci)),
    ])
}

/// First failure among the four crossing identities, as `(index, mismatch)`.
pub fn crossing_failures(r: &SparseOperator, r_inv: &SparseOperator, c: &SparseOperator) -> Result<Vec<(usize, Mismatch)>> {
    let id = SparseOperator::identity(r.dim());
    Ok(crossing_products(r, r_inv, c)?
        .iter()
        .enumerate()
        .filter_map(|(k, p)| p.first_mismatch(&id).map(|m| (k + 1, m)))
        .collect())
}

/// The four finite crossing-symmetry identities for `R_q` with `C_q`, or
/// `R_{r,s}` with `C_{r,s}`.
pub fn crossing_check(t: RSType, params: Params) -> Result<Vec<CheckReport>> {
    let rh = rhat(t, params)?;
    let mp = minimal_polynomial(&rh)?;
    let rh_inv = inverse_via_minpoly(&rh, &mp)?;
    let n = t.vec_dim();
    let r = r_from_rhat(&rh)?;
    let r_inv = flip(n).mul(&rh_inv);
    let c = c_matrix(t, params)?;
    let id = SparseOperator::identity(n * n);
    Ok(crossing_products(&r, &r_inv, &c)?
        .iter()
        .enumerate()
        .map(|(k, p)| CheckReport::compare(format!("crossing identity {}", k + 1), p, &id))
        .collect())
}

/// The conjugated one-parameter matrix against the independently assembled
/// two-parameter matrix, entry by entry.
pub fn twist_identity_check(t: RSType) -> Result<CheckReport> {
    Ok(CheckReport::compare("twist identity", &rhat_two_param(t)?, &rhat_two_param_assembled(t)?))
}

/// Applies `s := r^{-1}` to every entry.
pub fn specialize(m: &SparseOperator) -> Result<SparseOperator> {
    m.map_entries(|_, _, x| crate::scalars::specialize_one_param(x))
}

/// Entry of `R̂` at `E_{ik} ⊗ E_{jl}` (1-based).
pub fn coefficient(m: &SparseOperator, n: usize, (i, k): (usize, usize), (j, l): (usize, usize)) -> RatFunc {
    m.get(crate::sparse::flatten(n, &[i, j]), crate::sparse::flatten(n, &[k, l]))
}

/// `(ψ_i)` as rational functions.
pub fn psi_values(t: RSType) -> Vec<RatFunc> {
    psi_diag(t).into_iter().map(RsExp::to_ratfunc).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::specialize_one_param;

    fn ty(f: Family, n: usize) -> RSType {
        RSType::of(f, n)
    }

    #[test]
    fn displayed_coefficients() {
        let b2 = ty(Family::B, 2);
        let m = rhat_one_param(b2);
        assert_eq!(coefficient(&m, 5, (1, 1), (1, 1)), q(-2));
        assert_eq!(coefficient(&m, 5, (3, 3), (3, 3)), RatFunc::one());
        assert_eq!(t_value(b2, 3), q(1));
        let c2 = ty(Family::C, 2);
        let m = rhat_one_param(c2);
        assert_eq!(coefficient(&m, 4, (1, 4), (4, 1)), q(1));
        let a2 = ty(Family::A, 2);
        let m = rhat_two_param(a2).unwrap();
        assert_eq!(coefficient(&m, 3, (2, 1), (1, 2)), RatFunc::r());
        assert_eq!(coefficient(&m, 3, (2, 2), (1, 1)), &RatFunc::one() - &rs_mono(1, -1));
        assert_eq!(coefficient(&m, 3, (1, 2), (2, 1)), rs_mono(0, -1));
    }

    #[test]
    fn xi_and_s_entries() {
        let a2 = ty(Family::A, 2);
        let xi = xi_diagonal(a2).unwrap();
        assert_eq!(xi[0], RatFunc::one());
        // (i, j) = (1, 2): ζ(ε_2, ε_1) = (rs)^{-1/4}.
        assert_eq!(xi[1], RatFunc::rs(Rational64::new(-1, 4), Rational64::new(-1, 4)));
        let b2 = ty(Family::B, 2);
        assert_eq!(s_diagonal(b2)[0], rs_mono(1, 1));
    }

    #[test]
    fn twist_identity_small_ranks() {
        for t in [ty(Family::A, 1), ty(Family::A, 2), ty(Family::B, 2), ty(Family::C, 2), ty(Family::D, 3)] {
            let rep = twist_identity_check(t).unwrap();
            assert!(rep.passed, "{t}: {rep}");
        }
    }

    #[test]
    fn specialization_gives_one_parameter_matrix() {
        for t in [ty(Family::A, 2), ty(Family::B, 2), ty(Family::C, 2), ty(Family::D, 3)] {
            let two = specialize(&rhat_two_param(t).unwrap()).unwrap();
            let one = specialize(&rhat_one_param(t)).unwrap();
            assert_eq!(two, one, "{t}");
        }
        assert_eq!(specialize_one_param(&q(2)).unwrap(), RatFunc::r().powi(2).unwrap());
    }

    #[test]
    fn braid_and_ybe_small() {
        for t in [ty(Family::A, 2), ty(Family::B, 1), ty(Family::B, 2), ty(Family::C, 2)] {
            for p in [Params::OneParam, Params::TwoParam] {
                let rh = rhat(t, p).unwrap();
                assert!(check_braid(&rh).unwrap().passed, "{t} {p:?}");
                assert!(check_ybe(&r_from_rhat(&rh).unwrap()).unwrap().passed, "{t} {p:?}");
            }
        }
        let id = SparseOperator::identity(9);
        assert!(check_braid(&id).unwrap().passed);
    }

    #[test]
    fn minimal_polynomial_type_b() {
        for n in 1..=2 {
            let t = ty(Family::B, n);
            let mp = minimal_polynomial(&rhat_one_param(t)).unwrap();
            assert_eq!(mp.degree(), 3);
            assert!(mp.has_root(&q(-2)));
            assert!(mp.has_root(&-q(2)));
            assert!(mp.has_root(&q(4 * n as i64)));
        }
        let mp = minimal_polynomial(&rhat_one_param(ty(Family::A, 2))).unwrap();
        assert_eq!(mp.degree(), 2);
        assert!(mp.has_root(&RatFunc::one()) && mp.has_root(&-q(2)));
    }

    #[test]
    fn inverse_from_minimal_polynomial() {
        let t = ty(Family::C, 2);
        let rh = rhat_two_param(t).unwrap();
        let mp = minimal_polynomial(&rh).unwrap();
        let inv = inverse_via_minpoly(&rh, &mp).unwrap();
        assert_eq!(rh.mul(&inv), SparseOperator::identity(16));
    }

    #[test]
    fn c_matrix_values() {
        let b2 = ty(Family::B, 2);
        let r = rho(b2).unwrap();
        assert_eq!(
            r,
            vec![
                Rational64::new(3, 2),
                Rational64::new(1, 2),
                Rational64::new(1, 2),
                Rational64::new(-1, 2),
                Rational64::new(-3, 2)
            ]
        );
        let half = Rational64::new(1, 2);
        let rq = |a: i64| Rational64::new(a, 2);
        for n in 1..=4usize {
            let nn = n as i64;
            for f in [Family::B, Family::C, Family::D] {
                if f == Family::D && n < 3 {
                    continue;
                }
                let t = ty(f, n);
                let c = c_matrix(t, Params::TwoParam).unwrap().diagonal_entries();
                for i in 1..=t.vec_dim() as i64 {
                    let expected = match f {
                        Family::B if i <= nn => RatFunc::rs(half, rq(4 * (i - nn) - 1)),
                        Family::B if i == nn + 1 => RatFunc::rs(half, -half),
                        Family::B => RatFunc::rs(rq(4 * (nn + 2 - i) - 1), half),
                        Family::C if i <= nn => RatFunc::rs(half, rq(2 * (i - nn) - 1)),
                        Family::C => -RatFunc::rs(rq(2 * (nn - i) + 1), half),
                        Family::D if i <= nn => RatFunc::rs(half, rq(2 * (i - nn) + 1)),
                        _ => RatFunc::rs(rq(2 * (nn - i) + 3), half),
                    };
                    assert_eq!(c[i as usize - 1], expected, "{t} i={i}");
                }
            }
        }
    }

    #[test]
    fn crossing_b2_and_negative_control() {
        let t = ty(Family::B, 2);
        for rep in crossing_check(t, Params::OneParam).unwrap() {
            assert!(rep.passed, "{rep}");
        }
        let rh = rhat_one_param(t);
        let mp = minimal_polynomial(&rh).unwrap();
        let r = r_from_rhat(&rh).unwrap();
        let r_inv = flip(5).mul(&inverse_via_minpoly(&rh, &mp).unwrap());
        let fails = crossing_failures(&r, &r_inv, &SparseOperator::identity(5)).unwrap();
        assert!(fails.iter().any(|(k, _)| *k == 1));
    }

    #[test]
    fn k_is_proportional_to_top_projector_in_type_b() {
        let t = ty(Family::B, 2);
        let (root, _) = k_eigenprojector(t).unwrap().expect("K is a multiple of an eigenprojector");
        assert_eq!(root, q(8));
    }
}

#[cfg(test)]
mod crossing_tests {
    use super::*;

    #[test]
    fn crossing_all_families_both_modes() {
        for t in [RSType::of(Family::B, 1), RSType::of(Family::C, 2), RSType::of(Family::D, 3), RSType::of(Family::B, 2)] {
            for p in [Params::OneParam, Params::TwoParam] {
                for rep in crossing_check(t, p).unwrap() {
                    assert!(rep.passed, "{t} {p:?} {rep}");
                }
            }
        }
        assert!(crossing_check(RSType::of(Family::A, 2), Params::OneParam).is_err());
    }

    /// Eigenvalue sets of `R̂_q` in types C and D, frozen from exact computation at n = 2, 3, 4.
    #[test]
    fn c_and_d_eigenvalue_fixtures() {
        let fixtures: [(Family, usize, [RatFunc; 3]); 4] = [
            (Family::C, 2, [q(-1), -q(1), -q(5)]),
            (Family::C, 3, [q(-1), -q(1), -q(7)]),
            (Family::D, 3, [q(-1), -q(1), q(5)]),
            (Family::D, 4, [q(-1), -q(1), q(7)]),
        ];
        for (f, n, roots) in fixtures {
            let t = RSType::of(f, n);
            let mp = minimal_polynomial(&rhat_one_param(t)).unwrap();
            assert_eq!(mp.degree(), 3, "{t}");
            for x in &roots {
                assert!(mp.has_root(x), "{t}: {x}");
            }
            let (top, _) = k_eigenprojector(t).unwrap().expect("K is a multiple of an eigenprojector");
            assert_eq!(top, roots[2], "{t}");
        }
    }
}
