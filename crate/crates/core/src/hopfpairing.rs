//! The Hopf pairing `(·,·)` between `U^≤` and `U^≥`, evaluated on words in
//! `f_i` and `e_i` by coproduct expansion, together with PBW Gram matrices,
//! the closed-form pairing constants of root vectors, dual bases and the
//! truncated quasi-R-matrix `Θ`.
//!
//! For a word `f_{j_1} y'` the first structural axiom gives
//! `(f_{j_1} y', e_{i_1}⋯e_{i_k}) = Σ_{p : i_p = j_1} Π_{q<p} (ω'_{j_1}, ω_{i_q}) · (f_{j_1}, e_{j_1}) · (y', e_{i_1}⋯ê_{i_p}⋯e_{i_k})`.
//! The second axiom gives the mirror rule peeling the leftmost `e`. Every
//! pairing of words is the product of `Π (f_j, e_j)` over the letters with a
//! Laurent polynomial, which is what the memo stores.

use std::collections::{BTreeMap, HashMap};

use num_rational::Rational64;
use parking_lot::Mutex;
use rayon::prelude::*;

use crate::bicharacter::{cartan_pairing, RsExp};
use crate::error::{Error, Result};
use crate::freealgebra::{pbw_monomials, phi_image, root_vector, AlgebraElement, Gen, GenWord, Params, PbwMonomial, Side};
use crate::linalg::{determinant, inverse, mat_mul, Matrix};
use crate::lyndon::lyndon_table;
use crate::reps::Representation;
use crate::rootsystem::{inner, is_positive_root, p_max, q_coords, r_gamma, s_gamma, simple_roots, Family, RSType, RVec};
use crate::scalars::{LaurentPoly, RatFunc};
use crate::sparse::SparseOperator;

/// Default height cutoff for Gram matrices.
pub const DEFAULT_MAX_HEIGHT: usize = 6;

type Memo = Mutex<HashMap<(Vec<usize>, Vec<usize>), LaurentPoly>>;

/// Pairing data for one type in one parameter mode.
pub struct PairingContext {
    rstype: RSType,
    mode: Params,
    max_height: usize,
    /// `(ω'_{α_i}, ω_{α_j})`, 0-based.
    omega: Vec<Vec<RsExp>>,
    /// `(f_i, e_i)`, 0-based.
    base: Vec<RatFunc>,
    memo: Memo,
}

impl PairingContext {
    pub fn new(t: RSType, mode: Params) -> Self {
        Self::with_max_height(t, mode, DEFAULT_MAX_HEIGHT)
    }

    pub fn with_max_height(t: RSType, mode: Params, max_height: usize) -> Self {
        let pi = simple_roots(t);
        let omega = pi
            .iter()
            .map(|a| {
                pi.iter()
                    .map(|b| match mode {
                        Params::TwoParam => cartan_pairing(t, a, b).expect("simple roots lie in Q"),
                        Params::OneParam => RsExp::q(inner(t, a, b)),
                    })
                    .collect()
            })
            .collect();
        let base = (1..=t.rank).map(|i| generator_pairing(t, i, mode)).collect();
        PairingContext { rstype: t, mode, max_height, omega, base, memo: Mutex::new(HashMap::new()) }
    }

    pub fn rstype(&self) -> RSType {
        self.rstype
    }

    pub fn mode(&self) -> Params {
        self.mode
    }

    pub fn max_height(&self) -> usize {
        self.max_height
    }

    /// `(ω'_λ, ω_μ)` for `λ, μ` in α-coordinates.
    pub fn cartan(&self, l: &[i64], m: &[i64]) -> RsExp {
        let mut acc = RsExp::one();
        for (i, &x) in l.iter().enumerate() {
            for (j, &y) in m.iter().enumerate() {
                if x * y != 0 {
                    acc = acc.mul(self.omega[i][j].powi(x * y));
                }
            }
        }
        acc
    }

    /// `Π (f_j, e_j)` over the letters of an `f`-word.
    pub fn prefactor(&self, f: &[usize]) -> RatFunc {
        f.iter().fold(RatFunc::one(), |acc, &j| &acc * &self.base[j - 1])
    }

    fn same_letters(f: &[usize], e: &[usize]) -> bool {
        if f.len() != e.len() {
            return false;
        }
        let mut a = f.to_vec();
        let mut b = e.to_vec();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }

    /// The polynomial part of `(f-word, e-word)` by the first-axiom rule.
    pub fn pair_poly(&self, f: &[usize], e: &[usize]) -> LaurentPoly {
        if !Self::same_letters(f, e) {
            return LaurentPoly::zero();
        }
        self.pair_poly_rec(f, e)
    }

    fn pair_poly_rec(&self, f: &[usize], e: &[usize]) -> LaurentPoly {
        if f.is_empty() {
            return LaurentPoly::one();
        }
        let key = (f.to_vec(), e.to_vec());
        if let Some(v) = self.memo.lock().get(&key) {
            return v.clone();
        }
        let j = f[0];
        let mut acc = LaurentPoly::zero();
        let mut prefix = RsExp::one();
        for p in 0..e.len() {
            if e[p] == j {
                let mut rest = e.to_vec();
                rest.remove(p);
                let sub = self.pair_poly_rec(&f[1..], &rest);
                if !sub.is_zero() {
                    acc = &acc + &(&sub * &prefix.to_poly());
                }
            }
            prefix = prefix.mul(self.omega[j - 1][e[p] - 1]);
        }
        self.memo.lock().insert(key, acc.clone());
        acc
    }

    /// `(f_{j_1}⋯f_{j_k}, e_{i_1}⋯e_{i_k})`.
    pub fn pair_words(&self, f: &[usize], e: &[usize]) -> RatFunc {
        let p = self.pair_poly(f, e);
        if p.is_zero() {
            return RatFunc::zero();
        }
        &RatFunc::from_poly(p) * &self.prefactor(f)
    }

    /// The same pairing computed from the second axiom `(y, xx') = (Δy, x'⊗x)`,
    /// peeling the leftmost `e`. Not memoized.
    pub fn pair_words_second_axiom(&self, f: &[usize], e: &[usize]) -> RatFunc {
        fn rec(ctx: &PairingContext, f: &[usize], e: &[usize]) -> LaurentPoly {
            if e.is_empty() {
                return if f.is_empty() { LaurentPoly::one() } else { LaurentPoly::zero() };
            }
            let i = e[0];
            let mut acc = LaurentPoly::zero();
            let mut prefix = RsExp::one();
            for p in 0..f.len() {
                if f[p] == i {
                    let mut rest = f.to_vec();
                    rest.remove(p);
                    let sub = rec(ctx, &rest, &e[1..]);
                    if !sub.is_zero() {
                        acc = &acc + &(&sub * &prefix.to_poly());
                    }
                }
                prefix = prefix.mul(ctx.omega[f[p] - 1][i - 1]);
            }
            acc
        }
        if !Self::same_letters(f, e) {
            return RatFunc::zero();
        }
        let p = rec(self, f, e);
        if p.is_zero() {
            return RatFunc::zero();
        }
        &RatFunc::from_poly(p) * &self.prefactor(f)
    }

    /// `(y_1 y_2, x) = (y_1 ⊗ y_2, Δ(x))` with `y_1` the first `split` letters
    /// of `f`, expanding `Δ(e_{i_1}⋯e_{i_k}) = Π (e_i ⊗ 1 + ω_i ⊗ e_i)` term by
    /// term. A left factor `… ω_λ e_j …` is normal-ordered with
    /// `ω_λ e_j = (ω'_j, ω_λ) e_j ω_λ`, and `(y, x ω_λ) = (y, x)`.
    pub fn pair_via_coproduct(&self, f: &[usize], e: &[usize], split: usize) -> Result<RatFunc> {
        if split > f.len() {
            return Err(Error::Invalid(format!("split {split} exceeds word length {}", f.len())));
        }
        if !Self::same_letters(f, e) {
            return Ok(RatFunc::zero());
        }
        let (y1, y2) = f.split_at(split);
        let k = e.len();
        let mut acc = LaurentPoly::zero();
        for mask in 0u64..(1u64 << k) {
            if mask.count_ones() as usize != split {
                continue;
            }
            let chosen = |p: usize| mask >> p & 1 == 1;
            let left: Vec<usize> = (0..k).filter(|&p| chosen(p)).map(|p| e[p]).collect();
            let right: Vec<usize> = (0..k).filter(|&p| !chosen(p)).map(|p| e[p]).collect();
            let a = self.pair_poly(y1, &left);
            if a.is_zero() {
                continue;
            }
            let b = self.pair_poly(y2, &right);
            if b.is_zero() {
                continue;
            }
            let mut scal = RsExp::one();
            for a_pos in 0..k {
                if chosen(a_pos) {
                    continue;
                }
                for b_pos in a_pos + 1..k {
                    if chosen(b_pos) {
                        scal = scal.mul(self.omega[e[b_pos] - 1][e[a_pos] - 1]);
                    }
                }
            }
            acc = &acc + &(&(&a * &b) * &scal.to_poly());
        }
        if acc.is_zero() {
            return Ok(RatFunc::zero());
        }
        Ok(&RatFunc::from_poly(acc) * &self.prefactor(f))
    }

    /// Bilinear extension of [`Self::pair_words`] to elements of `U^-` and `U^+`.
    pub fn pair(&self, y: &AlgebraElement, x: &AlgebraElement) -> Result<RatFunc> {
        let mut groups: BTreeMap<Vec<usize>, RatFunc> = BTreeMap::new();
        for (wy, cy) in y.terms() {
            let f = letters(wy, false)?;
            for (wx, cx) in x.terms() {
                let e = letters(wx, true)?;
                let p = self.pair_poly(&f, &e);
                if p.is_zero() {
                    continue;
                }
                let mut key = f.clone();
                key.sort_unstable();
                let v = &(cy * cx) * &RatFunc::from_poly(p);
                let slot = groups.entry(key).or_insert_with(RatFunc::zero);
                *slot = &*slot + &v;
            }
        }
        Ok(groups.into_iter().fold(RatFunc::zero(), |acc, (k, v)| &acc + &(&v * &self.prefactor(&k))))
    }
}

fn letters(w: &GenWord, positive: bool) -> Result<Vec<usize>> {
    w.iter()
        .map(|g| match (g, positive) {
            (Gen::E(i), true) | (Gen::F(i), false) => Ok(*i),
            _ => Err(Error::Invalid(format!("unexpected letter {g} on the {} side", if positive { "e" } else { "f" }))),
        })
        .collect()
}

/// `(f_i, e_i)`: `1/(s_i − r_i)` in two parameters, `1/(q_i^{-1} − q_i)` in one.
pub fn generator_pairing(t: RSType, i: usize, mode: Params) -> RatFunc {
    let d = Rational64::from_integer(crate::rootsystem::d_i(t, i));
    let den = match mode {
        Params::TwoParam => &RatFunc::rs(0.into(), d) - &RatFunc::rs(d, 0.into()),
        Params::OneParam => &RsExp::q(-d).to_ratfunc() - &RsExp::q(d).to_ratfunc(),
    };
    den.inv().expect("nonzero")
}

fn costandard(t: RSType, g: &RVec) -> Result<Option<(RVec, RVec)>> {
    if !is_positive_root(t, g) {
        return Err(Error::NotARoot(g.to_string()));
    }
    crate::lyndon::costandard_roots(t, g)
}

/// `[m]_{r^k, s^k} = Σ_j r^{kj} s^{k(m−1−j)}`.
fn rs_integer_at(m: u32, k: Rational64) -> RatFunc {
    (0..m as i64).map(|j| RatFunc::rs(k * j, k * (m as i64 - 1 - j))).fold(RatFunc::zero(), |a, x| &a + &x)
}

/// `[m]_{q^k} = Σ_j q^{k(m−1−2j)}`.
fn q_integer_at(m: u32, k: Rational64) -> RatFunc {
    (0..m as i64).map(|j| RsExp::q(k * (m as i64 - 1 - 2 * j)).to_ratfunc()).fold(RatFunc::zero(), |a, x| &a + &x)
}

/// `(f_{γ;r,s}, e_{γ;r,s})` by the closed recursion over the costandard pair:
/// `r_γ (ω'_α,ω_β)^{-1} (rs)^{-p} [p+1]^2_{r,s} (r_α−s_α)(r_β−s_β) / (r_α r_β (s_γ−r_γ))`
/// times the constants of `α` and `β`, with `p = p_{β,α}`.
pub fn pairing_constant_2param(t: RSType, g: &RVec) -> Result<RatFunc> {
    let Some((a, b)) = costandard(t, g)? else {
        let i = simple_roots(t).iter().position(|x| x == g).expect("simple") + 1;
        return Ok(generator_pairing(t, i, Params::TwoParam));
    };
    let p = p_max(t, &b, &a)?;
    let rg = RatFunc::from_poly(r_gamma(t, g)?);
    let sg = RatFunc::from_poly(s_gamma(t, g)?);
    let (ra, sa) = (RatFunc::from_poly(r_gamma(t, &a)?), RatFunc::from_poly(s_gamma(t, &a)?));
    let (rb, sb) = (RatFunc::from_poly(r_gamma(t, &b)?), RatFunc::from_poly(s_gamma(t, &b)?));
    let br = rs_integer_at(p as u32 + 1, 1.into());
    let num = &(&(&(&rg * &cartan_pairing(t, &a, &b)?.inv().to_ratfunc()) * &RsExp::rs((-p).into()).to_ratfunc()) * &(&br * &br))
        * &(&(&ra - &sa) * &(&rb - &sb));
    let den = &(&ra * &rb) * &(&sg - &rg);
    let c = num.checked_div(&den)?;
    Ok(&(&c * &pairing_constant_2param(t, &a)?) * &pairing_constant_2param(t, &b)?)
}

/// `(F_γ, E_γ)_q = −q^{−(α,β)} [p+1]_q^2 (1−q_α^{−2})(1−q_β^{−2}) / (1−q_γ^{−2}) · (F_α,E_α)_q (F_β,E_β)_q`,
/// with `q = r^{1/2}s^{-1/2}`.
pub fn pairing_constant_1param(t: RSType, g: &RVec) -> Result<RatFunc> {
    let Some((a, b)) = costandard(t, g)? else {
        let i = simple_roots(t).iter().position(|x| x == g).expect("simple") + 1;
        return Ok(generator_pairing(t, i, Params::OneParam));
    };
    let p = p_max(t, &b, &a)?;
    let one_minus = |v: &RVec| &RatFunc::one() - &RsExp::q(-inner(t, v, v)).to_ratfunc();
    let br = q_integer_at(p as u32 + 1, 1.into());
    let num = &(&(-RsExp::q(-inner(t, &a, &b)).to_ratfunc()) * &(&br * &br)) * &(&one_minus(&a) * &one_minus(&b));
    let c = num.checked_div(&one_minus(g))?;
    Ok(&(&c * &pairing_constant_1param(t, &a)?) * &pairing_constant_1param(t, &b)?)
}

/// `κ_γ = [p_{β,α}+1]_q κ_α κ_β`, `κ_{α_i} = 1`.
pub fn kappa(t: RSType, g: &RVec) -> Result<RatFunc> {
    match costandard(t, g)? {
        None => Ok(RatFunc::one()),
        Some((a, b)) => {
            let p = p_max(t, &b, &a)?;
            Ok(&(&q_integer_at(p as u32 + 1, 1.into()) * &kappa(t, &a)?) * &kappa(t, &b)?)
        }
    }
}

/// `c̄_{α_i} = 1`, `c̄_γ = −q^{−(α,β)} c̄_α c̄_β` over the costandard pair.
fn c_bar(t: RSType, g: &RVec) -> Result<RatFunc> {
    match costandard(t, g)? {
        None => Ok(RatFunc::one()),
        Some((a, b)) => Ok(&(&(-RsExp::q(-inner(t, &a, &b)).to_ratfunc()) * &c_bar(t, &a)?) * &c_bar(t, &b)?),
    }
}

/// `(F_γ,E_γ)_q = (−1)^{ht γ} q^{−d_γ} c̄_γ κ_γ² / (1 − q_γ^{−2})`, with `d_γ = Σ k_i d_i`
/// for `γ = Σ k_i α_i`; a closed form independent of the recursion.
pub fn pairing_constant_bkm(t: RSType, g: &RVec) -> Result<RatFunc> {
    let k = q_coords(t, g)?;
    let d: i64 = k.iter().enumerate().map(|(i, &c)| c * crate::rootsystem::d_i(t, i + 1)).sum();
    let ht: i64 = k.iter().sum();
    let kap = kappa(t, g)?;
    let mut num = &(&RsExp::q((-d).into()).to_ratfunc() * &c_bar(t, g)?) * &(&kap * &kap);
    if ht % 2 == 1 {
        num = -num;
    }
    num.checked_div(&(&RatFunc::one() - &RsExp::q(-inner(t, g, g)).to_ratfunc()))
}

/// The root-vector pairing constant in the context's mode.
pub fn pairing_constant(t: RSType, g: &RVec, mode: Params) -> Result<RatFunc> {
    match mode {
        Params::TwoParam => pairing_constant_2param(t, g),
        Params::OneParam => pairing_constant_1param(t, g),
    }
}

/// The predicted Gram diagonal for PBW multiplicities `mult`:
/// `Π_γ [m_γ]_{r_γ,s_γ}! s_γ^{−m_γ(m_γ−1)/2} (f_γ,e_γ)^{m_γ}` (two parameters) or
/// `Π_γ [m_γ]_{q_γ}! q_γ^{m_γ(m_γ−1)/2} (F_γ,E_γ)^{m_γ}` (one parameter).
pub fn pbw_diagonal(t: RSType, mult: &[u32], mode: Params) -> Result<RatFunc> {
    let tab = lyndon_table(t);
    let mut acc = RatFunc::one();
    for (k, &m) in mult.iter().enumerate() {
        if m == 0 {
            continue;
        }
        let g = &tab.roots[k];
        let h = inner(t, g, g) / Rational64::from_integer(2);
        let tri = Rational64::from_integer((m * (m - 1) / 2) as i64);
        let (fact, corr) = match mode {
            Params::TwoParam => ((1..=m).fold(RatFunc::one(), |a, j| &a * &rs_integer_at(j, h)), RatFunc::rs(0.into(), -h * tri)),
            Params::OneParam => ((1..=m).fold(RatFunc::one(), |a, j| &a * &q_integer_at(j, h)), RsExp::q(h * tri).to_ratfunc()),
        };
        acc = &(&acc * &fact) * &(&corr * &pairing_constant(t, g, mode)?.powi(m as i64)?);
    }
    Ok(acc)
}

fn height_of(mu: &[i64]) -> usize {
    mu.iter().sum::<i64>().max(0) as usize
}

/// PBW bases of `U^-_{−μ}` and `U^+_μ` with the same multiplicity order.
pub fn pbw_pair(ctx: &PairingContext, mu: &[i64]) -> Result<(Vec<PbwMonomial>, Vec<PbwMonomial>)> {
    let h = height_of(mu);
    if h > ctx.max_height {
        return Err(Error::Cutoff { given: ctx.max_height, needed: h });
    }
    let t = ctx.rstype;
    Ok((pbw_monomials(t, mu, Side::Minus, ctx.mode)?, pbw_monomials(t, mu, Side::Plus, ctx.mode)?))
}

/// Gram matrix `G[a][b] = (y_a, x_b)` of the PBW monomials of weight `μ`.
pub fn gram_matrix(ctx: &PairingContext, mu: &[i64]) -> Result<Matrix> {
    let (ys, xs) = pbw_pair(ctx, mu)?;
    ys.iter().map(|y| xs.iter().map(|x| ctx.pair(&y.element, &x.element)).collect()).collect()
}

/// Outcome of a PBW orthogonality check at one weight.
#[derive(Clone, Debug)]
pub struct OrthogonalityReport {
    pub mu: Vec<i64>,
    pub size: usize,
    pub off_diagonal_nonzero: Vec<(usize, usize)>,
    pub diagonal_mismatch: Vec<usize>,
    pub determinant_nonzero: bool,
}

impl OrthogonalityReport {
    pub fn passed(&self) -> bool {
        self.off_diagonal_nonzero.is_empty() && self.diagonal_mismatch.is_empty() && self.determinant_nonzero
    }
}

/// Checks that the PBW Gram matrix at `μ` is diagonal with the predicted entries.
pub fn check_orthogonality(ctx: &PairingContext, mu: &[i64]) -> Result<OrthogonalityReport> {
    let (ys, _) = pbw_pair(ctx, mu)?;
    let g = gram_matrix(ctx, mu)?;
    let mut off = Vec::new();
    let mut bad = Vec::new();
    for a in 0..g.len() {
        for b in 0..g.len() {
            if a != b && !g[a][b].is_zero() {
                off.push((a, b));
            }
        }
        if g[a][a] != pbw_diagonal(ctx.rstype, &ys[a].mult, ctx.mode)? {
            bad.push(a);
        }
    }
    Ok(OrthogonalityReport {
        mu: mu.to_vec(),
        size: g.len(),
        off_diagonal_nonzero: off,
        diagonal_mismatch: bad,
        determinant_nonzero: !determinant(&g).is_zero(),
    })
}

/// `Θ_μ` as a list of dual pairs `(ỹ_i, x̃_i)`.
#[derive(Clone, Debug)]
pub struct ThetaComponent {
    pub mu: Vec<i64>,
    pub pairs: Vec<(AlgebraElement, AlgebraElement)>,
}

impl ThetaComponent {
    /// `Σ_i ỹ_i ⊗ x̃_i` expanded on pairs of words.
    pub fn tensor(&self) -> BTreeMap<(GenWord, GenWord), RatFunc> {
        let mut out: BTreeMap<(GenWord, GenWord), RatFunc> = BTreeMap::new();
        for (y, x) in &self.pairs {
            for (wy, cy) in y.terms() {
                for (wx, cx) in x.terms() {
                    let key = (wy.clone(), wx.clone());
                    let v = cy * cx;
                    let slot = out.entry(key.clone()).or_insert_with(RatFunc::zero);
                    *slot = &*slot + &v;
                    if slot.is_zero() {
                        out.remove(&key);
                    }
                }
            }
        }
        out
    }
}

/// Dual bases for arbitrary bases `ys` of `U^-_{−μ}` and `xs` of `U^+_μ`:
/// `ỹ_a = Σ_c (G^{-1})_{ac} y_c` with `G[c][b] = (y_c, x_b)`, `x̃_a = x_a`.
pub fn dual_bases_from(ctx: &PairingContext, mu: &[i64], ys: &[AlgebraElement], xs: &[AlgebraElement]) -> Result<ThetaComponent> {
    let g: Matrix = ys.iter().map(|y| xs.iter().map(|x| ctx.pair(y, x)).collect::<Result<_>>()).collect::<Result<_>>()?;
    let m = inverse(&g)?;
    let n = ctx.rstype.rank;
    let pairs = (0..xs.len())
        .map(|a| {
            let y = ys.iter().enumerate().fold(AlgebraElement::zero(n), |acc, (c, y)| acc.add(&y.scale(&m[a][c])));
            (y, xs[a].clone())
        })
        .collect();
    Ok(ThetaComponent { mu: mu.to_vec(), pairs })
}

/// Dual bases built from the PBW monomials at `μ` by general inversion.
pub fn dual_bases(ctx: &PairingContext, mu: &[i64]) -> Result<ThetaComponent> {
    let (ys, xs) = pbw_pair(ctx, mu)?;
    let ys: Vec<_> = ys.into_iter().map(|m| m.element).collect();
    let xs: Vec<_> = xs.into_iter().map(|m| m.element).collect();
    dual_bases_from(ctx, mu, &ys, &xs)
}

/// Dual bases using orthogonality: `ỹ_a = y_a / (predicted diagonal)`.
pub fn dual_bases_diagonal(ctx: &PairingContext, mu: &[i64]) -> Result<ThetaComponent> {
    let (ys, xs) = pbw_pair(ctx, mu)?;
    let pairs = ys
        .into_iter()
        .zip(xs)
        .map(|(y, x)| Ok((y.element.scale(&pbw_diagonal(ctx.rstype, &y.mult, ctx.mode)?.inv()?), x.element)))
        .collect::<Result<_>>()?;
    Ok(ThetaComponent { mu: mu.to_vec(), pairs })
}

/// All `μ ∈ Q^+` with `1 ≤ ht(μ) ≤ h`, in α-coordinates.
pub fn weights_up_to(rank: usize, h: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    fn rec(k: usize, left: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if k == cur.len() {
            if cur.iter().any(|&x| x != 0) {
                out.push(cur.clone());
            }
            return;
        }
        for v in 0..=left {
            cur[k] = v as i64;
            rec(k + 1, left - v, cur, out);
        }
        cur[k] = 0;
    }
    let mut cur = vec![0; rank];
    rec(0, h, &mut cur, &mut out);
    out.sort_by_key(|m| (m.iter().sum::<i64>(), std::cmp::Reverse(m.clone())));
    out
}

/// `Θ` truncated to heights `≤ h_max` (the constant term `1 ⊗ 1` is implicit).
pub fn theta_truncated(ctx: &PairingContext, h_max: usize) -> Result<Vec<ThetaComponent>> {
    weights_up_to(ctx.rstype.rank, h_max).par_iter().map(|mu| dual_bases(ctx, mu)).collect()
}

/// `Θ_μ` restricted to weights that occur as differences in a given set.
pub fn theta_for_weights(ctx: &PairingContext, weights: &[Vec<i64>]) -> Result<Vec<ThetaComponent>> {
    weights.par_iter().map(|mu| dual_bases(ctx, mu)).collect()
}

/// Samples for the pairing twist check.
#[derive(Clone, Debug)]
pub struct TwistSample {
    pub y: AlgebraElement,
    pub x: AlgebraElement,
}

/// Outcome of `(y,x)_{r,s} = (φy, φx)_{q,ζ}` on samples.
#[derive(Clone, Debug)]
pub struct PairingTwistReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

/// Checks `(y,x)_{r,s} = ζ(β,α)^{-1}ζ(β',α')^{-1}(φy, φx)_{q,q^{-1}}` on homogeneous samples,
/// the right side computed in one-parameter mode.
pub fn pairing_twist_check(t: RSType, samples: &[TwistSample]) -> Result<PairingTwistReport> {
    let two = PairingContext::new(t, Params::TwoParam);
    let one = PairingContext::new(t, Params::OneParam);
    let zeta = crate::bicharacter::zeta_on_q(t);
    let mut failures = Vec::new();
    for s in samples {
        let lhs = two.pair(&s.y, &s.x)?;
        let (py, px) = (phi_image(&s.y, t), phi_image(&s.x, t));
        let (dy, dx) = (py.bidegree()?, px.bidegree()?);
        let f = zeta.eval_int(&dy.left, &dx.left).mul(zeta.eval_int(&dy.right, &dx.right)).inv();
        let rhs = &f.to_ratfunc() * &one.pair(&py, &px)?;
        if lhs != rhs {
            failures.push(format!("({}, {}): {} vs {}", s.y, s.x, lhs, rhs));
        }
    }
    Ok(PairingTwistReport { checked: samples.len(), failures })
}

/// Generator and root-vector samples plus all word pairs of a given weight.
pub fn default_twist_samples(t: RSType, mu: &[i64]) -> Result<Vec<TwistSample>> {
    let n = t.rank;
    let mut out: Vec<TwistSample> =
        (1..=n).map(|i| TwistSample { y: AlgebraElement::f(n, i), x: AlgebraElement::e(n, i) }).collect();
    for g in crate::rootsystem::positive_roots(t) {
        out.push(TwistSample {
            y: (*root_vector(t, &g, Side::Minus, Params::TwoParam)?).clone(),
            x: (*root_vector(t, &g, Side::Plus, Params::TwoParam)?).clone(),
        });
    }
    let mut letters = Vec::new();
    for (i, &c) in mu.iter().enumerate() {
        letters.extend(std::iter::repeat_n(i + 1, c as usize));
    }
    let words = distinct_permutations(&letters);
    for f in &words {
        for e in &words {
            out.push(TwistSample { y: AlgebraElement::f_word(n, f), x: AlgebraElement::e_word(n, e) });
        }
    }
    Ok(out)
}

/// All distinct orderings of a multiset.
pub fn distinct_permutations(letters: &[usize]) -> Vec<Vec<usize>> {
    let mut v = letters.to_vec();
    v.sort_unstable();
    let mut out = vec![v.clone()];
    // next lexicographic permutation
    while let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) {
        let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot exists");
        v.swap(i - 1, j);
        v[i..].reverse();
        out.push(v.clone());
    }
    out
}

/// Converts α-coordinates to a root-lattice vector.
pub fn weight_vec(t: RSType, mu: &[i64]) -> RVec {
    crate::rootsystem::from_alpha_coords(t, mu)
}

/// α-coordinates of a root-lattice vector.
pub fn weight_coords(t: RSType, v: &RVec) -> Result<Vec<i64>> {
    q_coords(t, v)
}

/// Checks `G · G^{-1} = I` for the Gram matrix at `μ`.
pub fn gram_inverse_check(ctx: &PairingContext, mu: &[i64]) -> Result<bool> {
    let g = gram_matrix(ctx, mu)?;
    Ok(mat_mul(&g, &inverse(&g)?) == crate::linalg::identity(g.len()))
}

/// `(ω'_λ, ω_μ)` on ε-labeled weights in the context's parameter mode; the
/// one-parameter value is the image under `r ↦ q`, `s ↦ q^{-1}`.
fn weight_pairing(ctx: &PairingContext, l: &RVec, m: &RVec) -> Result<RsExp> {
    let x = match ctx.rstype.family {
        Family::A => cartan_pairing(ctx.rstype, l, m)?,
        _ => crate::bicharacter::cartan_pairing_eps(ctx.rstype, l, m)?,
    };
    Ok(match ctx.mode {
        Params::TwoParam => x,
        Params::OneParam => RsExp::q(x.a - x.b),
    })
}

/// Smallest height cutoff for which the truncated `Θ` acts exactly on `V ⊗ V`:
/// the largest height of a difference of two weights of `rep` lying in `Q^+`.
pub fn theta_cutoff(rep: &Representation) -> Vec<Vec<i64>> {
    let t = rep.rstype;
    let mut out: Vec<Vec<i64>> = Vec::new();
    for a in &rep.weights {
        for b in &rep.weights {
            let d = a - b;
            if d.is_zero() {
                continue;
            }
            if let Ok(c) = q_coords(t, &d) {
                if c.iter().all(|&x| x >= 0) && !out.contains(&c) {
                    out.push(c);
                }
            }
        }
    }
    out.sort_by_key(|c| (c.iter().sum::<i64>(), c.clone()));
    out
}

/// `R̂(v ⊗ v') = Θ(f̃(v' ⊗ v))`, with `Θ = 1⊗1 + Σ_μ Σ_i ρ(ỹ_i^μ) ⊗ ρ(x̃_i^μ)`
/// and `f̃(v' ⊗ v) = (ω'_λ, ω_{λ'})^{-1} v' ⊗ v` for `v ∈ V[λ]`, `v' ∈ V[λ']`.
pub fn r_hat_from_theta(ctx: &PairingContext, rep: &Representation, h_max: usize) -> Result<SparseOperator> {
    if ctx.mode != rep.params || ctx.rstype != rep.rstype {
        return Err(Error::Invalid("pairing context and representation belong to different algebras".into()));
    }
    let mus = theta_cutoff(rep);
    let needed = mus.iter().map(|c| c.iter().sum::<i64>() as usize).max().unwrap_or(0);
    if h_max < needed {
        return Err(Error::Cutoff { given: h_max, needed });
    }
    let n = rep.dim;
    let comps = theta_for_weights(ctx, &mus)?;
    let mut theta = SparseOperator::identity(n * n);
    for comp in &comps {
        for (y, x) in &comp.pairs {
            theta = theta.add(&rep.act(y)?.kron(&rep.act(x)?));
        }
    }
    let mut ftilde = Vec::with_capacity(n * n);
    for lp in &rep.weights {
        for l in &rep.weights {
            ftilde.push(weight_pairing(ctx, l, lp)?.inv().to_ratfunc());
        }
    }
    Ok(theta.mul(&SparseOperator::diagonal(ftilde)).mul(&crate::sparse::flip(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsystem::{from_alpha_coords, positive_roots};
    use crate::scalars::{rat, specialize_one_param};

    #[test]
    fn r_matrix_from_theta() {
        use crate::reps::{fundamental_rep_one, rho_tilde, rho_two_param};
        use crate::rmatrix::{rhat_one_param, rhat_two_param, rhat_xi_conjugated};
        for (t, cut) in [(RSType::of(Family::A, 2), 2), (RSType::of(Family::B, 2), 4)] {
            let two = PairingContext::new(t, Params::TwoParam);
            let one = PairingContext::new(t, Params::OneParam);
            assert_eq!(r_hat_from_theta(&two, &rho_two_param(t).unwrap(), cut).unwrap(), rhat_two_param(t).unwrap(), "{t}");
            assert_eq!(r_hat_from_theta(&two, &rho_tilde(t).unwrap(), cut).unwrap(), rhat_xi_conjugated(t).unwrap(), "{t}");
            assert_eq!(r_hat_from_theta(&one, &fundamental_rep_one(t), cut).unwrap(), rhat_one_param(t), "{t}");
            assert_eq!(
                r_hat_from_theta(&two, &rho_tilde(t).unwrap(), cut - 1),
                Err(Error::Cutoff { given: cut - 1, needed: cut })
            );
        }
    }

    fn s_minus_r() -> RatFunc {
        &RatFunc::s() - &RatFunc::r()
    }

    #[test]
    fn word_fixtures_a2() {
        let ctx = PairingContext::new(RSType::of(Family::A, 2), Params::TwoParam);
        let d2 = &s_minus_r() * &s_minus_r();
        assert_eq!(ctx.pair_words(&[1], &[1]), s_minus_r().inv().unwrap());
        assert!(ctx.pair_words(&[1], &[2]).is_zero());
        assert_eq!(ctx.pair_words(&[2, 1], &[1, 2]), RatFunc::s().checked_div(&d2).unwrap());
        assert_eq!(ctx.pair_words(&[1, 2], &[2, 1]), RatFunc::rs((-1).into(), 0.into()).checked_div(&d2).unwrap());
        assert_eq!(ctx.pair_words(&[1, 2], &[1, 2]), d2.inv().unwrap());
        assert_eq!(ctx.pair_words(&[2, 1], &[2, 1]), d2.inv().unwrap());
    }

    #[test]
    fn three_routes_agree() {
        for (f, r) in [(Family::A, 3), (Family::B, 2), (Family::C, 3), (Family::D, 4)] {
            let t = RSType::of(f, r);
            let ctx = PairingContext::new(t, Params::TwoParam);
            let mut mu = vec![1i64; r];
            mu[r - 1] = 2;
            let letters: Vec<usize> = mu.iter().enumerate().flat_map(|(i, &c)| std::iter::repeat_n(i + 1, c as usize)).collect();
            let words = distinct_permutations(&letters);
            for fw in words.iter().step_by(3) {
                for ew in words.iter().step_by(2) {
                    let a = ctx.pair_words(fw, ew);
                    assert_eq!(a, ctx.pair_words_second_axiom(fw, ew), "{t} {fw:?} {ew:?}");
                    for split in 0..=fw.len() {
                        assert_eq!(a, ctx.pair_via_coproduct(fw, ew, split).unwrap(), "{t} {fw:?} {ew:?} {split}");
                    }
                }
            }
        }
    }

    #[test]
    fn constants_a2() {
        let t = RSType::of(Family::A, 2);
        let g = from_alpha_coords(t, &[1, 1]);
        assert_eq!(pairing_constant_2param(t, &g).unwrap(), s_minus_r().inv().unwrap());
        assert!(kappa(t, &g).unwrap().is_one());
        let a1 = from_alpha_coords(t, &[1, 0]);
        assert!(kappa(t, &a1).unwrap().is_one());
        let ctx = PairingContext::new(t, Params::OneParam);
        let fq = root_vector(t, &g, Side::Minus, Params::OneParam).unwrap();
        let eq = root_vector(t, &g, Side::Plus, Params::OneParam).unwrap();
        assert_eq!(ctx.pair(&fq, &eq).unwrap(), pairing_constant_1param(t, &g).unwrap());
    }

    #[test]
    fn recursion_matches_oracle() {
        let types = [(Family::A, 2), (Family::A, 3), (Family::B, 2), (Family::B, 3), (Family::C, 3), (Family::D, 4)];
        for (f, r) in types {
            let t = RSType::of(f, r);
            let ctx = PairingContext::new(t, Params::TwoParam);
            for g in positive_roots(t) {
                let fg = root_vector(t, &g, Side::Minus, Params::TwoParam).unwrap();
                let eg = root_vector(t, &g, Side::Plus, Params::TwoParam).unwrap();
                assert_eq!(ctx.pair(&fg, &eg).unwrap(), pairing_constant_2param(t, &g).unwrap(), "{t} {g}");
            }
        }
    }

    #[test]
    fn bkm_closed_form_matches_recursion() {
        for (f, r) in [(Family::A, 3), (Family::B, 3), (Family::C, 3), (Family::D, 4)] {
            let t = RSType::of(f, r);
            for g in positive_roots(t) {
                assert_eq!(pairing_constant_bkm(t, &g).unwrap(), pairing_constant_1param(t, &g).unwrap(), "{t} {g}");
            }
        }
    }

    #[test]
    fn one_parameter_specialization() {
        for (f, r) in [(Family::B, 3), (Family::C, 3), (Family::D, 4)] {
            let t = RSType::of(f, r);
            for g in positive_roots(t) {
                let a = specialize_one_param(&pairing_constant_2param(t, &g).unwrap()).unwrap();
                let b = specialize_one_param(&pairing_constant_1param(t, &g).unwrap()).unwrap();
                assert_eq!(a, b, "{t} {g}");
            }
        }
    }

    #[test]
    fn gram_matrices_orthogonal() {
        for (f, r, h) in [(Family::A, 2, 4), (Family::A, 3, 3), (Family::B, 2, 4), (Family::C, 3, 3)] {
            let t = RSType::of(f, r);
            let ctx = PairingContext::new(t, Params::TwoParam);
            for mu in weights_up_to(r, h) {
                let rep = check_orthogonality(&ctx, &mu).unwrap();
                assert!(rep.passed(), "{t} {mu:?} {rep:?}");
            }
        }
        let ctx = PairingContext::new(RSType::of(Family::B, 2), Params::OneParam);
        assert!(check_orthogonality(&ctx, &[2, 2]).unwrap().passed());
    }

    #[test]
    fn gram_small_cases() {
        let t = RSType::of(Family::A, 2);
        let ctx = PairingContext::new(t, Params::TwoParam);
        assert_eq!(gram_matrix(&ctx, &[1, 0]).unwrap(), vec![vec![s_minus_r().inv().unwrap()]]);
        let g = gram_matrix(&ctx, &[2, 0]).unwrap();
        let expect =
            &(&(&RatFunc::r() + &RatFunc::s()) * &RatFunc::s().inv().unwrap()) * &(&s_minus_r() * &s_minus_r()).inv().unwrap();
        assert_eq!(g[0][0], expect);
        let small = PairingContext::with_max_height(t, Params::TwoParam, 2);
        assert!(matches!(gram_matrix(&small, &[2, 1]), Err(Error::Cutoff { given: 2, needed: 3 })));
        assert!(gram_inverse_check(&ctx, &[1, 1]).unwrap());
    }

    #[test]
    fn theta_components() {
        let t = RSType::of(Family::A, 2);
        let ctx = PairingContext::new(t, Params::TwoParam);
        let th = dual_bases(&ctx, &[1, 0]).unwrap();
        let (y, x) = &th.pairs[0];
        assert_eq!(*y, AlgebraElement::f(2, 1).scale(&s_minus_r()));
        assert_eq!(*x, AlgebraElement::e(2, 1));
        assert!(theta_truncated(&ctx, 0).unwrap().is_empty());
        for mu in weights_up_to(2, 3) {
            let a = dual_bases(&ctx, &mu).unwrap();
            let b = dual_bases_diagonal(&ctx, &mu).unwrap();
            assert_eq!(a.tensor(), b.tensor());
            for (k, (yk, _)) in a.pairs.iter().enumerate() {
                for (l, (_, xl)) in a.pairs.iter().enumerate() {
                    let v = ctx.pair(yk, xl).unwrap();
                    assert_eq!(v.is_one(), k == l);
                    assert_eq!(v.is_zero(), k != l);
                }
            }
        }
    }

    #[test]
    fn theta_independent_of_basis() {
        let t = RSType::of(Family::B, 2);
        let ctx = PairingContext::new(t, Params::TwoParam);
        let mu = [1, 2];
        let (ys, xs) = pbw_pair(&ctx, &mu).unwrap();
        let ys: Vec<_> = ys.into_iter().map(|m| m.element).collect();
        let xs: Vec<_> = xs.into_iter().map(|m| m.element).collect();
        let a = dual_bases_from(&ctx, &mu, &ys, &xs).unwrap();
        // a unitriangular change of both bases, with the order reversed
        let mut ys2: Vec<_> = ys.iter().rev().cloned().collect();
        let mut xs2: Vec<_> = xs.iter().rev().cloned().collect();
        ys2[0] = ys2[0].add(&ys2[1].scale(&RatFunc::r()));
        xs2[1] = xs2[1].add(&xs2[2].scale(&RatFunc::rs(rat(1, 2), rat(-3, 1))));
        let b = dual_bases_from(&ctx, &mu, &ys2, &xs2).unwrap();
        assert_eq!(a.tensor(), b.tensor());
    }

    #[test]
    fn twist_matching() {
        for (f, r, mu) in [(Family::A, 2, vec![1, 1]), (Family::A, 3, vec![1, 1, 1]), (Family::B, 2, vec![1, 2])] {
            let t = RSType::of(f, r);
            let samples = default_twist_samples(t, &mu).unwrap();
            let rep = pairing_twist_check(t, &samples).unwrap();
            assert!(rep.failures.is_empty(), "{:?}", rep.failures);
            assert!(rep.checked > r);
        }
    }

    #[test]
    fn diagonal_for_doubled_simple_root() {
        let t = RSType::of(Family::A, 1);
        let ctx = PairingContext::new(t, Params::TwoParam);
        let g = gram_matrix(&ctx, &[2]).unwrap();
        let b = s_minus_r().inv().unwrap();
        let expect = &(&(&RatFunc::r() + &RatFunc::s()) * &RatFunc::s().inv().unwrap()) * &(&b * &b);
        assert_eq!(g[0][0], expect);
    }
}
