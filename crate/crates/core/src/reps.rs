//! First fundamental representations and the identities they satisfy.
//!
//! A [`Representation`] stores the images of `e_i, f_i, ω_i, ω'_i` together
//! with a weight label for every basis vector. `ρ_q` is transcribed for each
//! type; `ρ̃_{r,s}` is produced from it by [`twist_module`] and, for B/C/D,
//! also transcribed as a cross-check; `ρ_{r,s} = ψ^{-1} ρ̃_{r,s} ψ`.

use num_rational::Rational64;
use rayon::prelude::*;

use crate::bicharacter::{omega_pair_left, omega_pair_right, psi_diag, zeta_on_p, RsExp};
use crate::error::{Error, Result};
use crate::freealgebra::{AlgebraElement, Gen, Params};
use crate::report::CheckReport;
use crate::rmatrix::{basis_weight, prime, xi_diagonal};
use crate::rootsystem::{cartan_entry, d_i, inner, ringel_simple, simple_roots, Family, RSType, RVec};
use crate::scalars::{q_powi, rs_binomial, ExpVec, RatFunc};
use crate::sparse::SparseOperator;

/// Images of the Chevalley generators on a weight-labeled space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub rstype: RSType,
    /// The algebra acting: `U_{r,s}` or `U_{q,q^{-1}}`.
    pub params: Params,
    pub dim: usize,
    /// Weight of each basis vector in ε-coordinates.
    pub weights: Vec<RVec>,
    pub e: Vec<SparseOperator>,
    pub f: Vec<SparseOperator>,
    pub omega: Vec<SparseOperator>,
    pub omega_prime: Vec<SparseOperator>,
}

/// The generator families, for reporting.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    E(usize),
    F(usize),
    Omega(usize),
    OmegaPrime(usize),
}

impl std::fmt::Display for Generator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Generator::E(i) => write!(f, "e_{i}"),
            Generator::F(i) => write!(f, "f_{i}"),
            Generator::Omega(i) => write!(f, "ω_{i}"),
            Generator::OmegaPrime(i) => write!(f, "ω'_{i}"),
        }
    }
}

impl Representation {
    pub fn rank(&self) -> usize {
        self.rstype.rank
    }

    pub fn generators(&self) -> Vec<Generator> {
        let n = self.rank();
        (1..=n).flat_map(|i| [Generator::E(i), Generator::F(i), Generator::Omega(i), Generator::OmegaPrime(i)]).collect()
    }

    pub fn image(&self, g: Generator) -> &SparseOperator {
        match g {
            Generator::E(i) => &self.e[i - 1],
            Generator::F(i) => &self.f[i - 1],
            Generator::Omega(i) => &self.omega[i - 1],
            Generator::OmegaPrime(i) => &self.omega_prime[i - 1],
        }
    }

    /// The action of a word in `e_i, f_i`.
    pub fn act_word(&self, w: &[Gen]) -> Result<SparseOperator> {
        w.iter().try_fold(SparseOperator::identity(self.dim), |acc, g| match g {
            Gen::E(i) => Ok(acc.mul(&self.e[*i - 1])),
            Gen::F(i) => Ok(acc.mul(&self.f[*i - 1])),
            Gen::Abstract { .. } => Err(Error::Invalid("abstract symbols have no action".into())),
        })
    }

    /// The action of an element of the free algebra on `e_i, f_i`.
    pub fn act(&self, x: &AlgebraElement) -> Result<SparseOperator> {
        x.terms().try_fold(SparseOperator::zero(self.dim), |acc, (w, c)| Ok(acc.add(&self.act_word(w)?.scale(c))))
    }

    /// Applies `f` to every generator image.
    pub fn map_ops<F>(&self, f: F) -> Result<Representation>
    where
        F: Fn(&SparseOperator) -> Result<SparseOperator>,
    {
        let m = |v: &[SparseOperator]| v.iter().map(&f).collect::<Result<Vec<_>>>();
        Ok(Representation {
            e: m(&self.e)?,
            f: m(&self.f)?,
            omega: m(&self.omega)?,
            omega_prime: m(&self.omega_prime)?,
            ..self.clone()
        })
    }

    /// `V ⊗ W` through `Δe_i = e_i⊗1 + ω_i⊗e_i`, `Δf_i = 1⊗f_i + f_i⊗ω'_i`, `Δω = ω⊗ω`.
    pub fn tensor(&self, o: &Representation) -> Result<Representation> {
        if self.rstype != o.rstype || self.params != o.params {
            return Err(Error::Invalid("tensor product of representations of different algebras".into()));
        }
        let (ia, ib) = (SparseOperator::identity(self.dim), SparseOperator::identity(o.dim));
        let n = self.rank();
        let mut weights = Vec::with_capacity(self.dim * o.dim);
        for a in &self.weights {
            for b in &o.weights {
                weights.push(a + b);
            }
        }
        Ok(Representation {
            rstype: self.rstype,
            params: self.params,
            dim: self.dim * o.dim,
            weights,
            e: (0..n).map(|i| self.e[i].kron(&ib).add(&self.omega[i].kron(&o.e[i]))).collect(),
            f: (0..n).map(|i| ia.kron(&o.f[i]).add(&self.f[i].kron(&o.omega_prime[i]))).collect(),
            omega: (0..n).map(|i| self.omega[i].kron(&o.omega[i])).collect(),
            omega_prime: (0..n).map(|i| self.omega_prime[i].kron(&o.omega_prime[i])).collect(),
        })
    }
}

fn unit_sum(n: usize, terms: &[(usize, usize, RatFunc)]) -> SparseOperator {
    let mut m = SparseOperator::zero(n);
    for (a, b, c) in terms {
        m.add_to(a - 1, b - 1, c);
    }
    m
}

/// Diagonal operator with the listed entries and 1 elsewhere.
fn diag_with(n: usize, entries: &[(usize, RatFunc)]) -> SparseOperator {
    let mut d = vec![RatFunc::one(); n];
    for (k, c) in entries {
        d[k - 1] = c.clone();
    }
    SparseOperator::diagonal(d)
}

fn diag_inverse(m: &SparseOperator) -> Result<SparseOperator> {
    Ok(SparseOperator::diagonal(m.diagonal_entries().iter().map(|x| x.inv()).collect::<Result<_>>()?))
}

fn q(k: i64) -> RatFunc {
    q_powi(k)
}

fn rsq(a: i64, b: i64) -> RatFunc {
    RatFunc::rs(Rational64::new(a, 4), Rational64::new(b, 4))
}

fn weights_of(t: RSType) -> Vec<RVec> {
    (1..=t.vec_dim()).map(|k| basis_weight(t, k)).collect()
}

/// `ρ_q` on `V` for the first fundamental representation of `U_{q,q^{-1}}`.
pub fn fundamental_rep_one(t: RSType) -> Representation {
    let n = t.rank;
    let nn = t.vec_dim();
    let p = |i: usize| prime(t, i);
    let one = RatFunc::one();
    let mut e = Vec::new();
    let mut f = Vec::new();
    let mut omega = Vec::new();
    for i in 1..=n {
        let (ei, fi, wi) = match t.family {
            Family::A => (
                unit_sum(nn, &[(i, i + 1, one.clone())]),
                unit_sum(nn, &[(i + 1, i, one.clone())]),
                diag_with(nn, &[(i, q(1)), (i + 1, q(-1))]),
            ),
            _ if i < n => {
                let (a, b) = if t.family == Family::B { (2, -2) } else { (1, -1) };
                (
                    unit_sum(nn, &[(i, i + 1, one.clone()), (p(i + 1), p(i), -&one)]),
                    unit_sum(nn, &[(i + 1, i, one.clone()), (p(i), p(i + 1), -&one)]),
                    diag_with(nn, &[(i, q(a)), (i + 1, q(b)), (p(i), q(b)), (p(i + 1), q(a))]),
                )
            }
            Family::B => {
                let c = &q(1) + &q(-1);
                (
                    unit_sum(nn, &[(n, n + 1, one.clone()), (n + 1, p(n), -&one)]),
                    unit_sum(nn, &[(n + 1, n, c.clone()), (p(n), n + 1, -&c)]),
                    diag_with(nn, &[(n, q(2)), (p(n), q(-2))]),
                )
            }
            Family::C => (
                unit_sum(nn, &[(n, p(n), one.clone())]),
                unit_sum(nn, &[(p(n), n, one.clone())]),
                diag_with(nn, &[(n, q(2)), (p(n), q(-2))]),
            ),
            Family::D => (
                unit_sum(nn, &[(n - 1, p(n), one.clone()), (n, p(n - 1), -&one)]),
                unit_sum(nn, &[(p(n), n - 1, one.clone()), (p(n - 1), n, -&one)]),
                diag_with(nn, &[(n - 1, q(1)), (n, q(1)), (p(n - 1), q(-1)), (p(n), q(-1))]),
            ),
        };
        e.push(ei);
        f.push(fi);
        omega.push(wi);
    }
    let omega_prime = omega.iter().map(|w| diag_inverse(w).expect("invertible diagonal")).collect();
    Representation { rstype: t, params: Params::OneParam, dim: nn, weights: weights_of(t), e, f, omega, omega_prime }
}

/// `ρ̃_{r,s}` transcribed for types B, C, D.
pub fn rho_tilde_transcribed(t: RSType) -> Result<Representation> {
    if t.family == Family::A {
        return Err(Error::Invalid("ρ̃ is transcribed for types B, C, D only".into()));
    }
    let n = t.rank;
    let nn = t.vec_dim();
    let p = |i: usize| prime(t, i);
    let one = RatFunc::one();
    let rs = |a: i64, b: i64| RatFunc::rs(a.into(), b.into());
    // Σ_{j ≤ m} (r^{-1}s^{-1} E_jj + rs E_{j'j'}).
    let tail = |m: usize| -> Vec<(usize, RatFunc)> { (1..=m).flat_map(|j| [(j, rs(-1, -1)), (p(j), rs(1, 1))]).collect() };
    let (mut e, mut f, mut omega, mut omega_prime) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for i in 1..=n {
        if i < n {
            let is_b = t.family == Family::B;
            // (rs)^{k/4}; type B doubles every exponent.
            let c = |k: i64| if is_b { rsq(2 * k, 2 * k) } else { rsq(k, k) };
            let (r1, s1) = if is_b { (rs(2, 0), rs(0, 2)) } else { (rs(1, 0), rs(0, 1)) };
            let (r1i, s1i) = (r1.inv()?, s1.inv()?);
            e.push(unit_sum(nn, &[(i, i + 1, c(1)), (p(i + 1), p(i), -&c(-1))]));
            f.push(unit_sum(nn, &[(i + 1, i, c(-1)), (p(i), p(i + 1), -&c(-3))]));
            omega.push(diag_with(nn, &[(i, r1.clone()), (i + 1, s1.clone()), (p(i), r1i.clone()), (p(i + 1), s1i.clone())]));
            omega_prime.push(diag_with(nn, &[(i, s1), (i + 1, r1), (p(i), s1i), (p(i + 1), r1i)]));
            continue;
        }
        match t.family {
            Family::B => {
                let c = &rs(-1, 0) + &rs(0, -1);
                e.push(unit_sum(nn, &[(n, n + 1, one.clone()), (n + 1, p(n), -&one)]));
                f.push(unit_sum(nn, &[(n + 1, n, c.clone()), (p(n), n + 1, -&c)]));
                let mut w = tail(n - 1);
                w.extend([(n, rs(1, -1)), (p(n), rs(-1, 1))]);
                omega.push(diag_with(nn, &w));
                let mut w = tail(n - 1);
                w.extend([(n, rs(-1, 1)), (p(n), rs(1, -1))]);
                omega_prime.push(diag_with(nn, &w));
            }
            Family::C => {
                e.push(unit_sum(nn, &[(n, p(n), one.clone())]));
                f.push(unit_sum(nn, &[(p(n), n, rs(-1, -1))]));
                let mut w = tail(n - 1);
                w.extend([(n, rs(1, -1)), (p(n), rs(-1, 1))]);
                omega.push(diag_with(nn, &w));
                let mut w = tail(n - 1);
                w.extend([(n, rs(-1, 1)), (p(n), rs(1, -1))]);
                omega_prime.push(diag_with(nn, &w));
            }
            Family::D => {
                e.push(unit_sum(nn, &[(n - 1, p(n), rsq(-1, -1)), (n, p(n - 1), -&rsq(1, 1))]));
                f.push(unit_sum(nn, &[(p(n), n - 1, rsq(-3, -3)), (p(n - 1), n, -&rsq(-1, -1))]));
                let mut w = tail(n - 2);
                w.extend([(n - 1, rs(0, -1)), (n, rs(1, 0)), (p(n - 1), rs(0, 1)), (p(n), rs(-1, 0))]);
                omega.push(diag_with(nn, &w));
                let mut w = tail(n - 2);
                w.extend([(n - 1, rs(-1, 0)), (n, rs(0, 1)), (p(n - 1), rs(1, 0)), (p(n), rs(0, -1))]);
                omega_prime.push(diag_with(nn, &w));
            }
            Family::A => unreachable!(),
        }
    }
    Ok(Representation { rstype: t, params: Params::TwoParam, dim: nn, weights: weights_of(t), e, f, omega, omega_prime })
}

/// Twists a weight-labeled `U_{q,q^{-1}}`-module into a `U_{r,s}`-module:
/// `e_i·v = ζ(α_i,λ) e_i v`, `f_i·v = (r_i s_i)^{-1/2} ζ(α_i,λ) f_i v`,
/// `ω_i·v = (ω'_λ,ω_i) v`, `ω'_i·v = (ω'_i,ω_λ)^{-1} v` for `v ∈ V[λ]`.
pub fn twist_module(rep: &Representation) -> Result<Representation> {
    if rep.params != Params::OneParam {
        return Err(Error::Invalid("twist_module expects a U_{q,q^-1}-module".into()));
    }
    let t = rep.rstype;
    let z = zeta_on_p(t);
    let alphas = simple_roots(t);
    let n = t.rank;
    let mut e = Vec::with_capacity(n);
    let mut f = Vec::with_capacity(n);
    let mut omega = Vec::with_capacity(n);
    let mut omega_prime = Vec::with_capacity(n);
    for i in 1..=n {
        let a = &alphas[i - 1];
        let zs: Vec<RsExp> = rep.weights.iter().map(|l| z.eval(a, l)).collect::<Result<_>>()?;
        let d = Rational64::new(-d_i(t, i), 2);
        let fpre = RsExp::rs(d);
        e.push(rep.e[i - 1].map_entries(|_, col, x| Ok(x * &zs[col].to_ratfunc()))?);
        f.push(rep.f[i - 1].map_entries(|_, col, x| Ok(x * &zs[col].mul(fpre).to_ratfunc()))?);
        let w: Vec<RatFunc> = rep.weights.iter().map(|l| Ok(omega_pair_right(t, l, i)?.to_ratfunc())).collect::<Result<_>>()?;
        let wp: Vec<RatFunc> =
            rep.weights.iter().map(|l| Ok(omega_pair_left(t, i, l)?.inv().to_ratfunc())).collect::<Result<_>>()?;
        omega.push(SparseOperator::diagonal(w));
        omega_prime.push(SparseOperator::diagonal(wp));
    }
    Ok(Representation { params: Params::TwoParam, e, f, omega, omega_prime, ..rep.clone() })
}

/// `ρ̃_{r,s}` obtained by twisting `ρ_q`.
pub fn rho_tilde(t: RSType) -> Result<Representation> {
    twist_module(&fundamental_rep_one(t))
}

/// `ψ^{-1} ∘ ρ(x) ∘ ψ` on every generator.
pub fn psi_conjugate(rep: &Representation) -> Result<Representation> {
    let psi_inv: Vec<RatFunc> = psi_diag(rep.rstype).into_iter().map(|x| x.inv().to_ratfunc()).collect();
    if psi_inv.len() != rep.dim {
        return Err(Error::Invalid("ψ-conjugation applies to the first fundamental representation".into()));
    }
    rep.map_ops(|m| m.conjugate_diagonal(&psi_inv))
}

/// `ρ_{r,s} = ψ^{-1} ρ̃_{r,s} ψ`.
pub fn rho_two_param(t: RSType) -> Result<Representation> {
    psi_conjugate(&rho_tilde(t)?)
}

/// The representation used for each parameter mode: `ρ_q` or `ρ_{r,s}`.
pub fn fundamental_rep(t: RSType, params: Params) -> Result<Representation> {
    match params {
        Params::OneParam => Ok(fundamental_rep_one(t)),
        Params::TwoParam => rho_two_param(t),
    }
}

/// Asserts `ρ̃(x) ∘ ψ = ψ ∘ ρ_{r,s}(x)` on all generators.
pub fn psi_conjugation_check(t: RSType) -> Result<CheckReport> {
    let tilde = rho_tilde(t)?;
    let two = psi_conjugate(&tilde)?;
    let psi = SparseOperator::diagonal(psi_diag(t).into_iter().map(RsExp::to_ratfunc).collect());
    for g in tilde.generators() {
        let lhs = tilde.image(g).mul(&psi);
        let rhs = psi.mul(two.image(g));
        if let Some(m) = lhs.first_mismatch(&rhs) {
            return Ok(CheckReport::fail("ψ-conjugation", format!("{g}: {m}")));
        }
    }
    Ok(CheckReport::pass("ψ-conjugation"))
}

/// Substitutes `r ↦ r^d, s ↦ s^d` (two-parameter) or `r ↦ q^d, s ↦ q^{-d}` (one-parameter).
fn subst(x: &RatFunc, params: Params, d: i64) -> Result<RatFunc> {
    let d = Rational64::from_integer(d);
    let half = Rational64::new(1, 2);
    x.map_exponents(|e| match params {
        Params::TwoParam => ExpVec { a: e.a * d, b: e.b * d, ..e.clone() },
        Params::OneParam => {
            let h = (e.a - e.b) * d * half;
            ExpVec { a: h, b: -h, ..e.clone() }
        }
    })
}

fn rs_int(a: i64, b: i64) -> RatFunc {
    RatFunc::rs(a.into(), b.into())
}

/// A failed relation, identified by tag and indices.
fn relation_report(tag: &str, i: usize, j: usize, lhs: &SparseOperator, rhs: &SparseOperator) -> CheckReport {
    CheckReport::compare(format!("({tag}) i={i} j={j}"), lhs, rhs)
}

/// Verifies (R1)–(R5) as matrix identities, returning one report per relation instance.
pub fn check_relations(rep: &Representation) -> Result<Vec<CheckReport>> {
    let t = rep.rstype;
    let n = t.rank;
    let pm = rep.params;
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect();
    let per_pair = pairs
        .par_iter()
        .map(|&(i, j)| -> Result<Vec<CheckReport>> {
            let (e, f, w, wp) = (&rep.e, &rep.f, &rep.omega, &rep.omega_prime);
            let (ei, ej, fi, fj) = (&e[i - 1], &e[j - 1], &f[i - 1], &f[j - 1]);
            let mut out = Vec::new();
            // (R1)
            let comm = |a: &SparseOperator, b: &SparseOperator| (a.mul(b), b.mul(a));
            let (l1, r1) = comm(&w[i - 1], &w[j - 1]);
            let (l2, r2) = comm(&w[i - 1], &wp[j - 1]);
            let (l3, r3) = comm(&wp[i - 1], &wp[j - 1]);
            out.push(relation_report("R1", i, j, &l1.add(&l2).add(&l3), &r1.add(&r2).add(&r3)));
            // (R2), (R3)
            let ji = ringel_simple(t, j, i);
            let ij = ringel_simple(t, i, j);
            let c2 = subst(&rs_int(ji, -ij), pm, 1)?;
            let c3 = subst(&rs_int(-ij, ji), pm, 1)?;
            let c2i = c2.inv()?;
            let c3i = c3.inv()?;
            let (wi, wpi) = (&w[i - 1], &wp[i - 1]);
            out.push(relation_report("R2e", i, j, &wi.mul(ej), &ej.mul(wi).scale(&c2)));
            out.push(relation_report("R2f", i, j, &wi.mul(fj), &fj.mul(wi).scale(&c2i)));
            out.push(relation_report("R3e", i, j, &wpi.mul(ej), &ej.mul(wpi).scale(&c3)));
            out.push(relation_report("R3f", i, j, &wpi.mul(fj), &fj.mul(wpi).scale(&c3i)));
            // (R4)
            let lhs = ei.mul(fj).sub(&fj.mul(ei));
            let rhs = if i == j {
                let den = subst(&(&RatFunc::r() - &RatFunc::s()), pm, d_i(t, i))?;
                wi.sub(wpi).scale(&den.inv()?)
            } else {
                SparseOperator::zero(rep.dim)
            };
            out.push(relation_report("R4", i, j, &lhs, &rhs));
            // (R5)
            if i != j {
                let m = (1 - cartan_entry(t, i, j)) as u32;
                let di = d_i(t, i);
                let mut se = SparseOperator::zero(rep.dim);
                let mut sf = SparseOperator::zero(rep.dim);
                for k in 0..=m {
                    let kk = k as i64;
                    let sign = if k % 2 == 0 { RatFunc::one() } else { -RatFunc::one() };
                    let binom = subst(&rs_binomial(m, k)?, pm, di)?;
                    let half = RatFunc::rs(Rational64::new(kk * (kk - 1), 2), Rational64::new(kk * (kk - 1), 2));
                    let c = &(&(&sign * &binom) * &subst(&half, pm, di)?) * &subst(&rs_int(kk * ji, kk * ji), pm, 1)?;
                    se = se.add(&ei.pow(m - k).mul(ej).mul(&ei.pow(k)).scale(&c));
                    sf = sf.add(&fi.pow(k).mul(fj).mul(&fi.pow(m - k)).scale(&c));
                }
                let zero = SparseOperator::zero(rep.dim);
                out.push(relation_report("R5e", i, j, &se, &zero));
                out.push(relation_report("R5f", i, j, &sf, &zero));
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(per_pair.into_iter().flatten().collect())
}

/// Checks `ω_i v = (ω'_λ,ω_i) v` and `ω'_i v = (ω'_i,ω_λ)^{-1} v` on every
/// labeled basis vector (one-parameter values are `q^{±(λ,α_i)}`).
pub fn check_weights(rep: &Representation) -> Result<CheckReport> {
    let t = rep.rstype;
    let alphas = simple_roots(t);
    for i in 1..=t.rank {
        let w = rep.omega[i - 1].diagonal_entries();
        let wp = rep.omega_prime[i - 1].diagonal_entries();
        if !rep.omega[i - 1].is_diagonal() || !rep.omega_prime[i - 1].is_diagonal() {
            return Ok(CheckReport::fail("weights", format!("ω_{i} is not diagonal")));
        }
        for (k, l) in rep.weights.iter().enumerate() {
            let (a, b) = match rep.params {
                Params::TwoParam => (omega_pair_right(t, l, i)?.to_ratfunc(), omega_pair_left(t, i, l)?.inv().to_ratfunc()),
                Params::OneParam => {
                    let x = RsExp::q(inner(t, l, &alphas[i - 1]));
                    (x.to_ratfunc(), x.inv().to_ratfunc())
                }
            };
            if w[k] != a || wp[k] != b {
                return Ok(CheckReport::fail("weights", format!("basis vector {} for i={i}", k + 1)));
            }
        }
    }
    Ok(CheckReport::pass("weights"))
}

/// `ρ(e_i)` maps `V[λ]` into `V[λ+α_i]` and `ρ(f_i)` maps it into `V[λ−α_i]`.
pub fn check_graded(rep: &Representation) -> CheckReport {
    let alphas = simple_roots(rep.rstype);
    for (i, a) in alphas.iter().enumerate() {
        for (&(row, col), _) in rep.e[i].entries() {
            if rep.weights[row] != &rep.weights[col] + a {
                return CheckReport::fail("graded", format!("e_{} at ({}, {})", i + 1, row + 1, col + 1));
            }
        }
        for (&(row, col), _) in rep.f[i].entries() {
            if rep.weights[row] != &rep.weights[col] - a {
                return CheckReport::fail("graded", format!("f_{} at ({}, {})", i + 1, row + 1, col + 1));
            }
        }
    }
    CheckReport::pass("graded")
}

/// Asserts `R̂ ∘ Δ(x) = Δ(x) ∘ R̂` on `V ⊗ V` for every generator `x`.
pub fn check_intertwiner(rhat: &SparseOperator, rep: &Representation) -> Result<Vec<CheckReport>> {
    let vv = rep.tensor(rep)?;
    if rhat.dim() != vv.dim {
        return Err(Error::Invalid("R̂ does not act on V ⊗ V".into()));
    }
    Ok(vv
        .generators()
        .par_iter()
        .map(|&g| {
            let d = vv.image(g);
            CheckReport::compare(format!("intertwiner {g}"), &rhat.mul(d), &d.mul(rhat))
        })
        .collect())
}

/// Asserts `ξ ∘ ρ_{(V⊗V)_{r,s}}(x) = (ρ̃⊗ρ̃)(Δx) ∘ ξ`, the left action being
/// the twist of the one-parameter tensor module.
pub fn xi_module_iso_check(t: RSType) -> Result<Vec<CheckReport>> {
    let one = fundamental_rep_one(t);
    let twisted = twist_module(&one.tensor(&one)?)?;
    let tilde = twist_module(&one)?;
    let target = tilde.tensor(&tilde)?;
    let xi = SparseOperator::diagonal(xi_diagonal(t)?);
    Ok(twisted
        .generators()
        .par_iter()
        .map(|&g| CheckReport::compare(format!("ξ-isomorphism {g}"), &xi.mul(twisted.image(g)), &target.image(g).mul(&xi)))
        .collect())
}

/// Compares the twisted module with the transcribed `ρ̃_{r,s}` (B/C/D).
pub fn transcription_check(t: RSType) -> Result<CheckReport> {
    let tw = rho_tilde(t)?;
    let tr = rho_tilde_transcribed(t)?;
    for g in tw.generators() {
        if let Some(m) = tw.image(g).first_mismatch(tr.image(g)) {
            return Ok(CheckReport::fail("ρ̃ transcription", format!("{g}: {m}")));
        }
    }
    Ok(CheckReport::pass("ρ̃ transcription"))
}

/// True when every entry of every image is zero.
pub fn is_zero_rep(rep: &Representation) -> bool {
    rep.generators().iter().all(|&g| rep.image(g).is_zero())
}
