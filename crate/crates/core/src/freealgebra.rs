//! The bigraded free algebra on `e_i`, `f_i` (and abstract homogeneous
//! symbols), with the ordinary product, the ζ-twisted product
//! `a ∘ b = ζ(α,α')ζ(β,β')^{-1} ab`, q-brackets, quantum root vectors, PBW
//! monomials and the twist map `φ`.
//!
//! No relations are imposed: elements are finite combinations of words.
//! Bidegrees are recorded in α-coordinates.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_rational::Rational64;
use parking_lot::Mutex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bicharacter::{cartan_pairing, zeta_on_q, Bicharacter, RsExp};
use crate::error::{Error, Result};
use crate::lyndon::lyndon_table;
use crate::report::CheckReport;
use crate::rootsystem::{d_i, inner, is_positive_root, q_coords, simple_roots, RSType, RVec};
use crate::scalars::RatFunc;

/// A bidegree `(α, β) ∈ Q × Q` in α-coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bidegree {
    pub left: Vec<i64>,
    pub right: Vec<i64>,
}

impl Bidegree {
    pub fn zero(n: usize) -> Self {
        Bidegree { left: vec![0; n], right: vec![0; n] }
    }

    pub fn add(&self, o: &Bidegree) -> Bidegree {
        let f = |x: &[i64], y: &[i64]| x.iter().zip(y).map(|(a, b)| a + b).collect();
        Bidegree { left: f(&self.left, &o.left), right: f(&self.right, &o.right) }
    }
}

/// A generator of the free algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    /// `e_i`, bidegree `(α_i, 0)`.
    E(usize),
    /// `f_i`, bidegree `(0, −α_i)`.
    F(usize),
    /// A formal homogeneous symbol.
    Abstract { id: usize, deg: Bidegree },
}

impl Gen {
    pub fn bidegree(&self, rank: usize) -> Bidegree {
        let unit = |i: usize, sign: i64| {
            let mut v = vec![0; rank];
            v[i - 1] = sign;
            v
        };
        match self {
            Gen::E(i) => Bidegree { left: unit(*i, 1), right: vec![0; rank] },
            Gen::F(i) => Bidegree { left: vec![0; rank], right: unit(*i, -1) },
            Gen::Abstract { deg, .. } => deg.clone(),
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::E(i) => write!(f, "e{i}"),
            Gen::F(i) => write!(f, "f{i}"),
            Gen::Abstract { id, .. } => write!(f, "y{id}"),
        }
    }
}

pub type GenWord = Vec<Gen>;

/// A finite linear combination of words with rational-function coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    rank: usize,
    terms: BTreeMap<GenWord, RatFunc>,
}

impl AlgebraElement {
    pub fn zero(rank: usize) -> Self {
        AlgebraElement { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::word(rank, Vec::new())
    }

    pub fn word(rank: usize, w: GenWord) -> Self {
        Self::term(rank, w, RatFunc::one())
    }

    pub fn term(rank: usize, w: GenWord, c: RatFunc) -> Self {
        let mut x = Self::zero(rank);
        x.add_term(w, c);
        x
    }

    pub fn gen(rank: usize, g: Gen) -> Self {
        Self::word(rank, vec![g])
    }

    pub fn e(rank: usize, i: usize) -> Self {
        Self::gen(rank, Gen::E(i))
    }

    pub fn f(rank: usize, i: usize) -> Self {
        Self::gen(rank, Gen::F(i))
    }

    /// `e_{i_1} ⋯ e_{i_k}`.
    pub fn e_word(rank: usize, idx: &[usize]) -> Self {
        Self::word(rank, idx.iter().map(|&i| Gen::E(i)).collect())
    }

    /// `f_{i_1} ⋯ f_{i_k}`.
    pub fn f_word(rank: usize, idx: &[usize]) -> Self {
        Self::word(rank, idx.iter().map(|&i| Gen::F(i)).collect())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GenWord, &RatFunc)> {
        self.terms.iter()
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

    pub fn coeff(&self, w: &GenWord) -> RatFunc {
        self.terms.get(w).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn add_term(&mut self, w: GenWord, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(old) => {
                let v = &*old + &c;
                if v.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *old = v;
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add(&self, o: &AlgebraElement) -> AlgebraElement {
        let mut x = self.clone();
        for (w, c) in &o.terms {
            x.add_term(w.clone(), c.clone());
        }
        x
    }

    pub fn sub(&self, o: &AlgebraElement) -> AlgebraElement {
        self.add(&o.scale(&RatFunc::from_int(-1)))
    }

    pub fn scale(&self, c: &RatFunc) -> AlgebraElement {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        let terms = self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect();
        AlgebraElement { rank: self.rank, terms }
    }

    /// Ordinary product: concatenation extended bilinearly.
    pub fn mul(&self, o: &AlgebraElement) -> AlgebraElement {
        let mut x = Self::zero(self.rank);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                x.add_term(w, c1 * c2);
            }
        }
        x
    }

    /// Applies `f` to every coefficient, dropping terms that become zero.
    pub fn map_coeffs<F: Fn(&RatFunc) -> Result<RatFunc>>(&self, f: F) -> Result<AlgebraElement> {
        let mut x = Self::zero(self.rank);
        for (w, c) in &self.terms {
            x.add_term(w.clone(), f(c)?);
        }
        Ok(x)
    }

    /// Bidegree of a word.
    pub fn word_bidegree(rank: usize, w: &[Gen]) -> Bidegree {
        w.iter().fold(Bidegree::zero(rank), |acc, g| acc.add(&g.bidegree(rank)))
    }

    /// The common bidegree of all words; an error for inhomogeneous elements.
    /// The zero element has bidegree zero.
    pub fn bidegree(&self) -> Result<Bidegree> {
        let mut it = self.terms.keys().map(|w| Self::word_bidegree(self.rank, w));
        let Some(first) = it.next() else { return Ok(Bidegree::zero(self.rank)) };
        if it.all(|d| d == first) {
            Ok(first)
        } else {
            Err(Error::Invalid("element is not bidegree-homogeneous".into()))
        }
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let single = c.as_poly().is_some_and(|p| p.len() == 1);
            let text = c.to_string();
            let (neg, c) = if single && text.starts_with('-') { (true, -c) } else { (false, c.clone()) };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let word: Vec<String> = w.iter().map(|g| g.to_string()).collect();
            let word = if word.is_empty() { "1".to_string() } else { word.join("*") };
            if c.is_one() {
                write!(f, "{word}")?;
            } else if c.as_poly().is_some_and(|p| p.len() == 1) {
                if w.is_empty() {
                    write!(f, "{c}")?;
                } else {
                    write!(f, "{c}*{word}")?;
                }
            } else if w.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{word}")?;
            }
        }
        Ok(())
    }
}

/// `ζ(α,α')ζ(β,β')^{-1}` for bidegrees `(α,β)` and `(α',β')`.
pub fn twist_factor(zeta: &Bicharacter, a: &Bidegree, b: &Bidegree) -> RsExp {
    zeta.eval_int(&a.left, &b.left).mul(zeta.eval_int(&a.right, &b.right).inv())
}

/// `a ∘ b = ζ(α,α')ζ(β,β')^{-1} ab` for homogeneous `a`, `b`.
pub fn twisted_multiply(a: &AlgebraElement, b: &AlgebraElement, zeta: &Bicharacter) -> Result<AlgebraElement> {
    let (da, db) = (a.bidegree()?, b.bidegree()?);
    Ok(a.mul(b).scale(&twist_factor(zeta, &da, &db).to_ratfunc()))
}

fn bracket2<M>(a: &AlgebraElement, b: &AlgebraElement, v: &RatFunc, mul: &M) -> Result<AlgebraElement>
where
    M: Fn(&AlgebraElement, &AlgebraElement) -> Result<AlgebraElement>,
{
    Ok(mul(a, b)?.sub(&mul(b, a)?.scale(v)))
}

fn check_lengths(ys: &[AlgebraElement], vs: &[RatFunc]) -> Result<()> {
    if ys.is_empty() || vs.len() + 1 != ys.len() {
        return Err(Error::Invalid(format!(
            "{} elements need {} parameters, got {}",
            ys.len(),
            ys.len().saturating_sub(1),
            vs.len()
        )));
    }
    Ok(())
}

fn left_with<M>(ys: &[AlgebraElement], vs: &[RatFunc], mul: &M) -> Result<AlgebraElement>
where
    M: Fn(&AlgebraElement, &AlgebraElement) -> Result<AlgebraElement>,
{
    check_lengths(ys, vs)?;
    let mut acc = ys[ys.len() - 1].clone();
    for k in (0..ys.len() - 1).rev() {
        // the k-th element from the left is bracketed with parameter v_{n-1-k}
        acc = bracket2(&ys[k], &acc, &vs[ys.len() - 2 - k], mul)?;
    }
    Ok(acc)
}

fn right_with<M>(ys: &[AlgebraElement], vs: &[RatFunc], mul: &M) -> Result<AlgebraElement>
where
    M: Fn(&AlgebraElement, &AlgebraElement) -> Result<AlgebraElement>,
{
    check_lengths(ys, vs)?;
    let mut acc = ys[0].clone();
    for k in 1..ys.len() {
        acc = bracket2(&acc, &ys[k], &vs[k - 1], mul)?;
    }
    Ok(acc)
}

fn plain(a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
    Ok(a.mul(b))
}

/// `[y_1,…,y_n]_{(v_1,…,v_{n−1})} = [y_1,[y_2,…,y_n]_{(v_1,…,v_{n−2})}]_{v_{n−1}}`.
pub fn qbracket_left(ys: &[AlgebraElement], vs: &[RatFunc]) -> Result<AlgebraElement> {
    left_with(ys, vs, &plain)
}

/// `[y_1,…,y_n]'_{(v_1,…,v_{n−1})} = [[y_1,…,y_{n−1}]'_{(v_1,…,v_{n−2})},y_n]_{v_{n−1}}`.
pub fn qbracket_right(ys: &[AlgebraElement], vs: &[RatFunc]) -> Result<AlgebraElement> {
    right_with(ys, vs, &plain)
}

/// [`qbracket_left`] computed with the twisted product.
pub fn twisted_qbracket_left(ys: &[AlgebraElement], vs: &[RatFunc], zeta: &Bicharacter) -> Result<AlgebraElement> {
    left_with(ys, vs, &|a: &AlgebraElement, b: &AlgebraElement| twisted_multiply(a, b, zeta))
}

/// [`qbracket_right`] computed with the twisted product.
pub fn twisted_qbracket_right(ys: &[AlgebraElement], vs: &[RatFunc], zeta: &Bicharacter) -> Result<AlgebraElement> {
    right_with(ys, vs, &|a: &AlgebraElement, b: &AlgebraElement| twisted_multiply(a, b, zeta))
}

/// Positive (`e`) or negative (`f`) half.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Plus,
    Minus,
}

/// Which quantum group the root vectors belong to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Params {
    /// `U_{r,s}`.
    TwoParam,
    /// `U_{q,q^{-1}}` with `q = r^{1/2}s^{-1/2}`.
    OneParam,
}

type RootKey = (RSType, RVec, Side, Params);

fn root_cache() -> &'static Mutex<HashMap<RootKey, Arc<AlgebraElement>>> {
    static CACHE: OnceLock<Mutex<HashMap<RootKey, Arc<AlgebraElement>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn simple_index(t: RSType, g: &RVec) -> Option<usize> {
    simple_roots(t).iter().position(|a| a == g).map(|k| k + 1)
}

/// The quantum root vector `e_γ` or `f_γ`, built over the costandard pair `(α, β)`:
/// two-parameter `e_γ = e_α e_β − (ω'_β,ω_α) e_β e_α`,
/// `f_γ = f_β f_α − (ω'_α,ω_β)^{-1} f_α f_β`; one-parameter coefficients
/// `q^{(α,β)}` and `q^{-(α,β)}`.
pub fn root_vector(t: RSType, g: &RVec, side: Side, params: Params) -> Result<Arc<AlgebraElement>> {
    if !is_positive_root(t, g) {
        return Err(Error::NotARoot(g.to_string()));
    }
    let key = (t, g.clone(), side, params);
    if let Some(x) = root_cache().lock().get(&key) {
        return Ok(x.clone());
    }
    let n = t.rank;
    let x = if let Some(i) = simple_index(t, g) {
        match side {
            Side::Plus => AlgebraElement::e(n, i),
            Side::Minus => AlgebraElement::f(n, i),
        }
    } else {
        let tab = lyndon_table(t);
        let k = tab.index_of(g).ok_or_else(|| Error::NotARoot(g.to_string()))?;
        let (ia, ib) = tab.costandard[k].ok_or_else(|| Error::Invalid(format!("no costandard split for {g}")))?;
        let (a, b) = (&tab.roots[ia], &tab.roots[ib]);
        let xa = root_vector(t, a, side, params)?;
        let xb = root_vector(t, b, side, params)?;
        let ab = inner(t, a, b);
        match (side, params) {
            (Side::Plus, Params::TwoParam) => {
                let c = cartan_pairing(t, b, a)?.to_ratfunc();
                xa.mul(&xb).sub(&xb.mul(&xa).scale(&c))
            }
            (Side::Minus, Params::TwoParam) => {
                let c = cartan_pairing(t, a, b)?.inv().to_ratfunc();
                xb.mul(&xa).sub(&xa.mul(&xb).scale(&c))
            }
            (Side::Plus, Params::OneParam) => xa.mul(&xb).sub(&xb.mul(&xa).scale(&RsExp::q(ab).to_ratfunc())),
            (Side::Minus, Params::OneParam) => xb.mul(&xa).sub(&xa.mul(&xb).scale(&RsExp::q(-ab).to_ratfunc())),
        }
    };
    let x = Arc::new(x);
    root_cache().lock().insert(key, x.clone());
    Ok(x)
}

/// Kostant partitions of `μ`: multiplicity vectors indexed by the convex order
/// of positive roots, in a fixed enumeration order.
pub fn kostant_partitions(t: RSType, mu: &[i64]) -> Vec<Vec<u32>> {
    let tab = lyndon_table(t);
    let coords: Vec<Vec<i64>> = tab.roots.iter().map(|g| q_coords(t, g).expect("roots lie in Q")).collect();
    let mut out = Vec::new();
    let mut cur = vec![0u32; coords.len()];
    fn rec(k: usize, rest: &mut Vec<i64>, coords: &[Vec<i64>], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest.iter().all(|&x| x == 0) {
            out.push(cur.clone());
            return;
        }
        if k == coords.len() {
            return;
        }
        rec(k + 1, rest, coords, cur, out);
        let mut m = 0;
        loop {
            if rest.iter().zip(&coords[k]).any(|(r, c)| r < c) {
                break;
            }
            for (r, c) in rest.iter_mut().zip(&coords[k]) {
                *r -= c;
            }
            m += 1;
            cur[k] = m;
            rec(k + 1, rest, coords, cur, out);
        }
        for (r, c) in rest.iter_mut().zip(&coords[k]) {
            *r += c * m as i64;
        }
        cur[k] = 0;
    }
    if mu.iter().any(|&x| x < 0) {
        return out;
    }
    let mut rest = mu.to_vec();
    rec(0, &mut rest, &coords, &mut cur, &mut out);
    out
}

/// A PBW monomial `∏^{←}_γ x_γ^{m_γ}` together with its multiplicities.
#[derive(Clone, Debug)]
pub struct PbwMonomial {
    /// `m_γ`, indexed by the increasing convex order.
    pub mult: Vec<u32>,
    pub element: AlgebraElement,
}

/// The ordered product of root vectors with the given multiplicities, roots
/// taken in decreasing convex order.
pub fn pbw_product(t: RSType, mult: &[u32], side: Side, params: Params) -> Result<AlgebraElement> {
    let tab = lyndon_table(t);
    let mut x = AlgebraElement::one(t.rank);
    for k in (0..tab.roots.len()).rev() {
        if mult[k] == 0 {
            continue;
        }
        let rv = root_vector(t, &tab.roots[k], side, params)?;
        for _ in 0..mult[k] {
            x = x.mul(&rv);
        }
    }
    Ok(x)
}

/// All PBW monomials of weight `μ` (α-coordinates, `μ ∈ Q^+`).
pub fn pbw_monomials(t: RSType, mu: &[i64], side: Side, params: Params) -> Result<Vec<PbwMonomial>> {
    if mu.len() != t.rank {
        return Err(Error::Invalid(format!("weight has {} coordinates, rank is {}", mu.len(), t.rank)));
    }
    kostant_partitions(t, mu)
        .into_iter()
        .map(|mult| Ok(PbwMonomial { element: pbw_product(t, &mult, side, params)?, mult }))
        .collect()
}

/// `(r_i s_i)^{1/2} = (rs)^{d_i/2}`.
fn half_rs_i(t: RSType, i: usize) -> RsExp {
    RsExp::rs(Rational64::new(d_i(t, i), 2))
}

/// `φ(x)`: `e_i ↦ e_i`, `f_i ↦ (r_i s_i)^{-1/2} f_i`, words multiplied with `∘`.
/// Abstract symbols are sent to themselves.
pub fn phi_image(x: &AlgebraElement, t: RSType) -> AlgebraElement {
    let zeta = zeta_on_q(t);
    let n = t.rank;
    let mut out = AlgebraElement::zero(n);
    for (w, c) in x.terms() {
        let degs: Vec<Bidegree> = w.iter().map(|g| g.bidegree(n)).collect();
        let mut f = RsExp::one();
        for a in 0..degs.len() {
            for b in a + 1..degs.len() {
                f = f.mul(twist_factor(&zeta, &degs[a], &degs[b]));
            }
            if let Gen::F(i) = w[a] {
                f = f.mul(half_rs_i(t, i).inv());
            }
        }
        out.add_term(w.clone(), c * &f.to_ratfunc());
    }
    out
}

/// `c^±_γ`: `c^+_{α_i} = 1`, `c^-_{α_i} = (r_i s_i)^{1/2}`,
/// `c^±_γ = ζ(β,α) c^±_α c^±_β` over the costandard pair.
pub fn c_constant_exp(t: RSType, g: &RVec, side: Side) -> Result<RsExp> {
    if !is_positive_root(t, g) {
        return Err(Error::NotARoot(g.to_string()));
    }
    if let Some(i) = simple_index(t, g) {
        return Ok(match side {
            Side::Plus => RsExp::one(),
            Side::Minus => half_rs_i(t, i),
        });
    }
    let tab = lyndon_table(t);
    let k = tab.index_of(g).expect("checked positive root");
    let (ia, ib) = tab.costandard[k].expect("non-simple roots split");
    let (a, b) = (&tab.roots[ia], &tab.roots[ib]);
    let z = zeta_on_q(t).eval(b, a)?;
    Ok(z.mul(c_constant_exp(t, a, side)?).mul(c_constant_exp(t, b, side)?))
}

/// [`c_constant_exp`] as a rational function.
pub fn c_constant(t: RSType, g: &RVec, side: Side) -> Result<RatFunc> {
    Ok(c_constant_exp(t, g, side)?.to_ratfunc())
}

/// Default seed for the randomized bracket suite.
pub const DEFAULT_SEED: u64 = 20240611;

fn random_scalar(rng: &mut ChaCha8Rng) -> RatFunc {
    let a = rng.random_range(-2..=2);
    let b = rng.random_range(-2..=2);
    let c = rng.random_range(1..=3);
    &RatFunc::rs(Rational64::new(a, 2), Rational64::from_integer(b)) * &RatFunc::from_int(c)
}

fn random_abstract(rng: &mut ChaCha8Rng, n: usize, id: usize) -> AlgebraElement {
    let v = |rng: &mut ChaCha8Rng| (0..n).map(|_| rng.random_range(-2..=2)).collect::<Vec<i64>>();
    let deg = Bidegree { left: v(rng), right: v(rng) };
    AlgebraElement::gen(n, Gen::Abstract { id, deg })
}

/// Checks, on random homogeneous symbols `y_1,…,y_n` and scalars `v_i`:
///
/// * `[y_1,…,y_n]_v = Π_{i<j} ζ-factor(y_i,y_j)^{-1} · [y_1,…,y_n]^∘_{ṽ}` with the
///   twisted product and `ṽ_i = v_i ζ-factor(y_{n−i}, y_{n−i+1}+…+y_n)^2`;
/// * `[y_1,…,y_n]_v = (−1)^{n−1} v_1⋯v_{n−1} [y_n,…,y_1]'_{v^{-1}}`.
///
/// Instance `k` uses `n = 2 + k mod 3`; the generator is seeded with `seed`.
pub fn twisted_bracket_suite(t: RSType, instances: usize, seed: u64) -> Result<Vec<CheckReport>> {
    let r = t.rank;
    let z = zeta_on_q(t);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(2 * instances);
    for k in 0..instances {
        let n = 2 + k % 3;
        let ys: Vec<_> = (0..n).map(|i| random_abstract(&mut rng, r, i)).collect();
        let vs: Vec<_> = (0..n - 1).map(|_| random_scalar(&mut rng)).collect();
        let degs: Vec<Bidegree> = ys.iter().map(|y| y.bidegree()).collect::<Result<_>>()?;
        let mut pref = RsExp::one();
        for i in 0..n {
            for j in i + 1..n {
                pref = pref.mul(twist_factor(&z, &degs[i], &degs[j]).inv());
            }
        }
        let vt: Vec<RatFunc> = (1..n)
            .map(|i| {
                let tail = degs[n - i..].iter().fold(Bidegree::zero(r), |a, d| a.add(d));
                &vs[i - 1] * &twist_factor(&z, &degs[n - i - 1], &tail).powi(2).to_ratfunc()
            })
            .collect();
        let lhs = qbracket_left(&ys, &vs)?;
        let twisted = twisted_qbracket_left(&ys, &vt, &z)?.scale(&pref.to_ratfunc());
        out.push(CheckReport::from_bool(format!("twisted bracket #{k} n={n}"), lhs == twisted, "sides differ"));
        let rev: Vec<_> = ys.iter().rev().cloned().collect();
        let inv: Vec<_> = vs.iter().map(|v| v.inv()).collect::<Result<_>>()?;
        let mut c = vs.iter().fold(RatFunc::one(), |a, v| &a * v);
        if n % 2 == 0 {
            c = -c;
        }
        let primed = qbracket_right(&rev, &inv)?.scale(&c);
        out.push(CheckReport::from_bool(format!("bracket to bracket' #{k} n={n}"), lhs == primed, "sides differ"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsystem::{from_alpha_coords, positive_roots, Family};
    use crate::scalars::{rat, specialize_one_param};

    fn a2() -> RSType {
        RSType::of(Family::A, 2)
    }

    #[test]
    fn twisted_products_of_generators() {
        let t = a2();
        let z = zeta_on_q(t);
        let e1 = AlgebraElement::e(2, 1);
        let e2 = AlgebraElement::e(2, 2);
        let x = twisted_multiply(&e1, &e2, &z).unwrap();
        assert_eq!(x, AlgebraElement::e_word(2, &[1, 2]).scale(&RatFunc::rs(rat(1, 4), rat(1, 4))));
        let y = twisted_multiply(&AlgebraElement::f(2, 1), &AlgebraElement::f(2, 2), &z).unwrap();
        assert_eq!(y, AlgebraElement::f_word(2, &[1, 2]).scale(&RatFunc::rs(rat(-1, 4), rat(-1, 4))));
        assert_eq!(twisted_multiply(&e1, &AlgebraElement::one(2), &z).unwrap(), e1);
        let mixed = e1.add(&e2);
        assert!(twisted_multiply(&mixed, &e1, &z).is_err());
    }

    #[test]
    fn root_vectors_a2() {
        let t = a2();
        let g = from_alpha_coords(t, &[1, 1]);
        let e = root_vector(t, &g, Side::Plus, Params::TwoParam).unwrap();
        let expect = AlgebraElement::e_word(2, &[1, 2]).sub(&AlgebraElement::e_word(2, &[2, 1]).scale(&RatFunc::s()));
        assert_eq!(*e, expect);
        assert_eq!(e.to_string(), "e1*e2 - s*e2*e1");
        let f = root_vector(t, &g, Side::Minus, Params::TwoParam).unwrap();
        let expect = AlgebraElement::f_word(2, &[2, 1]).sub(&AlgebraElement::f_word(2, &[1, 2]).scale(&RatFunc::r()));
        assert_eq!(*f, expect);
        let a1 = from_alpha_coords(t, &[1, 0]);
        assert_eq!(*root_vector(t, &a1, Side::Plus, Params::TwoParam).unwrap(), AlgebraElement::e(2, 1));
        assert!(root_vector(t, &from_alpha_coords(t, &[2, 1]), Side::Plus, Params::TwoParam).is_err());
    }

    #[test]
    fn brackets_small() {
        let y = |i| AlgebraElement::e(3, i);
        let v = RatFunc::r();
        let l = qbracket_left(&[y(1), y(2)], std::slice::from_ref(&v)).unwrap();
        let r = qbracket_right(&[y(1), y(2)], std::slice::from_ref(&v)).unwrap();
        assert_eq!(l, r);
        let three = qbracket_left(&[y(1), y(2), y(3)], &[RatFunc::r(), RatFunc::s()]).unwrap();
        assert_eq!(three.len(), 4);
        assert!(qbracket_left(&[y(1), y(2)], &[]).is_err());
    }

    #[test]
    fn bracket_suite_seeded() {
        for (f, r) in [(Family::A, 3), (Family::B, 2), (Family::C, 3), (Family::D, 3)] {
            let reports = twisted_bracket_suite(RSType::of(f, r), 12, 11).unwrap();
            assert_eq!(reports.len(), 24);
            assert!(crate::report::all_passed(&reports), "{reports:?}");
        }
        let a = twisted_bracket_suite(RSType::of(Family::A, 2), 3, 5).unwrap();
        assert_eq!(a, twisted_bracket_suite(RSType::of(Family::A, 2), 3, 5).unwrap());
    }

    #[test]
    fn twisted_product_associative() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for f in [Family::A, Family::B, Family::C] {
            for r in 1..=3 {
                let t = RSType::of(f, r);
                let z = zeta_on_q(t);
                for _ in 0..4 {
                    let a = random_abstract(&mut rng, r, 0);
                    let b = random_abstract(&mut rng, r, 1);
                    let c = random_abstract(&mut rng, r, 2);
                    let l = twisted_multiply(&twisted_multiply(&a, &b, &z).unwrap(), &c, &z).unwrap();
                    let rr = twisted_multiply(&a, &twisted_multiply(&b, &c, &z).unwrap(), &z).unwrap();
                    assert_eq!(l, rr);
                }
            }
        }
    }

    #[test]
    fn pbw_counts() {
        let t = a2();
        let m = pbw_monomials(t, &[1, 1], Side::Plus, Params::TwoParam).unwrap();
        assert_eq!(m.len(), 2);
        let g = root_vector(t, &from_alpha_coords(t, &[1, 1]), Side::Plus, Params::TwoParam).unwrap();
        assert!(m.iter().any(|x| x.element == *g));
        assert!(m.iter().any(|x| x.element == AlgebraElement::e_word(2, &[2, 1])));
        assert_eq!(pbw_monomials(t, &[1, 0], Side::Plus, Params::TwoParam).unwrap().len(), 1);
        let b2 = RSType::of(Family::B, 2);
        assert_eq!(kostant_partitions(b2, &[1, 2]).len(), 3);
        assert_eq!(kostant_partitions(RSType::of(Family::A, 3), &[1, 1, 1]).len(), 4);
    }

    #[test]
    fn phi_and_c_constants() {
        let t = a2();
        assert_eq!(phi_image(&AlgebraElement::e(2, 1), t), AlgebraElement::e(2, 1));
        assert_eq!(phi_image(&AlgebraElement::f(2, 1), t), AlgebraElement::f(2, 1).scale(&RatFunc::rs(rat(-1, 2), rat(-1, 2))));
        let g = from_alpha_coords(t, &[1, 1]);
        assert_eq!(c_constant(t, &g, Side::Plus).unwrap(), RatFunc::rs(rat(-1, 4), rat(-1, 4)));
        let a1 = from_alpha_coords(t, &[1, 0]);
        assert!(c_constant(t, &a1, Side::Plus).unwrap().is_one());
        assert_eq!(c_constant(t, &a1, Side::Minus).unwrap(), RatFunc::rs(rat(1, 2), rat(1, 2)));
    }

    #[test]
    fn root_vectors_twist_to_one_parameter() {
        let types = [(Family::A, 2), (Family::A, 3), (Family::B, 2), (Family::B, 3), (Family::C, 3), (Family::D, 3)];
        for (f, r) in types {
            let t = RSType::of(f, r);
            for g in positive_roots(t) {
                for side in [Side::Plus, Side::Minus] {
                    let one = root_vector(t, &g, side, Params::OneParam).unwrap();
                    let two = root_vector(t, &g, side, Params::TwoParam).unwrap();
                    let c = c_constant(t, &g, side).unwrap();
                    assert_eq!(*one, phi_image(&two, t).scale(&c), "{t} {g} {side:?}");
                }
            }
        }
    }

    #[test]
    fn specialization_matches_one_parameter() {
        for (f, r) in [(Family::B, 3), (Family::C, 3), (Family::D, 4)] {
            let t = RSType::of(f, r);
            for g in positive_roots(t) {
                let two = root_vector(t, &g, Side::Plus, Params::TwoParam).unwrap();
                let one = root_vector(t, &g, Side::Plus, Params::OneParam).unwrap();
                let a = two.map_coeffs(specialize_one_param).unwrap();
                let b = one.map_coeffs(specialize_one_param).unwrap();
                assert_eq!(a, b, "{t} {g}");
            }
        }
    }
}
