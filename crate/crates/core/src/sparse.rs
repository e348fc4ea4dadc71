//! Sparse square matrices over [`RatFunc`] and tensor-leg helpers.
//!
//! A basis vector `v_{i_1} ⊗ … ⊗ v_{i_k}` of `V^{⊗k}` with `dim V = N` has
//! flat index `Σ_m N^{k-m}(i_m − 1)`, so on `V ⊗ V` it is `N(i−1) + (j−1)`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalars::RatFunc;

/// A square matrix with no stored zeros, keyed by `(row, col)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseOperator {
    dim: usize,
    entries: BTreeMap<(usize, usize), RatFunc>,
}

/// First entry where two operators differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub row: usize,
    pub col: usize,
    pub left: RatFunc,
    pub right: RatFunc,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "entry ({}, {}): {} vs {}", self.row, self.col, self.left, self.right)
    }
}

impl SparseOperator {
    pub fn zero(dim: usize) -> Self {
        SparseOperator { dim, entries: BTreeMap::new() }
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal((0..dim).map(|_| RatFunc::one()).collect())
    }

    pub fn diagonal(d: Vec<RatFunc>) -> Self {
        let mut m = Self::zero(d.len());
        for (i, x) in d.into_iter().enumerate() {
            m.set(i, i, x);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, row: usize, col: usize) -> RatFunc {
        self.entries.get(&(row, col)).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &RatFunc)> {
        self.entries.iter()
    }

    /// Overwrites an entry; zero removes it.
    pub fn set(&mut self, row: usize, col: usize, x: RatFunc) {
        assert!(row < self.dim && col < self.dim, "index ({row}, {col}) out of range {}", self.dim);
        if x.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), x);
        }
    }

    /// Adds `x` to an entry.
    pub fn add_to(&mut self, row: usize, col: usize, x: &RatFunc) {
        if x.is_zero() {
            return;
        }
        let cur = self.get(row, col);
        self.set(row, col, &cur + x);
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries.keys().all(|(i, j)| i == j)
    }

    pub fn diagonal_entries(&self) -> Vec<RatFunc> {
        (0..self.dim).map(|i| self.get(i, i)).collect()
    }

    fn rows(&self) -> Vec<Vec<(usize, &RatFunc)>> {
        let mut rows = vec![Vec::new(); self.dim];
        for ((i, j), x) in &self.entries {
            rows[*i].push((*j, x));
        }
        rows
    }

    pub fn mul(&self, o: &SparseOperator) -> SparseOperator {
        assert_eq!(self.dim, o.dim, "dimension mismatch");
        let left = self.rows();
        let right = o.rows();
        let computed: Vec<(usize, BTreeMap<usize, RatFunc>)> = left
            .par_iter()
            .enumerate()
            .filter(|(_, row)| !row.is_empty())
            .map(|(i, row)| {
                let mut acc: BTreeMap<usize, RatFunc> = BTreeMap::new();
                for (k, a) in row {
                    for (j, b) in &right[*k] {
                        let p = *a * *b;
                        match acc.get_mut(j) {
                            Some(cur) => *cur = &*cur + &p,
                            None => {
                                acc.insert(*j, p);
                            }
                        }
                    }
                }
                (i, acc)
            })
            .collect();
        let mut out = SparseOperator::zero(self.dim);
        for (i, row) in computed {
            for (j, x) in row {
                if !x.is_zero() {
                    out.entries.insert((i, j), x);
                }
            }
        }
        out
    }

    fn combine(&self, o: &SparseOperator, neg: bool) -> SparseOperator {
        assert_eq!(self.dim, o.dim, "dimension mismatch");
        let mut out = self.clone();
        for ((i, j), x) in &o.entries {
            let y = if neg { -x } else { x.clone() };
            out.add_to(*i, *j, &y);
        }
        out
    }

    pub fn add(&self, o: &SparseOperator) -> SparseOperator {
        self.combine(o, false)
    }

    pub fn sub(&self, o: &SparseOperator) -> SparseOperator {
        self.combine(o, true)
    }

    pub fn scale(&self, c: &RatFunc) -> SparseOperator {
        let mut out = SparseOperator::zero(self.dim);
        if c.is_zero() {
            return out;
        }
        for (k, x) in &self.entries {
            out.entries.insert(*k, x * c);
        }
        out
    }

    /// Applies `f` to every stored entry, dropping results that vanish.
    pub fn map_entries<F>(&self, f: F) -> Result<SparseOperator>
    where
        F: Fn(usize, usize, &RatFunc) -> Result<RatFunc> + Sync,
    {
        let mapped: Vec<((usize, usize), RatFunc)> =
            self.entries.par_iter().map(|((i, j), x)| f(*i, *j, x).map(|y| ((*i, *j), y))).collect::<Result<_>>()?;
        let mut out = SparseOperator::zero(self.dim);
        for ((i, j), y) in mapped {
            out.set(i, j, y);
        }
        Ok(out)
    }

    pub fn transpose(&self) -> SparseOperator {
        let mut out = SparseOperator::zero(self.dim);
        for ((i, j), x) in &self.entries {
            out.entries.insert((*j, *i), x.clone());
        }
        out
    }

    /// Kronecker product `self ⊗ o`.
    pub fn kron(&self, o: &SparseOperator) -> SparseOperator {
        let d = o.dim;
        let mut out = SparseOperator::zero(self.dim * d);
        for ((i, j), a) in &self.entries {
            for ((k, l), b) in &o.entries {
                out.entries.insert((i * d + k, j * d + l), a * b);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> SparseOperator {
        let mut out = SparseOperator::identity(self.dim);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Conjugation `D M D^{-1}` by a diagonal matrix given as its entries.
    pub fn conjugate_diagonal(&self, d: &[RatFunc]) -> Result<SparseOperator> {
        let inv: Vec<RatFunc> = d.iter().map(|x| x.inv()).collect::<Result<_>>()?;
        self.map_entries(|i, j, x| Ok(&(&d[i] * x) * &inv[j]))
    }

    /// Exact inverse by dense elimination.
    pub fn inverse_dense(&self) -> Result<SparseOperator> {
        let inv = linalg::inverse(&self.to_dense())?;
        Ok(Self::from_dense(&inv))
    }

    pub fn to_dense(&self) -> linalg::Matrix {
        let mut m = vec![vec![RatFunc::zero(); self.dim]; self.dim];
        for ((i, j), x) in &self.entries {
            m[*i][*j] = x.clone();
        }
        m
    }

    pub fn from_dense(m: &linalg::Matrix) -> SparseOperator {
        let mut out = SparseOperator::zero(m.len());
        for (i, row) in m.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                out.set(i, j, x.clone());
            }
        }
        out
    }

    /// First differing entry in row-major order, if any.
    pub fn first_mismatch(&self, o: &SparseOperator) -> Option<Mismatch> {
        if self.dim != o.dim {
            return Some(Mismatch { row: self.dim, col: o.dim, left: RatFunc::zero(), right: RatFunc::zero() });
        }
        let keys: std::collections::BTreeSet<&(usize, usize)> = self.entries.keys().chain(o.entries.keys()).collect();
        keys.into_iter().find_map(|&(i, j)| {
            let (a, b) = (self.get(i, j), o.get(i, j));
            (a != b).then_some(Mismatch { row: i, col: j, left: a, right: b })
        })
    }
}

/// Splits a flat index of `V^{⊗k}` into 1-based leg indices.
pub fn unflatten(n: usize, k: usize, mut flat: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    for m in (0..k).rev() {
        out[m] = flat % n + 1;
        flat /= n;
    }
    out
}

/// Flat index of `v_{i_1} ⊗ … ⊗ v_{i_k}` with 1-based leg indices.
pub fn flatten(n: usize, idx: &[usize]) -> usize {
    idx.iter().fold(0, |acc, &i| acc * n + (i - 1))
}

/// The matrix unit `E_{ij}` on `V` (1-based).
pub fn unit(n: usize, i: usize, j: usize) -> SparseOperator {
    let mut m = SparseOperator::zero(n);
    m.set(i - 1, j - 1, RatFunc::one());
    m
}

/// Accumulates `c · E_{ik} ⊗ E_{jl}` into an operator on `V ⊗ V` (1-based).
pub fn add_tensor_unit(m: &mut SparseOperator, n: usize, (i, k): (usize, usize), (j, l): (usize, usize), c: &RatFunc) {
    m.add_to(flatten(n, &[i, j]), flatten(n, &[k, l]), c);
}

/// The flip `τ(v_i ⊗ v_j) = v_j ⊗ v_i` on `V ⊗ V`.
pub fn flip(n: usize) -> SparseOperator {
    let mut m = SparseOperator::zero(n * n);
    for i in 1..=n {
        for j in 1..=n {
            m.set(flatten(n, &[j, i]), flatten(n, &[i, j]), RatFunc::one());
        }
    }
    m
}

/// Embeds an operator on `V ⊗ V` into `V^{⊗3}` acting on legs `(a, b)`, `a < b`.
pub fn on_legs(m: &SparseOperator, n: usize, legs: (usize, usize)) -> Result<SparseOperator> {
    if m.dim() != n * n {
        return Err(Error::Invalid(format!("operator of size {} is not on V⊗V with dim V = {n}", m.dim())));
    }
    let (a, b) = legs;
    if !(a < b && b <= 3 && a >= 1) {
        return Err(Error::Invalid(format!("legs {legs:?} are not an increasing pair in 1..=3")));
    }
    let c = 6 - a - b;
    let mut out = SparseOperator::zero(n * n * n);
    for ((row, col), x) in m.entries() {
        let r = unflatten(n, 2, *row);
        let s = unflatten(n, 2, *col);
        for k in 1..=n {
            let mut ri = [0usize; 3];
            let mut ci = [0usize; 3];
            ri[a - 1] = r[0];
            ri[b - 1] = r[1];
            ri[c - 1] = k;
            ci[a - 1] = s[0];
            ci[b - 1] = s[1];
            ci[c - 1] = k;
            out.set(flatten(n, &ri), flatten(n, &ci), x.clone());
        }
    }
    Ok(out)
}

/// `A^{t'} = (a_{j'i'})` on `V`, with `i' = N + 1 − i`.
pub fn transpose_prime(m: &SparseOperator) -> SparseOperator {
    let n = m.dim();
    let mut out = SparseOperator::zero(n);
    for ((i, j), x) in m.entries() {
        // 0-based: i' = n - 1 - i.
        out.set(n - 1 - j, n - 1 - i, x.clone());
    }
    out
}

/// Partial transposition `t'` on leg 1 or 2 of an operator on `V ⊗ V`.
pub fn partial_transpose_prime(m: &SparseOperator, n: usize, leg: usize) -> Result<SparseOperator> {
    if m.dim() != n * n {
        return Err(Error::Invalid(format!("operator of size {} is not on V⊗V with dim V = {n}", m.dim())));
    }
    if leg != 1 && leg != 2 {
        return Err(Error::Invalid(format!("leg must be 1 or 2, got {leg}")));
    }
    let p = |i: usize| n + 1 - i;
    let mut out = SparseOperator::zero(n * n);
    for ((row, col), x) in m.entries() {
        let r = unflatten(n, 2, *row);
        let c = unflatten(n, 2, *col);
        // Coefficient of E_{r0 c0} ⊗ E_{r1 c1}.
        let (nr, nc) = if leg == 1 { ([p(c[0]), r[1]], [p(r[0]), c[1]]) } else { ([r[0], p(c[1])], [c[0], p(r[1])]) };
        out.set(flatten(n, &nr), flatten(n, &nc), x.clone());
    }
    Ok(out)
}

/// `A ⊗ I` on `V ⊗ V`.
pub fn leg1(a: &SparseOperator) -> SparseOperator {
    a.kron(&SparseOperator::identity(a.dim()))
}

/// `I ⊗ A` on `V ⊗ V`.
pub fn leg2(a: &SparseOperator) -> SparseOperator {
    SparseOperator::identity(a.dim()).kron(a)
}
