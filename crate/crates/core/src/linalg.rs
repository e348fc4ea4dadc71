//! Dense Gauss–Jordan elimination over rational functions.

use crate::error::{Error, Result};
use crate::scalars::RatFunc;

pub type Matrix = Vec<Vec<RatFunc>>;

pub fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { RatFunc::one() } else { RatFunc::zero() }).collect()).collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let m = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..m)
                .map(|j| {
                    row.iter().enumerate().fold(RatFunc::zero(), |acc, (k, x)| {
                        if x.is_zero() || b[k][j].is_zero() {
                            acc
                        } else {
                            &acc + &(x * &b[k][j])
                        }
                    })
                })
                .collect()
        })
        .collect()
}

/// Inverse of a square matrix; [`Error::Singular`] if it has none.
pub fn inverse(a: &Matrix) -> Result<Matrix> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(Error::Invalid("matrix is not square".into()));
    }
    let mut m: Matrix = a.clone();
    let mut inv = identity(n);
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero()).ok_or(Error::Singular)?;
        m.swap(col, piv);
        inv.swap(col, piv);
        let p = m[col][col].inv()?;
        for j in 0..n {
            m[col][j] = &m[col][j] * &p;
            inv[col][j] = &inv[col][j] * &p;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for j in 0..n {
                if !m[col][j].is_zero() {
                    m[r][j] = &m[r][j] - &(&f * &m[col][j]);
                }
                if !inv[col][j].is_zero() {
                    inv[r][j] = &inv[r][j] - &(&f * &inv[col][j]);
                }
            }
        }
    }
    Ok(inv)
}

/// Determinant by elimination.
pub fn determinant(a: &Matrix) -> RatFunc {
    let n = a.len();
    let mut m = a.clone();
    let mut det = RatFunc::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else { return RatFunc::zero() };
        if piv != col {
            m.swap(col, piv);
            det = -det;
        }
        det = &det * &m[col][col];
        let p = m[col][col].inv().expect("nonzero pivot");
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] * &p;
            for j in col..n {
                if !m[col][j].is_zero() {
                    m[r][j] = &m[r][j] - &(&f * &m[col][j]);
                }
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_round_trip() {
        let a = vec![vec![RatFunc::r(), RatFunc::one()], vec![RatFunc::s(), RatFunc::from_int(2)]];
        let b = inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &b), identity(2));
        assert_eq!(determinant(&a), &(&RatFunc::r() * &RatFunc::from_int(2)) - &RatFunc::s());
        let sing = vec![vec![RatFunc::r(), RatFunc::s()], vec![RatFunc::r(), RatFunc::s()]];
        assert!(matches!(inverse(&sing), Err(Error::Singular)));
        assert!(determinant(&sing).is_zero());
    }
}
