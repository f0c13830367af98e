//! Square matrices over exact rationals.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = BigRational;

/// Largest size for which [`psd_check`] enumerates principal minors.
pub const PSD_SIZE_LIMIT: usize = 5;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix of size {size} exceeds limit {limit}")]
    SizeLimitExceeded { size: usize, limit: usize },
    #[error("cannot parse `{0}`")]
    Parse(String),
}

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn parse_rational(s: &str) -> Result<Rational, MatrixError> {
    let err = || MatrixError::Parse(s.to_string());
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| err())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(BigInt::from_str(s).map_err(|_| err())?)),
    }
}

/// Row-major `n × n` rational matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    n: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zero(n: usize) -> Self {
        Self { n, data: vec![Rational::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        Self { n, data: (0..n * n).map(|k| f(k / n, k % n)).collect() }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self::from_fn(n, |i, j| int(rows[i][j]))
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let n = entries.len();
        Self::from_fn(n, |i, j| if i == j { entries[i].clone() } else { Rational::zero() })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.n + j] = v;
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(i, j) - other.get(i, j))
    }

    pub fn neg(&self) -> Self {
        Self { n: self.n, data: self.data.iter().map(|v| -v).collect() }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self { n: self.n, data: self.data.iter().map(|v| v * k).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        Self::from_fn(n, |i, j| {
            (0..n).fold(Rational::zero(), |acc, k| acc + self.get(i, k) * other.get(k, j))
        })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> Rational {
        (0..self.n).fold(Rational::zero(), |acc, i| acc + self.get(i, i))
    }

    /// Submatrix on the given rows and columns.
    pub fn principal(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), |i, j| self.get(idx[i], idx[j]).clone())
    }

    /// Determinant by Gaussian elimination; exact.
    pub fn det(&self) -> Rational {
        let n = self.n;
        let mut a = self.data.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return Rational::zero();
            };
            if p != col {
                for k in 0..n {
                    a.swap(p * n + k, col * n + k);
                }
                det = -det;
            }
            let pivot = a[col * n + col].clone();
            det *= &pivot;
            for r in col + 1..n {
                if a[r * n + col].is_zero() {
                    continue;
                }
                let f = &a[r * n + col] / &pivot;
                for k in col..n {
                    let v = &f * &a[col * n + k];
                    a[r * n + k] -= v;
                }
            }
        }
        det
    }

    /// Gauss–Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.n;
        let mut a = self.data.clone();
        let mut inv = Self::identity(n).data;
        for col in 0..n {
            let p = (col..n).find(|&r| !a[r * n + col].is_zero())?;
            if p != col {
                for k in 0..n {
                    a.swap(p * n + k, col * n + k);
                    inv.swap(p * n + k, col * n + k);
                }
            }
            let pivot = a[col * n + col].clone();
            for k in 0..n {
                a[col * n + k] /= &pivot;
                inv[col * n + k] /= &pivot;
            }
            for r in 0..n {
                if r == col || a[r * n + col].is_zero() {
                    continue;
                }
                let f = a[r * n + col].clone();
                for k in 0..n {
                    let va = &f * &a[col * n + k];
                    a[r * n + k] -= va;
                    let vi = &f * &inv[col * n + k];
                    inv[r * n + k] -= vi;
                }
            }
        }
        Some(Self { n, data: inv })
    }
}

/// Positive semi-definiteness of a symmetric matrix: every one of the
/// `2^n - 1` principal minors is non-negative.
pub fn psd_check(m: &RatMatrix) -> Result<bool, MatrixError> {
    if m.size() > PSD_SIZE_LIMIT {
        return Err(MatrixError::SizeLimitExceeded { size: m.size(), limit: PSD_SIZE_LIMIT });
    }
    if !m.is_symmetric() {
        return Err(MatrixError::NotSymmetric);
    }
    let n = m.size();
    for mask in 1u32..(1 << n) {
        let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if m.principal(&idx).det().is_negative() {
            return Ok(false);
        }
    }
    Ok(true)
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.n {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for j in 0..self.n {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl FromStr for RatMatrix {
    type Err = MatrixError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || MatrixError::Parse(s.to_string());
        let inner = s.trim().strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(err)?;
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for chunk in inner.split(']') {
            let chunk = chunk.trim().trim_start_matches(',').trim();
            if chunk.is_empty() {
                continue;
            }
            let body = chunk.strip_prefix('[').ok_or_else(err)?;
            rows.push(body.split(',').map(parse_rational).collect::<Result<_, _>>()?);
        }
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(err());
        }
        Ok(Self::from_fn(n, |i, j| rows[i][j].clone()))
    }
}
