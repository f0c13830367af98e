//! Matrix examples: symmetric matrices under the Loewner order, and `GL_n`
//! ordered by `|det|`.

use num_traits::{One, Signed, Zero};
use rand::{Rng, RngCore};

use super::CatalogError;
use crate::matrix::{int, psd_check, rational, RatMatrix, Rational, PSD_SIZE_LIMIT};
use crate::oracle::{Cardinality, Covers, GroupOracle, OracleError};

fn decode_matrix(s: &str, n: usize) -> Result<RatMatrix, OracleError> {
    let m: RatMatrix = s.parse().map_err(|_| OracleError::Decode(s.to_string()))?;
    if m.size() != n {
        return Err(OracleError::Decode(s.to_string()));
    }
    Ok(m)
}

fn unit(n: usize, i: usize, j: usize) -> RatMatrix {
    RatMatrix::from_fn(n, |r, c| if (r, c) == (i, j) { int(1) } else { Rational::zero() })
}

/// Additive group of symmetric `n × n` rational matrices, `A <= B` iff
/// `B - A` is positive semi-definite.
///
/// Restricted to symmetric matrices: on all of `M_n` the relation is not
/// antisymmetric, since a nonzero skew-symmetric difference has zero
/// quadratic form in both directions.
#[derive(Clone, Copy, Debug)]
pub struct SymLoewner {
    n: usize,
}

impl SymLoewner {
    /// `1 <= n <= PSD_SIZE_LIMIT`.
    pub fn new(n: usize) -> Result<Self, CatalogError> {
        if n == 0 || n > PSD_SIZE_LIMIT {
            return Err(CatalogError::BadParameter(format!(
                "sym_loewner needs 1 <= n <= {PSD_SIZE_LIMIT}, got {n}"
            )));
        }
        Ok(Self { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

impl GroupOracle for SymLoewner {
    type Elem = RatMatrix;

    fn name(&self) -> String {
        format!("sym_loewner(n={})", self.n)
    }
    fn identity(&self) -> RatMatrix {
        RatMatrix::zero(self.n)
    }
    fn mul(&self, a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
        a.add(b)
    }
    fn inv(&self, a: &RatMatrix) -> RatMatrix {
        a.neg()
    }
    fn leq(&self, a: &RatMatrix, b: &RatMatrix) -> bool {
        psd_check(&b.sub(a)).expect("symmetric matrix within size limit")
    }
    fn covers_above(&self, _x: &RatMatrix) -> Covers<RatMatrix> {
        Covers::Dense
    }
    fn covers_below(&self, _x: &RatMatrix) -> Covers<RatMatrix> {
        Covers::Dense
    }
    fn generators(&self) -> Vec<RatMatrix> {
        let n = self.n;
        let mut g: Vec<RatMatrix> = (0..n).map(|i| unit(n, i, i)).collect();
        for i in 0..n {
            for j in i + 1..n {
                g.push(unit(n, i, j).add(&unit(n, j, i)));
            }
        }
        g
    }
    fn cardinality(&self) -> Cardinality {
        Cardinality::Continuum
    }
    fn encode(&self, x: &RatMatrix) -> String {
        x.to_string()
    }
    fn decode(&self, s: &str) -> Result<RatMatrix, OracleError> {
        let m = decode_matrix(s, self.n)?;
        if !m.is_symmetric() {
            return Err(OracleError::Decode(s.to_string()));
        }
        Ok(m)
    }
    fn random_element(&self, rng: &mut dyn RngCore) -> RatMatrix {
        let mut m = RatMatrix::zero(self.n);
        for i in 0..self.n {
            for j in i..self.n {
                let v = rational(rng.gen_range(-6..=6), rng.gen_range(1..=2));
                m.set(i, j, v.clone());
                m.set(j, i, v);
            }
        }
        m
    }
}

/// The usual trace, a monotone homomorphism `sym_loewner(n) → rat_chain`.
pub fn loewner_trace(m: &RatMatrix) -> Rational {
    m.trace()
}

/// Element of `GL_n(ℚ)` with its `|det|` cached for order queries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GlElem {
    matrix: RatMatrix,
    abs_det: Rational,
}

impl GlElem {
    /// `None` when `m` is singular.
    pub fn new(matrix: RatMatrix) -> Option<Self> {
        let abs_det = matrix.det().abs();
        (!abs_det.is_zero()).then_some(Self { matrix, abs_det })
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn abs_det(&self) -> &Rational {
        &self.abs_det
    }
}

/// `GL_n(ℚ)` with `A <= B` iff `A = B` or `|det A| < |det B|`; the
/// comparison of `log |det|` without logarithms.
#[derive(Clone, Copy, Debug)]
pub struct GlDet {
    n: usize,
}

impl GlDet {
    pub fn new(n: usize) -> Result<Self, CatalogError> {
        if n == 0 {
            return Err(CatalogError::BadParameter("gl_det needs n >= 1".into()));
        }
        Ok(Self { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Wraps an invertible matrix of the right size.
    pub fn element(&self, m: RatMatrix) -> Option<GlElem> {
        (m.size() == self.n).then(|| GlElem::new(m)).flatten()
    }

    /// `diag(2^k, 1, ..., 1)`.
    pub fn dilation(&self, k: i32) -> GlElem {
        let two = int(2);
        let d = if k >= 0 { num_traits::pow(two, k as usize) } else { num_traits::pow(two, (-k) as usize).recip() };
        let mut entries = vec![d];
        entries.resize(self.n, Rational::one());
        GlElem::new(RatMatrix::diagonal(&entries)).expect("dilation is invertible")
    }

    /// Matrix swapping the first two coordinates.
    pub fn swap(&self) -> Option<GlElem> {
        (self.n >= 2).then(|| {
            let m = RatMatrix::from_fn(self.n, |i, j| {
                let target = match i {
                    0 => 1,
                    1 => 0,
                    _ => i,
                };
                if j == target {
                    int(1)
                } else {
                    Rational::zero()
                }
            });
            GlElem::new(m).expect("permutation matrix is invertible")
        })
    }
}

impl GroupOracle for GlDet {
    type Elem = GlElem;

    fn name(&self) -> String {
        format!("gl_det(n={})", self.n)
    }
    fn identity(&self) -> GlElem {
        GlElem::new(RatMatrix::identity(self.n)).expect("identity is invertible")
    }
    fn mul(&self, a: &GlElem, b: &GlElem) -> GlElem {
        GlElem { matrix: a.matrix.mul(&b.matrix), abs_det: &a.abs_det * &b.abs_det }
    }
    fn inv(&self, a: &GlElem) -> GlElem {
        GlElem {
            matrix: a.matrix.inverse().expect("element is invertible"),
            abs_det: a.abs_det.recip(),
        }
    }
    fn leq(&self, a: &GlElem, b: &GlElem) -> bool {
        a == b || a.abs_det < b.abs_det
    }
    fn covers_above(&self, _x: &GlElem) -> Covers<GlElem> {
        Covers::Unsupported
    }
    fn covers_below(&self, _x: &GlElem) -> Covers<GlElem> {
        Covers::Unsupported
    }
    fn generators(&self) -> Vec<GlElem> {
        let n = self.n;
        if n == 1 {
            let minus = GlElem::new(RatMatrix::diagonal(&[int(-1)])).expect("invertible");
            return vec![self.dilation(1), minus];
        }
        let shear = |i, j| GlElem::new(RatMatrix::identity(n).add(&unit(n, i, j))).expect("invertible");
        let mut g = vec![self.dilation(1), shear(0, 1), shear(1, 0)];
        g.extend(self.swap());
        g
    }
    fn cardinality(&self) -> Cardinality {
        Cardinality::Continuum
    }
    fn encode(&self, x: &GlElem) -> String {
        x.matrix.to_string()
    }
    fn decode(&self, s: &str) -> Result<GlElem, OracleError> {
        GlElem::new(decode_matrix(s, self.n)?).ok_or_else(|| OracleError::Decode(s.to_string()))
    }
    /// Random rational matrix with small entries, redrawn until invertible.
    fn random_element(&self, rng: &mut dyn RngCore) -> GlElem {
        loop {
            let m = RatMatrix::from_fn(self.n, |_, _| rational(rng.gen_range(-4..=4), rng.gen_range(1..=3)));
            if let Some(e) = GlElem::new(m) {
                return e;
            }
        }
    }
}

/// `count` distinct determinant-one matrices, starting with the identity and
/// continuing with the elementary matrices `I + k·e_ij`, `k = 1, 2, ...`.
/// All have `|det| = 1`, so they form an antichain in `gl_det(n)`.
pub fn sl_antichain_sample(n: usize, count: usize) -> Result<Vec<RatMatrix>, CatalogError> {
    if n < 2 || count == 0 {
        return Err(CatalogError::BadParameter(format!(
            "sl_antichain_sample needs n >= 2 and count >= 1, got n = {n}, count = {count}"
        )));
    }
    let positions: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).flat_map(move |j| [(i, j), (j, i)]))
        .collect();
    let mut out = vec![RatMatrix::identity(n)];
    let mut k = 1i64;
    while out.len() < count {
        for &(i, j) in &positions {
            if out.len() == count {
                break;
            }
            out.push(RatMatrix::identity(n).add(&unit(n, i, j).scale(&int(k))));
        }
        k += 1;
    }
    Ok(out)
}
