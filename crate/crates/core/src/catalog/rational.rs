//! Dense chains over exact rationals: `ℚ` and `ℚ ⊕ ℤ_n`.
//!
//! `ℚ` stands in for `ℝ`; the order-theoretic behaviour used here (no covers,
//! every interval infinite) is the same.

use num_traits::Zero;
use rand::{Rng, RngCore};

use crate::matrix::{int, parse_rational, rational, Rational};
use crate::oracle::{Cardinality, Covers, GroupOracle, OracleError};

fn decode_rational(s: &str) -> Result<Rational, OracleError> {
    parse_rational(s).map_err(|_| OracleError::Decode(s.to_string()))
}

fn random_rational(rng: &mut dyn RngCore) -> Rational {
    let den = rng.gen_range(1..=6);
    rational(rng.gen_range(-30..=30), den)
}

/// Halves `k/2` for `|k| <= 2·depth`.
fn half_steps(depth: usize) -> impl Iterator<Item = Rational> {
    let d = 2 * depth as i64;
    (-d..=d).map(|k| rational(k, 2))
}

/// `(ℚ, +, ≤)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct RatChain;

impl GroupOracle for RatChain {
    type Elem = Rational;

    fn name(&self) -> String {
        "rat_chain".into()
    }
    fn identity(&self) -> Rational {
        Rational::zero()
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn inv(&self, a: &Rational) -> Rational {
        -a
    }
    fn leq(&self, a: &Rational, b: &Rational) -> bool {
        a <= b
    }
    fn covers_above(&self, _x: &Rational) -> Covers<Rational> {
        Covers::Dense
    }
    fn covers_below(&self, _x: &Rational) -> Covers<Rational> {
        Covers::Dense
    }
    fn generators(&self) -> Vec<Rational> {
        vec![int(1), rational(1, 2)]
    }
    fn cardinality(&self) -> Cardinality {
        Cardinality::Countable
    }
    fn encode(&self, x: &Rational) -> String {
        x.to_string()
    }
    fn decode(&self, s: &str) -> Result<Rational, OracleError> {
        decode_rational(s)
    }
    fn random_element(&self, rng: &mut dyn RngCore) -> Rational {
        random_rational(rng)
    }
    fn window_elements(&self, depth: usize, _cap: usize) -> Result<Vec<Rational>, OracleError> {
        Ok(half_steps(depth).collect())
    }
}

/// `ℚ ⊕ ℤ_n` with `(a,b) <= (c,d)` iff `a <= c` and `b = d`: `n` disjoint
/// dense chains.
#[derive(Clone, Copy, Debug)]
pub struct DisjointChainsRat {
    n: u32,
}

impl DisjointChainsRat {
    pub fn new(n: u32) -> Self {
        assert!(n >= 1, "n must be positive");
        Self { n }
    }

    pub fn n(&self) -> u32 {
        self.n
    }
}

impl GroupOracle for DisjointChainsRat {
    type Elem = (Rational, u32);

    fn name(&self) -> String {
        format!("disjoint_chains_rat(n={})", self.n)
    }
    fn identity(&self) -> (Rational, u32) {
        (Rational::zero(), 0)
    }
    fn mul(&self, a: &(Rational, u32), b: &(Rational, u32)) -> (Rational, u32) {
        (&a.0 + &b.0, (a.1 + b.1) % self.n)
    }
    fn inv(&self, a: &(Rational, u32)) -> (Rational, u32) {
        (-&a.0, (self.n - a.1) % self.n)
    }
    fn leq(&self, a: &(Rational, u32), b: &(Rational, u32)) -> bool {
        a.1 == b.1 && a.0 <= b.0
    }
    fn covers_above(&self, _x: &(Rational, u32)) -> Covers<(Rational, u32)> {
        Covers::Dense
    }
    fn covers_below(&self, _x: &(Rational, u32)) -> Covers<(Rational, u32)> {
        Covers::Dense
    }
    fn generators(&self) -> Vec<(Rational, u32)> {
        let mut g = vec![(int(1), 0), (rational(1, 2), 0)];
        if self.n > 1 {
            g.push((Rational::zero(), 1));
        }
        g
    }
    fn cardinality(&self) -> Cardinality {
        Cardinality::Countable
    }
    fn encode(&self, x: &(Rational, u32)) -> String {
        format!("({},{})", x.0, x.1)
    }
    fn decode(&self, s: &str) -> Result<(Rational, u32), OracleError> {
        let err = || OracleError::Decode(s.to_string());
        let inner = s.trim().strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(err)?;
        let (a, b) = inner.split_once(',').ok_or_else(err)?;
        let b: u32 = b.trim().parse().map_err(|_| err())?;
        if b >= self.n {
            return Err(err());
        }
        Ok((decode_rational(a)?, b))
    }
    fn random_element(&self, rng: &mut dyn RngCore) -> (Rational, u32) {
        (random_rational(rng), rng.gen_range(0..self.n))
    }
    fn window_elements(&self, depth: usize, cap: usize) -> Result<Vec<(Rational, u32)>, OracleError> {
        if (4 * depth + 1) * self.n as usize > cap {
            return Err(OracleError::ExplosionLimit { cap });
        }
        Ok(half_steps(depth).flat_map(|a| (0..self.n).map(move |b| (a.clone(), b))).collect())
    }
    fn component_key(&self, x: &(Rational, u32)) -> Option<u64> {
        Some(x.1 as u64)
    }
}
