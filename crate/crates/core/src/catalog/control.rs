use rand::{Rng, RngCore};

use crate::oracle::{Cardinality, Covers, GroupOracle, OracleError};

/// `ℤ` under addition with `a <= b` iff `a = b`, or `a < b` and `a` is even.
///
/// A genuine partial order that translations do not respect: `0 <= 1` but
/// `1 ≰ 2`. Negative control for the monotonicity checks.
#[derive(Clone, Copy, Debug, Default)]
pub struct BrokenParityChain;

impl GroupOracle for BrokenParityChain {
    type Elem = i64;

    fn name(&self) -> String {
        "broken_parity_chain".into()
    }
    fn identity(&self) -> i64 {
        0
    }
    fn mul(&self, a: &i64, b: &i64) -> i64 {
        a + b
    }
    fn inv(&self, a: &i64) -> i64 {
        -a
    }
    fn leq(&self, a: &i64, b: &i64) -> bool {
        a == b || (a < b && a.rem_euclid(2) == 0)
    }
    fn covers_above(&self, _x: &i64) -> Covers<i64> {
        Covers::Unsupported
    }
    fn covers_below(&self, _x: &i64) -> Covers<i64> {
        Covers::Unsupported
    }
    fn generators(&self) -> Vec<i64> {
        vec![1]
    }
    fn cardinality(&self) -> Cardinality {
        Cardinality::Countable
    }
    fn encode(&self, x: &i64) -> String {
        x.to_string()
    }
    fn decode(&self, s: &str) -> Result<i64, OracleError> {
        s.trim().parse().map_err(|_| OracleError::Decode(s.to_string()))
    }
    fn random_element(&self, rng: &mut dyn RngCore) -> i64 {
        rng.gen_range(-40..=40)
    }
    fn window_elements(&self, depth: usize, _cap: usize) -> Result<Vec<i64>, OracleError> {
        let d = depth as i64;
        Ok((-d..=d).collect())
    }
}
