//! Bounded witness search.

use rand::Rng;

use crate::oracle::{ball, GroupOracle, OracleError};
use crate::sampling::rng;

/// Searches near a point along powers of a positive element and through a
/// generator ball. `budget` is the ball depth; powers go up to `4^budget`.
pub struct Search<'o, O: GroupOracle + ?Sized> {
    oracle: &'o O,
    g: O::Elem,
    g_inv: O::Elem,
    ball: Vec<O::Elem>,
    powers: usize,
}

impl<'o, O: GroupOracle + ?Sized> Search<'o, O> {
    /// `g` must satisfy `1 < g`.
    pub fn new(oracle: &'o O, g: O::Elem, budget: usize, cap: usize) -> Result<Self, OracleError> {
        let g_inv = oracle.inv(&g);
        let ball = ball(oracle, budget, cap)?;
        let powers = 4usize.saturating_pow(budget as u32).min(1 << 16);
        Ok(Self { oracle, g, g_inv, ball, powers })
    }

    /// Some `z <= x` satisfying `pred`.
    pub fn below(&self, x: &O::Elem, pred: impl Fn(&O::Elem) -> bool) -> Option<O::Elem> {
        self.walk(x, &self.g_inv, &pred, true)
    }

    /// Some `z >= x` satisfying `pred`.
    pub fn above(&self, x: &O::Elem, pred: impl Fn(&O::Elem) -> bool) -> Option<O::Elem> {
        self.walk(x, &self.g, &pred, false)
    }

    fn walk(&self, x: &O::Elem, step: &O::Elem, pred: &dyn Fn(&O::Elem) -> bool, down: bool) -> Option<O::Elem> {
        let o = self.oracle;
        let ok = |z: &O::Elem| (if down { o.leq(z, x) } else { o.leq(x, z) }) && pred(z);
        let mut z = x.clone();
        for _ in 0..=self.powers {
            if ok(&z) {
                return Some(z);
            }
            z = o.mul(&z, step);
        }
        self.ball.iter().map(|w| o.mul(x, w)).find(|z| ok(z))
    }
}

/// The ball of depth 3 around the identity followed by random elements, `count`
/// points in total (more if the ball alone is larger). Repeats are allowed.
pub fn draw_points<O: GroupOracle + ?Sized>(
    o: &O,
    seed: u64,
    count: usize,
    cap: usize,
) -> Result<Vec<O::Elem>, OracleError> {
    let mut pts = ball(o, 3, cap)?;
    let mut r = rng(seed ^ 0x5eed);
    while pts.len() < count {
        pts.push(o.random_element(&mut r));
    }
    Ok(pts)
}

/// `count` seeded random pairs from `elems`.
pub fn random_pairs<E: Clone>(elems: &[E], seed: u64, count: usize) -> Vec<(E, E)> {
    if elems.is_empty() {
        return Vec::new();
    }
    let mut r = rng(seed ^ 0x9a1f);
    (0..count)
        .map(|_| {
            let i = r.gen_range(0..elems.len());
            let j = r.gen_range(0..elems.len());
            (elems[i].clone(), elems[j].clone())
        })
        .collect()
}
