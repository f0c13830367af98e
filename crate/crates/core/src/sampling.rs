//! Seeded element samples for the law checks.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::oracle::{ball, step_set, GroupOracle, OracleError, DEFAULT_BALL_CAP};

pub const DEFAULT_SEED: u64 = 42;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleConfig {
    pub seed: u64,
    pub ball_depth: usize,
    pub random: usize,
    pub max_pairs: usize,
    pub max_multipliers: usize,
}

impl Default for SampleConfig {
    fn default() -> Self {
        Self { seed: DEFAULT_SEED, ball_depth: 3, random: 200, max_pairs: 400, max_multipliers: 48 }
    }
}

impl SampleConfig {
    pub fn with_seed(seed: u64) -> Self {
        Self { seed, ..Self::default() }
    }
}

/// Elements and comparable pairs drawn from an oracle.
#[derive(Clone, Debug)]
pub struct Sample<E> {
    pub seed: u64,
    pub elements: Vec<E>,
    /// Pairs `(a, b)` with `a <= b`, `a != b`.
    pub pairs: Vec<(E, E)>,
    /// Elements used as translation factors.
    pub multipliers: Vec<E>,
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

impl<E: Clone + Eq + std::hash::Hash> Sample<E> {
    /// Ball of `ball_depth` plus `random` pseudo-random elements, then random
    /// comparable pairs and generator-step pairs.
    pub fn draw<O>(o: &O, cfg: &SampleConfig) -> Result<Self, OracleError>
    where
        O: GroupOracle<Elem = E> + ?Sized,
    {
        let mut rng = rng(cfg.seed);
        let mut elements = ball(o, cfg.ball_depth, DEFAULT_BALL_CAP)?;
        let mut seen: HashSet<E> = elements.iter().cloned().collect();
        for _ in 0..cfg.random {
            let x = o.random_element(&mut rng);
            if seen.insert(x.clone()) {
                elements.push(x);
            }
        }
        Ok(Self::from_elements_with(o, cfg, elements, &mut rng))
    }

    /// Uses the given elements as is.
    pub fn from_elements<O>(o: &O, seed: u64, elements: Vec<E>) -> Self
    where
        O: GroupOracle<Elem = E> + ?Sized,
    {
        let cfg = SampleConfig::with_seed(seed);
        let mut rng = rng(seed);
        Self::from_elements_with(o, &cfg, elements, &mut rng)
    }

    fn from_elements_with<O>(o: &O, cfg: &SampleConfig, elements: Vec<E>, rng: &mut ChaCha8Rng) -> Self
    where
        O: GroupOracle<Elem = E> + ?Sized,
    {
        let mut pairs = Vec::new();
        let mut pair_seen = HashSet::new();
        let mut push = |a: &E, b: &E, pairs: &mut Vec<(E, E)>| {
            if a != b && pair_seen.insert((a.clone(), b.clone())) {
                pairs.push((a.clone(), b.clone()));
            }
        };
        let steps = step_set(o);
        for a in elements.iter().take(cfg.max_pairs / 4) {
            for s in &steps {
                let b = o.mul(a, s);
                if o.leq(a, &b) {
                    push(a, &b, &mut pairs);
                } else if o.leq(&b, a) {
                    push(&b, a, &mut pairs);
                }
            }
        }
        let n = elements.len();
        if n > 1 {
            let mut attempts = 0;
            while pairs.len() < cfg.max_pairs && attempts < cfg.max_pairs * 20 {
                attempts += 1;
                let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
                let (a, b) = (&elements[i], &elements[j]);
                if o.lt(a, b) {
                    push(a, b, &mut pairs);
                }
            }
        }
        pairs.truncate(cfg.max_pairs);
        let stride = (n / cfg.max_multipliers.max(1)).max(1);
        let multipliers = elements.iter().step_by(stride).take(cfg.max_multipliers).cloned().collect();
        Sample { seed: cfg.seed, elements, pairs, multipliers }
    }
}
