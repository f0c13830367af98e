//! Integer-based examples: `ℤ`, `ℤ^k`, and `ℤ ⊕ ℤ_n` under two orders.

use rand::{Rng, RngCore};

use crate::oracle::{Cardinality, Covers, GroupOracle, OracleError};

fn parse_i64(s: &str) -> Result<i64, OracleError> {
    s.trim().parse().map_err(|_| OracleError::Decode(s.to_string()))
}

fn parse_tuple(s: &str) -> Result<Vec<&str>, OracleError> {
    let inner = s
        .trim()
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| OracleError::Decode(s.to_string()))?;
    Ok(inner.split(',').collect())
}

/// `(ℤ, +, ≤)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct IntChain;

impl GroupOracle for IntChain {
    type Elem = i64;

    fn name(&self) -> String {
        "int_chain".into()
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
        a <= b
    }
    fn covers_above(&self, x: &i64) -> Covers<i64> {
        Covers::Finite(vec![x + 1])
    }
    fn covers_below(&self, x: &i64) -> Covers<i64> {
        Covers::Finite(vec![x - 1])
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
        parse_i64(s)
    }
    fn random_element(&self, rng: &mut dyn RngCore) -> i64 {
        rng.gen_range(-40..=40)
    }
    fn window_elements(&self, depth: usize, _cap: usize) -> Result<Vec<i64>, OracleError> {
        let d = depth as i64;
        Ok((-d..=d).collect())
    }
}

/// `ℤ^k` with the componentwise (product) order.
#[derive(Clone, Copy, Debug)]
pub struct IntVectors {
    pub k: usize,
}

/// All integer vectors in `[-d, d]^k`, lexicographic.
pub(crate) fn integer_box(k: usize, d: i64, cap: usize) -> Result<Vec<Vec<i64>>, OracleError> {
    let side = (2 * d + 1) as usize;
    if (side as f64).powi(k as i32) > cap as f64 {
        return Err(OracleError::ExplosionLimit { cap });
    }
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (-d..=d).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    Ok(out)
}

impl GroupOracle for IntVectors {
    type Elem = Vec<i64>;

    fn name(&self) -> String {
        format!("int_vectors(k={})", self.k)
    }
    fn identity(&self) -> Vec<i64> {
        vec![0; self.k]
    }
    fn mul(&self, a: &Vec<i64>, b: &Vec<i64>) -> Vec<i64> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }
    fn inv(&self, a: &Vec<i64>) -> Vec<i64> {
        a.iter().map(|x| -x).collect()
    }
    fn leq(&self, a: &Vec<i64>, b: &Vec<i64>) -> bool {
        a.iter().zip(b).all(|(x, y)| x <= y)
    }
    fn covers_above(&self, x: &Vec<i64>) -> Covers<Vec<i64>> {
        Covers::Finite(
            (0..self.k)
                .map(|i| {
                    let mut y = x.clone();
                    y[i] += 1;
                    y
                })
                .collect(),
        )
    }
    fn generators(&self) -> Vec<Vec<i64>> {
        (0..self.k)
            .map(|i| {
                let mut e = vec![0; self.k];
                e[i] = 1;
                e
            })
            .collect()
    }
    fn cardinality(&self) -> Cardinality {
        Cardinality::Countable
    }
    fn encode(&self, x: &Vec<i64>) -> String {
        let parts: Vec<String> = x.iter().map(i64::to_string).collect();
        format!("({})", parts.join(","))
    }
    fn decode(&self, s: &str) -> Result<Vec<i64>, OracleError> {
        let v: Vec<i64> = parse_tuple(s)?.into_iter().map(parse_i64).collect::<Result<_, _>>()?;
        if v.len() != self.k {
            return Err(OracleError::Decode(s.to_string()));
        }
        Ok(v)
    }
    fn random_element(&self, rng: &mut dyn RngCore) -> Vec<i64> {
        (0..self.k).map(|_| rng.gen_range(-12..=12)).collect()
    }
    fn window_elements(&self, depth: usize, cap: usize) -> Result<Vec<Vec<i64>>, OracleError> {
        integer_box(self.k, depth as i64, cap)
    }
}

/// Which order `ℤ ⊕ ℤ_n` carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum CyclicOrder {
    /// `(a,b) <= (c,d)` iff `a < c`, or the two are equal: a join of
    /// `n`-antichains, one per integer level.
    Levels,
    /// `(a,b) <= (c,d)` iff `a <= c` and `b = d`: `n` disjoint chains.
    Parallel,
}

#[derive(Clone, Copy, Debug)]
struct IntCyclic {
    n: u32,
    order: CyclicOrder,
}

impl IntCyclic {
    fn name(&self) -> String {
        match self.order {
            CyclicOrder::Levels => format!("width_join(n={})", self.n),
            CyclicOrder::Parallel => format!("disjoint_chains_int(n={})", self.n),
        }
    }
    fn mul(&self, a: &(i64, u32), b: &(i64, u32)) -> (i64, u32) {
        (a.0 + b.0, (a.1 + b.1) % self.n)
    }
    fn inv(&self, a: &(i64, u32)) -> (i64, u32) {
        (-a.0, (self.n - a.1) % self.n)
    }
    fn leq(&self, a: &(i64, u32), b: &(i64, u32)) -> bool {
        match self.order {
            CyclicOrder::Levels => a.0 < b.0 || a == b,
            CyclicOrder::Parallel => a.0 <= b.0 && a.1 == b.1,
        }
    }
    fn covers_above(&self, x: &(i64, u32)) -> Vec<(i64, u32)> {
        match self.order {
            CyclicOrder::Levels => (0..self.n).map(|b| (x.0 + 1, b)).collect(),
            CyclicOrder::Parallel => vec![(x.0 + 1, x.1)],
        }
    }
    fn covers_below(&self, x: &(i64, u32)) -> Vec<(i64, u32)> {
        match self.order {
            CyclicOrder::Levels => (0..self.n).map(|b| (x.0 - 1, b)).collect(),
            CyclicOrder::Parallel => vec![(x.0 - 1, x.1)],
        }
    }
    fn generators(&self) -> Vec<(i64, u32)> {
        let mut g = vec![(1, 0)];
        if self.n > 1 {
            g.push((0, 1));
        }
        g
    }
    fn encode(x: &(i64, u32)) -> String {
        format!("({},{})", x.0, x.1)
    }
    fn decode(&self, s: &str) -> Result<(i64, u32), OracleError> {
        let err = || OracleError::Decode(s.to_string());
        let parts = parse_tuple(s)?;
        let [a, b] = parts.as_slice() else {
            return Err(err());
        };
        let b: u32 = b.trim().parse().map_err(|_| err())?;
        if b >= self.n {
            return Err(err());
        }
        Ok((parse_i64(a)?, b))
    }
    fn window(&self, depth: usize) -> Vec<(i64, u32)> {
        let d = depth as i64;
        (-d..=d).flat_map(|a| (0..self.n).map(move |b| (a, b))).collect()
    }
}

macro_rules! cyclic_oracle {
    ($name:ident, $order:expr, $doc:literal) => {
        #[doc = $doc]
        #[derive(Clone, Copy, Debug)]
        pub struct $name {
            inner: IntCyclic,
        }

        impl $name {
            pub fn new(n: u32) -> Self {
                assert!(n >= 1, "n must be positive");
                Self { inner: IntCyclic { n, order: $order } }
            }

            pub fn n(&self) -> u32 {
                self.inner.n
            }
        }

        impl GroupOracle for $name {
            type Elem = (i64, u32);

            fn name(&self) -> String {
                self.inner.name()
            }
            fn identity(&self) -> (i64, u32) {
                (0, 0)
            }
            fn mul(&self, a: &(i64, u32), b: &(i64, u32)) -> (i64, u32) {
                self.inner.mul(a, b)
            }
            fn inv(&self, a: &(i64, u32)) -> (i64, u32) {
                self.inner.inv(a)
            }
            fn leq(&self, a: &(i64, u32), b: &(i64, u32)) -> bool {
                self.inner.leq(a, b)
            }
            fn covers_above(&self, x: &(i64, u32)) -> Covers<(i64, u32)> {
                Covers::Finite(self.inner.covers_above(x))
            }
            fn covers_below(&self, x: &(i64, u32)) -> Covers<(i64, u32)> {
                Covers::Finite(self.inner.covers_below(x))
            }
            fn generators(&self) -> Vec<(i64, u32)> {
                self.inner.generators()
            }
            fn cardinality(&self) -> Cardinality {
                Cardinality::Countable
            }
            fn encode(&self, x: &(i64, u32)) -> String {
                IntCyclic::encode(x)
            }
            fn decode(&self, s: &str) -> Result<(i64, u32), OracleError> {
                self.inner.decode(s)
            }
            fn random_element(&self, rng: &mut dyn RngCore) -> (i64, u32) {
                (rng.gen_range(-30..=30), rng.gen_range(0..self.inner.n))
            }
            fn window_elements(&self, depth: usize, cap: usize) -> Result<Vec<(i64, u32)>, OracleError> {
                if (2 * depth + 1) * self.inner.n as usize > cap {
                    return Err(OracleError::ExplosionLimit { cap });
                }
                Ok(self.inner.window(depth))
            }
            fn component_key(&self, x: &(i64, u32)) -> Option<u64> {
                (self.inner.order == CyclicOrder::Parallel).then_some(x.1 as u64)
            }
        }
    };
}

cyclic_oracle!(
    WidthJoin,
    CyclicOrder::Levels,
    "`ℤ ⊕ ℤ_n` ordered by levels: `(a,b) <= (c,d)` iff `a < c` or equal. \
     For `n = 2`, `(i,0)` and `(i,1)` play the roles of `x_i` and `y_i` and the \
     group law is composition of the shift maps."
);
cyclic_oracle!(
    DisjointChainsInt,
    CyclicOrder::Parallel,
    "`ℤ ⊕ ℤ_n` with `(a,b) <= (c,d)` iff `a <= c` and `b = d`."
);
