//! Symbolic ordered groups.
//!
//! A [`GroupOracle`] answers multiplication, inversion and order queries for a
//! possibly infinite group. Everything finite about it is obtained through a
//! [`Window`]: a chosen finite element set with its induced order.

mod checks;
mod product;
mod subset;
mod window;

use std::collections::HashSet;
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::Arc;

use rand::{Rng, RngCore};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poset::PosetError;

pub use checks::{
    check_group_axioms, check_homomorphism, check_inversion_monotone, check_translations_monotone,
};
pub use product::ProductOracle;
pub use subset::SubsetSpec;
pub use window::{OracleHeader, Window, WindowDocument};

/// Default cap on the number of elements a ball may hold.
pub const DEFAULT_BALL_CAP: usize = 100_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("cannot decode element `{0}`")]
    Decode(String),
    #[error("ball exceeds {cap} elements")]
    ExplosionLimit { cap: usize },
    #[error("window order is not a partial order: {0}")]
    Poset(#[from] PosetError),
    #[error("window order disagrees with the oracle on ({0}, {1})")]
    Unsound(String, String),
}

/// Upper covers of an element, when the oracle can list them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Covers<E> {
    Finite(Vec<E>),
    /// No element has an upper cover (dense chains).
    Dense,
    /// Enumeration is not implemented for this oracle.
    Unsupported,
}

impl<E> Covers<E> {
    pub fn finite(&self) -> Option<&[E]> {
        match self {
            Covers::Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn map<F, T>(self, f: F) -> Covers<T>
    where
        F: FnMut(E) -> T,
    {
        match self {
            Covers::Finite(v) => Covers::Finite(v.into_iter().map(f).collect()),
            Covers::Dense => Covers::Dense,
            Covers::Unsupported => Covers::Unsupported,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Cardinality {
    Finite(u64),
    Countable,
    Continuum,
}

impl Cardinality {
    pub fn is_countable(self) -> bool {
        !matches!(self, Cardinality::Continuum)
    }
}

/// Number of upper covers of the identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Radius {
    Finite(usize),
    /// No covers at all; the radius is zero.
    Dense,
    Unsupported,
}

impl Radius {
    /// The numeric radius; dense orders have radius zero.
    pub fn value(self) -> Option<usize> {
        match self {
            Radius::Finite(n) => Some(n),
            Radius::Dense => Some(0),
            Radius::Unsupported => None,
        }
    }
}

impl std::fmt::Display for Radius {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Radius::Finite(n) => write!(f, "{n}"),
            Radius::Dense => f.write_str("dense"),
            Radius::Unsupported => f.write_str("unsupported"),
        }
    }
}

/// Serialized as a number, `"dense"` or `"unsupported"`.
impl Serialize for Radius {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Radius::Finite(n) => s.serialize_u64(*n as u64),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

pub fn radius<O: GroupOracle + ?Sized>(o: &O) -> Radius {
    match o.covers_above(&o.identity()) {
        Covers::Finite(v) => Radius::Finite(v.len()),
        Covers::Dense => Radius::Dense,
        Covers::Unsupported => Radius::Unsupported,
    }
}

/// A group with a partial order, queried pointwise.
///
/// Implementations must be pure: every method is a function of its inputs.
/// `encode` must be injective and `decode` its inverse on encoded strings.
pub trait GroupOracle: Send + Sync {
    type Elem: Clone + Eq + Hash + Debug + Send + Sync;

    fn name(&self) -> String;
    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool;
    fn covers_above(&self, x: &Self::Elem) -> Covers<Self::Elem>;
    fn generators(&self) -> Vec<Self::Elem>;
    fn cardinality(&self) -> Cardinality;
    fn encode(&self, x: &Self::Elem) -> String;
    fn decode(&self, s: &str) -> Result<Self::Elem, OracleError>;

    /// Lower covers, obtained by translating the inverted upper covers of the
    /// identity: `{x·c⁻¹ : 1 ≺ c}`.
    fn covers_below(&self, x: &Self::Elem) -> Covers<Self::Elem> {
        self.covers_above(&self.identity())
            .map(|c| self.mul(x, &self.inv(&c)))
    }

    fn lt(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a != b && self.leq(a, b)
    }

    fn pow(&self, x: &Self::Elem, k: u32) -> Self::Elem {
        (0..k).fold(self.identity(), |acc, _| self.mul(&acc, x))
    }

    /// Pseudo-random element; the default is a random word of length at most
    /// 6 in the generators and their inverses.
    fn random_element(&self, rng: &mut dyn RngCore) -> Self::Elem {
        let steps = step_set(self);
        let len = rng.gen_range(0..=6);
        let mut x = self.identity();
        if steps.is_empty() {
            return x;
        }
        for _ in 0..len {
            x = self.mul(&x, &steps[rng.gen_range(0..steps.len())]);
        }
        x
    }

    /// Elements of the default window of the given depth. The default is the
    /// generator ball; lattice-like oracles override this with a box.
    fn window_elements(&self, depth: usize, cap: usize) -> Result<Vec<Self::Elem>, OracleError> {
        ball(self, depth, cap)
    }

    /// Identifier of the comparability component of `x`, for oracles that
    /// know their order splits into pairwise incomparable pieces. Elements
    /// with different keys have no common lower or upper bound.
    fn component_key(&self, _x: &Self::Elem) -> Option<u64> {
        None
    }
}

impl<O: GroupOracle + ?Sized> GroupOracle for Arc<O> {
    type Elem = O::Elem;

    fn name(&self) -> String {
        (**self).name()
    }
    fn identity(&self) -> Self::Elem {
        (**self).identity()
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (**self).mul(a, b)
    }
    fn inv(&self, a: &Self::Elem) -> Self::Elem {
        (**self).inv(a)
    }
    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        (**self).leq(a, b)
    }
    fn covers_above(&self, x: &Self::Elem) -> Covers<Self::Elem> {
        (**self).covers_above(x)
    }
    fn covers_below(&self, x: &Self::Elem) -> Covers<Self::Elem> {
        (**self).covers_below(x)
    }
    fn generators(&self) -> Vec<Self::Elem> {
        (**self).generators()
    }
    fn cardinality(&self) -> Cardinality {
        (**self).cardinality()
    }
    fn encode(&self, x: &Self::Elem) -> String {
        (**self).encode(x)
    }
    fn decode(&self, s: &str) -> Result<Self::Elem, OracleError> {
        (**self).decode(s)
    }
    fn random_element(&self, rng: &mut dyn RngCore) -> Self::Elem {
        (**self).random_element(rng)
    }
    fn window_elements(&self, depth: usize, cap: usize) -> Result<Vec<Self::Elem>, OracleError> {
        (**self).window_elements(depth, cap)
    }
    fn component_key(&self, x: &Self::Elem) -> Option<u64> {
        (**self).component_key(x)
    }
}

/// Oracle over canonical strings; what the catalog hands out.
pub type DynOracle = dyn GroupOracle<Elem = String>;
pub type SharedOracle = Arc<DynOracle>;

/// Wraps a typed oracle so that elements travel as canonical strings.
#[derive(Clone, Debug)]
pub struct Encoded<O>(pub O);

impl<O: GroupOracle> Encoded<O> {
    fn dec(&self, s: &str) -> O::Elem {
        self.0.decode(s).unwrap_or_else(|e| panic!("{}: {e}", self.0.name()))
    }
    fn enc_all(&self, v: Vec<O::Elem>) -> Vec<String> {
        v.iter().map(|x| self.0.encode(x)).collect()
    }

    pub fn shared(self) -> SharedOracle
    where
        O: 'static,
    {
        Arc::new(self)
    }
}

impl<O: GroupOracle> GroupOracle for Encoded<O> {
    type Elem = String;

    fn name(&self) -> String {
        self.0.name()
    }
    fn identity(&self) -> String {
        self.0.encode(&self.0.identity())
    }
    fn mul(&self, a: &String, b: &String) -> String {
        self.0.encode(&self.0.mul(&self.dec(a), &self.dec(b)))
    }
    fn inv(&self, a: &String) -> String {
        self.0.encode(&self.0.inv(&self.dec(a)))
    }
    fn leq(&self, a: &String, b: &String) -> bool {
        self.0.leq(&self.dec(a), &self.dec(b))
    }
    fn covers_above(&self, x: &String) -> Covers<String> {
        self.0.covers_above(&self.dec(x)).map(|c| self.0.encode(&c))
    }
    fn covers_below(&self, x: &String) -> Covers<String> {
        self.0.covers_below(&self.dec(x)).map(|c| self.0.encode(&c))
    }
    fn generators(&self) -> Vec<String> {
        self.enc_all(self.0.generators())
    }
    fn cardinality(&self) -> Cardinality {
        self.0.cardinality()
    }
    fn encode(&self, x: &String) -> String {
        x.clone()
    }
    fn decode(&self, s: &str) -> Result<String, OracleError> {
        self.0.decode(s).map(|x| self.0.encode(&x))
    }
    fn random_element(&self, rng: &mut dyn RngCore) -> String {
        self.0.encode(&self.0.random_element(rng))
    }
    fn window_elements(&self, depth: usize, cap: usize) -> Result<Vec<String>, OracleError> {
        self.0.window_elements(depth, cap).map(|v| self.enc_all(v))
    }
    fn component_key(&self, x: &String) -> Option<u64> {
        self.0.component_key(&self.dec(x))
    }
}

/// Generators followed by those inverses not already present.
pub fn step_set<O: GroupOracle + ?Sized>(o: &O) -> Vec<O::Elem> {
    let mut steps = o.generators();
    for g in o.generators() {
        let gi = o.inv(&g);
        if !steps.contains(&gi) {
            steps.push(gi);
        }
    }
    steps
}

/// All products of at most `depth` generator or inverse-generator factors,
/// in breadth-first order, deduplicated by canonical encoding.
pub fn ball<O: GroupOracle + ?Sized>(o: &O, depth: usize, cap: usize) -> Result<Vec<O::Elem>, OracleError> {
    let steps = step_set(o);
    let id = o.identity();
    let mut seen: HashSet<String> = HashSet::from([o.encode(&id)]);
    let mut out = vec![id];
    let mut frontier = 0..1;
    for _ in 0..depth {
        let start = out.len();
        for i in frontier.clone() {
            for s in &steps {
                let y = o.mul(&out[i], s);
                if seen.insert(o.encode(&y)) {
                    out.push(y);
                    if out.len() > cap {
                        return Err(OracleError::ExplosionLimit { cap });
                    }
                }
            }
        }
        frontier = start..out.len();
        if frontier.is_empty() {
            break;
        }
    }
    Ok(out)
}

/// Splits `s` at top-level occurrences of `sep`, ignoring separators nested
/// inside `()`, `[]` or `<>`.
pub(crate) fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' | '<' => depth += 1,
            ')' | ']' | '>' => depth -= 1,
            c if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}
