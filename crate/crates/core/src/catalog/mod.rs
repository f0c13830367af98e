//! The concrete example groups, each wired as a [`GroupOracle`] over
//! canonical strings together with its table of known invariants.

mod control;
mod integer;
mod matrix_groups;
mod rational;

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::check::Status;
use crate::matrix::{int, RatMatrix, Rational};
use crate::oracle::{radius, Cardinality, Encoded, GroupOracle, Radius, SharedOracle, SubsetSpec};

pub use control::BrokenParityChain;
pub use integer::{DisjointChainsInt, IntChain, IntVectors, WidthJoin};
pub use matrix_groups::{loewner_trace, sl_antichain_sample, GlDet, GlElem, SymLoewner};
pub use rational::{DisjointChainsRat, RatChain};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown example `{0}`")]
    UnknownExample(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
}

/// Example names with their parameter (if any) and its default value.
pub const EXAMPLES: [(&str, Option<(&str, i64)>); 8] = [
    ("int_chain", None),
    ("rat_chain", None),
    ("int_vectors", Some(("k", 2))),
    ("sym_loewner", Some(("n", 2))),
    ("gl_det", Some(("n", 2))),
    ("width_join", Some(("n", 2))),
    ("disjoint_chains_int", Some(("n", 2))),
    ("disjoint_chains_rat", Some(("n", 2))),
];

/// Width of the whole (infinite) group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Width {
    Finite(usize),
    Infinite,
}

/// Serialized as a number or `"infinite"`.
impl Serialize for Width {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Width::Finite(n) => s.serialize_u64(*n as u64),
            Width::Infinite => s.serialize_str("infinite"),
        }
    }
}

impl std::fmt::Display for Width {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Width::Finite(n) => write!(f, "{n}"),
            Width::Infinite => f.write_str("infinite"),
        }
    }
}

/// Known invariants of an example, plus the outcome each law should have.
/// Laws missing from `laws` are expected to pass.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub radius: Radius,
    pub width: Width,
    pub connected: bool,
    pub hyperconnected: bool,
    pub has_beat_points: bool,
    pub abelian: bool,
    pub cardinality: Cardinality,
    pub laws: BTreeMap<String, Status>,
}

impl Expected {
    pub fn law(&self, id: &str) -> Status {
        self.laws.get(id).copied().unwrap_or(Status::Pass)
    }
}

/// A built example.
#[derive(Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub params: BTreeMap<String, i64>,
    pub oracle: SharedOracle,
    pub expected: Expected,
    /// A feebly bounded subset with lower and upper witnesses.
    pub bounded: SubsetSpec<String>,
    /// An element strictly above the identity.
    pub positive: String,
    pub default_depth: usize,
}

impl std::fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CatalogEntry")
            .field("name", &self.name)
            .field("params", &self.params)
            .field("oracle", &self.oracle.name())
            .finish_non_exhaustive()
    }
}

/// Serializable description of an entry.
#[derive(Clone, Debug, Serialize)]
pub struct EntryInfo {
    pub name: String,
    pub params: BTreeMap<String, i64>,
    pub oracle: String,
    pub identity: String,
    pub generators: Vec<String>,
    pub positive: String,
    pub bounded_subset: String,
    pub default_depth: usize,
    pub expected: Expected,
}

impl CatalogEntry {
    pub fn info(&self) -> EntryInfo {
        EntryInfo {
            name: self.name.clone(),
            params: self.params.clone(),
            oracle: self.oracle.name(),
            identity: self.oracle.identity(),
            generators: self.oracle.generators(),
            positive: self.positive.clone(),
            bounded_subset: self.bounded.name.clone(),
            default_depth: self.default_depth,
            expected: self.expected.clone(),
        }
    }
}

/// Every example with default parameters.
pub fn catalog_list() -> Vec<CatalogEntry> {
    EXAMPLES
        .iter()
        .map(|(name, _)| catalog_build(name, &BTreeMap::new()).expect("defaults are valid"))
        .collect()
}

/// Builds `name` with `params` (missing parameters take their defaults).
pub fn catalog_build(name: &str, params: &BTreeMap<String, i64>) -> Result<CatalogEntry, CatalogError> {
    let (_, param) = EXAMPLES
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| CatalogError::UnknownExample(name.to_string()))?;
    let mut resolved = BTreeMap::new();
    for key in params.keys() {
        if param.is_none_or(|(p, _)| p != key) {
            return Err(CatalogError::BadParameter(format!("`{name}` takes no parameter `{key}`")));
        }
    }
    let value = match param {
        Some((p, default)) => {
            let v = params.get(*p).copied().unwrap_or(*default);
            if v < 1 {
                return Err(CatalogError::BadParameter(format!("{p} must be >= 1, got {v}")));
            }
            resolved.insert(p.to_string(), v);
            v
        }
        None => 0,
    };
    let mut entry = match name {
        "int_chain" => int_chain(),
        "rat_chain" => rat_chain(),
        "int_vectors" => int_vectors(bounded_param(value, 8)?),
        "sym_loewner" => sym_loewner(SymLoewner::new(value as usize)?),
        "gl_det" => gl_det(GlDet::new(bounded_param(value, 4)?)?),
        "width_join" => width_join(bounded_param(value, 64)? as u32),
        "disjoint_chains_int" => disjoint_chains_int(bounded_param(value, 64)? as u32),
        "disjoint_chains_rat" => disjoint_chains_rat(bounded_param(value, 64)? as u32),
        _ => unreachable!("name checked above"),
    };
    entry.params = resolved;
    entry.expected.cardinality = entry.oracle.cardinality();
    entry.expected.radius = radius(&entry.oracle);
    Ok(entry)
}

fn bounded_param(v: i64, max: i64) -> Result<usize, CatalogError> {
    if v > max {
        return Err(CatalogError::BadParameter(format!("parameter {v} exceeds supported maximum {max}")));
    }
    Ok(v as usize)
}

/// Law outcomes other than `pass` that every non-trivial example shares.
fn base_laws(dense_or_unsupported: bool) -> BTreeMap<String, Status> {
    let mut laws = BTreeMap::from([("inversion_monotone".to_string(), Status::Fail)]);
    if dense_or_unsupported {
        for id in ["beat_dichotomy", "radius_relations", "classification"] {
            laws.insert(id.to_string(), Status::Inapplicable);
        }
    }
    laws
}

struct Facts {
    width: Width,
    connected: bool,
    has_beat_points: bool,
    abelian: bool,
    coverless: bool,
}

fn entry<O>(name: &str, oracle: O, facts: Facts, bounded: SubsetSpec<O::Elem>, positive: O::Elem) -> CatalogEntry
where
    O: GroupOracle + Clone + 'static,
{
    let positive = oracle.encode(&positive);
    let bounded = bounded.encoded(oracle.clone());
    let shared = Encoded(oracle).shared();
    CatalogEntry {
        name: name.to_string(),
        params: BTreeMap::new(),
        expected: Expected {
            radius: radius(&shared),
            width: facts.width,
            connected: facts.connected,
            hyperconnected: facts.connected,
            has_beat_points: facts.has_beat_points,
            abelian: facts.abelian,
            cardinality: shared.cardinality(),
            laws: base_laws(facts.coverless),
        },
        oracle: shared,
        bounded,
        positive,
        default_depth: 3,
    }
}

fn even_floor(a: i64) -> i64 {
    a - a.rem_euclid(2)
}

fn even_ceil(a: i64) -> i64 {
    a + a.rem_euclid(2)
}

fn int_chain() -> CatalogEntry {
    let b = SubsetSpec::new("2Z", |x: &i64| x.rem_euclid(2) == 0)
        .with_lower_witness(|x| Some(even_floor(*x)))
        .with_upper_witness(|x| Some(even_ceil(*x)));
    let facts = Facts { width: Width::Finite(1), connected: true, has_beat_points: true, abelian: true, coverless: false };
    entry("int_chain", IntChain, facts, b, 1)
}

fn rat_chain() -> CatalogEntry {
    let b = SubsetSpec::new("Z", |x: &Rational| x.is_integer())
        .with_lower_witness(|x| Some(x.floor()))
        .with_upper_witness(|x| Some(x.ceil()));
    let facts = Facts { width: Width::Finite(1), connected: true, has_beat_points: false, abelian: true, coverless: true };
    entry("rat_chain", RatChain, facts, b, int(1))
}

fn int_vectors(k: usize) -> CatalogEntry {
    let b = SubsetSpec::new("diagonal", |x: &Vec<i64>| x.windows(2).all(|w| w[0] == w[1]))
        .with_lower_witness(|x| x.iter().min().map(|&m| vec![m; x.len()]))
        .with_upper_witness(|x| x.iter().max().map(|&m| vec![m; x.len()]));
    let facts = Facts {
        width: if k == 1 { Width::Finite(1) } else { Width::Infinite },
        connected: true,
        has_beat_points: k == 1,
        abelian: true,
        coverless: false,
    };
    entry("int_vectors", IntVectors { k }, facts, b, vec![1; k])
}

/// Gershgorin bounds: `λ_lo·I <= m <= λ_hi·I` with integer `λ`.
fn gershgorin(m: &RatMatrix) -> (Rational, Rational) {
    let n = m.size();
    let rows = (0..n).map(|i| {
        let off: Rational = (0..n).filter(|&j| j != i).map(|j| m.get(i, j).abs()).sum();
        (m.get(i, i) - &off, m.get(i, i) + &off)
    });
    let (lo, hi): (Vec<Rational>, Vec<Rational>) = rows.unzip();
    let lo = lo.into_iter().min().expect("n >= 1").floor();
    let hi = hi.into_iter().max().expect("n >= 1").ceil();
    (lo, hi)
}

fn scalar_of(m: &RatMatrix) -> Option<Rational> {
    let n = m.size();
    let c = m.get(0, 0).clone();
    let is_scalar = (0..n).all(|i| (0..n).all(|j| *m.get(i, j) == if i == j { c.clone() } else { Rational::zero() }));
    is_scalar.then_some(c)
}

fn sym_loewner(o: SymLoewner) -> CatalogEntry {
    let n = o.n();
    let scalar = move |l: Rational| RatMatrix::identity(n).scale(&l);
    let b = SubsetSpec::new("integer multiples of I", |m: &RatMatrix| scalar_of(m).is_some_and(|c| c.is_integer()))
        .with_lower_witness(move |m| Some(scalar(gershgorin(m).0)))
        .with_upper_witness(move |m| Some(scalar(gershgorin(m).1)));
    let facts = Facts {
        width: if n == 1 { Width::Finite(1) } else { Width::Infinite },
        connected: true,
        has_beat_points: false,
        abelian: true,
        coverless: true,
    };
    let mut e = entry("sym_loewner", o, facts, b, RatMatrix::identity(n));
    e.expected.laws.insert("totally_omega_narrow".into(), Status::Fail);
    if n >= 3 {
        e.default_depth = 2;
    }
    e
}

/// `k` with `r = 2^k`, if `r` is a power of two.
fn exact_log2(r: &Rational) -> Option<i32> {
    let pow2 = |b: &num_bigint::BigInt| -> Option<i32> {
        (b.sign() == num_bigint::Sign::Plus && (b & (b - 1u8)).is_zero()).then(|| b.bits() as i32 - 1)
    };
    if r.denom().is_one() {
        pow2(r.numer())
    } else if r.numer().is_one() {
        pow2(r.denom()).map(|k| -k)
    } else {
        None
    }
}

/// Largest `k` with `2^k < d` (`below`), or smallest with `2^k > d`.
fn power_of_two_beside(d: &Rational, below: bool) -> i32 {
    let two = int(2);
    let (mut p, mut k) = (Rational::one(), 0i32);
    if below {
        while p >= *d {
            p /= &two;
            k -= 1;
        }
        while &p * &two < *d {
            p *= &two;
            k += 1;
        }
    } else {
        while p <= *d {
            p *= &two;
            k += 1;
        }
        while &p / &two > *d {
            p /= &two;
            k -= 1;
        }
    }
    k
}

fn gl_det(o: GlDet) -> CatalogEntry {
    let n = o.n();
    let b = SubsetSpec::new("dilations diag(2^k,1,...,1)", move |x: &GlElem| {
        exact_log2(x.abs_det()).is_some_and(|k| *x == o.dilation(k))
    })
    .with_lower_witness(move |x| Some(o.dilation(power_of_two_beside(x.abs_det(), true))))
    .with_upper_witness(move |x| Some(o.dilation(power_of_two_beside(x.abs_det(), false))));
    let facts = Facts {
        // {A, -A} is an antichain in GL_1; SL_n is an infinite one for n >= 2
        width: if n == 1 { Width::Finite(2) } else { Width::Infinite },
        connected: true,
        has_beat_points: false,
        abelian: n == 1,
        coverless: true,
    };
    let positive = o.dilation(1);
    let mut e = entry("gl_det", o, facts, b, positive);
    e.expected.laws.insert("totally_omega_narrow".into(), Status::Fail);
    e
}

fn width_join(n: u32) -> CatalogEntry {
    let b = SubsetSpec::new("Z x {0}", |x: &(i64, u32)| x.1 == 0)
        .with_lower_witness(|x: &(i64, u32)| Some(if x.1 == 0 { *x } else { (x.0 - 1, 0) }))
        .with_upper_witness(|x: &(i64, u32)| Some(if x.1 == 0 { *x } else { (x.0 + 1, 0) }));
    let facts = Facts {
        width: Width::Finite(n as usize),
        connected: true,
        has_beat_points: n == 1,
        abelian: true,
        coverless: false,
    };
    entry("width_join", WidthJoin::new(n), facts, b, (1, 0))
}

fn disconnected(mut e: CatalogEntry, n: u32) -> CatalogEntry {
    if n > 1 {
        e.expected.laws.insert("hyperconnected".into(), Status::Fail);
    }
    e
}

fn disjoint_chains_int(n: u32) -> CatalogEntry {
    let b = SubsetSpec::new("2Z x Z_n", |x: &(i64, u32)| x.0.rem_euclid(2) == 0)
        .with_lower_witness(|x: &(i64, u32)| Some((even_floor(x.0), x.1)))
        .with_upper_witness(|x: &(i64, u32)| Some((even_ceil(x.0), x.1)));
    let facts = Facts {
        width: Width::Finite(n as usize),
        connected: n == 1,
        has_beat_points: true,
        abelian: true,
        coverless: false,
    };
    let mut e = disconnected(entry("disjoint_chains_int", DisjointChainsInt::new(n), facts, b, (1, 0)), n);
    // Every point is a beat point, yet the space is not a single chain: the
    // beat-point characterisation of Z needs connectedness.
    if n > 1 {
        e.expected.laws.insert("beat_dichotomy".into(), Status::Fail);
    }
    e
}

fn disjoint_chains_rat(n: u32) -> CatalogEntry {
    let b = SubsetSpec::new("Z x Z_n", |x: &(Rational, u32)| x.0.is_integer())
        .with_lower_witness(|x: &(Rational, u32)| Some((x.0.floor(), x.1)))
        .with_upper_witness(|x: &(Rational, u32)| Some((x.0.ceil(), x.1)));
    let facts = Facts {
        width: Width::Finite(n as usize),
        connected: n == 1,
        has_beat_points: false,
        abelian: true,
        coverless: true,
    };
    disconnected(entry("disjoint_chains_rat", DisjointChainsRat::new(n), facts, b, (int(1), 0)), n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list_has_eight_entries() {
        let names: Vec<String> = catalog_list().into_iter().map(|e| e.name).collect();
        assert_eq!(names.len(), 8);
        assert_eq!(names[2], "int_vectors");
    }

    #[test]
    fn errors() {
        let none = BTreeMap::new();
        assert_eq!(catalog_build("nosuch", &none).unwrap_err(), CatalogError::UnknownExample("nosuch".into()));
        let zero = BTreeMap::from([("n".to_string(), 0)]);
        assert!(matches!(catalog_build("width_join", &zero), Err(CatalogError::BadParameter(_))));
        assert!(matches!(catalog_build("sym_loewner", &zero), Err(CatalogError::BadParameter(_))));
        let wrong = BTreeMap::from([("k".to_string(), 2)]);
        assert!(matches!(catalog_build("int_chain", &wrong), Err(CatalogError::BadParameter(_))));
    }

    #[test]
    fn power_of_two_helpers() {
        assert_eq!(exact_log2(&int(8)), Some(3));
        assert_eq!(exact_log2(&crate::matrix::rational(1, 4)), Some(-2));
        assert_eq!(exact_log2(&int(6)), None);
        let d = crate::matrix::rational(5, 3);
        assert_eq!(power_of_two_beside(&d, true), 0);
        assert_eq!(power_of_two_beside(&d, false), 1);
        assert_eq!(power_of_two_beside(&int(1), true), -1);
        assert_eq!(power_of_two_beside(&int(1), false), 1);
    }

    #[test]
    fn bounded_witnesses_are_members_below_and_above() {
        for e in catalog_list() {
            let o = &e.oracle;
            for x in crate::oracle::ball(o, 2, 10_000).unwrap() {
                let lo = e.bounded.lower_witness(&x).flatten().unwrap();
                let hi = e.bounded.upper_witness(&x).flatten().unwrap();
                assert!(e.bounded.contains(&lo) && o.leq(&lo, &x), "{}: {lo} vs {x}", e.name);
                assert!(e.bounded.contains(&hi) && o.leq(&x, &hi), "{}: {x} vs {hi}", e.name);
            }
            assert!(o.lt(&o.identity(), &e.positive), "{}", e.name);
        }
    }
}
