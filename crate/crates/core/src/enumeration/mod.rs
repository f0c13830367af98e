//! Exhaustive check that small finite groups admit no non-discrete order
//! with monotone multiplication.
//!
//! A labeled poset on `n <= 6` points is stored as a canonical `u64` key: the
//! row-major bit string of its reflexive relation matrix, bit `i*n + j` set
//! iff `i <= j`.

mod groups;

use std::collections::HashSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::poset::{FinitePoset, PosetError};

pub use groups::GroupTable;

/// Largest carrier handled.
pub const MAX_ORDER: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("size {size} exceeds the enumeration limit {limit}")]
    SizeLimitExceeded { size: usize, limit: usize },
    #[error("invalid group table {0}")]
    InvalidTable(String),
}

impl From<EnumerationError> for PosetError {
    fn from(e: EnumerationError) -> Self {
        match e {
            EnumerationError::SizeLimitExceeded { size, limit } => PosetError::SizeLimitExceeded { size, limit },
            EnumerationError::InvalidTable(s) => PosetError::Malformed(s),
        }
    }
}

fn check_size(n: usize) -> Result<(), EnumerationError> {
    if n > MAX_ORDER {
        return Err(EnumerationError::SizeLimitExceeded { size: n, limit: MAX_ORDER });
    }
    Ok(())
}

/// `rows[i]` has bit `j` set iff `i <= j`.
type Rows = [u8; MAX_ORDER];

fn rows_of(key: u64, n: usize) -> Rows {
    let mut rows = [0u8; MAX_ORDER];
    for (i, row) in rows.iter_mut().enumerate().take(n) {
        *row = ((key >> (i * n)) & ((1 << n) - 1)) as u8;
    }
    rows
}

fn key_of(rows: &Rows, n: usize) -> u64 {
    (0..n).fold(0, |k, i| k | (u64::from(rows[i]) << (i * n)))
}

fn leq(rows: &Rows, i: usize, j: usize) -> bool {
    rows[i] >> j & 1 == 1
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for k in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| (0..=k).map(move |pos| {
                let mut q = p.clone();
                q.insert(pos, k);
                q
            }))
            .collect();
    }
    out
}

/// Partial orders on `0..n` contained in `<=` on indices: every poset has a
/// linear extension, so relabeling these yields all labeled posets.
fn naturally_labeled(n: usize) -> Vec<Rows> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u32..1 << pairs.len())
        .filter_map(|mask| {
            let mut rows = [0u8; MAX_ORDER];
            for (i, row) in rows.iter_mut().enumerate().take(n) {
                *row = 1 << i;
            }
            for (b, &(i, j)) in pairs.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    rows[i] |= 1 << j;
                }
            }
            // transitive iff each successor's up-set lies inside the row
            let transitive = (0..n).all(|i| (0..n).filter(|&j| leq(&rows, i, j)).all(|j| rows[j] & !rows[i] == 0));
            transitive.then_some(rows)
        })
        .collect()
}

fn relabel(rows: &Rows, n: usize, p: &[usize]) -> Rows {
    let mut out = [0u8; MAX_ORDER];
    for i in 0..n {
        for j in 0..n {
            if leq(rows, i, j) {
                out[p[i]] |= 1 << p[j];
            }
        }
    }
    out
}

/// Canonical keys of every labeled poset on `n` points, sorted.
pub fn labeled_poset_keys(n: usize) -> Result<Vec<u64>, EnumerationError> {
    check_size(n)?;
    let perms = permutations(n);
    let mut keys: Vec<u64> = naturally_labeled(n)
        .par_iter()
        .flat_map_iter(|rows| perms.iter().map(move |p| key_of(&relabel(rows, n, p), n)))
        .collect::<HashSet<u64>>()
        .into_iter()
        .collect();
    keys.par_sort_unstable();
    Ok(keys)
}

/// The poset with canonical key `key` on the given labels.
pub fn poset_from_key<S: AsRef<str>>(key: u64, labels: &[S]) -> FinitePoset {
    let n = labels.len();
    let rows = rows_of(key, n);
    FinitePoset::from_relation(labels.iter().map(|s| s.as_ref().to_string()), |i, j| leq(&rows, i, j))
        .expect("enumerated keys are partial orders")
}

/// Every labeled poset on `0..n`, each exactly once, in key order.
pub fn enumerate_labeled_posets(n: usize) -> Result<impl Iterator<Item = FinitePoset>, EnumerationError> {
    let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    Ok(labeled_poset_keys(n)?.into_iter().map(move |k| poset_from_key(k, &labels)))
}

/// Left and right translations by every element preserve the order.
pub fn translations_monotone(g: &GroupTable, key: u64) -> bool {
    let n = g.order();
    let rows = rows_of(key, n);
    (0..n).all(|x| {
        (0..n).filter(|&y| x != y && leq(&rows, x, y)).all(|y| {
            (0..n).all(|a| leq(&rows, g.mul(a, x), g.mul(a, y)) && leq(&rows, g.mul(x, a), g.mul(y, a)))
        })
    })
}

/// Multiplication is monotone for the product order on `G × G`.
pub fn multiplication_monotone(g: &GroupTable, key: u64) -> bool {
    let n = g.order();
    let rows = rows_of(key, n);
    let le = |a, b| leq(&rows, a, b);
    (0..n).all(|x| {
        (0..n).filter(|&x2| le(x, x2)).all(|x2| {
            (0..n).all(|y| (0..n).filter(|&y2| le(y, y2)).all(|y2| le(g.mul(x, y), g.mul(x2, y2))))
        })
    })
}

/// Inversion preserves the order.
pub fn inversion_monotone(g: &GroupTable, key: u64) -> bool {
    let n = g.order();
    let rows = rows_of(key, n);
    (0..n).all(|x| (0..n).filter(|&y| leq(&rows, x, y)).all(|y| leq(&rows, g.inv(x), g.inv(y))))
}

fn is_discrete(key: u64, n: usize) -> bool {
    let rows = rows_of(key, n);
    (0..n).all(|i| rows[i] == 1 << i)
}

fn is_connected(key: u64, n: usize) -> bool {
    let rows = rows_of(key, n);
    let mut seen = 1u8;
    let mut frontier = 1u8;
    while frontier != 0 {
        let mut next = 0u8;
        for i in (0..n).filter(|i| frontier >> i & 1 == 1) {
            next |= rows[i];
            next |= (0..n).filter(|&j| leq(&rows, j, i)).fold(0, |m, j| m | 1 << j);
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen.count_ones() as usize == n
}

/// Keys among `keys` whose order makes `g` a paratopological group, or a
/// topological group when `topological`; sorted.
fn surviving_keys(g: &GroupTable, keys: &[u64], topological: bool) -> Vec<u64> {
    let mut out: Vec<u64> = keys
        .par_iter()
        .copied()
        .filter(|&k| translations_monotone(g, k) && (!topological || inversion_monotone(g, k)))
        .collect();
    out.sort_unstable();
    out
}

/// All labeled orders on `g`'s carrier with monotone translations.
pub fn monotone_orders(g: &GroupTable) -> Vec<FinitePoset> {
    let keys = labeled_poset_keys(g.order()).expect("group tables have order <= 6");
    surviving_keys(g, &keys, false).into_iter().map(|k| poset_from_key(k, &g.labels)).collect()
}

/// A surviving order, by its strict relations between labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Survivor {
    pub key: u64,
    pub relations: Vec<(String, String)>,
}

impl Survivor {
    fn new(g: &GroupTable, key: u64) -> Self {
        let n = g.order();
        let rows = rows_of(key, n);
        let relations = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j && leq(&rows, i, j))
            .map(|(i, j)| (g.labels[i].clone(), g.labels[j].clone()))
            .collect();
        Self { key, relations }
    }
}

/// Outcome of the exhaustive run for one group. Runtime is kept out of the
/// JSON form so that reports are reproducible byte for byte.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationReport {
    pub group: String,
    pub order: usize,
    pub topological: bool,
    pub posets_examined: usize,
    pub monotone_orders: usize,
    pub non_discrete_survivors: Vec<Survivor>,
    pub connected_survivors: Vec<Survivor>,
    #[serde(skip)]
    pub runtime_ms: u128,
}

impl EnumerationReport {
    /// Only discrete survivors, and the only connected one is the point.
    pub fn confirmed(&self) -> bool {
        self.non_discrete_survivors.is_empty() && (self.order == 1 || self.connected_survivors.is_empty())
    }
}

fn run(max_order: usize, topological: bool) -> Result<Vec<EnumerationReport>, EnumerationError> {
    check_size(max_order)?;
    let mut by_order: Vec<Option<Vec<u64>>> = vec![None; max_order + 1];
    let mut reports = Vec::new();
    for g in GroupTable::all().into_iter().filter(|g| g.order() <= max_order) {
        let start = Instant::now();
        let n = g.order();
        let keys = match &by_order[n] {
            Some(k) => k,
            None => by_order[n].insert(labeled_poset_keys(n)?),
        };
        let survivors = surviving_keys(&g, keys, topological);
        let pick = |f: &dyn Fn(u64) -> bool| survivors.iter().filter(|&&k| f(k)).map(|&k| Survivor::new(&g, k)).collect();
        reports.push(EnumerationReport {
            group: g.name.clone(),
            order: n,
            topological,
            posets_examined: keys.len(),
            monotone_orders: survivors.len(),
            non_discrete_survivors: pick(&|k| !is_discrete(k, n)),
            connected_survivors: pick(&|k| is_connected(k, n)),
            runtime_ms: start.elapsed().as_millis(),
        });
    }
    Ok(reports)
}

/// Every embedded group of order `<= max_order`: orders with monotone
/// translations must be discrete.
pub fn verify_discreteness_theorem(max_order: usize) -> Result<Vec<EnumerationReport>, EnumerationError> {
    run(max_order, false)
}

/// As [`verify_discreteness_theorem`] with inversion also monotone; the only
/// connected survivor must be the one-point group.
pub fn verify_topgroup_triviality(max_order: usize) -> Result<Vec<EnumerationReport>, EnumerationError> {
    run(max_order, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (0..=4).map(|n| labeled_poset_keys(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 3, 19, 219]);
        assert!(matches!(labeled_poset_keys(7), Err(EnumerationError::SizeLimitExceeded { size: 7, limit: 6 })));
    }

    #[test]
    fn key_round_trip() {
        let p = poset_from_key(0b1011, &["a", "b"]);
        assert!(p.lt(0, 1));
        let rows = rows_of(0b1011, 2);
        assert_eq!(key_of(&rows, 2), 0b1011);
    }

    #[test]
    fn c2_chain_rejected() {
        let c2 = GroupTable::by_name("C2").unwrap();
        // 0 < 1: translating by 1 swaps the pair
        assert!(!translations_monotone(&c2, 0b1011));
        assert!(!inversion_monotone(&GroupTable::by_name("C3").unwrap(), key_of(&[0b111, 0b110, 0b100, 0, 0, 0], 3)));
        assert_eq!(monotone_orders(&c2).len(), 1);
    }

    #[test]
    fn connectivity() {
        assert!(is_connected(0b1011, 2));
        assert!(!is_connected(0b1001, 2));
        assert!(is_connected(1, 1));
    }
}
