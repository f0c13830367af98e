//! Finite posets, read as finite T0 Alexandroff spaces.
//!
//! Open sets are down-sets: the minimal open neighbourhood of `x` is
//! `U_x = {y : y <= x}` and its minimal closed set is `F_x = {y : y >= x}`.
//! Every algorithm here works on element *positions*; labels are only used at
//! the boundaries (construction, lookup, serialization).

mod bits;
mod homotopy;
mod io;
mod iso;
mod matching;

use std::collections::HashMap;

use thiserror::Error;

use bits::BitMatrix;

pub use homotopy::{BeatKind, BeatPoint};
pub use io::PosetDocument;
pub use iso::ISOMORPHISM_LIMIT;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("relation has a cycle through `{0}` and `{1}`")]
    CycleDetected(String, String),
    #[error("relation is not reflexive at `{0}`")]
    NotReflexive(String),
    #[error("relation is not transitive: `{0}` <= `{1}` <= `{2}`")]
    NotTransitive(String, String, String),
    #[error("poset has {size} elements, limit is {limit}")]
    SizeLimitExceeded { size: usize, limit: usize },
    #[error("malformed poset document: {0}")]
    Malformed(String),
}

/// Hasse diagram: the transitive reduction of the strict order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverGraph {
    pub nodes: Vec<String>,
    /// `(x, y)` with `x ≺ y`, as element positions, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl CoverGraph {
    pub fn labeled_edges(&self) -> Vec<(String, String)> {
        self.edges
            .iter()
            .map(|&(a, b)| (self.nodes[a].clone(), self.nodes[b].clone()))
            .collect()
    }
}

/// An explicit finite partial order over string labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    leq: BitMatrix,
}

impl FinitePoset {
    fn index_labels(labels: &[String]) -> Result<HashMap<String, usize>, PosetError> {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(PosetError::DuplicateLabel(l.clone()));
            }
        }
        Ok(index)
    }

    /// Order generated by the reflexive-transitive closure of `covers`.
    pub fn from_cover_pairs<L, A, B>(
        elements: impl IntoIterator<Item = L>,
        covers: impl IntoIterator<Item = (A, B)>,
    ) -> Result<Self, PosetError>
    where
        L: Into<String>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let labels: Vec<String> = elements.into_iter().map(Into::into).collect();
        let index = Self::index_labels(&labels)?;
        let mut leq = BitMatrix::identity(labels.len());
        for (a, b) in covers {
            let (a, b) = (a.as_ref(), b.as_ref());
            let i = *index.get(a).ok_or_else(|| PosetError::UnknownLabel(a.to_string()))?;
            let j = *index.get(b).ok_or_else(|| PosetError::UnknownLabel(b.to_string()))?;
            leq.set(i, j);
        }
        leq.transitive_closure();
        for i in 0..labels.len() {
            for j in leq.row_ones(i) {
                if i != j && leq.get(j, i) {
                    return Err(PosetError::CycleDetected(labels[i].clone(), labels[j].clone()));
                }
            }
        }
        Ok(Self { labels, index, leq })
    }

    /// Builds a poset from an explicit relation and checks all three axioms.
    pub fn from_relation<L: Into<String>>(
        elements: impl IntoIterator<Item = L>,
        leq: impl Fn(usize, usize) -> bool,
    ) -> Result<Self, PosetError> {
        let labels: Vec<String> = elements.into_iter().map(Into::into).collect();
        let index = Self::index_labels(&labels)?;
        let n = labels.len();
        let mut m = BitMatrix::new(n);
        for i in 0..n {
            for j in 0..n {
                if leq(i, j) {
                    m.set(i, j);
                }
            }
        }
        for i in 0..n {
            if !m.get(i, i) {
                return Err(PosetError::NotReflexive(labels[i].clone()));
            }
            for j in m.row_ones(i) {
                if i != j && m.get(j, i) {
                    return Err(PosetError::CycleDetected(labels[i].clone(), labels[j].clone()));
                }
                for k in m.row_ones(j) {
                    if !m.get(i, k) {
                        return Err(PosetError::NotTransitive(
                            labels[i].clone(),
                            labels[j].clone(),
                            labels[k].clone(),
                        ));
                    }
                }
            }
        }
        Ok(Self { labels, index, leq: m })
    }

    pub(crate) fn from_parts_unchecked(labels: Vec<String>, leq: BitMatrix) -> Self {
        let index = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        Self { labels, index, leq }
    }

    /// `n`-chain `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Self {
        Self::from_relation((0..n).map(|i| i.to_string()), |i, j| i <= j).expect("chain")
    }

    /// `n`-antichain labelled `0..n`.
    pub fn antichain(n: usize) -> Self {
        Self::from_relation((0..n).map(|i| i.to_string()), |i, j| i == j).expect("antichain")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize, PosetError> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| PosetError::UnknownLabel(label.to_string()))
    }

    pub fn indices_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<usize>, PosetError> {
        labels.iter().map(|l| self.index_of(l.as_ref())).collect()
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq.get(i, j)
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq.get(i, j)
    }

    #[inline]
    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    /// Number of strict comparabilities `x < y`.
    pub fn strict_relation_count(&self) -> usize {
        (0..self.len()).map(|i| self.leq.row_count(i) - 1).sum()
    }

    /// `U_S`: everything below some element of `s`. Sorted positions.
    pub fn down_set(&self, s: &[usize]) -> Vec<usize> {
        (0..self.len()).filter(|&y| s.iter().any(|&x| self.leq(y, x))).collect()
    }

    /// `F_S`: everything above some element of `s`.
    pub fn up_set(&self, s: &[usize]) -> Vec<usize> {
        (0..self.len()).filter(|&y| s.iter().any(|&x| self.leq(x, y))).collect()
    }

    /// `C_S = U_S ∪ F_S`.
    pub fn star(&self, s: &[usize]) -> Vec<usize> {
        (0..self.len())
            .filter(|&y| s.iter().any(|&x| self.comparable(x, y)))
            .collect()
    }

    /// Label-level `U_S`.
    pub fn down_set_labels<S: AsRef<str>>(&self, s: &[S]) -> Result<Vec<String>, PosetError> {
        let idx = self.indices_of(s)?;
        Ok(self.down_set(&idx).into_iter().map(|i| self.labels[i].clone()).collect())
    }

    /// Label-level `F_S`.
    pub fn up_set_labels<S: AsRef<str>>(&self, s: &[S]) -> Result<Vec<String>, PosetError> {
        let idx = self.indices_of(s)?;
        Ok(self.up_set(&idx).into_iter().map(|i| self.labels[i].clone()).collect())
    }

    pub fn is_down_closed(&self, s: &[usize]) -> bool {
        let mut mark = vec![false; self.len()];
        s.iter().for_each(|&i| mark[i] = true);
        s.iter().all(|&x| (0..self.len()).all(|y| !self.leq(y, x) || mark[y]))
    }

    pub fn lower_covers(&self, x: usize) -> Vec<usize> {
        let below: Vec<usize> = (0..self.len()).filter(|&y| self.lt(y, x)).collect();
        below
            .iter()
            .copied()
            .filter(|&y| !below.iter().any(|&z| z != y && self.lt(y, z)))
            .collect()
    }

    pub fn upper_covers(&self, x: usize) -> Vec<usize> {
        let above: Vec<usize> = self.leq.row_ones(x).filter(|&y| y != x).collect();
        above
            .iter()
            .copied()
            .filter(|&y| !above.iter().any(|&z| z != y && self.lt(z, y)))
            .collect()
    }

    pub fn covers(&self) -> CoverGraph {
        let mut edges = Vec::new();
        for x in 0..self.len() {
            for y in self.upper_covers(x) {
                edges.push((x, y));
            }
        }
        CoverGraph { nodes: self.labels.clone(), edges }
    }

    /// Positions sorted so that `x < y` implies `x` comes first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| (self.len() - self.leq.row_count(x), x));
        order
    }

    /// Height of every element: length of the longest chain ending there, minus one.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = vec![0usize; self.len()];
        for x in self.linear_extension() {
            h[x] = (0..self.len())
                .filter(|&y| self.lt(y, x))
                .map(|y| h[y] + 1)
                .max()
                .unwrap_or(0);
        }
        h
    }

    pub fn height_of(&self, x: usize) -> usize {
        self.heights()[x]
    }

    /// Length of a longest chain minus one; 0 for the empty poset.
    pub fn height(&self) -> usize {
        self.heights().into_iter().max().unwrap_or(0)
    }

    pub fn is_antichain(&self, s: &[usize]) -> bool {
        s.iter()
            .enumerate()
            .all(|(a, &x)| s[a + 1..].iter().all(|&y| !self.comparable(x, y)))
    }

    pub fn is_chain(&self, s: &[usize]) -> bool {
        s.iter()
            .enumerate()
            .all(|(a, &x)| s[a + 1..].iter().all(|&y| self.comparable(x, y)))
    }

    pub fn is_total(&self) -> bool {
        (0..self.len()).all(|x| (x + 1..self.len()).all(|y| self.comparable(x, y)))
    }

    /// Connected components of the comparability graph, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for y in 0..n {
                    if comp[y] == usize::MAX && self.comparable(x, y) {
                        comp[y] = id;
                        members.push(y);
                        stack.push(y);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    // The empty poset is reported as neither connected nor
    // hyper-/ultraconnected nor directed.

    /// Zigzag (path) connectivity.
    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Every pair of minimal open sets meets: `U_x ∩ U_y ≠ ∅`.
    pub fn is_hyperconnected(&self) -> bool {
        !self.is_empty()
            && (0..self.len())
                .all(|x| (0..self.len()).all(|y| (0..self.len()).any(|z| self.leq(z, x) && self.leq(z, y))))
    }

    /// Every pair of minimal closed sets meets: `F_x ∩ F_y ≠ ∅`.
    pub fn is_ultraconnected(&self) -> bool {
        !self.is_empty()
            && (0..self.len())
                .all(|x| (0..self.len()).all(|y| (0..self.len()).any(|z| self.leq(x, z) && self.leq(y, z))))
    }

    /// Every pair has a common upper bound.
    pub fn is_directed(&self) -> bool {
        // On a poset this coincides with ultraconnectedness; kept as its own
        // predicate so the two definitions can be cross-checked.
        !self.is_empty()
            && (0..self.len()).all(|x| {
                (0..self.len()).all(|y| self.up_set(&[x]).iter().any(|&z| self.leq(y, z)))
            })
    }

    /// Same elements, reversed order.
    pub fn opposite(&self) -> Self {
        Self::from_parts_unchecked(self.labels.clone(), self.leq.transpose())
    }

    /// Subposet on the given positions, keeping their relative order.
    pub fn induced(&self, keep: &[usize]) -> Self {
        let labels: Vec<String> = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let mut m = BitMatrix::new(keep.len());
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                if self.leq(i, j) {
                    m.set(a, b);
                }
            }
        }
        Self::from_parts_unchecked(labels, m)
    }

    /// `self ⊛ other`: disjoint union with every element of `self` below every
    /// element of `other`. Clashing labels of `other` get primes appended.
    pub fn join(&self, other: &Self) -> Self {
        let mut labels = self.labels.clone();
        let mut taken: std::collections::HashSet<String> = labels.iter().cloned().collect();
        for l in &other.labels {
            let mut l = l.clone();
            while taken.contains(&l) {
                l.push('\'');
            }
            taken.insert(l.clone());
            labels.push(l);
        }
        let (n, m) = (self.len(), other.len());
        let mut leq = BitMatrix::new(n + m);
        for i in 0..n {
            for j in self.leq.row_ones(i) {
                leq.set(i, j);
            }
            for j in 0..m {
                leq.set(i, n + j);
            }
        }
        for i in 0..m {
            for j in other.leq.row_ones(i) {
                leq.set(n + i, n + j);
            }
        }
        Self::from_parts_unchecked(labels, leq)
    }

    /// `Some(n)` when the poset is a finite join `Y_n ⊛ Y_n ⊛ ... ⊛ Y_n` of
    /// `n`-antichains: height levels all have `n` elements and every element
    /// covers exactly the full level beneath it.
    pub fn is_iterated_antichain_join(&self) -> Option<usize> {
        if self.is_empty() {
            return None;
        }
        let heights = self.heights();
        let top = *heights.iter().max()?;
        let mut levels = vec![Vec::new(); top + 1];
        for (x, &h) in heights.iter().enumerate() {
            levels[h].push(x);
        }
        let n = levels[0].len();
        if levels.iter().any(|l| l.len() != n) {
            return None;
        }
        for h in 1..=top {
            for &x in &levels[h] {
                let mut lc = self.lower_covers(x);
                lc.sort_unstable();
                if lc != levels[h - 1] {
                    return None;
                }
            }
        }
        Some(n)
    }
}

#[cfg(test)]
mod tests;
