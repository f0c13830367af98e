use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{Cardinality, Covers, GroupOracle, OracleError};
use crate::poset::{FinitePoset, PosetDocument};

/// A finite fragment of an oracle together with its induced order.
pub struct Window<'o, O: GroupOracle + ?Sized> {
    oracle: &'o O,
    elements: Vec<O::Elem>,
    index: HashMap<O::Elem, usize>,
    poset: FinitePoset,
}

impl<'o, O: GroupOracle + ?Sized> Window<'o, O> {
    /// Induced order from pairwise oracle comparisons. Duplicates are dropped,
    /// first occurrence wins.
    pub fn new(oracle: &'o O, elems: impl IntoIterator<Item = O::Elem>) -> Result<Self, OracleError> {
        let mut elements = Vec::new();
        let mut index = HashMap::new();
        for e in elems {
            if !index.contains_key(&e) {
                index.insert(e.clone(), elements.len());
                elements.push(e);
            }
        }
        let labels: Vec<String> = elements.iter().map(|e| oracle.encode(e)).collect();
        let poset = FinitePoset::from_relation(labels, |i, j| {
            i == j || oracle.leq(&elements[i], &elements[j])
        })?;
        Ok(Self { oracle, elements, index, poset })
    }

    /// The oracle's default window of the given depth.
    pub fn of_depth(oracle: &'o O, depth: usize, cap: usize) -> Result<Self, OracleError> {
        Self::new(oracle, oracle.window_elements(depth, cap)?)
    }

    /// Window on the generator ball of the given depth.
    pub fn ball(oracle: &'o O, depth: usize, cap: usize) -> Result<Self, OracleError> {
        Self::new(oracle, super::ball(oracle, depth, cap)?)
    }

    pub fn oracle(&self) -> &'o O {
        self.oracle
    }

    pub fn elements(&self) -> &[O::Elem] {
        &self.elements
    }

    pub fn element(&self, node: usize) -> &O::Elem {
        &self.elements[node]
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn node(&self, e: &O::Elem) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn contains(&self, e: &O::Elem) -> bool {
        self.index.contains_key(e)
    }

    pub fn identity_node(&self) -> Option<usize> {
        self.node(&self.oracle.identity())
    }

    /// Re-asks the oracle about every pair and compares with the stored order.
    pub fn verify_soundness(&self) -> Result<(), OracleError> {
        for (i, a) in self.elements.iter().enumerate() {
            for (j, b) in self.elements.iter().enumerate() {
                if i != j && self.oracle.leq(a, b) != self.poset.leq(i, j) {
                    return Err(OracleError::Unsound(self.oracle.encode(a), self.oracle.encode(b)));
                }
            }
        }
        Ok(())
    }

    /// Nodes whose upper and lower oracle covers all lie in the window, or
    /// `None` when the oracle cannot list covers.
    pub fn interior(&self) -> Option<Vec<usize>> {
        let mut out = Vec::new();
        for (i, e) in self.elements.iter().enumerate() {
            let (Covers::Finite(up), Covers::Finite(down)) =
                (self.oracle.covers_above(e), self.oracle.covers_below(e))
            else {
                return None;
            };
            if up.iter().chain(&down).all(|c| self.contains(c)) {
                out.push(i);
            }
        }
        Some(out)
    }

    /// Sub-window on the given nodes.
    pub fn restrict(&self, nodes: &[usize]) -> Window<'o, O> {
        let elements: Vec<O::Elem> = nodes.iter().map(|&i| self.elements[i].clone()).collect();
        let index = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        Window { oracle: self.oracle, elements, index, poset: self.poset.induced(nodes) }
    }

    pub fn document(&self, depth: Option<usize>) -> WindowDocument {
        WindowDocument {
            oracle: OracleHeader {
                name: self.oracle.name(),
                identity: self.oracle.encode(&self.oracle.identity()),
                cardinality: self.oracle.cardinality(),
                depth,
            },
            poset: self.poset.to_document(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleHeader {
    pub name: String,
    pub identity: String,
    pub cardinality: Cardinality,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub depth: Option<usize>,
}

/// Poset document with an `"oracle"` header block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowDocument {
    pub oracle: OracleHeader,
    #[serde(flatten)]
    pub poset: PosetDocument,
}
