use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{FinitePoset, PosetError};

/// On-disk form: labels plus cover pairs; the order is their closure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDocument {
    pub elements: Vec<String>,
    pub covers: Vec<[String; 2]>,
}

fn quote(label: &str) -> String {
    let mut s = String::with_capacity(label.len() + 2);
    s.push('"');
    for c in label.chars() {
        if c == '"' || c == '\\' {
            s.push('\\');
        }
        s.push(c);
    }
    s.push('"');
    s
}

impl FinitePoset {
    pub fn to_document(&self) -> PosetDocument {
        PosetDocument {
            elements: self.labels.clone(),
            covers: self
                .covers()
                .labeled_edges()
                .into_iter()
                .map(|(a, b)| [a, b])
                .collect(),
        }
    }

    pub fn from_document(doc: &PosetDocument) -> Result<Self, PosetError> {
        Self::from_cover_pairs(
            doc.elements.iter().cloned(),
            doc.covers.iter().map(|[a, b]| (a.as_str(), b.as_str())),
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("poset document serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, PosetError> {
        let doc: PosetDocument =
            serde_json::from_str(text).map_err(|e| PosetError::Malformed(e.to_string()))?;
        Self::from_document(&doc)
    }

    /// Graphviz digraph of the Hasse diagram, bottom to top, one rank per
    /// height level. `highlight` is drawn filled.
    pub fn to_dot(&self, name: &str, highlight: Option<usize>) -> String {
        let mut out = String::new();
        writeln!(out, "digraph {} {{", quote(name)).unwrap();
        writeln!(out, "  rankdir=BT;").unwrap();
        writeln!(out, "  node [shape=circle];").unwrap();
        for (i, l) in self.labels.iter().enumerate() {
            if Some(i) == highlight {
                writeln!(out, "  {} [style=filled, fillcolor=gold];", quote(l)).unwrap();
            } else {
                writeln!(out, "  {};", quote(l)).unwrap();
            }
        }
        let heights = self.heights();
        let top = heights.iter().copied().max().unwrap_or(0);
        for h in 0..=top {
            let level: Vec<String> = (0..self.len())
                .filter(|&x| heights[x] == h)
                .map(|x| quote(&self.labels[x]))
                .collect();
            if !level.is_empty() {
                writeln!(out, "  {{ rank=same; {}; }}", level.join("; ")).unwrap();
            }
        }
        for (a, b) in self.covers().edges {
            writeln!(out, "  {} -> {};", quote(&self.labels[a]), quote(&self.labels[b])).unwrap();
        }
        out.push_str("}\n");
        out
    }
}
