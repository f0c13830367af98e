//! The eight groups of order at most 6, as embedded multiplication tables.

use serde::Serialize;

use super::EnumerationError;

/// A finite group by its Cayley table. Element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupTable {
    pub name: String,
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl GroupTable {
    /// Validates the group axioms: Latin square, identity at 0, associativity.
    /// Inverses follow from the Latin property.
    pub fn new(name: &str, labels: &[&str], table: Vec<Vec<usize>>) -> Result<Self, EnumerationError> {
        let n = labels.len();
        let bad = |why: String| EnumerationError::InvalidTable(format!("{name}: {why}"));
        if n == 0 || table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(bad(format!("table is not {n}×{n}")));
        }
        for i in 0..n {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for j in 0..n {
                let (r, c) = (table[i][j], table[j][i]);
                if r >= n || row[r] || c >= n || col[c] {
                    return Err(bad(format!("row or column {i} is not a permutation")));
                }
                row[r] = true;
                col[c] = true;
            }
            if table[0][i] != i || table[i][0] != i {
                return Err(bad("element 0 is not the identity".into()));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(bad(format!("({a}{b}){c} ≠ {a}({b}{c})")));
                    }
                }
            }
        }
        Ok(Self { name: name.into(), labels: labels.iter().map(|s| s.to_string()).collect(), table })
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.table[a][b] == 0).expect("Latin square has inverses")
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..a).all(|b| self.table[a][b] == self.table[b][a]))
    }

    /// C1, C2, C3, C4, V4, C5, C6, S3, in that order.
    pub fn all() -> Vec<GroupTable> {
        TABLES
            .iter()
            .map(|(name, labels, rows)| {
                let table = rows.iter().map(|r| r.to_vec()).collect();
                GroupTable::new(name, labels, table).expect("embedded table is a group")
            })
            .collect()
    }

    pub fn by_name(name: &str) -> Option<GroupTable> {
        Self::all().into_iter().find(|g| g.name == name)
    }
}

type Raw = (&'static str, &'static [&'static str], &'static [&'static [usize]]);

const TABLES: [Raw; 8] = [
    ("C1", &["0"], &[&[0]]),
    ("C2", &["0", "1"], &[&[0, 1], &[1, 0]]),
    ("C3", &["0", "1", "2"], &[&[0, 1, 2], &[1, 2, 0], &[2, 0, 1]]),
    ("C4", &["0", "1", "2", "3"], &[&[0, 1, 2, 3], &[1, 2, 3, 0], &[2, 3, 0, 1], &[3, 0, 1, 2]]),
    ("V4", &["e", "a", "b", "c"], &[&[0, 1, 2, 3], &[1, 0, 3, 2], &[2, 3, 0, 1], &[3, 2, 1, 0]]),
    (
        "C5",
        &["0", "1", "2", "3", "4"],
        &[&[0, 1, 2, 3, 4], &[1, 2, 3, 4, 0], &[2, 3, 4, 0, 1], &[3, 4, 0, 1, 2], &[4, 0, 1, 2, 3]],
    ),
    (
        "C6",
        &["0", "1", "2", "3", "4", "5"],
        &[
            &[0, 1, 2, 3, 4, 5],
            &[1, 2, 3, 4, 5, 0],
            &[2, 3, 4, 5, 0, 1],
            &[3, 4, 5, 0, 1, 2],
            &[4, 5, 0, 1, 2, 3],
            &[5, 0, 1, 2, 3, 4],
        ],
    ),
    // composition (ab)(x) = a(b(x))
    (
        "S3",
        &["e", "(12)", "(13)", "(23)", "(123)", "(132)"],
        &[
            &[0, 1, 2, 3, 4, 5],
            &[1, 0, 5, 4, 3, 2],
            &[2, 4, 0, 5, 1, 3],
            &[3, 5, 4, 0, 2, 1],
            &[4, 2, 3, 1, 5, 0],
            &[5, 3, 1, 2, 0, 4],
        ],
    ),
];
