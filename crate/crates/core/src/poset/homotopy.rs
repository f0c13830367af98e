use serde::{Deserialize, Serialize};

use super::FinitePoset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BeatKind {
    /// `U_x \ {x}` has a maximum.
    Down,
    /// `F_x \ {x}` has a minimum.
    Up,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BeatPoint {
    pub element: usize,
    pub kind: BeatKind,
}

impl FinitePoset {
    pub fn is_down_beat_point(&self, x: usize) -> bool {
        let below: Vec<usize> = (0..self.len()).filter(|&y| self.lt(y, x)).collect();
        below.iter().any(|&m| below.iter().all(|&y| self.leq(y, m)))
    }

    pub fn is_up_beat_point(&self, x: usize) -> bool {
        let above: Vec<usize> = (0..self.len()).filter(|&y| self.lt(x, y)).collect();
        above.iter().any(|&m| above.iter().all(|&y| self.leq(m, y)))
    }

    pub fn is_beat_point(&self, x: usize) -> bool {
        self.is_down_beat_point(x) || self.is_up_beat_point(x)
    }

    /// All beat points; an element that is both kinds is listed twice.
    pub fn beat_points(&self) -> Vec<BeatPoint> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            if self.is_up_beat_point(x) {
                out.push(BeatPoint { element: x, kind: BeatKind::Up });
            }
            if self.is_down_beat_point(x) {
                out.push(BeatPoint { element: x, kind: BeatKind::Down });
            }
        }
        out
    }

    /// Removes beat points one at a time, always the lowest remaining
    /// position, until none is left.
    pub fn core(&self) -> FinitePoset {
        let mut keep: Vec<usize> = (0..self.len()).collect();
        loop {
            let current = self.induced(&keep);
            match (0..current.len()).find(|&x| current.is_beat_point(x)) {
                Some(x) => {
                    keep.remove(x);
                }
                None => return current,
            }
        }
    }

    /// Euler characteristic of the order complex:
    /// `Σ_k (-1)^k · #{chains with k+1 elements}`.
    pub fn euler_characteristic(&self) -> i64 {
        // s[x] = signed count of chains whose top is x = 1 - Σ_{y<x} s[y]
        let mut s = vec![0i128; self.len()];
        for x in self.linear_extension() {
            let below: i128 = (0..self.len()).filter(|&y| self.lt(y, x)).map(|y| s[y]).sum();
            s[x] = 1 - below;
        }
        i64::try_from(s.iter().sum::<i128>()).expect("Euler characteristic overflows i64")
    }
}
