use super::{FinitePoset, PosetError};

/// Largest poset `is_isomorphic` will search.
pub const ISOMORPHISM_LIMIT: usize = 40;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Signature {
    height: usize,
    below: usize,
    above: usize,
    lower_covers: usize,
    upper_covers: usize,
}

fn signatures(p: &FinitePoset) -> Vec<Signature> {
    let heights = p.heights();
    (0..p.len())
        .map(|x| Signature {
            height: heights[x],
            below: (0..p.len()).filter(|&y| p.leq(y, x)).count(),
            above: (0..p.len()).filter(|&y| p.leq(x, y)).count(),
            lower_covers: p.lower_covers(x).len(),
            upper_covers: p.upper_covers(x).len(),
        })
        .collect()
}

impl FinitePoset {
    /// Order-isomorphism test by backtracking with signature pruning.
    pub fn is_isomorphic(&self, other: &FinitePoset) -> Result<bool, PosetError> {
        Ok(self.isomorphism_to(other)?.is_some())
    }

    /// An order isomorphism `self -> other` as a position map, if one exists.
    pub fn isomorphism_to(&self, other: &FinitePoset) -> Result<Option<Vec<usize>>, PosetError> {
        let n = self.len();
        for size in [n, other.len()] {
            if size > ISOMORPHISM_LIMIT {
                return Err(PosetError::SizeLimitExceeded { size, limit: ISOMORPHISM_LIMIT });
            }
        }
        if n != other.len() || self.strict_relation_count() != other.strict_relation_count() {
            return Ok(None);
        }
        let sa = signatures(self);
        let sb = signatures(other);
        let (mut ka, mut kb) = (sa.clone(), sb.clone());
        ka.sort_unstable();
        kb.sort_unstable();
        if ka != kb {
            return Ok(None);
        }
        // Most constrained elements first.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| (sa[x].height, std::cmp::Reverse(sa[x].below + sa[x].above)));

        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        if self.extend(other, &order, 0, &sa, &sb, &mut map, &mut used) {
            Ok(Some(map))
        } else {
            Ok(None)
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        &self,
        other: &FinitePoset,
        order: &[usize],
        depth: usize,
        sa: &[Signature],
        sb: &[Signature],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&x) = order.get(depth) else {
            return true;
        };
        for y in 0..other.len() {
            if used[y] || sa[x] != sb[y] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&u| {
                let v = map[u];
                self.leq(u, x) == other.leq(v, y) && self.leq(x, u) == other.leq(y, v)
            });
            if !consistent {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if self.extend(other, order, depth + 1, sa, sb, map, used) {
                return true;
            }
            used[y] = false;
            map[x] = usize::MAX;
        }
        false
    }
}
