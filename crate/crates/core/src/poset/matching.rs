//! Width and chain covers through bipartite matching on the strict order.
//!
//! Left copy `x`, right copy `y`, edge whenever `x < y`. A maximum matching
//! of size `m` yields a chain cover with `n - m` chains, and König's theorem
//! turns the matching into a minimum vertex cover whose complement is a
//! maximum antichain of the same size.

use std::collections::VecDeque;

use super::FinitePoset;

const NIL: usize = usize::MAX;

struct Matching {
    /// `pair_left[x] = y` when the edge `x < y` is matched.
    pair_left: Vec<usize>,
    pair_right: Vec<usize>,
    size: usize,
}

/// Hopcroft–Karp over `adj[x]` = right vertices adjacent to left `x`.
fn hopcroft_karp(adj: &[Vec<usize>], n_right: usize) -> Matching {
    let n_left = adj.len();
    let mut pair_left = vec![NIL; n_left];
    let mut pair_right = vec![NIL; n_right];
    let mut dist = vec![0usize; n_left];
    let mut size = 0;

    loop {
        let mut queue = VecDeque::new();
        for x in 0..n_left {
            if pair_left[x] == NIL {
                dist[x] = 0;
                queue.push_back(x);
            } else {
                dist[x] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                match pair_right[y] {
                    NIL => found = true,
                    x2 if dist[x2] == usize::MAX => {
                        dist[x2] = dist[x] + 1;
                        queue.push_back(x2);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            break;
        }

        fn augment(
            x: usize,
            adj: &[Vec<usize>],
            dist: &mut [usize],
            pair_left: &mut [usize],
            pair_right: &mut [usize],
        ) -> bool {
            for i in 0..adj[x].len() {
                let y = adj[x][i];
                let next = pair_right[y];
                if next == NIL
                    || (dist[next] == dist[x] + 1 && augment(next, adj, dist, pair_left, pair_right))
                {
                    pair_left[x] = y;
                    pair_right[y] = x;
                    return true;
                }
            }
            dist[x] = usize::MAX;
            false
        }

        for x in 0..n_left {
            if pair_left[x] == NIL && augment(x, adj, &mut dist, &mut pair_left, &mut pair_right) {
                size += 1;
            }
        }
    }
    Matching { pair_left, pair_right, size }
}

impl FinitePoset {
    fn strict_adjacency(&self) -> Vec<Vec<usize>> {
        (0..self.len())
            .map(|x| self.leq.row_ones(x).filter(|&y| y != x).collect())
            .collect()
    }

    fn max_matching(&self) -> Matching {
        hopcroft_karp(&self.strict_adjacency(), self.len())
    }

    /// Size of a maximum antichain (0 for the empty poset).
    pub fn width(&self) -> usize {
        self.len() - self.max_matching().size
    }

    /// A maximum antichain, reconstructed from a minimum vertex cover.
    pub fn max_antichain(&self) -> Vec<usize> {
        let n = self.len();
        let adj = self.strict_adjacency();
        let m = hopcroft_karp(&adj, n);
        // Alternating reachability from unmatched left vertices.
        let mut left_seen = vec![false; n];
        let mut right_seen = vec![false; n];
        let mut queue: VecDeque<usize> = (0..n).filter(|&x| m.pair_left[x] == NIL).collect();
        queue.iter().for_each(|&x| left_seen[x] = true);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if !right_seen[y] && m.pair_left[x] != y {
                    right_seen[y] = true;
                    let x2 = m.pair_right[y];
                    if x2 != NIL && !left_seen[x2] {
                        left_seen[x2] = true;
                        queue.push_back(x2);
                    }
                }
            }
        }
        // Cover = (L \ Z) ∪ (R ∩ Z); antichain = elements with neither copy covered.
        (0..n).filter(|&x| left_seen[x] && !right_seen[x]).collect()
    }

    /// Partition into `width()` chains, each listed bottom to top.
    pub fn chain_decomposition(&self) -> Vec<Vec<usize>> {
        let m = self.max_matching();
        let mut chains = Vec::new();
        for start in 0..self.len() {
            if m.pair_right[start] != NIL {
                continue;
            }
            let mut chain = vec![start];
            let mut x = start;
            while m.pair_left[x] != NIL {
                x = m.pair_left[x];
                chain.push(x);
            }
            chains.push(chain);
        }
        chains
    }

    /// A maximum-size antichain among those containing `x`.
    pub fn maximal_antichain_through(&self, x: usize) -> Vec<usize> {
        let rest: Vec<usize> = (0..self.len()).filter(|&y| !self.comparable(x, y)).collect();
        let sub = self.induced(&rest);
        let mut out: Vec<usize> = sub.max_antichain().into_iter().map(|i| rest[i]).collect();
        out.push(x);
        out.sort_unstable();
        out
    }
}
