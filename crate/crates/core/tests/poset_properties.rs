use alexpara::enumeration::enumerate_labeled_posets;
use alexpara::poset::FinitePoset;
use proptest::prelude::*;
use proptest::test_runner::RngSeed;

/// Random poset on up to `max` points: a random relation above the diagonal
/// closed transitively, then shuffled labels.
fn poset(max: usize) -> impl Strategy<Value = FinitePoset> {
    (1..=max)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), n * n), Just((0..n).collect::<Vec<_>>()).prop_shuffle()))
        .prop_map(|(n, bits, perm)| {
            let covers: Vec<(String, String)> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| bits[i * n + j])
                .map(|(i, j)| (perm[i].to_string(), perm[j].to_string()))
                .collect();
            FinitePoset::from_cover_pairs((0..n).map(|i| i.to_string()), covers).unwrap()
        })
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |m| (0..n).filter(|i| m >> i & 1 == 1).collect())
}

fn brute_width(p: &FinitePoset) -> usize {
    subsets(p.len()).filter(|s| p.is_antichain(s)).map(|s| s.len()).max().unwrap_or(0)
}

/// χ by listing every chain.
fn brute_euler(p: &FinitePoset) -> i64 {
    subsets(p.len())
        .filter(|s| !s.is_empty() && p.is_chain(s))
        .map(|s| if s.len() % 2 == 1 { 1 } else { -1 })
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, rng_seed: RngSeed::Fixed(42), ..ProptestConfig::default() })]

    #[test]
    fn down_set_is_up_set_of_opposite(p in poset(8), mask in any::<u8>()) {
        let s: Vec<usize> = (0..p.len()).filter(|i| mask >> i & 1 == 1).collect();
        prop_assert_eq!(p.down_set(&s), p.opposite().up_set(&s));
    }

    #[test]
    fn covers_reproduce_the_order(p in poset(8)) {
        let doc = p.to_document();
        prop_assert_eq!(FinitePoset::from_document(&doc).unwrap(), p.clone());
        let edges = p.covers().edges;
        for &(a, b) in &edges {
            prop_assert!(p.lt(a, b));
            prop_assert!(!(0..p.len()).any(|m| p.lt(a, m) && p.lt(m, b)));
        }
    }

    #[test]
    fn width_and_height_are_self_dual(p in poset(8)) {
        let o = p.opposite();
        prop_assert_eq!(p.width(), o.width());
        prop_assert_eq!(p.height(), o.height());
    }

    #[test]
    fn dilworth_consistency(p in poset(7)) {
        let w = p.width();
        prop_assert_eq!(w, brute_width(&p));
        let a = p.max_antichain();
        prop_assert!(p.is_antichain(&a));
        prop_assert_eq!(a.len(), w);
        let chains = p.chain_decomposition();
        prop_assert_eq!(chains.len(), w);
        let mut all: Vec<usize> = chains.iter().flatten().copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, (0..p.len()).collect::<Vec<_>>());
        prop_assert!(chains.iter().all(|c| p.is_chain(c)));
    }

    #[test]
    fn antichain_through_a_point_is_maximum(p in poset(7), x in 0usize..7) {
        let x = x % p.len();
        let a = p.maximal_antichain_through(x);
        prop_assert!(a.contains(&x) && p.is_antichain(&a));
        let best = subsets(p.len()).filter(|s| s.contains(&x) && p.is_antichain(s)).map(|s| s.len()).max().unwrap();
        prop_assert_eq!(a.len(), best);
    }

    #[test]
    fn height_of_is_height_of_down_set(p in poset(8)) {
        for x in 0..p.len() {
            prop_assert_eq!(p.height_of(x), p.induced(&p.down_set(&[x])).height());
        }
    }

    #[test]
    fn core_is_idempotent_and_preserves_euler(p in poset(8)) {
        let c = p.core();
        prop_assert_eq!(c.core(), c.clone());
        prop_assert!(c.beat_points().is_empty());
        prop_assert_eq!(c.euler_characteristic(), p.euler_characteristic());
        prop_assert_eq!(p.euler_characteristic(), brute_euler(&p));
    }

    #[test]
    fn join_is_associative_up_to_isomorphism(p in poset(4), q in poset(4), r in poset(4)) {
        let left = p.join(&q).join(&r);
        let right = p.join(&q.join(&r));
        prop_assert_eq!(left.is_isomorphic(&right), Ok(true));
        prop_assert_eq!(p.join(&q).height(), p.height() + q.height() + 1);
    }

    #[test]
    fn connectivity_predicates_match_definitions(p in poset(7)) {
        let n = p.len();
        let pairs = || (0..n).flat_map(|x| (0..n).map(move |y| (x, y)));
        let hyper = pairs().all(|(x, y)| (0..n).any(|z| p.leq(z, x) && p.leq(z, y)));
        let ultra = pairs().all(|(x, y)| (0..n).any(|z| p.leq(x, z) && p.leq(y, z)));
        prop_assert_eq!(p.is_hyperconnected(), hyper);
        prop_assert_eq!(p.is_ultraconnected(), ultra);
        prop_assert_eq!(p.is_directed(), ultra);
        prop_assert!(!hyper || p.is_connected());
    }

    #[test]
    fn isomorphic_to_relabeling(p in poset(8), seed in any::<u64>()) {
        let n = p.len();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.rotate_left((seed as usize) % n);
        let q = FinitePoset::from_relation(perm.iter().map(|i| format!("v{i}")), |i, j| p.leq(perm[i], perm[j])).unwrap();
        prop_assert_eq!(p.is_isomorphic(&q), Ok(true));
    }
}

#[test]
fn directed_implies_ultraconnected_exhaustively() {
    for n in 1..=6 {
        for p in enumerate_labeled_posets(n).unwrap() {
            if p.is_directed() {
                assert!(p.is_ultraconnected());
            }
        }
    }
}
