use std::collections::BTreeSet;

use alexpara::enumeration::{
    enumerate_labeled_posets, inversion_monotone, labeled_poset_keys, monotone_orders, multiplication_monotone,
    translations_monotone, verify_discreteness_theorem, verify_topgroup_triviality, GroupTable,
};

/// Independent count: filter all 2^(n²) relations for the three axioms.
fn naive_poset_count(n: usize) -> usize {
    let bit = |r: u64, i: usize, j: usize| r >> (i * n + j) & 1 == 1;
    (0u64..1 << (n * n))
        .filter(|&r| {
            (0..n).all(|i| bit(r, i, i))
                && (0..n).all(|i| (0..n).all(|j| i == j || !(bit(r, i, j) && bit(r, j, i))))
                && (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(bit(r, i, j) && bit(r, j, k)) || bit(r, i, k))))
        })
        .count()
}

#[test]
fn counts_match_naive_filter() {
    for n in 0..=4 {
        assert_eq!(labeled_poset_keys(n).unwrap().len(), naive_poset_count(n), "n = {n}");
    }
    assert_eq!(labeled_poset_keys(3).unwrap().len(), 19);
}

#[test]
fn larger_counts_are_known_values_and_closed_under_relabeling() {
    assert_eq!(labeled_poset_keys(5).unwrap().len(), 4231);
    assert_eq!(labeled_poset_keys(6).unwrap().len(), 130023);
    for n in [4, 5] {
        let keys: BTreeSet<u64> = labeled_poset_keys(n).unwrap().into_iter().collect();
        for p in enumerate_labeled_posets(n).unwrap().step_by(97) {
            // swap labels 0 and 1 and look the result up
            let swap = |i: usize| match i {
                0 => 1,
                1 => 0,
                i => i,
            };
            let key = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .filter(|&(i, j)| p.leq(swap(i), swap(j)))
                .fold(0u64, |k, (i, j)| k | 1 << (i * n + j));
            assert!(keys.contains(&key));
        }
    }
}

#[test]
fn two_element_posets() {
    let ps: Vec<_> = enumerate_labeled_posets(2).unwrap().collect();
    assert_eq!(ps.len(), 3);
    assert_eq!(ps.iter().filter(|p| p.strict_relation_count() == 0).count(), 1);
}

#[test]
fn translation_and_product_monotonicity_agree() {
    for g in GroupTable::all().into_iter().filter(|g| g.order() <= 4) {
        for k in labeled_poset_keys(g.order()).unwrap() {
            assert_eq!(translations_monotone(&g, k), multiplication_monotone(&g, k), "{} key {k:b}", g.name);
        }
    }
}

#[test]
fn survivors_pass_direct_audit() {
    for g in GroupTable::all() {
        let survivors = monotone_orders(&g);
        assert_eq!(survivors.len(), 1, "{}", g.name);
        let p = &survivors[0];
        assert_eq!(p.strict_relation_count(), 0);
        let n = g.order();
        for (x, y, a) in (0..n).flat_map(|x| (0..n).flat_map(move |y| (0..n).map(move |a| (x, y, a)))) {
            if p.leq(x, y) {
                assert!(p.leq(g.mul(a, x), g.mul(a, y)) && p.leq(g.mul(x, a), g.mul(y, a)));
            }
        }
    }
}

#[test]
fn discreteness_theorem_up_to_order_six() {
    let reports = verify_discreteness_theorem(6).unwrap();
    let names: Vec<&str> = reports.iter().map(|r| r.group.as_str()).collect();
    assert_eq!(names, ["C1", "C2", "C3", "C4", "V4", "C5", "C6", "S3"]);
    for r in &reports {
        assert!(r.non_discrete_survivors.is_empty() && r.monotone_orders == 1, "{r:?}");
    }
    assert_eq!(verify_discreteness_theorem(1).unwrap()[0].monotone_orders, 1);
    let four = verify_discreteness_theorem(4).unwrap();
    assert_eq!(four.iter().map(|r| r.group.as_str()).collect::<Vec<_>>(), ["C1", "C2", "C3", "C4", "V4"]);
    assert!(verify_discreteness_theorem(7).is_err());
}

#[test]
fn only_the_point_is_a_connected_topological_group() {
    let reports = verify_topgroup_triviality(6).unwrap();
    let connected: Vec<&str> =
        reports.iter().filter(|r| !r.connected_survivors.is_empty()).map(|r| r.group.as_str()).collect();
    assert_eq!(connected, ["C1"]);
    assert!(reports.iter().all(|r| r.confirmed()));
    let c2 = GroupTable::by_name("C2").unwrap();
    // 0 < 1: inversion fixes both points but translation by 1 swaps them
    assert!(inversion_monotone(&c2, 0b1011) && !translations_monotone(&c2, 0b1011));
}

#[test]
fn reports_are_deterministic() {
    let a = serde_json::to_string(&verify_discreteness_theorem(6).unwrap()).unwrap();
    let b = serde_json::to_string(&verify_discreteness_theorem(6).unwrap()).unwrap();
    assert_eq!(a, b);
    assert!(!a.contains("runtime"));
}
