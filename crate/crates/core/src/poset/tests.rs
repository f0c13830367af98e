use super::*;

fn chain3() -> FinitePoset {
    FinitePoset::from_cover_pairs(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap()
}

fn vee() -> FinitePoset {
    FinitePoset::from_cover_pairs(["a", "b", "c"], [("a", "c"), ("b", "c")]).unwrap()
}

fn diamond() -> FinitePoset {
    FinitePoset::from_cover_pairs(["a", "b", "c", "d"], [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")]).unwrap()
}

fn circle() -> FinitePoset {
    FinitePoset::antichain(2).join(&FinitePoset::antichain(2))
}

/// `[-d,d]²` with the componentwise order, labelled `(a,b)`.
fn grid(d: i64) -> FinitePoset {
    let pts: Vec<(i64, i64)> = (-d..=d).flat_map(|a| (-d..=d).map(move |b| (a, b))).collect();
    FinitePoset::from_relation(pts.iter().map(|(a, b)| format!("({a},{b})")), |i, j| {
        pts[i].0 <= pts[j].0 && pts[i].1 <= pts[j].1
    })
    .unwrap()
}

fn labels(p: &FinitePoset, s: &[usize]) -> Vec<String> {
    let mut v: Vec<String> = s.iter().map(|&i| p.label(i).to_string()).collect();
    v.sort();
    v
}

#[test]
fn from_cover_pairs_examples() {
    let p = FinitePoset::from_cover_pairs(["a", "b"], [("a", "b")]).unwrap();
    assert!(p.lt(0, 1) && p.is_total());
    let q = FinitePoset::from_cover_pairs(["a", "b"], Vec::<(&str, &str)>::new()).unwrap();
    assert!(q.is_antichain(&[0, 1]));
    let r = FinitePoset::from_cover_pairs(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
    assert_eq!(r, chain3());
    assert_eq!(r.covers().labeled_edges(), [("a".into(), "b".into()), ("b".into(), "c".into())]);
}

#[test]
fn from_cover_pairs_errors() {
    let cyc = FinitePoset::from_cover_pairs(["a", "b"], [("a", "b"), ("b", "a")]);
    assert!(matches!(cyc, Err(PosetError::CycleDetected(..))));
    let unk = FinitePoset::from_cover_pairs(["a"], [("a", "z")]);
    assert_eq!(unk, Err(PosetError::UnknownLabel("z".into())));
    let dup = FinitePoset::from_cover_pairs(["a", "a"], Vec::<(&str, &str)>::new());
    assert!(matches!(dup, Err(PosetError::DuplicateLabel(_))));
}

#[test]
fn from_relation_checks_axioms() {
    assert!(matches!(FinitePoset::from_relation(["a"], |_, _| false), Err(PosetError::NotReflexive(_))));
    // 0 <= 1 <= 2 without 0 <= 2
    let r = FinitePoset::from_relation(["0", "1", "2"], |i, j| i == j || j == i + 1);
    assert!(matches!(r, Err(PosetError::NotTransitive(..))));
}

#[test]
fn down_set_examples() {
    let c = chain3();
    assert_eq!(c.down_set_labels(&["b"]).unwrap(), ["a", "b"]);
    let g = grid(2);
    let mut got = g.down_set_labels(&["(0,0)"]).unwrap();
    got.sort();
    let mut want: Vec<String> =
        (-2..=0).flat_map(|a| (-2..=0).map(move |b| format!("({a},{b})"))).collect();
    want.sort();
    assert_eq!(got, want);
    assert_eq!(vee().down_set_labels(&["c"]).unwrap(), ["a", "b", "c"]);
    assert_eq!(c.down_set_labels(&["z"]), Err(PosetError::UnknownLabel("z".into())));
}

#[test]
fn up_set_and_star() {
    let v = vee();
    assert_eq!(v.up_set_labels(&["a"]).unwrap(), ["a", "c"]);
    assert_eq!(v.star(&[0]), [0, 2]);
}

#[test]
fn covers_examples() {
    assert_eq!(chain3().covers().edges, [(0, 1), (1, 2)]);
    assert!(FinitePoset::antichain(2).covers().edges.is_empty());
    let d = diamond().covers();
    assert_eq!(d.edges.len(), 4);
    assert!(!d.edges.contains(&(0, 3)));
}

#[test]
fn width_examples() {
    assert_eq!(FinitePoset::chain(5).width(), 1);
    // levels -2..2 of the width-two join
    let mut levels = FinitePoset::antichain(2);
    for _ in 0..4 {
        levels = levels.join(&FinitePoset::antichain(2));
    }
    assert_eq!(levels.width(), 2);
    // three parallel copies of a dense chain truncated to 5 points
    let q3 = FinitePoset::from_relation((0..15).map(|i| i.to_string()), |i, j| i % 3 == j % 3 && i <= j).unwrap();
    assert_eq!(q3.width(), 3);
    let a = q3.max_antichain();
    assert_eq!(a.len(), 3);
    assert!(q3.is_antichain(&a));
}

#[test]
fn height_examples() {
    assert_eq!(FinitePoset::antichain(4).height(), 0);
    assert_eq!(FinitePoset::chain(4).height(), 3);
    assert_eq!(diamond().height(), 2);
    assert_eq!(diamond().height_of(1), 1);
}

#[test]
fn maximal_antichain_through_examples() {
    let c = FinitePoset::chain(4);
    assert_eq!(c.maximal_antichain_through(2), [2]);
    assert_eq!(FinitePoset::antichain(2).maximal_antichain_through(0), [0, 1]);
    let g = grid(2);
    let one = g.index_of("(0,0)").unwrap();
    let a = g.maximal_antichain_through(one);
    assert_eq!(labels(&g, &a), ["(-1,1)", "(-2,2)", "(0,0)", "(1,-1)", "(2,-2)"]);
}

#[test]
fn connectivity_examples() {
    let a = FinitePoset::antichain(2);
    assert!(!a.is_connected() && !a.is_hyperconnected());
    let d = diamond();
    assert!(d.is_connected() && d.is_hyperconnected() && d.is_ultraconnected() && d.is_directed());
    let v = vee();
    assert!(!v.is_hyperconnected() && v.is_directed());
}

#[test]
fn opposite_examples() {
    let c = FinitePoset::from_cover_pairs(["a", "b"], [("a", "b")]).unwrap();
    let o = c.opposite();
    assert!(o.lt(1, 0));
    assert_eq!(FinitePoset::antichain(3).opposite(), FinitePoset::antichain(3));
    assert_eq!(diamond().opposite().opposite(), diamond());
}

#[test]
fn join_examples() {
    let pt = FinitePoset::chain(1);
    let two = pt.join(&pt);
    assert!(two.is_total() && two.len() == 2);
    assert_eq!(two.labels(), ["0", "0'"]);
    let c = circle();
    assert_eq!((c.len(), c.covers().edges.len()), (4, 4));
    let (p, q) = (diamond(), chain3());
    assert_eq!(p.join(&q).height(), p.height() + q.height() + 1);
}

#[test]
fn beat_point_examples() {
    let c = FinitePoset::chain(3);
    let pts: std::collections::BTreeSet<usize> = c.beat_points().iter().map(|b| b.element).collect();
    assert_eq!(pts.len(), 3);
    // the middle of a chain is both kinds
    assert_eq!(c.beat_points().iter().filter(|b| b.element == 1).count(), 2);
    assert!(circle().beat_points().is_empty());
    let g = grid(2);
    let one = g.index_of("(0,0)").unwrap();
    let star = g.induced(&g.star(&[one]));
    let one_in_star = star.index_of("(0,0)").unwrap();
    assert!(!star.is_beat_point(one_in_star));
    assert!(!star.beat_points().is_empty(), "boundary artifacts appear in the truncation");
}

#[test]
fn core_examples() {
    assert_eq!(FinitePoset::chain(6).core().len(), 1);
    assert_eq!(circle().core(), circle());
    assert_eq!(diamond().core().len(), 1);
}

#[test]
fn euler_characteristic_examples() {
    assert_eq!(FinitePoset::chain(1).euler_characteristic(), 1);
    assert_eq!(circle().euler_characteristic(), 0);
    let three = circle().join(&FinitePoset::antichain(2));
    assert_eq!(three.len(), 6);
    assert_eq!(three.euler_characteristic(), 2);
    assert_eq!(FinitePoset::antichain(0).euler_characteristic(), 0);
}

#[test]
fn iterated_join_examples() {
    let mut six = FinitePoset::antichain(2);
    for _ in 0..5 {
        six = six.join(&FinitePoset::antichain(2));
    }
    assert_eq!(six.is_iterated_antichain_join(), Some(2));
    assert_eq!(grid(2).is_iterated_antichain_join(), None);
    assert_eq!(FinitePoset::chain(5).is_iterated_antichain_join(), Some(1));
    assert_eq!(diamond().is_iterated_antichain_join(), None);
}

#[test]
fn isomorphism_examples() {
    let d = diamond();
    let relabeled = FinitePoset::from_cover_pairs(["w", "x", "y", "z"], [("z", "x"), ("z", "w"), ("x", "y"), ("w", "y")]).unwrap();
    assert_eq!(d.is_isomorphic(&relabeled), Ok(true));
    assert_eq!(chain3().is_isomorphic(&vee()), Ok(false));
    let g = grid(3);
    let u = |x: &str| g.induced(&g.down_set(&[g.index_of(x).unwrap()]));
    // both truncated to the same box shape by translation
    let u00 = u("(0,0)");
    let u11 = g.induced(
        &g.down_set(&[g.index_of("(1,1)").unwrap()])
            .into_iter()
            .filter(|&i| {
                let l = g.label(i);
                !l.starts_with("(-3") && !l.ends_with(",-3)")
            })
            .collect::<Vec<_>>(),
    );
    assert_eq!(u00.is_isomorphic(&u11), Ok(true));
    let big = FinitePoset::chain(ISOMORPHISM_LIMIT + 1);
    assert!(matches!(big.is_isomorphic(&big), Err(PosetError::SizeLimitExceeded { .. })));
}

#[test]
fn empty_poset() {
    let e = FinitePoset::antichain(0);
    assert!(e.is_empty());
    assert_eq!((e.width(), e.height()), (0, 0));
    assert!(!e.is_connected());
}

#[test]
fn json_and_dot() {
    let d = diamond();
    let text = d.to_json();
    assert_eq!(FinitePoset::from_json(&text).unwrap(), d);
    assert!(matches!(FinitePoset::from_json("{"), Err(PosetError::Malformed(_))));
    let dot = d.to_dot("diamond", Some(0));
    assert_eq!(dot.matches("->").count(), 4);
    assert!(dot.contains("fillcolor") && dot.contains("rank=same"));
}
