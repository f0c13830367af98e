use std::collections::{BTreeMap, BTreeSet};

use alexpara::catalog::{catalog_build, catalog_list, CatalogError, GlDet, SymLoewner, Width};
use alexpara::matrix::{int, psd_check, rational, MatrixError, RatMatrix, Rational};
use alexpara::oracle::{Covers, GroupOracle, Radius, Window};
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::RngSeed;

fn build(name: &str, params: &[(&str, i64)]) -> alexpara::catalog::CatalogEntry {
    let p: BTreeMap<String, i64> = params.iter().map(|(k, v)| (k.to_string(), *v)).collect();
    catalog_build(name, &p).unwrap()
}

#[test]
fn int_vectors_covers_and_radius() {
    let e = build("int_vectors", &[("k", 2)]);
    let Covers::Finite(mut up) = e.oracle.covers_above(&"(0,0)".to_string()) else { panic!() };
    up.sort();
    assert_eq!(up, ["(0,1)", "(1,0)"]);
    assert_eq!(e.expected.radius, Radius::Finite(2));
    assert_eq!(e.expected.width, Width::Infinite);
}

#[test]
fn disjoint_chains_rat_is_dense_with_width_n() {
    let e = build("disjoint_chains_rat", &[("n", 3)]);
    assert_eq!(e.expected.width, Width::Finite(3));
    assert_eq!(e.expected.radius, Radius::Dense);
    assert_eq!(e.expected.radius.value(), Some(0));
    assert!(!e.expected.connected);
}

#[test]
fn width_join_group_law_and_radius() {
    let e = build("width_join", &[("n", 2)]);
    let o = &e.oracle;
    let x = o.decode("(1,1)").unwrap();
    assert_eq!(o.mul(&x, &x), "(2,0)");
    assert_eq!(e.expected.radius, Radius::Finite(2));
    assert_eq!(e.expected.width, Width::Finite(2));
}

#[test]
fn build_errors() {
    let bad = |name: &str, params: &[(&str, i64)]| {
        let p: BTreeMap<String, i64> = params.iter().map(|(k, v)| (k.to_string(), *v)).collect();
        catalog_build(name, &p).unwrap_err()
    };
    assert_eq!(bad("nosuch", &[]), CatalogError::UnknownExample("nosuch".into()));
    assert!(matches!(bad("int_vectors", &[("k", 0)]), CatalogError::BadParameter(_)));
    assert!(matches!(bad("int_chain", &[("k", 2)]), CatalogError::BadParameter(_)));
    assert!(matches!(bad("width_join", &[("n", 65)]), CatalogError::BadParameter(_)));
}

#[test]
fn radius_table_matches_oracle_covers() {
    for e in catalog_list() {
        let r = match e.oracle.covers_above(&e.oracle.identity()) {
            Covers::Finite(c) => Radius::Finite(c.len()),
            Covers::Dense => Radius::Dense,
            Covers::Unsupported => Radius::Unsupported,
        };
        assert_eq!(e.expected.radius, r, "{}", e.name);
    }
}

#[test]
fn width_join_windows_are_iterated_joins() {
    for n in 1..=4 {
        let e = build("width_join", &[("n", n)]);
        let w = Window::of_depth(&e.oracle, 3, 100_000).unwrap();
        assert_eq!(w.poset().is_iterated_antichain_join(), Some(n as usize), "n = {n}");
        assert_eq!(w.poset().width(), n as usize);
    }
}

/// One component per residue the ball reaches; all `n` once the depth
/// covers half the cycle.
#[test]
fn disjoint_chains_have_one_component_per_residue() {
    for name in ["disjoint_chains_int", "disjoint_chains_rat"] {
        for n in 1..=4i64 {
            let e = build(name, &[("n", n)]);
            for depth in 1..=3 {
                let w = Window::ball(&e.oracle, depth, 100_000).unwrap();
                let comps = w.poset().components();
                let keys: BTreeSet<_> = w.elements().iter().map(|x| e.oracle.component_key(x)).collect();
                assert_eq!(comps.len(), keys.len(), "{name} n = {n} depth {depth}");
                if 2 * depth as i64 >= n {
                    assert_eq!(comps.len(), n as usize);
                }
                for c in comps {
                    let keys: BTreeSet<_> = c.iter().map(|&i| e.oracle.component_key(w.element(i))).collect();
                    assert_eq!(keys.len(), 1);
                }
            }
        }
    }
}

#[test]
fn psd_examples() {
    assert_eq!(psd_check(&RatMatrix::zero(2)), Ok(true));
    assert_eq!(psd_check(&RatMatrix::from_i64_rows(&[&[1, 0], &[0, -1]])), Ok(false));
    assert_eq!(psd_check(&RatMatrix::from_i64_rows(&[&[2, 1], &[1, 2]])), Ok(true));
    assert_eq!(psd_check(&RatMatrix::from_i64_rows(&[&[0, 1], &[0, 0]])), Err(MatrixError::NotSymmetric));
    assert!(matches!(psd_check(&RatMatrix::identity(6)), Err(MatrixError::SizeLimitExceeded { .. })));
}

fn small_matrix(n: usize) -> impl Strategy<Value = RatMatrix> {
    proptest::collection::vec((-4i64..=4, 1i64..=3), n * n)
        .prop_map(move |v| RatMatrix::from_fn(n, |i, j| rational(v[i * n + j].0, v[i * n + j].1)))
}

/// Closed-form PSD test for symmetric 2x2 matrices.
fn quadratic_form_nonnegative(m: &RatMatrix) -> bool {
    let (a, b, c) = (m.get(0, 0).clone(), m.get(0, 1).clone(), m.get(1, 1).clone());
    a >= Rational::zero() && c >= Rational::zero() && &a * &c >= &b * &b
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, rng_seed: RngSeed::Fixed(42), ..ProptestConfig::default() })]

    #[test]
    fn gram_matrices_are_psd(a in small_matrix(3)) {
        prop_assert_eq!(psd_check(&a.transpose().mul(&a)), Ok(true));
    }

    #[test]
    fn psd_matches_2x2_criterion(a in small_matrix(2)) {
        let s = a.add(&a.transpose());
        prop_assert_eq!(psd_check(&s).unwrap(), quadratic_form_nonnegative(&s));
    }

    #[test]
    fn loewner_order_is_translation_invariant(a in small_matrix(2), b in small_matrix(2), c in small_matrix(2)) {
        let o = SymLoewner::new(2).unwrap();
        let sym = |m: &RatMatrix| m.add(&m.transpose());
        let (a, b, c) = (sym(&a), sym(&b), sym(&c));
        prop_assert_eq!(o.leq(&a, &b), o.leq(&o.mul(&c, &a), &o.mul(&c, &b)));
        prop_assert!(o.leq(&a, &a));
        if o.leq(&a, &b) && o.leq(&b, &a) {
            prop_assert_eq!(a, b);
        }
    }

    /// `A <= B` iff `A = B` or `|det A| < |det B|`, checked against a
    /// cofactor determinant.
    #[test]
    fn gl_order_by_case_analysis(a in small_matrix(2), b in small_matrix(2)) {
        let g = GlDet::new(2).unwrap();
        let det = |m: &RatMatrix| (m.get(0, 0) * m.get(1, 1) - m.get(0, 1) * m.get(1, 0)).abs();
        let (da, db) = (det(&a), det(&b));
        prop_assume!(!da.is_zero() && !db.is_zero());
        let (x, y) = (g.element(a.clone()).unwrap(), g.element(b.clone()).unwrap());
        let want = if a == b { true } else { da < db };
        prop_assert_eq!(g.leq(&x, &y), want);
        if da == db && a != b {
            prop_assert!(!g.leq(&x, &y) && !g.leq(&y, &x));
        }
        prop_assert_eq!(g.leq(&g.identity(), &x), a == RatMatrix::identity(2) || da > int(1));
    }
}
