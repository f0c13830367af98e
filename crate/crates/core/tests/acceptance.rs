//! One line per acceptance criterion; exits non-zero if any fails.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use alexpara::catalog::{catalog_build, catalog_list, CatalogEntry, IntVectors};
use alexpara::check::Status;
use alexpara::enumeration::{labeled_poset_keys, verify_discreteness_theorem, verify_topgroup_triviality};
use alexpara::laws::*;
use alexpara::oracle::{Radius, SubsetSpec, Window};
use alexpara::poset::FinitePoset;
use alexpara::sampling::rng;
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn build(name: &str, params: &[(&str, i64)]) -> CatalogEntry {
    let p: BTreeMap<String, i64> = params.iter().map(|(k, v)| (k.to_string(), *v)).collect();
    catalog_build(name, &p).expect("valid catalog parameters")
}

/// Reflexive, antisymmetric, transitive relations on `n` points by brute
/// force, as row-major bit keys.
fn naive_poset_keys(n: usize) -> BTreeSet<u64> {
    let bit = |m: u64, i: usize, j: usize| m >> (i * n + j) & 1 == 1;
    (0u64..1 << (n * n))
        .filter(|&m| {
            (0..n).all(|i| bit(m, i, i))
                && (0..n).all(|i| (0..n).all(|j| i == j || !(bit(m, i, j) && bit(m, j, i))))
                && (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(bit(m, i, j) && bit(m, j, k)) || bit(m, i, k))))
        })
        .collect()
}

fn enumeration_theorems() -> Outcome {
    for n in 0..=3 {
        let fast: BTreeSet<u64> = labeled_poset_keys(n).map_err(|e| e.to_string())?.into_iter().collect();
        ensure!(fast == naive_poset_keys(n), "labeled posets on {n} points differ from the naive filter");
    }
    ensure!(labeled_poset_keys(3).unwrap().len() == 19, "expected 19 posets on 3 points");
    let start = Instant::now();
    let plain = verify_discreteness_theorem(6).map_err(|e| e.to_string())?;
    let top = verify_topgroup_triviality(6).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure!(plain.len() == 8 && top.len() == 8, "expected 8 groups of order <= 6");
    for r in &plain {
        ensure!(r.non_discrete_survivors.is_empty(), "{} keeps a non-discrete order", r.group);
    }
    let connected: Vec<&str> =
        top.iter().filter(|r| !r.connected_survivors.is_empty()).map(|r| r.group.as_str()).collect();
    ensure!(connected == ["C1"], "connected topological survivors in {connected:?}");
    ensure!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    let examined: usize = plain.iter().map(|r| r.posets_examined).sum();
    Ok(format!("8 groups, {examined} labeled posets, only the point survives connected ({elapsed:.1?})"))
}

fn exact_invariant_values() -> Outcome {
    let z2 = build("int_vectors", &[("k", 2)]);
    ensure!(z2.expected.radius == Radius::Finite(2), "radius of Z^2 is {}", z2.expected.radius);
    for d in 1..=4 {
        let w = Window::of_depth(&z2.oracle, d, 100_000).map_err(|e| e.to_string())?;
        let one = w.identity_node().expect("identity in window");
        let a = w.poset().maximal_antichain_through(one).len();
        ensure!(a == 2 * d + 1, "antichain through 1 at depth {d} has size {a}");
    }
    for n in 1..=4 {
        let e = build("disjoint_chains_rat", &[("n", n)]);
        let w = Window::of_depth(&e.oracle, 3, 100_000).map_err(|e| e.to_string())?;
        ensure!(w.poset().width() == n as usize, "disjoint_chains_rat({n}) window width {}", w.poset().width());
        ensure!(e.expected.radius == Radius::Dense && e.expected.radius.value() == Some(0), "rat chains not dense");
        let d = build("disjoint_chains_int", &[("n", n)]);
        ensure!(d.expected.radius == Radius::Finite(1), "radius of Z x Z_{n} is {}", d.expected.radius);
    }
    let j = build("width_join", &[("n", 2)]);
    let w = Window::of_depth(&j.oracle, 3, 100_000).map_err(|e| e.to_string())?;
    ensure!(w.poset().width() == 2, "width_join(2) window width {}", w.poset().width());
    ensure!(j.expected.radius == Radius::Finite(2), "width_join(2) radius {}", j.expected.radius);
    Ok("r(Z^2) = 2 with antichains 2d+1; rational chains dense of width n; r(Z x Z_n) = 1; width_join(2) 2/2".into())
}

fn feebly_bounded_suite() -> Outcome {
    let start = Instant::now();
    let o = IntVectors { k: 2 };
    let cfg = LawConfig::default();
    let diag = SubsetSpec::new("diagonal", |x: &Vec<i64>| x[0] == x[1]).with_lower_witness(|x| {
        let m = x[0].min(x[1]);
        Some(vec![m, m])
    });
    let quadrant = SubsetSpec::new("quadrant", |x: &Vec<i64>| x[0] >= 0 && x[1] >= 0)
        .with_lower_witness(|x| (x[0] >= 0 && x[1] >= 0).then(|| vec![0, 0]));
    let xs = draw_points(&o, cfg.seed, cfg.points, cfg.cap).map_err(|e| e.to_string())?;
    let r = law_feebly_bounded(&o, &diag, &xs, None, &cfg);
    ensure!(r.passed(), "diagonal: {r:?}");
    let r = law_feebly_bounded(&o, &quadrant, &[vec![-1, -1]], None, &cfg);
    ensure!(r.failed() && r.note.contains("(-1,-1)"), "quadrant: {r:?}");
    let mut g = rng(cfg.seed);
    for _ in 0..100 {
        let size = g.gen_range(1..=6);
        let members: Vec<Vec<i64>> = (0..size).map(|_| vec![g.gen_range(-9..=9), g.gen_range(-9..=9)]).collect();
        let b = SubsetSpec::finite("finite", members);
        let r = law_feebly_bounded(&o, &b, &xs, None, &cfg);
        ensure!(r.failed() && r.replay(&o) == Ok(true), "finite subset escaped: {r:?}");
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    Ok(format!("diagonal passes, quadrant fails at (-1,-1), 100 finite subsets escape ({elapsed:.1?})"))
}

fn product_constructions() -> Outcome {
    let cfg = LawConfig::default();
    let mut checked = 0;
    for e in catalog_list() {
        for k in [2, 4, 8] {
            let r = law_product_feebly_bounded(vec![e.oracle.clone(); k], vec![e.bounded.clone(); k], 200, &cfg);
            ensure!(r.passed(), "{} to the power {k}: {r:?}", e.name);
        }
        let xs = draw_points(&e.oracle, cfg.seed, cfg.points, cfg.cap).map_err(|e| e.to_string())?;
        let r = law_product_set_feebly_bounded(&e.oracle, &e.bounded, &e.bounded, &xs, &cfg);
        ensure!(r.passed() && r.samples_used >= 1000, "{} B^2: {r:?}", e.name);
        ensure!(r.replay(&e.oracle) == Ok(true), "{} B^2 witness does not replay", e.name);
        checked += r.samples_used;
    }
    Ok(format!("k = 2, 4, 8 products pass on every example; c <= x on {checked} points, no failures"))
}

fn structure_theorems() -> Outcome {
    let cfg = LawConfig::default();
    for n in 1..=4 {
        let e = build("width_join", &[("n", n)]);
        let w = Window::of_depth(&e.oracle, 3, cfg.cap).map_err(|e| e.to_string())?;
        let r = law_classification(&e.oracle, &w, &cfg);
        ensure!(r.passed() && r.note == format!("iterated join of {n}-antichains"), "width_join({n}): {r:?}");
        ensure!(w.poset().is_iterated_antichain_join() == Some(n as usize), "width_join({n}) window");
    }
    // one chain is also a join of 1-antichains, which the law reports first
    for n in 2..=4 {
        let e = build("disjoint_chains_int", &[("n", n)]);
        let w = Window::of_depth(&e.oracle, 3, cfg.cap).map_err(|e| e.to_string())?;
        let r = law_classification(&e.oracle, &w, &cfg);
        ensure!(r.passed() && r.note == format!("disjoint union of {n} chains"), "disjoint_chains_int({n}): {r:?}");
    }
    let z = build("int_chain", &[]);
    let w = Window::of_depth(&z.oracle, 3, cfg.cap).map_err(|e| e.to_string())?;
    let r = law_beat_dichotomy(&z.oracle, &w, &cfg);
    ensure!(r.passed() && r.note.contains("chain"), "int_chain: {r:?}");
    for (name, params) in [("int_vectors", &[("k", 2)][..]), ("width_join", &[("n", 2)]), ("width_join", &[("n", 3)])] {
        let e = build(name, params);
        let w = Window::of_depth(&e.oracle, 3, cfg.cap).map_err(|e| e.to_string())?;
        let r = law_beat_dichotomy(&e.oracle, &w, &cfg);
        ensure!(r.passed(), "{name}: {r:?}");
    }
    Ok("width_join(1..4) classify as Some(n); Z x Z_n split into n chains; beat dichotomy holds".into())
}

fn property_suites() -> Outcome {
    let cfg = LawConfig { depth: Some(3), samples: 200, ..LawConfig::default() };
    let mut total = 0;
    for e in catalog_list() {
        let outcomes = run_laws(&e, LawId::ALL, &cfg).map_err(|err| format!("{}: {err}", e.name))?;
        for o in &outcomes {
            ensure!(o.matched, "{} {}: expected {}, got {:?}", e.name, o.result.law_id, o.expected, o.result);
            if o.result.failed() {
                ensure!(o.result.replay(&e.oracle) == Ok(true), "{} {} witness does not replay", e.name, o.result.law_id);
            }
        }
        let status = |id: &str| outcomes.iter().find(|o| o.result.law_id == id).map(|o| o.result.status);
        ensure!(status("inversion_monotone") == Some(Status::Fail), "{}: inversion control", e.name);
        ensure!(status("subordinated") == Some(Status::Pass), "{}: subordination of U_1", e.name);
        total += outcomes.len();
    }
    let d = build("disjoint_chains_int", &[("n", 2)]);
    let r = run_laws(&d, &[LawId::Hyperconnected], &cfg).map_err(|e| e.to_string())?;
    ensure!(r[0].result.failed(), "disconnected example passed hyperconnectivity");
    Ok(format!("{total} law runs at depth 3 with 200 samples match their declared outcomes"))
}

/// `χ` of the order complex by listing chains.
fn chain_count_euler(p: &FinitePoset) -> i64 {
    (1u32..1 << p.len())
        .map(|m| (0..p.len()).filter(|i| m >> i & 1 == 1).collect::<Vec<_>>())
        .filter(|s| p.is_chain(s))
        .map(|s| if s.len() % 2 == 1 { 1 } else { -1 })
        .sum()
}

fn homotopy_probes() -> Outcome {
    for k in 1..=8 {
        ensure!(FinitePoset::chain(k).core().len() == 1, "core of a {k}-chain is not a point");
    }
    let two = FinitePoset::antichain(2);
    let circle = two.join(&two);
    ensure!(circle.beat_points().is_empty(), "2-level join has beat points");
    // 4 vertices, 4 edges
    ensure!(circle.euler_characteristic() == 0 && chain_count_euler(&circle) == 0, "2-level join χ");
    let sphere = circle.join(&two);
    // 6 vertices, 12 edges, 8 triangles
    ensure!(sphere.euler_characteristic() == 2 && chain_count_euler(&sphere) == 2, "3-level join χ");
    Ok("chains retract to a point; 2-level join has no beat points and χ = 0; 3-level join χ = 2".into())
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("enumeration theorems", enumeration_theorems),
        ("exact invariant values", exact_invariant_values),
        ("feebly bounded suite", feebly_bounded_suite),
        ("product constructions", product_constructions),
        ("structure theorems", structure_theorems),
        ("property suites", property_suites),
        ("homotopy probes", homotopy_probes),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
