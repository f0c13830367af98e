//! Feeble boundedness, its product forms, and directedness.

use super::search::Search;
use super::LawConfig;
use crate::check::{CheckResult, Fact, Trace};
use crate::oracle::{step_set, GroupOracle, ProductOracle, SubsetSpec};

/// `B` meets `U_x` for every sampled `x`.
///
/// A finite `B` always fails, through the escape point `y = b·g` with `b`
/// minimal in `B` and `g < 1`: nothing in `B` lies below `y`. Otherwise the
/// lower witness of `B` is used when present (`None` from it certifies
/// `B ∩ U_x = ∅`), and a bounded search when absent. An exhausted search is
/// inapplicable, never a pass.
pub fn law_feebly_bounded<O: GroupOracle + ?Sized>(
    o: &O,
    b: &SubsetSpec<O::Elem>,
    xs: &[O::Elem],
    search: Option<&Search<'_, O>>,
    cfg: &LawConfig,
) -> CheckResult {
    const ID: &str = "feebly_bounded";
    if let Some(members) = b.finite_elements() {
        return finite_escape(o, members, cfg);
    }
    for (i, x) in xs.iter().enumerate() {
        let used = i + 1;
        match b.lower_witness(x) {
            Some(Some(w)) => {
                let mut t = Trace::new(o);
                if !(t.leq(&w, x) && b.contains(&w)) {
                    t.note(format!("lower witness of {} returned {}", b.name, o.encode(&w)));
                    return CheckResult::fail(ID, cfg.seed, used, t.finish()).with_note("lower witness is unsound");
                }
            }
            Some(None) => {
                let w = vec![Fact::note(format!("{} has no member below {}", b.name, o.encode(x)))];
                return CheckResult::fail(ID, cfg.seed, used, w)
                    .with_note(format!("U_x misses {} at x = {}", b.name, o.encode(x)));
            }
            None => {
                let found = search.and_then(|s| s.below(x, |z| b.contains(z)));
                if found.is_none() {
                    return CheckResult::inapplicable(
                        ID,
                        cfg.seed,
                        format!("search budget exhausted below {}", o.encode(x)),
                    );
                }
            }
        }
    }
    CheckResult::pass(ID, cfg.seed, xs.len())
}

fn finite_escape<O: GroupOracle + ?Sized>(o: &O, members: &[O::Elem], cfg: &LawConfig) -> CheckResult {
    const ID: &str = "feebly_bounded";
    let id = o.identity();
    let Some(b) = members.iter().find(|b| !members.iter().any(|c| o.lt(c, b))) else {
        let w = vec![Fact::note("the empty set meets no U_x")];
        return CheckResult::fail(ID, cfg.seed, 0, w);
    };
    let Some(g) = step_set(o).into_iter().find(|s| o.lt(s, &id)) else {
        return CheckResult::inapplicable(ID, cfg.seed, "no generator step below the identity");
    };
    let mut t = Trace::new(o);
    t.note(format!("finite subset; {} is minimal in it", o.encode(b)));
    t.leq(&g, &id);
    t.eq(&g, &id);
    let y = t.mul(b, &g);
    for c in members {
        if t.leq(c, &y) {
            return CheckResult::inapplicable(ID, cfg.seed, "escape construction failed")
                .with_witness(t.finish());
        }
    }
    CheckResult::fail(ID, cfg.seed, members.len(), t.finish())
        .with_note(format!("escape point {} lies above no member", o.encode(&y)))
}

/// The product of feebly bounded subsets is feebly bounded in the product
/// group, checked through componentwise witnesses.
pub fn law_product_feebly_bounded<O: GroupOracle + Clone>(
    factors: Vec<O>,
    subsets: Vec<SubsetSpec<O::Elem>>,
    points: usize,
    cfg: &LawConfig,
) -> CheckResult
where
    O::Elem: 'static,
{
    let k = factors.len();
    let product = ProductOracle::new(factors);
    let b = SubsetSpec::product(subsets);
    let mut rng = crate::sampling::rng(cfg.seed ^ 0x9d0d);
    let mut xs = vec![product.identity()];
    xs.extend(product.generators());
    while xs.len() < points {
        xs.push(product.random_element(&mut rng));
    }
    let mut r = law_feebly_bounded(&product, &b, &xs, None, cfg);
    r.law_id = "product_feebly_bounded".into();
    let note = format!("{k}-fold product, subset {}", b.name);
    r.note = if r.note.is_empty() { note } else { format!("{note}; {}", r.note) };
    r
}

/// `AB` is feebly bounded: with `a` below `x` in `A`, `b` below `a⁻¹x` in `B`,
/// the product `c = ab` lies below `x`.
pub fn law_product_set_feebly_bounded<O: GroupOracle + ?Sized>(
    o: &O,
    a_set: &SubsetSpec<O::Elem>,
    b_set: &SubsetSpec<O::Elem>,
    xs: &[O::Elem],
    cfg: &LawConfig,
) -> CheckResult {
    const ID: &str = "product_set_feebly_bounded";
    if !(a_set.has_lower_witness() && b_set.has_lower_witness()) {
        return CheckResult::inapplicable(ID, cfg.seed, "both subsets need lower witnesses");
    }
    let mut first = None;
    for (i, x) in xs.iter().enumerate() {
        let mut t = Trace::new(o);
        let Some(Some(a)) = a_set.lower_witness(x) else {
            return CheckResult::inapplicable(ID, cfg.seed, format!("{} misses U_{}", a_set.name, o.encode(x)));
        };
        let ai = t.inv(&a);
        let y = t.mul(&ai, x);
        let Some(Some(b)) = b_set.lower_witness(&y) else {
            return CheckResult::inapplicable(ID, cfg.seed, format!("{} misses U_{}", b_set.name, o.encode(&y)));
        };
        t.leq(&a, x);
        t.leq(&b, &y);
        let c = t.mul(&a, &b);
        if !(t.leq(&c, x) && a_set.contains(&a) && b_set.contains(&b)) {
            return CheckResult::fail(ID, cfg.seed, i + 1, t.finish());
        }
        first.get_or_insert_with(|| t.finish());
    }
    let r = CheckResult::pass(ID, cfg.seed, xs.len());
    match first {
        Some(w) => r.with_witness(w),
        None => r,
    }
}

/// Every sampled pair has a common lower and a common upper bound. A pair
/// without bounds fails only when the oracle certifies that the two lie in
/// different comparability components; otherwise the search is inconclusive.
pub fn law_hyperconnected<O: GroupOracle + ?Sized>(
    o: &O,
    pairs: &[(O::Elem, O::Elem)],
    search: &Search<'_, O>,
    cfg: &LawConfig,
) -> CheckResult {
    const ID: &str = "hyperconnected";
    let mut first = None;
    for (i, (x, y)) in pairs.iter().enumerate() {
        let lower = search.below(x, |z| o.leq(z, y)).or_else(|| search.below(y, |z| o.leq(z, x)));
        let upper = search.above(x, |z| o.leq(y, z)).or_else(|| search.above(y, |z| o.leq(x, z)));
        if let (Some(l), Some(u)) = (&lower, &upper) {
            if first.is_none() {
                let mut t = Trace::new(o);
                t.leq(l, x);
                t.leq(l, y);
                t.leq(x, u);
                t.leq(y, u);
                first = Some(t.finish());
            }
            continue;
        }
        return match (o.component_key(x), o.component_key(y)) {
            (Some(kx), Some(ky)) if kx != ky => {
                let mut t = Trace::new(o);
                t.note(format!("component keys {kx} and {ky} differ: no common bound exists"));
                t.leq(x, y);
                t.leq(y, x);
                CheckResult::fail(ID, cfg.seed, i + 1, t.finish()).with_note("pair in different components")
            }
            _ => CheckResult::inapplicable(
                ID,
                cfg.seed,
                format!("search budget exhausted for ({}, {})", o.encode(x), o.encode(y)),
            ),
        };
    }
    let r = CheckResult::pass(ID, cfg.seed, pairs.len());
    match first {
        Some(w) => r.with_witness(w),
        None => r,
    }
}
