//! Radius, width and the classification of finite-radius groups.

use super::LawConfig;
use crate::check::{CheckResult, Fact, Trace};
use crate::oracle::{radius, Covers, GroupOracle, ProductOracle, Radius, Window};

/// `|r(x)| = r(1)` above and below every sampled `x`, `r <= width` on the
/// window, `r(X × X) <= 2 r(X)²`, and the window width is attained by an
/// antichain through the identity.
pub fn law_radius_relations<O: GroupOracle + Clone>(
    o: &O,
    window: &Window<'_, O>,
    xs: &[O::Elem],
    cfg: &LawConfig,
) -> CheckResult {
    const ID: &str = "radius_relations";
    let r = match radius(o) {
        Radius::Finite(r) => r,
        other => return CheckResult::inapplicable(ID, cfg.seed, format!("radius is {other}")),
    };
    let mut used = 0;
    for x in xs {
        used += 1;
        for up in [true, false] {
            let covers = if up { o.covers_above(x) } else { o.covers_below(x) };
            let Covers::Finite(cs) = covers else {
                return CheckResult::inapplicable(ID, cfg.seed, "covers not enumerable away from the identity");
            };
            let mut t = Trace::new(o);
            let ordered = cs.iter().all(|c| if up { t.lt(x, c) } else { t.lt(c, x) });
            if cs.len() != r || !ordered {
                t.note(format!(
                    "{} has {} {} covers, the identity has {r}",
                    o.encode(x),
                    cs.len(),
                    if up { "upper" } else { "lower" }
                ));
                return CheckResult::fail(ID, cfg.seed, used, t.finish());
            }
        }
    }
    let p = window.poset();
    let width = p.width();
    if r > width {
        let w = vec![Fact::note(format!("radius {r} exceeds window width {width}"))];
        return CheckResult::fail(ID, cfg.seed, used, w);
    }
    let square = ProductOracle::new(vec![o.clone(), o.clone()]);
    match radius(&square) {
        Radius::Finite(rr) if rr <= 2 * r * r => {}
        other => {
            let w = vec![Fact::note(format!("r(X×X) = {other} exceeds 2·{r}·{r}"))];
            return CheckResult::fail(ID, cfg.seed, used, w);
        }
    }
    if let Some(one) = window.identity_node() {
        let through = p.maximal_antichain_through(one).len();
        if through != width {
            let w = vec![Fact::note(format!(
                "largest antichain through the identity has {through} elements, window width is {width}"
            ))];
            return CheckResult::fail(ID, cfg.seed, used, w);
        }
    }
    CheckResult::pass(ID, cfg.seed, used).with_note(format!("radius {r}, window width {width}"))
}

/// On the window interior: if `r = width` then the interior is an iterated
/// join of `r`-antichains; if `r = 1` it is a disjoint union of `width`
/// chains. Neither hypothesis holding is a vacuous pass.
pub fn law_classification<O: GroupOracle + ?Sized>(o: &O, window: &Window<'_, O>, cfg: &LawConfig) -> CheckResult {
    const ID: &str = "classification";
    let r = match radius(o) {
        Radius::Finite(r) => r,
        other => return CheckResult::inapplicable(ID, cfg.seed, format!("radius is {other}")),
    };
    let Some(interior) = window.interior() else {
        return CheckResult::inapplicable(ID, cfg.seed, "covers are not enumerable");
    };
    if interior.is_empty() {
        return CheckResult::inapplicable(ID, cfg.seed, "window interior is empty");
    }
    let p = window.poset().induced(&interior);
    let width = p.width();
    let used = interior.len();
    if r == width {
        return match p.is_iterated_antichain_join() {
            Some(n) if n == r => {
                CheckResult::pass(ID, cfg.seed, used).with_note(format!("iterated join of {n}-antichains"))
            }
            got => {
                let levels = level_sizes(&p);
                let w = vec![Fact::note(format!("radius {r}, interior level sizes {levels:?}, join of {got:?}"))];
                CheckResult::fail(ID, cfg.seed, used, w)
            }
        };
    }
    if r == 1 {
        let comps = p.components();
        if let Some(bad) = comps.iter().find(|c| !p.is_chain(c)) {
            let labels: Vec<&str> = bad.iter().map(|&i| p.label(i)).collect();
            let w = vec![Fact::note(format!("component {{{}}} is not a chain", labels.join(", ")))];
            return CheckResult::fail(ID, cfg.seed, used, w);
        }
        if comps.len() != width {
            let w = vec![Fact::note(format!("{} chains but width {width}", comps.len()))];
            return CheckResult::fail(ID, cfg.seed, used, w);
        }
        return CheckResult::pass(ID, cfg.seed, used).with_note(format!("disjoint union of {width} chains"));
    }
    CheckResult::pass(ID, cfg.seed, used)
        .with_note(format!("radius {r} differs from interior width {width} and from 1; nothing to classify"))
}

fn level_sizes(p: &crate::poset::FinitePoset) -> Vec<usize> {
    let h = p.heights();
    let mut sizes = vec![0; h.iter().max().map_or(0, |m| m + 1)];
    for x in h {
        sizes[x] += 1;
    }
    sizes
}

/// The closed stars `C_x` of a maximum antichain through the identity cover
/// the window.
pub fn law_antichain_cover<O: GroupOracle + ?Sized>(o: &O, window: &Window<'_, O>, cfg: &LawConfig) -> CheckResult {
    const ID: &str = "antichain_cover";
    let Some(one) = window.identity_node() else {
        return CheckResult::inapplicable(ID, cfg.seed, "identity is not in the window");
    };
    let p = window.poset();
    let a = p.maximal_antichain_through(one);
    let covered = p.star(&a);
    if covered.len() == p.len() {
        return CheckResult::pass(ID, cfg.seed, p.len()).with_note(format!("antichain of size {}", a.len()));
    }
    let miss = (0..p.len()).find(|i| !covered.contains(i)).expect("some node uncovered");
    let mut t = Trace::new(o);
    for &x in &a {
        t.leq(window.element(miss), window.element(x));
        t.leq(window.element(x), window.element(miss));
    }
    CheckResult::fail(ID, cfg.seed, p.len(), t.finish())
}
