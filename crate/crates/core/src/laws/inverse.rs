//! Inversion turns open sets into closed ones.

use super::{LawConfig, LawError};
use crate::check::{CheckResult, Fact, Trace};
use crate::oracle::{GroupOracle, Window};

/// `1 <= x ⟹ x⁻¹ <= 1` on the window.
pub fn law_inverse_flip<O: GroupOracle + ?Sized>(o: &O, window: &Window<'_, O>, cfg: &LawConfig) -> CheckResult {
    const ID: &str = "inverse_flip";
    let id = o.identity();
    let above: Vec<&O::Elem> = window.elements().iter().filter(|x| o.lt(&id, x)).collect();
    if above.is_empty() {
        return CheckResult::inapplicable(ID, cfg.seed, "no window element above the identity");
    }
    for x in &above {
        let mut t = Trace::new(o);
        t.leq(&id, x);
        let xi = t.inv(x);
        if !t.leq(&xi, &id) {
            return CheckResult::fail(ID, cfg.seed, above.len(), t.finish());
        }
    }
    CheckResult::pass(ID, cfg.seed, above.len())
}

/// `x <= 1 ⟺ 1 <= x⁻¹` on the window, i.e. `U_1⁻¹ = F_1`.
pub fn law_opposite_identity<O: GroupOracle + ?Sized>(
    o: &O,
    window: &Window<'_, O>,
    cfg: &LawConfig,
) -> CheckResult {
    const ID: &str = "opposite_identity";
    let id = o.identity();
    for (used, x) in window.elements().iter().enumerate() {
        let mut t = Trace::new(o);
        let below = t.leq(x, &id);
        let xi = t.inv(x);
        if below != t.leq(&id, &xi) {
            return CheckResult::fail(ID, cfg.seed, used + 1, t.finish());
        }
    }
    CheckResult::pass(ID, cfg.seed, window.len())
}

/// Antichains of `window` in index order, at most `cap` of them, empty set
/// excluded.
fn antichains<O: GroupOracle + ?Sized>(window: &Window<'_, O>, cap: usize) -> Vec<Vec<usize>> {
    fn go(p: &crate::poset::FinitePoset, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, cap: usize) {
        for i in start..p.len() {
            if out.len() >= cap {
                return;
            }
            if cur.iter().all(|&j| !p.comparable(i, j)) {
                cur.push(i);
                out.push(cur.clone());
                go(p, i + 1, cur, out, cap);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(window.poset(), 0, &mut Vec::new(), &mut out, cap);
    out
}

/// For every down-set `U = ↓S` generated by an antichain `S` of the window,
/// `U⁻¹` is up-closed among window elements; dually `(↑S)⁻¹` is down-closed.
/// Membership in `U` is decided by the oracle, so `U` is the down-set in the
/// whole group, not its trace on the window.
pub fn law_open_inverse_closed<O: GroupOracle + ?Sized>(
    o: &O,
    window: &Window<'_, O>,
    cfg: &LawConfig,
) -> CheckResult {
    const ID: &str = "open_inverse_closed";
    let elems = window.elements();
    let n = elems.len();
    let inv: Vec<O::Elem> = elems.iter().map(|x| o.inv(x)).collect();
    // below[x][s]: x⁻¹ <= s; above[x][s]: s <= x⁻¹
    let below: Vec<Vec<bool>> = inv.iter().map(|xi| elems.iter().map(|s| o.leq(xi, s)).collect()).collect();
    let above: Vec<Vec<bool>> = inv.iter().map(|xi| elems.iter().map(|s| o.leq(s, xi)).collect()).collect();
    let p = window.poset();
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|v| (0..n).filter(move |&w| v != w).map(move |w| (v, w))).filter(|&(v, w)| p.leq(v, w)).collect();
    let sets = antichains(window, cfg.antichain_cap);
    let mut used = 0;
    for s in &sets {
        for (rel, up_closed) in [(&below, true), (&above, false)] {
            let member: Vec<bool> = (0..n).map(|x| s.iter().any(|&j| rel[x][j])).collect();
            for &(v, w) in &pairs {
                used += 1;
                // up-closed: v ∈ M ⟹ w ∈ M; down-closed: w ∈ M ⟹ v ∈ M
                let (from, to) = if up_closed { (v, w) } else { (w, v) };
                if member[from] && !member[to] {
                    return CheckResult::fail(ID, cfg.seed, used, escape_witness(o, window, s, from, to, up_closed));
                }
            }
        }
    }
    CheckResult::pass(ID, cfg.seed, used).with_note(format!("{} antichains generating down-sets and up-sets", sets.len()))
}

fn escape_witness<O: GroupOracle + ?Sized>(
    o: &O,
    window: &Window<'_, O>,
    s: &[usize],
    from: usize,
    to: usize,
    up_closed: bool,
) -> Vec<Fact> {
    let (a, b) = (window.element(from), window.element(to));
    let mut t = Trace::new(o);
    let gens: Vec<String> = s.iter().map(|&j| o.encode(window.element(j))).collect();
    t.note(format!(
        "{} generated by {{{}}}",
        if up_closed { "down-set" } else { "up-set" },
        gens.join(", ")
    ));
    if up_closed {
        t.leq(a, b);
    } else {
        t.leq(b, a);
    }
    let (ai, bi) = (t.inv(a), t.inv(b));
    for &j in s {
        let sj = window.element(j);
        if up_closed {
            t.leq(&ai, sj);
            t.leq(&bi, sj);
        } else {
            t.leq(sj, &ai);
            t.leq(sj, &bi);
        }
    }
    t.finish()
}

/// For a descending chain `x_1 > ... > x_k`, `x_k⁻¹` lies in every closed set
/// `U_{x_i}⁻¹ = F_{x_i⁻¹}`, so the inverses have a common point.
pub fn law_two_pseudocompact<O: GroupOracle + ?Sized>(
    o: &O,
    chain: &[O::Elem],
    cfg: &LawConfig,
) -> Result<CheckResult, LawError> {
    const ID: &str = "two_pseudocompact";
    let Some(last) = chain.last() else {
        return Err(LawError::BadChain("empty chain".into()));
    };
    for w in chain.windows(2) {
        if !o.lt(&w[1], &w[0]) {
            return Err(LawError::BadChain(format!("{} is not above {}", o.encode(&w[0]), o.encode(&w[1]))));
        }
    }
    let mut t = Trace::new(o);
    let last_inv = t.inv(last);
    for x in chain {
        let ok_open = t.leq(last, x);
        let xi = t.inv(x);
        if !(ok_open && t.leq(&xi, &last_inv)) {
            return Ok(CheckResult::fail(ID, cfg.seed, chain.len(), t.finish()));
        }
    }
    Ok(CheckResult::pass(ID, cfg.seed, chain.len()).with_witness(t.finish()))
}
