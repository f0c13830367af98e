//! Local structure around the identity: torsion, homogeneity, beat points,
//! height.

use super::{LawConfig, LawError};
use crate::check::{CheckResult, Fact, Trace};
use crate::oracle::{GroupOracle, Window};
use crate::poset::{PosetError, ISOMORPHISM_LIMIT};

/// Least `k` in `1..=max_power` with `x^k = 1`.
fn order_of<O: GroupOracle + ?Sized>(o: &O, x: &O::Elem, max_power: u32) -> Option<u32> {
    let id = o.identity();
    let mut p = x.clone();
    for k in 1..=max_power {
        if p == id {
            return Some(k);
        }
        p = o.mul(&p, x);
    }
    None
}

/// No `x ≠ 1` comparable to `1` has finite order. Torsion elements found in
/// the window must therefore be incomparable to the identity; their count is
/// reported in the note.
pub fn law_no_torsion<O: GroupOracle + ?Sized>(
    o: &O,
    window: &Window<'_, O>,
    max_power: u32,
    cfg: &LawConfig,
) -> CheckResult {
    const ID: &str = "no_torsion";
    let id = o.identity();
    let mut torsion = 0;
    for x in window.elements().iter().filter(|x| **x != id) {
        let Some(k) = order_of(o, x, max_power) else {
            continue;
        };
        torsion += 1;
        let mut t = Trace::new(o);
        let (below, above) = (t.leq(x, &id), t.leq(&id, x));
        if below || above {
            let mut p = x.clone();
            for _ in 1..k {
                p = t.mul(&p, x);
            }
            t.eq(&p, &id);
            return CheckResult::fail(ID, cfg.seed, window.len(), t.finish())
                .with_note(format!("element of order {k} comparable to the identity"));
        }
    }
    CheckResult::pass(ID, cfg.seed, window.len())
        .with_note(format!("{torsion} torsion elements, all incomparable to the identity"))
}

/// Left translation by `x` maps `U_1` and `F_1` (within the window)
/// order-isomorphically onto `U_x` and `F_x` (within the translated window).
pub fn law_homogeneity<O: GroupOracle + ?Sized>(
    o: &O,
    window: &Window<'_, O>,
    x: &O::Elem,
    cfg: &LawConfig,
) -> Result<CheckResult, LawError> {
    const ID: &str = "homogeneity";
    let id = o.identity();
    if window.len() < 2 {
        return Ok(CheckResult::inapplicable(ID, cfg.seed, "window too small"));
    }
    let mut used = 0;
    let mut note = Vec::new();
    for down in [true, false] {
        // w ∈ U_1 ⟺ xw ∈ U_x, over the whole window
        for w in window.elements() {
            used += 1;
            let mut t = Trace::new(o);
            let xw = t.mul(x, w);
            let (inside, image_inside) =
                if down { (t.leq(w, &id), t.leq(&xw, x)) } else { (t.leq(&id, w), t.leq(x, &xw)) };
            if inside != image_inside {
                return Ok(CheckResult::fail(ID, cfg.seed, used, t.finish()));
            }
        }
        let set: Vec<O::Elem> = window
            .elements()
            .iter()
            .filter(|w| if down { o.leq(w, &id) } else { o.leq(&id, w) })
            .cloned()
            .collect();
        let image: Vec<O::Elem> = set.iter().map(|u| o.mul(x, u)).collect();
        for (i, u) in set.iter().enumerate() {
            for (j, v) in set.iter().enumerate() {
                used += 1;
                let mut t = Trace::new(o);
                if t.leq(u, v) != t.leq(&image[i], &image[j]) {
                    t.mul(x, u);
                    t.mul(x, v);
                    return Ok(CheckResult::fail(ID, cfg.seed, used, t.finish()));
                }
            }
        }
        if set.len() <= ISOMORPHISM_LIMIT {
            let a = Window::new(o, set.clone())?;
            let b = Window::new(o, image)?;
            match a.poset().is_isomorphic(b.poset()) {
                Ok(true) => {}
                Ok(false) => {
                    let w = vec![Fact::note(format!(
                        "induced orders on {} and its translate by {} are not isomorphic",
                        if down { "U_1" } else { "F_1" },
                        o.encode(x)
                    ))];
                    return Ok(CheckResult::fail(ID, cfg.seed, used, w));
                }
                Err(PosetError::SizeLimitExceeded { .. }) => unreachable!("size checked"),
                Err(e) => return Err(e.into()),
            }
        } else {
            note.push(format!("{} has {} elements; isomorphism search skipped", if down { "U_1" } else { "F_1" }, set.len()));
        }
    }
    Ok(CheckResult::pass(ID, cfg.seed, used).with_note(note.join("; ")))
}

/// If the identity is a beat point of the window interior then the interior
/// is a chain; otherwise no interior point is a beat point.
pub fn law_beat_dichotomy<O: GroupOracle + ?Sized>(o: &O, window: &Window<'_, O>, cfg: &LawConfig) -> CheckResult {
    const ID: &str = "beat_dichotomy";
    let Some(interior) = window.interior() else {
        return CheckResult::inapplicable(ID, cfg.seed, "covers are not enumerable");
    };
    let Some(one) = window.identity_node().filter(|i| interior.contains(i)) else {
        return CheckResult::inapplicable(ID, cfg.seed, "identity is not an interior point");
    };
    let p = window.poset();
    let used = interior.len();
    if p.is_beat_point(one) {
        for (k, &a) in interior.iter().enumerate() {
            for &b in &interior[k + 1..] {
                if !p.comparable(a, b) {
                    let mut t = Trace::new(o);
                    t.note("identity is a beat point");
                    t.leq(window.element(a), window.element(b));
                    t.leq(window.element(b), window.element(a));
                    let split = !p.components().iter().any(|c| c.contains(&a) && c.contains(&b));
                    let r = CheckResult::fail(ID, cfg.seed, used, t.finish());
                    return if split { r.with_note("incomparable points lie in different components") } else { r };
                }
            }
        }
        return CheckResult::pass(ID, cfg.seed, used).with_note("identity is a beat point; interior is a chain");
    }
    for &x in &interior {
        if p.is_beat_point(x) {
            let mut t = Trace::new(o);
            t.note(format!("{} is a beat point of the window; the identity is not", p.label(x)));
            for c in p.lower_covers(x).into_iter().chain(p.upper_covers(x)) {
                let (a, b) = if p.leq(c, x) { (c, x) } else { (x, c) };
                t.leq(window.element(a), window.element(b));
            }
            return CheckResult::fail(ID, cfg.seed, used, t.finish());
        }
    }
    CheckResult::pass(ID, cfg.seed, used).with_note("no interior beat points")
}

/// `1 < g < g² < ... < g^k`; the chain is the witness.
pub fn law_unbounded_height<O: GroupOracle + ?Sized>(
    o: &O,
    g: &O::Elem,
    k: u32,
    cfg: &LawConfig,
) -> Result<CheckResult, LawError> {
    const ID: &str = "unbounded_height";
    let id = o.identity();
    if !o.lt(&id, g) {
        return Err(LawError::BadParameter(format!("{} is not above the identity", o.encode(g))));
    }
    let mut t = Trace::new(o);
    let mut prev = id;
    let mut seen = std::collections::HashSet::from([o.encode(&prev)]);
    for i in 1..=k {
        let next = t.mul(&prev, g);
        t.leq(&prev, &next);
        if !o.lt(&prev, &next) || !seen.insert(o.encode(&next)) {
            t.eq(&prev, &next);
            return Ok(CheckResult::fail(ID, cfg.seed, i as usize, t.finish()));
        }
        prev = next;
    }
    Ok(CheckResult::pass(ID, cfg.seed, k as usize).with_witness(t.finish()))
}
