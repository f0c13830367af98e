//! Sample-based checks of the defining properties of an ordered group.

use rand::Rng;

use super::GroupOracle;
use crate::check::{CheckResult, Fact, Trace};
use crate::sampling::{rng, Sample};

/// Left and right translations preserve the order on every sampled pair.
/// For the product order this is the same as monotonicity of `m`.
pub fn check_translations_monotone<O: GroupOracle + ?Sized>(
    o: &O,
    sample: &Sample<O::Elem>,
) -> CheckResult {
    const ID: &str = "translations_monotone";
    let mut used = 0;
    for (a, b) in &sample.pairs {
        for g in &sample.multipliers {
            used += 1;
            let mut t = Trace::new(o);
            if !t.leq(a, b) {
                continue;
            }
            let (ga, gb) = (t.mul(g, a), t.mul(g, b));
            if !t.leq(&ga, &gb) {
                return CheckResult::fail(ID, sample.seed, used, t.finish())
                    .with_note("left translation reverses or breaks a relation");
            }
            t.clear();
            t.leq(a, b);
            let (ag, bg) = (t.mul(a, g), t.mul(b, g));
            if !t.leq(&ag, &bg) {
                return CheckResult::fail(ID, sample.seed, used, t.finish())
                    .with_note("right translation reverses or breaks a relation");
            }
        }
    }
    CheckResult::pass(ID, sample.seed, used)
}

/// `a <= b ⟹ a⁻¹ <= b⁻¹`. Fails on every non-discrete example, which is
/// exactly why none of them is a topological group.
pub fn check_inversion_monotone<O: GroupOracle + ?Sized>(o: &O, sample: &Sample<O::Elem>) -> CheckResult {
    const ID: &str = "inversion_monotone";
    for (used, (a, b)) in sample.pairs.iter().enumerate() {
        let mut t = Trace::new(o);
        if !t.leq(a, b) {
            continue;
        }
        let (ia, ib) = (t.inv(a), t.inv(b));
        if !t.leq(&ia, &ib) {
            return CheckResult::fail(ID, sample.seed, used + 1, t.finish());
        }
    }
    CheckResult::pass(ID, sample.seed, sample.pairs.len())
}

/// Identity and inverse laws on every sampled element, associativity on
/// seeded random triples.
pub fn check_group_axioms<O: GroupOracle + ?Sized>(o: &O, sample: &Sample<O::Elem>) -> CheckResult {
    const ID: &str = "group_axioms";
    const TRIPLES: usize = 500;
    let id = o.identity();
    let mut used = 0;
    for x in &sample.elements {
        used += 1;
        let mut t = Trace::new(o);
        let (l, r) = (t.mul(&id, x), t.mul(x, &id));
        if !(t.eq(&l, x) && t.eq(&r, x)) {
            return CheckResult::fail(ID, sample.seed, used, t.finish()).with_note("identity law");
        }
        t.clear();
        let xi = t.inv(x);
        let (p, q) = (t.mul(x, &xi), t.mul(&xi, x));
        if !(t.eq(&p, &id) && t.eq(&q, &id)) {
            return CheckResult::fail(ID, sample.seed, used, t.finish()).with_note("inverse law");
        }
    }
    let n = sample.elements.len();
    if n > 0 {
        let mut rng = rng(sample.seed ^ 0xa55a);
        for _ in 0..TRIPLES {
            used += 1;
            let e = &sample.elements;
            let (a, b, c) = (&e[rng.gen_range(0..n)], &e[rng.gen_range(0..n)], &e[rng.gen_range(0..n)]);
            let mut t = Trace::new(o);
            let ab = t.mul(a, b);
            let left = t.mul(&ab, c);
            let bc = t.mul(b, c);
            let right = t.mul(a, &bc);
            if !t.eq(&left, &right) {
                return CheckResult::fail(ID, sample.seed, used, t.finish()).with_note("associativity");
            }
        }
    }
    CheckResult::pass(ID, sample.seed, used)
}

/// `f(ab) = f(a)f(b)` on sampled pairs and `a <= b ⟹ f(a) <= f(b)` on
/// sampled comparable pairs. Witness facts live in `dst`; source elements
/// appear as notes.
pub fn check_homomorphism<S, D, F>(f: F, src: &S, dst: &D, sample: &Sample<S::Elem>) -> CheckResult
where
    S: GroupOracle + ?Sized,
    D: GroupOracle + ?Sized,
    F: Fn(&S::Elem) -> D::Elem,
{
    const ID: &str = "homomorphism";
    let n = sample.elements.len();
    let mut used = 0;
    if n > 0 {
        let mut rng = rng(sample.seed ^ 0x0b0b);
        for _ in 0..4 * n {
            used += 1;
            let a = &sample.elements[rng.gen_range(0..n)];
            let b = &sample.elements[rng.gen_range(0..n)];
            let ab = src.mul(a, b);
            let mut t = Trace::new(dst);
            let (fa, fb, fab) = (f(a), f(b), f(&ab));
            let prod = t.mul(&fa, &fb);
            if !t.eq(&fab, &prod) {
                let mut w = vec![Fact::note(format!(
                    "source: {} · {} = {}",
                    src.encode(a),
                    src.encode(b),
                    src.encode(&ab)
                ))];
                w.extend(t.finish());
                return CheckResult::fail(ID, sample.seed, used, w).with_note("not multiplicative");
            }
        }
    }
    for (a, b) in &sample.pairs {
        used += 1;
        if !src.leq(a, b) {
            continue;
        }
        let mut t = Trace::new(dst);
        let (fa, fb) = (f(a), f(b));
        if !t.leq(&fa, &fb) {
            let mut w = vec![Fact::note(format!("source: {} <= {}", src.encode(a), src.encode(b)))];
            w.extend(t.finish());
            return CheckResult::fail(ID, sample.seed, used, w)
                .with_note("multiplicative, but not order-preserving");
        }
    }
    CheckResult::pass(ID, sample.seed, used)
}
