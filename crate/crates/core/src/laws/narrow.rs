//! Subordinated families and narrowness.

use super::LawConfig;
use crate::check::{CheckResult, Fact, Trace};
use crate::oracle::{GroupOracle, SubsetSpec};

/// A family `γ` of identity neighbourhoods, each a down-set containing `1`.
#[derive(Clone, Debug)]
pub struct SubordinatedFamily<E> {
    pub neighborhoods: Vec<SubsetSpec<E>>,
    pub countable: bool,
}

impl<E: Clone + PartialEq + Send + Sync + 'static> SubordinatedFamily<E> {
    /// Names of members that do not contain the identity or are not
    /// down-closed on `sample`.
    pub fn defects<O: GroupOracle<Elem = E> + ?Sized>(&self, o: &O, sample: &[E]) -> Vec<String> {
        let id = o.identity();
        let mut out = Vec::new();
        for v in &self.neighborhoods {
            if !v.contains(&id) {
                out.push(format!("{} misses the identity", v.name));
            } else if sample
                .iter()
                .any(|a| v.contains(a) && sample.iter().any(|b| o.leq(b, a) && !v.contains(b)))
            {
                out.push(format!("{} is not down-closed", v.name));
            }
        }
        out
    }
}

/// For every sampled `x` some `V ∈ γ` has `x V x⁻¹ ⊆ U` on the sampled
/// members `vs` of `V`.
pub fn law_subordinated<O: GroupOracle + ?Sized>(
    o: &O,
    gamma: &SubordinatedFamily<O::Elem>,
    u: &SubsetSpec<O::Elem>,
    xs: &[O::Elem],
    vs: &[O::Elem],
    cfg: &LawConfig,
) -> CheckResult {
    const ID: &str = "subordinated";
    let mut used = 0;
    for x in xs {
        let xi = o.inv(x);
        let mut refutations = Vec::new();
        let mut found = false;
        for nb in &gamma.neighborhoods {
            let bad = vs.iter().filter(|v| nb.contains(v)).find(|v| {
                used += 1;
                !u.contains(&o.mul(&o.mul(x, v), &xi))
            });
            match bad {
                None => {
                    found = true;
                    break;
                }
                Some(v) => {
                    let mut t = Trace::new(o);
                    let xv = t.mul(x, v);
                    let xi = t.inv(x);
                    let c = t.mul(&xv, &xi);
                    t.note(format!("{} ∈ {} but {} ∉ {}", o.encode(v), nb.name, o.encode(&c), u.name));
                    refutations.extend(t.finish());
                }
            }
        }
        if !found {
            return CheckResult::fail(ID, cfg.seed, used, refutations);
        }
    }
    CheckResult::pass(ID, cfg.seed, used)
}

/// `X = A·U_1`: each sampled `x` equals `a·u` with `a ∈ A` above `x` (from
/// `A`'s upper witness) and `u = a⁻¹x <= 1`. `A` is taken to be countable.
pub fn law_omega_narrow<O: GroupOracle + ?Sized>(
    o: &O,
    a_set: &SubsetSpec<O::Elem>,
    xs: &[O::Elem],
    cfg: &LawConfig,
) -> CheckResult {
    const ID: &str = "omega_narrow";
    if !a_set.has_upper_witness() {
        return CheckResult::inapplicable(ID, cfg.seed, format!("{} has no upper witness", a_set.name));
    }
    let id = o.identity();
    for (i, x) in xs.iter().enumerate() {
        let Some(Some(a)) = a_set.upper_witness(x) else {
            let w = vec![Fact::note(format!("{} has no member above {}", a_set.name, o.encode(x)))];
            return CheckResult::fail(ID, cfg.seed, i + 1, w);
        };
        let mut t = Trace::new(o);
        let ai = t.inv(&a);
        let u = t.mul(&ai, x);
        let back = t.mul(&a, &u);
        if !(t.leq(&u, &id) && t.eq(&back, x) && a_set.contains(&a)) {
            return CheckResult::fail(ID, cfg.seed, i + 1, t.finish());
        }
    }
    CheckResult::pass(ID, cfg.seed, xs.len()).with_note(format!("A = {}", a_set.name))
}

/// Totally ω-narrow exactly when the group is countable; read off the
/// oracle's cardinality tag.
pub fn law_totally_omega_narrow<O: GroupOracle + ?Sized>(o: &O, cfg: &LawConfig) -> CheckResult {
    const ID: &str = "totally_omega_narrow";
    let card = o.cardinality();
    if card.is_countable() {
        CheckResult::pass(ID, cfg.seed, 1).with_note(format!("cardinality {card:?}"))
    } else {
        CheckResult::fail(ID, cfg.seed, 1, vec![Fact::note(format!("cardinality tag {card:?}: not countable"))])
    }
}
