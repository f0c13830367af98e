//! Structural results about Alexandroff paratopological groups as executable
//! checks.
//!
//! Each `law_*` function evaluates one statement on a window, a sample or a
//! constructed chain and returns a [`CheckResult`] whose witness can be
//! replayed through the oracle. [`run_laws`] evaluates a selection of laws on
//! a catalog entry, in parallel.

mod bounded;
mod inverse;
mod local;
mod narrow;
mod radius;
mod search;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::catalog::CatalogEntry;
use crate::check::{CheckResult, Status};
use crate::oracle::{
    check_group_axioms, check_inversion_monotone, check_translations_monotone, GroupOracle, OracleError,
    SharedOracle, SubsetSpec, Window, DEFAULT_BALL_CAP,
};
use crate::poset::PosetError;
use crate::sampling::{Sample, SampleConfig, DEFAULT_SEED};

pub use bounded::{law_feebly_bounded, law_hyperconnected, law_product_feebly_bounded, law_product_set_feebly_bounded};
pub use inverse::{law_inverse_flip, law_open_inverse_closed, law_opposite_identity, law_two_pseudocompact};
pub use local::{law_beat_dichotomy, law_homogeneity, law_no_torsion, law_unbounded_height};
pub use narrow::{law_omega_narrow, law_subordinated, law_totally_omega_narrow, SubordinatedFamily};
pub use radius::{law_antichain_cover, law_classification, law_radius_relations};
pub use search::{draw_points, random_pairs, Search};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LawError {
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("bad chain: {0}")]
    BadChain(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Poset(#[from] PosetError),
}

/// Knobs shared by all laws.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawConfig {
    /// Window depth; `None` uses the example's default.
    pub depth: Option<usize>,
    pub seed: u64,
    /// Random elements added to the depth-3 ball in samples.
    pub samples: usize,
    /// Points tested by the feeble-boundedness family.
    pub points: usize,
    /// Ball depth for witness searches.
    pub budget: usize,
    pub cap: usize,
    pub max_power: u32,
    pub height: u32,
    pub product_k: usize,
    pub antichain_cap: usize,
    pub pairs: usize,
}

impl Default for LawConfig {
    fn default() -> Self {
        Self {
            depth: None,
            seed: DEFAULT_SEED,
            samples: 200,
            points: 1000,
            budget: 4,
            cap: DEFAULT_BALL_CAP,
            max_power: 20,
            height: 10,
            product_k: 2,
            antichain_cap: 1024,
            pairs: 100,
        }
    }
}

macro_rules! law_ids {
    ($($variant:ident => $id:literal: $summary:literal,)*) => {
        /// Identifier of a law runnable by [`run_laws`].
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum LawId {
            $($variant,)*
        }

        impl LawId {
            pub const ALL: &'static [LawId] = &[$(LawId::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(LawId::$variant => $id,)*
                }
            }

            pub fn summary(self) -> &'static str {
                match self {
                    $(LawId::$variant => $summary,)*
                }
            }
        }
    };
}

law_ids! {
    GroupAxioms => "group_axioms": "identity, inverse and associativity laws on samples",
    TranslationsMonotone => "translations_monotone": "left and right translations preserve the order",
    InversionMonotone => "inversion_monotone": "inversion preserves the order (negative control)",
    InverseFlip => "inverse_flip": "1 <= x implies x^-1 <= 1",
    OppositeIdentity => "opposite_identity": "inverse of U_1 is F_1",
    OpenInverseClosed => "open_inverse_closed": "inverses of down-sets are up-sets and dually",
    NoTorsion => "no_torsion": "no element comparable to 1 has finite order",
    Homogeneity => "homogeneity": "left translation maps U_1, F_1 isomorphically onto U_x, F_x",
    BeatDichotomy => "beat_dichotomy": "identity beat point iff chain; otherwise no beat points",
    Hyperconnected => "hyperconnected": "every pair has common lower and upper bounds",
    TwoPseudocompact => "two_pseudocompact": "inverses of a decreasing chain of U_x share a point",
    FeeblyBounded => "feebly_bounded": "the example's bounded subset meets every U_x",
    ProductFeeblyBounded => "product_feebly_bounded": "products of feebly bounded subsets",
    ProductSetFeeblyBounded => "product_set_feebly_bounded": "AB is feebly bounded, with c = ab <= x",
    Subordinated => "subordinated": "{U_1} is subordinated to U_1",
    OmegaNarrow => "omega_narrow": "X = A U_1 for the countable bounded subset A",
    TotallyOmegaNarrow => "totally_omega_narrow": "totally omega-narrow iff countable",
    UnboundedHeight => "unbounded_height": "1 < g < g^2 < ... is an increasing chain",
    RadiusRelations => "radius_relations": "radius constant, <= width, product bound, antichain through 1",
    Classification => "classification": "iterated antichain join or disjoint chains",
    AntichainCover => "antichain_cover": "stars of an antichain through 1 cover the window",
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LawId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LawId::ALL.iter().copied().find(|l| l.as_str() == s).ok_or_else(|| {
            let ids: Vec<&str> = LawId::ALL.iter().map(|l| l.as_str()).collect();
            format!("unknown law `{s}`; expected one of: all, {}", ids.join(", "))
        })
    }
}

/// A law result next to the catalog's expectation for it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawOutcome {
    pub example: String,
    pub expected: Status,
    pub matched: bool,
    #[serde(flatten)]
    pub result: CheckResult,
}

/// Everything the laws of one run share.
struct Context<'o> {
    oracle: &'o SharedOracle,
    entry: &'o CatalogEntry,
    window: Window<'o, SharedOracle>,
    sample: Sample<String>,
    points: Vec<String>,
    search: Search<'o, SharedOracle>,
    cfg: &'o LawConfig,
}

/// Runs `ids` on `entry` concurrently; results come back in the order of
/// `ids`.
pub fn run_laws(entry: &CatalogEntry, ids: &[LawId], cfg: &LawConfig) -> Result<Vec<LawOutcome>, LawError> {
    let o = &entry.oracle;
    let depth = cfg.depth.unwrap_or(entry.default_depth);
    let sample_cfg = SampleConfig { seed: cfg.seed, random: cfg.samples, ..SampleConfig::default() };
    let ctx = Context {
        oracle: o,
        entry,
        window: Window::of_depth(o, depth, cfg.cap)?,
        sample: Sample::draw(o, &sample_cfg)?,
        points: draw_points(o, cfg.seed, cfg.points, cfg.cap)?,
        search: Search::new(o, entry.positive.clone(), cfg.budget, cfg.cap)?,
        cfg,
    };
    ids.par_iter()
        .map(|&id| {
            let result = run_one(&ctx, id)?;
            let expected = entry.expected.law(id.as_str());
            Ok(LawOutcome { example: o.name(), expected, matched: result.status == expected, result })
        })
        .collect()
}

fn run_one(ctx: &Context<'_>, id: LawId) -> Result<CheckResult, LawError> {
    let (o, cfg, w) = (ctx.oracle, ctx.cfg, &ctx.window);
    let e = ctx.entry;
    Ok(match id {
        LawId::GroupAxioms => check_group_axioms(o, &ctx.sample),
        LawId::TranslationsMonotone => check_translations_monotone(o, &ctx.sample),
        LawId::InversionMonotone => check_inversion_monotone(o, &ctx.sample),
        LawId::InverseFlip => law_inverse_flip(o, w, cfg),
        LawId::OppositeIdentity => law_opposite_identity(o, w, cfg),
        LawId::OpenInverseClosed => {
            let depth = cfg.depth.unwrap_or(e.default_depth).min(2);
            law_open_inverse_closed(o, &Window::of_depth(o, depth, cfg.cap)?, cfg)
        }
        LawId::NoTorsion => law_no_torsion(o, w, cfg.max_power, cfg),
        LawId::Homogeneity => {
            let mut xs = vec![e.positive.clone()];
            xs.extend(o.generators());
            let mut last = None;
            for x in &xs {
                let r = law_homogeneity(o, w, x, cfg)?;
                if !r.passed() {
                    return Ok(r);
                }
                last = Some(r);
            }
            last.expect("at least one translate")
        }
        LawId::BeatDichotomy => law_beat_dichotomy(o, w, cfg),
        LawId::Hyperconnected => {
            let pairs = random_pairs(&ctx.sample.elements, cfg.seed, cfg.pairs);
            law_hyperconnected(o, &pairs, &ctx.search, cfg)
        }
        LawId::TwoPseudocompact => {
            let chain: Vec<String> = (0..4).rev().map(|k| o.pow(&e.positive, k)).collect();
            law_two_pseudocompact(o, &chain, cfg)?
        }
        LawId::FeeblyBounded => law_feebly_bounded(o, &e.bounded, &ctx.points, Some(&ctx.search), cfg),
        LawId::ProductFeeblyBounded => {
            let k = cfg.product_k.max(1);
            law_product_feebly_bounded(vec![o.clone(); k], vec![e.bounded.clone(); k], cfg.points, cfg)
        }
        LawId::ProductSetFeeblyBounded => law_product_set_feebly_bounded(o, &e.bounded, &e.bounded, &ctx.points, cfg),
        LawId::Subordinated => {
            let u1 = SubsetSpec::down_set_of(o.clone(), o.identity());
            let gamma = SubordinatedFamily { neighborhoods: vec![u1.clone()], countable: true };
            law_subordinated(o, &gamma, &u1, &ctx.sample.elements, w.elements(), cfg)
        }
        LawId::OmegaNarrow => law_omega_narrow(o, &e.bounded, &ctx.points, cfg),
        LawId::TotallyOmegaNarrow => law_totally_omega_narrow(o, cfg),
        LawId::UnboundedHeight => law_unbounded_height(o, &e.positive, cfg.height, cfg)?,
        LawId::RadiusRelations => law_radius_relations(o, w, &ctx.sample.elements, cfg),
        LawId::Classification => law_classification(o, w, cfg),
        LawId::AntichainCover => law_antichain_cover(o, w, cfg),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn law_ids_round_trip() {
        for &id in LawId::ALL {
            assert_eq!(id.as_str().parse::<LawId>().unwrap(), id);
        }
        assert!("nosuch".parse::<LawId>().unwrap_err().contains("group_axioms"));
        assert_eq!(LawId::ALL.len(), 21);
    }
}
