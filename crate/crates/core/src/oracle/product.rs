use rand::RngCore;

use super::{split_top_level, Cardinality, Covers, GroupOracle, OracleError};

/// Finite direct product with componentwise multiplication and order.
#[derive(Clone, Debug)]
pub struct ProductOracle<O> {
    factors: Vec<O>,
}

impl<O: GroupOracle> ProductOracle<O> {
    pub fn new(factors: Vec<O>) -> Self {
        assert!(!factors.is_empty(), "product needs at least one factor");
        Self { factors }
    }

    pub fn factors(&self) -> &[O] {
        &self.factors
    }

    fn zip_map(
        &self,
        a: &[O::Elem],
        b: &[O::Elem],
        f: impl Fn(&O, &O::Elem, &O::Elem) -> O::Elem,
    ) -> Vec<O::Elem> {
        self.factors.iter().zip(a.iter().zip(b)).map(|(o, (x, y))| f(o, x, y)).collect()
    }

    /// The element equal to `x` except in coordinate `i`.
    fn replace(&self, x: &[O::Elem], i: usize, v: O::Elem) -> Vec<O::Elem> {
        let mut y = x.to_vec();
        y[i] = v;
        y
    }
}

impl<O: GroupOracle> GroupOracle for ProductOracle<O> {
    type Elem = Vec<O::Elem>;

    fn name(&self) -> String {
        self.factors.iter().map(|f| f.name()).collect::<Vec<_>>().join(" × ")
    }

    fn identity(&self) -> Self::Elem {
        self.factors.iter().map(|f| f.identity()).collect()
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.zip_map(a, b, |o, x, y| o.mul(x, y))
    }

    fn inv(&self, a: &Self::Elem) -> Self::Elem {
        self.factors.iter().zip(a).map(|(o, x)| o.inv(x)).collect()
    }

    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.factors.iter().zip(a.iter().zip(b)).all(|(o, (x, y))| o.leq(x, y))
    }

    /// Raise one coordinate to one of its covers. Dense factors contribute no
    /// covers; any unsupported factor makes the product unsupported.
    fn covers_above(&self, x: &Self::Elem) -> Covers<Self::Elem> {
        let mut out = Vec::new();
        let mut all_dense = true;
        for (i, (o, xi)) in self.factors.iter().zip(x).enumerate() {
            match o.covers_above(xi) {
                Covers::Finite(cs) => {
                    all_dense = false;
                    out.extend(cs.into_iter().map(|c| self.replace(x, i, c)));
                }
                Covers::Dense => {}
                Covers::Unsupported => return Covers::Unsupported,
            }
        }
        if all_dense {
            Covers::Dense
        } else {
            Covers::Finite(out)
        }
    }

    fn covers_below(&self, x: &Self::Elem) -> Covers<Self::Elem> {
        let mut out = Vec::new();
        let mut all_dense = true;
        for (i, (o, xi)) in self.factors.iter().zip(x).enumerate() {
            match o.covers_below(xi) {
                Covers::Finite(cs) => {
                    all_dense = false;
                    out.extend(cs.into_iter().map(|c| self.replace(x, i, c)));
                }
                Covers::Dense => {}
                Covers::Unsupported => return Covers::Unsupported,
            }
        }
        if all_dense {
            Covers::Dense
        } else {
            Covers::Finite(out)
        }
    }

    fn generators(&self) -> Vec<Self::Elem> {
        let id = self.identity();
        let mut out = Vec::new();
        for (i, o) in self.factors.iter().enumerate() {
            for g in o.generators() {
                out.push(self.replace(&id, i, g));
            }
        }
        out
    }

    fn cardinality(&self) -> Cardinality {
        let cards: Vec<Cardinality> = self.factors.iter().map(|f| f.cardinality()).collect();
        if cards.contains(&Cardinality::Continuum) {
            Cardinality::Continuum
        } else if cards.contains(&Cardinality::Countable) {
            Cardinality::Countable
        } else {
            cards.iter().try_fold(1u64, |acc, c| match c {
                Cardinality::Finite(n) => acc.checked_mul(*n),
                _ => None,
            })
            .map_or(Cardinality::Countable, Cardinality::Finite)
        }
    }

    fn encode(&self, x: &Self::Elem) -> String {
        let parts: Vec<String> = self.factors.iter().zip(x).map(|(o, e)| o.encode(e)).collect();
        format!("<{}>", parts.join("|"))
    }

    fn decode(&self, s: &str) -> Result<Self::Elem, OracleError> {
        let err = || OracleError::Decode(s.to_string());
        let inner = s.trim().strip_prefix('<').and_then(|r| r.strip_suffix('>')).ok_or_else(err)?;
        let parts = split_top_level(inner, '|');
        if parts.len() != self.factors.len() {
            return Err(err());
        }
        self.factors.iter().zip(parts).map(|(o, p)| o.decode(p)).collect()
    }

    fn random_element(&self, rng: &mut dyn RngCore) -> Self::Elem {
        self.factors.iter().map(|o| o.random_element(rng)).collect()
    }
}
