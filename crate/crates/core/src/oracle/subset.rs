use std::fmt;
use std::sync::Arc;

use super::GroupOracle;

type Predicate<E> = Arc<dyn Fn(&E) -> bool + Send + Sync>;
type WitnessFn<E> = Arc<dyn Fn(&E) -> Option<E> + Send + Sync>;

/// A subset of an oracle's group, given by membership plus optional
/// witness functions.
///
/// `lower_witness(x)` returns a member `b <= x`; `None` is a claim that no
/// member lies below `x`. `upper_witness` is the dual.
#[derive(Clone)]
pub struct SubsetSpec<E> {
    pub name: String,
    member: Predicate<E>,
    lower_witness: Option<WitnessFn<E>>,
    upper_witness: Option<WitnessFn<E>>,
    finite: Option<Vec<E>>,
}

impl<E> fmt::Debug for SubsetSpec<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SubsetSpec")
            .field("name", &self.name)
            .field("lower_witness", &self.lower_witness.is_some())
            .field("upper_witness", &self.upper_witness.is_some())
            .field("finite", &self.finite.as_ref().map(Vec::len))
            .finish()
    }
}

impl<E> SubsetSpec<E> {
    pub fn contains(&self, x: &E) -> bool {
        (self.member)(x)
    }

    pub fn lower_witness(&self, x: &E) -> Option<Option<E>> {
        self.lower_witness.as_ref().map(|w| w(x))
    }

    pub fn upper_witness(&self, x: &E) -> Option<Option<E>> {
        self.upper_witness.as_ref().map(|w| w(x))
    }

    pub fn has_lower_witness(&self) -> bool {
        self.lower_witness.is_some()
    }

    pub fn has_upper_witness(&self) -> bool {
        self.upper_witness.is_some()
    }

    pub fn finite_elements(&self) -> Option<&[E]> {
        self.finite.as_deref()
    }
}

impl<E: Clone + PartialEq + Send + Sync + 'static> SubsetSpec<E> {
    pub fn new(name: impl Into<String>, member: impl Fn(&E) -> bool + Send + Sync + 'static) -> Self {
        Self {
            name: name.into(),
            member: Arc::new(member),
            lower_witness: None,
            upper_witness: None,
            finite: None,
        }
    }

    /// An explicitly listed finite subset.
    pub fn finite(name: impl Into<String>, elems: Vec<E>) -> Self {
        let list = elems.clone();
        let mut s = Self::new(name, move |x| list.contains(x));
        s.finite = Some(elems);
        s
    }

    pub fn with_lower_witness(mut self, w: impl Fn(&E) -> Option<E> + Send + Sync + 'static) -> Self {
        self.lower_witness = Some(Arc::new(w));
        self
    }

    pub fn with_upper_witness(mut self, w: impl Fn(&E) -> Option<E> + Send + Sync + 'static) -> Self {
        self.upper_witness = Some(Arc::new(w));
        self
    }

    /// `U_center` in the oracle's order.
    pub fn down_set_of<O>(oracle: O, center: E) -> Self
    where
        O: GroupOracle<Elem = E> + 'static,
    {
        let name = format!("U_{}", oracle.encode(&center));
        let c = center.clone();
        Self::new(name, move |x| oracle.leq(x, &center)).with_lower_witness(move |_| Some(c.clone()))
    }

    /// `F_center` in the oracle's order.
    pub fn up_set_of<O>(oracle: O, center: E) -> Self
    where
        O: GroupOracle<Elem = E> + 'static,
    {
        let name = format!("F_{}", oracle.encode(&center));
        let c = center.clone();
        Self::new(name, move |x| oracle.leq(&center, x)).with_upper_witness(move |_| Some(c.clone()))
    }

    /// The same subset over canonical encodings of `oracle`.
    pub fn encoded<O>(self, oracle: O) -> SubsetSpec<String>
    where
        O: GroupOracle<Elem = E> + Clone + 'static,
    {
        let dec = {
            let o = oracle.clone();
            move |s: &String| o.decode(s).ok()
        };
        let member = {
            let dec = dec.clone();
            let m = self.member.clone();
            move |s: &String| dec(s).is_some_and(|x| m(&x))
        };
        let lift = |w: Option<WitnessFn<E>>| {
            w.map(|w| {
                let dec = dec.clone();
                let o = oracle.clone();
                Arc::new(move |s: &String| dec(s).and_then(|x| w(&x)).map(|b| o.encode(&b)))
                    as WitnessFn<String>
            })
        };
        SubsetSpec {
            name: self.name,
            member: Arc::new(member),
            lower_witness: lift(self.lower_witness),
            upper_witness: lift(self.upper_witness),
            finite: self.finite.map(|v| v.iter().map(|x| oracle.encode(x)).collect()),
        }
    }

    /// Componentwise product `B_1 × ... × B_k`; witnesses exist when every
    /// factor has them.
    pub fn product(factors: Vec<SubsetSpec<E>>) -> SubsetSpec<Vec<E>> {
        let name = factors.iter().map(|f| f.name.as_str()).collect::<Vec<_>>().join(" × ");
        let fs = Arc::new(factors);
        let member = {
            let fs = fs.clone();
            move |x: &Vec<E>| x.len() == fs.len() && fs.iter().zip(x).all(|(f, c)| f.contains(c))
        };
        let lower = fs.iter().all(|f| f.has_lower_witness()).then(|| {
            let fs = fs.clone();
            Arc::new(move |x: &Vec<E>| {
                fs.iter().zip(x).map(|(f, c)| f.lower_witness(c).flatten()).collect()
            }) as WitnessFn<Vec<E>>
        });
        let upper = fs.iter().all(|f| f.has_upper_witness()).then(|| {
            let fs = fs.clone();
            Arc::new(move |x: &Vec<E>| {
                fs.iter().zip(x).map(|(f, c)| f.upper_witness(c).flatten()).collect()
            }) as WitnessFn<Vec<E>>
        });
        SubsetSpec {
            name,
            member: Arc::new(member),
            lower_witness: lower,
            upper_witness: upper,
            finite: None,
        }
    }
}
