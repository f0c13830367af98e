//! Outcomes of law checks and their replayable witness traces.

use serde::{Deserialize, Serialize};

use crate::oracle::{GroupOracle, OracleError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inapplicable,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inapplicable => "inapplicable",
        })
    }
}

/// One oracle-level fact, over canonical element encodings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "fact", rename_all = "snake_case")]
pub enum Fact {
    Leq { lhs: String, rhs: String },
    NotLeq { lhs: String, rhs: String },
    Equal { lhs: String, rhs: String },
    NotEqual { lhs: String, rhs: String },
    /// `lhs · rhs = result`
    Product { lhs: String, rhs: String, result: String },
    /// `of⁻¹ = result`
    Inverse { of: String, result: String },
    /// Context that is not re-checkable through the oracle alone.
    Note { text: String },
}

impl Fact {
    pub fn note(text: impl Into<String>) -> Self {
        Fact::Note { text: text.into() }
    }

    /// Re-evaluates the fact with raw oracle calls.
    pub fn replay<O: GroupOracle + ?Sized>(&self, o: &O) -> Result<bool, OracleError> {
        Ok(match self {
            Fact::Leq { lhs, rhs } => o.leq(&o.decode(lhs)?, &o.decode(rhs)?),
            Fact::NotLeq { lhs, rhs } => !o.leq(&o.decode(lhs)?, &o.decode(rhs)?),
            Fact::Equal { lhs, rhs } => o.decode(lhs)? == o.decode(rhs)?,
            Fact::NotEqual { lhs, rhs } => o.decode(lhs)? != o.decode(rhs)?,
            Fact::Product { lhs, rhs, result } => {
                o.mul(&o.decode(lhs)?, &o.decode(rhs)?) == o.decode(result)?
            }
            Fact::Inverse { of, result } => o.inv(&o.decode(of)?) == o.decode(result)?,
            Fact::Note { .. } => true,
        })
    }
}

impl std::fmt::Display for Fact {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Fact::Leq { lhs, rhs } => write!(f, "{lhs} <= {rhs}"),
            Fact::NotLeq { lhs, rhs } => write!(f, "not {lhs} <= {rhs}"),
            Fact::Equal { lhs, rhs } => write!(f, "{lhs} = {rhs}"),
            Fact::NotEqual { lhs, rhs } => write!(f, "{lhs} != {rhs}"),
            Fact::Product { lhs, rhs, result } => write!(f, "{lhs} · {rhs} = {result}"),
            Fact::Inverse { of, result } => write!(f, "{of}^-1 = {result}"),
            Fact::Note { text } => f.write_str(text),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub law_id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<Fact>>,
    pub seed: u64,
    pub samples_used: usize,
    #[serde(skip_serializing_if = "String::is_empty", default)]
    pub note: String,
}

impl CheckResult {
    pub fn pass(law_id: &str, seed: u64, samples_used: usize) -> Self {
        Self {
            law_id: law_id.to_string(),
            status: Status::Pass,
            witness: None,
            seed,
            samples_used,
            note: String::new(),
        }
    }

    pub fn fail(law_id: &str, seed: u64, samples_used: usize, witness: Vec<Fact>) -> Self {
        Self { status: Status::Fail, witness: Some(witness), ..Self::pass(law_id, seed, samples_used) }
    }

    pub fn inapplicable(law_id: &str, seed: u64, note: impl Into<String>) -> Self {
        Self {
            status: Status::Inapplicable,
            note: note.into(),
            ..Self::pass(law_id, seed, 0)
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    pub fn with_witness(mut self, witness: Vec<Fact>) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    /// Replays every fact of the witness through `o`. An absent witness
    /// replays trivially.
    pub fn replay<O: GroupOracle + ?Sized>(&self, o: &O) -> Result<bool, OracleError> {
        for fact in self.witness.iter().flatten() {
            if !fact.replay(o)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Records oracle answers as facts while a check computes them.
pub struct Trace<'o, O: GroupOracle + ?Sized> {
    oracle: &'o O,
    facts: Vec<Fact>,
}

impl<'o, O: GroupOracle + ?Sized> Trace<'o, O> {
    pub fn new(oracle: &'o O) -> Self {
        Self { oracle, facts: Vec::new() }
    }

    pub fn leq(&mut self, a: &O::Elem, b: &O::Elem) -> bool {
        let holds = self.oracle.leq(a, b);
        let (lhs, rhs) = (self.oracle.encode(a), self.oracle.encode(b));
        self.facts.push(if holds { Fact::Leq { lhs, rhs } } else { Fact::NotLeq { lhs, rhs } });
        holds
    }

    pub fn eq(&mut self, a: &O::Elem, b: &O::Elem) -> bool {
        let holds = a == b;
        let (lhs, rhs) = (self.oracle.encode(a), self.oracle.encode(b));
        self.facts.push(if holds { Fact::Equal { lhs, rhs } } else { Fact::NotEqual { lhs, rhs } });
        holds
    }

    /// `a < b`, recorded as an order fact and an (in)equality fact.
    pub fn lt(&mut self, a: &O::Elem, b: &O::Elem) -> bool {
        let le = self.leq(a, b);
        let eq = self.eq(a, b);
        le && !eq
    }

    pub fn mul(&mut self, a: &O::Elem, b: &O::Elem) -> O::Elem {
        let c = self.oracle.mul(a, b);
        self.facts.push(Fact::Product {
            lhs: self.oracle.encode(a),
            rhs: self.oracle.encode(b),
            result: self.oracle.encode(&c),
        });
        c
    }

    pub fn inv(&mut self, a: &O::Elem) -> O::Elem {
        let b = self.oracle.inv(a);
        self.facts.push(Fact::Inverse { of: self.oracle.encode(a), result: self.oracle.encode(&b) });
        b
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.facts.push(Fact::note(text));
    }

    pub fn clear(&mut self) {
        self.facts.clear();
    }

    pub fn finish(self) -> Vec<Fact> {
        self.facts
    }

    pub fn take(&mut self) -> Vec<Fact> {
        std::mem::take(&mut self.facts)
    }
}
