//! Executable laws.
//!
//! Every law is a predicate over a fixed shape of inputs (nothing, elements,
//! subsets, filters, or a mix). [`check_law`] runs it over all instances of
//! that shape on one lattice, sets coming from a [`SubsetUniverse`], and
//! reports the first failing instance together with the sub-expressions
//! that were evaluated on it. Conditional laws skip instances whose
//! hypothesis is false; a law with no remaining instance is reported as
//! `hypothesis_never_met` rather than `holds`.

mod catalog;
pub mod query;
pub mod search;
mod universe;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::filters::Filter;
use crate::lattice::{build_lattice, BuildError, Lattice, LatticeSpec};
use crate::set::{Element, ElementSet};

pub use query::{Predicate, Query, QueryError};
pub use search::{
    search_counterexample, SearchError, SearchHit, SearchMode, SearchReport, SearchTarget, Witness,
};
pub use universe::{SubsetUniverse, UniverseLevel, DEFAULT_POWERSET_MAX, POWERSET_HARD_MAX};

/// A value bound to a law variable or sub-expression.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Value {
    Elem(Element),
    Set(ElementSet),
    Flag(bool),
}

pub type Bindings = Vec<(&'static str, Value)>;

/// Result of one law instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// The hypothesis is false on this instance.
    Vacuous,
    Holds,
    /// The conclusion failed; the bindings are evaluated sub-expressions.
    Fails(Bindings),
}

/// Input shape of a law, i.e. what it quantifies over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Lattice,
    Elem,
    ElemPair,
    Set,
    SetPair,
    ElemSet,
    Filter,
    FilterPair,
    FilterElem,
    FilterElemPair,
}

impl Shape {
    /// Variable names, in binding order.
    pub fn variables(self) -> &'static [&'static str] {
        match self {
            Shape::Lattice => &[],
            Shape::Elem => &["x"],
            Shape::ElemPair => &["x", "y"],
            Shape::Set => &["A"],
            Shape::SetPair => &["A", "B"],
            Shape::ElemSet => &["a", "B"],
            Shape::Filter => &["F"],
            Shape::FilterPair => &["F", "G"],
            Shape::FilterElem => &["F", "a"],
            Shape::FilterElemPair => &["F", "a", "b"],
        }
    }
}

#[derive(Clone, Copy)]
pub(crate) enum Check {
    Lattice(fn(&Lattice) -> Outcome),
    Elem(fn(&Lattice, Element) -> Outcome),
    ElemPair(fn(&Lattice, Element, Element) -> Outcome),
    Set(fn(&Lattice, ElementSet) -> Outcome),
    SetPair(fn(&Lattice, ElementSet, ElementSet) -> Outcome),
    ElemSet(fn(&Lattice, Element, ElementSet) -> Outcome),
    Filter(fn(&Lattice, &Filter) -> Outcome),
    FilterPair(fn(&Lattice, &Filter, &Filter) -> Outcome),
    FilterElem(fn(&Lattice, &Filter, Element) -> Outcome),
    FilterElemPair(fn(&Lattice, &Filter, Element, Element) -> Outcome),
}

/// One catalog entry.
pub struct Law {
    pub id: &'static str,
    /// The statement as a TeX formula.
    pub anchor: &'static str,
    /// Whether the law is an implication whose hypothesis can be false.
    pub conditional: bool,
    pub(crate) check: Check,
}

impl std::fmt::Debug for Law {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Law")
            .field("id", &self.id)
            .field("shape", &self.shape())
            .field("conditional", &self.conditional)
            .finish()
    }
}

impl Law {
    pub fn shape(&self) -> Shape {
        match self.check {
            Check::Lattice(_) => Shape::Lattice,
            Check::Elem(_) => Shape::Elem,
            Check::ElemPair(_) => Shape::ElemPair,
            Check::Set(_) => Shape::Set,
            Check::SetPair(_) => Shape::SetPair,
            Check::ElemSet(_) => Shape::ElemSet,
            Check::Filter(_) => Shape::Filter,
            Check::FilterPair(_) => Shape::FilterPair,
            Check::FilterElem(_) => Shape::FilterElem,
            Check::FilterElemPair(_) => Shape::FilterElemPair,
        }
    }

    /// Evaluates one instance. Filter inputs are given as carriers and must
    /// be filters of `l`.
    pub fn eval(&self, l: &Lattice, inputs: &[Value]) -> Result<Outcome, InstanceError> {
        let want = self.shape().variables();
        if inputs.len() != want.len() {
            return Err(InstanceError::Arity {
                expected: want.len(),
                got: inputs.len(),
            });
        }
        let elem = |i: usize| match inputs[i] {
            Value::Elem(x) if x < l.len() => Ok(x),
            _ => Err(InstanceError::Kind(want[i])),
        };
        let set = |i: usize| match inputs[i] {
            Value::Set(s) if s.is_subset(l.all()) => Ok(s),
            _ => Err(InstanceError::Kind(want[i])),
        };
        let filter = |i: usize| {
            let s = set(i)?;
            Filter::from_set(l, s).map_err(|_| InstanceError::Kind(want[i]))
        };
        Ok(match self.check {
            Check::Lattice(f) => f(l),
            Check::Elem(f) => f(l, elem(0)?),
            Check::ElemPair(f) => f(l, elem(0)?, elem(1)?),
            Check::Set(f) => f(l, set(0)?),
            Check::SetPair(f) => f(l, set(0)?, set(1)?),
            Check::ElemSet(f) => f(l, elem(0)?, set(1)?),
            Check::Filter(f) => f(l, &filter(0)?),
            Check::FilterPair(f) => f(l, &filter(0)?, &filter(1)?),
            Check::FilterElem(f) => f(l, &filter(0)?, elem(1)?),
            Check::FilterElemPair(f) => f(l, &filter(0)?, elem(1)?, elem(2)?),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("expected {expected} inputs, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("binding `{0}` has the wrong kind or is out of range")]
    Kind(&'static str),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LawError {
    #[error("unknown law `{0}`")]
    UnknownLaw(String),
}

/// Every law, in catalog order.
pub fn law_catalog() -> &'static [Law] {
    catalog::CATALOG
}

pub fn lookup(id: &str) -> Result<&'static Law, LawError> {
    catalog::CATALOG
        .iter()
        .find(|law| law.id == id)
        .ok_or_else(|| LawError::UnknownLaw(id.to_string()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    Fails,
    HypothesisNeverMet,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::HypothesisNeverMet => "hypothesis_never_met",
        }
    }
}

/// A binding as it appears in JSON: a label, a list of labels, or a flag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BindingValue {
    Element(String),
    Set(Vec<String>),
    Flag(bool),
}

impl BindingValue {
    fn from_value(l: &Lattice, v: Value) -> Self {
        match v {
            Value::Elem(x) => BindingValue::Element(l.label(x).to_string()),
            Value::Set(s) => BindingValue::Set(s.iter().map(|x| l.label(x).to_string()).collect()),
            Value::Flag(b) => BindingValue::Flag(b),
        }
    }

    fn to_value(&self, l: &Lattice) -> Option<Value> {
        match self {
            BindingValue::Element(label) => l.index_of(label).map(Value::Elem),
            BindingValue::Set(labels) => labels
                .iter()
                .map(|s| l.index_of(s))
                .collect::<Option<ElementSet>>()
                .map(Value::Set),
            BindingValue::Flag(b) => Some(Value::Flag(*b)),
        }
    }
}

/// A failing instance, self-contained: the lattice and every binding.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub lattice: LatticeSpec,
    pub bindings: BTreeMap<String, BindingValue>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawVerdict {
    pub law: String,
    pub status: Status,
    pub instances_checked: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

struct Tally {
    checked: u64,
}

type Failure = (Vec<Value>, Bindings);

impl Tally {
    fn see(&mut self, out: Outcome, inputs: impl FnOnce() -> Vec<Value>) -> Option<Failure> {
        match out {
            Outcome::Vacuous => None,
            Outcome::Holds => {
                self.checked += 1;
                None
            }
            Outcome::Fails(b) => {
                self.checked += 1;
                Some((inputs(), b))
            }
        }
    }
}

macro_rules! probe {
    ($tally:ident, $out:expr, $inputs:expr) => {
        if let Some(failure) = $tally.see($out, || $inputs) {
            return ($tally.checked, Some(failure));
        }
    };
}

fn drive(law: &Law, l: &Lattice, universe: &SubsetUniverse) -> (u64, Option<Failure>) {
    use Value::{Elem, Set};
    let mut t = Tally { checked: 0 };
    let elems = l.elements();
    match law.check {
        Check::Lattice(f) => probe!(t, f(l), vec![]),
        Check::Elem(f) => {
            for x in elems {
                probe!(t, f(l, x), vec![Elem(x)]);
            }
        }
        Check::ElemPair(f) => {
            for x in elems.clone() {
                for y in elems.clone() {
                    probe!(t, f(l, x, y), vec![Elem(x), Elem(y)]);
                }
            }
        }
        Check::Set(f) => {
            for a in universe.sets(l) {
                probe!(t, f(l, a), vec![Set(a)]);
            }
        }
        Check::SetPair(f) => {
            let sets = universe.sets(l);
            for &a in &sets {
                for &b in &sets {
                    probe!(t, f(l, a, b), vec![Set(a), Set(b)]);
                }
            }
        }
        Check::ElemSet(f) => {
            let sets = universe.sets(l);
            for x in elems {
                for &b in &sets {
                    probe!(t, f(l, x, b), vec![Elem(x), Set(b)]);
                }
            }
        }
        Check::Filter(f) => {
            for fl in l.all_filters() {
                probe!(t, f(l, &fl), vec![Set(fl.carrier())]);
            }
        }
        Check::FilterPair(f) => {
            let filters = l.all_filters();
            for a in &filters {
                for b in &filters {
                    probe!(t, f(l, a, b), vec![Set(a.carrier()), Set(b.carrier())]);
                }
            }
        }
        Check::FilterElem(f) => {
            for fl in l.all_filters() {
                for x in elems.clone() {
                    probe!(t, f(l, &fl, x), vec![Set(fl.carrier()), Elem(x)]);
                }
            }
        }
        Check::FilterElemPair(f) => {
            for fl in l.all_filters() {
                for x in elems.clone() {
                    for y in elems.clone() {
                        probe!(
                            t,
                            f(l, &fl, x, y),
                            vec![Set(fl.carrier()), Elem(x), Elem(y)]
                        );
                    }
                }
            }
        }
    }
    (t.checked, None)
}

/// Checks one law on every instance drawn from `l` and `universe`.
pub fn check_law(l: &Lattice, id: &str, universe: &SubsetUniverse) -> Result<LawVerdict, LawError> {
    Ok(run_law(l, lookup(id)?, universe))
}

pub fn run_law(l: &Lattice, law: &Law, universe: &SubsetUniverse) -> LawVerdict {
    let (checked, failure) = drive(law, l, universe);
    let (status, counterexample) = match failure {
        Some((inputs, evidence)) => {
            let names = law.shape().variables().iter().copied();
            let bindings = names
                .zip(inputs)
                .chain(evidence)
                .map(|(k, v)| (k.to_string(), BindingValue::from_value(l, v)))
                .collect();
            let cx = Counterexample {
                lattice: l.to_spec(),
                bindings,
            };
            (Status::Fails, Some(cx))
        }
        None if checked == 0 => (Status::HypothesisNeverMet, None),
        None => (Status::Holds, None),
    };
    LawVerdict {
        law: law.id.to_string(),
        status,
        instances_checked: checked,
        counterexample,
    }
}

/// Every catalog law, in catalog order.
pub fn check_all(l: &Lattice, universe: &SubsetUniverse) -> Vec<LawVerdict> {
    catalog::CATALOG
        .iter()
        .map(|law| run_law(l, law, universe))
        .collect()
}

#[derive(Debug, Error)]
pub enum RecheckError {
    #[error(transparent)]
    Law(#[from] LawError),
    #[error("counterexample lattice is invalid: {0}")]
    Build(#[from] BuildError),
    #[error("counterexample has no binding for `{0}`")]
    MissingBinding(&'static str),
    #[error("binding `{0}` does not name elements of the lattice")]
    BadBinding(&'static str),
    #[error(transparent)]
    Instance(#[from] InstanceError),
}

/// Re-evaluates a counterexample from its serialized form; `true` when the
/// law still fails on it.
pub fn recheck(law_id: &str, cx: &Counterexample) -> Result<bool, RecheckError> {
    let law = lookup(law_id)?;
    let l = build_lattice(&cx.lattice)?;
    let inputs = law
        .shape()
        .variables()
        .iter()
        .map(|&name| {
            let b = cx
                .bindings
                .get(name)
                .ok_or(RecheckError::MissingBinding(name))?;
            b.to_value(&l).ok_or(RecheckError::BadBinding(name))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(matches!(law.eval(&l, &inputs)?, Outcome::Fails(_)))
}
