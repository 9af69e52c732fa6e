//! Finite bounded lattices: validation, order, meet/join tables and the
//! set-level comparisons every other module is built on.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ops::OperatorTables;
use crate::set::{Element, ElementSet, MAX_ELEMENTS};

/// External description of a lattice: labels plus Hasse-diagram covers,
/// lower element first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeSpec {
    pub name: String,
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
}

impl LatticeSpec {
    pub fn new<S: Into<String>>(name: S, elements: &[&str], covers: &[(&str, &str)]) -> Self {
        LatticeSpec {
            name: name.into(),
            elements: elements.iter().map(|s| s.to_string()).collect(),
            covers: covers
                .iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect(),
        }
    }

    /// Checks the label-level invariants (distinct labels, known cover
    /// endpoints, no reflexive covers) and resolves covers to indices.
    pub fn resolve(&self) -> Result<Vec<(Element, Element)>, BuildError> {
        let mut index = HashMap::with_capacity(self.elements.len());
        for (i, label) in self.elements.iter().enumerate() {
            if index.insert(label.as_str(), i).is_some() {
                return Err(BuildError::DuplicateLabel(label.clone()));
            }
        }
        let lookup = |label: &String| {
            index
                .get(label.as_str())
                .copied()
                .ok_or_else(|| BuildError::UnknownLabel(label.clone()))
        };
        self.covers
            .iter()
            .map(|(lo, hi)| {
                let (x, y) = (lookup(lo)?, lookup(hi)?);
                if x == y {
                    return Err(BuildError::SelfCover(lo.clone()));
                }
                Ok((x, y))
            })
            .collect()
    }
}

/// Which bound is missing in a [`BuildError::NotALattice`] report.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MissingBound {
    Meet,
    Join,
}

impl fmt::Display for MissingBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MissingBound::Meet => f.write_str("no unique meet"),
            MissingBound::Join => f.write_str("no unique join"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("cover references unknown label `{0}`")]
    UnknownLabel(String),
    #[error("cover ({0}, {0}) relates an element to itself")]
    SelfCover(String),
    #[error("covers contain a cycle through `{0}` and `{1}`")]
    CycleDetected(String, String),
    #[error("`{0}` and `{1}` have {2}")]
    NotALattice(String, String, MissingBound),
    #[error("no least element")]
    NoBottom,
    #[error("no greatest element")]
    NoTop,
    #[error("a lattice needs at least two elements (0 and 1 must differ), got {0}")]
    TooFewElements(usize),
    #[error("at most {MAX_ELEMENTS} elements are supported, got {0}")]
    TooManyElements(usize),
}

impl BuildError {
    /// Errors that come from the label-level description rather than the
    /// shape of the order.
    pub fn is_schema_error(&self) -> bool {
        matches!(
            self,
            BuildError::DuplicateLabel(_) | BuildError::UnknownLabel(_) | BuildError::SelfCover(_)
        )
    }
}

/// An immutable, validated finite bounded lattice.
///
/// Elements are identified by index; labels are only used for display and
/// serialization. Order, meet and join are precomputed tables.
pub struct Lattice {
    name: String,
    labels: Vec<String>,
    up: Vec<ElementSet>,
    down: Vec<ElementSet>,
    meet: Vec<Element>,
    join: Vec<Element>,
    bottom: Element,
    top: Element,
    pub(crate) tables: OnceLock<OperatorTables>,
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Lattice")
            .field("name", &self.name)
            .field("labels", &self.labels)
            .field("covers", &self.covers())
            .finish()
    }
}

impl Clone for Lattice {
    fn clone(&self) -> Self {
        Lattice {
            name: self.name.clone(),
            labels: self.labels.clone(),
            up: self.up.clone(),
            down: self.down.clone(),
            meet: self.meet.clone(),
            join: self.join.clone(),
            bottom: self.bottom,
            top: self.top,
            tables: OnceLock::new(),
        }
    }
}

/// Validates `spec` and builds the lattice it describes. The order is the
/// reflexive-transitive closure of the covers.
pub fn build_lattice(spec: &LatticeSpec) -> Result<Lattice, BuildError> {
    let n = spec.elements.len();
    if n > MAX_ELEMENTS {
        return Err(BuildError::TooManyElements(n));
    }
    let covers = spec.resolve()?;
    if n < 2 {
        return Err(BuildError::TooFewElements(n));
    }
    let mut up: Vec<ElementSet> = (0..n).map(ElementSet::singleton).collect();
    for &(x, y) in &covers {
        up[x].insert(y);
    }
    Lattice::from_order(spec.name.clone(), spec.elements.clone(), up)
}

impl Lattice {
    /// Builds a lattice from `up[x] ⊇ {y | x ≤ y}`; the relation is closed
    /// reflexively and transitively before validation.
    pub fn from_order(
        name: String,
        labels: Vec<String>,
        mut up: Vec<ElementSet>,
    ) -> Result<Lattice, BuildError> {
        let n = labels.len();
        assert_eq!(up.len(), n, "order rows must match the label count");
        if n > MAX_ELEMENTS {
            return Err(BuildError::TooManyElements(n));
        }
        if n < 2 {
            return Err(BuildError::TooFewElements(n));
        }
        for (x, row) in up.iter_mut().enumerate() {
            row.insert(x);
        }
        // Warshall over bitset rows.
        for k in 0..n {
            let row_k = up[k];
            for row in up.iter_mut() {
                if row.contains(k) {
                    *row = row.union(row_k);
                }
            }
        }
        let mut down = vec![ElementSet::EMPTY; n];
        for (x, row) in up.iter().enumerate() {
            for y in row.iter() {
                down[y].insert(x);
            }
        }
        for x in 0..n {
            let both = up[x].intersection(down[x]);
            if let Some(y) = both.difference(ElementSet::singleton(x)).first() {
                let (a, b) = if x < y { (x, y) } else { (y, x) };
                return Err(BuildError::CycleDetected(
                    labels[a].clone(),
                    labels[b].clone(),
                ));
            }
        }
        let full = ElementSet::full(n);
        let bottom = (0..n)
            .find(|&x| up[x] == full)
            .ok_or(BuildError::NoBottom)?;
        let top = (0..n).find(|&x| down[x] == full).ok_or(BuildError::NoTop)?;

        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for x in 0..n {
            for y in x..n {
                let lower = down[x].intersection(down[y]);
                let glb = lower
                    .iter()
                    .find(|&z| lower.is_subset(down[z]))
                    .ok_or_else(|| {
                        BuildError::NotALattice(
                            labels[x].clone(),
                            labels[y].clone(),
                            MissingBound::Meet,
                        )
                    })?;
                let upper = up[x].intersection(up[y]);
                let lub = upper
                    .iter()
                    .find(|&z| upper.is_subset(up[z]))
                    .ok_or_else(|| {
                        BuildError::NotALattice(
                            labels[x].clone(),
                            labels[y].clone(),
                            MissingBound::Join,
                        )
                    })?;
                meet[x * n + y] = glb;
                meet[y * n + x] = glb;
                join[x * n + y] = lub;
                join[y * n + x] = lub;
            }
        }
        Ok(Lattice {
            name,
            labels,
            up,
            down,
            meet,
            join,
            bottom,
            top,
            tables: OnceLock::new(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: Element) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<Element> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn bottom(&self) -> Element {
        self.bottom
    }

    pub fn top(&self) -> Element {
        self.top
    }

    /// The whole carrier `L` as a set.
    pub fn all(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.len()
    }

    pub fn leq(&self, x: Element, y: Element) -> bool {
        self.up[x].contains(y)
    }

    pub fn lt(&self, x: Element, y: Element) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: Element, y: Element) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// `{y | x ≤ y}`.
    pub fn up_set(&self, x: Element) -> ElementSet {
        self.up[x]
    }

    /// `{y | y ≤ x}`.
    pub fn down_set(&self, x: Element) -> ElementSet {
        self.down[x]
    }

    pub fn meet(&self, x: Element, y: Element) -> Element {
        self.meet[x * self.len() + y]
    }

    pub fn join(&self, x: Element, y: Element) -> Element {
        self.join[x * self.len() + y]
    }

    /// Meet of all members; the top element for the empty set.
    pub fn meet_all(&self, set: ElementSet) -> Element {
        set.iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Hasse-diagram covers `(x, y)` with `x ⋖ y`, ordered by `(x, y)`.
    pub fn covers(&self) -> Vec<(Element, Element)> {
        let mut out = Vec::new();
        for x in self.elements() {
            let strictly_above = self.up[x].difference(ElementSet::singleton(x));
            for y in strictly_above.iter() {
                let between = strictly_above
                    .intersection(self.down[y])
                    .difference(ElementSet::singleton(y));
                if between.is_empty() {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Canonical description of this lattice, covers in index order.
    pub fn to_spec(&self) -> LatticeSpec {
        LatticeSpec {
            name: self.name.clone(),
            elements: self.labels.clone(),
            covers: self
                .covers()
                .into_iter()
                .map(|(x, y)| (self.labels[x].clone(), self.labels[y].clone()))
                .collect(),
        }
    }

    /// Same lattice under another name.
    pub fn renamed<S: Into<String>>(mut self, name: S) -> Self {
        self.name = name.into();
        self
    }

    pub fn set_of(&self, labels: &[&str]) -> Option<ElementSet> {
        labels.iter().map(|l| self.index_of(l)).collect()
    }

    /// `{x ∨ y | x ∈ a, y ∈ b}`.
    pub fn set_join(&self, a: ElementSet, b: ElementSet) -> ElementSet {
        let mut out = ElementSet::EMPTY;
        for x in a.iter() {
            for y in b.iter() {
                out.insert(self.join(x, y));
            }
        }
        out
    }

    /// `{x ∧ y | x ∈ a, y ∈ b}`.
    pub fn set_meet(&self, a: ElementSet, b: ElementSet) -> ElementSet {
        let mut out = ElementSet::EMPTY;
        for x in a.iter() {
            for y in b.iter() {
                out.insert(self.meet(x, y));
            }
        }
        out
    }

    /// Members of `a` with no strictly larger member of `a`.
    pub fn max_elements(&self, a: ElementSet) -> ElementSet {
        a.iter()
            .filter(|&x| self.up[x].intersection(a) == ElementSet::singleton(x))
            .collect()
    }

    pub fn is_antichain(&self, a: ElementSet) -> bool {
        a.iter()
            .all(|x| self.up[x].union(self.down[x]).intersection(a) == ElementSet::singleton(x))
    }

    /// Up-closure of `a`.
    pub fn up_closure(&self, a: ElementSet) -> ElementSet {
        a.iter()
            .fold(ElementSet::EMPTY, |acc, x| acc.union(self.up[x]))
    }

    /// Down-closure of `a`.
    pub fn down_closure(&self, a: ElementSet) -> ElementSet {
        a.iter()
            .fold(ElementSet::EMPTY, |acc, x| acc.union(self.down[x]))
    }

    /// `A ≤ B`: every member of `a` is below every member of `b`.
    pub fn rel_leq_sets(&self, a: ElementSet, b: ElementSet) -> bool {
        a.iter().all(|x| b.is_subset(self.up[x]))
    }

    /// `A ≤₁ B`: every member of `a` lies below some member of `b`.
    pub fn rel_leq1(&self, a: ElementSet, b: ElementSet) -> bool {
        a.is_subset(self.down_closure(b))
    }

    /// `A ≤₂ B`: every member of `b` lies above some member of `a`.
    pub fn rel_leq2(&self, a: ElementSet, b: ElementSet) -> bool {
        b.is_subset(self.up_closure(a))
    }

    /// `A =₁ B`: `A ≤₁ B` and `B ≤₁ A`.
    pub fn rel_eq1(&self, a: ElementSet, b: ElementSet) -> bool {
        self.rel_leq1(a, b) && self.rel_leq1(b, a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain2() -> Lattice {
        build_lattice(&LatticeSpec::new("2", &["0", "1"], &[("0", "1")])).unwrap()
    }

    fn fig5() -> Lattice {
        build_lattice(&LatticeSpec::new(
            "fig5",
            &["0", "a", "b", "c", "d", "1"],
            &[
                ("0", "a"),
                ("a", "d"),
                ("0", "b"),
                ("b", "1"),
                ("0", "c"),
                ("c", "1"),
                ("d", "1"),
            ],
        ))
        .unwrap()
    }

    #[test]
    fn two_chain_tables_are_forced() {
        let l = chain2();
        assert_eq!((l.bottom(), l.top()), (0, 1));
        assert_eq!(l.meet(0, 1), 0);
        assert_eq!(l.join(0, 1), 1);
        assert_eq!(l.covers(), vec![(0, 1)]);
    }

    #[test]
    fn six_element_example_builds() {
        let l = fig5();
        assert_eq!(l.len(), 6);
        assert_eq!(l.label(l.bottom()), "0");
        assert_eq!(l.label(l.top()), "1");
        let (b, c) = (l.index_of("b").unwrap(), l.index_of("c").unwrap());
        assert_eq!(l.label(l.join(b, c)), "1");
        assert_eq!(l.label(l.meet(b, c)), "0");
    }

    #[test]
    fn identities() {
        let l = fig5();
        for x in l.elements() {
            assert_eq!(l.meet(x, l.top()), x);
            assert_eq!(l.join(x, l.bottom()), x);
            assert!(l.leq(x, x));
        }
    }

    #[test]
    fn missing_top_is_rejected() {
        let spec = LatticeSpec::new("bowtie", &["0", "a", "b"], &[("0", "a"), ("0", "b")]);
        assert_eq!(build_lattice(&spec).unwrap_err(), BuildError::NoTop);
        let spec = LatticeSpec::new("vee", &["a", "b", "1"], &[("a", "1"), ("b", "1")]);
        assert_eq!(build_lattice(&spec).unwrap_err(), BuildError::NoBottom);
    }

    #[test]
    fn bounded_non_lattice_names_the_pair() {
        let spec = LatticeSpec::new(
            "bowtie",
            &["0", "a", "b", "c", "d", "1"],
            &[
                ("0", "a"),
                ("0", "b"),
                ("a", "c"),
                ("a", "d"),
                ("b", "c"),
                ("b", "d"),
                ("c", "1"),
                ("d", "1"),
            ],
        );
        assert_eq!(
            build_lattice(&spec).unwrap_err(),
            BuildError::NotALattice("a".into(), "b".into(), MissingBound::Join)
        );
    }

    #[test]
    fn spec_level_errors() {
        let dup = LatticeSpec::new("x", &["0", "0"], &[]);
        assert_eq!(
            build_lattice(&dup).unwrap_err(),
            BuildError::DuplicateLabel("0".into())
        );
        let unknown = LatticeSpec::new("x", &["0", "1"], &[("0", "z")]);
        assert_eq!(
            build_lattice(&unknown).unwrap_err(),
            BuildError::UnknownLabel("z".into())
        );
        let selfloop = LatticeSpec::new("x", &["0", "1"], &[("0", "1"), ("1", "1")]);
        assert_eq!(
            build_lattice(&selfloop).unwrap_err(),
            BuildError::SelfCover("1".into())
        );
        let cyc = LatticeSpec::new(
            "x",
            &["0", "a", "b", "1"],
            &[("0", "a"), ("a", "b"), ("b", "a"), ("b", "1")],
        );
        assert_eq!(
            build_lattice(&cyc).unwrap_err(),
            BuildError::CycleDetected("a".into(), "b".into())
        );
        let single = LatticeSpec::new("x", &["0"], &[]);
        assert_eq!(
            build_lattice(&single).unwrap_err(),
            BuildError::TooFewElements(1)
        );
    }

    #[test]
    fn empty_operand_conventions() {
        let l = fig5();
        let a = l.set_of(&["a", "b"]).unwrap();
        assert!(l.set_join(a, ElementSet::EMPTY).is_empty());
        assert!(l.set_meet(ElementSet::EMPTY, a).is_empty());
        assert!(l.rel_leq1(ElementSet::EMPTY, a));
        assert!(l.rel_leq2(a, ElementSet::EMPTY));
        assert!(l.max_elements(ElementSet::EMPTY).is_empty());
        assert_eq!(l.max_elements(l.all()), ElementSet::singleton(l.top()));
    }

    #[test]
    fn to_spec_recovers_covers() {
        let l = fig5();
        let spec = l.to_spec();
        assert_eq!(spec.covers.len(), 7);
        let again = build_lattice(&spec).unwrap();
        assert_eq!(again.covers(), l.covers());
    }
}
