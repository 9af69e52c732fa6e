//! Filters of a finite lattice and their classification.
//!
//! Every filter of a finite lattice is principal, so filters are produced
//! as up-sets of their generator. The general "nonempty, meet-closed and
//! upward-closed" test is kept for arbitrary sets.

use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::lattice::Lattice;
use crate::set::{Element, ElementSet};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FilterError {
    #[error("{0:?} is not a filter")]
    NotAFilter(ElementSet),
}

/// Classification of one filter.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FilterFlags {
    pub proper: bool,
    pub d_filter: bool,
    pub closed: bool,
    pub coherent: bool,
    pub maximal: bool,
    pub prime: bool,
    pub median: bool,
}

/// A validated filter. Flags are filled on first request and must be asked
/// of the lattice the filter was built from.
#[derive(Clone, Debug)]
pub struct Filter {
    carrier: ElementSet,
    generator: Element,
    flags: OnceLock<FilterFlags>,
}

impl PartialEq for Filter {
    fn eq(&self, other: &Self) -> bool {
        self.carrier == other.carrier
    }
}

impl Eq for Filter {}

impl Filter {
    /// Validates `set` as a filter of `l`.
    pub fn from_set(l: &Lattice, set: ElementSet) -> Result<Filter, FilterError> {
        if !l.is_filter(set) {
            return Err(FilterError::NotAFilter(set));
        }
        Ok(Filter {
            carrier: set,
            generator: l.meet_all(set),
            flags: OnceLock::new(),
        })
    }

    pub fn carrier(&self) -> ElementSet {
        self.carrier
    }

    /// Least element of the carrier.
    pub fn generator(&self) -> Element {
        self.generator
    }

    pub fn contains(&self, x: Element) -> bool {
        self.carrier.contains(x)
    }

    pub fn flags(&self, l: &Lattice) -> FilterFlags {
        *self.flags.get_or_init(|| l.classify(self))
    }
}

impl Lattice {
    /// `F_x = {y | x ≤ y}`.
    pub fn principal_filter(&self, x: Element) -> Filter {
        Filter {
            carrier: self.up_set(x),
            generator: x,
            flags: OnceLock::new(),
        }
    }

    /// All filters, one per generator, in generator order.
    pub fn all_filters(&self) -> Vec<Filter> {
        self.elements().map(|x| self.principal_filter(x)).collect()
    }

    /// Nonempty, closed under meets and closed upwards.
    pub fn is_filter(&self, a: ElementSet) -> bool {
        if a.is_empty() || self.up_closure(a) != a {
            return false;
        }
        a.iter()
            .all(|x| a.iter().all(|y| a.contains(self.meet(x, y))))
    }

    pub fn is_d_filter(&self, f: &Filter) -> bool {
        self.dense_set().is_subset(f.carrier)
    }

    /// `c(F) = {x | x̄ ∧ F = L}`, with `∧` taken element-wise.
    pub fn c_operator(&self, f: &Filter) -> ElementSet {
        self.elements()
            .filter(|&x| self.set_meet(self.bar_elem(x), f.carrier) == self.all())
            .collect()
    }

    pub fn is_coherent(&self, f: &Filter) -> bool {
        self.c_operator(f) == f.carrier
    }

    pub fn is_closed_filter(&self, f: &Filter) -> bool {
        self.is_closed_set(f.carrier)
    }

    pub fn is_proper(&self, f: &Filter) -> bool {
        f.carrier != self.all()
    }

    /// Proper, and every filter strictly containing it is `L`.
    pub fn is_maximal(&self, f: &Filter) -> bool {
        self.is_proper(f)
            && self.elements().all(|y| {
                let g = self.up_set(y);
                !(g.is_superset(f.carrier) && g != f.carrier) || g == self.all()
            })
    }

    /// `x ∨ y ∈ F` forces `x ∈ F` or `y ∈ F`. The improper filter passes.
    pub fn is_prime(&self, f: &Filter) -> bool {
        self.elements().all(|x| {
            f.contains(x)
                || self
                    .elements()
                    .all(|y| f.contains(y) || !f.contains(self.join(x, y)))
        })
    }

    /// Maximal, and each member `x` has some `y ∉ F` with `1 ∈ x⁰⁰ ∨ y⁰⁰`.
    pub fn is_median(&self, f: &Filter) -> bool {
        let outside = self.all().difference(f.carrier);
        self.is_maximal(f)
            && f.carrier
                .iter()
                .all(|x| !self.bar_elem(x).is_disjoint(outside))
    }

    pub fn classify(&self, f: &Filter) -> FilterFlags {
        FilterFlags {
            proper: self.is_proper(f),
            d_filter: self.is_d_filter(f),
            closed: self.is_closed_filter(f),
            coherent: self.is_coherent(f),
            maximal: self.is_maximal(f),
            prime: self.is_prime(f),
            median: self.is_median(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::lattice::{build_lattice, LatticeSpec};
    use crate::set::ElementSet;

    use super::*;

    fn chain3() -> Lattice {
        build_lattice(&LatticeSpec::new(
            "3",
            &["0", "m", "1"],
            &[("0", "m"), ("m", "1")],
        ))
        .unwrap()
    }

    #[test]
    fn filters_of_a_chain() {
        let l = chain3();
        let fs = l.all_filters();
        assert_eq!(fs.len(), 3);
        assert_eq!(fs[2].carrier(), ElementSet::singleton(2));
        assert_eq!(fs[0].carrier(), l.all());
        assert!(l.is_maximal(&fs[1]));
        assert!(!l.is_maximal(&fs[2]));
        assert!(!l.is_maximal(&fs[0]));
    }

    #[test]
    fn from_set_rejects_non_filters() {
        let l = chain3();
        assert!(Filter::from_set(&l, ElementSet::EMPTY).is_err());
        assert!(Filter::from_set(&l, ElementSet::singleton(1)).is_err());
        let f = Filter::from_set(&l, l.set_of(&["m", "1"]).unwrap()).unwrap();
        assert_eq!(f.generator(), 1);
    }

    #[test]
    fn improper_filter_flags() {
        let l = chain3();
        let whole = l.principal_filter(l.bottom());
        let flags = whole.flags(&l);
        assert!(!flags.proper);
        assert!(flags.prime);
        assert!(!flags.maximal);
        assert!(!flags.median);
        assert!(flags.closed);
        assert!(flags.d_filter);
    }
}
