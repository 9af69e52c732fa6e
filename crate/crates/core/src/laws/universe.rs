use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::lattice::Lattice;
use crate::set::ElementSet;

/// Lattices up to this size get the full powerset under the default policy.
pub const DEFAULT_POWERSET_MAX: usize = 8;

/// Beyond this size an explicit powerset request falls back to `Filters`.
pub const POWERSET_HARD_MAX: usize = 16;

/// Cumulative tiers of subsets that set-quantified laws range over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UniverseLevel {
    /// Singletons, plus `D` and `S`.
    Singletons,
    /// Adds all two-element sets.
    Pairs,
    /// Adds all principal filters.
    Filters,
    /// Every nonempty subset (up to [`POWERSET_HARD_MAX`] elements).
    Powerset,
}

/// Which subsets a set-quantified law is checked on.
///
/// The default is `Filters`, widened to the full powerset on lattices with
/// at most [`DEFAULT_POWERSET_MAX`] elements. The empty set is never
/// included: several set laws (e.g. `(A ∨ B)⁰ ≤₁ A⁰ ∧ B⁰`) only hold for
/// nonempty operands.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SubsetUniverse {
    pub level: Option<UniverseLevel>,
}

impl SubsetUniverse {
    pub fn at(level: UniverseLevel) -> Self {
        SubsetUniverse { level: Some(level) }
    }

    fn includes_powerset(&self, n: usize) -> bool {
        match self.level {
            None => n <= DEFAULT_POWERSET_MAX,
            Some(UniverseLevel::Powerset) => n <= POWERSET_HARD_MAX,
            Some(_) => false,
        }
    }

    /// Subsets in a fixed order: singletons, pairs, principal filters, `D`,
    /// `S`, then the powerset by mask; repeats are dropped.
    pub fn sets(&self, l: &Lattice) -> Vec<ElementSet> {
        let level = self.level.unwrap_or(UniverseLevel::Filters);
        let n = l.len();
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        let mut push = |s: ElementSet| {
            if !s.is_empty() && seen.insert(s) {
                out.push(s);
            }
        };
        for x in l.elements() {
            push(ElementSet::singleton(x));
        }
        if level >= UniverseLevel::Pairs {
            for x in l.elements() {
                for y in x + 1..n {
                    push(ElementSet::singleton(x).with(y));
                }
            }
        }
        if level >= UniverseLevel::Filters {
            for x in l.elements() {
                push(l.up_set(x));
            }
        }
        push(l.dense_set());
        push(l.sharp_set());
        if self.includes_powerset(n) {
            for bits in 1..=l.all().bits() {
                push(ElementSet::from_bits(bits));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{build_lattice, LatticeSpec};

    fn chain(n: usize) -> Lattice {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
        let covers: Vec<(&str, &str)> = refs.windows(2).map(|w| (w[0], w[1])).collect();
        build_lattice(&LatticeSpec::new("chain", &refs, &covers)).unwrap()
    }

    #[test]
    fn default_uses_powerset_on_small_lattices() {
        let l = chain(4);
        assert_eq!(SubsetUniverse::default().sets(&l).len(), 15);
        let l = chain(9);
        let sets = SubsetUniverse::default().sets(&l);
        // 9 singletons + 36 pairs + 7 new principal filters (F_8 and F_7 are
        // a singleton and a pair); D = {8} and S = {0, 8} repeat.
        assert_eq!(sets.len(), 9 + 36 + 7);
    }

    #[test]
    fn levels_are_cumulative() {
        let l = chain(5);
        let sizes: Vec<usize> = [
            UniverseLevel::Singletons,
            UniverseLevel::Pairs,
            UniverseLevel::Filters,
            UniverseLevel::Powerset,
        ]
        .into_iter()
        .map(|lv| SubsetUniverse::at(lv).sets(&l).len())
        .collect();
        assert!(sizes.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(sizes[3], 31);
        assert!(!SubsetUniverse::at(UniverseLevel::Powerset)
            .sets(&l)
            .contains(&ElementSet::EMPTY));
    }
}
