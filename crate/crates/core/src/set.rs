//! Subsets of a lattice carrier, stored as a 64-bit membership mask.

use std::fmt;

/// Index of an element inside its [`Lattice`](crate::Lattice).
pub type Element = usize;

/// Largest carrier a [`Lattice`](crate::Lattice) may have.
pub const MAX_ELEMENTS: usize = 64;

/// A set of element indices of one lattice.
///
/// Equality is extensional. The set does not remember which lattice it came
/// from; callers keep every member below that lattice's element count.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(x: Element) -> Self {
        debug_assert!(x < MAX_ELEMENTS);
        ElementSet(1u64 << x)
    }

    /// `{0, 1, ..., n - 1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn contains(self, x: Element) -> bool {
        x < MAX_ELEMENTS && self.0 >> x & 1 == 1
    }

    pub fn insert(&mut self, x: Element) {
        self.0 |= 1u64 << x;
    }

    pub fn remove(&mut self, x: Element) {
        self.0 &= !(1u64 << x);
    }

    pub fn with(mut self, x: Element) -> Self {
        self.insert(x);
        self
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_superset(self, other: Self) -> bool {
        other.is_subset(self)
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Lowest member, if any.
    pub fn first(self) -> Option<Element> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as Element)
    }

    /// The only member of a one-element set.
    pub fn as_singleton(self) -> Option<Element> {
        (self.len() == 1).then(|| self.0.trailing_zeros() as Element)
    }

    /// Members in ascending index order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }
}

#[derive(Clone, Debug)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = Element;

    fn next(&mut self) -> Option<Element> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as Element;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for ElementSet {
    type Item = Element;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<Element> for ElementSet {
    fn from_iter<I: IntoIterator<Item = Element>>(iter: I) -> Self {
        let mut set = ElementSet::EMPTY;
        for x in iter {
            set.insert(x);
        }
        set
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
