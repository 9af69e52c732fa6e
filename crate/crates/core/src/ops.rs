//! Generalized pseudocomplements and the closure operators built on them.
//!
//! For a set `A`, `A⁰` is the set of maximal elements of the annihilator
//! `{x | x ∧ y = 0 for all y ∈ A}`. It is always a nonempty antichain and
//! coincides with the ordinary pseudocomplement whenever that exists.
//! Dense elements (`D`) have `x⁰ = {0}`, sharp ones (`S`) have `x⁰⁰ = {x}`.
//! `Ā` collects the `x` with `1 ∈ x⁰⁰ ∨ y⁰⁰` for every `y ∈ A`, and `Aᴰ`
//! those with `x ∨ y ∈ D` for every `y ∈ A`; both are antitone Galois maps
//! on the powerset.

use crate::lattice::Lattice;
use crate::set::{Element, ElementSet};

/// Per-element operator values, computed once per lattice on first use.
#[derive(Clone, Debug)]
pub struct OperatorTables {
    annihilator: Vec<ElementSet>,
    zero: Vec<ElementSet>,
    double_zero: Vec<ElementSet>,
    dense: ElementSet,
    sharp: ElementSet,
    bar: Vec<ElementSet>,
    d_polar: Vec<ElementSet>,
}

impl OperatorTables {
    fn compute(l: &Lattice) -> Self {
        let n = l.len();
        let bottom = ElementSet::singleton(l.bottom());
        let top = ElementSet::singleton(l.top());

        let annihilator: Vec<ElementSet> = l
            .elements()
            .map(|a| {
                l.elements()
                    .filter(|&x| l.meet(x, a) == l.bottom())
                    .collect()
            })
            .collect();
        let zero_of = |a: ElementSet| -> ElementSet {
            let ann = a
                .iter()
                .fold(l.all(), |acc, y| acc.intersection(annihilator[y]));
            l.max_elements(ann)
        };
        let zero: Vec<ElementSet> = (0..n).map(|x| zero_of(ElementSet::singleton(x))).collect();
        let double_zero: Vec<ElementSet> = zero.iter().map(|&z| zero_of(z)).collect();

        let dense: ElementSet = (0..n).filter(|&x| zero[x] == bottom).collect();
        let dense_via_double: ElementSet = (0..n).filter(|&x| double_zero[x] == top).collect();
        assert_eq!(
            dense,
            dense_via_double,
            "x⁰ = 0 and x⁰⁰ = 1 disagree on the dense elements of `{}`",
            l.name()
        );
        let sharp: ElementSet = (0..n)
            .filter(|&x| double_zero[x] == ElementSet::singleton(x))
            .collect();

        let bar: Vec<ElementSet> = (0..n)
            .map(|y| {
                (0..n)
                    .filter(|&x| l.set_join(double_zero[x], double_zero[y]).contains(l.top()))
                    .collect()
            })
            .collect();
        let d_polar: Vec<ElementSet> = (0..n)
            .map(|y| (0..n).filter(|&x| dense.contains(l.join(x, y))).collect())
            .collect();

        OperatorTables {
            annihilator,
            zero,
            double_zero,
            dense,
            sharp,
            bar,
            d_polar,
        }
    }
}

impl Lattice {
    pub fn tables(&self) -> &OperatorTables {
        self.tables.get_or_init(|| OperatorTables::compute(self))
    }

    /// `{x | x ∧ y = 0 for all y ∈ a}`; the whole carrier for `a = ∅`.
    pub fn annihilator_raw(&self, a: ElementSet) -> ElementSet {
        let t = self.tables();
        a.iter()
            .fold(self.all(), |acc, y| acc.intersection(t.annihilator[y]))
    }

    /// `A⁰`.
    pub fn zero_op(&self, a: ElementSet) -> ElementSet {
        if let Some(x) = a.as_singleton() {
            return self.tables().zero[x];
        }
        self.max_elements(self.annihilator_raw(a))
    }

    /// `x⁰`.
    pub fn zero_op_elem(&self, x: Element) -> ElementSet {
        self.tables().zero[x]
    }

    /// `x⁰⁰`.
    pub fn double_zero(&self, x: Element) -> ElementSet {
        self.tables().double_zero[x]
    }

    /// `A⁰⁰`.
    pub fn double_zero_set(&self, a: ElementSet) -> ElementSet {
        self.zero_op(self.zero_op(a))
    }

    /// `D`, the dense elements.
    pub fn dense_set(&self) -> ElementSet {
        self.tables().dense
    }

    pub fn is_dense(&self, x: Element) -> bool {
        self.tables().dense.contains(x)
    }

    /// `S`, the sharp elements.
    pub fn sharp_set(&self) -> ElementSet {
        self.tables().sharp
    }

    pub fn is_sharp(&self, x: Element) -> bool {
        self.tables().sharp.contains(x)
    }

    /// Whether `1 ∈ x⁰⁰ ∨ y⁰⁰`; the relation inducing the bar closure.
    pub fn co_dense(&self, x: Element, y: Element) -> bool {
        self.tables().bar[y].contains(x)
    }

    /// `Ā`; the whole carrier for `a = ∅`.
    pub fn bar(&self, a: ElementSet) -> ElementSet {
        let t = self.tables();
        a.iter()
            .fold(self.all(), |acc, y| acc.intersection(t.bar[y]))
    }

    /// `x̄`, i.e. the bar of the singleton `{x}`.
    pub fn bar_elem(&self, x: Element) -> ElementSet {
        self.tables().bar[x]
    }

    /// `Aᴰ`; the whole carrier for `a = ∅`.
    pub fn d_polar(&self, a: ElementSet) -> ElementSet {
        let t = self.tables();
        a.iter()
            .fold(self.all(), |acc, y| acc.intersection(t.d_polar[y]))
    }

    pub fn d_polar_elem(&self, x: Element) -> ElementSet {
        self.tables().d_polar[x]
    }

    /// `A` is closed when the double bar gives it back.
    pub fn is_closed_set(&self, a: ElementSet) -> bool {
        self.bar(self.bar(a)) == a
    }

    /// Every `x⁰` is a single element, i.e. the lattice is pseudocomplemented.
    pub fn is_pseudocomplemented(&self) -> bool {
        self.tables().zero.iter().all(|z| z.len() == 1)
    }
}

#[cfg(test)]
mod tests {
    use crate::lattice::{build_lattice, LatticeSpec};
    use crate::set::ElementSet;

    fn m3() -> crate::Lattice {
        build_lattice(&LatticeSpec::new(
            "m3",
            &["0", "a", "b", "c", "1"],
            &[
                ("0", "a"),
                ("0", "b"),
                ("0", "c"),
                ("a", "1"),
                ("b", "1"),
                ("c", "1"),
            ],
        ))
        .unwrap()
    }

    #[test]
    fn bottom_and_top_complements() {
        let l = m3();
        assert_eq!(l.zero_op_elem(l.bottom()), ElementSet::singleton(l.top()));
        assert_eq!(l.zero_op_elem(l.top()), ElementSet::singleton(l.bottom()));
        assert_eq!(l.double_zero(l.bottom()), ElementSet::singleton(l.bottom()));
        assert_eq!(l.annihilator_raw(ElementSet::EMPTY), l.all());
        assert_eq!(
            l.annihilator_raw(ElementSet::singleton(l.top())),
            ElementSet::singleton(l.bottom())
        );
        assert_eq!(l.zero_op(ElementSet::EMPTY), ElementSet::singleton(l.top()));
    }

    #[test]
    fn m3_is_not_pseudocomplemented() {
        let l = m3();
        assert_eq!(l.zero_op_elem(1), l.set_of(&["b", "c"]).unwrap());
        assert!(!l.is_pseudocomplemented());
        assert_eq!(l.dense_set(), ElementSet::singleton(l.top()));
        assert_eq!(l.sharp_set(), l.set_of(&["0", "a", "b", "c", "1"]).unwrap());
    }

    #[test]
    fn bar_and_polar_of_bounds() {
        let l = m3();
        assert_eq!(l.bar(ElementSet::EMPTY), l.all());
        assert_eq!(l.bar(ElementSet::singleton(l.bottom())), l.dense_set());
        assert_eq!(l.bar(ElementSet::singleton(l.top())), l.all());
        assert_eq!(l.d_polar(ElementSet::singleton(l.top())), l.all());
        assert!(l.is_closed_set(l.all()));
        assert!(l.is_closed_set(l.dense_set()));
    }
}
