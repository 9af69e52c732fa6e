//! The Stonean condition (1) and the D-Stonean condition (2).
//!
//! (1): `1 ∈ x⁰⁰ ∨ y⁰⁰` for every `x` and every `y ∈ x⁰`.
//! (2): for all `x, y`, `x ∨ y ∈ D` iff `1 ∈ x⁰⁰ ∨ y⁰⁰`.
//!
//! Witnesses are the first violating pair in index order.

use serde::Serialize;

use crate::lattice::Lattice;
use crate::set::Element;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StoneanReport {
    pub cond1: bool,
    pub cond2: bool,
    pub d_stonean: bool,
    pub cond1_witness: Option<(Element, Element)>,
    pub cond2_witness: Option<(Element, Element)>,
}

impl Lattice {
    /// Whether `(x, y)` breaks condition (1): `y ∈ x⁰` but `1 ∉ x⁰⁰ ∨ y⁰⁰`.
    pub fn violates_cond1(&self, x: Element, y: Element) -> bool {
        self.zero_op_elem(x).contains(y) && !self.co_dense(x, y)
    }

    /// Whether `(x, y)` breaks condition (2).
    pub fn violates_cond2(&self, x: Element, y: Element) -> bool {
        self.is_dense(self.join(x, y)) != self.co_dense(x, y)
    }

    pub fn check_cond1(&self) -> (bool, Option<(Element, Element)>) {
        let witness = self.elements().find_map(|x| {
            self.zero_op_elem(x)
                .iter()
                .find(|&y| self.violates_cond1(x, y))
                .map(|y| (x, y))
        });
        let via_bar = self
            .elements()
            .all(|x| self.zero_op_elem(x).is_subset(self.bar_elem(x)));
        assert_eq!(
            witness.is_none(),
            via_bar,
            "condition (1) and x⁰ ⊆ x̄ disagree on `{}`",
            self.name()
        );
        (witness.is_none(), witness)
    }

    pub fn check_cond2(&self) -> (bool, Option<(Element, Element)>) {
        let witness = self.elements().find_map(|x| {
            self.elements()
                .find(|&y| self.violates_cond2(x, y))
                .map(|y| (x, y))
        });
        let via_polar = self
            .elements()
            .all(|x| self.bar_elem(x) == self.d_polar_elem(x));
        assert_eq!(
            witness.is_none(),
            via_polar,
            "condition (2) and x̄ = xᴰ disagree on `{}`",
            self.name()
        );
        (witness.is_none(), witness)
    }

    pub fn is_stonean(&self) -> bool {
        self.check_cond1().0
    }

    pub fn is_d_stonean(&self) -> bool {
        self.check_cond1().0 && self.check_cond2().0
    }

    pub fn stonean_report(&self) -> StoneanReport {
        let (cond1, cond1_witness) = self.check_cond1();
        let (cond2, cond2_witness) = self.check_cond2();
        StoneanReport {
            cond1,
            cond2,
            d_stonean: cond1 && cond2,
            cond1_witness,
            cond2_witness,
        }
    }
}
