#![allow(dead_code)]

use lattle::corpus::builtin;
use lattle::{ElementSet, Lattice};

pub fn fig(key: &str) -> Lattice {
    builtin(key).unwrap().lattice()
}

/// `"fg"` → `{f, g}`; every label in the reference lattices is one character.
pub fn set(l: &Lattice, labels: &str) -> ElementSet {
    labels
        .chars()
        .map(|c| {
            l.index_of(&c.to_string())
                .unwrap_or_else(|| panic!("no element {c}"))
        })
        .collect()
}

pub fn el(l: &Lattice, label: &str) -> usize {
    l.index_of(label)
        .unwrap_or_else(|| panic!("no element {label}"))
}

/// Concatenated labels in element order.
pub fn show(l: &Lattice, s: ElementSet) -> String {
    s.iter().map(|x| l.label(x)).collect()
}
