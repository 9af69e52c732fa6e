//! The six reference lattices.
//!
//! Covers are read off the Hasse diagrams. Each entry also carries the
//! tables printed alongside the diagram, with sets written as concatenated
//! labels (`"fg"` for `{f, g}`) and principal filters expanded.

use crate::lattice::{build_lattice, Lattice, LatticeSpec};

use super::CorpusError;

/// Tables printed for a reference lattice. `None` where nothing is printed.
#[derive(Clone, Copy, Debug, Default)]
pub struct PrintedTables {
    /// `x⁰` for each element, in element order.
    pub zero: Option<&'static [&'static str]>,
    /// `x⁰⁰` for each element.
    pub double_zero: Option<&'static [&'static str]>,
    /// `x̄` for each element.
    pub bar: Option<&'static [&'static str]>,
    /// `xᴰ` for each element.
    pub d_polar: Option<&'static [&'static str]>,
    pub dense: Option<&'static str>,
    pub sharp: Option<&'static str>,
    /// Generators of the closed filters.
    pub closed_filters: Option<&'static str>,
    /// `c(F_x)` for each generator `x`.
    pub c_of_principal: Option<&'static [&'static str]>,
    pub cond1: Option<bool>,
    pub cond2: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub key: &'static str,
    pub caption: &'static str,
    pub spec: LatticeSpec,
    pub printed: PrintedTables,
    /// Transcription remarks, including known disagreements between the
    /// printed tables and the diagram.
    pub notes: &'static str,
}

impl CorpusEntry {
    pub fn lattice(&self) -> Lattice {
        build_lattice(&self.spec).expect("built-in corpus entries are lattices")
    }
}

pub const BUILTIN_KEYS: [&str; 6] = ["fig1", "fig2", "fig3", "fig4", "fig5", "fig6"];

pub fn builtin_keys() -> &'static [&'static str] {
    &BUILTIN_KEYS
}

pub fn builtin(key: &str) -> Result<CorpusEntry, CorpusError> {
    let entry = match key {
        "fig1" => CorpusEntry {
            key: "fig1",
            caption: "Non-distributive non-pseudocomplemented lattice",
            spec: LatticeSpec::new(
                "fig1",
                &["0", "a", "b", "c", "d", "e", "f", "g", "1"],
                &[
                    ("0", "a"),
                    ("0", "b"),
                    ("0", "d"),
                    ("a", "c"),
                    ("b", "c"),
                    ("a", "e"),
                    ("d", "e"),
                    ("b", "f"),
                    ("d", "f"),
                    ("d", "g"),
                    ("c", "1"),
                    ("e", "1"),
                    ("f", "1"),
                    ("g", "1"),
                ],
            ),
            printed: PrintedTables {
                zero: Some(&["1", "fg", "eg", "g", "c", "c", "a", "c", "0"]),
                double_zero: Some(&["0", "a", "b", "c", "g", "g", "fg", "g", "1"]),
                bar: Some(&[
                    "1",
                    "defg1",
                    "defg1",
                    "defg1",
                    "abcf1",
                    "abcf1",
                    "abcdefg1",
                    "abcf1",
                    "0abcdefg1",
                ]),
                d_polar: None,
                dense: Some("1"),
                sharp: Some("0bcg1"),
                closed_filters: Some("0df1"),
                c_of_principal: None,
                cond1: Some(true),
                cond2: Some(false),
            },
            notes: FIG1_NOTES,
        },
        "fig2" => CorpusEntry {
            key: "fig2",
            caption: "Non-distributive non-pseudocomplemented lattice",
            spec: LatticeSpec::new(
                "fig2",
                &["0", "a", "b", "c", "d", "e", "f", "g", "1"],
                &[
                    ("0", "a"),
                    ("0", "b"),
                    ("0", "c"),
                    ("0", "d"),
                    ("a", "e"),
                    ("b", "e"),
                    ("c", "e"),
                    ("d", "e"),
                    ("e", "f"),
                    ("e", "g"),
                    ("f", "1"),
                    ("g", "1"),
                ],
            ),
            printed: PrintedTables {
                zero: Some(&["1", "bcd", "acd", "abd", "abc", "0", "0", "0", "0"]),
                double_zero: Some(&["0", "a", "b", "c", "d", "1", "1", "1", "1"]),
                bar: Some(&[
                    "efg1",
                    "efg1",
                    "efg1",
                    "efg1",
                    "efg1",
                    "0abcdefg1",
                    "0abcdefg1",
                    "0abcdefg1",
                    "0abcdefg1",
                ]),
                d_polar: None,
                dense: Some("efg1"),
                sharp: Some("0abcd1"),
                closed_filters: Some("0e"),
                c_of_principal: Some(&[
                    "0abcdefg1",
                    "efg1",
                    "efg1",
                    "efg1",
                    "efg1",
                    "efg1",
                    "efg1",
                    "efg1",
                    "efg1",
                ]),
                cond1: Some(false),
                cond2: Some(false),
            },
            notes: "",
        },
        "fig3" => CorpusEntry {
            key: "fig3",
            caption: "Non-distributive non-pseudocomplemented non-Stonean lattice",
            spec: LatticeSpec::new(
                "fig3",
                &["0", "a", "b", "c", "d", "e", "f", "g", "1"],
                &[
                    ("0", "a"),
                    ("0", "b"),
                    ("0", "c"),
                    ("0", "d"),
                    ("a", "e"),
                    ("a", "f"),
                    ("b", "f"),
                    ("c", "f"),
                    ("d", "f"),
                    ("d", "g"),
                    ("e", "1"),
                    ("f", "1"),
                    ("g", "1"),
                ],
            ),
            printed: PrintedTables {
                zero: Some(&["1", "bcg", "ceg", "beg", "bce", "bcg", "0", "bce", "0"]),
                double_zero: Some(&["0", "e", "b", "c", "g", "e", "1", "g", "1"]),
                bar: Some(&[
                    "f1",
                    "bcdfg1",
                    "adefg1",
                    "adefg1",
                    "abcef1",
                    "bcdfg1",
                    "0abcdefg1",
                    "abcef1",
                    "0abcdefg1",
                ]),
                d_polar: None,
                dense: Some("f1"),
                sharp: Some("0bceg1"),
                closed_filters: Some("0adf"),
                c_of_principal: None,
                cond1: Some(false),
                cond2: Some(false),
            },
            notes: "",
        },
        "fig4" => CorpusEntry {
            key: "fig4",
            caption: "Non-distributive non-pseudocomplemented non-Stonean lattice",
            spec: LatticeSpec::new(
                "fig4",
                &["0", "a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "1"],
                &[
                    ("0", "a"),
                    ("0", "b"),
                    ("0", "c"),
                    ("a", "d"),
                    ("a", "e"),
                    ("b", "e"),
                    ("b", "f"),
                    ("c", "f"),
                    ("c", "g"),
                    ("d", "h"),
                    ("e", "h"),
                    ("e", "i"),
                    ("f", "i"),
                    ("f", "j"),
                    ("g", "j"),
                    ("h", "1"),
                    ("i", "1"),
                    ("j", "1"),
                ],
            ),
            printed: PrintedTables {
                zero: Some(&["1", "j", "dg", "h", "j", "g", "d", "h", "g", "0", "d", "0"]),
                double_zero: Some(&["0", "d", "b", "g", "d", "h", "j", "g", "h", "1", "j", "1"]),
                bar: Some(&[
                    "i1",
                    "cfgij1",
                    "i1",
                    "adehi1",
                    "cfgij1",
                    "cfgij1",
                    "adehi1",
                    "adehi1",
                    "cfgij1",
                    "0abcdefghij1",
                    "adehi1",
                    "0abcdefghij1",
                ]),
                d_polar: None,
                dense: Some("i1"),
                sharp: Some("0bdghj1"),
                closed_filters: Some("0aci"),
                c_of_principal: None,
                cond1: Some(false),
                cond2: Some(true),
            },
            notes: "Three long diagram segments pass through a middle element \
                    (0-a-d, 0-c-g, d-h-1, g-j-1, a-e-h, c-f-j); each is read as two covers.",
        },
        "fig5" => CorpusEntry {
            key: "fig5",
            caption: "Non-distributive non-pseudocomplemented D-Stonean lattice",
            spec: LatticeSpec::new(
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
            ),
            printed: PrintedTables {
                zero: Some(&["1", "bc", "cd", "bd", "bc", "0"]),
                double_zero: Some(&["0", "d", "b", "c", "d", "1"]),
                bar: Some(&["1", "bc1", "acd1", "abd1", "bc1", "0abcd1"]),
                d_polar: Some(&["1", "bc1", "acd1", "abd1", "bc1", "0abcd1"]),
                dense: Some("1"),
                sharp: Some("0bcd1"),
                closed_filters: Some("0bcd1"),
                c_of_principal: None,
                cond1: Some(true),
                cond2: Some(true),
            },
            notes: FIG5_NOTES,
        },
        "fig6" => CorpusEntry {
            key: "fig6",
            caption: "Non-distributive lattice",
            spec: LatticeSpec::new(
                "fig6",
                &["0", "a", "b", "c", "d", "1"],
                &[
                    ("0", "a"),
                    ("a", "b"),
                    ("a", "c"),
                    ("a", "d"),
                    ("b", "1"),
                    ("c", "1"),
                    ("d", "1"),
                ],
            ),
            printed: PrintedTables::default(),
            notes: "",
        },
        other => return Err(CorpusError::UnknownKey(other.to_string())),
    };
    Ok(entry)
}

const FIG1_NOTES: &str = "The printed tables are not realizable by any lattice: e⁰ = c puts e \
under every element of c's annihilator, so e ≤ g because c⁰ = g, while b⁰ = eg needs e and g \
incomparable. The printed S also omits a although the printed x⁰⁰ row has a⁰⁰ = a. The covers \
follow the diagram. They reproduce every printed cell outside the e column and the two cells \
that depend on e⁰⁰ (e ∈ d̄ and e ∈ ḡ).";

const FIG5_NOTES: &str = "The printed closed-filter list contains F_d instead of F_a. F_a is \
closed (F̄_a = bc1 and its bar is F_a again) and F_d is not (its double bar is F_a).";
