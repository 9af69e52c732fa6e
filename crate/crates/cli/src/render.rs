//! Plain-text tables, ANSI styling and DOT output.

use lattle::{ElementSet, Lattice};

/// ANSI styling, enabled by `LATTLE_COLOR=1`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Style {
    pub color: bool,
}

impl Style {
    pub fn from_env() -> Self {
        Style {
            color: std::env::var("LATTLE_COLOR").is_ok_and(|v| v == "1"),
        }
    }

    fn paint(&self, code: &str, s: &str) -> String {
        if self.color {
            format!("\x1b[{code}m{s}\x1b[0m")
        } else {
            s.to_string()
        }
    }

    pub fn bold(&self, s: &str) -> String {
        self.paint("1", s)
    }

    pub fn good(&self, s: &str) -> String {
        self.paint("32", s)
    }

    pub fn bad(&self, s: &str) -> String {
        self.paint("31", s)
    }

    pub fn muted(&self, s: &str) -> String {
        self.paint("33", s)
    }
}

/// Labels written together (`fg`) when they are all one character long,
/// otherwise as `{e10, e11}`.
pub fn set_text(labels: &[String]) -> String {
    if labels.is_empty() {
        "∅".to_string()
    } else if labels.iter().all(|l| l.chars().count() == 1) {
        labels.concat()
    } else {
        format!("{{{}}}", labels.join(", "))
    }
}

pub fn labels(l: &Lattice, s: ElementSet) -> Vec<String> {
    s.iter().map(|x| l.label(x).to_string()).collect()
}

// Combining marks (the bar in x̄) take no column.
fn width(s: &str) -> usize {
    s.chars()
        .filter(|c| !('\u{300}'..='\u{36f}').contains(c))
        .count()
}

/// Left-aligned columns two spaces apart, no trailing blanks. The first row
/// is a header and is set in bold.
pub fn table(rows: &[Vec<String>], style: Style) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| width(s))
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for (i, row) in rows.iter().enumerate() {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            line.push_str(cell);
            if c + 1 < row.len() {
                line.push_str(&" ".repeat(widths[c] - width(cell) + 2));
            }
        }
        let line = line.trim_end();
        out.push_str(&if i == 0 {
            style.bold(line)
        } else {
            line.to_string()
        });
        out.push('\n');
    }
    out
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// The Hasse diagram, bottom first.
pub fn dot(l: &Lattice) -> String {
    let mut out = format!("digraph {} {{\n", quote(l.name()));
    out.push_str("  rankdir=BT;\n  node [shape=plaintext];\n  edge [arrowhead=none];\n");
    for x in l.elements() {
        out.push_str(&format!("  {};\n", quote(l.label(x))));
    }
    for (x, y) in l.covers() {
        out.push_str(&format!(
            "  {} -> {};\n",
            quote(l.label(x)),
            quote(l.label(y))
        ));
    }
    out.push_str("}\n");
    out
}
