//! The lattice file format: a UTF-8 JSON document
//! `{"name": .., "elements": [..], "covers": [[lower, upper], ..]}`.
//!
//! [`serialize`] writes one canonical layout, so parse followed by
//! serialize is the identity on canonical text.

use serde_json::error::Category;
use thiserror::Error;

use crate::lattice::LatticeSpec;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema error at line {line}, column {column}: {message}")]
    Schema {
        line: usize,
        column: usize,
        message: String,
    },
}

pub fn parse(text: &str) -> Result<LatticeSpec, FormatError> {
    let spec: LatticeSpec = serde_json::from_str(text).map_err(|e| {
        let (line, column, message) = (e.line(), e.column(), e.to_string());
        match e.classify() {
            Category::Data => FormatError::Schema {
                line,
                column,
                message,
            },
            _ => FormatError::Syntax {
                line,
                column,
                message,
            },
        }
    })?;
    spec.resolve().map_err(|e| FormatError::Schema {
        line: 0,
        column: 0,
        message: e.to_string(),
    })?;
    Ok(spec)
}

pub fn serialize(spec: &LatticeSpec) -> String {
    let quote = |s: &str| serde_json::to_string(s).expect("strings always serialize");
    let elements = spec
        .elements
        .iter()
        .map(|e| quote(e))
        .collect::<Vec<_>>()
        .join(", ");
    let covers = spec
        .covers
        .iter()
        .map(|(a, b)| format!("[{}, {}]", quote(a), quote(b)))
        .collect::<Vec<_>>()
        .join(", ");
    format!(
        "{{\n  \"name\": {},\n  \"elements\": [{}],\n  \"covers\": [{}]\n}}\n",
        quote(&spec.name),
        elements,
        covers
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    const CHAIN: &str = "{\n  \"name\": \"two\",\n  \"elements\": [\"0\", \"1\"],\n  \"covers\": [[\"0\", \"1\"]]\n}\n";

    #[test]
    fn canonical_text_round_trips() {
        let spec = parse(CHAIN).unwrap();
        assert_eq!(spec.elements, vec!["0", "1"]);
        assert_eq!(serialize(&spec), CHAIN);
    }

    #[test]
    fn compact_input_is_canonicalized() {
        let spec = parse(r#"{"name":"two","elements":["0","1"],"covers":[["0","1"]]}"#).unwrap();
        assert_eq!(serialize(&spec), CHAIN);
    }

    #[test]
    fn unknown_label_is_a_schema_error() {
        let err = parse(r#"{"name":"x","elements":["0","1"],"covers":[["0","q"]]}"#).unwrap_err();
        assert!(matches!(err, FormatError::Schema { .. }), "{err}");
    }

    #[test]
    fn missing_field_is_a_schema_error() {
        let err = parse(r#"{"name":"x","elements":["0","1"]}"#).unwrap_err();
        assert!(matches!(err, FormatError::Schema { .. }), "{err}");
    }

    #[test]
    fn broken_json_reports_position() {
        let err = parse("{\n  \"name\": \"x\",\n  \"elements\": [\"0\" \"1\"]\n}").unwrap_err();
        match err {
            FormatError::Syntax { line, column, .. } => {
                assert_eq!(line, 3);
                assert!(column > 0);
            }
            other => panic!("expected syntax error, got {other}"),
        }
    }

    #[test]
    fn escapes_survive() {
        let spec = LatticeSpec::new("q\"uote", &["0", "é", "1"], &[("0", "é"), ("é", "1")]);
        assert_eq!(parse(&serialize(&spec)).unwrap(), spec);
    }
}
