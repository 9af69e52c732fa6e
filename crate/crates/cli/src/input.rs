use std::fmt;
use std::fs;

use lattle::corpus::{self, builtin, CorpusError};
use lattle::{build_lattice, BuildError, Lattice};

/// Errors that end a command, each with its exit code.
#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or flag values (exit 1).
    Usage(String),
    /// Unreadable or malformed input (exit 2).
    Input(String),
    /// Well-formed input that does not describe a lattice (exit 3).
    NotALattice(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Input(_) => 2,
            CliError::NotALattice(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Input(m) => f.write_str(m),
            CliError::NotALattice(m) => write!(f, "not a lattice: {m}"),
        }
    }
}

impl From<BuildError> for CliError {
    fn from(e: BuildError) -> Self {
        if e.is_schema_error() {
            CliError::Input(e.to_string())
        } else {
            CliError::NotALattice(e.to_string())
        }
    }
}

impl From<CorpusError> for CliError {
    fn from(e: CorpusError) -> Self {
        match e {
            CorpusError::UnknownKey(_) => CliError::Input(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

/// A corpus key, or else a path to a lattice file.
pub fn load(input: &str) -> Result<Lattice, CliError> {
    if let Ok(entry) = builtin(input) {
        return Ok(entry.lattice());
    }
    let text = fs::read_to_string(input).map_err(|e| {
        CliError::Input(format!(
            "`{input}` is not a corpus key and cannot be read: {e}"
        ))
    })?;
    let spec = corpus::parse(&text).map_err(|e| CliError::Input(format!("{input}: {e}")))?;
    Ok(build_lattice(&spec)?)
}
