//! Built-in example lattices, the lattice file format, and lattice
//! generators for counterexample search.

mod builtin;
pub mod enumerate;
pub mod format;
pub mod random;

use thiserror::Error;

pub use builtin::{builtin, builtin_keys, CorpusEntry, PrintedTables, BUILTIN_KEYS};
pub use enumerate::{enumerate_lattices, enumerate_up_to, LatticeStream, SOFT_SIZE_CAP};
pub use format::{parse, serialize, FormatError};
pub use random::{random_lattice, random_lattice_with_budget};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("unknown corpus key `{0}`")]
    UnknownKey(String),
    #[error("size {requested} exceeds the cap of {cap}")]
    SizeCapExceeded { requested: usize, cap: usize },
    #[error("lattices need at least 2 elements, got {0}")]
    SizeTooSmall(usize),
    #[error("no lattice of size {size} found for seed {seed} within {budget} attempts")]
    RetryBudgetExhausted {
        size: usize,
        seed: u64,
        budget: usize,
    },
}
