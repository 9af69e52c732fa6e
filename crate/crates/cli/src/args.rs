use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use lattle::laws::{SubsetUniverse, UniverseLevel};

#[derive(Parser, Debug)]
#[command(
    name = "lattle",
    version,
    about = "Generalized pseudocomplements, closures and filters on finite bounded lattices"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Largest lattice size searched.
    #[arg(long, global = true, default_value_t = 6)]
    pub max_size: usize,

    #[arg(long, global = true, value_enum, default_value_t = Mode::Exhaustive)]
    pub mode: Mode,

    /// Seed for random search.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Number of lattices drawn in random search.
    #[arg(long, global = true, default_value_t = 10_000)]
    pub budget: usize,

    /// Subsets that set-quantified laws range over. Without this flag:
    /// principal filters, singletons, pairs, D and S, plus every subset on
    /// lattices of at most 8 elements.
    #[arg(long, global = true, value_enum)]
    pub universe: Option<Universe>,

    /// Allow exhaustive search beyond 9 elements.
    #[arg(long, global = true)]
    pub allow_large: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Operator tables, distinguished sets, Stonean conditions and filters.
    Analyze {
        /// Corpus key (fig1 .. fig6) or path to a lattice file.
        input: String,
    },
    /// Run the law catalog.
    Laws {
        /// Corpus keys or lattice files.
        #[arg(required = true)]
        inputs: Vec<String>,
        /// Only run these laws (repeatable).
        #[arg(long = "law", value_name = "ID")]
        laws: Vec<String>,
    },
    /// Look for a lattice satisfying a query, or violating a law.
    Search {
        /// A law id, or a query such as "maximal & !prime".
        target: String,
    },
    /// The built-in reference lattices.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum CorpusAction {
    List,
    Show {
        key: String,
    },
    /// Write the canonical lattice file for a key.
    Export {
        key: String,
        path: PathBuf,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Random,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Universe {
    Singletons,
    Pairs,
    Filters,
    Powerset,
}

impl Cli {
    pub fn subset_universe(&self) -> SubsetUniverse {
        match self.universe {
            None => SubsetUniverse::default(),
            Some(u) => SubsetUniverse::at(match u {
                Universe::Singletons => UniverseLevel::Singletons,
                Universe::Pairs => UniverseLevel::Pairs,
                Universe::Filters => UniverseLevel::Filters,
                Universe::Powerset => UniverseLevel::Powerset,
            }),
        }
    }

    pub fn universe_name(&self) -> &'static str {
        match self.universe {
            None => "default",
            Some(Universe::Singletons) => "singletons",
            Some(Universe::Pairs) => "pairs",
            Some(Universe::Filters) => "filters",
            Some(Universe::Powerset) => "powerset",
        }
    }
}
