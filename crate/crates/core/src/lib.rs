//! Generalized pseudocomplements on finite bounded lattices.
//!
//! A [`Lattice`] is validated once and then answers order, meet and join
//! queries from tables. On top of it the crate computes the antichain-valued
//! pseudocomplement `A⁰`, the dense and sharp elements, the bar closure and
//! the D-polar, classifies filters (D-filters, closed, coherent, maximal,
//! prime, median), decides the Stonean conditions, and checks a catalog of
//! laws relating all of these, either on one lattice or across generated
//! lattices in search of counterexamples.

pub mod corpus;
pub mod filters;
pub mod lattice;
pub mod laws;
pub mod ops;
pub mod set;
pub mod stonean;

pub use filters::{Filter, FilterError, FilterFlags};
pub use lattice::{build_lattice, BuildError, Lattice, LatticeSpec, MissingBound};
pub use ops::OperatorTables;
pub use set::{Element, ElementSet, MAX_ELEMENTS};
pub use stonean::StoneanReport;
