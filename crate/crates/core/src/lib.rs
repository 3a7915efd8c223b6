//! Four-valued logic programs with strong, default and inspection negation.
//!
//! Programs are parsed and grounded by [`syntax`], evaluated under the
//! logics of [`logic`], and solved by the well-supported model engine in
//! [`wsm`]. [`oracle`] provides reference answer-set semantics.

pub mod error;
pub mod logic;
pub mod oracle;
pub mod report;
pub mod semantics;
pub mod stratify;
pub mod syntax;
pub mod wsm;

mod compiled;

pub use error::{Error, Result};
pub use logic::{Logic, Ordering, TruthSet, TruthValue};
pub use semantics::Interpretation;
