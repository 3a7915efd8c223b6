use thiserror::Error;

use crate::logic::{Ordering, TruthValue};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid truth value `{0}` (expected one of t, f, u, i)")]
    InvalidTruthValue(String),

    #[error("truth value {value} is outside the carrier of the {ordering} ordering")]
    OutsideCarrier {
        value: TruthValue,
        ordering: Ordering,
    },

    #[error("unsafe rule `{rule}`: variable {variable} does not occur in a classical literal of the same conjunct")]
    UnsafeRule { rule: String, variable: String },

    #[error("rule `{0}` has variables but the program mentions no constants")]
    NoConstants(String),

    #[error("no hypothesis given for `not {0}`")]
    MissingHypothesis(String),

    #[error("hypothesis for `{0}`, which does not occur under `not` in the program")]
    ExtraHypothesis(String),

    #[error("conflicting hypotheses for `not {0}`")]
    ConflictingHypothesis(String),

    #[error("cannot assume `not {0} = i`; write `assume not {0} = f.` and `assume not {1} = f.` instead")]
    InconsistentAssumption(String, String),

    #[error("`{construct}` is not allowed here: {context}")]
    Unsupported {
        construct: &'static str,
        context: String,
    },

    #[error("interpretation is inconsistent on `{0}`")]
    InconsistentInterpretation(String),

    #[error("program has {atoms} atoms, above the brute-force bound of {bound}")]
    AtomBound { atoms: usize, bound: usize },

    #[error("program has {defaults} default literals, above the exhaustive enumeration bound of {bound}")]
    ExhaustiveBound { defaults: usize, bound: usize },

    #[error("program is not stratifiable with respect to {0}")]
    NotStratifiable(&'static str),

    #[error("invalid stratification: {0}")]
    InvalidStratification(String),

    #[error("unknown ranking criterion `{0}`")]
    UnknownCriterion(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
