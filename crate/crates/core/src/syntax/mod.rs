//! The rule language: syntax tree, parser, grounder and hypothesis files.

mod ast;
mod ground;
mod hypotheses;
mod parser;

pub use ast::{
    classify_dialect, Atom, BodyElement, Conjunct, Dialect, Literal, Program, Rule, Term,
};
pub use ground::ground;
pub use hypotheses::{parse_hypotheses, Assumed, HypothesisSet};
pub use parser::{
    parse_assumptions, parse_literal, parse_literal_set, parse_literal_sets, parse_program,
    Assumption,
};
