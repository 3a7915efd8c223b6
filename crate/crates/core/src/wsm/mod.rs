//! Well-supported model generation, hypothesis enumeration and checking.

mod engine;
mod enumerate;
mod interlace;
mod support;

pub use engine::{
    defaults_to_inspections, eliminate_inspections, find_correction, generate_wsm_4ql,
    generate_wsm_4ql_with_stats, generate_wsm_4sp, substitute_defaults, substitute_inspections,
    Generation, Stats,
};
pub use enumerate::{
    enumerate_4sp_models, enumerate_with, Enumeration, Strategy, EXHAUSTIVE_BOUND,
};
pub use interlace::interlace;
pub use support::{
    check_well_supported, DependencyGraph, Loops, Verdict, LOOP_CAP, MINIMALITY_CAP,
};
