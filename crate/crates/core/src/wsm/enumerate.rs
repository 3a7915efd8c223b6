//! Generating several models of a 4SP program by varying its hypotheses.

use std::collections::{HashMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::report::ModelReport;
use crate::semantics::Interpretation;
use crate::syntax::{HypothesisSet, Literal, Program};

use super::engine::{generate_wsm_4sp, Stats};

/// Default limit on default literals for [`Strategy::Exhaustive`].
pub const EXHAUSTIVE_BOUND: usize = 16;

/// Hypothesis sets tried per requested model by the non-exhaustive
/// strategies when no explicit trial limit is given.
const TRIALS_PER_MODEL: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Assignments in order, `t` before `f`, first literal most significant.
    Lexicographic,
    /// Distinct assignments drawn from a seeded generator.
    Random { seed: u64 },
    /// Every assignment; refused past the exhaustive bound.
    Exhaustive,
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    pub strategy: Strategy,
    /// Stop after this many distinct models.
    pub cap: Option<usize>,
    pub exhaustive_bound: usize,
    /// Stop after trying this many hypothesis sets.
    pub max_trials: Option<usize>,
}

impl Enumeration {
    pub fn new(strategy: Strategy, cap: Option<usize>) -> Self {
        Enumeration {
            strategy,
            cap,
            exhaustive_bound: EXHAUSTIVE_BOUND,
            max_trials: None,
        }
    }
}

/// Distinct models with the hypotheses that produced them, in the order
/// found.
pub fn enumerate_4sp_models(
    program: &Program,
    strategy: Strategy,
    cap: Option<usize>,
) -> Result<Vec<ModelReport>> {
    enumerate_with(program, &Enumeration::new(strategy, cap)).map(|(r, _)| r)
}

pub fn enumerate_with(program: &Program, opts: &Enumeration) -> Result<(Vec<ModelReport>, Stats)> {
    let defaults: Vec<Literal> = program.default_literals().into_iter().collect();
    let d = defaults.len();
    let space = if d < usize::BITS as usize {
        Some(1usize << d)
    } else {
        None
    };
    let exhaustive =
        opts.strategy == Strategy::Exhaustive || (opts.cap.is_none() && opts.max_trials.is_none());
    if exhaustive && d > opts.exhaustive_bound {
        return Err(Error::ExhaustiveBound {
            defaults: d,
            bound: opts.exhaustive_bound,
        });
    }
    let mut limit = opts
        .max_trials
        .or_else(|| (!exhaustive).then(|| opts.cap.unwrap_or(1).saturating_mul(TRIALS_PER_MODEL)))
        .unwrap_or(usize::MAX);
    if let Some(space) = space {
        limit = limit.min(space);
    }

    let atoms = program.atoms();
    let mut reports: Vec<ModelReport> = Vec::new();
    let mut seen: HashMap<Interpretation, usize> = HashMap::new();
    let mut stats = Stats::default();
    let mut assign = Assignments::new(opts.strategy, d);
    for _ in 0..limit {
        if opts.cap.is_some_and(|c| reports.len() >= c) {
            break;
        }
        let Some(bits) = assign.next() else { break };
        // bit set: `not ℓ` assumed false
        let hyps = HypothesisSet::from_assignment(&defaults, bits.iter().map(|b| !b));
        let g = generate_wsm_4sp(program, &hyps)?;
        stats.absorb(g.stats);
        match seen.get(&g.model) {
            Some(&i) => reports[i].generated_by.push(hyps),
            None => {
                seen.insert(g.model.clone(), reports.len());
                reports
                    .push(ModelReport::new(g.model, &atoms).with_hypotheses(hyps, g.contradicted));
            }
        }
    }
    Ok((reports, stats))
}

enum Assignments {
    Counter {
        bits: Vec<bool>,
        done: bool,
    },
    Random {
        rng: Box<ChaCha8Rng>,
        len: usize,
        tried: HashSet<Vec<bool>>,
    },
}

impl Assignments {
    fn new(strategy: Strategy, len: usize) -> Self {
        match strategy {
            Strategy::Random { seed } => Assignments::Random {
                rng: Box::new(ChaCha8Rng::seed_from_u64(seed)),
                len,
                tried: HashSet::new(),
            },
            _ => Assignments::Counter {
                bits: vec![false; len],
                done: false,
            },
        }
    }

    fn next(&mut self) -> Option<Vec<bool>> {
        match self {
            Assignments::Counter { bits, done } => {
                if *done {
                    return None;
                }
                let out = bits.clone();
                // binary increment, last position fastest
                match bits.iter().rposition(|b| !b) {
                    Some(i) => {
                        bits[i] = true;
                        bits[i + 1..].iter_mut().for_each(|b| *b = false);
                    }
                    None => *done = true,
                }
                Some(out)
            }
            Assignments::Random { rng, len, tried } => {
                if *len < 64 && tried.len() as u64 >= 1u64 << *len {
                    return None;
                }
                loop {
                    let bits: Vec<bool> = (0..*len).map(|_| rng.gen()).collect();
                    if tried.insert(bits.clone()) {
                        return Some(bits);
                    }
                }
            }
        }
    }
}
