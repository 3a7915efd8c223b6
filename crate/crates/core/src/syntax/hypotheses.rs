//! Hypothesis sets for trial expressions: assumed truth values of default
//! literals.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::logic::TruthValue;

use super::ast::{Literal, Program};
use super::parser::parse_assumptions;

/// Which assumptions are currently held for one default literal `not ℓ`.
///
/// Parsed input always carries exactly one of the two; both appear only after
/// a hypothesis has been contradicted during model generation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Assumed {
    /// `not ℓ ↞ t`
    pub t: bool,
    /// `not ℓ ↞ f`
    pub f: bool,
}

impl Assumed {
    pub const TRUE: Assumed = Assumed { t: true, f: false };
    pub const FALSE: Assumed = Assumed { t: false, f: true };
    pub const BOTH: Assumed = Assumed { t: true, f: true };

    /// The truth value taken by `not ℓ`: `t`, `f`, or `i` when both are held.
    /// An empty entry reads as `u`.
    pub fn value(self) -> TruthValue {
        match (self.t, self.f) {
            (true, false) => TruthValue::True,
            (false, true) => TruthValue::False,
            (true, true) => TruthValue::Inconsistent,
            (false, false) => TruthValue::Unknown,
        }
    }

    pub fn is_contradicted(self) -> bool {
        self.t && self.f
    }

    pub fn union(self, other: Assumed) -> Assumed {
        Assumed {
            t: self.t || other.t,
            f: self.f || other.f,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HypothesisSet {
    entries: BTreeMap<Literal, Assumed>,
}

impl HypothesisSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Assign `value` (`t` or `f`) to each literal, pairwise.
    pub fn from_assignment<'a>(
        literals: impl IntoIterator<Item = &'a Literal>,
        assume_true: impl IntoIterator<Item = bool>,
    ) -> Self {
        let entries = literals
            .into_iter()
            .zip(assume_true)
            .map(|(l, t)| (l.clone(), if t { Assumed::TRUE } else { Assumed::FALSE }))
            .collect();
        HypothesisSet { entries }
    }

    /// Add assumptions for `literal`, keeping any already present.
    pub fn add(&mut self, literal: Literal, assumed: Assumed) -> bool {
        let entry = self.entries.entry(literal).or_default();
        let merged = entry.union(assumed);
        let changed = merged != *entry;
        *entry = merged;
        changed
    }

    pub fn get(&self, literal: &Literal) -> Option<Assumed> {
        self.entries.get(literal).copied()
    }

    pub fn contains(&self, literal: &Literal) -> bool {
        self.entries.contains_key(literal)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Literal, Assumed)> {
        self.entries.iter().map(|(l, a)| (l, *a))
    }

    pub fn literals(&self) -> impl Iterator<Item = &Literal> {
        self.entries.keys()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Literals whose hypotheses were both assumed and refuted.
    pub fn contradicted(&self) -> Vec<Literal> {
        self.iter()
            .filter(|(_, a)| a.is_contradicted())
            .map(|(l, _)| l.clone())
            .collect()
    }

    /// Check that the set covers exactly the default literals of `program`.
    pub fn check_covers(&self, program: &Program) -> Result<()> {
        let defaults = program.default_literals();
        if let Some(missing) = defaults.iter().find(|l| !self.contains(l)) {
            return Err(Error::MissingHypothesis(missing.to_string()));
        }
        if let Some(extra) = self.literals().find(|l| !defaults.contains(*l)) {
            return Err(Error::ExtraHypothesis(extra.to_string()));
        }
        Ok(())
    }
}

impl fmt::Display for HypothesisSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (lit, a) in self.iter() {
            if a.t {
                writeln!(f, "assume not {lit} = t.")?;
            }
            if a.f {
                writeln!(f, "assume not {lit} = f.")?;
            }
        }
        Ok(())
    }
}

/// Parse a hypothesis file and check it against a ground program: one
/// assumption, `t` or `f`, for every literal under `not` and nothing else.
pub fn parse_hypotheses(text: &str, program: &Program) -> Result<HypothesisSet> {
    let mut set = HypothesisSet::new();
    for a in parse_assumptions(text)? {
        let assumed = match a.value {
            TruthValue::True => Assumed::TRUE,
            TruthValue::False => Assumed::FALSE,
            _ => {
                return Err(Error::InconsistentAssumption(
                    a.literal.to_string(),
                    a.literal.complement().to_string(),
                ))
            }
        };
        match set.get(&a.literal) {
            Some(existing) if existing != assumed => {
                return Err(Error::ConflictingHypothesis(a.literal.to_string()))
            }
            _ => {
                set.add(a.literal, assumed);
            }
        }
    }
    set.check_covers(program)?;
    Ok(set)
}
