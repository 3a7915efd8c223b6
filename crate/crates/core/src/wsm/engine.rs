//! Well-supported model generation for 4QL and 4SP programs.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::compiled::{require_ground, value, Compiled, HypState, LitId};
use crate::error::{Error, Result};
use crate::logic::{TruthSet, TruthValue};
use crate::semantics::Interpretation;
use crate::stratify::{find_stratification, validate_stratification, StratKind, Stratification};
use crate::syntax::{Atom, BodyElement, HypothesisSet, Literal, Program, Rule};

use super::interlace::interlace_state;

/// Counters collected while generating a model.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    /// Rounds of the outer correction loop, summed over strata.
    pub iterations: u64,
    /// Rule bodies evaluated, in least-model passes and corrections alike.
    pub body_evaluations: u64,
}

impl Stats {
    pub fn absorb(&mut self, other: Stats) {
        self.iterations += other.iterations;
        self.body_evaluations += other.body_evaluations;
    }
}

/// Result of running a 4SP program under one hypothesis set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generation {
    pub model: Interpretation,
    /// Hypotheses as supplied.
    pub initial: HypothesisSet,
    /// Hypotheses after refutations were added.
    pub hypotheses: HypothesisSet,
    /// Literals whose hypotheses ended up both assumed and refuted.
    pub contradicted: Vec<Literal>,
    pub stats: Stats,
}

/// Atom pairs that must become inconsistent: starting from `set`, any rule
/// whose body is `i` while its head is not `i` forces the head's atom to `i`.
fn correction(c: &Compiled, set: &[bool], hyps: Option<&HypState>, stats: &mut Stats) -> Vec<bool> {
    let mut k = set.to_vec();
    let mut j = vec![false; set.len()];
    loop {
        let mut changed = false;
        for rule in &c.rules {
            if value(&k, rule.head) == TruthValue::Inconsistent {
                continue;
            }
            stats.body_evaluations += 1;
            if c.eval_body(rule, &k, hyps) == TruthValue::Inconsistent {
                let pos = rule.head & !1;
                for id in [pos, pos + 1] {
                    k[id] = true;
                    j[id] = true;
                }
                changed = true;
            }
        }
        if !changed {
            return j;
        }
    }
}

/// The outer loop: least model of the rules not yet known inconsistent,
/// then correction, until a correction adds nothing. With hypotheses, an
/// `f`-only hypothesis whose literal is not derived as true is refuted, and
/// the interpretation is interlaced with the hypotheses in every round.
fn run(c: &Compiled, mut hyps: Option<&mut HypState>, stats: &mut Stats) -> Vec<bool> {
    let n = c.n_lits();
    let mut inc = vec![false; n];
    loop {
        stats.iterations += 1;
        let removed: Vec<bool> = c.rules.iter().map(|r| inc[r.head]).collect();
        let derived = c.least(&removed, hyps.as_deref(), &mut stats.body_evaluations);
        let mut interp: Vec<bool> = inc.iter().zip(&derived).map(|(a, b)| *a || *b).collect();
        let mut hyps_changed = false;
        if let Some(h) = hyps.as_deref_mut() {
            for i in 0..h.keys.len() {
                let k: LitId = h.keys[i];
                let a = &mut h.assumed[k];
                if a.f && !a.t && value(&interp, k) != TruthValue::True {
                    a.t = true;
                    hyps_changed = true;
                }
            }
            hyps_changed |= interlace_state(&mut interp, h);
        }
        let j = correction(c, &interp, hyps.as_deref(), stats);
        let j_empty = !j.iter().any(|&b| b);
        if j_empty && !hyps_changed {
            return interp;
        }
        for a in (0..n).step_by(2) {
            let pair = (interp[a] && interp[a + 1]) || j[a];
            inc[a] = pair;
            inc[a + 1] = pair;
        }
    }
}

fn inspection_value(interp: &Interpretation, elem: &BodyElement) -> Option<BodyElement> {
    match elem {
        BodyElement::Inspect(l, set) => {
            Some(BodyElement::Const(if set.contains(interp.value(l)) {
                TruthValue::True
            } else {
                TruthValue::False
            }))
        }
        _ => None,
    }
}

/// Replace every inspection by its two-valued result under `interp`.
pub fn substitute_inspections(program: &Program, interp: &Interpretation) -> Program {
    Program::new(
        program
            .rules
            .iter()
            .map(|r| substitute_rule(r, interp))
            .collect(),
    )
}

fn substitute_rule(rule: &Rule, interp: &Interpretation) -> Rule {
    let mut out = rule.clone();
    for elem in out.body.iter_mut().flatten() {
        if let Some(c) = inspection_value(interp, elem) {
            *elem = c;
        }
    }
    out
}

/// Rewrite each `not ℓ` as `ℓ in {u, f}`, its two-valued reading.
pub fn defaults_to_inspections(program: &Program) -> Program {
    let unknown_or_false = TruthSet::of(&[TruthValue::Unknown, TruthValue::False]);
    let mut out = program.clone();
    for elem in out
        .rules
        .iter_mut()
        .flat_map(|r| r.body.iter_mut().flatten())
    {
        if let BodyElement::DefaultLit(l) = elem {
            *elem = BodyElement::Inspect(l.clone(), unknown_or_false);
        }
    }
    out
}

/// Replace every `not ℓ` by the constant its hypothesis currently gives.
pub fn substitute_defaults(program: &Program, hyps: &HypothesisSet) -> Result<Program> {
    let mut out = program.clone();
    for elem in out
        .rules
        .iter_mut()
        .flat_map(|r| r.body.iter_mut().flatten())
    {
        if let BodyElement::DefaultLit(l) = elem {
            let a = hyps
                .get(l)
                .ok_or_else(|| Error::MissingHypothesis(l.to_string()))?;
            *elem = BodyElement::Const(a.value());
        }
    }
    Ok(out)
}

fn run_program(
    program: &Program,
    hyps: Option<&HypothesisSet>,
    stats: &mut Stats,
) -> (Interpretation, Option<HypothesisSet>) {
    let extra: Vec<Atom> = hyps
        .map(|h| h.literals().map(|l| l.atom.clone()).collect())
        .unwrap_or_default();
    let c = Compiled::new(program, &extra);
    let mut state = hyps.map(|h| c.hyp_state(h));
    let set = run(&c, state.as_mut(), stats);
    (c.interpretation(&set), state.map(|s| c.hypotheses(&s)))
}

/// Process strata bottom up, resolving inspections against the model of the
/// strata below before running the rules that contain them.
fn run_stratified(
    program: &Program,
    strat: &Stratification,
    hyps: Option<&HypothesisSet>,
    stats: &mut Stats,
) -> (Interpretation, Option<HypothesisSet>) {
    let defined: BTreeSet<&Atom> = program.rules.iter().map(|r| &r.head.atom).collect();
    let mut settled: BTreeSet<&Atom> = BTreeSet::new();
    let mut acc: Vec<Rule> = Vec::new();
    let mut model = Interpretation::new();
    let mut final_hyps = hyps.cloned();
    for (si, stratum) in strat.strata.iter().enumerate() {
        for &r in stratum {
            acc.push(substitute_rule(&program.rules[r], &model));
            settled.insert(&program.rules[r].head.atom);
        }
        let last = si + 1 == strat.strata.len();
        let next_inspects = !last
            && strat.strata[si + 1]
                .iter()
                .any(|&r| program.rules[r].has_inspection());
        if !(last || next_inspects) {
            continue;
        }
        let partial = Program::new(acc.clone());
        let part_hyps = hyps.map(|h| {
            let defaults = partial.default_literals();
            let mut out = HypothesisSet::new();
            for (l, a) in h.iter() {
                if defaults.contains(l) || settled.contains(&l.atom) || !defined.contains(&l.atom) {
                    out.add(l.clone(), a);
                }
            }
            out
        });
        let (m, h) = run_program(&partial, part_hyps.as_ref(), stats);
        model = m;
        if last {
            final_hyps = h;
        }
    }
    (model, final_hyps)
}

/// The well-supported model of a ground 4QL program (no `not`). Inspections
/// require the program to be stratifiable with respect to them.
pub fn generate_wsm_4ql(program: &Program) -> Result<Interpretation> {
    generate_wsm_4ql_with_stats(program).map(|(m, _)| m)
}

pub fn generate_wsm_4ql_with_stats(program: &Program) -> Result<(Interpretation, Stats)> {
    require_ground(program)?;
    if program.has_default() {
        return Err(Error::Unsupported {
            construct: "default negation",
            context: "4QL programs use inspection; supply hypotheses and run as 4SP".into(),
        });
    }
    let mut stats = Stats::default();
    let model = if program.has_inspection() {
        let strat = find_stratification(program, StratKind::Inspection)
            .ok_or(Error::NotStratifiable("inspection"))?;
        run_stratified(program, &strat, None, &mut stats).0
    } else {
        run_program(program, None, &mut stats).0
    };
    Ok((model, stats))
}

/// Run a 4QL program along a given inspection stratification.
pub fn eliminate_inspections(program: &Program, strat: &Stratification) -> Result<Interpretation> {
    require_ground(program)?;
    if program.has_default() {
        return Err(Error::Unsupported {
            construct: "default negation",
            context: "inspection elimination takes 4QL programs".into(),
        });
    }
    if strat.kind != StratKind::Inspection {
        return Err(Error::InvalidStratification(
            "expected an inspection stratification".into(),
        ));
    }
    if !validate_stratification(program, strat)? {
        return Err(Error::InvalidStratification(
            "rules violate the stratum order".into(),
        ));
    }
    let mut stats = Stats::default();
    Ok(run_stratified(program, strat, None, &mut stats).0)
}

/// The rules forced inconsistent by the current interpretation: the atom
/// pairs that a correction step adds to `interp`. Default literals are read
/// truth-functionally.
pub fn find_correction(program: &Program, interp: &Interpretation) -> Result<Interpretation> {
    require_ground(program)?;
    if program.has_inspection() {
        return Err(Error::Unsupported {
            construct: "inspection",
            context: "eliminate inspections before correcting".into(),
        });
    }
    let atoms = interp.atoms();
    let c = Compiled::new(program, &atoms);
    let set = c.set_of(interp);
    let j = correction(&c, &set, None, &mut Stats::default());
    Ok(c.interpretation(&j))
}

/// Generate the model of a 4SP program under hypotheses covering exactly its
/// default literals.
pub fn generate_wsm_4sp(program: &Program, hyps: &HypothesisSet) -> Result<Generation> {
    require_ground(program)?;
    hyps.check_covers(program)?;
    let mut stats = Stats::default();
    let (model, final_hyps) = if program.has_inspection() {
        let strat = find_stratification(program, StratKind::Inspection)
            .ok_or(Error::NotStratifiable("inspection"))?;
        run_stratified(program, &strat, Some(hyps), &mut stats)
    } else {
        run_program(program, Some(hyps), &mut stats)
    };
    let final_hyps = final_hyps.unwrap_or_default();
    Ok(Generation {
        model,
        initial: hyps.clone(),
        contradicted: final_hyps.contradicted(),
        hypotheses: final_hyps,
        stats,
    })
}
