//! Index-based form of a ground program. Literal `k` of atom `a` is
//! `2a` when positive and `2a + 1` when strongly negated, so a literal set is
//! a flat bit vector and `id ^ 1` is the complement.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::logic::{TruthSet, TruthValue};
use crate::semantics::Interpretation;
use crate::syntax::{Assumed, Atom, BodyElement, HypothesisSet, Literal, Program};

pub(crate) type LitId = usize;

#[derive(Clone, Debug)]
pub(crate) enum Elem {
    Lit(LitId),
    Default(LitId),
    Inspect(LitId, TruthSet),
    Const(TruthValue),
}

#[derive(Clone, Debug)]
pub(crate) struct CRule {
    pub head: LitId,
    pub body: Vec<Vec<Elem>>,
}

#[derive(Clone, Debug)]
pub(crate) struct Compiled {
    pub atoms: Vec<Atom>,
    index: HashMap<Atom, usize>,
    pub rules: Vec<CRule>,
}

/// Assumptions per literal id; an empty entry means "not a hypothesis".
#[derive(Clone, Debug)]
pub(crate) struct HypState {
    pub assumed: Vec<Assumed>,
    pub keys: Vec<LitId>,
}

impl HypState {
    pub fn value(&self, id: LitId) -> TruthValue {
        self.assumed[id].value()
    }
}

pub(crate) fn require_ground(program: &Program) -> Result<()> {
    if program.is_ground() {
        Ok(())
    } else {
        Err(Error::Unsupported {
            construct: "variables",
            context: "ground the program first".into(),
        })
    }
}

impl Compiled {
    /// Compile a ground program; `extra` atoms are indexed as well so that
    /// interpretations and hypotheses mentioning them can be mapped in.
    pub fn new<'a>(program: &Program, extra: impl IntoIterator<Item = &'a Atom>) -> Self {
        let mut all: BTreeSet<Atom> = program.atoms();
        all.extend(extra.into_iter().cloned());
        let atoms: Vec<Atom> = all.into_iter().collect();
        let index = atoms
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, a)| (a, i))
            .collect();
        let mut c = Compiled {
            atoms,
            index,
            rules: Vec::new(),
        };
        c.rules = program
            .rules
            .iter()
            .map(|r| CRule {
                head: c.lit(&r.head),
                body: r
                    .body
                    .iter()
                    .map(|conj| {
                        conj.iter()
                            .map(|e| match e {
                                BodyElement::Lit(l) => Elem::Lit(c.lit(l)),
                                BodyElement::DefaultLit(l) => Elem::Default(c.lit(l)),
                                BodyElement::Inspect(l, s) => Elem::Inspect(c.lit(l), *s),
                                BodyElement::Const(v) => Elem::Const(*v),
                            })
                            .collect()
                    })
                    .collect(),
            })
            .collect();
        c
    }

    pub fn n_lits(&self) -> usize {
        self.atoms.len() * 2
    }

    pub fn lit(&self, l: &Literal) -> LitId {
        self.index[&l.atom] * 2 + l.negated as usize
    }

    pub fn literal(&self, id: LitId) -> Literal {
        Literal {
            atom: self.atoms[id / 2].clone(),
            negated: id % 2 == 1,
        }
    }

    pub fn set_of(&self, interp: &Interpretation) -> Vec<bool> {
        let mut set = vec![false; self.n_lits()];
        for l in interp {
            set[self.lit(l)] = true;
        }
        set
    }

    pub fn interpretation(&self, set: &[bool]) -> Interpretation {
        set.iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(id, _)| self.literal(id))
            .collect()
    }

    pub fn hyp_state(&self, hyps: &HypothesisSet) -> HypState {
        let mut assumed = vec![Assumed::default(); self.n_lits()];
        let mut keys = Vec::new();
        for (l, a) in hyps.iter() {
            let id = self.lit(l);
            assumed[id] = a;
            keys.push(id);
        }
        HypState { assumed, keys }
    }

    pub fn hypotheses(&self, state: &HypState) -> HypothesisSet {
        let mut out = HypothesisSet::new();
        for &k in &state.keys {
            out.add(self.literal(k), state.assumed[k]);
        }
        out
    }

    /// Membership closure: a conjunct holds when each of its literals is in
    /// the set, each constant is `t` and each default literal is assumed
    /// exactly `t`. Rules flagged in `removed` are skipped.
    pub fn least(&self, removed: &[bool], hyps: Option<&HypState>, evals: &mut u64) -> Vec<bool> {
        let mut set = vec![false; self.n_lits()];
        let mut done = removed.to_vec();
        loop {
            let mut changed = false;
            for (ri, rule) in self.rules.iter().enumerate() {
                if done[ri] {
                    continue;
                }
                if set[rule.head] {
                    done[ri] = true;
                    continue;
                }
                *evals += 1;
                let fires = rule.body.is_empty()
                    || rule.body.iter().any(|conj| {
                        conj.iter().all(|e| match *e {
                            Elem::Lit(l) => set[l],
                            Elem::Const(v) => v == TruthValue::True,
                            Elem::Default(l) => {
                                hyps.is_some_and(|h| h.value(l) == TruthValue::True)
                            }
                            Elem::Inspect(..) => false,
                        })
                    });
                if fires {
                    set[rule.head] = true;
                    done[ri] = true;
                    changed = true;
                }
            }
            if !changed {
                return set;
            }
        }
    }

    /// Four-valued body value under the linear ordering, where conjunction
    /// and disjunction are min and max.
    pub fn eval_body(&self, rule: &CRule, set: &[bool], hyps: Option<&HypState>) -> TruthValue {
        if rule.body.is_empty() {
            return TruthValue::True;
        }
        rule.body
            .iter()
            .map(|conj| {
                conj.iter()
                    .map(|e| self.eval_elem(e, set, hyps))
                    .min()
                    .unwrap_or(TruthValue::True)
            })
            .max()
            .unwrap_or(TruthValue::False)
    }

    pub fn eval_elem(&self, e: &Elem, set: &[bool], hyps: Option<&HypState>) -> TruthValue {
        match *e {
            Elem::Lit(l) => value(set, l),
            Elem::Const(v) => v,
            Elem::Default(l) => match hyps {
                Some(h) => h.value(l),
                None => value(set, l).default_neg(),
            },
            Elem::Inspect(l, s) => {
                if s.contains(value(set, l)) {
                    TruthValue::True
                } else {
                    TruthValue::False
                }
            }
        }
    }
}

/// Value of literal `id` in a literal set.
pub(crate) fn value(set: &[bool], id: LitId) -> TruthValue {
    match (set[id], set[id ^ 1]) {
        (true, false) => TruthValue::True,
        (true, true) => TruthValue::Inconsistent,
        (false, false) => TruthValue::Unknown,
        (false, true) => TruthValue::False,
    }
}
