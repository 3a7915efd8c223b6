//! Interpretations and the four-valued evaluation of rule bodies.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::logic::{Logic, TruthValue};
use crate::syntax::{Atom, BodyElement, Conjunct, HypothesisSet, Literal, Program};

/// A finite set of ground classical literals. `p` and `-p` together make
/// `p` inconsistent; neither makes it unknown.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interpretation {
    literals: BTreeSet<Literal>,
}

impl Interpretation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn contains(&self, lit: &Literal) -> bool {
        self.literals.contains(lit)
    }

    pub fn insert(&mut self, lit: Literal) -> bool {
        self.literals.insert(lit)
    }

    /// Insert both `p` and `-p`.
    pub fn insert_pair(&mut self, atom: &Atom) {
        self.literals.insert(Literal::pos(atom.clone()));
        self.literals.insert(Literal::neg(atom.clone()));
    }

    pub fn len(&self) -> usize {
        self.literals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Literal> {
        self.literals.iter()
    }

    pub fn is_subset(&self, other: &Interpretation) -> bool {
        self.literals.is_subset(&other.literals)
    }

    pub fn union(&self, other: &Interpretation) -> Interpretation {
        self.literals.union(&other.literals).cloned().collect()
    }

    /// No atom occurs both positively and negatively.
    pub fn is_consistent(&self) -> bool {
        self.literals
            .iter()
            .filter(|l| !l.negated)
            .all(|l| !self.literals.contains(&l.complement()))
    }

    /// Atoms mentioned by some literal in the set.
    pub fn atoms(&self) -> BTreeSet<Atom> {
        self.literals.iter().map(|l| l.atom.clone()).collect()
    }

    /// `w^I(p)`.
    pub fn valuation(&self, atom: &Atom) -> TruthValue {
        let pos = self.literals.contains(&Literal::pos(atom.clone()));
        let neg = self.literals.contains(&Literal::neg(atom.clone()));
        match (pos, neg) {
            (true, false) => TruthValue::True,
            (true, true) => TruthValue::Inconsistent,
            (false, false) => TruthValue::Unknown,
            (false, true) => TruthValue::False,
        }
    }

    /// Value of a classical literal, with strong negation folded in.
    pub fn value(&self, lit: &Literal) -> TruthValue {
        let v = self.valuation(&lit.atom);
        if lit.negated {
            v.strong_neg()
        } else {
            v
        }
    }

    /// The valuation restricted to the given atoms.
    pub fn valuation_map<'a>(
        &self,
        atoms: impl IntoIterator<Item = &'a Atom>,
    ) -> BTreeMap<Atom, TruthValue> {
        atoms
            .into_iter()
            .map(|a| (a.clone(), self.valuation(a)))
            .collect()
    }

    /// Literals as strings, in canonical order.
    pub fn to_strings(&self) -> Vec<String> {
        self.literals.iter().map(Literal::to_string).collect()
    }
}

impl FromIterator<Literal> for Interpretation {
    fn from_iter<T: IntoIterator<Item = Literal>>(iter: T) -> Self {
        Interpretation {
            literals: iter.into_iter().collect(),
        }
    }
}

impl<'a> IntoIterator for &'a Interpretation {
    type Item = &'a Literal;
    type IntoIter = std::collections::btree_set::Iter<'a, Literal>;

    fn into_iter(self) -> Self::IntoIter {
        self.literals.iter()
    }
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, lit) in self.literals.iter().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{lit}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for Interpretation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.literals.iter().map(Literal::to_string))
    }
}

impl<'de> Deserialize<'de> for Interpretation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        strings
            .iter()
            .map(|s| crate::syntax::parse_literal(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// `w^I(p)` as a free function.
pub fn valuation(interp: &Interpretation, atom: &Atom) -> TruthValue {
    interp.valuation(atom)
}

/// `I^w`: the interpretation corresponding to an assignment.
pub fn to_interpretation(w: &BTreeMap<Atom, TruthValue>) -> Interpretation {
    let mut out = Interpretation::new();
    for (atom, v) in w {
        match v {
            TruthValue::True => {
                out.insert(Literal::pos(atom.clone()));
            }
            TruthValue::False => {
                out.insert(Literal::neg(atom.clone()));
            }
            TruthValue::Inconsistent => out.insert_pair(atom),
            TruthValue::Unknown => {}
        }
    }
    out
}

fn in_carrier(v: TruthValue, logic: Logic) -> Result<TruthValue> {
    if logic.carrier().contains(v) {
        Ok(v)
    } else {
        Err(Error::OutsideCarrier {
            value: v,
            ordering: logic.ordering(),
        })
    }
}

/// Value of one body element.
///
/// Without hypotheses, `not ℓ` is evaluated truth-functionally. With them,
/// its value is read from the hypothesis state and `ℓ` must be covered.
/// Inspection operators are two-valued under every logic.
pub fn eval_element(
    interp: &Interpretation,
    elem: &BodyElement,
    logic: Logic,
    hyps: Option<&HypothesisSet>,
) -> Result<TruthValue> {
    let v = match elem {
        BodyElement::Lit(l) => interp.value(l),
        BodyElement::Const(v) => *v,
        BodyElement::Inspect(l, set) => {
            if set.contains(interp.value(l)) {
                TruthValue::True
            } else {
                TruthValue::False
            }
        }
        BodyElement::DefaultLit(l) => match hyps {
            None => interp.value(l).default_neg(),
            Some(h) => h
                .get(l)
                .ok_or_else(|| Error::MissingHypothesis(l.to_string()))?
                .value(),
        },
    };
    in_carrier(v, logic)
}

/// Least upper bound over conjuncts of the greatest lower bound over their
/// elements. The empty body is `t`.
pub fn eval_body(
    interp: &Interpretation,
    body: &[Conjunct],
    logic: Logic,
    hyps: Option<&HypothesisSet>,
) -> Result<TruthValue> {
    if body.is_empty() {
        return Ok(TruthValue::True);
    }
    let ord = logic.ordering();
    let mut acc = TruthValue::False;
    for conj in body {
        let mut c = TruthValue::True;
        for elem in conj {
            c = ord.glb(c, eval_element(interp, elem, logic, hyps)?)?;
        }
        acc = ord.lub(acc, c)?;
    }
    Ok(acc)
}

/// Whether every rule, read as `body → head`, takes a designated value.
///
/// Default literals are evaluated truth-functionally. Under `K3+` the
/// interpretation must also be consistent. A value outside the logic's
/// carrier (e.g. `#i` under `K3+`) means the interpretation is not a model.
pub fn is_model(interp: &Interpretation, program: &Program, logic: Logic) -> bool {
    if logic == Logic::K3 && !interp.is_consistent() {
        return false;
    }
    program.rules.iter().all(|rule| {
        let body = match eval_body(interp, &rule.body, logic, None) {
            Ok(v) => v,
            Err(_) => return false,
        };
        let head = interp.value(&rule.head);
        logic.carrier().contains(head) && logic.is_designated(body.implies(head))
    })
}
