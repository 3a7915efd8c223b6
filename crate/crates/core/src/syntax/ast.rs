use std::collections::BTreeSet;
use std::fmt;

use crate::logic::{TruthSet, TruthValue};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Const(String),
    Var(String),
}

impl Term {
    pub fn is_var(&self) -> bool {
        matches!(self, Term::Var(_))
    }

    pub fn name(&self) -> &str {
        match self {
            Term::Const(s) | Term::Var(s) => s,
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `pred(t1, ..., tn)`. A ground atom doubles as a proposition.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom {
    pub predicate: String,
    pub args: Vec<Term>,
}

impl Atom {
    pub fn new(predicate: impl Into<String>, args: Vec<Term>) -> Self {
        Atom {
            predicate: predicate.into(),
            args,
        }
    }

    /// A nullary atom.
    pub fn prop(name: impl Into<String>) -> Self {
        Atom::new(name, Vec::new())
    }

    pub fn is_ground(&self) -> bool {
        !self.args.iter().any(Term::is_var)
    }

    pub fn variables(&self) -> impl Iterator<Item = &str> {
        self.args.iter().filter(|t| t.is_var()).map(Term::name)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.predicate)?;
        if !self.args.is_empty() {
            f.write_str("(")?;
            for (n, arg) in self.args.iter().enumerate() {
                if n > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{arg}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// A classical literal: an atom or its strong negation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub atom: Atom,
    pub negated: bool,
}

impl Literal {
    pub fn pos(atom: Atom) -> Self {
        Literal {
            atom,
            negated: false,
        }
    }

    pub fn neg(atom: Atom) -> Self {
        Literal {
            atom,
            negated: true,
        }
    }

    /// The strong negation of this literal; `¬¬ℓ` collapses back to `ℓ`.
    pub fn complement(&self) -> Self {
        Literal {
            atom: self.atom.clone(),
            negated: !self.negated,
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            f.write_str("-")?;
        }
        write!(f, "{}", self.atom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BodyElement {
    Lit(Literal),
    /// `not ℓ`
    DefaultLit(Literal),
    /// `ℓ in {..}`
    Inspect(Literal, TruthSet),
    Const(TruthValue),
}

impl BodyElement {
    pub fn literal(&self) -> Option<&Literal> {
        match self {
            BodyElement::Lit(l) | BodyElement::DefaultLit(l) | BodyElement::Inspect(l, _) => {
                Some(l)
            }
            BodyElement::Const(_) => None,
        }
    }

    pub(crate) fn literal_mut(&mut self) -> Option<&mut Literal> {
        match self {
            BodyElement::Lit(l) | BodyElement::DefaultLit(l) | BodyElement::Inspect(l, _) => {
                Some(l)
            }
            BodyElement::Const(_) => None,
        }
    }
}

impl fmt::Display for BodyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BodyElement::Lit(l) => write!(f, "{l}"),
            BodyElement::DefaultLit(l) => write!(f, "not {l}"),
            BodyElement::Inspect(l, set) => write!(f, "{l} in {set}"),
            BodyElement::Const(v) => write!(f, "#{v}"),
        }
    }
}

pub type Conjunct = Vec<BodyElement>;

/// `head :- c1 ; c2 ; ... .` where each `ci` is a conjunction. An empty body
/// is a fact.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rule {
    pub head: Literal,
    pub body: Vec<Conjunct>,
}

impl Rule {
    pub fn fact(head: Literal) -> Self {
        Rule {
            head,
            body: Vec::new(),
        }
    }

    pub fn new(head: Literal, body: Vec<Conjunct>) -> Self {
        Rule { head, body }
    }

    pub fn elements(&self) -> impl Iterator<Item = &BodyElement> {
        self.body.iter().flatten()
    }

    pub fn is_ground(&self) -> bool {
        self.head.atom.is_ground()
            && self
                .elements()
                .filter_map(BodyElement::literal)
                .all(|l| l.atom.is_ground())
    }

    /// Variables in order of first occurrence.
    pub fn variables(&self) -> Vec<String> {
        let mut seen = Vec::new();
        let atoms = std::iter::once(&self.head.atom)
            .chain(self.elements().filter_map(|e| e.literal().map(|l| &l.atom)));
        for atom in atoms {
            for v in atom.variables() {
                if !seen.iter().any(|s: &String| s == v) {
                    seen.push(v.to_string());
                }
            }
        }
        seen
    }

    pub fn has_default(&self) -> bool {
        self.elements()
            .any(|e| matches!(e, BodyElement::DefaultLit(_)))
    }

    pub fn has_inspection(&self) -> bool {
        self.elements()
            .any(|e| matches!(e, BodyElement::Inspect(..)))
    }

    /// Default literals must be accompanied by at least one classical literal
    /// or truth constant other than `i` in their conjunct.
    pub fn is_guarded(&self) -> bool {
        self.body.iter().all(|conj| {
            let has_default = conj.iter().any(|e| matches!(e, BodyElement::DefaultLit(_)));
            let guards = conj.iter().any(|e| {
                matches!(e, BodyElement::Lit(_))
                    || matches!(e, BodyElement::Const(v) if *v != TruthValue::Inconsistent)
            });
            !has_default || guards
        })
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.head)?;
        if !self.body.is_empty() {
            f.write_str(" :- ")?;
            for (n, conj) in self.body.iter().enumerate() {
                if n > 0 {
                    f.write_str("; ")?;
                }
                for (m, elem) in conj.iter().enumerate() {
                    if m > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{elem}")?;
                }
            }
        }
        f.write_str(".")
    }
}

/// Which member of the language family a program belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dialect {
    /// No default negation, no inspection operators.
    Pure,
    /// Normal ASP: single-conjunct bodies, guarded default literals.
    NormalAsp,
    /// Inspection operators but no default negation.
    FourQl,
    /// Default negation with disjunctive bodies, `#i` or unguarded defaults.
    FourSp,
    /// Both default negation and inspection operators.
    Mixed,
}

impl Dialect {
    pub fn name(self) -> &'static str {
        match self {
            Dialect::Pure => "pure",
            Dialect::NormalAsp => "normal-asp",
            Dialect::FourQl => "fourql",
            Dialect::FourSp => "foursp",
            Dialect::Mixed => "mixed",
        }
    }
}

impl fmt::Display for Dialect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Program {
    pub rules: Vec<Rule>,
}

impl Program {
    pub fn new(rules: Vec<Rule>) -> Self {
        Program { rules }
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn is_ground(&self) -> bool {
        self.rules.iter().all(Rule::is_ground)
    }

    pub fn has_default(&self) -> bool {
        self.rules.iter().any(Rule::has_default)
    }

    pub fn has_inspection(&self) -> bool {
        self.rules.iter().any(Rule::has_inspection)
    }

    /// Free of both default negation and inspection operators.
    pub fn is_pure(&self) -> bool {
        !self.has_default() && !self.has_inspection()
    }

    /// Single-conjunct bodies over literals, default literals and the
    /// constants `f`, `u`, `t`. The guard condition is checked separately.
    pub fn has_asp_syntax(&self) -> bool {
        self.rules.iter().all(|r| {
            r.body.len() <= 1
                && r.elements().all(|e| match e {
                    BodyElement::Lit(_) | BodyElement::DefaultLit(_) => true,
                    BodyElement::Const(v) => *v != TruthValue::Inconsistent,
                    BodyElement::Inspect(..) => false,
                })
        })
    }

    pub fn guard_violations(&self) -> impl Iterator<Item = (usize, &Rule)> {
        self.rules
            .iter()
            .enumerate()
            .filter(|(_, r)| !r.is_guarded())
    }

    pub fn dialect(&self) -> Dialect {
        match (self.has_default(), self.has_inspection()) {
            (false, false) => Dialect::Pure,
            (false, true) => Dialect::FourQl,
            (true, true) => Dialect::Mixed,
            (true, false) => {
                if self.has_asp_syntax() && self.rules.iter().all(Rule::is_guarded) {
                    Dialect::NormalAsp
                } else {
                    Dialect::FourSp
                }
            }
        }
    }

    /// All atoms occurring anywhere in the program.
    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        for rule in &self.rules {
            out.insert(rule.head.atom.clone());
            for lit in rule.elements().filter_map(BodyElement::literal) {
                out.insert(lit.atom.clone());
            }
        }
        out
    }

    /// Literals `ℓ` occurring as `not ℓ`.
    pub fn default_literals(&self) -> BTreeSet<Literal> {
        self.rules
            .iter()
            .flat_map(Rule::elements)
            .filter_map(|e| match e {
                BodyElement::DefaultLit(l) => Some(l.clone()),
                _ => None,
            })
            .collect()
    }

    pub fn constants(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for rule in &self.rules {
            let atoms = std::iter::once(&rule.head.atom)
                .chain(rule.elements().filter_map(|e| e.literal().map(|l| &l.atom)));
            for atom in atoms {
                for arg in &atom.args {
                    if let Term::Const(c) = arg {
                        out.insert(c.clone());
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for rule in &self.rules {
            writeln!(f, "{rule}")?;
        }
        Ok(())
    }
}

/// Classify a program into the most specific dialect.
pub fn classify_dialect(program: &Program) -> Dialect {
    program.dialect()
}
