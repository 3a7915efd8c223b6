//! Checking that an interpretation is a well-supported model of a pure
//! program: a minimal model in which no loop supports itself.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;

use crate::compiled::require_ground;
use crate::error::{Error, Result};
use crate::logic::{Logic, TruthValue};
use crate::semantics::{eval_body, is_model, Interpretation};
use crate::syntax::{BodyElement, Literal, Program, Rule};

/// Largest interpretation for which minimality is checked exhaustively.
pub const MINIMALITY_CAP: usize = 16;
/// Largest strongly connected component whose loops are enumerated.
pub const LOOP_CAP: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    WellSupported,
    NotWellSupported(String),
    /// The search exceeded a cap before finding a violation.
    Unknown(String),
}

impl Verdict {
    pub fn is_well_supported(&self) -> bool {
        matches!(self, Verdict::WellSupported)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::WellSupported => write!(f, "well-supported"),
            Verdict::NotWellSupported(why) => write!(f, "not well-supported: {why}"),
            Verdict::Unknown(why) => write!(f, "unknown: {why}"),
        }
    }
}

/// Literal dependency graph: an edge from each rule head to every literal in
/// its body.
#[derive(Clone, Debug)]
pub struct DependencyGraph {
    literals: Vec<Literal>,
    succ: Vec<BTreeSet<usize>>,
}

/// Loops found by [`DependencyGraph::loops`]. `complete` is false when some
/// component was too large to enumerate.
#[derive(Clone, Debug, Default)]
pub struct Loops {
    pub loops: Vec<BTreeSet<Literal>>,
    pub complete: bool,
}

impl DependencyGraph {
    pub fn new(program: &Program) -> Self {
        let mut index: HashMap<Literal, usize> = HashMap::new();
        let mut literals = Vec::new();
        let mut id = |l: &Literal, literals: &mut Vec<Literal>| {
            *index.entry(l.clone()).or_insert_with(|| {
                literals.push(l.clone());
                literals.len() - 1
            })
        };
        let mut edges = Vec::new();
        for rule in &program.rules {
            let h = id(&rule.head, &mut literals);
            for l in rule.elements().filter_map(BodyElement::literal) {
                let b = id(l, &mut literals);
                edges.push((h, b));
            }
        }
        let mut succ = vec![BTreeSet::new(); literals.len()];
        for (a, b) in edges {
            succ[a].insert(b);
        }
        DependencyGraph { literals, succ }
    }

    pub fn literals(&self) -> &[Literal] {
        &self.literals
    }

    pub fn edge_count(&self) -> usize {
        self.succ.iter().map(BTreeSet::len).sum()
    }

    /// Every set of literals whose induced subgraph is strongly connected
    /// (a single literal only with a self edge), within components of at
    /// most `cap` literals.
    pub fn loops(&self, cap: usize) -> Loops {
        let mut g: DiGraph<(), ()> = DiGraph::new();
        let nodes: Vec<_> = (0..self.literals.len()).map(|_| g.add_node(())).collect();
        for (a, succ) in self.succ.iter().enumerate() {
            for &b in succ {
                g.add_edge(nodes[a], nodes[b], ());
            }
        }
        let mut out = Loops {
            loops: Vec::new(),
            complete: true,
        };
        for scc in tarjan_scc(&g) {
            let members: Vec<usize> = scc.iter().map(|n| n.index()).collect();
            if members.len() > cap {
                out.complete = false;
                continue;
            }
            for mask in 1u32..(1u32 << members.len()) {
                let subset: Vec<usize> = (0..members.len())
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| members[i])
                    .collect();
                if self.strongly_connected(&subset) {
                    out.loops
                        .push(subset.iter().map(|&i| self.literals[i].clone()).collect());
                }
            }
        }
        out
    }

    fn strongly_connected(&self, subset: &[usize]) -> bool {
        if let [single] = subset {
            return self.succ[*single].contains(single);
        }
        let inside: BTreeSet<usize> = subset.iter().copied().collect();
        let reach = |forward: bool| {
            let mut seen = BTreeSet::from([subset[0]]);
            let mut stack = vec![subset[0]];
            while let Some(v) = stack.pop() {
                for &w in &inside {
                    let edge = if forward {
                        self.succ[v].contains(&w)
                    } else {
                        self.succ[w].contains(&v)
                    };
                    if edge && seen.insert(w) {
                        stack.push(w);
                    }
                }
            }
            seen.len() == inside.len()
        };
        reach(true) && reach(false)
    }
}

/// A rule is externally supported with respect to `lp` when one of its
/// conjuncts mentions no literal of `lp`. A fact counts, its body being one
/// empty conjunct.
fn external(rule: &Rule, lp: &BTreeSet<Literal>) -> bool {
    rule.body.is_empty()
        || rule.body.iter().any(|conj| {
            conj.iter()
                .filter_map(BodyElement::literal)
                .all(|l| !lp.contains(l))
        })
}

/// Body values of the external rules for `head`.
fn external_values(
    program: &Program,
    interp: &Interpretation,
    head: &Literal,
    lp: &BTreeSet<Literal>,
) -> Vec<TruthValue> {
    program
        .rules
        .iter()
        .filter(|r| &r.head == head && external(r, lp))
        .map(|r| eval_body(interp, &r.body, Logic::L4, None).unwrap_or(TruthValue::False))
        .collect()
}

/// Whether a loop with a true or inconsistent member has such a member
/// supported from outside the loop, in one of the two ways a value can be:
/// a true external body for the literal with nothing external pointing to
/// inconsistency, or an inconsistent external body for it or its
/// complement, or true external bodies for both.
fn loop_supported(program: &Program, interp: &Interpretation, lp: &BTreeSet<Literal>) -> bool {
    let designated: Vec<&Literal> = lp
        .iter()
        .filter(|l| matches!(interp.value(l), TruthValue::True | TruthValue::Inconsistent))
        .collect();
    if designated.is_empty() {
        return true;
    }
    designated.into_iter().any(|l| {
        let pos = external_values(program, interp, l, lp);
        let neg = external_values(program, interp, &l.complement(), lp);
        let pos_t = pos.contains(&TruthValue::True);
        let pos_i = pos.contains(&TruthValue::Inconsistent);
        let neg_ti = neg
            .iter()
            .any(|v| matches!(v, TruthValue::True | TruthValue::Inconsistent));
        let neg_t = neg.contains(&TruthValue::True);
        let neg_i = neg.contains(&TruthValue::Inconsistent);
        let true_support = pos_t && !pos_i && !neg_ti;
        let inconsistent_support = pos_i || neg_i || (pos_t && neg_t);
        true_support || inconsistent_support
    })
}

/// Decide whether `interp` is a well-supported model of a ground pure
/// program. Minimality and loop enumeration are exhaustive up to
/// [`MINIMALITY_CAP`] literals and components of [`LOOP_CAP`] literals;
/// beyond that the verdict is [`Verdict::Unknown`] unless a violation was
/// already found.
pub fn check_well_supported(program: &Program, interp: &Interpretation) -> Result<Verdict> {
    require_ground(program)?;
    if !program.is_pure() {
        return Err(Error::Unsupported {
            construct: "negation other than strong negation",
            context: "substitute inspections and hypotheses first".into(),
        });
    }
    if !is_model(interp, program, Logic::L4) {
        return Ok(Verdict::NotWellSupported(format!(
            "{interp} is not a model"
        )));
    }

    let lits: Vec<&Literal> = interp.iter().collect();
    let mut unknown = None;
    if lits.len() > MINIMALITY_CAP {
        unknown = Some(format!(
            "minimality not checked for {} literals (cap {MINIMALITY_CAP})",
            lits.len()
        ));
    } else {
        let full = (1u32 << lits.len()) - 1;
        for mask in 0..full {
            let sub: Interpretation = (0..lits.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| lits[i].clone())
                .collect();
            if is_model(&sub, program, Logic::L4) {
                return Ok(Verdict::NotWellSupported(format!(
                    "{sub} is a smaller model"
                )));
            }
        }
    }

    let loops = DependencyGraph::new(program).loops(LOOP_CAP);
    for lp in &loops.loops {
        if !loop_supported(program, interp, lp) {
            let names: Vec<String> = lp.iter().map(Literal::to_string).collect();
            return Ok(Verdict::NotWellSupported(format!(
                "loop {{{}}} supports itself",
                names.join(", ")
            )));
        }
    }
    if !loops.complete {
        unknown
            .get_or_insert_with(|| format!("a dependency component exceeds {LOOP_CAP} literals"));
    }
    Ok(match unknown {
        Some(why) => Verdict::Unknown(why),
        None => Verdict::WellSupported,
    })
}
