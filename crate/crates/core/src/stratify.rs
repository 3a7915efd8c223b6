//! Stratification with respect to default negation or inspection.
//!
//! An atom and its strong negation are treated as one unit: every rule for
//! `p` or `-p` lands in the same stratum. A body occurrence of the chosen kind
//! must refer to a strictly lower stratum, any other occurrence to the same or
//! a lower one. Literals without defining rules are considered settled before
//! the first stratum.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::syntax::{Atom, BodyElement, Program};

/// Which negation must respect strata.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum StratKind {
    /// `not ℓ`
    Default,
    /// `ℓ in {..}`
    Inspection,
}

impl StratKind {
    fn is_strict(self, elem: &BodyElement) -> bool {
        match self {
            StratKind::Default => matches!(elem, BodyElement::DefaultLit(_)),
            StratKind::Inspection => matches!(elem, BodyElement::Inspect(..)),
        }
    }
}

/// Rule indices grouped into strata, lowest first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratification {
    pub kind: StratKind,
    pub strata: Vec<Vec<usize>>,
}

impl Stratification {
    /// Stratum number of each rule.
    pub fn stratum_of(&self) -> HashMap<usize, usize> {
        self.strata
            .iter()
            .enumerate()
            .flat_map(|(s, rules)| rules.iter().map(move |&r| (r, s)))
            .collect()
    }

    pub fn report(&self, program: &Program) -> Vec<StratumReport> {
        self.strata
            .iter()
            .enumerate()
            .map(|(i, rules)| StratumReport {
                stratum: i + 1,
                defines: rules
                    .iter()
                    .map(|&r| program.rules[r].head.atom.to_string())
                    .collect::<BTreeSet<_>>()
                    .into_iter()
                    .collect(),
                rules: rules.clone(),
                text: rules
                    .iter()
                    .map(|&r| program.rules[r].to_string())
                    .collect(),
            })
            .collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StratumReport {
    pub stratum: usize,
    /// Indices into the program's rules.
    pub rules: Vec<usize>,
    pub defines: Vec<String>,
    pub text: Vec<String>,
}

impl fmt::Display for StratumReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "% stratum {}: {}", self.stratum, self.defines.join(", "))?;
        for r in &self.text {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

/// Work done by [`find_stratification_counted`]: graph nodes and edges
/// visited while ranking.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StratifyWork {
    pub nodes: usize,
    pub edges: usize,
    pub steps: usize,
}

fn defined_atoms(program: &Program) -> BTreeSet<&Atom> {
    program.rules.iter().map(|r| &r.head.atom).collect()
}

pub fn find_stratification(program: &Program, kind: StratKind) -> Option<Stratification> {
    find_stratification_counted(program, kind).0
}

/// Like [`find_stratification`], also reporting how much work ranking took.
/// Ranking is a single pass over the condensation of the dependency graph.
pub fn find_stratification_counted(
    program: &Program,
    kind: StratKind,
) -> (Option<Stratification>, StratifyWork) {
    let defined = defined_atoms(program);
    let mut graph: DiGraph<&Atom, bool> = DiGraph::new();
    let nodes: HashMap<&Atom, NodeIndex> =
        defined.iter().map(|&a| (a, graph.add_node(a))).collect();
    // edge head -> body atom, weight true when strict
    let mut edges: HashMap<(NodeIndex, NodeIndex), bool> = HashMap::new();
    for rule in &program.rules {
        let from = nodes[&rule.head.atom];
        for elem in rule.elements() {
            let Some(lit) = elem.literal() else { continue };
            let Some(&to) = nodes.get(&lit.atom) else {
                continue;
            };
            let strict = edges.entry((from, to)).or_insert(false);
            *strict |= kind.is_strict(elem);
        }
    }
    for (&(a, b), &strict) in &edges {
        graph.add_edge(a, b, strict);
    }
    let mut work = StratifyWork {
        nodes: graph.node_count(),
        edges: graph.edge_count(),
        steps: 0,
    };

    // components come out dependencies first
    let sccs = tarjan_scc(&graph);
    let mut comp = vec![0usize; graph.node_count()];
    for (ci, scc) in sccs.iter().enumerate() {
        for &n in scc {
            comp[n.index()] = ci;
        }
    }
    let mut rank = vec![0usize; sccs.len()];
    for (ci, scc) in sccs.iter().enumerate() {
        let mut r = 0;
        for &n in scc {
            work.steps += 1;
            for e in graph.edges(n) {
                work.steps += 1;
                let target = comp[petgraph::visit::EdgeRef::target(&e).index()];
                let strict = *e.weight();
                if target == ci {
                    if strict {
                        return (None, work);
                    }
                    continue;
                }
                r = r.max(rank[target] + strict as usize);
            }
        }
        rank[ci] = r;
    }

    let used: BTreeSet<usize> = rank.iter().copied().collect();
    let compact: HashMap<usize, usize> = used.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let mut strata = vec![Vec::new(); used.len()];
    for (ri, rule) in program.rules.iter().enumerate() {
        let n = nodes[&rule.head.atom];
        strata[compact[&rank[comp[n.index()]]]].push(ri);
    }
    (Some(Stratification { kind, strata }), work)
}

/// Check a proposed stratification. Indices outside the program are an
/// error; any other defect gives `false`.
pub fn validate_stratification(program: &Program, strat: &Stratification) -> Result<bool> {
    let mut seen = vec![false; program.len()];
    for &r in strat.strata.iter().flatten() {
        if r >= program.len() {
            return Err(Error::InvalidStratification(format!(
                "rule index {r} out of range for a program of {} rules",
                program.len()
            )));
        }
        if seen[r] {
            return Ok(false);
        }
        seen[r] = true;
    }
    if seen.iter().any(|s| !s) {
        return Ok(false);
    }

    let mut atom_stratum: BTreeMap<&Atom, usize> = BTreeMap::new();
    for (s, rules) in strat.strata.iter().enumerate() {
        for &r in rules {
            let atom = &program.rules[r].head.atom;
            if *atom_stratum.entry(atom).or_insert(s) != s {
                return Ok(false);
            }
        }
    }
    for (s, rules) in strat.strata.iter().enumerate() {
        for &r in rules {
            for elem in program.rules[r].elements() {
                let Some(lit) = elem.literal() else { continue };
                let Some(&dep) = atom_stratum.get(&lit.atom) else {
                    continue;
                };
                let ok = if strat.kind.is_strict(elem) {
                    dep < s
                } else {
                    dep <= s
                };
                if !ok {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
