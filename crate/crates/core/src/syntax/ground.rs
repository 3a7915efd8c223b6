//! Grounding over the constants mentioned in the program.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

use super::ast::{BodyElement, Program, Rule, Term};

fn check_safety(rule: &Rule) -> Result<()> {
    let unsafe_var = |v: &str| Error::UnsafeRule {
        rule: rule.to_string(),
        variable: v.to_string(),
    };
    let head_vars: Vec<&str> = rule.head.atom.variables().collect();
    if rule.body.is_empty() {
        if let Some(v) = head_vars.first() {
            return Err(unsafe_var(v));
        }
    }
    for conj in &rule.body {
        let bound: BTreeSet<&str> = conj
            .iter()
            .filter_map(|e| match e {
                BodyElement::Lit(l) => Some(l.atom.variables()),
                _ => None,
            })
            .flatten()
            .collect();
        if let Some(v) = head_vars.iter().find(|v| !bound.contains(*v)) {
            return Err(unsafe_var(v));
        }
        for elem in conj {
            if let BodyElement::DefaultLit(l) | BodyElement::Inspect(l, _) = elem {
                if let Some(v) = l.atom.variables().find(|v| !bound.contains(v)) {
                    return Err(unsafe_var(v));
                }
            }
        }
    }
    Ok(())
}

fn substitute(rule: &Rule, binding: &BTreeMap<&str, &str>) -> Rule {
    let mut out = rule.clone();
    let lits = std::iter::once(&mut out.head).chain(
        out.body
            .iter_mut()
            .flatten()
            .filter_map(BodyElement::literal_mut),
    );
    for lit in lits {
        for arg in &mut lit.atom.args {
            if let Term::Var(v) = arg {
                *arg = Term::Const(binding[v.as_str()].to_string());
            }
        }
    }
    out
}

/// Replace every rule with variables by all its instances over the
/// program's constants. Variable-free programs are returned unchanged.
pub fn ground(program: &Program) -> Result<Program> {
    if program.is_ground() {
        return Ok(program.clone());
    }
    let constants: Vec<String> = program.constants().into_iter().collect();
    let mut rules = Vec::new();
    for rule in &program.rules {
        let vars = rule.variables();
        if vars.is_empty() {
            rules.push(rule.clone());
            continue;
        }
        check_safety(rule)?;
        if constants.is_empty() {
            return Err(Error::NoConstants(rule.to_string()));
        }
        // odometer over constant indices, last variable fastest
        let mut idx = vec![0usize; vars.len()];
        loop {
            let binding: BTreeMap<&str, &str> = vars
                .iter()
                .zip(&idx)
                .map(|(v, &i)| (v.as_str(), constants[i].as_str()))
                .collect();
            rules.push(substitute(rule, &binding));
            let mut pos = vars.len();
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < constants.len() {
                    break;
                }
                idx[pos] = 0;
            }
            if idx.iter().all(|&i| i == 0) {
                break;
            }
        }
    }
    Ok(Program::new(rules))
}
