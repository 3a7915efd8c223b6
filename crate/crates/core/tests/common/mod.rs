//! Random program generators and answer-set oracles that work on their own
//! rule representation, independent of the library's evaluator.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use foursp::syntax::{parse_program, Program};

pub use rand::SeedableRng;

pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Literal as (atom index, negated).
pub type Lit = (usize, bool);

#[derive(Clone, Debug)]
pub enum Elem {
    Lit(Lit),
    Not(Lit),
    In(Lit, Vec<char>),
}

#[derive(Clone, Debug)]
pub struct GenRule {
    pub head: Lit,
    pub body: Vec<Vec<Elem>>,
}

fn lit_text((a, neg): Lit) -> String {
    format!("{}a{a}", if neg { "-" } else { "" })
}

pub fn lit_name(l: Lit) -> String {
    lit_text(l)
}

impl GenRule {
    pub fn text(&self) -> String {
        let head = lit_text(self.head);
        if self.body.is_empty() {
            return format!("{head}.");
        }
        let conjs: Vec<String> = self
            .body
            .iter()
            .map(|c| {
                c.iter()
                    .map(|e| match e {
                        Elem::Lit(l) => lit_text(*l),
                        Elem::Not(l) => format!("not {}", lit_text(*l)),
                        Elem::In(l, set) => {
                            let vals: Vec<String> = set.iter().map(|c| c.to_string()).collect();
                            format!("{} in {{{}}}", lit_text(*l), vals.join(","))
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(", ")
            })
            .collect();
        format!("{head} :- {}.", conjs.join("; "))
    }
}

pub fn program_text(rules: &[GenRule]) -> String {
    rules.iter().map(|r| r.text() + "\n").collect()
}

pub fn to_program(rules: &[GenRule]) -> Program {
    parse_program(&program_text(rules)).expect("generated program parses")
}

fn random_lit(rng: &mut Rng8, atoms: usize, neg_prob: f64) -> Lit {
    (rng.gen_range(0..atoms), rng.gen_bool(neg_prob))
}

/// Ground normal ASP program: single-conjunct bodies of literals and
/// default literals.
pub fn random_asp(rng: &mut Rng8, max_atoms: usize, max_rules: usize) -> Vec<GenRule> {
    let atoms = rng.gen_range(1..=max_atoms);
    let rules = rng.gen_range(1..=max_rules);
    (0..rules)
        .map(|_| {
            let head = random_lit(rng, atoms, 0.2);
            let len = rng.gen_range(0..=3);
            let body: Vec<Elem> = (0..len)
                .map(|_| {
                    let l = random_lit(rng, atoms, 0.2);
                    if rng.gen_bool(0.4) {
                        Elem::Not(l)
                    } else {
                        Elem::Lit(l)
                    }
                })
                .collect();
            GenRule {
                head,
                body: if body.is_empty() { vec![] } else { vec![body] },
            }
        })
        .collect()
}

/// Normal ASP program whose default literals are drawn from a pool of at
/// most `max_defaults` literals.
pub fn random_asp_few_defaults(
    rng: &mut Rng8,
    max_atoms: usize,
    max_rules: usize,
    max_defaults: usize,
) -> Vec<GenRule> {
    let atoms = rng.gen_range(1..=max_atoms);
    let pool: Vec<Lit> = (0..rng.gen_range(1..=max_defaults))
        .map(|_| random_lit(rng, atoms, 0.2))
        .collect();
    let rules = rng.gen_range(1..=max_rules);
    (0..rules)
        .map(|_| {
            let head = random_lit(rng, atoms, 0.2);
            let len = rng.gen_range(0..=3);
            let body: Vec<Elem> = (0..len)
                .map(|_| {
                    if rng.gen_bool(0.4) {
                        Elem::Not(*pool.choose(rng).unwrap())
                    } else {
                        Elem::Lit(random_lit(rng, atoms, 0.2))
                    }
                })
                .collect();
            GenRule {
                head,
                body: if body.is_empty() { vec![] } else { vec![body] },
            }
        })
        .collect()
}

/// Which operator is confined to lower strata when building a program
/// level by level.
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Layered {
    Default,
    Inspection,
}

fn random_truth_set(rng: &mut Rng8) -> Vec<char> {
    loop {
        let set: Vec<char> = ['f', 'u', 'i', 't']
            .into_iter()
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        if !set.is_empty() {
            return set;
        }
    }
}

/// Program built stratum by stratum: every atom gets a level, rule bodies
/// use the layered operator only on atoms of strictly lower levels and plain
/// literals on atoms up to their own level. Returns the rules and the rule
/// indices per level.
pub fn random_layered(
    rng: &mut Rng8,
    kind: Layered,
    max_atoms: usize,
    max_rules: usize,
    disjunction: bool,
) -> (Vec<GenRule>, Vec<Vec<usize>>) {
    let atoms = rng.gen_range(1..=max_atoms);
    let levels = rng.gen_range(1..=4usize);
    let level: Vec<usize> = (0..atoms).map(|_| rng.gen_range(0..levels)).collect();
    let n_rules = rng.gen_range(1..=max_rules);
    let mut rules = Vec::new();
    let mut strata = vec![Vec::new(); levels];
    for _ in 0..n_rules {
        let head = random_lit(rng, atoms, 0.25);
        let lh = level[head.0];
        let below: Vec<usize> = (0..atoms).filter(|&a| level[a] < lh).collect();
        let upto: Vec<usize> = (0..atoms).filter(|&a| level[a] <= lh).collect();
        let n_conj = if disjunction {
            rng.gen_range(0..=2)
        } else {
            rng.gen_range(0..=1)
        };
        let body: Vec<Vec<Elem>> = (0..n_conj)
            .map(|_| {
                (0..rng.gen_range(1..=3))
                    .map(|_| {
                        let neg = rng.gen_bool(0.25);
                        if !below.is_empty() && rng.gen_bool(0.4) {
                            let l = (*below.choose(rng).unwrap(), neg);
                            match kind {
                                Layered::Default => Elem::Not(l),
                                Layered::Inspection => Elem::In(l, random_truth_set(rng)),
                            }
                        } else {
                            Elem::Lit((*upto.choose(rng).unwrap(), neg))
                        }
                    })
                    .collect()
            })
            .collect();
        strata[lh].push(rules.len());
        rules.push(GenRule { head, body });
    }
    (rules, strata)
}

/// Pure four-valued program: literals only, optional disjunction.
pub fn random_pure(rng: &mut Rng8, max_atoms: usize, max_rules: usize) -> Vec<GenRule> {
    let atoms = rng.gen_range(1..=max_atoms);
    (0..rng.gen_range(1..=max_rules))
        .map(|_| {
            let head = random_lit(rng, atoms, 0.3);
            let body = (0..rng.gen_range(0..=2))
                .map(|_| {
                    (0..rng.gen_range(1..=2))
                        .map(|_| Elem::Lit(random_lit(rng, atoms, 0.3)))
                        .collect()
                })
                .collect();
            GenRule { head, body }
        })
        .collect()
}

fn atom_count(rules: &[GenRule]) -> usize {
    let mut n = 0;
    for r in rules {
        n = n.max(r.head.0 + 1);
        for e in r.body.iter().flatten() {
            let l = match e {
                Elem::Lit(l) | Elem::Not(l) | Elem::In(l, _) => l,
            };
            n = n.max(l.0 + 1);
        }
    }
    n
}

fn id((a, neg): Lit) -> usize {
    2 * a + neg as usize
}

/// Closure of a normal program under a guess of which default literals'
/// literals are in the interpretation.
fn reduct_closure(rules: &[GenRule], n: usize, in_interp: &dyn Fn(Lit) -> bool) -> Vec<bool> {
    let mut set = vec![false; 2 * n];
    loop {
        let mut changed = false;
        for r in rules {
            if set[id(r.head)] {
                continue;
            }
            let fires = r.body.is_empty()
                || r.body.iter().any(|c| {
                    c.iter().all(|e| match e {
                        Elem::Lit(l) => set[id(*l)],
                        Elem::Not(l) => !in_interp(*l),
                        Elem::In(..) => panic!("normal programs only"),
                    })
                });
            if fires {
                set[id(r.head)] = true;
                changed = true;
            }
        }
        if !changed {
            return set;
        }
    }
}

fn names(set: &[bool]) -> BTreeSet<String> {
    (0..set.len())
        .filter(|&i| set[i])
        .map(|i| lit_text((i / 2, i % 2 == 1)))
        .collect()
}

/// Answer sets by guessing membership of each default literal's literal.
pub fn answer_sets(rules: &[GenRule]) -> BTreeSet<BTreeSet<String>> {
    let n = atom_count(rules);
    let defaults: Vec<Lit> = rules
        .iter()
        .flat_map(|r| r.body.iter().flatten())
        .filter_map(|e| match e {
            Elem::Not(l) => Some(*l),
            _ => None,
        })
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << defaults.len()) {
        let guess = |l: Lit| {
            let k = defaults.iter().position(|d| *d == l).unwrap();
            mask >> k & 1 == 1
        };
        let set = reduct_closure(rules, n, &guess);
        let consistent = (0..n).all(|a| !(set[2 * a] && set[2 * a + 1]));
        let stable = defaults.iter().all(|&l| set[id(l)] == guess(l));
        if consistent && stable {
            out.insert(names(&set));
        }
    }
    out
}

/// Answer sets by sweeping every consistent interpretation over the atoms.
pub fn answer_sets_sweep(rules: &[GenRule]) -> BTreeSet<BTreeSet<String>> {
    let n = atom_count(rules);
    let mut out = BTreeSet::new();
    for code in 0..3usize.pow(n as u32) {
        let mut interp = vec![false; 2 * n];
        let mut c = code;
        for a in 0..n {
            match c % 3 {
                1 => interp[2 * a] = true,
                2 => interp[2 * a + 1] = true,
                _ => {}
            }
            c /= 3;
        }
        let closure = reduct_closure(rules, n, &|l| interp[id(l)]);
        if closure == interp {
            out.insert(names(&interp));
        }
    }
    out
}

pub fn shuffled<T: Clone>(rng: &mut Rng8, items: &[T]) -> Vec<T> {
    let mut v = items.to_vec();
    v.shuffle(rng);
    v
}
