//! Reference answer-set semantics: least models, the reduct and a
//! brute-force answer-set enumerator.

use crate::compiled::{require_ground, Compiled, HypState};
use crate::error::{Error, Result};
use crate::semantics::Interpretation;
use crate::syntax::{Assumed, BodyElement, Program};

/// Default limit on the number of atoms [`enumerate_answer_sets`] accepts.
pub const ATOM_BOUND: usize = 20;

/// Least model of a ground program without default negation or inspection.
/// A strongly negated literal behaves as a fresh atom; constants other than
/// `t` never hold.
pub fn generate_least(program: &Program) -> Result<Interpretation> {
    require_ground(program)?;
    if program.has_default() {
        return Err(Error::Unsupported {
            construct: "default negation",
            context: "least models take positive programs".into(),
        });
    }
    if program.has_inspection() {
        return Err(Error::Unsupported {
            construct: "inspection",
            context: "least models take positive programs".into(),
        });
    }
    let c = Compiled::new(program, []);
    let set = c.least(&vec![false; c.rules.len()], None, &mut 0);
    Ok(c.interpretation(&set))
}

/// Replace each `not ℓ` by the constant that `not ℓ` takes in `interp`.
pub fn reduct(program: &Program, interp: &Interpretation) -> Result<Program> {
    require_ground(program)?;
    if !interp.is_consistent() {
        let atom = interp
            .iter()
            .find(|l| interp.contains(&l.complement()))
            .map(|l| l.atom.to_string())
            .unwrap_or_default();
        return Err(Error::InconsistentInterpretation(atom));
    }
    let mut out = program.clone();
    for elem in out
        .rules
        .iter_mut()
        .flat_map(|r| r.body.iter_mut().flatten())
    {
        if let BodyElement::DefaultLit(l) = elem {
            *elem = BodyElement::Const(interp.value(l).default_neg());
        }
    }
    Ok(out)
}

pub fn enumerate_answer_sets(program: &Program, cap: Option<usize>) -> Result<Vec<Interpretation>> {
    enumerate_answer_sets_bounded(program, cap, ATOM_BOUND)
}

/// All answer sets, in canonical order, at most `cap` of them.
///
/// An answer set is fixed by which default literals it contains, so each of
/// the `2^d` membership guesses is tried against the least model of the
/// matching reduct.
pub fn enumerate_answer_sets_bounded(
    program: &Program,
    cap: Option<usize>,
    atom_bound: usize,
) -> Result<Vec<Interpretation>> {
    require_ground(program)?;
    if !program.has_asp_syntax() {
        return Err(Error::Unsupported {
            construct: "non-ASP syntax",
            context: "answer sets need rules with one conjunct, no inspection and no `#i`".into(),
        });
    }
    let atoms = program.atoms();
    if atoms.len() > atom_bound {
        return Err(Error::AtomBound {
            atoms: atoms.len(),
            bound: atom_bound,
        });
    }
    let c = Compiled::new(program, []);
    let defaults: Vec<usize> = program
        .default_literals()
        .iter()
        .map(|l| c.lit(l))
        .collect();
    let none_removed = vec![false; c.rules.len()];
    let mut found = Vec::new();
    let mut hyps = HypState {
        assumed: vec![Assumed::default(); c.n_lits()],
        keys: defaults.clone(),
    };
    for mask in 0u64..(1u64 << defaults.len()) {
        // bit set: the literal is guessed to be in the answer set, so `not ℓ` is f
        for (bit, &id) in defaults.iter().enumerate() {
            hyps.assumed[id] = if mask >> bit & 1 == 1 {
                Assumed::FALSE
            } else {
                Assumed::TRUE
            };
        }
        let set = c.least(&none_removed, Some(&hyps), &mut 0);
        let consistent = (0..c.atoms.len()).all(|a| !(set[2 * a] && set[2 * a + 1]));
        let stable = defaults
            .iter()
            .enumerate()
            .all(|(bit, &id)| set[id] == (mask >> bit & 1 == 1));
        if consistent && stable {
            found.push(c.interpretation(&set));
        }
    }
    found.sort();
    if let Some(cap) = cap {
        found.truncate(cap);
    }
    Ok(found)
}
