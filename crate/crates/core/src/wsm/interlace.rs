//! Closing an interpretation and a hypothesis set under each other.

use crate::compiled::HypState;
use crate::semantics::Interpretation;
use crate::syntax::{Assumed, HypothesisSet};

/// Apply the interlace rules until nothing changes:
///
/// * a hypothesis literal already in the interpretation refutes `not ℓ ↞ t`,
///   i.e. gains `not ℓ ↞ f`;
/// * a literal holding both assumptions becomes inconsistent;
/// * a literal assumed only `not ℓ ↞ f` is added.
///
/// Only literals that already carry hypotheses are touched.
pub fn interlace(interp: &Interpretation, hyps: &HypothesisSet) -> (Interpretation, HypothesisSet) {
    let mut interp = interp.clone();
    let mut hyps = hyps.clone();
    loop {
        let mut changed = false;
        let keys: Vec<_> = hyps.literals().cloned().collect();
        for lit in keys {
            if interp.contains(&lit) {
                changed |= hyps.add(lit.clone(), Assumed::FALSE);
            }
            let a = hyps.get(&lit).unwrap_or_default();
            if a.f {
                changed |= interp.insert(lit.clone());
            }
            if a.is_contradicted() {
                changed |= interp.insert(lit.complement());
            }
        }
        if !changed {
            return (interp, hyps);
        }
    }
}

/// Index-based counterpart of [`interlace`]; reports whether anything changed.
pub(crate) fn interlace_state(set: &mut [bool], hyps: &mut HypState) -> bool {
    let mut any = false;
    loop {
        let mut changed = false;
        for &k in &hyps.keys {
            let a = &mut hyps.assumed[k];
            if set[k] && !a.f {
                a.f = true;
                changed = true;
            }
            if a.f && !set[k] {
                set[k] = true;
                changed = true;
            }
            if a.is_contradicted() && !set[k ^ 1] {
                set[k ^ 1] = true;
                changed = true;
            }
        }
        if !changed {
            return any;
        }
        any = true;
    }
}
