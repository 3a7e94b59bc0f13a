//! Semantic operators on ground programs.
//!
//! Three-valued operators (`phi`, `wp_op`, `cw_op`) map partial
//! interpretations to partial interpretations; two-valued ones (`tp_plus`,
//! `gl`, `cgl`) map subsets of the base to subsets of the base. Greatest
//! unfounded and self-founded sets are computed by downward iteration from
//! the top of their lattice, which terminates because the base is finite.

use crate::atoms::AtomSet;
use crate::error::{Error, Result};
use crate::interp::{
    total_extension, truth_of_clause_body, PartialInterpretation, TruthValue,
    TwoValuedInterpretation,
};
use crate::syntax::{GroundClause, GroundProgram};

pub use crate::fixpoint::{iterate_to_fixpoint, Direction, FixpointTrace, Poset};

/// A ground program without negative body literals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductProgram(GroundProgram);

impl ReductProgram {
    pub fn program(&self) -> &GroundProgram {
        &self.0
    }

    pub fn into_program(self) -> GroundProgram {
        self.0
    }
}

impl TryFrom<GroundProgram> for ReductProgram {
    type Error = Error;

    fn try_from(g: GroundProgram) -> Result<Self> {
        g.require_definite()?;
        Ok(ReductProgram(g))
    }
}

/// Heads of clauses whose body is true in `i`.
pub fn tp(g: &GroundProgram, i: &PartialInterpretation) -> AtomSet {
    g.clauses()
        .iter()
        .filter(|c| truth_of_clause_body(i, c) == TruthValue::True)
        .map(|c| c.head)
        .collect()
}

/// Atoms all of whose clause bodies are false in `i`. Atoms without any
/// clause qualify vacuously.
pub fn fp(g: &GroundProgram, i: &PartialInterpretation) -> AtomSet {
    g.atom_ids()
        .filter(|&a| {
            g.clauses_for(a)
                .all(|c| truth_of_clause_body(i, c) == TruthValue::False)
        })
        .collect()
}

/// Fitting's operator `T_P(I) ∪ ¬F_P(I)`.
pub fn phi(g: &GroundProgram, i: &PartialInterpretation) -> Result<PartialInterpretation> {
    let pos = tp(g, i);
    let neg = fp(g, i);
    if let Some(a) = pos.first_common(&neg) {
        return Err(Error::Invariant(format!(
            "T_P and F_P overlap on {}",
            g.name(a)
        )));
    }
    Ok(PartialInterpretation::new_unchecked(pos, neg))
}

fn unfounded_step(g: &GroundProgram, i: &PartialInterpretation, u: &AtomSet) -> AtomSet {
    u.iter()
        .filter(|&a| {
            g.clauses_for(a).all(|c| {
                truth_of_clause_body(i, c) == TruthValue::False
                    || c.pos.iter().any(|&b| u.contains(b))
            })
        })
        .collect()
}

/// Greatest unfounded set with respect to `i`.
pub fn greatest_unfounded(g: &GroundProgram, i: &PartialInterpretation) -> AtomSet {
    let mut u = g.base();
    loop {
        let next = unfounded_step(g, i, &u);
        if next == u {
            return u;
        }
        u = next;
    }
}

/// `T_P(I) ∪ ¬U_P(I)`. Inputs not reachable from the empty interpretation
/// may produce an overlap, which is reported rather than repaired.
pub fn wp_op(g: &GroundProgram, i: &PartialInterpretation) -> Result<PartialInterpretation> {
    let pos = tp(g, i);
    let neg = greatest_unfounded(g, i);
    match pos.first_common(&neg) {
        None => Ok(PartialInterpretation::new_unchecked(pos, neg)),
        Some(a) => Err(Error::Inconsistent(g.name(a).to_string())),
    }
}

/// `T_P` applied to the total extension of `m`.
pub fn tp_plus(g: &GroundProgram, m: &TwoValuedInterpretation) -> TwoValuedInterpretation {
    tp(g, &total_extension(m, &g.base()))
}

/// Drops clauses with a negative literal whose atom is in `m` and strips
/// the negative literals from the rest.
pub fn reduct(g: &GroundProgram, m: &TwoValuedInterpretation) -> ReductProgram {
    let clauses = g
        .clauses()
        .iter()
        .filter(|c| c.neg.iter().all(|&b| !m.contains(b)))
        .map(|c| GroundClause::new(c.head, c.pos.clone(), Vec::new()))
        .collect();
    ReductProgram(g.with_clauses(clauses))
}

fn definite_step(r: &GroundProgram, m: &AtomSet) -> AtomSet {
    r.clauses()
        .iter()
        .filter(|c| c.pos.iter().all(|&a| m.contains(a)))
        .map(|c| c.head)
        .collect()
}

/// Least fixed point of `T⁺` for a definite program, iterated up from ∅.
pub fn lfp_definite(r: &ReductProgram) -> TwoValuedInterpretation {
    let mut m = AtomSet::new();
    loop {
        let next = definite_step(&r.0, &m);
        if next == m {
            return m;
        }
        m = next;
    }
}

/// Greatest fixed point of `T⁺` for a definite program, iterated down from
/// the base.
pub fn gfp_definite(r: &ReductProgram) -> TwoValuedInterpretation {
    let mut m = r.0.base();
    loop {
        let next = definite_step(&r.0, &m);
        if next == m {
            return m;
        }
        m = next;
    }
}

/// Gelfond-Lifschitz operator: least model of the reduct.
pub fn gl(g: &GroundProgram, m: &TwoValuedInterpretation) -> TwoValuedInterpretation {
    lfp_definite(&reduct(g, m))
}

/// Greatest model of the reduct.
pub fn cgl(g: &GroundProgram, m: &TwoValuedInterpretation) -> TwoValuedInterpretation {
    gfp_definite(&reduct(g, m))
}

/// Greatest self-founded set with respect to `i`.
///
/// Starts from `B_P \ I⁻` and keeps an atom while some clause for it has
/// every negative literal true in `i` and every positive atom true in `i`
/// or still in the candidate set.
pub fn greatest_self_founded(g: &GroundProgram, i: &PartialInterpretation) -> AtomSet {
    let mut s = g.base().difference(i.neg());
    loop {
        let next: AtomSet = s
            .iter()
            .filter(|&a| {
                g.clauses_for(a).any(|c| {
                    c.neg.iter().all(|&b| i.neg().contains(b))
                        && c.pos.iter().all(|&b| i.pos().contains(b) || s.contains(b))
                })
            })
            .collect();
        if next == s {
            return s;
        }
        s = next;
    }
}

/// `S_P(I) ∪ ¬F_P(I)`.
pub fn cw_op(g: &GroundProgram, i: &PartialInterpretation) -> Result<PartialInterpretation> {
    let pos = greatest_self_founded(g, i);
    let neg = fp(g, i);
    if let Some(a) = pos.first_common(&neg) {
        return Err(Error::Invariant(format!(
            "S_P and F_P overlap on {}",
            g.name(a)
        )));
    }
    Ok(PartialInterpretation::new_unchecked(pos, neg))
}
