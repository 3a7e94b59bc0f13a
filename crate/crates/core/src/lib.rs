//! Fixpoint semantics for function-free normal logic programs.
//!
//! Programs are parsed ([`syntax::parse_program`]), grounded
//! ([`syntax::ground`]) and then evaluated under the Fitting, well-founded,
//! stable, maxstable and maximally circular well-founded semantics. The
//! [`levelmap`] module holds brute-force oracles that search for level
//! mappings and check the characterizations of these semantics on small
//! programs; [`check`] bundles them into a per-program report.

pub mod atoms;
pub mod check;
pub mod error;
mod fixpoint;
pub mod generate;
pub mod interp;
pub mod levelmap;
pub mod operators;
pub mod semantics;
pub mod syntax;

pub use atoms::{AtomId, AtomSet};
pub use error::{Error, Result};
pub use interp::{PartialInterpretation, TruthValue, TwoValuedInterpretation};
pub use syntax::{parse_program, GroundProgram, SourceProgram};
