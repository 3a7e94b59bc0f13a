//! Surface syntax of function-free normal programs, parsing and grounding.

mod ground;
mod parser;

use std::collections::BTreeSet;
use std::fmt;

pub use ground::{ground, GroundClause, GroundProgram, SYNTHETIC_CONSTANT};
pub use parser::parse_program;

/// A term is a constant (lowercase) or a variable (uppercase).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Const(String),
    Var(String),
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Const(c) | Term::Var(c) => f.write_str(c),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
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

    pub fn prop(predicate: impl Into<String>) -> Self {
        Atom::new(predicate, Vec::new())
    }

    pub fn is_ground(&self) -> bool {
        self.args.iter().all(|t| matches!(t, Term::Const(_)))
    }

    pub fn arity(&self) -> usize {
        self.args.len()
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.predicate)?;
        if !self.args.is_empty() {
            f.write_str("(")?;
            for (i, t) in self.args.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{t}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// `A ← A_1, .., A_n, not B_1, .., not B_m`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clause {
    pub head: Atom,
    pub pos_body: Vec<Atom>,
    pub neg_body: Vec<Atom>,
}

impl Clause {
    pub fn fact(head: Atom) -> Self {
        Clause {
            head,
            pos_body: Vec::new(),
            neg_body: Vec::new(),
        }
    }

    pub fn is_fact(&self) -> bool {
        self.pos_body.is_empty() && self.neg_body.is_empty()
    }

    pub fn atoms(&self) -> impl Iterator<Item = &Atom> {
        std::iter::once(&self.head)
            .chain(&self.pos_body)
            .chain(&self.neg_body)
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.head)?;
        if !self.is_fact() {
            f.write_str(" :- ")?;
            let lits = self
                .pos_body
                .iter()
                .map(|a| a.to_string())
                .chain(self.neg_body.iter().map(|a| format!("not {a}")));
            for (i, l) in lits.enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                f.write_str(&l)?;
            }
        }
        f.write_str(".")
    }
}

/// A parsed, possibly non-ground program.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SourceProgram {
    pub clauses: Vec<Clause>,
    pub constants: BTreeSet<String>,
}

impl SourceProgram {
    pub fn new(clauses: Vec<Clause>) -> Self {
        let constants = clauses
            .iter()
            .flat_map(|c| c.atoms())
            .flat_map(|a| &a.args)
            .filter_map(|t| match t {
                Term::Const(c) => Some(c.clone()),
                Term::Var(_) => None,
            })
            .collect();
        SourceProgram { clauses, constants }
    }

    pub fn ground(&self) -> GroundProgram {
        ground(self)
    }
}

impl fmt::Display for SourceProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.clauses {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}
