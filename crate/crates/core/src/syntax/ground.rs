use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use super::{Atom, Clause, SourceProgram, Term};
use crate::atoms::{AtomId, AtomSet};
use crate::error::{Error, Result};

/// Constant injected when a program mentions none. The leading `$` cannot be
/// produced by the surface grammar, so it never collides with a user name.
pub const SYNTHETIC_CONSTANT: &str = "$c";

/// A ground clause over atom ids. Body atoms are sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroundClause {
    pub head: AtomId,
    pub pos: Vec<AtomId>,
    pub neg: Vec<AtomId>,
}

impl GroundClause {
    pub fn new(head: AtomId, mut pos: Vec<AtomId>, mut neg: Vec<AtomId>) -> Self {
        pos.sort_unstable();
        pos.dedup();
        neg.sort_unstable();
        neg.dedup();
        GroundClause { head, pos, neg }
    }

    pub fn is_definite(&self) -> bool {
        self.neg.is_empty()
    }

    pub fn atoms(&self) -> impl Iterator<Item = AtomId> + '_ {
        std::iter::once(self.head)
            .chain(self.pos.iter().copied())
            .chain(self.neg.iter().copied())
    }
}

#[derive(Debug)]
struct AtomTable {
    atoms: Vec<Atom>,
    names: Vec<String>,
    index: HashMap<String, AtomId>,
}

/// A finite set of ground clauses together with its Herbrand base.
///
/// Atom ids follow the lexicographic order of the rendered atoms. Several
/// programs (a program and its reducts) may share one atom table.
#[derive(Clone)]
pub struct GroundProgram {
    table: Arc<AtomTable>,
    clauses: Vec<GroundClause>,
    by_head: Vec<Vec<usize>>,
}

impl GroundProgram {
    fn from_table(table: Arc<AtomTable>, mut clauses: Vec<GroundClause>) -> Self {
        clauses.sort();
        clauses.dedup();
        let mut by_head = vec![Vec::new(); table.atoms.len()];
        for (i, c) in clauses.iter().enumerate() {
            by_head[c.head.index()].push(i);
        }
        GroundProgram {
            table,
            clauses,
            by_head,
        }
    }

    /// Builds a ground program over an explicit base. Every clause must be
    /// ground and mention only atoms of `base`.
    pub fn from_parts(base: impl IntoIterator<Item = Atom>, clauses: &[Clause]) -> Result<Self> {
        let table = Arc::new(make_table(base.into_iter().collect()));
        let lookup = |a: &Atom| -> Result<AtomId> {
            table
                .index
                .get(&a.to_string())
                .copied()
                .ok_or_else(|| Error::OutOfBase(a.to_string()))
        };
        let mut ground = Vec::with_capacity(clauses.len());
        for c in clauses {
            let head = lookup(&c.head)?;
            let pos = c.pos_body.iter().map(lookup).collect::<Result<_>>()?;
            let neg = c.neg_body.iter().map(lookup).collect::<Result<_>>()?;
            ground.push(GroundClause::new(head, pos, neg));
        }
        Ok(Self::from_table(table, ground))
    }

    /// Propositional convenience constructor: `base` lists atom names, and
    /// each clause is `(head, positive body, negative body)`.
    pub fn propositional(base: &[&str], clauses: &[(&str, &[&str], &[&str])]) -> Result<Self> {
        let clauses: Vec<Clause> = clauses
            .iter()
            .map(|(h, pos, neg)| Clause {
                head: Atom::prop(*h),
                pos_body: pos.iter().map(|a| Atom::prop(*a)).collect(),
                neg_body: neg.iter().map(|a| Atom::prop(*a)).collect(),
            })
            .collect();
        Self::from_parts(base.iter().map(|a| Atom::prop(*a)), &clauses)
    }

    /// A program over the same atom table with different clauses.
    pub fn with_clauses(&self, clauses: Vec<GroundClause>) -> Self {
        Self::from_table(Arc::clone(&self.table), clauses)
    }

    pub fn clauses(&self) -> &[GroundClause] {
        &self.clauses
    }

    /// Clauses whose head is `a`, in clause order.
    pub fn clauses_for(&self, a: AtomId) -> impl Iterator<Item = &GroundClause> + '_ {
        self.by_head[a.index()].iter().map(|&i| &self.clauses[i])
    }

    pub fn has_clauses_for(&self, a: AtomId) -> bool {
        !self.by_head[a.index()].is_empty()
    }

    /// Number of atoms in the Herbrand base.
    pub fn len(&self) -> usize {
        self.table.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.atoms.is_empty()
    }

    /// The Herbrand base as an id set.
    pub fn base(&self) -> AtomSet {
        AtomSet::full(self.len())
    }

    /// The Herbrand base as atoms, lexicographically ordered.
    pub fn herbrand_base(&self) -> &[Atom] {
        &self.table.atoms
    }

    pub fn atom_ids(&self) -> impl Iterator<Item = AtomId> {
        (0..self.len()).map(AtomId::from)
    }

    pub fn atom(&self, a: AtomId) -> &Atom {
        &self.table.atoms[a.index()]
    }

    /// Rendered name of an atom, e.g. `p(a,b)`.
    pub fn name(&self, a: AtomId) -> &str {
        &self.table.names[a.index()]
    }

    pub fn lookup(&self, name: &str) -> Option<AtomId> {
        self.table.index.get(name).copied()
    }

    /// Looks up every name, failing on the first unknown one.
    pub fn atom_set<'a>(&self, names: impl IntoIterator<Item = &'a str>) -> Result<AtomSet> {
        names
            .into_iter()
            .map(|n| {
                self.lookup(n)
                    .ok_or_else(|| Error::OutOfBase(n.to_string()))
            })
            .collect()
    }

    pub fn names_of(&self, s: &AtomSet) -> Vec<String> {
        s.iter().map(|a| self.name(a).to_string()).collect()
    }

    pub fn is_definite(&self) -> bool {
        self.clauses.iter().all(GroundClause::is_definite)
    }

    /// Fails with the first clause carrying a negative literal.
    pub fn require_definite(&self) -> Result<()> {
        match self.clauses.iter().find(|c| !c.is_definite()) {
            None => Ok(()),
            Some(c) => Err(Error::NotDefinite(self.render_clause(c))),
        }
    }

    pub fn render_clause(&self, c: &GroundClause) -> String {
        self.to_clause(c).to_string()
    }

    fn to_clause(&self, c: &GroundClause) -> Clause {
        Clause {
            head: self.atom(c.head).clone(),
            pos_body: c.pos.iter().map(|&a| self.atom(a).clone()).collect(),
            neg_body: c.neg.iter().map(|&a| self.atom(a).clone()).collect(),
        }
    }

    /// Views the ground program as a source program. The constant set is
    /// the one the base was built from.
    pub fn to_source(&self) -> SourceProgram {
        let clauses = self.clauses.iter().map(|c| self.to_clause(c)).collect();
        let mut src = SourceProgram::new(clauses);
        src.constants.extend(
            self.table
                .atoms
                .iter()
                .flat_map(|a| &a.args)
                .map(|t| t.to_string()),
        );
        src
    }
}

impl PartialEq for GroundProgram {
    fn eq(&self, other: &Self) -> bool {
        self.table.names == other.table.names && self.clauses == other.clauses
    }
}

impl Eq for GroundProgram {}

impl fmt::Debug for GroundProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroundProgram")
            .field("base", &self.table.names)
            .field(
                "clauses",
                &self
                    .clauses
                    .iter()
                    .map(|c| self.render_clause(c))
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

impl fmt::Display for GroundProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.clauses {
            writeln!(f, "{}", self.render_clause(c))?;
        }
        Ok(())
    }
}

fn make_table(atoms: Vec<Atom>) -> AtomTable {
    let mut named: Vec<(String, Atom)> = atoms.into_iter().map(|a| (a.to_string(), a)).collect();
    named.sort_by(|x, y| x.0.cmp(&y.0));
    named.dedup_by(|x, y| x.0 == y.0);
    let index = named
        .iter()
        .enumerate()
        .map(|(i, (n, _))| (n.clone(), AtomId::from(i)))
        .collect();
    let (names, atoms) = named.into_iter().unzip();
    AtomTable {
        atoms,
        names,
        index,
    }
}

/// Every tuple in `domain^arity`, in lexicographic order.
fn tuples(domain: &[String], arity: usize) -> Vec<Vec<String>> {
    let mut out = vec![Vec::new()];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                domain.iter().map(move |c| {
                    let mut t = prefix.clone();
                    t.push(c.clone());
                    t
                })
            })
            .collect();
    }
    out
}

fn substitute(a: &Atom, sigma: &BTreeMap<&str, &str>) -> Atom {
    Atom {
        predicate: a.predicate.clone(),
        args: a
            .args
            .iter()
            .map(|t| match t {
                Term::Var(v) => Term::Const(sigma[v.as_str()].to_string()),
                c => c.clone(),
            })
            .collect(),
    }
}

/// Instantiates every clause with every substitution of its variables by
/// constants of the program. The Herbrand base is every atom buildable from
/// the program's predicates and constants.
pub fn ground(p: &SourceProgram) -> GroundProgram {
    let constants: Vec<String> = if p.constants.is_empty() {
        vec![SYNTHETIC_CONSTANT.to_string()]
    } else {
        p.constants.iter().cloned().collect()
    };

    let predicates: BTreeSet<(&str, usize)> = p
        .clauses
        .iter()
        .flat_map(|c| c.atoms())
        .map(|a| (a.predicate.as_str(), a.arity()))
        .collect();
    let base: Vec<Atom> = predicates
        .iter()
        .flat_map(|&(pred, arity)| {
            tuples(&constants, arity)
                .into_iter()
                .map(move |args| Atom::new(pred, args.into_iter().map(Term::Const).collect()))
        })
        .collect();
    let table = Arc::new(make_table(base));
    let id = |a: &Atom| table.index[&a.to_string()];

    let mut clauses = Vec::new();
    for c in &p.clauses {
        let vars: Vec<&str> = c
            .atoms()
            .flat_map(|a| &a.args)
            .filter_map(|t| match t {
                Term::Var(v) => Some(v.as_str()),
                Term::Const(_) => None,
            })
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        for values in tuples(&constants, vars.len()) {
            let sigma: BTreeMap<&str, &str> = vars
                .iter()
                .copied()
                .zip(values.iter().map(String::as_str))
                .collect();
            let inst = |a: &Atom| id(&substitute(a, &sigma));
            clauses.push(GroundClause::new(
                inst(&c.head),
                c.pos_body.iter().map(inst).collect(),
                c.neg_body.iter().map(inst).collect(),
            ));
        }
    }
    GroundProgram::from_table(table, clauses)
}
