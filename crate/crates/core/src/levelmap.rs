//! Level mappings and the conditions built from them.
//!
//! A level mapping assigns natural numbers to atoms. Each [`Condition`]
//! constrains, clause by clause, how the level of a head relates to the
//! levels of its body atoms. Because the conditions only compare levels with
//! `<`, `<=` and `>`, any satisfying mapping can be collapsed onto
//! `{0, .., k-1}` for `k` at most the size of its domain, so exhaustive
//! search over such mappings is complete.

use std::fmt;
use std::str::FromStr;

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};

use crate::atoms::{AtomId, AtomSet};
use crate::error::{Error, Result};
use crate::fixpoint::FixpointTrace;
use crate::interp::{is_model, knowledge_leq, PartialInterpretation};
use crate::syntax::{GroundClause, GroundProgram};

/// Default largest domain for exhaustive level search.
pub const DEFAULT_SEARCH_CAP: usize = 6;

/// Default largest base for [`greatest_model_with_condition`].
pub const DEFAULT_GREATEST_CAP: usize = 4;

/// Partial map from atoms to levels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LevelMapping {
    levels: Vec<Option<u32>>,
}

impl LevelMapping {
    /// The empty mapping over a base of `n` atoms.
    pub fn empty(n: usize) -> Self {
        LevelMapping {
            levels: vec![None; n],
        }
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (AtomId, u32)>) -> Self {
        let mut l = Self::empty(n);
        for (a, v) in pairs {
            l.set(a, v);
        }
        l
    }

    pub fn set(&mut self, a: AtomId, level: u32) {
        self.levels[a.index()] = Some(level);
    }

    pub fn get(&self, a: AtomId) -> Option<u32> {
        self.levels.get(a.index()).copied().flatten()
    }

    pub fn domain(&self) -> AtomSet {
        self.levels
            .iter()
            .enumerate()
            .filter(|(_, l)| l.is_some())
            .map(|(i, _)| AtomId::from(i))
            .collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (AtomId, u32)> + '_ {
        self.levels
            .iter()
            .enumerate()
            .filter_map(|(i, l)| l.map(|l| (AtomId::from(i), l)))
    }

    pub fn render(&self, g: &GroundProgram) -> String {
        let parts: Vec<String> = self
            .iter()
            .map(|(a, l)| format!("{}={l}", g.name(a)))
            .collect();
        format!("{{{}}}", parts.join(", "))
    }

    fn level(&self, a: AtomId) -> u32 {
        self.levels[a.index()].expect("atom outside level mapping domain")
    }
}

/// The level-mapping conditions.
///
/// `F`, `Wf`, `Cw` and `CiCii` take a partial interpretation `I` and a
/// mapping whose domain is the set of atoms decided in `I`. Each atom must
/// satisfy one of two alternatives:
///
/// * `F`: (Fi) or (Fii); `Wf`: (Fi) or (Cii); `Cw`: (Ci) or (Fii);
///   `CiCii`: (Ci) or (Cii).
/// * (Fi) `A` true, some clause with every body literal true at a strictly
///   lower level.
/// * (Ci) `A` true, some clause with every body literal true, positive atoms
///   at a level no higher and negated atoms at a strictly lower level.
/// * (Fii) `A` false, every clause has a false body literal at a strictly
///   lower level.
/// * (Cii) `A` false, every clause has a false positive atom at a level no
///   higher or a true negated atom at a strictly lower level.
///
/// The remaining conditions take a two-valued `M` (passed as a total partial
/// interpretation) and a total mapping:
///
/// * `DefLeast`: every `A ∈ M` has a clause with all body atoms in `M` at
///   strictly lower levels (definite programs).
/// * `Fages`: as `DefLeast`, and the clause's negated atoms are outside `M`.
/// * `Maxstable`: every `A ∉ M` and every clause for it whose negated atoms
///   are outside `M` has a positive body atom outside `M` at a strictly
///   lower level.
/// * `DefGreatest`: every `A ∉ M` and every clause for it has a body atom
///   outside `M` at a strictly lower level (definite programs).
/// * `LocallyStratified`: every clause has positive body atoms at levels no
///   higher than its head and negated atoms strictly lower. `M` is ignored.
///
/// The characterizations built on these conditions also ask for `I` (or
/// `M`) to be a model or a supported interpretation; that is not part of
/// the condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    DefLeast,
    Fages,
    F,
    Wf,
    Cw,
    CiCii,
    Maxstable,
    DefGreatest,
    LocallyStratified,
}

impl Condition {
    pub const ALL: [Condition; 9] = [
        Condition::DefLeast,
        Condition::Fages,
        Condition::F,
        Condition::Wf,
        Condition::Cw,
        Condition::CiCii,
        Condition::Maxstable,
        Condition::DefGreatest,
        Condition::LocallyStratified,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Condition::DefLeast => "def-least",
            Condition::Fages => "fages",
            Condition::F => "f",
            Condition::Wf => "wf",
            Condition::Cw => "cw",
            Condition::CiCii => "ci-cii",
            Condition::Maxstable => "maxstable",
            Condition::DefGreatest => "def-greatest",
            Condition::LocallyStratified => "locally-stratified",
        }
    }

    /// Whether the condition is stated for total interpretations and total
    /// mappings.
    pub fn is_total(self) -> bool {
        matches!(
            self,
            Condition::DefLeast
                | Condition::Fages
                | Condition::Maxstable
                | Condition::DefGreatest
                | Condition::LocallyStratified
        )
    }

    fn needs_definite(self) -> bool {
        matches!(self, Condition::DefLeast | Condition::DefGreatest)
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Condition {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Condition::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown condition `{s}`"))
    }
}

struct Ctx<'a> {
    i: &'a PartialInterpretation,
    l: &'a LevelMapping,
}

impl Ctx<'_> {
    fn t(&self, a: AtomId) -> bool {
        self.i.pos().contains(a)
    }

    fn f(&self, a: AtomId) -> bool {
        self.i.neg().contains(a)
    }

    fn lv(&self, a: AtomId) -> u32 {
        self.l.level(a)
    }

    fn fi(&self, a: AtomId, cs: &[&GroundClause]) -> bool {
        let h = self.lv(a);
        self.t(a)
            && cs.iter().any(|c| {
                c.pos.iter().all(|&b| self.t(b) && h > self.lv(b))
                    && c.neg.iter().all(|&b| self.f(b) && h > self.lv(b))
            })
    }

    fn ci(&self, a: AtomId, cs: &[&GroundClause]) -> bool {
        let h = self.lv(a);
        self.t(a)
            && cs.iter().any(|c| {
                c.pos.iter().all(|&b| self.t(b) && h >= self.lv(b))
                    && c.neg.iter().all(|&b| self.f(b) && h > self.lv(b))
            })
    }

    fn fii(&self, a: AtomId, cs: &[&GroundClause]) -> bool {
        let h = self.lv(a);
        self.f(a)
            && cs.iter().all(|c| {
                c.pos.iter().any(|&b| self.f(b) && h > self.lv(b))
                    || c.neg.iter().any(|&b| self.t(b) && h > self.lv(b))
            })
    }

    fn cii(&self, a: AtomId, cs: &[&GroundClause]) -> bool {
        let h = self.lv(a);
        self.f(a)
            && cs.iter().all(|c| {
                c.pos.iter().any(|&b| self.f(b) && h >= self.lv(b))
                    || c.neg.iter().any(|&b| self.t(b) && h > self.lv(b))
            })
    }
}

fn check_domain(
    g: &GroundProgram,
    i: &PartialInterpretation,
    l: &LevelMapping,
    c: Condition,
) -> Result<()> {
    if l.levels.len() != g.len() {
        return Err(Error::DomainMismatch(format!(
            "mapping is sized for {} atoms, base has {}",
            l.levels.len(),
            g.len()
        )));
    }
    let base = g.base();
    if c.is_total() {
        if c != Condition::LocallyStratified && i.decided() != base {
            return Err(Error::DomainMismatch(format!(
                "condition {c} needs a total interpretation"
            )));
        }
        if l.domain() != base {
            return Err(Error::DomainMismatch(format!(
                "condition {c} needs a total level mapping"
            )));
        }
    } else if l.domain() != i.decided() {
        return Err(Error::DomainMismatch(
            "mapping domain differs from the atoms decided by the interpretation".into(),
        ));
    }
    if c.needs_definite() {
        g.require_definite()?;
    }
    Ok(())
}

/// Checks condition `c` for `g`, `i` and `l`.
pub fn check_condition(
    g: &GroundProgram,
    i: &PartialInterpretation,
    l: &LevelMapping,
    c: Condition,
) -> Result<bool> {
    check_domain(g, i, l, c)?;
    Ok(holds(g, i, l, c))
}

/// `check_condition` without the domain validation.
fn holds(g: &GroundProgram, i: &PartialInterpretation, l: &LevelMapping, c: Condition) -> bool {
    let x = Ctx { i, l };
    let clauses = |a: AtomId| g.clauses_for(a).collect::<Vec<_>>();
    match c {
        Condition::F | Condition::Wf | Condition::Cw | Condition::CiCii => {
            i.decided().iter().all(|a| {
                let cs = clauses(a);
                match c {
                    Condition::F => x.fi(a, &cs) || x.fii(a, &cs),
                    Condition::Wf => x.fi(a, &cs) || x.cii(a, &cs),
                    Condition::Cw => x.ci(a, &cs) || x.fii(a, &cs),
                    _ => x.ci(a, &cs) || x.cii(a, &cs),
                }
            })
        }
        Condition::DefLeast | Condition::Fages => i.pos().iter().all(|a| {
            let h = x.lv(a);
            g.clauses_for(a).any(|cl| {
                cl.pos.iter().all(|&b| x.t(b) && h > x.lv(b))
                    && (c == Condition::DefLeast || cl.neg.iter().all(|&b| !x.t(b)))
            })
        }),
        Condition::Maxstable | Condition::DefGreatest => i.neg().iter().all(|a| {
            let h = x.lv(a);
            g.clauses_for(a)
                .filter(|cl| c == Condition::DefGreatest || cl.neg.iter().all(|&b| !x.t(b)))
                .all(|cl| cl.pos.iter().any(|&b| !x.t(b) && h > x.lv(b)))
        }),
        Condition::LocallyStratified => g.clauses().iter().all(|cl| {
            let h = x.lv(cl.head);
            cl.pos.iter().all(|&b| h >= x.lv(b)) && cl.neg.iter().all(|&b| h > x.lv(b))
        }),
    }
}

/// Exhaustive search for a mapping satisfying `c`.
///
/// The domain is the base for total conditions and the decided atoms of
/// `i` otherwise. Levels range over `0..max_levels` (default: the domain
/// size). Only mappings whose values form a prefix `{0, .., k-1}` are
/// tried; every satisfying mapping collapses onto one of those.
pub fn find_level_mapping(
    g: &GroundProgram,
    i: &PartialInterpretation,
    c: Condition,
    max_levels: Option<usize>,
    search_cap: usize,
) -> Result<Option<LevelMapping>> {
    let domain: Vec<AtomId> = if c.is_total() {
        g.atom_ids().collect()
    } else {
        i.decided().iter().collect()
    };
    if domain.len() > search_cap {
        return Err(Error::CapExceeded {
            what: "level mapping search",
            needed: domain.len(),
            cap: search_cap,
        });
    }
    let n = domain.len();
    let k = max_levels.unwrap_or(n).min(n).max(1);

    let mut l = LevelMapping::from_pairs(g.len(), domain.iter().map(|&a| (a, 0)));
    check_domain(g, i, &l, c)?;

    let mut digits = vec![0usize; n];
    let mut used = vec![0usize; k];
    loop {
        used.iter_mut().for_each(|u| *u = 0);
        for &d in &digits {
            used[d] += 1;
        }
        let top = digits.iter().copied().max().unwrap_or(0);
        if used[..=top.min(k - 1)].iter().all(|&u| u > 0) || n == 0 {
            for (&a, &d) in domain.iter().zip(&digits) {
                l.set(a, d as u32);
            }
            if holds(g, i, &l, c) {
                return Ok(Some(l));
            }
        }
        // odometer increment
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(None);
            }
            digits[pos] += 1;
            if digits[pos] < k {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

/// Result of looking for a greatest admissible model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GreatestOutcome {
    Greatest(PartialInterpretation),
    /// No greatest element. Holds every maximal candidate, in order; the
    /// first two are incomparable witnesses.
    NoGreatest(Vec<PartialInterpretation>),
    NoCandidates,
}

/// Every consistent interpretation over a base of `n` atoms (total ones
/// only if `total`), each atom cycling through undefined, true, false.
pub fn all_interpretations(n: usize, total: bool) -> Vec<PartialInterpretation> {
    let radix: u64 = if total { 2 } else { 3 };
    let count = radix.pow(n as u32);
    (0..count)
        .map(|mut code| {
            let mut pos = AtomSet::new();
            let mut neg = AtomSet::new();
            for a in 0..n {
                let digit = code % radix;
                code /= radix;
                let digit = if total { digit + 1 } else { digit };
                match digit {
                    1 => {
                        pos.insert(AtomId::from(a));
                    }
                    2 => {
                        neg.insert(AtomId::from(a));
                    }
                    _ => {}
                }
            }
            PartialInterpretation::new_unchecked(pos, neg)
        })
        .collect()
}

/// Brute force: among all models of `g` admitting a mapping for `c`, the
/// greatest in the knowledge order.
pub fn greatest_model_with_condition(
    g: &GroundProgram,
    c: Condition,
    cap: usize,
) -> Result<GreatestOutcome> {
    if g.len() > cap {
        return Err(Error::CapExceeded {
            what: "greatest model search",
            needed: g.len(),
            cap,
        });
    }
    let mut candidates = Vec::new();
    for i in all_interpretations(g.len(), c.is_total()) {
        if is_model(g, &i) && find_level_mapping(g, &i, c, None, usize::MAX)?.is_some() {
            candidates.push(i);
        }
    }
    if candidates.is_empty() {
        return Ok(GreatestOutcome::NoCandidates);
    }
    if let Some(top) = candidates
        .iter()
        .find(|t| candidates.iter().all(|c| knowledge_leq(c, t)))
    {
        return Ok(GreatestOutcome::Greatest(top.clone()));
    }
    let mut maximal: Vec<PartialInterpretation> = candidates
        .iter()
        .filter(|m| !candidates.iter().any(|c| c != *m && knowledge_leq(m, c)))
        .cloned()
        .collect();
    maximal.sort();
    Ok(GreatestOutcome::NoGreatest(maximal))
}

/// Decides local stratification on the atom dependency graph: a mapping
/// exists iff no negative dependency stays inside a strongly connected
/// component.
pub fn is_locally_stratified(g: &GroundProgram) -> bool {
    let mut graph: DiGraph<(), bool> = DiGraph::with_capacity(g.len(), 0);
    let nodes: Vec<NodeIndex> = g.atom_ids().map(|_| graph.add_node(())).collect();
    for c in g.clauses() {
        let h = nodes[c.head.index()];
        for &b in &c.pos {
            graph.add_edge(h, nodes[b.index()], false);
        }
        for &b in &c.neg {
            graph.add_edge(h, nodes[b.index()], true);
        }
    }
    let mut component = vec![0usize; g.len()];
    for (ci, scc) in tarjan_scc(&graph).into_iter().enumerate() {
        for n in scc {
            component[n.index()] = ci;
        }
    }
    graph.edge_indices().all(|e| {
        let (from, to) = graph.edge_endpoints(e).unwrap();
        !graph[e] || component[from.index()] != component[to.index()]
    })
}

/// Level of each atom decided at the end of an upward trace: the least `k`
/// such that the atom is decided in stage `k + 1`.
pub fn extract_level_mapping_from_trace(
    t: &FixpointTrace<PartialInterpretation>,
    base_len: usize,
) -> LevelMapping {
    let mut l = LevelMapping::empty(base_len);
    for a in t.fixpoint().decided().iter() {
        let first = t
            .stages
            .iter()
            .position(|s| s.decided().contains(a))
            .expect("decided in the fixpoint");
        l.set(a, first.saturating_sub(1) as u32);
    }
    l
}
