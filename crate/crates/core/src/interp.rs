//! Two- and three-valued interpretations and truth evaluation.

use serde::{Deserialize, Serialize};

use crate::atoms::{AtomId, AtomSet};
use crate::error::{Error, Result};
use crate::syntax::{GroundClause, GroundProgram};

/// A two-valued interpretation is a subset of the Herbrand base.
pub type TwoValuedInterpretation = AtomSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TruthValue {
    True,
    False,
    Undefined,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroundLiteral {
    pub atom: AtomId,
    pub positive: bool,
}

impl GroundLiteral {
    pub fn pos(atom: AtomId) -> Self {
        GroundLiteral {
            atom,
            positive: true,
        }
    }

    pub fn neg(atom: AtomId) -> Self {
        GroundLiteral {
            atom,
            positive: false,
        }
    }
}

/// A consistent set of ground literals: `pos` holds the true atoms, `neg`
/// the false ones. Atoms in neither are undefined.
///
/// The base is not stored; operations that need it take it explicitly.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialInterpretation {
    pos: AtomSet,
    neg: AtomSet,
}

impl PartialInterpretation {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Checks consistency only.
    pub fn new(pos: AtomSet, neg: AtomSet) -> Result<Self> {
        match pos.first_common(&neg) {
            None => Ok(PartialInterpretation { pos, neg }),
            Some(a) => Err(Error::Inconsistent(a.to_string())),
        }
    }

    pub(crate) fn new_unchecked(pos: AtomSet, neg: AtomSet) -> Self {
        debug_assert!(pos.is_disjoint(&neg));
        PartialInterpretation { pos, neg }
    }

    pub fn pos(&self) -> &AtomSet {
        &self.pos
    }

    pub fn neg(&self) -> &AtomSet {
        &self.neg
    }

    pub fn into_parts(self) -> (AtomSet, AtomSet) {
        (self.pos, self.neg)
    }

    /// Atoms that are true or false.
    pub fn decided(&self) -> AtomSet {
        self.pos.union(&self.neg)
    }

    pub fn truth(&self, a: AtomId) -> TruthValue {
        if self.pos.contains(a) {
            TruthValue::True
        } else if self.neg.contains(a) {
            TruthValue::False
        } else {
            TruthValue::Undefined
        }
    }

    /// Total extension `m ∪ ¬(base \ m)` of a two-valued interpretation.
    pub fn total(m: &TwoValuedInterpretation, base: &AtomSet) -> Self {
        total_extension(m, base)
    }
}

/// Builds `pos ∪ ¬neg`, rejecting overlaps and atoms outside `base`. The
/// error names the smallest offending atom.
pub fn make_partial(
    g: &GroundProgram,
    pos: AtomSet,
    neg: AtomSet,
) -> Result<PartialInterpretation> {
    let base = g.base();
    if let Some(a) = pos.union(&neg).difference(&base).iter().next() {
        return Err(Error::OutOfBase(a.to_string()));
    }
    match pos.first_common(&neg) {
        None => Ok(PartialInterpretation { pos, neg }),
        Some(a) => Err(Error::Inconsistent(g.name(a).to_string())),
    }
}

pub fn truth_of_literal(i: &PartialInterpretation, lit: GroundLiteral) -> TruthValue {
    match (i.truth(lit.atom), lit.positive) {
        (t, true) => t,
        (TruthValue::True, false) => TruthValue::False,
        (TruthValue::False, false) => TruthValue::True,
        (TruthValue::Undefined, false) => TruthValue::Undefined,
    }
}

/// A body is true if all its literals are, false if one of them is, and
/// undefined otherwise. The empty body is true.
pub fn truth_of_body(i: &PartialInterpretation, body: &[GroundLiteral]) -> TruthValue {
    let mut all_true = true;
    for &lit in body {
        match truth_of_literal(i, lit) {
            TruthValue::False => return TruthValue::False,
            TruthValue::Undefined => all_true = false,
            TruthValue::True => {}
        }
    }
    if all_true {
        TruthValue::True
    } else {
        TruthValue::Undefined
    }
}

/// Truth of a clause body without materializing its literals.
pub fn truth_of_clause_body(i: &PartialInterpretation, c: &GroundClause) -> TruthValue {
    if c.pos.iter().any(|&a| i.neg.contains(a)) || c.neg.iter().any(|&b| i.pos.contains(b)) {
        TruthValue::False
    } else if c.pos.iter().all(|&a| i.pos.contains(a)) && c.neg.iter().all(|&b| i.neg.contains(b)) {
        TruthValue::True
    } else {
        TruthValue::Undefined
    }
}

pub fn body_literals(c: &GroundClause) -> Vec<GroundLiteral> {
    c.pos
        .iter()
        .map(|&a| GroundLiteral::pos(a))
        .chain(c.neg.iter().map(|&b| GroundLiteral::neg(b)))
        .collect()
}

/// Every clause whose body literals all belong to `i` has its head in `i`.
pub fn is_model(g: &GroundProgram, i: &PartialInterpretation) -> bool {
    g.clauses()
        .iter()
        .all(|c| truth_of_clause_body(i, c) != TruthValue::True || i.pos.contains(c.head))
}

pub fn total_extension(m: &TwoValuedInterpretation, base: &AtomSet) -> PartialInterpretation {
    PartialInterpretation {
        pos: m.clone(),
        neg: base.difference(m),
    }
}

/// Knowledge order: subset inclusion on literal sets.
pub fn knowledge_leq(i: &PartialInterpretation, j: &PartialInterpretation) -> bool {
    i.pos.is_subset(&j.pos) && i.neg.is_subset(&j.neg)
}

pub fn is_total(i: &PartialInterpretation, base: &AtomSet) -> bool {
    &i.decided() == base
}

/// JSON form: three lexicographically sorted arrays of atom names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InterpretationJson {
    #[serde(rename = "true")]
    pub true_atoms: Vec<String>,
    #[serde(rename = "false")]
    pub false_atoms: Vec<String>,
    pub undefined: Vec<String>,
}

impl InterpretationJson {
    pub fn new(g: &GroundProgram, i: &PartialInterpretation) -> Self {
        InterpretationJson {
            true_atoms: g.names_of(&i.pos),
            false_atoms: g.names_of(&i.neg),
            undefined: g.names_of(&g.base().difference(&i.decided())),
        }
    }

    /// Reads the interpretation back; the three arrays must partition the
    /// base.
    pub fn to_interpretation(&self, g: &GroundProgram) -> Result<PartialInterpretation> {
        let pos = g.atom_set(self.true_atoms.iter().map(String::as_str))?;
        let neg = g.atom_set(self.false_atoms.iter().map(String::as_str))?;
        let undef = g.atom_set(self.undefined.iter().map(String::as_str))?;
        let i = make_partial(g, pos, neg)?;
        if !undef.is_disjoint(&i.decided()) || undef.union(&i.decided()) != g.base() {
            return Err(Error::Json(
                "true/false/undefined do not partition the Herbrand base".into(),
            ));
        }
        Ok(i)
    }
}

/// Renders `{q, not p}`: true atoms, then false ones, each in atom order.
pub fn render(g: &GroundProgram, i: &PartialInterpretation) -> String {
    let parts: Vec<String> = i
        .pos
        .iter()
        .map(|a| g.name(a).to_string())
        .chain(i.neg.iter().map(|a| format!("not {}", g.name(a))))
        .collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn render_set(g: &GroundProgram, m: &AtomSet) -> String {
    format!("{{{}}}", g.names_of(m).join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_program;
    use proptest::prelude::*;

    fn circular() -> GroundProgram {
        parse_program("p :- p.\nq :- not p.").unwrap().ground()
    }

    fn pi(g: &GroundProgram, pos: &[&str], neg: &[&str]) -> PartialInterpretation {
        make_partial(
            g,
            g.atom_set(pos.iter().copied()).unwrap(),
            g.atom_set(neg.iter().copied()).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn make_partial_cases() {
        let g = circular();
        let m1 = pi(&g, &["p"], &["q"]);
        assert_eq!(render(&g, &m1), "{p, not q}");
        assert_eq!(pi(&g, &[], &[]), PartialInterpretation::empty());
        let p = g.atom_set(["p"]).unwrap();
        assert_eq!(
            make_partial(&g, p.clone(), p),
            Err(Error::Inconsistent("p".into()))
        );
        let outside: AtomSet = [AtomId(7)].into_iter().collect();
        assert!(matches!(
            make_partial(&g, outside, AtomSet::new()),
            Err(Error::OutOfBase(_))
        ));
    }

    #[test]
    fn literal_truth() {
        let g = circular();
        let (p, q) = (g.lookup("p").unwrap(), g.lookup("q").unwrap());
        let m1 = pi(&g, &["p"], &["q"]);
        let m2 = pi(&g, &["q"], &["p"]);
        assert_eq!(
            truth_of_literal(&m1, GroundLiteral::neg(q)),
            TruthValue::True
        );
        assert_eq!(
            truth_of_literal(&PartialInterpretation::empty(), GroundLiteral::pos(p)),
            TruthValue::Undefined
        );
        assert_eq!(
            truth_of_literal(&m2, GroundLiteral::pos(p)),
            TruthValue::False
        );
    }

    #[test]
    fn body_truth() {
        let g = circular();
        let (p, q) = (g.lookup("p").unwrap(), g.lookup("q").unwrap());
        let m2 = pi(&g, &["q"], &["p"]);
        assert_eq!(
            truth_of_body(&m2, &[GroundLiteral::neg(p)]),
            TruthValue::True
        );
        assert_eq!(
            truth_of_body(&PartialInterpretation::empty(), &[]),
            TruthValue::True
        );
        let only_p = pi(&g, &["p"], &[]);
        assert_eq!(
            truth_of_body(&only_p, &[GroundLiteral::pos(p), GroundLiteral::neg(q)]),
            TruthValue::Undefined
        );
    }

    #[test]
    fn model_check() {
        let g = circular();
        assert!(is_model(&g, &pi(&g, &["p"], &["q"])));
        assert!(is_model(&g, &pi(&g, &["q"], &["p"])));
        let selfloop = parse_program("p :- p.").unwrap().ground();
        assert!(is_model(&selfloop, &PartialInterpretation::empty()));
        assert!(!is_model(&g, &pi(&g, &[], &["p", "q"])));
    }

    #[test]
    fn total_extension_cases() {
        let g = circular();
        let base = g.base();
        let p = g.atom_set(["p"]).unwrap();
        assert_eq!(total_extension(&p, &base), pi(&g, &["p"], &["q"]));
        assert_eq!(total_extension(&base, &base), pi(&g, &["p", "q"], &[]));
        let single = parse_program("p :- p.").unwrap().ground();
        assert_eq!(
            render(&single, &total_extension(&AtomSet::new(), &single.base())),
            "{not p}"
        );
    }

    #[test]
    fn ordering_and_totality() {
        let g = circular();
        let m1 = pi(&g, &["p"], &["q"]);
        let m2 = pi(&g, &["q"], &["p"]);
        let empty = PartialInterpretation::empty();
        assert!(knowledge_leq(&empty, &m1));
        assert!(!knowledge_leq(&m1, &m2) && !knowledge_leq(&m2, &m1));
        assert!(knowledge_leq(&m1, &m1));
        assert!(is_total(&m1, &g.base()));
        let single = parse_program("p :- p.").unwrap().ground();
        assert!(!is_total(&empty, &single.base()));
        assert!(is_total(&pi(&single, &[], &["p"]), &single.base()));
    }

    #[test]
    fn json_round_trip_and_rejects() {
        let g = circular();
        let wf = pi(&g, &["q"], &["p"]);
        let json = serde_json::to_string(&InterpretationJson::new(&g, &wf)).unwrap();
        assert_eq!(json, r#"{"true":["q"],"false":["p"],"undefined":[]}"#);
        let back: InterpretationJson = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_interpretation(&g).unwrap(), wf);
        let bad = InterpretationJson {
            true_atoms: vec!["q".into()],
            false_atoms: vec![],
            undefined: vec![],
        };
        assert!(matches!(bad.to_interpretation(&g), Err(Error::Json(_))));
    }

    fn arb_interp(n: usize) -> impl Strategy<Value = PartialInterpretation> {
        prop::collection::vec(0u8..3, n).prop_map(|v| {
            let mut pos = AtomSet::new();
            let mut neg = AtomSet::new();
            for (i, t) in v.into_iter().enumerate() {
                match t {
                    1 => {
                        pos.insert(AtomId::from(i));
                    }
                    2 => {
                        neg.insert(AtomId::from(i));
                    }
                    _ => {}
                }
            }
            PartialInterpretation::new(pos, neg).unwrap()
        })
    }

    proptest! {
        #[test]
        fn body_truth_is_exclusive(i in arb_interp(5),
                                   body in prop::collection::vec((0u32..5, any::<bool>()), 0..4)) {
            let body: Vec<GroundLiteral> = body.into_iter()
                .map(|(a, positive)| GroundLiteral { atom: AtomId(a), positive })
                .collect();
            let t = truth_of_body(&i, &body);
            let all_true = body.iter().all(|&l| truth_of_literal(&i, l) == TruthValue::True);
            let some_false = body.iter().any(|&l| truth_of_literal(&i, l) == TruthValue::False);
            prop_assert!(!(all_true && some_false));
            prop_assert_eq!(t == TruthValue::True, all_true);
            prop_assert_eq!(t == TruthValue::False, some_false);
        }

        #[test]
        fn total_extension_is_maximal(mask in 0u64..32, i in arb_interp(5)) {
            let base = AtomSet::full(5);
            let t = total_extension(&AtomSet::from_mask(mask), &base);
            prop_assert!(is_total(&t, &base));
            if knowledge_leq(&t, &i) {
                prop_assert_eq!(&t, &i);
            }
        }
    }
}
