//! Named semantics assembled from the operators.

use std::fmt;
use std::str::FromStr;

use crate::atoms::AtomSet;
use crate::error::{Error, Result};
use crate::interp::{
    is_total, knowledge_leq, total_extension, PartialInterpretation, TwoValuedInterpretation,
};
use crate::operators::{
    cgl, cw_op, gfp_definite, gl, iterate_to_fixpoint, lfp_definite, phi, tp_plus, wp_op,
    Direction, FixpointTrace, ReductProgram,
};
use crate::syntax::GroundProgram;

/// Default largest base for which model sets are enumerated.
pub const DEFAULT_ENUMERATION_CAP: usize = 20;

/// Hard ceiling on the enumeration cap; subsets are indexed by a `u64`.
pub const MAX_ENUMERATION_CAP: usize = 63;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Semantics {
    Least,
    Greatest,
    Fitting,
    WellFounded,
    WellFoundedAlternating,
    Maxwf,
    MaxwfAlternating,
    Stable,
    Maxstable,
    Supported,
}

impl Semantics {
    pub const ALL: [Semantics; 10] = [
        Semantics::Least,
        Semantics::Greatest,
        Semantics::Fitting,
        Semantics::WellFounded,
        Semantics::WellFoundedAlternating,
        Semantics::Maxwf,
        Semantics::MaxwfAlternating,
        Semantics::Stable,
        Semantics::Maxstable,
        Semantics::Supported,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Semantics::Least => "least",
            Semantics::Greatest => "greatest",
            Semantics::Fitting => "fitting",
            Semantics::WellFounded => "wf",
            Semantics::WellFoundedAlternating => "wf-alt",
            Semantics::Maxwf => "maxwf",
            Semantics::MaxwfAlternating => "maxwf-alt",
            Semantics::Stable => "stable",
            Semantics::Maxstable => "maxstable",
            Semantics::Supported => "supported",
        }
    }

    /// Whether the semantics yields a set of two-valued models.
    pub fn is_enumerated(self) -> bool {
        matches!(
            self,
            Semantics::Stable | Semantics::Maxstable | Semantics::Supported
        )
    }

    pub fn needs_definite(self) -> bool {
        matches!(self, Semantics::Least | Semantics::Greatest)
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Semantics {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Semantics::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Semantics::ALL.iter().map(|x| x.name()).collect();
                format!(
                    "unknown semantics `{s}` (expected one of {})",
                    names.join(", ")
                )
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Model {
    Single(PartialInterpretation),
    Set(Vec<TwoValuedInterpretation>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemanticsResult {
    pub semantics: Semantics,
    pub model: Model,
    /// Totality of a single model; `None` for model sets.
    pub total: Option<bool>,
    pub trace: Option<FixpointTrace<PartialInterpretation>>,
    pub alternating: Option<AlternatingPair>,
}

/// Least and greatest fixed points of a squared antitone operator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingPair {
    pub lfp_sq: TwoValuedInterpretation,
    pub gfp_sq: TwoValuedInterpretation,
}

impl AlternatingPair {
    /// `lfp_sq ∪ ¬(B_P \ gfp_sq)`.
    pub fn assemble(&self, g: &GroundProgram) -> PartialInterpretation {
        PartialInterpretation::new_unchecked(self.lfp_sq.clone(), g.base().difference(&self.gfp_sq))
    }
}

fn definite(g: &GroundProgram) -> Result<ReductProgram> {
    ReductProgram::try_from(g.clone())
}

pub fn least_model(g: &GroundProgram) -> Result<TwoValuedInterpretation> {
    Ok(lfp_definite(&definite(g)?))
}

pub fn greatest_model(g: &GroundProgram) -> Result<TwoValuedInterpretation> {
    Ok(gfp_definite(&definite(g)?))
}

pub fn fitting_trace(g: &GroundProgram) -> Result<FixpointTrace<PartialInterpretation>> {
    iterate_to_fixpoint(
        |i| phi(g, i),
        PartialInterpretation::empty(),
        Direction::Up,
        g.len(),
    )
}

pub fn well_founded_trace(g: &GroundProgram) -> Result<FixpointTrace<PartialInterpretation>> {
    iterate_to_fixpoint(
        |i| wp_op(g, i),
        PartialInterpretation::empty(),
        Direction::Up,
        g.len(),
    )
}

pub fn maxwf_trace(g: &GroundProgram) -> Result<FixpointTrace<PartialInterpretation>> {
    iterate_to_fixpoint(
        |i| cw_op(g, i),
        PartialInterpretation::empty(),
        Direction::Up,
        g.len(),
    )
}

/// Kripke-Kleene model: least fixed point of `Φ_P`.
pub fn fitting_model(g: &GroundProgram) -> Result<PartialInterpretation> {
    Ok(fitting_trace(g)?.into_fixpoint())
}

/// Least fixed point of `W_P`.
pub fn well_founded_model(g: &GroundProgram) -> Result<PartialInterpretation> {
    Ok(well_founded_trace(g)?.into_fixpoint())
}

/// Least fixed point of `CW_P`.
pub fn maxwf_model(g: &GroundProgram) -> Result<PartialInterpretation> {
    Ok(maxwf_trace(g)?.into_fixpoint())
}

/// Iterates `op²` up from ∅ and down from the base, then checks that `op`
/// swaps the two fixed points.
fn alternating<F>(g: &GroundProgram, op: F, label: &str) -> Result<AlternatingPair>
where
    F: Fn(&GroundProgram, &AtomSet) -> AtomSet,
{
    let sq = |m: &AtomSet| Ok(op(g, &op(g, m)));
    let lfp_sq = iterate_to_fixpoint(sq, AtomSet::new(), Direction::Up, g.len())?.into_fixpoint();
    let gfp_sq = iterate_to_fixpoint(sq, g.base(), Direction::Down, g.len())?.into_fixpoint();
    if op(g, &lfp_sq) != gfp_sq || op(g, &gfp_sq) != lfp_sq {
        return Err(Error::Invariant(format!(
            "{label} does not swap the extreme fixed points of its square"
        )));
    }
    Ok(AlternatingPair { lfp_sq, gfp_sq })
}

/// Alternating fixed point of `GL_P` and the model it assembles.
pub fn wf_alternating(g: &GroundProgram) -> Result<(AlternatingPair, PartialInterpretation)> {
    let pair = alternating(g, gl, "GL")?;
    let model = pair.assemble(g);
    Ok((pair, model))
}

/// Alternating fixed point of `CGL_P` and the model it assembles.
pub fn maxwf_alternating(g: &GroundProgram) -> Result<(AlternatingPair, PartialInterpretation)> {
    let pair = alternating(g, cgl, "CGL")?;
    let model = pair.assemble(g);
    Ok((pair, model))
}

pub fn is_stable(g: &GroundProgram, m: &TwoValuedInterpretation) -> bool {
    &gl(g, m) == m
}

pub fn is_maxstable(g: &GroundProgram, m: &TwoValuedInterpretation) -> bool {
    &cgl(g, m) == m
}

/// Supported interpretation: `m ⊆ T⁺(m)`.
pub fn is_supported(g: &GroundProgram, m: &TwoValuedInterpretation) -> bool {
    m.is_subset(&tp_plus(g, m))
}

/// Supported model: `m = T⁺(m)`.
pub fn is_supported_model(g: &GroundProgram, m: &TwoValuedInterpretation) -> bool {
    &tp_plus(g, m) == m
}

/// Every subset of the base satisfying `keep`, in lexicographic order of
/// their sorted atom lists.
pub fn enumerate_models<F>(
    g: &GroundProgram,
    cap: usize,
    what: &'static str,
    keep: F,
) -> Result<Vec<TwoValuedInterpretation>>
where
    F: Fn(&TwoValuedInterpretation) -> bool,
{
    let cap = cap.min(MAX_ENUMERATION_CAP);
    if g.len() > cap {
        return Err(Error::CapExceeded {
            what,
            needed: g.len(),
            cap,
        });
    }
    let mut out: Vec<AtomSet> = (0..1u64 << g.len())
        .map(AtomSet::from_mask)
        .filter(|m| keep(m))
        .collect();
    out.sort();
    Ok(out)
}

pub fn stable_models(g: &GroundProgram, cap: usize) -> Result<Vec<TwoValuedInterpretation>> {
    enumerate_models(g, cap, "stable model enumeration", |m| is_stable(g, m))
}

pub fn maxstable_models(g: &GroundProgram, cap: usize) -> Result<Vec<TwoValuedInterpretation>> {
    enumerate_models(g, cap, "maxstable model enumeration", |m| {
        is_maxstable(g, m)
    })
}

pub fn supported_models(g: &GroundProgram, cap: usize) -> Result<Vec<TwoValuedInterpretation>> {
    enumerate_models(g, cap, "supported model enumeration", |m| {
        is_supported_model(g, m)
    })
}

/// Evaluates one semantics. Traces are kept for the three operator-based
/// partial semantics.
pub fn compute(g: &GroundProgram, semantics: Semantics, cap: usize) -> Result<SemanticsResult> {
    let base = g.base();
    let single = |i: PartialInterpretation,
                  trace: Option<FixpointTrace<PartialInterpretation>>,
                  alternating: Option<AlternatingPair>| SemanticsResult {
        semantics,
        total: Some(is_total(&i, &base)),
        model: Model::Single(i),
        trace,
        alternating,
    };
    let set = |models: Vec<TwoValuedInterpretation>| SemanticsResult {
        semantics,
        model: Model::Set(models),
        total: None,
        trace: None,
        alternating: None,
    };
    Ok(match semantics {
        Semantics::Least => single(total_extension(&least_model(g)?, &base), None, None),
        Semantics::Greatest => single(total_extension(&greatest_model(g)?, &base), None, None),
        Semantics::Fitting => {
            let t = fitting_trace(g)?;
            single(t.fixpoint().clone(), Some(t), None)
        }
        Semantics::WellFounded => {
            let t = well_founded_trace(g)?;
            single(t.fixpoint().clone(), Some(t), None)
        }
        Semantics::Maxwf => {
            let t = maxwf_trace(g)?;
            single(t.fixpoint().clone(), Some(t), None)
        }
        Semantics::WellFoundedAlternating => {
            let (pair, m) = wf_alternating(g)?;
            single(m, None, Some(pair))
        }
        Semantics::MaxwfAlternating => {
            let (pair, m) = maxwf_alternating(g)?;
            single(m, None, Some(pair))
        }
        Semantics::Stable => set(stable_models(g, cap)?),
        Semantics::Maxstable => set(maxstable_models(g, cap)?),
        Semantics::Supported => set(supported_models(g, cap)?),
    })
}

/// How two single models relate in the knowledge order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Agreement {
    Equal,
    Below,
    Above,
    Incomparable,
}

impl Agreement {
    pub fn of(a: &PartialInterpretation, b: &PartialInterpretation) -> Self {
        match (knowledge_leq(a, b), knowledge_leq(b, a)) {
            (true, true) => Agreement::Equal,
            (true, false) => Agreement::Below,
            (false, true) => Agreement::Above,
            (false, false) => Agreement::Incomparable,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Agreement::Equal => "=",
            Agreement::Below => "<",
            Agreement::Above => ">",
            Agreement::Incomparable => "#",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Agreement::Equal => "equal",
            Agreement::Below => "below",
            Agreement::Above => "above",
            Agreement::Incomparable => "incomparable",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interp::{make_partial, render};
    use crate::syntax::parse_program;

    fn g(text: &str) -> GroundProgram {
        parse_program(text).unwrap().ground()
    }

    fn circular() -> GroundProgram {
        g("p :- p.\nq :- not p.")
    }

    fn set(g: &GroundProgram, names: &[&str]) -> AtomSet {
        g.atom_set(names.iter().copied()).unwrap()
    }

    fn sets(g: &GroundProgram, ss: &[&[&str]]) -> Vec<AtomSet> {
        ss.iter().map(|s| set(g, s)).collect()
    }

    fn shown(g: &GroundProgram, i: &PartialInterpretation) -> String {
        render(g, i)
    }

    #[test]
    fn least_and_greatest() {
        let p = g("a. b :- a. c :- c.");
        assert_eq!(least_model(&p).unwrap(), set(&p, &["a", "b"]));
        assert_eq!(greatest_model(&p).unwrap(), set(&p, &["a", "b", "c"]));
        assert!(least_model(&g("p :- p.")).unwrap().is_empty());
        assert!(least_model(&g("")).unwrap().is_empty());
        assert!(greatest_model(&g("p :- q.")).unwrap().is_empty());
        assert!(greatest_model(&g("")).unwrap().is_empty());
        assert!(matches!(
            least_model(&circular()),
            Err(Error::NotDefinite(_))
        ));
        assert!(matches!(
            greatest_model(&circular()),
            Err(Error::NotDefinite(_))
        ));
    }

    #[test]
    fn fitting_cases() {
        let ex = circular();
        assert_eq!(fitting_model(&ex).unwrap(), PartialInterpretation::empty());
        let pq = g("p :- not p, q.");
        assert_eq!(shown(&pq, &fitting_model(&pq).unwrap()), "{not p, not q}");
        assert_eq!(
            fitting_model(&g("p :- p.")).unwrap(),
            PartialInterpretation::empty()
        );
    }

    #[test]
    fn well_founded_cases() {
        let ex = circular();
        assert_eq!(shown(&ex, &well_founded_model(&ex).unwrap()), "{q, not p}");
        let sl = g("p :- p.");
        assert_eq!(shown(&sl, &well_founded_model(&sl).unwrap()), "{not p}");
        assert_eq!(
            well_founded_model(&g("p :- not q. q :- not p.")).unwrap(),
            PartialInterpretation::empty()
        );
    }

    #[test]
    fn wf_alternating_cases() {
        let ex = circular();
        let (pair, m) = wf_alternating(&ex).unwrap();
        assert_eq!(pair.lfp_sq, set(&ex, &["q"]));
        assert_eq!(pair.gfp_sq, set(&ex, &["q"]));
        assert_eq!(shown(&ex, &m), "{q, not p}");

        let ch = g("p :- not q. q :- not p.");
        let (pair, m) = wf_alternating(&ch).unwrap();
        assert!(pair.lfp_sq.is_empty());
        assert_eq!(pair.gfp_sq, ch.base());
        assert_eq!(m, PartialInterpretation::empty());

        let a = g("a.");
        let (pair, m) = wf_alternating(&a).unwrap();
        assert_eq!(pair.lfp_sq, a.base());
        assert_eq!(pair.gfp_sq, a.base());
        assert_eq!(shown(&a, &m), "{a}");
    }

    #[test]
    fn maxwf_cases() {
        let ex = circular();
        assert_eq!(shown(&ex, &maxwf_model(&ex).unwrap()), "{p, not q}");
        let sl = g("p :- p.");
        assert_eq!(shown(&sl, &maxwf_model(&sl).unwrap()), "{p}");
        assert_eq!(
            maxwf_model(&g("p :- not q. q :- not p.")).unwrap(),
            PartialInterpretation::empty()
        );
    }

    #[test]
    fn maxwf_alternating_cases() {
        let ex = circular();
        let (pair, m) = maxwf_alternating(&ex).unwrap();
        assert_eq!(pair.lfp_sq, set(&ex, &["p"]));
        assert_eq!(pair.gfp_sq, set(&ex, &["p"]));
        assert_eq!(shown(&ex, &m), "{p, not q}");

        let sl = g("p :- p.");
        let (pair, m) = maxwf_alternating(&sl).unwrap();
        assert_eq!(
            (pair.lfp_sq.clone(), pair.gfp_sq.clone()),
            (sl.base(), sl.base())
        );
        assert_eq!(shown(&sl, &m), "{p}");

        let pq = g("p :- q.");
        let (pair, m) = maxwf_alternating(&pq).unwrap();
        assert!(pair.lfp_sq.is_empty() && pair.gfp_sq.is_empty());
        assert_eq!(shown(&pq, &m), "{not p, not q}");
    }

    #[test]
    fn enumerations() {
        let ex = circular();
        assert_eq!(stable_models(&ex, 20).unwrap(), sets(&ex, &[&["q"]]));
        assert_eq!(maxstable_models(&ex, 20).unwrap(), sets(&ex, &[&["p"]]));
        assert_eq!(
            supported_models(&ex, 20).unwrap(),
            sets(&ex, &[&["p"], &["q"]])
        );

        let odd = g("p :- not p.");
        assert!(stable_models(&odd, 20).unwrap().is_empty());

        let ch = g("p :- not q. q :- not p.");
        assert_eq!(
            stable_models(&ch, 20).unwrap(),
            sets(&ch, &[&["p"], &["q"]])
        );
        assert_eq!(
            maxstable_models(&ch, 20).unwrap(),
            sets(&ch, &[&["p"], &["q"]])
        );

        let sl = g("p :- p.");
        assert_eq!(maxstable_models(&sl, 20).unwrap(), sets(&sl, &[&["p"]]));
        assert_eq!(
            supported_models(&sl, 20).unwrap(),
            sets(&sl, &[&[], &["p"]])
        );

        let ep = GroundProgram::propositional(&["p"], &[]).unwrap();
        assert_eq!(supported_models(&ep, 20).unwrap(), vec![AtomSet::new()]);
    }

    #[test]
    fn enumeration_cap() {
        let text: String = (0..25).map(|i| format!("a{i} :- not b{i}.\n")).collect();
        let big = g(&text);
        assert_eq!(
            stable_models(&big, DEFAULT_ENUMERATION_CAP),
            Err(Error::CapExceeded {
                what: "stable model enumeration",
                needed: 50,
                cap: 20
            })
        );
        // the direct checks have no cap
        let names: Vec<String> = (0..25).map(|i| format!("a{i}")).collect();
        let m = big.atom_set(names.iter().map(String::as_str)).unwrap();
        assert!(is_stable(&big, &m));
    }

    #[test]
    fn direct_checks() {
        let ex = circular();
        assert!(is_stable(&ex, &set(&ex, &["q"])));
        assert!(is_maxstable(&ex, &set(&ex, &["p"])));
        assert!(!is_stable(&ex, &set(&ex, &["p"])));
        let sl = g("p :- p.");
        assert!(is_supported(&sl, &sl.base()));
        assert!(is_supported(&ex, &AtomSet::new()));
        assert!(!is_supported_model(&ex, &AtomSet::new()));
    }

    #[test]
    fn compute_reports_totality_and_trace() {
        let ex = circular();
        let r = compute(&ex, Semantics::WellFounded, 20).unwrap();
        assert_eq!(r.total, Some(true));
        assert_eq!(r.trace.as_ref().unwrap().closure_index, 2);
        let r = compute(&ex, Semantics::Fitting, 20).unwrap();
        assert_eq!(r.total, Some(false));
        let r = compute(&ex, Semantics::Stable, 20).unwrap();
        assert_eq!(r.model, Model::Set(sets(&ex, &[&["q"]])));
        assert!(matches!(
            compute(&ex, Semantics::Least, 20),
            Err(Error::NotDefinite(_))
        ));
    }

    #[test]
    fn agreement() {
        let ex = circular();
        let wf = well_founded_model(&ex).unwrap();
        let mw = maxwf_model(&ex).unwrap();
        let fit = fitting_model(&ex).unwrap();
        assert_eq!(Agreement::of(&wf, &mw), Agreement::Incomparable);
        assert_eq!(Agreement::of(&fit, &wf), Agreement::Below);
        assert_eq!(Agreement::of(&mw, &fit), Agreement::Above);
        let m1 = make_partial(&ex, set(&ex, &["p"]), set(&ex, &["q"])).unwrap();
        assert_eq!(Agreement::of(&mw, &m1), Agreement::Equal);
    }

    #[test]
    fn semantics_names_round_trip() {
        for s in Semantics::ALL {
            assert_eq!(s.name().parse::<Semantics>().unwrap(), s);
        }
        assert!("nope".parse::<Semantics>().is_err());
    }
}
