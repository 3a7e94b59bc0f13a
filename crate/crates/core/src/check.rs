//! Per-program verification of the fixpoint equivalences and level-mapping
//! characterizations.
//!
//! Each check either passes, fails with a witness, or is skipped with a
//! reason (not applicable, or the program exceeds the check's oracle cap).

use serde::{Deserialize, Serialize};

use crate::atoms::AtomSet;
use crate::error::Result;
use crate::interp::{is_model, is_total, knowledge_leq, render, render_set, total_extension};
use crate::levelmap::{
    extract_level_mapping_from_trace, find_level_mapping, greatest_model_with_condition,
    is_locally_stratified, Condition, GreatestOutcome,
};
use crate::semantics::{
    enumerate_models, fitting_model, greatest_model, is_maxstable, is_stable, is_supported,
    is_supported_model, least_model, maxstable_models, maxwf_alternating, maxwf_trace,
    stable_models, well_founded_model, wf_alternating,
};
use crate::syntax::GroundProgram;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    /// Counterexample for a failed check.
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub checks: Vec<CheckResult>,
}

impl CheckReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }
}

/// Oracle size limits, in atoms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckCaps {
    /// Model-set enumeration (`2^n` subsets).
    pub enumeration: usize,
    /// Greatest-model searches over all `3^n` partial interpretations.
    pub greatest: usize,
    /// Per-subset level-mapping searches (Fages, maxstable, definite).
    pub subset_search: usize,
    /// Exhaustive search for a stratification mapping.
    pub stratification: usize,
}

impl Default for CheckCaps {
    fn default() -> Self {
        CheckCaps {
            enumeration: crate::semantics::DEFAULT_ENUMERATION_CAP,
            greatest: 4,
            subset_search: 5,
            stratification: 6,
        }
    }
}

enum Outcome {
    Pass,
    Fail(String),
    Skip(String),
}

fn skip_cap(what: &str, n: usize, cap: usize) -> Outcome {
    Outcome::Skip(format!("cap: {what} needs {n} atoms, cap is {cap}"))
}

fn not_applicable(why: &str) -> Outcome {
    Outcome::Skip(format!("not applicable: {why}"))
}

type CheckFn = fn(&GroundProgram, &CheckCaps) -> Result<Outcome>;

/// Runs every check on `g`.
pub fn run_checks(g: &GroundProgram, caps: &CheckCaps) -> CheckReport {
    let checks: [(&str, CheckFn); 14] = [
        ("wf-alternating", wf_alt),
        ("maxwf-alternating", maxwf_alt),
        ("fitting-below", fitting_below),
        ("fitting-levelmap", |g, c| {
            greatest_matches(g, c, Condition::F)
        }),
        ("wf-levelmap", |g, c| greatest_matches(g, c, Condition::Wf)),
        ("cw-levelmap", |g, c| greatest_matches(g, c, Condition::Cw)),
        ("cw-trace-mapping", cw_trace_mapping),
        ("stable-fages", fages),
        ("maxstable-levelmap", maxstable_levelmap),
        ("stable-enumeration", stable_enumeration),
        ("definite-duality", definite_duality),
        ("definite-levelmap", definite_levelmap),
        ("stratified-total-wf", stratified_total),
        ("stratification-search", stratification_search),
    ];
    let checks = checks
        .iter()
        .map(|(name, f)| {
            let (status, witness, reason) = match f(g, caps) {
                Ok(Outcome::Pass) => (CheckStatus::Pass, None, None),
                Ok(Outcome::Fail(w)) => (CheckStatus::Fail, Some(w), None),
                Ok(Outcome::Skip(r)) => (CheckStatus::Skipped, None, Some(r)),
                Err(e) => (CheckStatus::Fail, Some(format!("error: {e}")), None),
            };
            CheckResult {
                name: name.to_string(),
                status,
                witness,
                reason,
            }
        })
        .collect();
    CheckReport { seed: None, checks }
}

fn wf_alt(g: &GroundProgram, _: &CheckCaps) -> Result<Outcome> {
    let direct = well_founded_model(g)?;
    let (_, alt) = wf_alternating(g)?;
    Ok(if direct == alt {
        Outcome::Pass
    } else {
        Outcome::Fail(format!(
            "lfp(W_P) = {} but GL alternation gives {}",
            render(g, &direct),
            render(g, &alt)
        ))
    })
}

fn maxwf_alt(g: &GroundProgram, _: &CheckCaps) -> Result<Outcome> {
    let direct = crate::semantics::maxwf_model(g)?;
    let (_, alt) = maxwf_alternating(g)?;
    Ok(if direct == alt {
        Outcome::Pass
    } else {
        Outcome::Fail(format!(
            "lfp(CW_P) = {} but CGL alternation gives {}",
            render(g, &direct),
            render(g, &alt)
        ))
    })
}

fn fitting_below(g: &GroundProgram, _: &CheckCaps) -> Result<Outcome> {
    let fit = fitting_model(g)?;
    for (name, other) in [
        ("well-founded", well_founded_model(g)?),
        ("maxwf", crate::semantics::maxwf_model(g)?),
    ] {
        if !knowledge_leq(&fit, &other) {
            return Ok(Outcome::Fail(format!(
                "Fitting model {} is not below the {name} model {}",
                render(g, &fit),
                render(g, &other)
            )));
        }
    }
    Ok(Outcome::Pass)
}

fn greatest_matches(g: &GroundProgram, caps: &CheckCaps, c: Condition) -> Result<Outcome> {
    if g.len() > caps.greatest {
        return Ok(skip_cap("greatest-model search", g.len(), caps.greatest));
    }
    let expected = match c {
        Condition::F => fitting_model(g)?,
        Condition::Wf => well_founded_model(g)?,
        _ => crate::semantics::maxwf_model(g)?,
    };
    Ok(match greatest_model_with_condition(g, c, caps.greatest)? {
        GreatestOutcome::Greatest(m) if m == expected => Outcome::Pass,
        GreatestOutcome::Greatest(m) => Outcome::Fail(format!(
            "greatest model under ({c}) is {}, expected {}",
            render(g, &m),
            render(g, &expected)
        )),
        GreatestOutcome::NoGreatest(max) => Outcome::Fail(format!(
            "no greatest model under ({c}); maximal: {}",
            max.iter()
                .map(|m| render(g, m))
                .collect::<Vec<_>>()
                .join(" ")
        )),
        GreatestOutcome::NoCandidates => Outcome::Fail(format!("no model admits a ({c}) mapping")),
    })
}

fn cw_trace_mapping(g: &GroundProgram, _: &CheckCaps) -> Result<Outcome> {
    let t = maxwf_trace(g)?;
    let l = extract_level_mapping_from_trace(&t, g.len());
    let ok = crate::levelmap::check_condition(g, t.fixpoint(), &l, Condition::Cw)?;
    Ok(if ok {
        Outcome::Pass
    } else {
        Outcome::Fail(format!(
            "trace mapping {} violates (CW) on {}",
            l.render(g),
            render(g, t.fixpoint())
        ))
    })
}

fn subsets(g: &GroundProgram) -> impl Iterator<Item = AtomSet> {
    (0..1u64 << g.len()).map(AtomSet::from_mask)
}

fn fages(g: &GroundProgram, caps: &CheckCaps) -> Result<Outcome> {
    if g.len() > caps.subset_search {
        return Ok(skip_cap("level search", g.len(), caps.subset_search));
    }
    let base = g.base();
    for m in subsets(g) {
        let total = total_extension(&m, &base);
        let mapped = is_model(g, &total)
            && find_level_mapping(g, &total, Condition::Fages, None, caps.subset_search)?.is_some();
        if mapped != is_stable(g, &m) {
            return Ok(Outcome::Fail(format!(
                "M = {}: stable = {}, model with Fages mapping = {mapped}",
                render_set(g, &m),
                !mapped
            )));
        }
    }
    Ok(Outcome::Pass)
}

fn maxstable_levelmap(g: &GroundProgram, caps: &CheckCaps) -> Result<Outcome> {
    if g.len() > caps.subset_search {
        return Ok(skip_cap("level search", g.len(), caps.subset_search));
    }
    let base = g.base();
    for m in subsets(g) {
        let total = total_extension(&m, &base);
        let mapped = is_supported(g, &m)
            && find_level_mapping(g, &total, Condition::Maxstable, None, caps.subset_search)?
                .is_some();
        if mapped != is_maxstable(g, &m) {
            return Ok(Outcome::Fail(format!(
                "M = {}: maxstable = {}, supported with mapping = {mapped}",
                render_set(g, &m),
                !mapped
            )));
        }
    }
    Ok(Outcome::Pass)
}

/// Stable and maxstable models are supported models and lie between the
/// extreme fixed points of the squared operator.
fn stable_enumeration(g: &GroundProgram, caps: &CheckCaps) -> Result<Outcome> {
    if g.len() > caps.enumeration {
        return Ok(skip_cap("model enumeration", g.len(), caps.enumeration));
    }
    let (gl_pair, _) = wf_alternating(g)?;
    let (cgl_pair, _) = maxwf_alternating(g)?;
    for (kind, models, pair) in [
        ("stable", stable_models(g, caps.enumeration)?, &gl_pair),
        (
            "maxstable",
            maxstable_models(g, caps.enumeration)?,
            &cgl_pair,
        ),
    ] {
        for m in models {
            if !is_supported_model(g, &m) {
                return Ok(Outcome::Fail(format!(
                    "{kind} model {} is not a supported model",
                    render_set(g, &m)
                )));
            }
            if !(pair.lfp_sq.is_subset(&m) && m.is_subset(&pair.gfp_sq)) {
                return Ok(Outcome::Fail(format!(
                    "{kind} model {} lies outside [{}, {}]",
                    render_set(g, &m),
                    render_set(g, &pair.lfp_sq),
                    render_set(g, &pair.gfp_sq)
                )));
            }
        }
    }
    Ok(Outcome::Pass)
}

fn definite_duality(g: &GroundProgram, caps: &CheckCaps) -> Result<Outcome> {
    if !g.is_definite() {
        return Ok(not_applicable("program has negation"));
    }
    if g.len() > caps.enumeration {
        return Ok(skip_cap("model enumeration", g.len(), caps.enumeration));
    }
    let least = least_model(g)?;
    let greatest = greatest_model(g)?;
    let stable = stable_models(g, caps.enumeration)?;
    let maxstable = maxstable_models(g, caps.enumeration)?;
    if stable != [least.clone()] {
        return Ok(Outcome::Fail(format!(
            "stable models {:?} differ from the least model {}",
            stable.iter().map(|m| render_set(g, m)).collect::<Vec<_>>(),
            render_set(g, &least)
        )));
    }
    if maxstable != [greatest.clone()] {
        return Ok(Outcome::Fail(format!(
            "maxstable models {:?} differ from the greatest model {}",
            maxstable
                .iter()
                .map(|m| render_set(g, m))
                .collect::<Vec<_>>(),
            render_set(g, &greatest)
        )));
    }
    Ok(Outcome::Pass)
}

/// The least model is the only two-valued model with a `DefLeast` mapping;
/// the greatest model is the only supported interpretation with a
/// `DefGreatest` mapping.
fn definite_levelmap(g: &GroundProgram, caps: &CheckCaps) -> Result<Outcome> {
    if !g.is_definite() {
        return Ok(not_applicable("program has negation"));
    }
    if g.len() > caps.subset_search {
        return Ok(skip_cap("level search", g.len(), caps.subset_search));
    }
    let base = g.base();
    let cap = caps.subset_search;
    let with_least = enumerate_models(g, cap, "definite level search", |m| {
        let t = total_extension(m, &base);
        is_model(g, &t)
            && matches!(
                find_level_mapping(g, &t, Condition::DefLeast, None, cap),
                Ok(Some(_))
            )
    })?;
    let least = least_model(g)?;
    if with_least != [least.clone()] {
        return Ok(Outcome::Fail(format!(
            "models with a least-style mapping: {:?}, least model {}",
            with_least
                .iter()
                .map(|m| render_set(g, m))
                .collect::<Vec<_>>(),
            render_set(g, &least)
        )));
    }
    let with_greatest = enumerate_models(g, cap, "definite level search", |m| {
        let t = total_extension(m, &base);
        is_supported(g, m)
            && matches!(
                find_level_mapping(g, &t, Condition::DefGreatest, None, cap),
                Ok(Some(_))
            )
    })?;
    let greatest = greatest_model(g)?;
    if with_greatest != [greatest.clone()] {
        return Ok(Outcome::Fail(format!(
            "supported interpretations with a greatest-style mapping: {:?}, greatest model {}",
            with_greatest
                .iter()
                .map(|m| render_set(g, m))
                .collect::<Vec<_>>(),
            render_set(g, &greatest)
        )));
    }
    Ok(Outcome::Pass)
}

fn stratified_total(g: &GroundProgram, caps: &CheckCaps) -> Result<Outcome> {
    if !is_locally_stratified(g) {
        return Ok(not_applicable("program is not locally stratified"));
    }
    let wf = well_founded_model(g)?;
    if !is_total(&wf, &g.base()) {
        return Ok(Outcome::Fail(format!(
            "stratified program has partial well-founded model {}",
            render(g, &wf)
        )));
    }
    if g.len() <= caps.enumeration {
        let stable = stable_models(g, caps.enumeration)?;
        if stable != [wf.pos().clone()] {
            return Ok(Outcome::Fail(format!(
                "total well-founded model {} but stable models {:?}",
                render(g, &wf),
                stable.iter().map(|m| render_set(g, m)).collect::<Vec<_>>()
            )));
        }
    } else if !is_stable(g, wf.pos()) {
        return Ok(Outcome::Fail(format!(
            "total well-founded model {} is not stable",
            render(g, &wf)
        )));
    }
    Ok(Outcome::Pass)
}

fn stratification_search(g: &GroundProgram, caps: &CheckCaps) -> Result<Outcome> {
    if g.len() > caps.stratification {
        return Ok(skip_cap(
            "stratification search",
            g.len(),
            caps.stratification,
        ));
    }
    let scc = is_locally_stratified(g);
    let any = total_extension(&AtomSet::new(), &g.base());
    let search = find_level_mapping(
        g,
        &any,
        Condition::LocallyStratified,
        None,
        caps.stratification,
    )?
    .is_some();
    Ok(if scc == search {
        Outcome::Pass
    } else {
        Outcome::Fail(format!(
            "SCC analysis says {scc}, exhaustive search says {search}"
        ))
    })
}
