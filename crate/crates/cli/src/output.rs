//! Text and JSON rendering. Every function returns the complete output,
//! newline-terminated.

use std::fmt::Write;

use serde::Serialize;

use lpfix::check::{CheckReport, CheckStatus};
use lpfix::interp::{render, render_set, InterpretationJson};
use lpfix::semantics::{self, Agreement, Model, Semantics, SemanticsResult};
use lpfix::{Error, GroundProgram, PartialInterpretation, TwoValuedInterpretation};

use crate::Format;

#[derive(Serialize)]
struct ModelSetJson {
    models: Vec<Vec<String>>,
    count: usize,
}

impl ModelSetJson {
    fn new(g: &GroundProgram, models: &[TwoValuedInterpretation]) -> Self {
        ModelSetJson {
            models: models.iter().map(|m| g.names_of(m)).collect(),
            count: models.len(),
        }
    }
}

#[derive(Serialize)]
struct AlternatingJson {
    lfp_sq: Vec<String>,
    gfp_sq: Vec<String>,
}

#[derive(Serialize)]
struct TracedJson {
    model: InterpretationJson,
    total: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<Vec<InterpretationJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    closure_index: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    alternating: Option<AlternatingJson>,
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("output types serialize");
    s.push('\n');
    s
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn count_models(n: usize) -> String {
    if n == 1 {
        "1 model".into()
    } else {
        format!("{n} models")
    }
}

pub fn compute(g: &GroundProgram, r: &SemanticsResult, trace: bool, format: Format) -> String {
    match (&r.model, format) {
        (Model::Set(ms), Format::Json) => to_json(&ModelSetJson::new(g, ms)),
        (Model::Set(ms), Format::Text) => {
            let mut out = format!("{}: {}\n", r.semantics, count_models(ms.len()));
            for m in ms {
                writeln!(out, "{}", render_set(g, m)).unwrap();
            }
            out
        }
        (Model::Single(i), Format::Json) if !trace => to_json(&InterpretationJson::new(g, i)),
        (Model::Single(i), Format::Json) => to_json(&TracedJson {
            model: InterpretationJson::new(g, i),
            total: r.total.unwrap_or(false),
            trace: r.trace.as_ref().map(|t| {
                t.stages
                    .iter()
                    .map(|s| InterpretationJson::new(g, s))
                    .collect()
            }),
            closure_index: r.trace.as_ref().map(|t| t.closure_index),
            alternating: r.alternating.as_ref().map(|p| AlternatingJson {
                lfp_sq: g.names_of(&p.lfp_sq),
                gfp_sq: g.names_of(&p.gfp_sq),
            }),
        }),
        (Model::Single(i), Format::Text) => {
            let mut out = format!("{}: {}\n", r.semantics, render(g, i));
            writeln!(out, "total: {}", yes_no(r.total.unwrap_or(false))).unwrap();
            if trace {
                if let Some(t) = &r.trace {
                    for (k, s) in t.stages.iter().enumerate() {
                        writeln!(out, "stage {k}: {}", render(g, s)).unwrap();
                    }
                    writeln!(out, "closed at stage {}", t.closure_index).unwrap();
                }
                if let Some(p) = &r.alternating {
                    writeln!(
                        out,
                        "least fixpoint of square: {}",
                        render_set(g, &p.lfp_sq)
                    )
                    .unwrap();
                    writeln!(
                        out,
                        "greatest fixpoint of square: {}",
                        render_set(g, &p.gfp_sq)
                    )
                    .unwrap();
                }
            }
            out
        }
    }
}

enum Row {
    Single(PartialInterpretation, bool),
    Set(Vec<TwoValuedInterpretation>),
    Unavailable(String),
}

#[derive(Serialize)]
struct RowJson {
    semantics: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    model: Option<InterpretationJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    total: Option<bool>,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    models: Option<ModelSetJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    unavailable: Option<String>,
}

#[derive(Serialize)]
struct AgreementJson {
    left: &'static str,
    right: &'static str,
    relation: &'static str,
}

#[derive(Serialize)]
struct CompareJson {
    rows: Vec<RowJson>,
    agreement: Vec<AgreementJson>,
}

fn unavailable(e: &Error) -> String {
    match e {
        Error::NotDefinite(_) => "program is not definite".into(),
        Error::CapExceeded { needed, cap, .. } => {
            format!("cap: needs {needed} atoms, cap is {cap}")
        }
        other => other.to_string(),
    }
}

fn evaluate(g: &GroundProgram, s: Semantics, cap: usize) -> Row {
    match semantics::compute(g, s, cap) {
        Ok(SemanticsResult {
            model: Model::Single(i),
            total,
            ..
        }) => Row::Single(i, total.unwrap_or(false)),
        Ok(SemanticsResult {
            model: Model::Set(ms),
            ..
        }) => Row::Set(ms),
        Err(e) => Row::Unavailable(unavailable(&e)),
    }
}

pub fn compare(g: &GroundProgram, cap: usize, format: Format) -> String {
    let rows: Vec<(Semantics, Row)> = Semantics::ALL
        .into_iter()
        .map(|s| (s, evaluate(g, s, cap)))
        .collect();
    let singles: Vec<(Semantics, &PartialInterpretation)> = rows
        .iter()
        .filter_map(|(s, r)| match r {
            Row::Single(i, _) => Some((*s, i)),
            _ => None,
        })
        .collect();

    match format {
        Format::Json => {
            let rows = rows
                .iter()
                .map(|(s, r)| {
                    let mut row = RowJson {
                        semantics: s.name(),
                        model: None,
                        total: None,
                        models: None,
                        unavailable: None,
                    };
                    match r {
                        Row::Single(i, total) => {
                            row.model = Some(InterpretationJson::new(g, i));
                            row.total = Some(*total);
                        }
                        Row::Set(ms) => row.models = Some(ModelSetJson::new(g, ms)),
                        Row::Unavailable(why) => row.unavailable = Some(why.clone()),
                    }
                    row
                })
                .collect();
            let mut agreement = Vec::new();
            for (k, (a, i)) in singles.iter().enumerate() {
                for (b, j) in &singles[k + 1..] {
                    agreement.push(AgreementJson {
                        left: a.name(),
                        right: b.name(),
                        relation: Agreement::of(i, j).name(),
                    });
                }
            }
            to_json(&CompareJson { rows, agreement })
        }
        Format::Text => {
            let width = Semantics::ALL
                .iter()
                .map(|s| s.name().len())
                .max()
                .unwrap_or(0);
            let mut out = String::new();
            for (s, r) in &rows {
                let line = match r {
                    Row::Single(i, total) => {
                        format!("{}  total: {}", render(g, i), yes_no(*total))
                    }
                    Row::Set(ms) => {
                        let shown: Vec<String> = ms.iter().map(|m| render_set(g, m)).collect();
                        if shown.is_empty() {
                            count_models(0)
                        } else {
                            format!("{}: {}", count_models(ms.len()), shown.join(" "))
                        }
                    }
                    Row::Unavailable(why) => format!("unavailable ({why})"),
                };
                writeln!(out, "{:<width$}  {line}", s.name()).unwrap();
            }
            if !singles.is_empty() {
                writeln!(
                    out,
                    "\nagreement (row vs column; = equal, < below, > above, # incomparable)"
                )
                .unwrap();
                write!(out, "{:<width$}", "").unwrap();
                for (s, _) in &singles {
                    write!(out, "  {:>w$}", s.name(), w = s.name().len()).unwrap();
                }
                out.push('\n');
                for (a, i) in &singles {
                    write!(out, "{:<width$}", a.name()).unwrap();
                    for (b, j) in &singles {
                        let sym = Agreement::of(i, j).symbol();
                        write!(out, "  {:>w$}", sym, w = b.name().len()).unwrap();
                    }
                    out.push('\n');
                }
            }
            out
        }
    }
}

#[derive(Serialize)]
struct RunsJson<'a> {
    runs: &'a [CheckReport],
    failed: usize,
}

pub fn check(reports: &[CheckReport], format: Format) -> String {
    let failed = reports.iter().filter(|r| !r.passed()).count();
    match format {
        Format::Json if reports.len() == 1 => to_json(&reports[0]),
        Format::Json => to_json(&RunsJson {
            runs: reports,
            failed,
        }),
        Format::Text => {
            let mut out = String::new();
            let (mut pass, mut fail, mut skip) = (0, 0, 0);
            for r in reports {
                if let Some(seed) = r.seed {
                    writeln!(out, "seed {seed}").unwrap();
                }
                for c in &r.checks {
                    let line = match c.status {
                        CheckStatus::Pass => {
                            pass += 1;
                            format!("pass     {}", c.name)
                        }
                        CheckStatus::Fail => {
                            fail += 1;
                            format!(
                                "FAIL     {}: {}",
                                c.name,
                                c.witness.as_deref().unwrap_or("no witness")
                            )
                        }
                        CheckStatus::Skipped => {
                            skip += 1;
                            format!(
                                "skipped  {} ({})",
                                c.name,
                                c.reason.as_deref().unwrap_or("no reason given")
                            )
                        }
                    };
                    writeln!(out, "  {line}").unwrap();
                }
            }
            writeln!(
                out,
                "{} program(s): {pass} passed, {fail} failed, {skip} skipped",
                reports.len()
            )
            .unwrap();
            out
        }
    }
}
