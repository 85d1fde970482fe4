//! Acceptance checks over the catalog, shared by the `verify-all` command
//! and the acceptance test target. Output is deterministic: no timings, no
//! hash-map iteration.

mod criteria;
mod roots;

use std::fmt::Write;

use serde_json::{json, Value};

use crate::catalog::DzSign;
use crate::coalgebra::SignConvention;
use crate::error::{Error, Result};

use criteria::CRITERIA;
pub use roots::{elementary_of, formal_roots};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Upper bound on `n` for every model-building check.
    pub n_max: u32,
    pub convention: SignConvention,
    pub dz: DzSign,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            n_max: 5,
            convention: SignConvention::Section3,
            dz: DzSign::Minus,
        }
    }
}

impl VerifyConfig {
    /// `lo..=min(hi, n_max)`.
    pub fn range(&self, lo: u32, hi: u32) -> std::ops::RangeInclusive<u32> {
        lo..=hi.min(self.n_max)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionOutcome {
    pub id: u32,
    pub title: &'static str,
    pub pass: bool,
    pub cases: usize,
    /// Pinned settings and residues, one line each.
    pub detail: Vec<String>,
}

impl CriterionOutcome {
    pub fn line(&self) -> String {
        let status = if self.pass { "PASS" } else { "FAIL" };
        format!("{status} {:>2} {} ({} cases)", self.id, self.title, self.cases)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "title": self.title,
            "pass": self.pass,
            "cases": self.cases,
            "detail": self.detail,
        })
    }
}

/// Collects cases for one criterion.
pub(crate) struct Tally {
    cases: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    pub(crate) fn new() -> Self {
        Tally {
            cases: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub(crate) fn case(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    /// Records an engine error as a failed case.
    pub(crate) fn result<T>(&mut self, r: Result<T>, what: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.case(false, || format!("{}: {e}", what()));
                None
            }
        }
    }

    pub(crate) fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub(crate) fn finish(self, id: u32, title: &'static str) -> CriterionOutcome {
        let pass = self.failures.is_empty() && self.cases > 0;
        let mut detail = self.notes;
        detail.extend(self.failures);
        CriterionOutcome {
            id,
            title,
            pass,
            cases: self.cases,
            detail,
        }
    }
}

/// Ids and titles of the registered criteria.
pub fn criteria() -> Vec<(u32, &'static str)> {
    CRITERIA.iter().map(|(i, t, _)| (*i, *t)).collect()
}

pub fn run_criterion(id: u32, cfg: &VerifyConfig) -> Result<CriterionOutcome> {
    let (_, title, f) = CRITERIA
        .iter()
        .find(|(i, _, _)| *i == id)
        .ok_or_else(|| Error::Parameter(format!("no criterion {id}")))?;
    let mut t = Tally::new();
    f(cfg, &mut t);
    Ok(t.finish(id, title))
}

/// Criteria 1 to 11; the determinism check lives with the caller, which
/// runs this twice.
pub fn verify_all(cfg: &VerifyConfig) -> Vec<CriterionOutcome> {
    CRITERIA
        .iter()
        .map(|(id, _, _)| run_criterion(*id, cfg).expect("registered criterion"))
        .collect()
}

pub fn render_log(outcomes: &[CriterionOutcome]) -> String {
    let mut out = String::new();
    for o in outcomes {
        writeln!(out, "{}", o.line()).expect("string write");
        for d in &o.detail {
            writeln!(out, "     {d}").expect("string write");
        }
    }
    out
}

/// Runs the suite twice and appends the determinism line.
pub fn verify_all_with_determinism(cfg: &VerifyConfig) -> Vec<CriterionOutcome> {
    let first = verify_all(cfg);
    let second = verify_all(cfg);
    let same = render_log(&first) == render_log(&second);
    let mut out = first;
    out.push(CriterionOutcome {
        id: 12,
        title: "two runs give byte-identical logs",
        pass: same,
        cases: 1,
        detail: if same { vec![] } else { vec!["logs differ".into()] },
    });
    out
}
