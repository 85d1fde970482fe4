//! Command dispatch behind the `sullivan` binary. Every command produces a
//! JSON value; the text format is a line-oriented rendering of it, with a
//! short summary line for `check` and `orbit`.

use std::fmt::Write;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::algebra::json::cdga_to_json;
use crate::algebra::{CheckReport, Morphism};
use crate::catalog::*;
use crate::coalgebra::{dualize, SignConvention};
use crate::error::{Error, Result};
use crate::homology::{betti_numbers, is_quasi_iso, DegreeWindow, IdealPlusUnit, Options};
use crate::rational::{fmt_rational, rat};
use crate::sections::{brown_szczarba, component_model, k_window, Augmentation, Materialize};
use crate::verify::{render_log, verify_all_with_determinism, VerifyConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Model,
    Check,
    Cohomology,
    Sections,
    Orbit,
    Invariants,
    VerifyAll,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    Json,
    #[default]
    Text,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            _ => Err(Error::Parameter(format!("unknown format `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliConfig {
    pub command: Command,
    pub n: Option<u32>,
    pub d: Option<i64>,
    pub window: Option<DegreeWindow>,
    pub format: Format,
    pub sign_convention: SignConvention,
    pub gr2_dz_sign: DzSign,
    pub model: Option<CatalogKey>,
    pub n_max: u32,
}

impl CliConfig {
    pub fn new(command: Command) -> Self {
        CliConfig {
            command,
            n: None,
            d: None,
            window: None,
            format: Format::Text,
            sign_convention: SignConvention::Section3,
            gr2_dz_sign: DzSign::Minus,
            model: None,
            n_max: 5,
        }
    }

    fn n(&self) -> Result<u32> {
        self.n
            .or(self.model.map(|k| k.n))
            .ok_or_else(|| Error::Parameter("--n is required".into()))
    }

    fn d(&self) -> Result<i64> {
        self.d
            .or(self.model.and_then(|k| k.d))
            .ok_or_else(|| Error::Parameter("--d is required".into()))
    }

    fn key(&self) -> Result<CatalogKey> {
        match self.model {
            Some(k) => Ok(k),
            None => CatalogKey::new(Family::SectionsClosedForm, self.n()?, Some(self.d()?)),
        }
    }

    fn window_or(&self, hi: i64) -> Result<DegreeWindow> {
        match self.window {
            Some(w) => Ok(w),
            None => DegreeWindow::new(0, hi),
        }
    }
}

/// `LO:HI`.
pub fn parse_window(s: &str) -> Result<DegreeWindow> {
    let bad = || Error::Parameter(format!("window must look like LO:HI, got `{s}`"));
    let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
    DegreeWindow::new(lo.trim().parse().map_err(|_| bad())?, hi.trim().parse().map_err(|_| bad())?)
}

/// Exit code and standard output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CHECK: i32 = 2;

/// Engine errors surface as `Err`; the binary maps them to exit code 1.
pub fn run(cfg: &CliConfig) -> Result<Outcome> {
    let (ok, value, summary) = match cfg.command {
        Command::Model => (true, model(cfg)?, None),
        Command::Check => check(cfg)?,
        Command::Cohomology => (true, cohomology(cfg)?, None),
        Command::Sections => (true, sections(cfg)?, None),
        Command::Orbit => orbit(cfg)?,
        Command::Invariants => {
            let r = invariant_report(cfg.n()?, cfg.d()?, cfg.window, Options::default())?;
            (true, r.to_json(), None)
        }
        Command::VerifyAll => return verify(cfg),
    };
    let stdout = match cfg.format {
        Format::Json => pretty(&value),
        Format::Text => {
            let mut s = summary.map(|l| l + "\n").unwrap_or_default();
            s.push_str(&render_text(&value));
            s
        }
    };
    Ok(Outcome {
        code: if ok { EXIT_OK } else { EXIT_CHECK },
        stdout,
    })
}

fn model(cfg: &CliConfig) -> Result<Value> {
    Ok((*cached_json(&cfg.key()?, cfg.gr2_dz_sign)?).clone())
}

/// Maps attached to a catalog family, checked alongside `d²`.
fn chain_maps(key: &CatalogKey, dz: DzSign) -> Result<Vec<(&'static str, Morphism)>> {
    let n = key.n;
    let d = key.d.unwrap_or_default();
    Ok(match key.family {
        Family::Gr1cAbs => vec![("elimination", gr1c_eliminated(n, false)?.1)],
        Family::Gr1cBorel => vec![("elimination", gr1c_eliminated(n, true)?.1), ("h", h_map(n)?)],
        Family::SectionsClosedForm => vec![("orbit", orbit_map(n, d)?)],
        Family::SectionsBorel => vec![("orbit-lift", orbit_borel_lift(n, d)?)],
        Family::Gr2Borel => vec![("iota", iota(n)?)],
        Family::Gr2ThomMinimal | Family::Gr2ThomIdeal => vec![("phi", gr2_phi(n, dz)?)],
        _ => vec![],
    })
}

fn report_json(r: &CheckReport) -> Value {
    if r.is_ok() {
        return json!("ok");
    }
    let residues: serde_json::Map<String, Value> =
        r.failures.iter().map(|(g, p)| (g.clone(), json!(p.to_string()))).collect();
    Value::Object(residues)
}

fn check(cfg: &CliConfig) -> Result<(bool, Value, Option<String>)> {
    let key = cfg.key()?;
    let entry = build(&key, cfg.gr2_dz_sign)?;
    let dsq = entry.algebra.check_d_squared();
    let mut maps = serde_json::Map::new();
    let mut maps_ok = true;
    for (name, m) in chain_maps(&key, cfg.gr2_dz_sign)? {
        let r = m.check_chain_map();
        maps_ok &= r.is_ok();
        maps.insert(name.into(), report_json(&r));
    }
    let word = |ok: bool| if ok { "ok" } else { "FAILED" };
    let summary = format!("d²=0: {}; chain maps: {}", word(dsq.is_ok()), word(maps_ok));
    let v = json!({
        "model": key.to_string(),
        "dSquared": report_json(&dsq),
        "chainMaps": maps,
    });
    Ok((dsq.is_ok() && maps_ok, v, Some(summary)))
}

fn cohomology(cfg: &CliConfig) -> Result<Value> {
    let key = cfg.key()?;
    let entry = build(&key, cfg.gr2_dz_sign)?;
    let w = cfg.window_or(2 * key.n as i64 + 2)?;
    let table = match &entry.ideal_generator {
        Some(g) => betti_numbers(&IdealPlusUnit::new(&entry.algebra, g)?, w)?,
        None => betti_numbers(&entry.algebra, w)?,
    };
    Ok(json!({"model": key.to_string(), "cohomology": table.to_json()}))
}

/// Component of the section-space model at degree `d`, built from the
/// Thom-space model, next to the closed form it should equal.
fn sections(cfg: &CliConfig) -> Result<Value> {
    let (n, d) = (cfg.n()?, cfg.d()?);
    let rm = thom_complex_models(n)?.rel;
    let coalg = dualize(rm.base(), k_window(&rm)?)?;
    let s = brown_szczarba(&rm, &coalg, cfg.sign_convention, Materialize::KQuotient)?;
    let eps = Augmentation::solve(&s, [("u(x)beta_1".to_string(), rat(d))])?;
    let comp = component_model(&s, &eps)?;
    let augmentation: serde_json::Map<String, Value> =
        eps.values.iter().map(|(k, v)| (k.clone(), json!(fmt_rational(v)))).collect();
    let closed = cdga_to_json(&sections_closed_form(n, d)?);
    let comp = cdga_to_json(&comp);
    Ok(json!({
        "n": n,
        "d": d,
        "signConvention": cfg.sign_convention.as_str(),
        "augmentation": augmentation,
        "matchesClosedForm": comp == closed,
        "component": comp,
    }))
}

fn orbit(cfg: &CliConfig) -> Result<(bool, Value, Option<String>)> {
    let (n, d) = (cfg.n()?, cfg.d()?);
    let psi = orbit_map(n, d)?;
    let rep = is_quasi_iso(&psi, cfg.window_or(2 * n as i64 + 2)?)?;
    let trivial = rep.degrees.iter().all(|g| g.degree == 0 || g.induced_rank == 0);
    let decision = orbit_iso_decision(n, d)?;
    let coefficients: Vec<String> = (0..=n).map(|k| orbit_coefficient(n, d, k).to_string()).collect();
    let summary = if trivial {
        format!("orbit map is trivial on rational cohomology (d={d})")
    } else if decision.iso {
        format!("orbit map is a rational equivalence onto the projective unitary group (d={d})")
    } else {
        format!("orbit map is neither trivial nor an equivalence (d={d})")
    };
    let v = json!({
        "n": n,
        "d": d,
        "coefficients": coefficients,
        "trivialOnCohomology": trivial,
        "iso": decision.iso,
        "kernelDegrees": decision.kernel_degrees,
    });
    Ok((true, v, Some(summary)))
}

fn verify(cfg: &CliConfig) -> Result<Outcome> {
    if cfg.n_max < 2 {
        return Err(Error::Parameter("--n-max must be at least 2".into()));
    }
    let vc = VerifyConfig {
        n_max: cfg.n_max,
        convention: cfg.sign_convention,
        dz: cfg.gr2_dz_sign,
    };
    let outcomes = verify_all_with_determinism(&vc);
    let ok = outcomes.iter().all(|o| o.pass);
    let stdout = match cfg.format {
        Format::Text => render_log(&outcomes),
        Format::Json => {
            let v: Vec<Value> = outcomes.iter().map(|o| o.to_json()).collect();
            pretty(&Value::Array(v))
        }
    };
    Ok(Outcome {
        code: if ok { EXIT_OK } else { EXIT_CHECK },
        stdout,
    })
}

fn pretty(v: &Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("values serialize"))
}

/// `path = value` lines; arrays of scalars stay on one line.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    walk(v, "", &mut out);
    out
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn walk(v: &Value, path: &str, out: &mut String) {
    let join = |k: &str| if path.is_empty() { k.to_string() } else { format!("{path}.{k}") };
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                walk(x, &join(k), out);
            }
        }
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let items: Vec<String> = a.iter().map(scalar).collect();
            writeln!(out, "{path} = [{}]", items.join(", ")).expect("string write");
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                walk(x, &format!("{path}[{i}]"), out);
            }
        }
        _ => writeln!(out, "{path} = {}", scalar(v)).expect("string write"),
    }
}
