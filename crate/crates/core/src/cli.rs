//! Batch front-end: a validated run configuration, one analysis per
//! invocation, deterministic JSON/CSV reports.
//!
//! Exit status: 0 when every asserted check passes, 1 when a check fails
//! (the failing witness is in the report), 2 for invalid specs or configs.
//! Rationals cross this boundary as strings only; floats appear only in
//! asymptotics output.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::analysis::{
    default_pencil_samples, interlaces_certified, pencil_threshold_appell, sign_counts_check,
    threshold_appell, turan_check, TuranInput,
};
use crate::asymptotics::{
    appell_scaling, central_zero_check, combination_mehler_heine, edge_zero_check, mehler_heine,
    nonreal_zero_check, semicircle_statistic, LimitCheck, MehlerParity, TestFunction,
};
use crate::error::{Error, Result};
use crate::generalized::{gen_hermite, multiple_hermite, MultiIndexSpec, SequencePair};
use crate::hermite::{combination, CombinationSpec, Normalization};
use crate::poly::RationalPoly;
use crate::rational::{parse_rational_list, Rational};
use crate::roots::isolate::refine_with_chain;
use crate::roots::{analyze, SturmChain, ZeroReport};
use crate::selftest;

/// Environment variable overriding the default refinement precision.
pub const PRECISION_ENV: &str = "HERMITE_ZEROS_PRECISION_BITS";

const SCHEMA_VERSION: u32 = 1;

/// Exit status of a run.
pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CommandKind {
    Build,
    Roots,
    Interlace,
    Turan,
    Threshold,
    Pencil,
    Signs,
    Asymptotics,
    Conjecture,
    Selftest,
}

impl CommandKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            CommandKind::Build => "build",
            CommandKind::Roots => "roots",
            CommandKind::Interlace => "interlace",
            CommandKind::Turan => "turan",
            CommandKind::Threshold => "threshold",
            CommandKind::Pencil => "pencil",
            CommandKind::Signs => "signs",
            CommandKind::Asymptotics => "asymptotics",
            CommandKind::Conjecture => "conjecture",
            CommandKind::Selftest => "selftest",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

/// Full run configuration; also the schema of the `--config` JSON document.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: CommandKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normalization: Option<Normalization>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multi_n: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multi_c: Option<Vec<String>>,
    /// Canonical multi-index document {"n": [...], "c": [...]}; takes
    /// precedence over the flat multi_n/multi_c flags.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multi: Option<MultiIndexSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_min: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_max: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ceiling: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub thetas: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub check: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parity: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_grid: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
    #[serde(default)]
    pub format: OutputFormat,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub precision_bits: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
}

impl RunConfig {
    pub fn new(command: CommandKind) -> Self {
        RunConfig {
            command,
            gamma: None,
            normalization: None,
            phi: None,
            psi: None,
            multi_n: None,
            multi_c: None,
            multi: None,
            n: None,
            n_min: None,
            n_max: None,
            ceiling: None,
            thetas: None,
            check: None,
            x: None,
            z: None,
            j: None,
            f: None,
            parity: None,
            n_grid: None,
            output: None,
            format: OutputFormat::Json,
            precision_bits: None,
            tolerance: None,
        }
    }

    pub fn from_json_file(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Ok(serde_json::from_str(&text)?)
    }

    fn precision(&self) -> u32 {
        self.precision_bits
            .or_else(|| {
                std::env::var(PRECISION_ENV)
                    .ok()
                    .and_then(|v| v.parse().ok())
            })
            .unwrap_or(53)
    }

    fn spec(&self) -> Result<CombinationSpec> {
        let gamma = self
            .gamma
            .as_ref()
            .ok_or_else(|| Error::InvalidSpec("missing gamma".to_string()))?;
        CombinationSpec::new(parse_rational_list(gamma)?)
    }

    fn normalization_or(&self, default: Normalization) -> Normalization {
        self.normalization.unwrap_or(default)
    }

    fn sequence_pair(&self) -> Result<SequencePair> {
        let phi = parse_rational_list(
            self.phi
                .as_ref()
                .ok_or_else(|| Error::InvalidSpec("missing phi".to_string()))?,
        )?;
        let psi = match &self.psi {
            Some(psi) => parse_rational_list(psi)?,
            None => vec![Rational::from_integer(0.into()); phi.len()],
        };
        SequencePair::new(phi, psi)
    }

    fn multi_index(&self) -> Result<MultiIndexSpec> {
        if let Some(spec) = &self.multi {
            return Ok(spec.clone());
        }
        let n_vec = self
            .multi_n
            .clone()
            .ok_or_else(|| Error::InvalidSpec("missing multi-index".to_string()))?;
        let c_vec = parse_rational_list(
            self.multi_c
                .as_ref()
                .ok_or_else(|| Error::InvalidSpec("missing multi-index parameters".to_string()))?,
        )?;
        MultiIndexSpec::new(n_vec, c_vec)
    }

    fn require_n(&self) -> Result<usize> {
        self.n
            .ok_or_else(|| Error::InvalidSpec("missing n".to_string()))
    }

    fn range(&self) -> Result<std::ops::RangeInclusive<usize>> {
        let max = self
            .n_max
            .or(self.ceiling)
            .ok_or_else(|| Error::InvalidSpec("missing n_max".to_string()))?;
        Ok(self.n_min.unwrap_or(0)..=max)
    }

    /// Echo of all provided inputs, embedded in every report.
    fn inputs_json(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("config serializes");
        if let Value::Object(map) = &mut v {
            map.remove("output");
            map.remove("format");
        }
        v
    }
}

struct Report {
    body: Value,
    exit: i32,
    csv: Option<String>,
}

fn report(config: &RunConfig, holds: Option<bool>, results: Value) -> Report {
    let exit = match holds {
        Some(false) => EXIT_CHECK_FAILED,
        _ => EXIT_OK,
    };
    let mut body = json!({
        "schema_version": SCHEMA_VERSION,
        "library_version": crate::version(),
        "command": config.command.as_str(),
        "inputs": config.inputs_json(),
        "results": results,
    });
    if let Some(h) = holds {
        body["holds"] = json!(h);
    }
    Report {
        body,
        exit,
        csv: None,
    }
}

fn zero_report_json(report: &ZeroReport) -> Value {
    serde_json::to_value(report).expect("report serializes")
}

/// Execute one configured analysis, writing the report to the configured
/// output (stdout by default). Returns the process exit status.
pub fn run(config: &RunConfig) -> Result<i32> {
    let report = match config.command {
        CommandKind::Build => run_build(config)?,
        CommandKind::Roots => run_roots(config)?,
        CommandKind::Interlace => run_interlace(config)?,
        CommandKind::Turan => run_turan(config)?,
        CommandKind::Threshold => run_threshold(config)?,
        CommandKind::Pencil => run_pencil(config)?,
        CommandKind::Signs => run_signs(config, false)?,
        CommandKind::Conjecture => run_signs(config, true)?,
        CommandKind::Asymptotics => run_asymptotics(config)?,
        CommandKind::Selftest => return run_selftest(config),
    };
    let text = match (config.format, &report.csv) {
        (OutputFormat::Csv, Some(csv)) => csv.clone(),
        (OutputFormat::Csv, None) => {
            return Err(Error::InvalidSpec(format!(
                "csv output is not defined for the {} command",
                config.command.as_str()
            )))
        }
        (OutputFormat::Json, _) => {
            let mut s = serde_json::to_string_pretty(&report.body)?;
            s.push('\n');
            s
        }
    };
    match &config.output {
        Some(path) => std::fs::write(path, text)?,
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
        }
    }
    Ok(report.exit)
}

/// The polynomial a family-selecting config points at.
fn resolve_member(config: &RunConfig, n: usize) -> Result<(RationalPoly, Value)> {
    if config.gamma.is_some() {
        let spec = config.spec()?;
        let norm = config.normalization_or(Normalization::Appell);
        let poly = combination(&spec, norm, n)?;
        Ok((poly, json!({"family": "combination", "normalization": norm})))
    } else if config.phi.is_some() {
        let seq = config.sequence_pair()?;
        Ok((gen_hermite(&seq, n), json!({"family": "generalized"})))
    } else {
        Err(Error::InvalidSpec(
            "provide gamma, or phi (and optionally psi)".to_string(),
        ))
    }
}

fn run_build(config: &RunConfig) -> Result<Report> {
    let (poly, meta) = if config.multi.is_some() || config.multi_n.is_some() {
        let spec = config.multi_index()?;
        (
            multiple_hermite(&spec),
            json!({"family": "multiple", "total_degree": spec.total()}),
        )
    } else {
        let n = config.require_n()?;
        resolve_member(config, n)?
    };
    let results = json!({
        "meta": meta,
        "degree": poly.degree(),
        "leading": poly.leading().map(crate::rational::format_rational),
        "coefficients": serde_json::to_value(&poly)?,
        "display": poly.to_string(),
    });
    Ok(report(config, None, results))
}

fn run_roots(config: &RunConfig) -> Result<Report> {
    let n = config.require_n()?;
    let (poly, meta) = resolve_member(config, n)?;
    let mut zr = analyze(&poly)?;
    // refine the isolating intervals to the requested precision
    let chain = SturmChain::new(&poly)?;
    zr.real_intervals = zr
        .real_intervals
        .iter()
        .map(|iv| refine_with_chain(&chain, iv, config.precision()))
        .collect();
    let results = json!({
        "meta": meta,
        "zero_report": zero_report_json(&zr),
    });
    Ok(report(config, None, results))
}

fn run_interlace(config: &RunConfig) -> Result<Report> {
    let n = config.require_n()?;
    if n == 0 {
        return Err(Error::InvalidSpec("interlace needs n >= 1".to_string()));
    }
    let (pn, meta) = resolve_member(config, n)?;
    let (pprev, _) = resolve_member(config, n - 1)?;
    let verdict = interlaces_certified(&pn, &pprev)?;
    let holds = verdict.holds;
    let results = json!({
        "meta": meta,
        "pair": [n, n - 1],
        "verdict": serde_json::to_value(&verdict)?,
    });
    Ok(report(config, Some(holds), results))
}

fn run_turan(config: &RunConfig) -> Result<Report> {
    let n = config.require_n()?;
    let (result, meta) = if config.gamma.is_some() {
        let spec = config.spec()?;
        let norm = config.normalization_or(Normalization::Appell);
        (
            turan_check(
                &TuranInput::Combination {
                    spec: &spec,
                    normalization: norm,
                },
                n,
            )?,
            json!({"family": "combination", "normalization": norm}),
        )
    } else {
        let seq = config.sequence_pair()?;
        (
            turan_check(&TuranInput::Generalized(&seq), n)?,
            json!({"family": "generalized"}),
        )
    };
    let holds = result.holds;
    let results = json!({
        "meta": meta,
        "turan": serde_json::to_value(&result)?,
    });
    Ok(report(config, Some(holds), results))
}

fn run_threshold(config: &RunConfig) -> Result<Report> {
    let spec = config.spec()?;
    let ceiling = config
        .ceiling
        .ok_or_else(|| Error::InvalidSpec("missing ceiling".to_string()))?;
    let result = threshold_appell(&spec, ceiling)?;
    let per_n: BTreeMap<usize, Value> = result
        .per_n_reports
        .iter()
        .map(|(n, zr)| {
            (
                *n,
                json!({
                    "n_real": zr.n_real,
                    "n_nonreal": zr.n_nonreal,
                    "all_simple": zr.all_simple,
                }),
            )
        })
        .collect();
    let holds = result.holds;
    let csv = {
        let mut s = String::from("n,n_real,n_nonreal\n");
        for (n, zr) in &result.per_n_reports {
            s.push_str(&format!("{n},{},{}\n", zr.n_real, zr.n_nonreal));
        }
        Some(s)
    };
    let results = json!({
        "n0": result.n0,
        "nonreal_count": result.nonreal_count,
        "witness": result.witness,
        "per_n": per_n,
    });
    let mut rep = report(config, Some(holds), results);
    rep.csv = csv;
    Ok(rep)
}

fn run_pencil(config: &RunConfig) -> Result<Report> {
    let spec = config.spec()?;
    let ceiling = config
        .ceiling
        .ok_or_else(|| Error::InvalidSpec("missing ceiling".to_string()))?;
    let thetas = match &config.thetas {
        Some(items) => parse_rational_list(items)?,
        None => default_pencil_samples(),
    };
    let result = pencil_threshold_appell(&spec, &thetas, ceiling)?;
    let holds = result.holds;
    let per_theta: Vec<Value> = result
        .per_theta
        .iter()
        .map(|(theta, tr)| {
            json!({
                "theta": theta,
                "n0": tr.n0,
                "holds": tr.holds,
            })
        })
        .collect();
    let results = json!({
        "n_star": result.n_star,
        "nonreal_count": result.nonreal_count,
        "witness": result.witness,
        "per_theta": per_theta,
    });
    Ok(report(config, Some(holds), results))
}

fn run_signs(config: &RunConfig, conjecture: bool) -> Result<Report> {
    let spec = config.spec()?;
    if conjecture {
        let p = spec.coefficient_poly();
        if crate::roots::real_zero_count(&p)? != 0 {
            return Err(Error::InvalidSpec(
                "conjecture probe requires P with no real zeros".to_string(),
            ));
        }
    }
    let range = config.range()?;
    let result = sign_counts_check(&spec, range)?;
    let per_n: BTreeMap<usize, Value> = result
        .per_n
        .iter()
        .map(|(n, e)| (*n, serde_json::to_value(e).expect("entry serializes")))
        .collect();
    // the conjecture probe is evidence, never a failure; the law check is a
    // gate once agreement has begun
    let holds = if conjecture {
        None
    } else {
        Some(result.onset.is_some())
    };
    let results = json!({
        "order": result.order,
        "p_negative": result.p_negative,
        "p_nonreal": result.p_nonreal,
        "onset": result.onset,
        "per_n": per_n,
        "evidence_only": conjecture,
    });
    Ok(report(config, holds, results))
}

fn parse_complex(s: &str) -> Result<Complex64> {
    let parts: Vec<&str> = s.split(',').collect();
    let parse = |t: &str| -> Result<f64> {
        t.trim()
            .parse()
            .map_err(|_| Error::Parse(format!("invalid complex component {t:?}")))
    };
    match parts.as_slice() {
        [re] => Ok(Complex64::new(parse(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(parse(re)?, parse(im)?)),
        _ => Err(Error::Parse(format!("invalid complex number {s:?}"))),
    }
}

fn run_asymptotics(config: &RunConfig) -> Result<Report> {
    let check = config
        .check
        .as_deref()
        .ok_or_else(|| Error::InvalidSpec("missing asymptotics check name".to_string()))?;
    let grid: Vec<usize> = match (&config.n_grid, config.n) {
        (Some(grid), _) => grid.clone(),
        (None, Some(n)) => vec![n],
        (None, None) => return Err(Error::InvalidSpec("missing n or n_grid".to_string())),
    };
    let mut checks: Vec<LimitCheck> = Vec::new();
    for &n in &grid {
        match check {
            "mehler" => {
                let x = config.x.unwrap_or(0.0);
                let parity = match config.parity.as_deref() {
                    None | Some("even") => MehlerParity::Even,
                    Some("odd") => MehlerParity::Odd,
                    Some(other) => {
                        return Err(Error::Parse(format!("unknown parity {other:?}")))
                    }
                };
                checks.push(mehler_heine(n, x, parity));
            }
            "combination-mehler" => {
                let spec = config.spec()?;
                checks.push(combination_mehler_heine(&spec, n, config.x.unwrap_or(0.0))?);
            }
            "scaling" => {
                let spec = config.spec()?;
                let z = match &config.z {
                    Some(s) => parse_complex(s)?,
                    None => Complex64::new(1.0, 0.0),
                };
                checks.push(appell_scaling(&spec, n, z)?);
            }
            "central" => {
                let spec = config.spec()?;
                checks.push(central_zero_check(&spec, n, config.j.unwrap_or(0))?);
            }
            "edge" => {
                let spec = config.spec()?;
                checks.extend(edge_zero_check(&spec, n)?);
            }
            "nonreal" => {
                let spec = config.spec()?;
                checks.extend(nonreal_zero_check(&spec, n)?);
            }
            "semicircle" => {
                let spec = config.spec()?;
                let f = TestFunction::parse(config.f.as_deref().unwrap_or("x^2"))?;
                checks.push(semicircle_statistic(&spec, n, &f, config.tolerance)?);
            }
            other => {
                return Err(Error::InvalidSpec(format!(
                    "unknown asymptotics check {other:?}"
                )))
            }
        }
    }
    if let Some(tol) = config.tolerance {
        for c in &mut checks {
            c.tolerance = tol;
            c.passes = c.abs_error <= tol;
        }
    }
    let holds = checks.iter().all(|c| c.passes);
    let mut csv = String::from("n,observed,target,abs_error\n");
    for c in &checks {
        csv.push_str(&c.csv_row());
        csv.push('\n');
    }
    let results = json!({
        "check": check,
        "checks": serde_json::to_value(&checks)?,
    });
    let mut rep = report(config, Some(holds), results);
    rep.csv = Some(csv);
    Ok(rep)
}

fn run_selftest(config: &RunConfig) -> Result<i32> {
    let outcomes = selftest::run_all();
    let mut lines = String::new();
    for outcome in &outcomes {
        lines.push_str(&outcome.summary_line());
        lines.push('\n');
        for d in &outcome.details {
            lines.push_str(&format!("    {d}\n"));
        }
        for d in &outcome.informational {
            lines.push_str(&format!("    note: {d}\n"));
        }
    }
    let all_passed = outcomes.iter().all(|o| o.passed);
    lines.push_str(if all_passed {
        "all criteria passed\n"
    } else {
        "SUITE FAILED\n"
    });
    match &config.output {
        Some(path) => std::fs::write(path, &lines)?,
        None => std::io::stdout().write_all(lines.as_bytes())?,
    }
    Ok(if all_passed { EXIT_OK } else { EXIT_CHECK_FAILED })
}

/// Map an error to the process exit status: anything that indicates a bad
/// spec or bad usage is 2.
pub fn exit_code_for_error(_err: &Error) -> i32 {
    EXIT_INVALID
}
