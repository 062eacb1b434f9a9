//! Library core of the command-line driver.
//!
//! A validated [`RunConfig`] is executed into a [`Report`]: a deterministic
//! serialized body (JSON or CSV) plus the process exit code. Rationals are
//! serialized as exact "p/q" strings, integers as decimal strings, so
//! re-running an identical configuration yields byte-identical output.
//!
//! Exit codes: 0 all checks hold (skips allowed), 2 at least one check
//! fails, 1 configuration or computation error (surfaced as `Err`).

use anyhow::{anyhow, bail, Context, Result};
use jetbound::bounds::{
    certify_inequalities, check_hypotheses, composition_checks, degree_bound_constants,
    fujiwara_integer_bound, lambda_tilde, lambda_tilde_envelope, reference_delta, Check,
    CheckStatus, Relation,
};
use jetbound::combinatorics::WeightVector;
use jetbound::integrand::{default_policy, Parameters};
use jetbound::intersection::{
    compute_i_budgeted, compute_i_tilde, compute_i_with_policy, envelope_polynomial,
    IntersectionPolynomial,
};
use jetbound::rootfind::{minimal_positive_degree, UniPoly};
use jetbound::series::TruncationPolicy;
pub use jetbound::{Int, Rat};
use serde_json::{json, Map, Value};
use std::io::Write;
use std::path::{Path, PathBuf};

pub const DEFAULT_BUDGET: usize = 100_000;
pub const BUDGET_ENV: &str = "JETBOUND_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    /// Full polynomial, its positivity threshold and integer root bound.
    Polynomial,
    /// Closed-form simplified coefficients and their envelope threshold.
    Tilde,
    /// Full polynomial compared against the headline degree constants.
    Bound,
    /// Hypothesis checks plus the complete inequality certification suite.
    Verify,
    /// Verify-style summary rows over a range of n.
    Sweep,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightSpec {
    /// a_i = n^(n-i), defined for kappa = n.
    Geometric,
    Explicit(Vec<Int>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeltaSpec {
    /// 1 / (35 n^n).
    Reference,
    Exact(Rat),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: CommandKind,
    pub n: usize,
    /// Inclusive upper end of the sweep range; sweep only.
    pub n_to: Option<usize>,
    pub kappa: Option<usize>,
    pub weights: WeightSpec,
    pub delta: DeltaSpec,
    pub budget: usize,
    /// Overrides for the t-variable truncation window; widening only.
    pub t_lo: Option<i32>,
    pub t_hi: Option<i32>,
    pub length_cap: Option<i64>,
    pub output: OutputFormat,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(command: CommandKind, n: usize) -> RunConfig {
        RunConfig {
            command,
            n,
            n_to: None,
            kappa: None,
            weights: WeightSpec::Geometric,
            delta: DeltaSpec::Reference,
            budget: DEFAULT_BUDGET,
            t_lo: None,
            t_hi: None,
            length_cap: None,
            output: OutputFormat::Json,
            out: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub body: String,
    pub exit_code: i32,
}

pub fn parse_weights(s: &str) -> Result<WeightSpec> {
    if s == "geometric" {
        return Ok(WeightSpec::Geometric);
    }
    let entries = s
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<Int>()
                .map_err(|_| anyhow!("invalid weight entry {part:?}"))
        })
        .collect::<Result<Vec<Int>>>()?;
    Ok(WeightSpec::Explicit(entries))
}

pub fn parse_delta(s: &str) -> Result<DeltaSpec> {
    if s == "reference" {
        return Ok(DeltaSpec::Reference);
    }
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (
            p.trim()
                .parse::<Int>()
                .map_err(|_| anyhow!("invalid numerator in delta {s:?}"))?,
            q.trim()
                .parse::<Int>()
                .map_err(|_| anyhow!("invalid denominator in delta {s:?}"))?,
        ),
        None => (
            s.trim()
                .parse::<Int>()
                .map_err(|_| anyhow!("invalid delta {s:?}"))?,
            Int::from(1),
        ),
    };
    if den == Int::from(0) {
        bail!("delta denominator is zero");
    }
    Ok(DeltaSpec::Exact(Rat::new(num, den)))
}

pub fn parse_output(s: &str) -> Result<OutputFormat> {
    match s {
        "json" => Ok(OutputFormat::Json),
        "csv" => Ok(OutputFormat::Csv),
        other => bail!("unknown output format {other:?} (expected json or csv)"),
    }
}

/// a_i = n^(n-i) for i = 1..n.
pub fn geometric_weights(n: usize) -> Vec<Int> {
    (0..n)
        .map(|i| num_traits::pow::pow(Int::from(n), n - 1 - i))
        .collect()
}

fn build_parameters(config: &RunConfig, n: usize) -> Result<Parameters> {
    let entries = match &config.weights {
        WeightSpec::Geometric => {
            let kappa = config.kappa.unwrap_or(n);
            if kappa != n {
                bail!("geometric weights are defined for kappa = n, got kappa = {kappa}");
            }
            geometric_weights(n)
        }
        WeightSpec::Explicit(entries) => {
            if let Some(kappa) = config.kappa {
                if kappa != entries.len() {
                    bail!(
                        "kappa = {kappa} does not match the {} explicit weights",
                        entries.len()
                    );
                }
            }
            entries.clone()
        }
    };
    let kappa = entries.len();
    let delta = match &config.delta {
        DeltaSpec::Reference => reference_delta(n),
        DeltaSpec::Exact(d) => d.clone(),
    };
    let weights = WeightVector::new(entries).context("invalid weights")?;
    Parameters::new(n, kappa, weights, delta).context("invalid parameters")
}

/// Full polynomial under either the budget gate or explicit window
/// overrides (which are validated to contain the proven-sufficient
/// defaults and bypass the budget).
fn compute_full(params: &Parameters, config: &RunConfig) -> Result<IntersectionPolynomial> {
    if config.t_lo.is_none() && config.t_hi.is_none() && config.length_cap.is_none() {
        return Ok(compute_i_budgeted(params, config.budget)?);
    }
    let base = default_policy(params);
    let mut windows: Vec<(i32, i32)> = (0..params.arity()).map(|v| base.window(v)).collect();
    for w in windows.iter_mut().skip(2) {
        if let Some(lo) = config.t_lo {
            w.0 = lo;
        }
        if let Some(hi) = config.t_hi {
            w.1 = hi;
        }
    }
    let (cap_weights, cap) = base
        .weighted_cap()
        .expect("default policy always carries a length cap");
    let policy = TruncationPolicy::new(windows)?
        .with_weighted_cap(cap_weights.to_vec(), config.length_cap.unwrap_or(cap))?;
    Ok(compute_i_with_policy(params, &policy, Some(config.budget))?)
}

struct ReportData {
    params: Parameters,
    polynomial: Option<IntersectionPolynomial>,
    tilde: Vec<Rat>,
    lambda: Rat,
    d0: Int,
    fujiwara: Int,
    checks: Vec<Check>,
}

fn run_single(config: &RunConfig) -> Result<ReportData> {
    let params = build_parameters(config, config.n)?;
    if config.command != CommandKind::Polynomial
        && config.command != CommandKind::Bound
        && (config.t_lo.is_some() || config.t_hi.is_some() || config.length_cap.is_some())
    {
        bail!("window overrides apply only to the polynomial and bound commands");
    }
    let tilde = compute_i_tilde(&params)?;
    let lambda = lambda_tilde(&params);
    let envelope = envelope_polynomial(&tilde);
    let mut data = ReportData {
        params,
        polynomial: None,
        tilde,
        lambda,
        d0: Int::from(0),
        fujiwara: Int::from(0),
        checks: Vec::new(),
    };
    match config.command {
        CommandKind::Tilde | CommandKind::Verify => {
            data.d0 = minimal_positive_degree(&UniPoly::from_ascending(envelope.to_ascending()))?;
            data.fujiwara = fujiwara_integer_bound(&envelope)?;
        }
        CommandKind::Polynomial | CommandKind::Bound => {
            let full = compute_full(&data.params, config)?;
            data.d0 = minimal_positive_degree(&UniPoly::from_ascending(full.to_ascending()))?;
            data.fujiwara = fujiwara_integer_bound(&full)?;
            data.polynomial = Some(full);
        }
        CommandKind::Sweep => unreachable!("sweep is dispatched separately"),
    }
    match config.command {
        CommandKind::Bound => {
            let constants = degree_bound_constants(config.n);
            let d0 = Rat::from_integer(data.d0.clone());
            data.checks.push(Check::evaluated(
                "threshold-within-small-n-constant",
                d0.clone(),
                Relation::Le,
                Rat::from_integer(constants.small_n),
            ));
            data.checks.push(Check::evaluated(
                "threshold-within-main-constant",
                d0,
                Relation::Le,
                Rat::from_integer(constants.main),
            ));
        }
        CommandKind::Verify => {
            data.checks = verification_checks(&data.params, config.budget);
        }
        _ => {}
    }
    Ok(data)
}

/// The full deterministic check sequence behind `verify` and `sweep`.
fn verification_checks(params: &Parameters, budget: usize) -> Vec<Check> {
    let mut report = check_hypotheses(params).merged(lambda_tilde_envelope(params));
    if params.n() >= 2 {
        report = report.merged(composition_checks(params.n()));
    }
    report = report.merged(certify_inequalities(params, budget));
    report.checks().to_vec()
}

struct SweepRow {
    n: usize,
    lambda: Rat,
    d0: Int,
    holds: usize,
    fails: usize,
    skipped: usize,
}

fn run_sweep(config: &RunConfig) -> Result<Vec<SweepRow>> {
    let n_to = config.n_to.unwrap_or(config.n);
    if n_to < config.n {
        bail!("sweep range is empty: n-from {} > n-to {n_to}", config.n);
    }
    if !matches!(config.weights, WeightSpec::Geometric) {
        bail!("sweep varies n, so it requires geometric weights");
    }
    let results: Vec<Result<SweepRow>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (config.n..=n_to)
            .map(|n| {
                scope.spawn(move || -> Result<SweepRow> {
                    let mut row_config = config.clone();
                    row_config.n = n;
                    let params = build_parameters(&row_config, n)?;
                    let tilde = compute_i_tilde(&params)?;
                    let envelope = envelope_polynomial(&tilde);
                    let d0 =
                        minimal_positive_degree(&UniPoly::from_ascending(envelope.to_ascending()))?;
                    let checks = verification_checks(&params, config.budget);
                    let mut holds = 0;
                    let mut fails = 0;
                    let mut skipped = 0;
                    for c in &checks {
                        match c.status {
                            CheckStatus::Holds => holds += 1,
                            CheckStatus::Fails => fails += 1,
                            CheckStatus::Skipped(_) => skipped += 1,
                        }
                    }
                    Ok(SweepRow {
                        n,
                        lambda: lambda_tilde(&params),
                        d0,
                        holds,
                        fails,
                        skipped,
                    })
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("sweep worker panicked"))
            .collect()
    });
    results.into_iter().collect()
}

fn check_json(check: &Check) -> Value {
    match &check.status {
        CheckStatus::Skipped(reason) => json!({
            "name": check.name,
            "rel": check.relation.symbol(),
            "skipped": reason,
        }),
        status => json!({
            "name": check.name,
            "lhs": check.lhs.as_ref().map(Rat::to_string),
            "rel": check.relation.symbol(),
            "rhs": check.rhs.as_ref().map(Rat::to_string),
            "holds": *status == CheckStatus::Holds,
        }),
    }
}

fn rat_strings(values: &[Rat]) -> Vec<String> {
    values.iter().map(Rat::to_string).collect()
}

fn single_json(data: &ReportData) -> String {
    let mut root = Map::new();
    root.insert(
        "params".to_string(),
        json!({
            "n": data.params.n(),
            "kappa": data.params.kappa(),
            "a": data.params.weights().entries().iter().map(Int::to_string).collect::<Vec<_>>(),
            "delta": data.params.delta().to_string(),
        }),
    );
    if let Some(full) = &data.polynomial {
        root.insert(
            "polynomial".to_string(),
            json!({ "c": rat_strings(full.coefficients()) }),
        );
    }
    root.insert(
        "tilde".to_string(),
        json!({
            "c": rat_strings(&data.tilde),
            "lambda": data.lambda.to_string(),
        }),
    );
    root.insert("d0".to_string(), json!(data.d0.to_string()));
    root.insert("fujiwara".to_string(), json!(data.fujiwara.to_string()));
    root.insert(
        "checks".to_string(),
        Value::Array(data.checks.iter().map(check_json).collect()),
    );
    let mut body = serde_json::to_string_pretty(&Value::Object(root)).expect("static schema");
    body.push('\n');
    body
}

fn status_text(status: &CheckStatus) -> String {
    match status {
        CheckStatus::Holds => "holds".to_string(),
        CheckStatus::Fails => "fails".to_string(),
        CheckStatus::Skipped(reason) => format!("skipped: {reason}"),
    }
}

fn single_csv(data: &ReportData) -> String {
    let mut body = String::from("field,value\n");
    let join = |values: &[String]| values.join(";");
    body.push_str(&format!("n,{}\n", data.params.n()));
    body.push_str(&format!("kappa,{}\n", data.params.kappa()));
    let a: Vec<String> = data
        .params
        .weights()
        .entries()
        .iter()
        .map(Int::to_string)
        .collect();
    body.push_str(&format!("a,{}\n", join(&a)));
    body.push_str(&format!("delta,{}\n", data.params.delta()));
    if let Some(full) = &data.polynomial {
        body.push_str(&format!("polynomial.c,{}\n", join(&rat_strings(full.coefficients()))));
    }
    body.push_str(&format!("tilde.c,{}\n", join(&rat_strings(&data.tilde))));
    body.push_str(&format!("tilde.lambda,{}\n", data.lambda));
    body.push_str(&format!("d0,{}\n", data.d0));
    body.push_str(&format!("fujiwara,{}\n", data.fujiwara));
    if !data.checks.is_empty() {
        body.push_str("check,lhs,rel,rhs,status\n");
        for c in &data.checks {
            let lhs = c.lhs.as_ref().map(Rat::to_string).unwrap_or_default();
            let rhs = c.rhs.as_ref().map(Rat::to_string).unwrap_or_default();
            body.push_str(&format!(
                "{},{},{},{},{}\n",
                c.name,
                lhs,
                c.relation.symbol(),
                rhs,
                status_text(&c.status)
            ));
        }
    }
    body
}

fn sweep_json(rows: &[SweepRow]) -> String {
    let items: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "n": r.n,
                "lambda": r.lambda.to_string(),
                "d0": r.d0.to_string(),
                "holds": r.holds,
                "fails": r.fails,
                "skipped": r.skipped,
            })
        })
        .collect();
    let mut body =
        serde_json::to_string_pretty(&json!({ "sweep": items })).expect("static schema");
    body.push('\n');
    body
}

fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut body = String::from("n,lambda,d0,holds,fails,skipped\n");
    for r in rows {
        body.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.n, r.lambda, r.d0, r.holds, r.fails, r.skipped
        ));
    }
    body
}

pub fn execute(config: &RunConfig) -> Result<Report> {
    match config.command {
        CommandKind::Sweep => {
            let rows = run_sweep(config)?;
            let body = match config.output {
                OutputFormat::Json => sweep_json(&rows),
                OutputFormat::Csv => sweep_csv(&rows),
            };
            let exit_code = if rows.iter().any(|r| r.fails > 0) { 2 } else { 0 };
            Ok(Report { body, exit_code })
        }
        _ => {
            let data = run_single(config)?;
            let body = match config.output {
                OutputFormat::Json => single_json(&data),
                OutputFormat::Csv => single_csv(&data),
            };
            let exit_code = if data
                .checks
                .iter()
                .any(|c| c.status == CheckStatus::Fails)
            {
                2
            } else {
                0
            };
            Ok(Report { body, exit_code })
        }
    }
}

/// Writes the body to the path when given, to the writer otherwise.
pub fn emit(report: &Report, out: Option<&Path>, writer: &mut dyn Write) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, &report.body),
        None => writer.write_all(report.body.as_bytes()),
    }
}
