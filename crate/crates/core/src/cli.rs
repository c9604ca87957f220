//! Command-line front end. Every subcommand builds a [`Report`] with a
//! verdict; reports render as line-oriented text or as JSON with sorted keys.

use std::ffi::OsString;
use std::fmt;

use clap::{Parser, Subcommand as ClapSubcommand};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::construct::{default_samples, verify_construction, ConstructError};
use crate::exactalg::Rational;
use crate::semigroup::{sdn_generators, SemigroupError};
use crate::strata::{enriques_pencil_model, hypersurface_pencil_model, index_and_degree_report};
use crate::witness::{choose_ab_and_certify, witness_parameters, WitnessError};

/// Largest `d` accepted by `hypersurface`: the subset actions have up to
/// `2^d` points in total.
pub const MAX_HYPERSURFACE_D: u64 = 20;
/// Largest `--query` accepted by `semigroup` (the membership table is linear in it).
pub const MAX_QUERY: u64 = 10_000_000;

#[derive(Parser, Debug, Clone, PartialEq)]
#[command(
    name = "pencil-index",
    version,
    about = "Degree and index bounds for multi-sections of degenerate pencils"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Subcommand,
}

#[derive(ClapSubcommand, Debug, Clone, PartialEq, Eq)]
pub enum Subcommand {
    /// Strata and degree semigroup of a pencil of degree-d hypersurfaces in P^n.
    Hypersurface {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        n: u64,
    },
    /// Cube strata of the Enriques pencil: minimal degree and index.
    Enriques,
    /// Membership of an integer in S_{d,n}.
    Semigroup {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        query: u64,
    },
    /// Exact checks of the monomial construction.
    VerifyConstruction {
        /// Comma-separated nonzero rationals, e.g. 1,2,3/2.
        #[arg(long)]
        samples: Option<String>,
    },
    /// Witness parameters n = 4ab, d = n - 1; with --e, a and b are lower bounds.
    Witness {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        e: Option<u64>,
    },
}

impl Subcommand {
    pub fn name(&self) -> &'static str {
        match self {
            Subcommand::Hypersurface { .. } => "hypersurface",
            Subcommand::Enriques => "enriques",
            Subcommand::Semigroup { .. } => "semigroup",
            Subcommand::VerifyConstruction { .. } => "verify-construction",
            Subcommand::Witness { .. } => "witness",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandRequest {
    pub subcommand: Subcommand,
    pub format: OutputFormat,
}

impl CommandRequest {
    /// Parses `argv` (including the program name).
    pub fn parse_from<I, T>(args: I) -> Result<Self, clap::Error>
    where
        I: IntoIterator<Item = T>,
        T: Into<OsString> + Clone,
    {
        let cli = Cli::try_parse_from(args)?;
        Ok(CommandRequest {
            subcommand: cli.command,
            format: if cli.json {
                OutputFormat::Json
            } else {
                OutputFormat::Text
            },
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Verified,
    Refuted,
    Info,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Verified | Verdict::Info => 0,
            Verdict::Refuted => 1,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Verified => "verified",
            Verdict::Refuted => "refuted",
            Verdict::Info => "info",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("invalid value for {flag}: {message}")]
pub struct UsageError {
    pub flag: String,
    pub message: String,
}

impl UsageError {
    fn new(flag: &str, message: impl Into<String>) -> Self {
        UsageError {
            flag: flag.to_string(),
            message: message.into(),
        }
    }
}

pub const USAGE_EXIT_CODE: i32 = 2;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub informational: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub subcommand: String,
    pub inputs: Value,
    pub results: Value,
    pub verdict: Verdict,
    #[serde(skip)]
    pub checks: Vec<CheckLine>,
}

impl Report {
    fn new(subcommand: &str, inputs: Value, results: Value, checks: Vec<CheckLine>, informational: bool) -> Self {
        let verdict = if informational {
            Verdict::Info
        } else if checks.iter().filter(|c| !c.informational).all(|c| c.passed) {
            Verdict::Verified
        } else {
            Verdict::Refuted
        };
        let mut results = results;
        if let Value::Object(map) = &mut results {
            map.insert("checks".into(), serde_json::to_value(&checks).expect("serializable"));
        }
        Report {
            subcommand: subcommand.to_string(),
            inputs,
            results,
            verdict,
            checks,
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.verdict.exit_code()
    }

    /// The JSON document `{subcommand, inputs, results, verdict}`.
    pub fn to_json(&self) -> Value {
        json!({
            "subcommand": self.subcommand,
            "inputs": self.inputs,
            "results": self.results,
            "verdict": self.verdict,
        })
    }
}

fn check(name: &str, passed: bool) -> CheckLine {
    CheckLine {
        name: name.to_string(),
        passed,
        informational: false,
    }
}

fn parse_samples(text: &str) -> Result<Vec<Rational>, UsageError> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<Rational>()
                .map_err(|_| UsageError::new("--samples", format!("{s:?} is not a rational number")))
        })
        .collect()
}

fn hypersurface(d: u64, n: u64) -> Result<Report, UsageError> {
    if d == 0 {
        return Err(UsageError::new("--d", "must be positive"));
    }
    if n == 0 {
        return Err(UsageError::new("--n", "must be positive"));
    }
    if d > MAX_HYPERSURFACE_D {
        return Err(UsageError::new(
            "--d",
            format!("at most {MAX_HYPERSURFACE_D} is supported"),
        ));
    }
    let model = hypersurface_pencil_model(d as usize, n as usize).map_err(|e| UsageError::new("--d", e.to_string()))?;
    let report = index_and_degree_report(&model).expect("model has strata and a realized degree");
    let binomials = sdn_generators(d, n).expect("d <= 20 fits").generators().to_vec();
    let orbit_sizes: Vec<u64> = model.strata().iter().map(|s| s.orbit_size()).collect();
    let strata: Vec<Value> = model
        .strata()
        .iter()
        .map(|s| json!({ "name": s.name(), "orbit_size": s.orbit_size(), "divisor": s.divisor() }))
        .collect();
    let checks = vec![
        check("orbit_sizes_are_binomials", orbit_sizes == binomials),
        check(
            "realized_degree_in_semigroup",
            model.degree_semigroup().is_some_and(|s| s.contains(d)),
        ),
    ];
    Ok(Report::new(
        "hypersurface",
        json!({ "d": d, "n": n }),
        json!({ "strata": strata, "semigroup_generators": binomials, "report": report }),
        checks,
        false,
    ))
}

fn enriques() -> Report {
    let model = enriques_pencil_model().expect("cube strata are transitive");
    let report = index_and_degree_report(&model).expect("model is nonempty");
    let strata: Vec<Value> = model
        .strata()
        .iter()
        .map(|s| json!({ "name": s.name(), "orbit_size": s.orbit_size(), "divisor": s.divisor() }))
        .collect();
    let mut divisors = report.divisors.clone();
    divisors.sort_unstable();
    let checks = vec![
        check("divisors", divisors == [3, 4, 6]),
        check("exact_min_degree", report.exact_min() == Some(3)),
        check("exact_index", report.exact_index() == Some(1)),
    ];
    Report::new(
        "enriques",
        json!({}),
        json!({
            "strata": strata,
            "quotient_factor": model.quotient_factor(),
            "min_degree": report.min_degree,
            "index": report.index,
            "divisors": report.divisors,
            "realized": report.realized,
        }),
        checks,
        false,
    )
}

fn semigroup(d: u64, n: u64, query: u64) -> Result<Report, UsageError> {
    if query > MAX_QUERY {
        return Err(UsageError::new("--query", format!("at most {MAX_QUERY} is supported")));
    }
    let s = sdn_generators(d, n).map_err(|e| match e {
        SemigroupError::BadInput { d: 0, .. } => UsageError::new("--d", "must be positive"),
        SemigroupError::BadInput { .. } => UsageError::new("--n", "must be positive"),
        other => UsageError::new("--d", other.to_string()),
    })?;
    Ok(Report::new(
        "semigroup",
        json!({ "d": d, "n": n, "query": query }),
        json!({
            "generators": s.generators(),
            "min": s.min_positive(),
            "gcd": s.gcd(),
            "contains": s.contains(query),
        }),
        Vec::new(),
        true,
    ))
}

fn verify(samples: &Option<String>) -> Result<Report, UsageError> {
    let samples = match samples {
        Some(text) => parse_samples(text)?,
        None => default_samples(),
    };
    let inputs = json!({ "samples": samples.iter().map(ToString::to_string).collect::<Vec<_>>() });
    let report = match verify_construction(&samples) {
        Ok(r) => r,
        Err(e @ (ConstructError::SampleZero | ConstructError::DuplicateSample(_))) => {
            return Err(UsageError::new("--samples", e.to_string()))
        }
        Err(e) => {
            let results = json!({ "error": e.to_string() });
            return Ok(Report::new(
                "verify-construction",
                inputs,
                results,
                vec![check("suite", false)],
                false,
            ));
        }
    };
    let checks = report
        .checks
        .iter()
        .map(|c| CheckLine {
            name: c.name.clone(),
            passed: c.passed,
            informational: c.informational,
        })
        .collect();
    let details: Map<String, Value> = report
        .checks
        .iter()
        .map(|c| (c.name.clone(), c.details.clone()))
        .collect();
    let table: Vec<Value> = report.table.iter().map(|(m, q)| json!([m, q])).collect();
    Ok(Report::new(
        "verify-construction",
        inputs,
        json!({ "table": table, "table_rank": report.table_rank, "details": details }),
        checks,
        false,
    ))
}

fn witness(a: u64, b: u64, e: Option<u64>) -> Result<Report, UsageError> {
    let r = match e {
        Some(e) => choose_ab_and_certify(a, b, e),
        None => witness_parameters(a, b),
    }
    .map_err(|err| match err {
        WitnessError::BadInput { name } => {
            let flag = match name {
                "a" | "a_prime" => "--a",
                "b" | "b_prime" => "--b",
                _ => "--e",
            };
            UsageError::new(flag, "must be positive")
        }
        WitnessError::Overflow { .. } => UsageError::new("--a", err.to_string()),
    })?;
    let mut checks = vec![
        check("n_is_4ab", r.n == 4 * r.a * r.b && r.d + 1 == r.n),
        check("basepoint", r.basepoint_ok),
    ];
    if let Some(e) = r.e {
        checks.push(check("product_exceeds_e_plus_1", r.n > e + 1));
        checks.push(check("no_section", r.no_section_ok == Some(true)));
    }
    let inputs = match e {
        Some(e) => json!({ "a": a, "b": b, "e": e }),
        None => json!({ "a": a, "b": b }),
    };
    let results = serde_json::to_value(&r).expect("serializable");
    Ok(Report::new("witness", inputs, results, checks, false))
}

pub fn run_command(request: &CommandRequest) -> Result<Report, UsageError> {
    match &request.subcommand {
        Subcommand::Hypersurface { d, n } => hypersurface(*d, *n),
        Subcommand::Enriques => Ok(enriques()),
        Subcommand::Semigroup { d, n, query } => semigroup(*d, *n, *query),
        Subcommand::VerifyConstruction { samples } => verify(samples),
        Subcommand::Witness { a, b, e } => witness(*a, *b, *e),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<String>) {
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, v, out);
            }
        }
        Value::Array(items) if items.iter().any(|i| i.is_object() || i.is_array()) => {
            for (i, item) in items.iter().enumerate() {
                match item.as_array().map(|a| a.as_slice()) {
                    Some([l, r]) if l.is_string() && r.is_string() => {
                        out.push(format!("{prefix}[{i}]: {} -> {}", scalar(l), scalar(r)));
                    }
                    _ => flatten(&format!("{prefix}[{i}]"), item, out),
                }
            }
        }
        other => out.push(format!("{prefix} = {}", scalar(other))),
    }
}

/// Text: one line per check, then the flattened results, then the verdict.
/// JSON: pretty-printed with sorted keys and a trailing newline.
pub fn render_report(r: &Report, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&r.to_json()).expect("serializable");
            s.push('\n');
            s
        }
        OutputFormat::Text => {
            let mut lines = vec![format!("subcommand: {}", r.subcommand)];
            flatten("input", &r.inputs, &mut lines);
            lines.retain(|l| l != "input = {}");
            for c in &r.checks {
                let status = if c.passed { "PASS" } else { "FAIL" };
                let note = if c.informational { " (informational)" } else { "" };
                lines.push(format!("check {}: {status}{note}", c.name));
            }
            let mut results = r.results.clone();
            if let Value::Object(map) = &mut results {
                map.remove("checks");
                map.remove("details");
            }
            flatten("", &results, &mut lines);
            lines.push(format!("verdict: {}", r.verdict));
            let mut s = lines.join("\n");
            s.push('\n');
            s
        }
    }
}

/// Result of a full invocation: what goes to stdout and stderr, and the exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses `argv`, runs the command and renders it, without touching the process.
pub fn execute<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let request = match CommandRequest::parse_from(args) {
        Ok(r) => r,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            } else {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            };
        }
    };
    match run_command(&request) {
        Ok(report) => Outcome {
            stdout: render_report(&report, request.format),
            stderr: String::new(),
            code: report.exit_code(),
        },
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: USAGE_EXIT_CODE,
        },
    }
}
