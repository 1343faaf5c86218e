//! Batch command-line surface.
//!
//! Exit codes: 0 success, 1 parse error, 2 precondition violation, 3 failed check.

use clap::{Parser, Subcommand, ValueEnum};
use rand::RngCore;
use serde_json::{json, Value};

use crate::algebra::HalfLaurent;
use crate::braid::{apply_markov, closure_components, pure_lcs_element, random_markov_walk, seeded_rng, BraidWord, MarkovMove};
use crate::error::InvariantError;
use crate::rmatrix::{builtin_jones, check_enhancement, check_qybe, normalized_trace_invariant, parse_rmatrix_file};
use crate::skein::{evaluate, SkeinKind, SkeinSystem};
use crate::vassiliev::{expand_invariant, v2, weight_space_dimension, weight_space_dimension_dense, DEFAULT_ORDER};

#[derive(Parser, Debug)]
#[command(name = "braidinv", version, about = "Knot and link invariants of closed braids")]
struct Cli {
    /// Emit a JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Engine {
    Skein,
    Rmatrix,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Polynomial invariant of a closed braid.
    Invariant {
        /// `jones`, `alexander` or `homfly:<n>`.
        #[arg(long)]
        sys: String,
        #[arg(long)]
        braid: String,
        #[arg(long, value_enum, default_value = "skein")]
        engine: Engine,
    },
    /// Coefficients u_0..u_N of the Jones trace invariant at q = e^x.
    Expand {
        #[arg(long)]
        braid: String,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
    },
    /// The order-2 invariant of a knot.
    V2 {
        #[arg(long)]
        braid: String,
    },
    /// Dimension of the order-i weight systems.
    Dims {
        #[arg(long)]
        order: usize,
        /// Use dense elimination instead of the sparse solver.
        #[arg(long)]
        dense: bool,
    },
    /// Random Markov walks; every invariant must be unchanged.
    MarkovCheck {
        #[arg(long)]
        braid: String,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        steps: usize,
    },
    /// QYBE and enhancement checks for an R-matrix file.
    CheckRmatrix {
        #[arg(long)]
        file: String,
    },
    /// Compares u_0..u_k on K_beta and K_(alpha beta) for a pure braid alpha of lower central depth k.
    Stanford {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        depth: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        braid: String,
    },
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<InvariantError> for Failure {
    fn from(e: InvariantError) -> Self {
        let code = match e {
            InvariantError::Parse(_) => 1,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<crate::error::BraidError> for Failure {
    fn from(e: crate::error::BraidError) -> Self {
        Failure { code: 2, message: e.to_string() }
    }
}

fn parse_error(msg: impl Into<String>) -> Failure {
    Failure { code: 1, message: msg.into() }
}

fn precondition(msg: impl Into<String>) -> Failure {
    Failure { code: 2, message: msg.into() }
}

fn parse_braid(s: &str) -> Result<BraidWord, Failure> {
    s.parse().map_err(|e: crate::error::ParseError| parse_error(e.to_string()))
}

/// Text and JSON renderings of one command, plus its exit code.
struct Report {
    code: i32,
    text: String,
    json: Value,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Self { code: 0, text, json }
    }
}

pub fn run<I, S>(argv: I) -> CliOutput
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                CliOutput { code: 1, stdout: String::new(), stderr: rendered }
            } else {
                CliOutput { code: 0, stdout: rendered, stderr: String::new() }
            };
        }
    };
    match dispatch(&cli.command) {
        Ok(report) => {
            let stdout = if cli.json {
                let mut obj = serde_json::Map::new();
                obj.insert("schema".into(), json!(1));
                obj.insert("command".into(), json!(command_name(&cli.command)));
                if let Value::Object(fields) = report.json {
                    obj.extend(fields);
                }
                format!("{}\n", Value::Object(obj))
            } else {
                report.text
            };
            CliOutput { code: report.code, stdout, stderr: String::new() }
        }
        Err(f) => {
            let stderr = format!("error: {}\n", f.message);
            let stdout = if cli.json {
                format!("{}\n", json!({"schema": 1, "command": command_name(&cli.command), "error": f.message, "code": f.code}))
            } else {
                String::new()
            };
            CliOutput { code: f.code, stdout, stderr }
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Invariant { .. } => "invariant",
        Command::Expand { .. } => "expand",
        Command::V2 { .. } => "v2",
        Command::Dims { .. } => "dims",
        Command::MarkovCheck { .. } => "markov-check",
        Command::CheckRmatrix { .. } => "check-rmatrix",
        Command::Stanford { .. } => "stanford",
    }
}

fn dispatch(c: &Command) -> Result<Report, Failure> {
    match c {
        Command::Invariant { sys, braid, engine } => {
            let system = SkeinSystem::from_name(sys).ok_or_else(|| parse_error(format!("unknown system `{sys}`")))?;
            let w = parse_braid(braid)?;
            let value = match engine {
                Engine::Skein => evaluate(&w, &system)?,
                Engine::Rmatrix => {
                    if system.kind != SkeinKind::Jones && system.kind != SkeinKind::Homfly(1) {
                        return Err(precondition(format!("no builtin R-matrix for `{}`", system.name())));
                    }
                    if w.singular_count() > 0 {
                        return Err(InvariantError::SingularLetter.into());
                    }
                    normalized_trace_invariant(&w, &builtin_jones()?)?
                }
            };
            Ok(Report::ok(format!("{value}\n"), json!({"system": system.name(), "value": value.to_string()})))
        }
        Command::Expand { braid, order } => {
            let w = parse_braid(braid)?;
            let s = expand_invariant(&w, &builtin_jones()?, *order)?;
            let coeffs: Vec<String> = s.coeffs().iter().map(ToString::to_string).collect();
            let text = coeffs.iter().enumerate().map(|(i, c)| format!("u{i}={c}\n")).collect();
            Ok(Report::ok(text, json!({"order": order, "coefficients": coeffs})))
        }
        Command::V2 { braid } => {
            let v = v2(&parse_braid(braid)?)?;
            Ok(Report::ok(format!("{v}\n"), json!({"value": v})))
        }
        Command::Dims { order, dense } => {
            let d = if *dense { weight_space_dimension_dense(*order)? } else { weight_space_dimension(*order)? };
            Ok(Report::ok(format!("{d}\n"), json!({"order": order, "dimension": d})))
        }
        Command::MarkovCheck { braid, trials, seed, steps } => markov_check(&parse_braid(braid)?, *trials, *seed, *steps),
        Command::CheckRmatrix { file } => {
            let text = std::fs::read_to_string(file).map_err(|e| precondition(format!("{file}: {e}")))?;
            let e = parse_rmatrix_file(&text)?;
            let qybe = check_qybe(e.r())?;
            let enh = check_enhancement(&e);
            let qybe_text = match qybe.witness {
                None => "holds".to_string(),
                Some((r, c)) => format!("fails at ({r}, {c})"),
            };
            let enh_text = match &enh {
                Ok(()) => "holds".to_string(),
                Err(f) => format!("fails: {f}"),
            };
            let code = if qybe.holds && enh.is_ok() { 0 } else { 3 };
            Ok(Report {
                code,
                text: format!("qybe: {qybe_text}\nenhancement: {enh_text}\n"),
                json: json!({"rank": e.rank(), "qybe": qybe.holds, "qybe_detail": qybe_text,
                             "enhancement": enh.is_ok(), "enhancement_detail": enh_text}),
            })
        }
        Command::Stanford { n, depth, seed, braid } => stanford(*n, *depth, *seed, &parse_braid(braid)?),
    }
}

/// Values compared by `markov-check`: three skein systems and, when small enough, the trace invariant.
fn invariants(w: &BraidWord) -> Result<Vec<(String, HalfLaurent)>, InvariantError> {
    let mut out = Vec::new();
    for sys in [SkeinSystem::jones(), SkeinSystem::alexander(), SkeinSystem::homfly(2)] {
        out.push((sys.name(), evaluate(w, &sys)?));
    }
    if w.strands() <= 8 {
        out.push(("rmatrix".into(), normalized_trace_invariant(w, &builtin_jones()?)?));
    }
    Ok(out)
}

fn markov_check(w: &BraidWord, trials: usize, seed: u64, steps: usize) -> Result<Report, Failure> {
    if w.singular_count() > 0 {
        return Err(InvariantError::SingularLetter.into());
    }
    let reference = invariants(w)?;
    let mut rng = seeded_rng(seed);
    for t in 0..trials {
        let walked = random_markov_walk(w, steps, rng.next_u64());
        let values = invariants(&walked)?;
        for ((name, a), (_, b)) in reference.iter().zip(&values) {
            if a != b {
                let text = format!("fail\ntrial {t}: {walked}\n{name}: {a} != {b}\n");
                return Ok(Report {
                    code: 3,
                    text,
                    json: json!({"pass": false, "trial": t, "word": walked.to_string(), "system": name,
                                 "expected": a.to_string(), "got": b.to_string()}),
                });
            }
        }
    }
    Ok(Report::ok("pass\n".into(), json!({"pass": true, "trials": trials})))
}

fn stanford(n: usize, depth: usize, seed: u64, beta: &BraidWord) -> Result<Report, Failure> {
    if beta.strands() > n {
        return Err(precondition(format!("braid has {} strands, more than n = {n}", beta.strands())));
    }
    let mut beta = beta.clone();
    while beta.strands() < n {
        beta = apply_markov(&beta, MarkovMove::Stabilize { positive: true })?;
    }
    let mu = closure_components(&beta);
    if mu != 1 {
        return Err(InvariantError::NotAKnot(mu).into());
    }
    let alpha = pure_lcs_element(n, depth, seed)?;
    let product = alpha.concat(&beta)?;
    let e = builtin_jones()?;
    let a = expand_invariant(&beta, &e, depth)?;
    let b = expand_invariant(&product, &e, depth)?;
    let mut text = format!("alpha: {alpha}\n");
    let mut rows = Vec::new();
    let mut all = true;
    for i in 0..=depth {
        let same = a.coeff(i) == b.coeff(i);
        all &= same;
        text.push_str(&format!(
            "u{i}: {} {} {}\n",
            a.coeff(i),
            b.coeff(i),
            if same { "agree" } else { "differ" }
        ));
        rows.push(json!({"i": i, "beta": a.coeff(i).to_string(), "alpha_beta": b.coeff(i).to_string(), "agree": same}));
    }
    text.push_str(if all { "agree\n" } else { "differ\n" });
    Ok(Report {
        code: if all { 0 } else { 3 },
        text,
        json: json!({"alpha": alpha.to_string(), "depth": depth, "agree": all, "coefficients": rows}),
    })
}
