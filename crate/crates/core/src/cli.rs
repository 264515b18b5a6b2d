//! The `heis` command line. JSON goes to stdout, diagnostics to stderr.
//!
//! Exit codes: 0 success, 1 other failure, 2 parse error, 3 size-pattern
//! error, 4 engine or cache mismatch, 5 enumeration budget exceeded.

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde_json::{json, Value};
use thiserror::Error;

use crate::additivity::{
    enumerate_h_class, enumerate_h_matrices, enumerate_k_class, enumerate_k_matrices, generate_stable_triple,
    k_additive_stable_triple, AdditivityError, EnumerationBudget, HMatrix, KMatrix, TripleGeneration,
};
use crate::cache::{default_path, CacheError, CoefficientCache};
use crate::coefficients::{CoefficientError, CoefficientKind, CoefficientQuery, Engine};
use crate::conformance;
use crate::partition::{Composition, Partition};
use crate::stability::{
    classify_triple, detect_stable_limit, stability_check, stabilization_sequence, NotATriple, StabilityError,
    DEFAULT_N_MAX, DEFAULT_WINDOW,
};

#[derive(Debug, Parser)]
#[command(
    name = "heis",
    version,
    about = "Exact LR, Kronecker and Heisenberg coefficients and their stability"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// One coefficient: `coeff heis 2,1 1,1 2`.
    Coeff {
        kind: CoefficientKind,
        lambda: Partition,
        mu: Partition,
        nu: Partition,
        /// Also run the independent engine and fail on disagreement.
        #[arg(long)]
        oracle: bool,
        /// Neither read nor write the coefficient cache.
        #[arg(long)]
        no_cache: bool,
    },
    /// Coefficients along `base + k·direction` for k = 0..=n.
    Seq {
        kind: CoefficientKind,
        #[arg(long, num_args = 3, value_names = ["L", "M", "N"], required = true)]
        base: Vec<Partition>,
        #[arg(long = "dir", num_args = 3, value_names = ["A", "B", "C"], required = true)]
        direction: Vec<Partition>,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_WINDOW)]
        window: usize,
    },
    /// Stability verdict for a triple.
    Stable {
        alpha: Partition,
        beta: Partition,
        gamma: Partition,
        #[arg(long, default_value_t = DEFAULT_N_MAX)]
        n_max: usize,
    },
    /// Additivity of a matrix read from a file (`-` for stdin).
    Additive {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, value_enum)]
        kind: MatrixKind,
    },
    /// All matrices with the given margins, optionally with a fixed π.
    Enumerate {
        #[arg(long)]
        rows: Composition,
        #[arg(long)]
        cols: Composition,
        #[arg(long, value_enum)]
        kind: MatrixKind,
        #[arg(long)]
        pi: Option<Partition>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Run the reference examples and print a pass/fail table.
    Selftest,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MatrixKind {
    K,
    H,
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    #[arg(long, default_value_t = EnumerationBudget::default().max_entry_sum)]
    max_entry_sum: usize,
    #[arg(long, default_value_t = EnumerationBudget::default().max_rows)]
    max_rows: usize,
    #[arg(long, default_value_t = EnumerationBudget::default().max_cols)]
    max_cols: usize,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    SizePattern(String),
    #[error("{0}")]
    Mismatch(String),
    #[error("{0}")]
    Budget(String),
    #[error("{0}")]
    Other(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Other(_) => 1,
            CliError::Parse(_) => 2,
            CliError::SizePattern(_) => 3,
            CliError::Mismatch(_) => 4,
            CliError::Budget(_) => 5,
        }
    }
}

impl From<CoefficientError> for CliError {
    fn from(e: CoefficientError) -> Self {
        match e {
            CoefficientError::SizeMismatch { .. }
            | CoefficientError::CompositionSizeMismatch { .. }
            | CoefficientError::DegreeOutOfRange { .. } => CliError::SizePattern(e.to_string()),
            CoefficientError::EngineMismatch { .. } => CliError::Mismatch(e.to_string()),
            _ => CliError::Other(e.to_string()),
        }
    }
}

impl From<CacheError> for CliError {
    fn from(e: CacheError) -> Self {
        match e {
            CacheError::Coefficient(e) => e.into(),
            CacheError::Conflict { .. } => CliError::Mismatch(e.to_string()),
            CacheError::Io { .. } => CliError::Other(e.to_string()),
        }
    }
}

impl From<StabilityError> for CliError {
    fn from(e: StabilityError) -> Self {
        match e {
            StabilityError::Window(_) => CliError::Parse(e.to_string()),
            _ => CliError::SizePattern(e.to_string()),
        }
    }
}

impl From<AdditivityError> for CliError {
    fn from(e: AdditivityError) -> Self {
        match e {
            AdditivityError::BadEntry { .. }
            | AdditivityError::Ragged { .. }
            | AdditivityError::Empty
            | AdditivityError::NonzeroCorner(_) => CliError::Parse(e.to_string()),
            AdditivityError::BudgetExceeded(_) => CliError::Budget(e.to_string()),
            _ => CliError::Other(e.to_string()),
        }
    }
}

fn big(v: &BigUint) -> Value {
    match v.to_u64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

fn emit(out: &mut dyn Write, value: &Value) -> Result<(), CliError> {
    writeln!(out, "{value}").map_err(|e| CliError::Other(e.to_string()))
}

fn io_err(e: io::Error) -> CliError {
    CliError::Other(e.to_string())
}

fn open_cache(err: &mut dyn Write) -> Option<CoefficientCache> {
    let path = default_path()?;
    match CoefficientCache::open(&path) {
        Ok(cache) => Some(cache),
        Err(e) => {
            let _ = writeln!(err, "warning: {e}; continuing without cache");
            None
        }
    }
}

fn evaluate(cache: &mut Option<CoefficientCache>, q: &CoefficientQuery, engine: Engine) -> Result<BigUint, CliError> {
    match cache {
        Some(c) => Ok(c.evaluate(q, engine)?.0),
        None => Ok(q.evaluate(engine)?),
    }
}

fn cmd_coeff(
    q: CoefficientQuery,
    oracle: bool,
    no_cache: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    q.validate()?;
    let start = Instant::now();
    let mut cache = if no_cache { None } else { open_cache(err) };
    if let Some(c) = &mut cache {
        for w in c.take_warnings() {
            let _ = writeln!(err, "warning: {w}");
        }
    }
    let result = (|| -> Result<BigUint, CliError> {
        let value = evaluate(&mut cache, &q, Engine::Primary)?;
        if oracle {
            let check = evaluate(&mut cache, &q, Engine::Oracle)?;
            if check != value {
                return Err(CoefficientError::EngineMismatch {
                    query: Box::new(q.clone()),
                    primary: value,
                    oracle: check,
                }
                .into());
            }
        }
        Ok(value)
    })();
    if let Some(c) = &mut cache {
        for w in c.take_warnings() {
            let _ = writeln!(err, "warning: {w}");
        }
    }
    let value = result?;
    emit(
        out,
        &json!({
            "kind": q.kind,
            "lambda": q.lambda,
            "mu": q.mu,
            "nu": q.nu,
            "value": big(&value),
            "engine": if oracle { "primary+oracle" } else { "primary" },
            "elapsed_ms": start.elapsed().as_millis() as u64,
        }),
    )
}

fn shape(v: Vec<Partition>) -> (Partition, Partition, Partition) {
    let mut it = v.into_iter();
    let mut next = || it.next().unwrap_or_default();
    (next(), next(), next())
}

fn cmd_seq(
    kind: CoefficientKind,
    base: Vec<Partition>,
    direction: Vec<Partition>,
    n: usize,
    window: usize,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let (base, direction) = (shape(base), shape(direction));
    if window < 2 {
        return Err(StabilityError::Window(window).into());
    }
    let seq = stabilization_sequence(kind, &base, &direction, 0..=n)?;
    let values: Vec<BigUint> = seq.iter().map(|(_, v)| v.clone()).collect();
    let limit = detect_stable_limit(&values, window)?;
    let sequence: Vec<Value> = seq.iter().map(|(k, v)| json!({ "n": k, "value": big(v) })).collect();
    emit(
        out,
        &json!({
            "kind": kind,
            "base": [base.0, base.1, base.2],
            "direction": [direction.0, direction.1, direction.2],
            "window": window,
            "sequence": sequence,
            "verdict": if limit.is_some() { "constant_tail" } else { "no_tail_detected" },
            "limit": limit.as_ref().map(|l| big(&l.value)),
            "onset": limit.as_ref().map(|l| l.onset),
        }),
    )
}

fn cmd_stable(
    alpha: Partition,
    beta: Partition,
    gamma: Partition,
    n_max: usize,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let triple = classify_triple(&alpha, &beta, &gamma).map_err(|e| match e {
        NotATriple::SizePattern { .. } => CliError::SizePattern(format!("not a triple: {e}")),
        NotATriple::ZeroCoefficient { .. } => CliError::Other(format!("not a triple: {e}")),
    })?;
    let report = stability_check(&triple, n_max);
    emit(
        out,
        &serde_json::to_value(&report).map_err(|e| CliError::Other(e.to_string()))?,
    )
}

fn read_matrix(path: &PathBuf) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Other(format!("{}: {e}", path.display())))
    }
}

fn cmd_additive(path: PathBuf, kind: MatrixKind, out: &mut dyn Write) -> Result<(), CliError> {
    let text = read_matrix(&path)?;
    let generated = match kind {
        MatrixKind::K => k_additive_stable_triple(&text.parse::<KMatrix>()?)?,
        MatrixKind::H => generate_stable_triple(&text.parse::<HMatrix>()?)?,
    };
    let value = match generated {
        TripleGeneration::Certified(t) => json!({
            "additive": true,
            "certificate": t.certificate,
            "triple": [json!(t.alpha), json!(t.beta), json!(t.gamma)],
        }),
        TripleGeneration::Rejected { .. } => json!({ "additive": false }),
    };
    emit(out, &value)
}

fn cmd_enumerate(
    rows: Composition,
    cols: Composition,
    kind: MatrixKind,
    pi: Option<Partition>,
    budget: BudgetArgs,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let budget = EnumerationBudget {
        max_entry_sum: budget.max_entry_sum,
        max_rows: budget.max_rows,
        max_cols: budget.max_cols,
    };
    let mut count = 0u64;
    let mut print = |m: &dyn std::fmt::Display| -> Result<(), CliError> {
        count += 1;
        writeln!(out, "{m}").map_err(io_err)
    };
    match kind {
        MatrixKind::K => {
            if rows.size() != cols.size() {
                return Err(CoefficientError::CompositionSizeMismatch {
                    left: rows.size(),
                    right: cols.size(),
                }
                .into());
            }
            budget.admit_k(&rows, &cols)?;
            match &pi {
                Some(alpha) => enumerate_k_class(&rows, &cols, alpha).try_for_each(|m| print(&m))?,
                None => enumerate_k_matrices(&rows, &cols).try_for_each(|m| print(&m))?,
            }
        }
        MatrixKind::H => {
            budget.admit_h(&rows, &cols)?;
            match &pi {
                Some(alpha) => enumerate_h_class(&rows, &cols, alpha).try_for_each(|m| print(&m))?,
                None => enumerate_h_matrices(&rows, &cols).try_for_each(|m| print(&m))?,
            }
        }
    }
    writeln!(out, "count {count}").map_err(io_err)
}

fn cmd_selftest(out: &mut dyn Write) -> Result<(), CliError> {
    let checks = conformance::run();
    writeln!(out, "{}", conformance::Table(&checks)).map_err(io_err)?;
    match checks.iter().filter(|c| !c.passed).count() {
        0 => Ok(()),
        n => Err(CliError::Other(format!("{n} reference example(s) failed"))),
    }
}

pub fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Coeff {
            kind,
            lambda,
            mu,
            nu,
            oracle,
            no_cache,
        } => cmd_coeff(CoefficientQuery::new(kind, lambda, mu, nu), oracle, no_cache, out, err),
        Command::Seq {
            kind,
            base,
            direction,
            n,
            window,
        } => cmd_seq(kind, base, direction, n, window, out),
        Command::Stable {
            alpha,
            beta,
            gamma,
            n_max,
        } => cmd_stable(alpha, beta, gamma, n_max, out),
        Command::Additive { matrix, kind } => cmd_additive(matrix, kind, out),
        Command::Enumerate {
            rows,
            cols,
            kind,
            pi,
            budget,
        } => cmd_enumerate(rows, cols, kind, pi, budget, out),
        Command::Selftest => cmd_selftest(out),
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code() as u8;
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn run() -> ExitCode {
    let code = run_with(std::env::args_os(), &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(code)
}
