//! Command-line front end. The `gridtrees` binary is a thin wrapper over
//! [`run`], which tests drive directly.
//!
//! Exit codes: 0 success, 1 mismatch, 2 usage or configuration error,
//! 3 size limit.

use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graphs::{make_base, BaseGraph, BaseSpec, GraphError, Topology};
use crate::recurrence::{
    annihilates, char_poly, check_conjectures, generating_function, minimal_recurrence_from_terms,
    Family, IntPolynomial, Recurrence, RecurrenceError,
};
use crate::setpart::SetPartError;
use crate::system::{build_system, ProductSystem, SizeLimits};
use crate::transfer::{check_size, StateIter, TransferError, TransferMatrix, THREADS_ENV};
use crate::verify::{default_max_order, verify_family, VerifyError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    SizeLimit(String),
    #[error("{0}")]
    Mismatch(String),
    #[error("write failed: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Mismatch(_) => 1,
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::SizeLimit(_) => 3,
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<SetPartError> for CliError {
    fn from(e: SetPartError) -> Self {
        match e {
            SetPartError::SizeLimit { .. } => CliError::SizeLimit(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<TransferError> for CliError {
    fn from(e: TransferError) -> Self {
        match e {
            TransferError::Partition(p) => p.into(),
            _ => CliError::SizeLimit(e.to_string()),
        }
    }
}

impl From<RecurrenceError> for CliError {
    fn from(e: RecurrenceError) -> Self {
        match e {
            RecurrenceError::DimensionLimit { .. } => CliError::SizeLimit(e.to_string()),
            RecurrenceError::NoRecurrence { .. } | RecurrenceError::NonIntegral { .. } => {
                CliError::Mismatch(e.to_string())
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Graph(g) => g.into(),
            VerifyError::Transfer(t) => t.into(),
            VerifyError::Partition(p) => p.into(),
            VerifyError::OracleBudget { .. } => CliError::Usage(e.to_string()),
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "gridtrees",
    version,
    about = "Exact spanning-tree counts, recurrences and generating functions for G x P_n and G x C_n",
    after_help = format!("Set {THREADS_ENV}=N to cap the worker threads used while building matrices.")
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Spanning-tree counts T_1 ..= T_terms.
    Seq(SeqArgs),
    /// Partition labels, transfer matrix, initial vector (and d for cylinders).
    Matrix(FamilyArgs),
    /// Minimal linear recurrence and/or characteristic polynomial.
    Rec(RecArgs),
    /// Rational generating function sum T_n x^n.
    Gf(RecArgs),
    /// Compare against the Matrix-Tree determinant and published values.
    Verify(VerifyArgs),
    /// Empirical checks on minimal recurrences across standard families.
    Conjectures(ConjectureArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TopologyArg {
    Path,
    Cycle,
}

impl From<TopologyArg> for Topology {
    fn from(t: TopologyArg) -> Self {
        match t {
            TopologyArg::Path => Topology::Path,
            TopologyArg::Cycle => Topology::Cycle,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Bfile,
}

#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    /// path:K, cycle:K, complete:K or file:PATH
    #[arg(long)]
    pub base: String,
    /// Second factor: path (P_n) or cycle (C_n).
    #[arg(long, value_enum, default_value_t = TopologyArg::Path)]
    pub topology: TopologyArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest base size accepted for G x P_n.
    #[arg(long)]
    pub max_path_k: Option<usize>,
    /// Largest base size accepted for G x C_n.
    #[arg(long)]
    pub max_cylinder_k: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct SeqArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, default_value_t = 10)]
    pub terms: usize,
}

#[derive(Args, Debug, Clone)]
pub struct RecArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Largest recurrence order tried (default: number of states, at most 64).
    #[arg(long)]
    pub max_order: Option<usize>,
    /// Sequence terms to fit (default and minimum: 2 * max_order + 4).
    #[arg(long)]
    pub terms: Option<usize>,
    /// Report the minimal recurrence (default unless --charpoly alone).
    #[arg(long)]
    pub minimal: bool,
    /// Report the characteristic polynomial of the transfer matrix.
    #[arg(long)]
    pub charpoly: bool,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    /// path:K, cycle:K, complete:K or file:PATH
    #[arg(long)]
    pub base: String,
    /// Default: both topologies.
    #[arg(long, value_enum)]
    pub topology: Option<TopologyArg>,
    #[arg(long, default_value_t = 8)]
    pub n_max: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub max_path_k: Option<usize>,
    #[arg(long)]
    pub max_cylinder_k: Option<usize>,
    /// Test hook: bump entry (1,1) of the transfer matrix before checking.
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

#[derive(Args, Debug, Clone)]
pub struct ConjectureArgs {
    /// Grids P_k x P_n for k = 2..=grid_max.
    #[arg(long, default_value_t = 5)]
    pub grid_max: usize,
    /// K_k x P_n for k = 2..=complete_max.
    #[arg(long, default_value_t = 4)]
    pub complete_max: usize,
    /// Also check P_2, P_3 and K_3 cylinders.
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    pub cylinders: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

/// A validated request: base graph resolved, limits applied, size checked.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub spec: BaseSpec,
    pub base: BaseGraph,
    pub topology: Topology,
    pub format: Format,
    pub limits: SizeLimits,
}

/// Accepts `path:K`, `cycle:K`, `complete:K` and `file:PATH`.
pub fn parse_base(s: &str) -> Result<(BaseSpec, BaseGraph), GraphError> {
    if let Some(path) = s.strip_prefix("file:") {
        let base = BaseGraph::from_file(Path::new(path))?;
        let spec = BaseSpec::Explicit {
            k: base.k(),
            edges: base.edges().iter().map(|&(a, b)| (a + 1, b + 1)).collect(),
        };
        return Ok((spec, base));
    }
    let spec: BaseSpec = s.parse()?;
    let base = make_base(&spec)?;
    Ok((spec, base))
}

impl RunConfig {
    pub fn new(
        base: &str,
        topology: Topology,
        format: Format,
        max_path_k: Option<usize>,
        max_cylinder_k: Option<usize>,
    ) -> Result<Self, CliError> {
        let (spec, base) = parse_base(base)?;
        let defaults = SizeLimits::default();
        let limits = SizeLimits {
            max_path_k: max_path_k.unwrap_or(defaults.max_path_k),
            max_cylinder_k: max_cylinder_k.unwrap_or(defaults.max_cylinder_k),
        };
        let k = base.k();
        match topology {
            Topology::Path => check_size(k, limits.max_path_k, k)?,
            Topology::Cycle => check_size(k, limits.max_cylinder_k, 2 * k)?,
        }
        Ok(RunConfig {
            spec,
            base,
            topology,
            format,
            limits,
        })
    }

    fn from_family(a: &FamilyArgs) -> Result<Self, CliError> {
        Self::new(
            &a.base,
            a.topology.into(),
            a.format,
            a.max_path_k,
            a.max_cylinder_k,
        )
    }

    pub fn build(&self) -> Result<ProductSystem, CliError> {
        Ok(build_system(&self.base, self.topology, self.limits)?)
    }

    fn spec_label(&self) -> String {
        match self.spec {
            BaseSpec::Explicit { .. } => self.base.name().to_string(),
            _ => self.spec.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeqDocument {
    pub base: String,
    pub topology: String,
    #[serde(with = "crate::serial::decimal_vec")]
    pub terms: Vec<BigUint>,
}

/// Everything needed to recompute the sequence without the graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub base: String,
    pub topology: String,
    pub k: usize,
    pub labels: Vec<String>,
    pub matrix: Vec<Vec<u64>>,
    #[serde(with = "crate::serial::decimal_vec")]
    pub v1: Vec<BigUint>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<Vec<u64>>,
}

impl MatrixDocument {
    pub fn from_system(base: String, system: &ProductSystem) -> Self {
        MatrixDocument {
            base,
            topology: system.topology().to_string(),
            k: system.base().k(),
            labels: system.index().labels(),
            matrix: system.matrix().to_dense(),
            v1: system.v1().to_vec(),
            d: system.d().map(<[u64]>::to_vec),
        }
    }

    /// `T_1 ..= T_terms` recomputed from the stored matrix and vectors.
    pub fn tree_sequence(&self, terms: usize) -> Result<Vec<BigUint>, String> {
        let dim = self.labels.len();
        if self.matrix.len() != dim
            || self.matrix.iter().any(|r| r.len() != dim)
            || self.v1.len() != dim
        {
            return Err("matrix, labels and v1 disagree in size".into());
        }
        let m = TransferMatrix::from_dense(&self.matrix);
        let states = StateIter::new(&m, self.v1.clone()).take(terms);
        match (&self.d, self.topology.as_str()) {
            (Some(d), "cycle") if d.len() == dim => Ok(states
                .map(|v| {
                    v.iter()
                        .zip(d)
                        .filter(|(_, &c)| c != 0)
                        .map(|(x, &c)| x * c)
                        .sum()
                })
                .collect()),
            (None, "path") => {
                let full = self
                    .labels
                    .iter()
                    .position(|l| !l.contains('/'))
                    .ok_or("no single-block partition among the labels")?;
                Ok(states.map(|v| v[full].clone()).collect())
            }
            _ => Err(format!(
                "inconsistent document for topology {:?}",
                self.topology
            )),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
struct RecDocument {
    base: String,
    topology: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    minimal: Option<RecurrenceJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    charpoly: Option<CharPolyJson>,
}

#[derive(Debug, Clone, Serialize)]
struct RecurrenceJson {
    order: usize,
    #[serde(with = "crate::serial::decimal_vec")]
    coefficients: Vec<BigInt>,
    #[serde(with = "crate::serial::decimal_vec")]
    initial: Vec<BigInt>,
    text: String,
}

#[derive(Debug, Clone, Serialize)]
struct CharPolyJson {
    degree: usize,
    /// Ascending powers.
    #[serde(with = "crate::serial::decimal_vec")]
    coefficients: Vec<BigInt>,
    text: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    divisible_by_minimal: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
struct GfDocument {
    base: String,
    topology: String,
    #[serde(with = "crate::serial::decimal_vec")]
    numerator: Vec<BigInt>,
    #[serde(with = "crate::serial::decimal_vec")]
    denominator: Vec<BigInt>,
    text: String,
}

impl From<&Recurrence> for RecurrenceJson {
    fn from(r: &Recurrence) -> Self {
        RecurrenceJson {
            order: r.order(),
            coefficients: r.coeffs().to_vec(),
            initial: r.initial().to_vec(),
            text: r.to_string(),
        }
    }
}

fn json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).map_err(|e| CliError::Usage(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn no_bfile(verb: &str) -> CliError {
    CliError::Usage(format!(
        "{verb} has no b-file form; use --format text or json"
    ))
}

/// OEIS b-file lines `n a(n)`, 1-based.
pub fn bfile(terms: &[BigUint]) -> String {
    let mut s = String::new();
    for (i, t) in terms.iter().enumerate() {
        let _ = writeln!(s, "{} {t}", i + 1);
    }
    s
}

pub fn cmd_seq(args: &SeqArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if args.terms == 0 {
        return Err(CliError::Usage("--terms must be at least 1".into()));
    }
    let cfg = RunConfig::from_family(&args.family)?;
    let seq = cfg.build()?.tree_sequence(args.terms);
    match cfg.format {
        Format::Bfile => write!(out, "{}", bfile(&seq))?,
        Format::Text => {
            let line: Vec<String> = seq.iter().map(ToString::to_string).collect();
            writeln!(out, "{}", line.join(", "))?;
        }
        Format::Json => json(
            out,
            &SeqDocument {
                base: cfg.spec_label(),
                topology: cfg.topology.to_string(),
                terms: seq,
            },
        )?,
    }
    Ok(())
}

pub fn cmd_matrix(args: &FamilyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let cfg = RunConfig::from_family(args)?;
    let doc = MatrixDocument::from_system(cfg.spec_label(), &cfg.build()?);
    match cfg.format {
        Format::Bfile => return Err(no_bfile("matrix")),
        Format::Json => json(out, &doc)?,
        Format::Text => {
            writeln!(
                out,
                "{} x {}, {} states",
                doc.base,
                doc.topology,
                doc.labels.len()
            )?;
            let width = doc.labels.iter().map(String::len).max().unwrap_or(1);
            for (label, row) in doc.labels.iter().zip(&doc.matrix) {
                let cells: Vec<String> = row.iter().map(|c| format!("{c:>2}")).collect();
                writeln!(out, "{label:>width$} | {}", cells.join(" "))?;
            }
            let v1: Vec<String> = doc.v1.iter().map(ToString::to_string).collect();
            writeln!(out, "v1: {}", v1.join(" "))?;
            if let Some(d) = &doc.d {
                let d: Vec<String> = d.iter().map(ToString::to_string).collect();
                writeln!(out, "d: {}", d.join(" "))?;
            }
        }
    }
    Ok(())
}

fn fit(args: &RecArgs, cfg: &RunConfig, system: &ProductSystem) -> Result<Recurrence, CliError> {
    let max_order = args
        .max_order
        .or_else(|| default_max_order(&cfg.spec, cfg.topology))
        .ok_or_else(|| CliError::Usage("give --max-order for this base".into()))?;
    let terms = args.terms.unwrap_or(2 * max_order + 4);
    let seq: Vec<BigInt> = system
        .tree_sequence(terms)
        .into_iter()
        .map(BigInt::from)
        .collect();
    Ok(minimal_recurrence_from_terms(&seq, max_order)?)
}

fn matrix_char_poly(system: &ProductSystem) -> Result<IntPolynomial, CliError> {
    let dense: Vec<Vec<BigInt>> = system
        .matrix()
        .to_dense()
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    Ok(char_poly(&dense)?)
}

pub fn cmd_rec(args: &RecArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let cfg = RunConfig::from_family(&args.family)?;
    if cfg.format == Format::Bfile {
        return Err(no_bfile("rec"));
    }
    let system = cfg.build()?;
    let want_minimal = args.minimal || !args.charpoly;
    let minimal = want_minimal.then(|| fit(args, &cfg, &system)).transpose()?;
    let charpoly = if args.charpoly {
        Some(matrix_char_poly(&system)?)
    } else {
        None
    };
    if let Some(p) = &charpoly {
        let terms: Vec<BigInt> = system
            .tree_sequence(2 * system.matrix().dim())
            .into_iter()
            .map(BigInt::from)
            .collect();
        if !annihilates(p, &terms) {
            return Err(CliError::Mismatch(
                "sequence does not satisfy the characteristic recurrence".into(),
            ));
        }
    }
    let divides = match (&minimal, &charpoly) {
        (Some(r), Some(p)) => Some(r.polynomial().divides(p)),
        _ => None,
    };

    match cfg.format {
        Format::Json => json(
            out,
            &RecDocument {
                base: cfg.spec_label(),
                topology: cfg.topology.to_string(),
                minimal: minimal.as_ref().map(RecurrenceJson::from),
                charpoly: charpoly.as_ref().map(|p| CharPolyJson {
                    degree: p.degree().unwrap_or(0),
                    coefficients: p.coeffs().to_vec(),
                    text: p.to_string(),
                    divisible_by_minimal: divides,
                }),
            },
        )?,
        _ => {
            if let Some(r) = &minimal {
                writeln!(out, "order {}", r.order())?;
                writeln!(out, "{r}")?;
                let c: Vec<String> = r.coeffs().iter().map(ToString::to_string).collect();
                writeln!(out, "coefficients: {}", c.join(" "))?;
                let init: Vec<String> = r.initial().iter().map(ToString::to_string).collect();
                writeln!(out, "initial: {}", init.join(" "))?;
            }
            if let Some(p) = &charpoly {
                writeln!(out, "charpoly (degree {}): {p}", p.degree().unwrap_or(0))?;
            }
            if let Some(d) = divides {
                writeln!(
                    out,
                    "minimal polynomial divides charpoly: {}",
                    if d { "yes" } else { "no" }
                )?;
            }
        }
    }
    if divides == Some(false) {
        return Err(CliError::Mismatch(
            "minimal recurrence polynomial does not divide the characteristic polynomial".into(),
        ));
    }
    Ok(())
}

pub fn cmd_gf(args: &RecArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let cfg = RunConfig::from_family(&args.family)?;
    if cfg.format == Format::Bfile {
        return Err(no_bfile("gf"));
    }
    let r = fit(args, &cfg, &cfg.build()?)?;
    let gf = generating_function(&r);
    match cfg.format {
        Format::Json => json(
            out,
            &GfDocument {
                base: cfg.spec_label(),
                topology: cfg.topology.to_string(),
                numerator: gf.numerator.coeffs().to_vec(),
                denominator: gf.denominator.coeffs().to_vec(),
                text: gf.to_string(),
            },
        )?,
        _ => writeln!(out, "{gf}")?,
    }
    Ok(())
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if args.n_max == 0 {
        return Err(CliError::Usage("--n-max must be at least 1".into()));
    }
    if args.format == Format::Bfile {
        return Err(no_bfile("verify"));
    }
    let topologies = match args.topology {
        Some(t) => vec![t.into()],
        None => vec![Topology::Path, Topology::Cycle],
    };
    let configs = topologies
        .into_iter()
        .map(|t| {
            RunConfig::new(
                &args.base,
                t,
                args.format,
                args.max_path_k,
                args.max_cylinder_k,
            )
        })
        .collect::<Result<Vec<_>, _>>()?;
    let vertices = configs[0].base.k() * args.n_max;
    if vertices > crate::verify::ORACLE_MAX_VERTICES {
        return Err(VerifyError::OracleBudget {
            vertices,
            max: crate::verify::ORACLE_MAX_VERTICES,
        }
        .into());
    }

    let mut failures = Vec::new();
    let mut reports = Vec::new();
    for cfg in &configs {
        let mut system = cfg.build()?;
        if args.inject_fault {
            let m = system.matrix_mut();
            let v = m.get(1, 1);
            m.set(1, 1, v + 1);
        }
        let report = verify_family(&cfg.spec, &system, args.n_max)?;
        if !report.passed() {
            let what = match report.oracle.first_divergence() {
                Some(r) => format!("{}: first divergent term n={}", report.oracle.family, r.n),
                None => format!("{}: published data mismatch", report.oracle.family),
            };
            failures.push(what);
        }
        reports.push(report);
    }
    match args.format {
        Format::Json => json(out, &reports)?,
        _ => {
            for r in &reports {
                write!(out, "{r}")?;
            }
        }
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::Mismatch(failures.join("; ")))
    }
}

/// The families checked by `conjectures`, paired with their minimal recurrences.
pub fn conjecture_families(args: &ConjectureArgs) -> Result<Vec<(Family, Recurrence)>, CliError> {
    let mut families: Vec<(BaseSpec, Topology)> = (2..=args.grid_max)
        .map(|k| (BaseSpec::Path(k), Topology::Path))
        .collect();
    families.extend((2..=args.complete_max).map(|k| (BaseSpec::Complete(k), Topology::Path)));
    if args.cylinders {
        families.extend([
            (BaseSpec::Path(2), Topology::Cycle),
            (BaseSpec::Path(3), Topology::Cycle),
            (BaseSpec::Complete(3), Topology::Cycle),
        ]);
    }
    let mut out = Vec::new();
    for (spec, topology) in families {
        let base = make_base(&spec)?;
        let system = build_system(&base, topology, SizeLimits::default())?;
        let max_order = default_max_order(&spec, topology).ok_or_else(|| {
            CliError::SizeLimit(format!("{spec} is too large for the conjecture checks"))
        })?;
        let terms: Vec<BigInt> = system
            .tree_sequence(2 * max_order + 4)
            .into_iter()
            .map(BigInt::from)
            .collect();
        let r = minimal_recurrence_from_terms(&terms, max_order)?;
        out.push((
            Family {
                base: spec,
                topology,
            },
            r,
        ));
    }
    Ok(out)
}

pub fn cmd_conjectures(args: &ConjectureArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if args.format == Format::Bfile {
        return Err(no_bfile("conjectures"));
    }
    let report = check_conjectures(&conjecture_families(args)?);
    match args.format {
        Format::Json => json(out, &report)?,
        _ => write!(out, "{report}")?,
    }
    Ok(())
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code; diagnostics go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Seq(a) => cmd_seq(a, out),
        Command::Matrix(a) => cmd_matrix(a, out),
        Command::Rec(a) => cmd_rec(a, out),
        Command::Gf(a) => cmd_gf(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Conjectures(a) => cmd_conjectures(a, out),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "gridtrees: {e}");
            e.exit_code()
        }
    }
}
