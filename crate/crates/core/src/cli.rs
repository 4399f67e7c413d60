//! The `radii` command line: `solve`, `table`, `verify` and `trace`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
//! 3 numeric failure.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::RadiiError;
use crate::extremal::ExtremalFunction;
use crate::problem::{
    ClassSpec, Family, RadiusKind, RadiusQuery, VerificationReport, DEFAULT_TOLERANCE,
};
use crate::solver::solve_radius;
use crate::verify::{self, Grid};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

/// Environment variable overriding the default solver tolerance.
pub const TOLERANCE_ENV: &str = "RADII_DEFAULT_TOL";

pub const CSV_HEADER: &str = "class,kind,alpha,b,m,radius,residual,iterations";
pub const TRACE_HEADER: &str = "theta,re_star,im_star,re_convex,im_convex,parabolic_margin";
pub const DOMAIN_ERROR_MARKER: &str = "DOMAIN_ERROR";
pub const NUMERIC_ERROR_MARKER: &str = "NUMERIC_ERROR";

#[derive(Debug, Parser)]
#[command(
    name = "radii",
    version,
    about = "Sharp radii of starlikeness and convexity"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute one radius.
    Solve(SolveArgs),
    /// Compute radii over a parameter sweep.
    Table(TableArgs),
    /// Run verification checks.
    Verify(VerifyArgs),
    /// Sample the extremal function on a circle.
    Trace(TraceArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    N,
    M,
    MOverN,
    Caratheodory,
}

impl From<ClassArg> for Family {
    fn from(c: ClassArg) -> Family {
        match c {
            ClassArg::N => Family::BoundByN,
            ClassArg::M => Family::BoundByM,
            ClassArg::MOverN => Family::BoundByMOverN,
            ClassArg::Caratheodory => Family::Caratheodory,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Starlike,
    Convex,
    Parabolic,
    Ucv,
    PositiveReal,
}

impl KindArg {
    fn fixes_alpha(self) -> bool {
        matches!(self, KindArg::Parabolic | KindArg::Ucv)
    }

    fn with_alpha(self, alpha: f64) -> RadiusKind {
        match self {
            KindArg::Starlike => RadiusKind::StarlikeOrder(alpha),
            KindArg::Convex => RadiusKind::ConvexOrder(alpha),
            KindArg::Parabolic => RadiusKind::ParabolicStarlike,
            KindArg::Ucv => RadiusKind::UniformlyConvex,
            KindArg::PositiveReal => RadiusKind::PositiveRealPartOrder(alpha),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct ClassArgs {
    #[arg(long, value_enum)]
    class: ClassArg,
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Order α in [0, 1); ignored for parabolic and ucv.
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    /// Half the bound on the second coefficient.
    #[arg(long, allow_hyphen_values = true)]
    b: Option<f64>,
    /// Coefficient bound M.
    #[arg(long, allow_hyphen_values = true)]
    m: Option<f64>,
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[command(flatten)]
    class: ClassArgs,
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[command(flatten)]
    class: ClassArgs,
    /// `alpha=LO:HI:STEP`, `b=LO:HI:STEP` or `m=V1,V2,...`; repeatable.
    #[arg(long)]
    sweep: Vec<String>,
    #[arg(long, value_enum, default_value = "csv")]
    format: OutputFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Constants,
    Sharpness,
    Oracle,
    Monotonicity,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GridArg {
    Default,
    Coarse,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: SuiteArg,
    #[arg(long, value_enum, default_value = "default")]
    grid: GridArg,
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct TraceArgs {
    #[command(flatten)]
    class: ClassArgs,
    /// Circle radius, or `auto` for the computed radius.
    #[arg(long, default_value = "auto")]
    r: String,
    #[arg(long, default_value_t = verify::DEFAULT_SAMPLES)]
    samples: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: OutputFormat,
}

/// A failure carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<RadiiError> for Failure {
    fn from(e: RadiiError) -> Self {
        Failure {
            code: exit_code(&e),
            message: match &e {
                RadiiError::Domain { param, message } => format!("--{param}: {message}"),
                other => other.to_string(),
            },
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::usage(format!("i/o error: {e}"))
    }
}

/// Exit code for a library error.
pub fn exit_code(e: &RadiiError) -> i32 {
    match e {
        RadiiError::Domain { .. } | RadiiError::UnsupportedClass(_) => EXIT_USAGE,
        RadiiError::NoRoot
        | RadiiError::MultipleRoots { .. }
        | RadiiError::NonConvergence { .. }
        | RadiiError::Pole { .. } => EXIT_NUMERIC,
    }
}

/// Formats a float with 17 significant digits.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// Parses the arguments (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{rendered}");
                EXIT_OK
            };
        }
    };
    let outcome = match cli.command {
        Command::Solve(a) => cmd_solve(a, out, err),
        Command::Table(a) => cmd_table(a, out, err),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Trace(a) => cmd_trace(a, out, err),
    };
    match outcome {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn default_tolerance() -> Result<f64, Failure> {
    match std::env::var(TOLERANCE_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("{TOLERANCE_ENV}: not a number: {v:?}"))),
        Err(_) => Ok(DEFAULT_TOLERANCE),
    }
}

impl ClassArgs {
    fn tolerance(&self) -> Result<f64, Failure> {
        match self.tol {
            Some(t) => Ok(t),
            None => default_tolerance(),
        }
    }

    /// The α value to use, or `None` when the kind fixes it. Warns when a
    /// value is given for such a kind.
    fn alpha(&self, err: &mut dyn Write) -> Result<Option<f64>, Failure> {
        if self.kind.fixes_alpha() {
            if let Some(given) = &self.alpha {
                let _ = writeln!(
                    err,
                    "warning: --alpha {given} is ignored for kind {}; alpha = 1/2",
                    self.kind.with_alpha(0.5).label()
                );
            }
            return Ok(None);
        }
        match &self.alpha {
            Some(s) => s
                .trim()
                .parse()
                .map(Some)
                .map_err(|_| Failure::usage(format!("--alpha: not a number: {s:?}"))),
            None => Ok(None),
        }
    }

    fn query(&self, alpha: f64, b: f64, m: Option<f64>, tol: f64) -> RadiusQuery {
        RadiusQuery::new(
            ClassSpec {
                family: self.class.into(),
                b,
                m,
            },
            self.kind.with_alpha(alpha),
        )
        .with_tolerance(tol)
    }

    /// The single query described by the flags.
    fn single(&self, err: &mut dyn Write) -> Result<RadiusQuery, Failure> {
        let alpha = match self.alpha(err)? {
            Some(a) => a,
            None if self.kind.fixes_alpha() => 0.5,
            None => return Err(Failure::usage("--alpha is required")),
        };
        let b = self.b.ok_or_else(|| Failure::usage("--b is required"))?;
        let query = self.query(alpha, b, self.m, self.tolerance()?);
        query.validate()?;
        Ok(query)
    }
}

#[derive(Serialize)]
struct SolveOutput<'a> {
    equation_id: &'a str,
    radius: f64,
    residual: f64,
    iterations: usize,
}

fn cmd_solve(a: SolveArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    if a.format == OutputFormat::Csv {
        return Err(Failure::usage(
            "--format: csv is only available for table and trace",
        ));
    }
    let query = a.class.single(err)?;
    let result = solve_radius(&query)?;
    let shown = SolveOutput {
        equation_id: &result.equation_id,
        radius: result.radius,
        residual: result.residual,
        iterations: result.iterations,
    };
    match a.format {
        OutputFormat::Json => {
            writeln!(
                out,
                "{}",
                serde_json::to_string(&shown).expect("plain struct")
            )?;
        }
        _ => {
            writeln!(out, "equation_id: {}", shown.equation_id)?;
            writeln!(out, "radius: {}", format_float(shown.radius))?;
            writeln!(out, "residual: {}", format_float(shown.residual))?;
            writeln!(out, "iterations: {}", shown.iterations)?;
        }
    }
    Ok(EXIT_OK)
}

/// One parsed `--sweep` value.
#[derive(Debug, Clone, PartialEq)]
pub enum Sweep {
    Alpha(Vec<f64>),
    B(Vec<f64>),
    M(Vec<f64>),
}

fn parse_number(s: &str, whole: &str) -> Result<f64, String> {
    let x: f64 = s
        .trim()
        .parse()
        .map_err(|_| format!("--sweep {whole}: not a number: {s:?}"))?;
    if x.is_finite() {
        Ok(x)
    } else {
        Err(format!("--sweep {whole}: not finite: {s:?}"))
    }
}

fn parse_values(text: &str, whole: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = text.split(':').collect();
    match parts.as_slice() {
        [lo, hi, step] => {
            let (lo, hi, step) = (
                parse_number(lo, whole)?,
                parse_number(hi, whole)?,
                parse_number(step, whole)?,
            );
            if step <= 0.0 {
                return Err(format!("--sweep {whole}: step must be positive"));
            }
            Ok(verify::stepped(lo, hi, step))
        }
        [list] => list.split(',').map(|v| parse_number(v, whole)).collect(),
        _ => Err(format!("--sweep {whole}: expected LO:HI:STEP or V1,V2,...")),
    }
}

/// Parses `alpha=LO:HI:STEP`, `b=LO:HI:STEP` or `m=V1,V2,...`. Both forms
/// are accepted for every variable.
pub fn parse_sweep(s: &str) -> Result<Sweep, String> {
    let (name, text) = s
        .split_once('=')
        .ok_or_else(|| format!("--sweep {s}: expected NAME=VALUES"))?;
    let values = parse_values(text, s)?;
    match name.trim() {
        "alpha" => Ok(Sweep::Alpha(values)),
        "b" => Ok(Sweep::B(values)),
        "m" => Ok(Sweep::M(values)),
        other => Err(format!("--sweep {s}: unknown variable {other:?}")),
    }
}

#[derive(Serialize)]
struct TableRow {
    class: &'static str,
    kind: &'static str,
    alpha: f64,
    b: f64,
    m: Option<f64>,
    radius: Option<f64>,
    residual: Option<f64>,
    iterations: Option<usize>,
    error: Option<String>,
    #[serde(skip)]
    marker: Option<&'static str>,
}

impl TableRow {
    fn csv(&self) -> String {
        let opt = |x: Option<f64>| x.map(format_float).unwrap_or_default();
        let radius = match (self.radius, self.marker) {
            (Some(r), _) => format_float(r),
            (None, marker) => marker.unwrap_or(NUMERIC_ERROR_MARKER).to_string(),
        };
        format!(
            "{},{},{},{},{},{},{},{}",
            self.class,
            self.kind,
            format_float(self.alpha),
            format_float(self.b),
            opt(self.m),
            radius,
            opt(self.residual),
            self.iterations.map(|i| i.to_string()).unwrap_or_default(),
        )
    }
}

fn cmd_table(a: TableArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    if a.format == OutputFormat::Text {
        return Err(Failure::usage("--format: table writes csv or json"));
    }
    let (mut alphas, mut bs, mut ms) = (None, None, None);
    for s in &a.sweep {
        let (slot, values) = match parse_sweep(s).map_err(Failure::usage)? {
            Sweep::Alpha(v) => (&mut alphas, v),
            Sweep::B(v) => (&mut bs, v),
            Sweep::M(v) => (&mut ms, v),
        };
        if slot.is_some() {
            return Err(Failure::usage(format!("--sweep {s}: variable swept twice")));
        }
        *slot = Some(values);
    }
    let c = &a.class;
    let family: Family = c.class.into();
    let fixed_alpha = c.alpha(err)?;
    let alphas = if c.kind.fixes_alpha() {
        if alphas.is_some() {
            let _ = writeln!(
                err,
                "warning: alpha sweep is ignored for kind {}; alpha = 1/2",
                c.kind.with_alpha(0.5).label()
            );
        }
        vec![0.5]
    } else {
        match (alphas, fixed_alpha) {
            (Some(v), _) => v,
            (None, Some(x)) => vec![x],
            (None, None) => return Err(Failure::usage("--alpha or --sweep alpha=... is required")),
        }
    };
    let bs = match (bs, c.b) {
        (Some(v), _) => v,
        (None, Some(x)) => vec![x],
        (None, None) => return Err(Failure::usage("--b or --sweep b=... is required")),
    };
    let ms: Vec<Option<f64>> = match (ms, c.m) {
        (Some(v), _) => v.into_iter().map(Some).collect(),
        (None, m) => vec![m],
    };
    let tol = c.tolerance()?;

    let mut points = Vec::with_capacity(alphas.len() * bs.len() * ms.len());
    for &alpha in &alphas {
        for &b in &bs {
            for &m in &ms {
                points.push((alpha, b, m));
            }
        }
    }
    points.sort_by(|x, y| {
        x.0.total_cmp(&y.0).then(x.1.total_cmp(&y.1)).then(
            x.2.unwrap_or(f64::NEG_INFINITY)
                .total_cmp(&y.2.unwrap_or(f64::NEG_INFINITY)),
        )
    });

    let rows: Vec<TableRow> = points
        .par_iter()
        .map(|&(alpha, b, m)| {
            let query = c.query(alpha, b, m, tol);
            let mut row = TableRow {
                class: family.label(),
                kind: query.kind.label(),
                alpha: query.kind.alpha(),
                b,
                m,
                radius: None,
                residual: None,
                iterations: None,
                error: None,
                marker: None,
            };
            match solve_radius(&query) {
                Ok(r) => {
                    row.radius = Some(r.radius);
                    row.residual = Some(r.residual);
                    row.iterations = Some(r.iterations);
                }
                Err(e) => {
                    row.marker = Some(if exit_code(&e) == EXIT_USAGE {
                        DOMAIN_ERROR_MARKER
                    } else {
                        NUMERIC_ERROR_MARKER
                    });
                    row.error = Some(e.to_string());
                }
            }
            row
        })
        .collect();

    let mut text = String::new();
    match a.format {
        OutputFormat::Json => {
            text = serde_json::to_string_pretty(&rows).expect("plain rows");
            text.push('\n');
        }
        _ => {
            text.push_str(CSV_HEADER);
            text.push('\n');
            for row in &rows {
                let _ = writeln!(text, "{}", row.csv());
            }
        }
    }
    match &a.out {
        Some(path) => std::fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    let numeric = rows
        .iter()
        .filter(|r| r.marker == Some(NUMERIC_ERROR_MARKER))
        .count();
    for row in rows.iter().filter(|r| r.error.is_some()) {
        let _ = writeln!(
            err,
            "alpha={} b={} m={:?}: {}",
            row.alpha,
            row.b,
            row.m,
            row.error.as_deref().unwrap_or_default()
        );
    }
    Ok(if numeric > 0 { EXIT_NUMERIC } else { EXIT_OK })
}

fn cmd_verify(a: VerifyArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    if a.format == OutputFormat::Csv {
        return Err(Failure::usage("--format: verify writes text or json"));
    }
    let grid = match a.grid {
        GridArg::Default => Grid::default_grid(),
        GridArg::Coarse => Grid::coarse(),
    };
    let reports: Vec<VerificationReport> = match a.suite {
        SuiteArg::Constants => verify::constants_suite(),
        SuiteArg::Sharpness => verify::sharpness_suite(&grid),
        SuiteArg::Oracle => verify::oracle_suite(&grid),
        SuiteArg::Monotonicity => verify::monotonicity_suite(&grid),
        SuiteArg::All => verify::full_suite(&grid),
    };
    let failed = reports.iter().filter(|r| !r.passed).count();
    match a.format {
        OutputFormat::Json => {
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&reports).expect("plain reports")
            )?;
        }
        _ => {
            for r in &reports {
                writeln!(
                    out,
                    "{} {} measured={} expected={} tol={:e} {}",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.check_name,
                    format_float(r.measured),
                    format_float(r.expected),
                    r.tolerance,
                    r.detail
                )?;
            }
            writeln!(out, "{} checks, {} failed", reports.len(), failed)?;
        }
    }
    Ok(if failed == 0 {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    })
}

fn cmd_trace(a: TraceArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    if a.format != OutputFormat::Csv {
        return Err(Failure::usage("--format: trace writes csv only"));
    }
    if !(a.samples >= 64 && a.samples.is_power_of_two()) {
        return Err(Failure::usage(format!(
            "--samples: must be a power of two >= 64, got {}",
            a.samples
        )));
    }
    let query = a.class.single(err)?;
    let r = if a.r.trim() == "auto" {
        solve_radius(&query)?.radius
    } else {
        a.r.trim()
            .parse()
            .map_err(|_| Failure::usage(format!("--r: expected a number or auto, got {:?}", a.r)))?
    };
    if !(r > 0.0 && r < 1.0) {
        return Err(Failure::usage(format!("--r: must lie in (0, 1), got {r}")));
    }
    let ef = ExtremalFunction::new(query.class)?;
    let trace = verify::trace_circle(&ef, r, a.samples)?;
    let mut text = String::with_capacity(trace.len() * 130);
    text.push_str(TRACE_HEADER);
    text.push('\n');
    for p in &trace {
        let _ = writeln!(
            text,
            "{},{},{},{},{},{}",
            format_float(p.theta),
            format_float(p.star.re),
            format_float(p.star.im),
            format_float(p.convex.re),
            format_float(p.convex.im),
            format_float(p.parabolic_margin()),
        );
    }
    out.write_all(text.as_bytes())?;
    Ok(EXIT_OK)
}
