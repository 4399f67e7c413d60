//! Independent checks of computed radii.
//!
//! * sharpness: at `z = r0` the extremal function meets the bound with
//!   equality;
//! * circle scans: the extremal function satisfies the property inside
//!   `r0` and violates it just outside;
//! * oracle roots: the coefficient-sum condition solved by direct partial
//!   summation, with no use of the closed-form equations;
//! * monotonicity in the order `α` and in the second coefficient `b`.
//!
//! Failures are returned as reports with `passed = false`; nothing here
//! panics or aborts a suite.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{RadiiError, Result};
use crate::extremal::{angle, ComplexPoint, ExtremalFunction};
use crate::problem::{
    ClassSpec, Family, RadiusKind, RadiusQuery, RadiusResult, VerificationReport,
};
use crate::solver::{closed_form_radical, solve_radius, Radical};

/// Tolerance for the equalities at `z = r0`.
pub const SHARPNESS_TOLERANCE: f64 = 1e-8;
/// Allowed undershoot of the scan minimum inside the radius.
pub const INSIDE_TOLERANCE: f64 = 1e-9;
/// Tolerance of the scan minimum on the circle `|z| = r0`.
pub const ON_CIRCLE_TOLERANCE: f64 = 1e-6;
/// Slack for comparing a solved radius with an oracle interval.
pub const ORACLE_TOLERANCE: f64 = 1e-9;
/// Strict decrease in `α` means successive differences below `-STRICT_STEP`.
pub const STRICT_STEP: f64 = 1e-12;
pub const DEFAULT_SAMPLES: usize = 4096;
pub const DEFAULT_ORACLE_TERMS: u32 = 10_000;
/// Scan radii relative to `r0`.
pub const INSIDE_FACTOR: f64 = 0.9;
pub const BEYOND_FACTOR: f64 = 1.05;

/// Minima of the test quantities over a circle `|z| = radius`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CircleScan {
    pub radius: f64,
    pub samples: usize,
    /// `min Re w`, `w = z f'/f`.
    pub min_re_star: Option<f64>,
    /// `min (Re w - |w - 1|)`.
    pub min_parabolic_margin: Option<f64>,
    /// `min Re v`, `v = 1 + z f''/f'`.
    pub min_re_convex: Option<f64>,
    /// `min (Re v - |v - 1|)`.
    pub min_ucv_margin: Option<f64>,
    /// Angle at which `min_re_star` is attained.
    pub argmin_star: f64,
    /// Angle at which `min_re_convex` is attained.
    pub argmin_convex: f64,
}

impl CircleScan {
    /// Minimum real part of the quantity `kind` constrains.
    pub fn min_re_for(&self, kind: RadiusKind) -> Option<f64> {
        if kind.is_convex() {
            self.min_re_convex
        } else {
            self.min_re_star
        }
    }

    pub fn argmin_for(&self, kind: RadiusKind) -> f64 {
        if kind.is_convex() {
            self.argmin_convex
        } else {
            self.argmin_star
        }
    }
}

/// One row of the circle grid: the two quotients at `θ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TracePoint {
    pub theta: f64,
    pub star: num_complex::Complex64,
    pub convex: num_complex::Complex64,
}

impl TracePoint {
    pub fn parabolic_margin(&self) -> f64 {
        self.star.re - (self.star - 1.0).norm()
    }
}

fn check_samples(samples: usize) -> Result<()> {
    if samples >= 64 && samples.is_power_of_two() {
        Ok(())
    } else {
        Err(RadiiError::Domain {
            param: crate::error::Param::R,
            message: format!("samples must be a power of two >= 64, got {samples}"),
        })
    }
}

fn check_scan_radius(r: f64) -> Result<()> {
    if r > 0.0 && r < 1.0 {
        Ok(())
    } else {
        Err(RadiiError::Domain {
            param: crate::error::Param::R,
            message: format!("scan radius must lie in (0, 1), got {r}"),
        })
    }
}

/// Both quotients on the uniform angular grid of `|z| = r`.
pub fn trace_circle(ef: &ExtremalFunction, r: f64, samples: usize) -> Result<Vec<TracePoint>> {
    check_samples(samples)?;
    check_scan_radius(r)?;
    (0..samples)
        .map(|k| {
            let theta = angle(k, samples);
            let z = ComplexPoint::from_polar(r, theta)?;
            let star = ef.star_quotient(z)?;
            let convex = ef.convex_quotient(z)?;
            if !(star.is_finite() && convex.is_finite()) {
                return Err(RadiiError::Pole {
                    re: z.re(),
                    im: z.im(),
                });
            }
            Ok(TracePoint {
                theta,
                star,
                convex,
            })
        })
        .collect()
}

/// Scans `|z| = r`. A pole of one quotient on the circle leaves that
/// quotient's minima as `None`; the other quotient is still scanned.
pub fn scan_circle(ef: &ExtremalFunction, r: f64, samples: usize) -> Result<CircleScan> {
    check_samples(samples)?;
    check_scan_radius(r)?;
    let mut scan = CircleScan {
        radius: r,
        samples,
        min_re_star: Some(f64::INFINITY),
        min_parabolic_margin: Some(f64::INFINITY),
        min_re_convex: Some(f64::INFINITY),
        min_ucv_margin: Some(f64::INFINITY),
        argmin_star: 0.0,
        argmin_convex: 0.0,
    };
    let (mut best_star, mut best_convex) = (f64::INFINITY, f64::INFINITY);
    for k in 0..samples {
        let theta = angle(k, samples);
        let z = ComplexPoint::from_polar(r, theta)?;
        match ef.star_quotient(z) {
            Ok(w) if w.is_finite() => {
                if w.re < best_star {
                    best_star = w.re;
                    scan.argmin_star = theta;
                }
                lower(&mut scan.min_re_star, w.re);
                lower(&mut scan.min_parabolic_margin, w.re - (w - 1.0).norm());
            }
            _ => {
                scan.min_re_star = None;
                scan.min_parabolic_margin = None;
            }
        }
        match ef.convex_quotient(z) {
            Ok(v) if v.is_finite() => {
                if v.re < best_convex {
                    best_convex = v.re;
                    scan.argmin_convex = theta;
                }
                lower(&mut scan.min_re_convex, v.re);
                lower(&mut scan.min_ucv_margin, v.re - (v - 1.0).norm());
            }
            _ => {
                scan.min_re_convex = None;
                scan.min_ucv_margin = None;
            }
        }
    }
    Ok(scan)
}

fn lower(slot: &mut Option<f64>, value: f64) {
    if let Some(current) = slot {
        *current = current.min(value);
    }
}

fn describe(query: &RadiusQuery) -> String {
    let class = &query.class;
    match class.m {
        Some(m) => format!(
            "class={} b={} m={} kind={}",
            class.family, class.b, m, query.kind
        ),
        None => format!("class={} b={} kind={}", class.family, class.b, query.kind),
    }
}

/// Reports whichever of two equalities deviates more, so the verdict covers
/// both while keeping `passed <=> |measured - expected| <= tolerance`.
fn worse_of(
    name: &str,
    (m1, e1, label1): (f64, f64, &str),
    (m2, e2, label2): (f64, f64, &str),
    tolerance: f64,
    context: &str,
) -> VerificationReport {
    let detail =
        format!("{context}; {label1}={m1:.17e} (want {e1}), {label2}={m2:.17e} (want {e2})");
    if (m1 - e1).abs() >= (m2 - e2).abs() {
        VerificationReport::compare(name, m1, e1, tolerance, detail)
    } else {
        VerificationReport::compare(name, m2, e2, tolerance, detail)
    }
}

fn sharpness_from(query: &RadiusQuery, radius: f64) -> Result<VerificationReport> {
    let ef = ExtremalFunction::new(query.class)?;
    let alpha = query.kind.alpha();
    let z = ComplexPoint::real(radius)?;
    let context = format!("{} r0={radius:.17e}", describe(query));
    let (w, what) = if matches!(query.kind, RadiusKind::PositiveRealPartOrder(_)) {
        (ef.eval(z), "p0")
    } else if query.kind.is_convex() {
        (ef.convex_quotient(z)?, "1+zf''/f'")
    } else {
        (ef.star_quotient(z)?, "zf'/f")
    };
    Ok(worse_of(
        "sharpness",
        ((w - 1.0).norm(), 1.0 - alpha, &format!("|{what}-1|")),
        (w.re, alpha, &format!("Re {what}")),
        SHARPNESS_TOLERANCE,
        &context,
    ))
}

/// Solves the query and checks that the extremal function meets the bound
/// with equality at `z = r0`: `|w - 1| = 1 - α` and `Re w = α`.
pub fn check_sharpness(class: ClassSpec, kind: RadiusKind) -> Result<VerificationReport> {
    let query = RadiusQuery::new(class, kind);
    let result = solve_radius(&query)?;
    sharpness_from(&query, result.radius)
}

/// Root of the coefficient-sum condition, as an interval.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OracleRoot {
    pub lo: f64,
    pub hi: f64,
    /// Terms actually summed at the upper end of the interval.
    pub terms_used: u32,
}

impl OracleRoot {
    pub fn estimate(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    /// Distance from `r` to the interval.
    pub fn distance(&self, r: f64) -> f64 {
        if r < self.lo {
            self.lo - r
        } else if r > self.hi {
            r - self.hi
        } else {
            0.0
        }
    }
}

/// Worst-case weighted coefficient series `Σ t_n r^(power)` as used by the
/// sufficiency conditions, written directly from the class bounds.
#[derive(Debug, Clone, Copy)]
struct WeightedSeries {
    class: ClassSpec,
    alpha: f64,
    convex: bool,
}

impl WeightedSeries {
    /// Weight times coefficient bound for index `n >= 2`.
    fn term(&self, n: u32) -> f64 {
        let nf = f64::from(n);
        let (b, m) = (self.class.b, self.class.m_or_zero());
        match self.class.family {
            Family::Caratheodory => {
                // index n carries |c_{n-1}| r^{n-1}
                if n == 2 {
                    2.0 * b
                } else {
                    2.0 * m
                }
            }
            family => {
                let bound = if n == 2 {
                    2.0 * b
                } else {
                    match family {
                        Family::BoundByN => nf,
                        Family::BoundByM => m,
                        _ => m / nf,
                    }
                };
                let weight = if self.convex {
                    nf * (nf - self.alpha)
                } else {
                    nf - self.alpha
                };
                weight * bound
            }
        }
    }

    /// Growth degree `d` with `term(n) <= C n^d` for `n >= 3`.
    fn degree(&self) -> i32 {
        let base = match self.class.family {
            Family::BoundByN => 2,
            Family::BoundByM => 1,
            Family::BoundByMOverN => 0,
            Family::Caratheodory => return 0,
        };
        base + i32::from(self.convex)
    }

    /// Constant `C` in the envelope above.
    fn envelope(&self) -> f64 {
        let m = self.class.m_or_zero();
        match self.class.family {
            Family::BoundByN => 1.0,
            Family::BoundByM => m,
            Family::BoundByMOverN => m,
            Family::Caratheodory => 2.0 * m,
        }
    }

    /// Partial sum over `2..=last` and a rigorous bound for the rest.
    /// Summation stops early once the remaining tail is below 1e-20.
    fn partial(&self, r: f64, n_terms: u32) -> (f64, f64, u32) {
        let d = self.degree();
        let c = self.envelope();
        let mut sum = 0.0;
        let mut power = r; // r^(n-1)
        let mut n = 2u32;
        loop {
            sum += self.term(n) * power;
            let next = n + 1;
            let q = r * (f64::from(next + 1) / f64::from(next)).powi(d);
            let tail = if q < 1.0 {
                c * f64::from(next).powi(d) * power * r / (1.0 - q)
            } else {
                f64::INFINITY
            };
            if n >= n_terms || (n >= 3 && tail < 1e-20) {
                return (sum, tail, n);
            }
            power *= r;
            n = next;
        }
    }
}

fn bisect_decreasing(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> Result<f64> {
    if !(f(lo) > 0.0 && f(hi) < 0.0) {
        return Err(RadiiError::NoRoot);
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Solves `Σ w_n |a_n| r^(n-1) = 1 - α` with every `|a_n|` at its bound by
/// partial summation over at most `n_terms` coefficients.
///
/// The true margin lies between `U(r) - T(r)` and `U(r)`, `U` the partial
/// margin and `T` the tail bound, so their roots bracket the true root.
pub fn oracle_root(class: ClassSpec, kind: RadiusKind, n_terms: u32) -> Result<OracleRoot> {
    RadiusQuery::new(class, kind).validate()?;
    let series = WeightedSeries {
        class,
        alpha: kind.alpha(),
        convex: kind.is_convex(),
    };
    let target = 1.0 - kind.alpha();
    let upper = |r: f64| target - series.partial(r, n_terms).0;
    let lower = |r: f64| {
        let (sum, tail, _) = series.partial(r, n_terms);
        target - sum - tail
    };
    let top = 1.0 - 1e-6;
    let hi = bisect_decreasing(upper, 0.0, top)?;
    let lo = bisect_decreasing(lower, 0.0, top)?.min(hi);
    let (_, _, terms_used) = series.partial(hi, n_terms);
    Ok(OracleRoot { lo, hi, terms_used })
}

/// A parameter grid for the verification suites.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub alphas: Vec<f64>,
    pub bs: Vec<f64>,
    pub ms: Vec<f64>,
    pub families: Vec<Family>,
    pub samples: usize,
    pub oracle_terms: u32,
}

/// `lo, lo + step, ...` up to `hi` inclusive, snapped to 12 decimals so
/// that `0.1 * 3` prints as `0.3`. Empty when `lo > hi`.
pub fn stepped(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    if lo > hi {
        return Vec::new();
    }
    let count = ((hi - lo) / step + 1e-9).floor() as i64;
    (0..=count)
        .map(|i| ((lo + i as f64 * step) * 1e12).round() / 1e12)
        .collect()
}

impl Grid {
    /// α = 0, 0.05, ..., 0.95; b = 0, 0.1, ..., 1; M in {0.5, 1, 2}.
    pub fn default_grid() -> Self {
        Grid {
            alphas: stepped(0.0, 0.95, 0.05),
            bs: stepped(0.0, 1.0, 0.1),
            ms: vec![0.5, 1.0, 2.0],
            families: vec![
                Family::BoundByN,
                Family::BoundByM,
                Family::BoundByMOverN,
                Family::Caratheodory,
            ],
            samples: DEFAULT_SAMPLES,
            oracle_terms: DEFAULT_ORACLE_TERMS,
        }
    }

    /// α in {0, 0.25, 0.5, 0.75}, b in {0, 0.5, 1}, M in {0.5, 1, 2}.
    pub fn coarse() -> Self {
        Grid {
            alphas: vec![0.0, 0.25, 0.5, 0.75],
            bs: vec![0.0, 0.5, 1.0],
            ..Grid::default_grid()
        }
    }

    pub fn empty() -> Self {
        Grid {
            alphas: vec![],
            bs: vec![],
            ms: vec![],
            families: vec![],
            samples: DEFAULT_SAMPLES,
            oracle_terms: DEFAULT_ORACLE_TERMS,
        }
    }

    fn kinds_for(family: Family) -> &'static [RadiusKind] {
        const SHAPE: [RadiusKind; 4] = [
            RadiusKind::StarlikeOrder(0.0),
            RadiusKind::ConvexOrder(0.0),
            RadiusKind::ParabolicStarlike,
            RadiusKind::UniformlyConvex,
        ];
        const POSITIVE: [RadiusKind; 1] = [RadiusKind::PositiveRealPartOrder(0.0)];
        match family {
            Family::Caratheodory => &POSITIVE,
            _ => &SHAPE,
        }
    }

    /// Every query on the grid, in (family, kind, α, b, M) order.
    ///
    /// Convexity under `|a_n| <= M/n` is only defined through the derivative
    /// reduction for `2b <= 1`; larger `b` are left out rather than reported.
    pub fn queries(&self) -> Vec<RadiusQuery> {
        let mut out = Vec::new();
        if self.alphas.is_empty() || self.bs.is_empty() {
            return out;
        }
        for &family in &self.families {
            let ms: Vec<Option<f64>> = if family.needs_m() {
                self.ms.iter().copied().map(Some).collect()
            } else {
                vec![None]
            };
            for &template in Grid::kinds_for(family) {
                let fixed = matches!(
                    template,
                    RadiusKind::ParabolicStarlike | RadiusKind::UniformlyConvex
                );
                let alphas: &[f64] = if fixed { &[0.5] } else { &self.alphas };
                for &alpha in alphas {
                    for &b in &self.bs {
                        if family == Family::BoundByMOverN && template.is_convex() && 2.0 * b > 1.0
                        {
                            continue;
                        }
                        for &m in &ms {
                            out.push(RadiusQuery::new(
                                ClassSpec { family, b, m },
                                template.with_alpha(alpha),
                            ));
                        }
                    }
                }
            }
        }
        out
    }
}

/// A grid point and the solver's answer for it.
#[derive(Debug, Clone, PartialEq)]
pub struct Solved {
    pub query: RadiusQuery,
    pub result: Result<RadiusResult>,
}

pub fn solve_grid(grid: &Grid) -> Vec<Solved> {
    grid.queries()
        .into_par_iter()
        .map(|query| Solved {
            result: solve_radius(&query),
            query,
        })
        .collect()
}

fn unsolved_report(check: &str, query: &RadiusQuery, err: &RadiiError) -> VerificationReport {
    VerificationReport::failure(check, format!("{}: {err}", describe(query)))
}

/// Circle-scan reports for one solved point: inside, on and beyond `r0`.
pub fn scan_reports(query: &RadiusQuery, r0: f64, samples: usize) -> Vec<VerificationReport> {
    let context = describe(query);
    let ef = match ExtremalFunction::new(query.class) {
        Ok(ef) => ef,
        Err(e) => return vec![unsolved_report("scan", query, &e)],
    };
    let alpha = query.kind.alpha();
    let mut reports = Vec::new();

    let inside = INSIDE_FACTOR * r0;
    match scan_circle(&ef, inside, samples) {
        Ok(scan) => {
            reports.push(match scan.min_re_for(query.kind) {
                Some(min) => VerificationReport::compare(
                    "scan-inside",
                    (alpha - min).max(0.0),
                    0.0,
                    INSIDE_TOLERANCE,
                    format!("{context} r={inside:.17e} min Re={min:.17e} (want >= {alpha})"),
                ),
                None => VerificationReport::failure(
                    "scan-inside",
                    format!("{context} r={inside:.17e}: pole on the circle"),
                ),
            });
            let margin = match query.kind {
                RadiusKind::ParabolicStarlike => Some(("parabolic", scan.min_parabolic_margin)),
                RadiusKind::UniformlyConvex => Some(("ucv", scan.min_ucv_margin)),
                _ => None,
            };
            if let Some((label, value)) = margin {
                let name = format!("scan-inside-{label}-margin");
                reports.push(match value {
                    Some(value) => VerificationReport::compare(
                        name,
                        (-value).max(0.0),
                        0.0,
                        INSIDE_TOLERANCE,
                        format!("{context} r={inside:.17e} min margin={value:.17e} (want >= 0)"),
                    ),
                    None => VerificationReport::failure(
                        name,
                        format!("{context} r={inside:.17e}: pole on the circle"),
                    ),
                });
            }
        }
        Err(e) => reports.push(unsolved_report("scan-inside", query, &e)),
    }

    match scan_circle(&ef, r0, samples) {
        Ok(scan) => match scan.min_re_for(query.kind) {
            Some(min) => {
                reports.push(VerificationReport::compare(
                    "scan-on-circle",
                    min,
                    alpha,
                    ON_CIRCLE_TOLERANCE,
                    format!("{context} r={r0:.17e} min Re={min:.17e}"),
                ));
                reports.push(VerificationReport::compare(
                    "scan-argmin-angle",
                    scan.argmin_for(query.kind),
                    0.0,
                    PI / samples as f64,
                    format!("{context} r={r0:.17e} angle of the minimum"),
                ));
            }
            None => reports.push(VerificationReport::failure(
                "scan-on-circle",
                format!("{context} r={r0:.17e}: pole on the circle"),
            )),
        },
        Err(e) => reports.push(unsolved_report("scan-on-circle", query, &e)),
    }

    let beyond = (BEYOND_FACTOR * r0).min(0.5 * (r0 + 1.0));
    match scan_circle(&ef, beyond, samples) {
        Ok(scan) => {
            // passes only when the minimum dips below α; a pole counts as a dip
            let (excess, seen) = match scan.min_re_for(query.kind) {
                Some(min) if min >= alpha => {
                    (min - alpha + f64::MIN_POSITIVE, format!("{min:.17e}"))
                }
                Some(min) => (0.0, format!("{min:.17e}")),
                None => (0.0, "pole".to_string()),
            };
            reports.push(VerificationReport::compare(
                "scan-beyond",
                excess,
                0.0,
                0.0,
                format!("{context} r={beyond:.17e} min Re={seen} (want < {alpha})"),
            ));
        }
        Err(e) => reports.push(unsolved_report("scan-beyond", query, &e)),
    }
    reports
}

fn oracle_report(query: &RadiusQuery, radius: f64, n_terms: u32) -> VerificationReport {
    match oracle_root(query.class, query.kind, n_terms) {
        Ok(oracle) => VerificationReport::compare(
            "oracle",
            oracle.distance(radius),
            0.0,
            ORACLE_TOLERANCE,
            format!(
                "{} solved={radius:.17e} oracle=[{:.17e}, {:.17e}] terms={}",
                describe(query),
                oracle.lo,
                oracle.hi,
                oracle.terms_used
            ),
        ),
        Err(e) => unsolved_report("oracle", query, &e),
    }
}

/// Sharpness equality plus the three circle scans for every grid point.
pub fn sharpness_suite(grid: &Grid) -> Vec<VerificationReport> {
    per_point(grid, |s, r| {
        let mut out = vec![match sharpness_from(&s.query, r.radius) {
            Ok(report) => report,
            Err(e) => unsolved_report("sharpness", &s.query, &e),
        }];
        out.extend(scan_reports(&s.query, r.radius, grid.samples));
        out
    })
}

/// Solved radius against the partial-sum oracle for every grid point.
pub fn oracle_suite(grid: &Grid) -> Vec<VerificationReport> {
    per_point(grid, |s, r| {
        vec![oracle_report(&s.query, r.radius, grid.oracle_terms)]
    })
}

fn per_point<F>(grid: &Grid, check: F) -> Vec<VerificationReport>
where
    F: Fn(&Solved, &RadiusResult) -> Vec<VerificationReport> + Sync,
{
    solve_grid(grid)
        .par_iter()
        .map(|s| match &s.result {
            Ok(r) => check(s, r),
            Err(e) => vec![unsolved_report("solve", &s.query, e)],
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn same_line(a: &RadiusQuery, b: &RadiusQuery, vary_alpha: bool) -> bool {
    let kind_match = std::mem::discriminant(&a.kind) == std::mem::discriminant(&b.kind);
    let fixed_match = if vary_alpha {
        a.class.b == b.class.b
    } else {
        a.kind.alpha() == b.kind.alpha()
    };
    a.class.family == b.class.family && kind_match && a.class.m == b.class.m && fixed_match
}

fn sweep_reports(solved: &[Solved], vary_alpha: bool) -> Vec<VerificationReport> {
    let ok: Vec<(&RadiusQuery, f64)> = solved
        .iter()
        .filter_map(|s| s.result.as_ref().ok().map(|r| (&s.query, r.radius)))
        .collect();
    let mut done = vec![false; ok.len()];
    let mut reports = Vec::new();
    for i in 0..ok.len() {
        if done[i] {
            continue;
        }
        let mut line: Vec<(f64, f64)> = Vec::new();
        for j in i..ok.len() {
            if !done[j] && same_line(ok[i].0, ok[j].0, vary_alpha) {
                done[j] = true;
                let key = if vary_alpha {
                    ok[j].0.kind.alpha()
                } else {
                    ok[j].0.class.b
                };
                line.push((key, ok[j].1));
            }
        }
        if line.len() < 2 {
            continue;
        }
        line.sort_by(|x, y| x.0.total_cmp(&y.0));
        let worst = line
            .windows(2)
            .map(|w| w[1].1 - w[0].1)
            .fold(f64::NEG_INFINITY, f64::max);
        let q = ok[i].0;
        let (name, passed, detail) = if vary_alpha {
            (
                "monotone-in-alpha",
                worst < -STRICT_STEP,
                format!("class={} b={} m={:?} kind={}: max successive difference {worst:e} (want < -{STRICT_STEP:e})", q.class.family, q.class.b, q.class.m, q.kind.label()),
            )
        } else {
            (
                "monotone-in-b",
                worst <= STRICT_STEP,
                format!("class={} alpha={} m={:?} kind={}: max successive difference {worst:e} (want <= {STRICT_STEP:e})", q.class.family, q.kind.alpha(), q.class.m, q.kind.label()),
            )
        };
        reports.push(VerificationReport {
            check_name: name.to_string(),
            passed,
            measured: worst,
            expected: if vary_alpha {
                -STRICT_STEP
            } else {
                STRICT_STEP
            },
            tolerance: 0.0,
            detail,
        });
    }
    reports
}

/// Bounded coefficients from `n = 2` on versus `a_2 = 0`: the radius of
/// starlikeness with a vanishing second coefficient is the larger one.
pub fn vanishing_second_coefficient_report(m: f64) -> VerificationReport {
    let full = solve_radius(&Radical::BoundedCoefficients(m).query());
    let vanishing = solve_radius(&RadiusQuery::new(
        ClassSpec::bound_by_m(0.0, m),
        RadiusKind::StarlikeOrder(0.0),
    ));
    match (full, vanishing) {
        (Ok(r0), Ok(r1)) => VerificationReport {
            check_name: "vanishing-second-coefficient".into(),
            passed: r1.radius > r0.radius,
            measured: r1.radius - r0.radius,
            expected: 0.0,
            tolerance: 0.0,
            detail: format!(
                "m={m}: r1={:.17e} r0={:.17e} (want r1 > r0)",
                r1.radius, r0.radius
            ),
        },
        (Err(e), _) | (_, Err(e)) => {
            VerificationReport::failure("vanishing-second-coefficient", format!("m={m}: {e}"))
        }
    }
}

/// Monotonicity sweeps in α and in b, plus the vanishing-`a_2` comparison
/// for each `M` on the grid that keeps `b = M/2` within `[0, 1]`.
pub fn monotonicity_suite(grid: &Grid) -> Vec<VerificationReport> {
    let solved = solve_grid(grid);
    let mut reports = sweep_reports(&solved, true);
    reports.extend(sweep_reports(&solved, false));
    if grid.families.contains(&Family::BoundByM) && !grid.alphas.is_empty() {
        for &m in grid.ms.iter().filter(|&&m| m > 0.0 && m <= 2.0) {
            reports.push(vanishing_second_coefficient_report(m));
        }
    }
    reports
}

/// The radii with published numerical values, checked against the solver,
/// plus the radical closed forms against the numeric roots.
pub fn constants_suite() -> Vec<VerificationReport> {
    let n = ClassSpec::bound_by_n;
    let table: [(&str, RadiusQuery, f64, f64); 9] = [
        (
            "starlike, |a_n|<=n",
            RadiusQuery::new(n(1.0), RadiusKind::StarlikeOrder(0.0)),
            0.164878,
            1e-5,
        ),
        (
            "parabolic, |a_n|<=n",
            RadiusQuery::new(n(1.0), RadiusKind::ParabolicStarlike),
            0.120385,
            1e-5,
        ),
        (
            "starlike, a_2=0",
            RadiusQuery::new(n(0.0), RadiusKind::StarlikeOrder(0.0)),
            0.253571,
            1e-5,
        ),
        (
            "parabolic, a_2=0",
            RadiusQuery::new(n(0.0), RadiusKind::ParabolicStarlike),
            0.206299,
            1e-5,
        ),
        (
            "convex, |a_n|<=n",
            RadiusQuery::new(n(1.0), RadiusKind::ConvexOrder(0.0)),
            0.09033,
            1e-4,
        ),
        (
            "uniformly convex, |a_n|<=n",
            RadiusQuery::new(n(1.0), RadiusKind::UniformlyConvex),
            0.064723,
            1e-5,
        ),
        (
            "convex, a_2=0",
            RadiusQuery::new(n(0.0), RadiusKind::ConvexOrder(0.0)),
            0.155972,
            1e-5,
        ),
        (
            "uniformly convex, a_2=0",
            RadiusQuery::new(n(0.0), RadiusKind::UniformlyConvex),
            0.125429,
            1e-5,
        ),
        (
            "starlike, |a_n|<=M=1",
            Radical::BoundedCoefficients(1.0).query(),
            0.292893,
            1e-5,
        ),
    ];
    let mut reports: Vec<VerificationReport> = table
        .iter()
        .map(|(label, query, expected, tol)| match solve_radius(query) {
            Ok(r) => VerificationReport::compare(
                "constant",
                r.radius,
                *expected,
                *tol,
                format!("{label}: solved {:.17e}", r.radius),
            ),
            Err(e) => VerificationReport::failure("constant", format!("{label}: {e}")),
        })
        .collect();

    let radicals = [
        ("2(1-r)^3 = 1+r", Radical::StarlikeUnrestricted),
        ("order 1/2, |a_n|<=n", Radical::ParabolicUnrestricted),
        ("1 - 2^(-1/3)", Radical::ParabolicVanishingSecond),
        (
            "1 - sqrt(M/(1+M)), M=0.5",
            Radical::BoundedCoefficients(0.5),
        ),
        ("1 - sqrt(M/(1+M)), M=1", Radical::BoundedCoefficients(1.0)),
        ("1 - sqrt(M/(1+M)), M=2", Radical::BoundedCoefficients(2.0)),
    ];
    reports.extend(radicals.iter().map(|(label, radical)| {
        let closed = closed_form_radical(*radical);
        match solve_radius(&radical.query()) {
            Ok(r) => VerificationReport::compare(
                "radical",
                r.radius,
                closed,
                1e-12,
                format!("{label}: closed form {closed:.17e}"),
            ),
            Err(e) => VerificationReport::failure("radical", format!("{label}: {e}")),
        }
    }));
    reports
}

/// Sharpness, circle scans, oracle comparison and monotonicity over a grid.
pub fn run_suite(grid: &Grid) -> Vec<VerificationReport> {
    let solved = solve_grid(grid);
    let mut reports: Vec<VerificationReport> = solved
        .par_iter()
        .map(|s| match &s.result {
            Ok(r) => {
                let mut out = vec![match sharpness_from(&s.query, r.radius) {
                    Ok(report) => report,
                    Err(e) => unsolved_report("sharpness", &s.query, &e),
                }];
                out.push(oracle_report(&s.query, r.radius, grid.oracle_terms));
                out.extend(scan_reports(&s.query, r.radius, grid.samples));
                out
            }
            Err(e) => vec![unsolved_report("solve", &s.query, e)],
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    reports.extend(sweep_reports(&solved, true));
    reports.extend(sweep_reports(&solved, false));
    reports
}

/// Constants, per-point checks, monotonicity sweeps and the vanishing
/// second coefficient comparison.
pub fn full_suite(grid: &Grid) -> Vec<VerificationReport> {
    let mut reports = constants_suite();
    reports.extend(run_suite(grid));
    if grid.families.contains(&Family::BoundByM) && !grid.alphas.is_empty() {
        for &m in grid.ms.iter().filter(|&&m| m > 0.0 && m <= 2.0) {
            reports.push(vanishing_second_coefficient_report(m));
        }
    }
    reports
}
