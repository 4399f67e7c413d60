//! Domain vocabulary: coefficient classes, requested radii, queries,
//! results and verification reports.
//!
//! Every value here is plain immutable data. Validation is centralised in
//! [`RadiusQuery::validate`] and the `check_*` helpers, which the equation
//! and solver modules call before evaluating anything.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Param, RadiiError, Result};

/// Default absolute tolerance for root refinement.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;
/// Default iteration cap for root refinement.
pub const DEFAULT_MAX_ITERATIONS: usize = 200;
/// Queries must ask for at least this much accuracy.
pub const MAX_ALLOWED_TOLERANCE: f64 = 1e-6;

/// Which inequality the Taylor coefficients satisfy from the third one on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// `|a_n| <= n`
    BoundByN,
    /// `|a_n| <= M`
    BoundByM,
    /// `|a_n| <= M / n`
    BoundByMOverN,
    /// `p = 1 + c_1 z + ...` with `|c_1| = 2b` and `|c_n| <= 2M` beyond.
    Caratheodory,
}

impl Family {
    pub fn label(self) -> &'static str {
        match self {
            Family::BoundByN => "n",
            Family::BoundByM => "m",
            Family::BoundByMOverN => "m-over-n",
            Family::Caratheodory => "caratheodory",
        }
    }

    pub fn needs_m(self) -> bool {
        !matches!(self, Family::BoundByN)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A coefficient class: bound family, second-coefficient parameter `b`
/// (so that `|a_2| = 2b`) and the bound `M` where the family uses one.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassSpec {
    pub family: Family,
    pub b: f64,
    pub m: Option<f64>,
}

impl ClassSpec {
    pub fn bound_by_n(b: f64) -> Self {
        ClassSpec {
            family: Family::BoundByN,
            b,
            m: None,
        }
    }

    pub fn bound_by_m(b: f64, m: f64) -> Self {
        ClassSpec {
            family: Family::BoundByM,
            b,
            m: Some(m),
        }
    }

    pub fn bound_by_m_over_n(b: f64, m: f64) -> Self {
        ClassSpec {
            family: Family::BoundByMOverN,
            b,
            m: Some(m),
        }
    }

    pub fn caratheodory(b: f64, m: f64) -> Self {
        ClassSpec {
            family: Family::Caratheodory,
            b,
            m: Some(m),
        }
    }

    pub fn validate(&self) -> Result<()> {
        check_b(self.b)?;
        match (self.family.needs_m(), self.m) {
            (true, None) => Err(RadiiError::domain(
                Param::M,
                format!("the bound M is required for class `{}`", self.family),
            )),
            (true, Some(m)) => check_m(m),
            (false, Some(_)) => Err(RadiiError::domain(Param::M, "class `n` takes no bound M")),
            (false, None) => Ok(()),
        }
    }

    /// The bound `M`. Zero for [`Family::BoundByN`].
    pub fn m_or_zero(&self) -> f64 {
        self.m.unwrap_or(0.0)
    }
}

/// The radius being asked for.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum RadiusKind {
    StarlikeOrder(f64),
    ConvexOrder(f64),
    ParabolicStarlike,
    UniformlyConvex,
    PositiveRealPartOrder(f64),
}

impl RadiusKind {
    /// The order the kind is computed at. Parabolic starlikeness and uniform
    /// convexity are the order-1/2 starlike and convex radii.
    pub fn alpha(self) -> f64 {
        match self {
            RadiusKind::StarlikeOrder(a)
            | RadiusKind::ConvexOrder(a)
            | RadiusKind::PositiveRealPartOrder(a) => a,
            RadiusKind::ParabolicStarlike | RadiusKind::UniformlyConvex => 0.5,
        }
    }

    pub fn is_convex(self) -> bool {
        matches!(
            self,
            RadiusKind::ConvexOrder(_) | RadiusKind::UniformlyConvex
        )
    }

    pub fn is_starlike(self) -> bool {
        matches!(
            self,
            RadiusKind::StarlikeOrder(_) | RadiusKind::ParabolicStarlike
        )
    }

    /// Replaces the named α = 1/2 kinds by their parameterised equivalent.
    pub fn normalized(self) -> RadiusKind {
        match self {
            RadiusKind::ParabolicStarlike => RadiusKind::StarlikeOrder(0.5),
            RadiusKind::UniformlyConvex => RadiusKind::ConvexOrder(0.5),
            other => other,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            RadiusKind::StarlikeOrder(_) => "starlike",
            RadiusKind::ConvexOrder(_) => "convex",
            RadiusKind::ParabolicStarlike => "parabolic",
            RadiusKind::UniformlyConvex => "ucv",
            RadiusKind::PositiveRealPartOrder(_) => "positive-real",
        }
    }

    pub fn with_alpha(self, alpha: f64) -> RadiusKind {
        match self {
            RadiusKind::StarlikeOrder(_) => RadiusKind::StarlikeOrder(alpha),
            RadiusKind::ConvexOrder(_) => RadiusKind::ConvexOrder(alpha),
            RadiusKind::PositiveRealPartOrder(_) => RadiusKind::PositiveRealPartOrder(alpha),
            fixed => fixed,
        }
    }
}

impl fmt::Display for RadiusKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RadiusKind::ParabolicStarlike | RadiusKind::UniformlyConvex => {
                f.write_str(self.label())
            }
            _ => write!(f, "{}(alpha={})", self.label(), self.alpha()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadiusQuery {
    pub class: ClassSpec,
    pub kind: RadiusKind,
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl RadiusQuery {
    pub fn new(class: ClassSpec, kind: RadiusKind) -> Self {
        RadiusQuery {
            class,
            kind,
            tolerance: DEFAULT_TOLERANCE,
            max_iterations: DEFAULT_MAX_ITERATIONS,
        }
    }

    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self
    }

    pub fn validate(&self) -> Result<()> {
        check_alpha(self.kind.alpha())?;
        self.class.validate()?;
        let caratheodory_family = self.class.family == Family::Caratheodory;
        let caratheodory_kind = matches!(self.kind, RadiusKind::PositiveRealPartOrder(_));
        if caratheodory_family != caratheodory_kind {
            return Err(RadiiError::domain(
                Param::Kind,
                format!(
                    "kind `{}` cannot be combined with class `{}`",
                    self.kind.label(),
                    self.class.family
                ),
            ));
        }
        if !(self.tolerance > 0.0 && self.tolerance < MAX_ALLOWED_TOLERANCE) {
            return Err(RadiiError::domain(
                Param::Tolerance,
                format!(
                    "tolerance must lie in (0, {MAX_ALLOWED_TOLERANCE:e}), got {}",
                    self.tolerance
                ),
            ));
        }
        if self.max_iterations == 0 {
            return Err(RadiiError::domain(
                Param::MaxIterations,
                "at least one iteration is required",
            ));
        }
        Ok(())
    }
}

/// Free-function form of [`RadiusQuery::validate`].
pub fn validate(query: &RadiusQuery) -> Result<()> {
    query.validate()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadiusResult {
    pub radius: f64,
    /// Value of the defining function at `radius`.
    pub residual: f64,
    pub iterations: usize,
    pub equation_id: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check_name: String,
    pub passed: bool,
    pub measured: f64,
    pub expected: f64,
    pub tolerance: f64,
    pub detail: String,
}

impl VerificationReport {
    /// Builds a report whose verdict is `|measured - expected| <= tolerance`.
    pub fn compare(
        check_name: impl Into<String>,
        measured: f64,
        expected: f64,
        tolerance: f64,
        detail: impl Into<String>,
    ) -> Self {
        VerificationReport {
            check_name: check_name.into(),
            passed: (measured - expected).abs() <= tolerance,
            measured,
            expected,
            tolerance,
            detail: detail.into(),
        }
    }

    /// A report for a check that could not be carried out.
    pub fn failure(check_name: impl Into<String>, detail: impl Into<String>) -> Self {
        VerificationReport {
            check_name: check_name.into(),
            passed: false,
            measured: f64::NAN,
            expected: 0.0,
            tolerance: 0.0,
            detail: detail.into(),
        }
    }
}

pub(crate) fn check_alpha(alpha: f64) -> Result<()> {
    if (0.0..1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(RadiiError::domain(
            Param::Alpha,
            format!("alpha must lie in [0, 1), got {alpha}"),
        ))
    }
}

pub(crate) fn check_b(b: f64) -> Result<()> {
    if (0.0..=1.0).contains(&b) {
        Ok(())
    } else {
        Err(RadiiError::domain(
            Param::B,
            format!("b must lie in [0, 1], got {b}"),
        ))
    }
}

pub(crate) fn check_m(m: f64) -> Result<()> {
    if m > 0.0 && m.is_finite() {
        Ok(())
    } else {
        Err(RadiiError::domain(
            Param::M,
            format!("M must be a positive finite number, got {m}"),
        ))
    }
}

pub(crate) fn check_r(r: f64) -> Result<()> {
    if (0.0..1.0).contains(&r) {
        Ok(())
    } else {
        Err(RadiiError::domain(
            Param::R,
            format!("r must lie in [0, 1), got {r}"),
        ))
    }
}
