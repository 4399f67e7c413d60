//! Radius equations.
//!
//! Every radius in this crate is the unique zero on `(0, 1)` of a defining
//! function `G(r)`, written as right side minus left side of the radius
//! equation so that `G(0) > 0 > G(1-)`. Each `G` is the coefficient-sum
//! sufficiency margin
//!
//! ```text
//! (1 - α) - Σ_{n≥2} w_n |a_n| r^{n-1}
//! ```
//!
//! (with `w_n = n - α` for starlikeness, `n (n - α)` for convexity)
//! multiplied by a positive factor such as `(1 - r)^3`, so both share a root.
//! The sums are evaluated through closed forms; partial summation is kept
//! for the verification oracle only.

use serde::{Deserialize, Serialize};

use crate::error::{Param, RadiiError, Result};
use crate::problem::{check_alpha, check_b, check_m, check_r, ClassSpec, Family};

/// Below this radius `(1 - r) ln(1 - r) / r` is evaluated from its series.
pub const LOG_SERIES_CROSSOVER: f64 = 1e-4;

/// Which radius equation a [`DefiningFunction`] represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EquationId {
    StarlikeBoundN,
    StarlikeBoundM,
    StarlikeBoundMOverN,
    ConvexBoundN,
    ConvexBoundM,
}

impl EquationId {
    pub fn tag(self) -> &'static str {
        match self {
            EquationId::StarlikeBoundN => "starlike/bound-n",
            EquationId::StarlikeBoundM => "starlike/bound-m",
            EquationId::StarlikeBoundMOverN => "starlike/bound-m-over-n",
            EquationId::ConvexBoundN => "convex/bound-n",
            EquationId::ConvexBoundM => "convex/bound-m",
        }
    }

    /// `G(0)`, the limit at the origin.
    pub fn value_at_zero(self, alpha: f64) -> f64 {
        match self {
            EquationId::StarlikeBoundMOverN => 2.0 * (1.0 - alpha),
            _ => 1.0 - alpha,
        }
    }
}

/// A defining function with validated parameters baked in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DefiningFunction {
    pub id: EquationId,
    pub alpha: f64,
    pub b: f64,
    pub m: f64,
}

impl DefiningFunction {
    pub fn new(id: EquationId, alpha: f64, b: f64, m: Option<f64>) -> Result<Self> {
        check_alpha(alpha)?;
        check_b(b)?;
        let m = match id {
            EquationId::StarlikeBoundN | EquationId::ConvexBoundN => 0.0,
            _ => {
                let m = m.ok_or_else(|| {
                    RadiiError::domain(Param::M, format!("{} needs the bound M", id.tag()))
                })?;
                check_m(m)?;
                m
            }
        };
        Ok(DefiningFunction { id, alpha, b, m })
    }

    pub fn equation_id(&self) -> &'static str {
        self.id.tag()
    }

    /// `G(r)` for `r` in `[0, 1)`. Out-of-range input yields NaN.
    pub fn evaluate(&self, r: f64) -> f64 {
        if !(0.0..1.0).contains(&r) {
            return f64::NAN;
        }
        let (a, b, m) = (self.alpha, self.b, self.m);
        match self.id {
            EquationId::StarlikeBoundN => starlike_bound_n(r, a, b),
            EquationId::StarlikeBoundM => starlike_bound_m(r, a, b, m),
            EquationId::StarlikeBoundMOverN => starlike_bound_m_over_n(r, a, b, m),
            EquationId::ConvexBoundN => convex_bound_n(r, a, b),
            EquationId::ConvexBoundM => convex_bound_m(r, a, b, m),
        }
    }
}

/// `Σ_{n ≥ start} n^k r^{n-1}` for `k` in `0..=3`, from the closed forms
/// `1/(1-r)`, `1/(1-r)^2`, `(1+r)/(1-r)^3` and `(1+4r+r^2)/(1-r)^4`.
pub fn sum_n_pow(k: u32, r: f64, start: u32) -> Result<f64> {
    check_r(r)?;
    if start == 0 {
        return Err(RadiiError::domain(Param::R, "summation starts at n = 1"));
    }
    let s = 1.0 - r;
    let full = match k {
        0 => 1.0 / s,
        1 => 1.0 / (s * s),
        2 => (1.0 + r) / (s * s * s),
        3 => (1.0 + r * (4.0 + r)) / (s * s * s * s),
        _ => {
            return Err(RadiiError::domain(
                Param::R,
                format!("power k = {k} has no closed form here (0..=3)"),
            ))
        }
    };
    let head: f64 = (1..start)
        .map(|n| f64::from(n).powi(k as i32) * r.powi(n as i32 - 1))
        .sum();
    Ok(full - head)
}

fn check_common(r: f64, alpha: f64, b: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&r) {
        return Err(RadiiError::domain(
            Param::R,
            format!("r must lie in [0, 1], got {r}"),
        ));
    }
    check_alpha(alpha)?;
    check_b(b)
}

fn starlike_bound_n(r: f64, a: f64, b: f64) -> f64 {
    let s = 1.0 - r;
    2.0 * (1.0 - a + (2.0 - a) * (1.0 - b) * r) * s * s * s - (1.0 - a) - (1.0 + a) * r
}

fn starlike_bound_m(r: f64, a: f64, b: f64, m: f64) -> f64 {
    let s = 1.0 - r;
    ((1.0 + m) * (1.0 - a) - (2.0 - a) * (2.0 * b - m) * r) * s * s - m * (1.0 - a + a * r)
}

fn starlike_bound_m_over_n(r: f64, a: f64, b: f64, m: f64) -> f64 {
    let s = 1.0 - r;
    (2.0 * (1.0 + m) * (1.0 - a) + (2.0 - a) * (m - 4.0 * b) * r) * s
        - 2.0 * m * (1.0 + a * one_minus_r_log_over_r(r))
}

fn convex_bound_n(r: f64, a: f64, b: f64) -> f64 {
    let s = 1.0 - r;
    let s2 = s * s;
    2.0 * (1.0 - a + 2.0 * (2.0 - a) * (1.0 - b) * r) * s2 * s2
        - (1.0 - a)
        - 4.0 * r
        - (1.0 + a) * r * r
}

fn convex_bound_m(r: f64, a: f64, b: f64, m: f64) -> f64 {
    let s = 1.0 - r;
    ((1.0 - a) * (1.0 + m) - 2.0 * (2.0 - a) * (2.0 * b - m) * r) * s * s * s
        - m * (1.0 - a + (1.0 + a) * r)
}

/// `(1 - r) ln(1 - r) / r`, continuous at `r = 0` with value `-1`.
pub fn one_minus_r_log_over_r(r: f64) -> f64 {
    if r < LOG_SERIES_CROSSOVER {
        -(1.0 - r) * (1.0 + r * (0.5 + r * (1.0 / 3.0 + r * (0.25 + r * 0.2))))
    } else {
        (1.0 - r) * (-r).ln_1p() / r
    }
}

/// `2(1-α+(2-α)(1-b)r)(1-r)^3 - (1-α) - (1+α)r`, coefficients `|a_n| <= n`.
pub fn g_starlike_bound_n(r: f64, alpha: f64, b: f64) -> Result<f64> {
    check_common(r, alpha, b)?;
    Ok(starlike_bound_n(r, alpha, b))
}

/// `((1+M)(1-α) - (2-α)(2b-M)r)(1-r)^2 - M(1-α+αr)`, coefficients `|a_n| <= M`.
pub fn g_starlike_bound_m(r: f64, alpha: f64, b: f64, m: f64) -> Result<f64> {
    check_common(r, alpha, b)?;
    check_m(m)?;
    Ok(starlike_bound_m(r, alpha, b, m))
}

/// `(2(1+M)(1-α) + (2-α)(M-4b)r)(1-r) - 2M(1 + α(1-r)ln(1-r)/r)`,
/// coefficients `|a_n| <= M/n`. Requires `r < 1`.
pub fn g_starlike_bound_m_over_n(r: f64, alpha: f64, b: f64, m: f64) -> Result<f64> {
    check_r(r)?;
    check_common(r, alpha, b)?;
    check_m(m)?;
    Ok(starlike_bound_m_over_n(r, alpha, b, m))
}

/// `2(1-α+2(2-α)(1-b)r)(1-r)^4 - (1-α) - 4r - (1+α)r^2`.
pub fn g_convex_bound_n(r: f64, alpha: f64, b: f64) -> Result<f64> {
    check_common(r, alpha, b)?;
    Ok(convex_bound_n(r, alpha, b))
}

/// `((1-α)(1+M) - 2(2-α)(2b-M)r)(1-r)^3 - M(1-α+(1+α)r)`.
pub fn g_convex_bound_m(r: f64, alpha: f64, b: f64, m: f64) -> Result<f64> {
    check_common(r, alpha, b)?;
    check_m(m)?;
    Ok(convex_bound_m(r, alpha, b, m))
}

/// Radius on which `|p(z) - 1| <= 1 - α` for `p = 1 + c_1 z + ...` with
/// `|c_1| = 2b` and `|c_n| <= 2M` beyond. It is the positive root of
/// `2(M-b) r^2 + (1-α+2b) r - (1-α) = 0`, written in the cancellation-free
/// form `2(1-α) / (1-α+2b + sqrt(disc))`.
pub fn caratheodory_radius(alpha: f64, b: f64, m: f64) -> Result<f64> {
    check_alpha(alpha)?;
    check_b(b)?;
    check_m(m)?;
    let c = 1.0 - alpha;
    let lin = c + 2.0 * b;
    let disc = lin * lin + 8.0 * c * (m - b);
    if disc < 0.0 {
        return Err(RadiiError::domain(
            Param::M,
            format!("negative discriminant {disc} for alpha={alpha}, b={b}, M={m}"),
        ));
    }
    Ok(2.0 * c / (lin + disc.sqrt()))
}

/// `(1-α) - 2br - 2Mr^2/(1-r)`: how far `|p(r) - 1|` stays below `1 - α`
/// for the worst-case Carathéodory coefficients.
pub fn caratheodory_margin(alpha: f64, b: f64, m: f64, r: f64) -> Result<f64> {
    check_alpha(alpha)?;
    check_b(b)?;
    check_m(m)?;
    check_r(r)?;
    Ok((1.0 - alpha) - 2.0 * b * r - 2.0 * m * r * r / (1.0 - r))
}

/// `Σ_{n≥3} r^{n-1} / n = (-ln(1-r) - r - r^2/2) / r`.
fn reciprocal_tail(r: f64) -> f64 {
    if r == 0.0 {
        return 0.0;
    }
    (-(-r).ln_1p() - r - 0.5 * r * r) / r
}

/// `(1-α) - Σ_{n≥2} (n-α)|a_n| r^{n-1}` with every `|a_n|` at its bound.
pub fn sufficiency_margin_starlike(class: &ClassSpec, alpha: f64, r: f64) -> Result<f64> {
    class.validate()?;
    check_alpha(alpha)?;
    check_r(r)?;
    let second = 2.0 * (2.0 - alpha) * class.b * r;
    let tail = match class.family {
        Family::BoundByN => sum_n_pow(2, r, 3)? - alpha * sum_n_pow(1, r, 3)?,
        Family::BoundByM => class.m_or_zero() * (sum_n_pow(1, r, 3)? - alpha * sum_n_pow(0, r, 3)?),
        Family::BoundByMOverN => {
            class.m_or_zero() * (sum_n_pow(0, r, 3)? - alpha * reciprocal_tail(r))
        }
        Family::Caratheodory => {
            return Err(RadiiError::UnsupportedClass(
                "starlikeness margin is not defined for Carathéodory functions".into(),
            ))
        }
    };
    Ok((1.0 - alpha) - (second + tail))
}

/// `(1-α) - Σ_{n≥2} n(n-α)|a_n| r^{n-1}` with every `|a_n|` at its bound.
pub fn sufficiency_margin_convex(class: &ClassSpec, alpha: f64, r: f64) -> Result<f64> {
    class.validate()?;
    check_alpha(alpha)?;
    check_r(r)?;
    let second = 4.0 * (2.0 - alpha) * class.b * r;
    let tail = match class.family {
        Family::BoundByN => sum_n_pow(3, r, 3)? - alpha * sum_n_pow(2, r, 3)?,
        Family::BoundByM => class.m_or_zero() * (sum_n_pow(2, r, 3)? - alpha * sum_n_pow(1, r, 3)?),
        Family::BoundByMOverN => {
            return Err(RadiiError::UnsupportedClass(
                "convexity for |a_n| <= M/n is solved through the derivative reduction".into(),
            ))
        }
        Family::Caratheodory => {
            return Err(RadiiError::UnsupportedClass(
                "convexity margin is not defined for Carathéodory functions".into(),
            ))
        }
    };
    Ok((1.0 - alpha) - (second + tail))
}
