//! Closed-form extremal functions and their truncated Taylor series.
//!
//! Each coefficient class has an extremal member whose coefficients sit on
//! the bound with every sign beyond the first negative:
//!
//! | form | function | coefficients |
//! |------|----------|--------------|
//! | `StarBoundN` | `2z + 2(1-b)z^2 - z/(1-z)^2` | `1, -2b, -3, -4, ...` |
//! | `BoundM` | `z - 2bz^2 - Mz^3/(1-z)` | `1, -2b, -M, -M, ...` |
//! | `BoundMOverN` | `(1+M)z + (M/2-2b)z^2 + M log(1-z)` | `1, -2b, -M/3, -M/4, ...` |
//! | `CaratheodoryP0` | `1 - 2bz - 2Mz^2/(1-z)` | `1, -2b, -2M, -2M, ...` |
//!
//! Derivatives are hand-derived closed forms. The logarithm is the principal
//! branch, which is single valued on the disk since `Re(1 - z) > 0` there.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Param, RadiiError, Result};
use crate::problem::{ClassSpec, Family};

/// Denominators below this modulus are treated as zero.
pub const POLE_THRESHOLD: f64 = 1e-300;
/// `eval_truncated` refuses points closer than this to the unit circle.
pub const TRUNCATION_MARGIN: f64 = 1e-6;
/// Below this modulus `log(1 - z) / z` is evaluated from its series.
const LOG_SERIES_CROSSOVER: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremalForm {
    StarBoundN,
    BoundM,
    BoundMOverN,
    CaratheodoryP0,
}

/// A point of the open unit disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexPoint(Complex64);

impl ComplexPoint {
    pub fn new(re: f64, im: f64) -> Result<Self> {
        Self::from_complex(Complex64::new(re, im))
    }

    pub fn from_complex(z: Complex64) -> Result<Self> {
        if z.norm_sqr() < 1.0 {
            Ok(ComplexPoint(z))
        } else {
            Err(RadiiError::domain(
                Param::Z,
                format!("z = {z} is not inside the unit disk"),
            ))
        }
    }

    pub fn from_polar(r: f64, theta: f64) -> Result<Self> {
        Self::from_complex(Complex64::from_polar(r, theta))
    }

    pub fn real(x: f64) -> Result<Self> {
        Self::new(x, 0.0)
    }

    pub fn value(self) -> Complex64 {
        self.0
    }

    pub fn re(self) -> f64 {
        self.0.re
    }

    pub fn im(self) -> f64 {
        self.0.im
    }
}

/// A partial sum together with a rigorous bound on the neglected tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Truncated {
    pub value: Complex64,
    pub tail_bound: f64,
}

/// The extremal function of a coefficient class.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremalFunction {
    pub class: ClassSpec,
    pub form: ExtremalForm,
}

fn guard(denominator: Complex64, z: Complex64) -> Result<Complex64> {
    if denominator.norm() < POLE_THRESHOLD || !denominator.is_finite() {
        Err(RadiiError::Pole { re: z.re, im: z.im })
    } else {
        Ok(denominator)
    }
}

/// `log(1 - z)` without cancellation for small `z`.
fn log_one_minus(z: Complex64) -> Complex64 {
    let re = 0.5 * (z.norm_sqr() - 2.0 * z.re).ln_1p();
    let im = (-z.im).atan2(1.0 - z.re);
    Complex64::new(re, im)
}

/// `log(1 - z) / z`, equal to `-1` at the origin.
fn log_one_minus_over_z(z: Complex64) -> Complex64 {
    if z.norm() < LOG_SERIES_CROSSOVER {
        let one = Complex64::new(1.0, 0.0);
        -(one + z * (0.5 + z * (1.0 / 3.0 + z * (0.25 + z * 0.2))))
    } else {
        log_one_minus(z) / z
    }
}

impl ExtremalFunction {
    pub fn new(class: ClassSpec) -> Result<Self> {
        class.validate()?;
        let form = match class.family {
            Family::BoundByN => ExtremalForm::StarBoundN,
            Family::BoundByM => ExtremalForm::BoundM,
            Family::BoundByMOverN => ExtremalForm::BoundMOverN,
            Family::Caratheodory => ExtremalForm::CaratheodoryP0,
        };
        Ok(ExtremalFunction { class, form })
    }

    fn b(&self) -> f64 {
        self.class.b
    }

    fn m(&self) -> f64 {
        self.class.m_or_zero()
    }

    /// The `n`-th Taylor coefficient, `n >= 1`. For the Carathéodory form
    /// the series starts at the constant term, so `coefficient(n)` is the
    /// coefficient of `z^{n-1}`.
    pub fn coefficient(&self, n: u32) -> f64 {
        let (b, m) = (self.b(), self.m());
        match n {
            0 => 0.0,
            1 => 1.0,
            2 => -2.0 * b,
            _ => match self.form {
                ExtremalForm::StarBoundN => -f64::from(n),
                ExtremalForm::BoundM => -m,
                ExtremalForm::BoundMOverN => -m / f64::from(n),
                ExtremalForm::CaratheodoryP0 => -2.0 * m,
            },
        }
    }

    /// Power of `z` that multiplies `coefficient(n)`.
    fn power_of(&self, n: u32) -> u32 {
        match self.form {
            ExtremalForm::CaratheodoryP0 => n - 1,
            _ => n,
        }
    }

    /// `f(z) / z` for the normalised forms, `p(z)` for the Carathéodory form.
    fn reduced(&self, z: Complex64) -> Complex64 {
        let (b, m) = (self.b(), self.m());
        let one = Complex64::new(1.0, 0.0);
        let w = one - z;
        match self.form {
            ExtremalForm::StarBoundN => 2.0 + 2.0 * (1.0 - b) * z - one / (w * w),
            ExtremalForm::BoundM => one - 2.0 * b * z - m * z * z / w,
            ExtremalForm::BoundMOverN => {
                (1.0 + m) + (0.5 * m - 2.0 * b) * z + m * log_one_minus_over_z(z)
            }
            ExtremalForm::CaratheodoryP0 => one - 2.0 * b * z - 2.0 * m * z * z / w,
        }
    }

    pub fn eval(&self, z: ComplexPoint) -> Complex64 {
        let z = z.value();
        match self.form {
            ExtremalForm::CaratheodoryP0 => self.reduced(z),
            ExtremalForm::BoundMOverN => {
                let (b, m) = (self.b(), self.m());
                (1.0 + m) * z + (0.5 * m - 2.0 * b) * z * z + m * log_one_minus(z)
            }
            _ => z * self.reduced(z),
        }
    }

    pub fn eval_d1(&self, z: ComplexPoint) -> Complex64 {
        let z = z.value();
        let (b, m) = (self.b(), self.m());
        let w = Complex64::new(1.0, 0.0) - z;
        match self.form {
            ExtremalForm::StarBoundN => 2.0 + 4.0 * (1.0 - b) * z - (1.0 + z) / (w * w * w),
            ExtremalForm::BoundM => 1.0 - 4.0 * b * z - m * z * z * (3.0 - 2.0 * z) / (w * w),
            ExtremalForm::BoundMOverN => (1.0 + m) + (m - 4.0 * b) * z - m / w,
            ExtremalForm::CaratheodoryP0 => -2.0 * b - 2.0 * m * z * (2.0 - z) / (w * w),
        }
    }

    pub fn eval_d2(&self, z: ComplexPoint) -> Complex64 {
        let z = z.value();
        let (b, m) = (self.b(), self.m());
        let w = Complex64::new(1.0, 0.0) - z;
        match self.form {
            ExtremalForm::StarBoundN => {
                let w2 = w * w;
                4.0 * (1.0 - b) - (4.0 + 2.0 * z) / (w2 * w2)
            }
            ExtremalForm::BoundM => -4.0 * b - m * z * (6.0 - 6.0 * z + 2.0 * z * z) / (w * w * w),
            ExtremalForm::BoundMOverN => (m - 4.0 * b) - m / (w * w),
            ExtremalForm::CaratheodoryP0 => -4.0 * m / (w * w * w),
        }
    }

    /// `z f'(z) / f(z)`, computed as `f'(z) / (f(z)/z)` so that it is defined
    /// at the origin. For the Carathéodory form the tested quantity is `p(z)`
    /// itself and that is what is returned.
    pub fn star_quotient(&self, z: ComplexPoint) -> Result<Complex64> {
        let zv = z.value();
        match self.form {
            ExtremalForm::CaratheodoryP0 => Ok(self.reduced(zv)),
            _ => {
                let den = guard(self.reduced(zv), zv)?;
                Ok(self.eval_d1(z) / den)
            }
        }
    }

    /// `1 + z f''(z) / f'(z)`. For the Carathéodory form this is `p(z)`,
    /// matching [`star_quotient`](Self::star_quotient).
    pub fn convex_quotient(&self, z: ComplexPoint) -> Result<Complex64> {
        let zv = z.value();
        match self.form {
            ExtremalForm::CaratheodoryP0 => Ok(self.reduced(zv)),
            _ => {
                let den = guard(self.eval_d1(z), zv)?;
                Ok(1.0 + zv * self.eval_d2(z) / den)
            }
        }
    }

    /// `|a_n| <= scale * n^growth` for every `n > n_terms`.
    fn coefficient_envelope(&self, n_terms: u32) -> (f64, i32) {
        let m = self.m();
        match self.form {
            ExtremalForm::StarBoundN => (1.0, 1),
            ExtremalForm::BoundM => (m, 0),
            ExtremalForm::BoundMOverN => (m / f64::from(n_terms.max(2) + 1), 0),
            ExtremalForm::CaratheodoryP0 => (2.0 * m, 0),
        }
    }

    /// Partial sum of the `order`-th derivative series over coefficients
    /// `1..=n_terms`, with a geometric bound on the rest.
    pub fn eval_truncated_derivative(
        &self,
        z: ComplexPoint,
        n_terms: u32,
        order: u32,
    ) -> Result<Truncated> {
        let zv = z.value();
        let rho = zv.norm();
        if rho > 1.0 - TRUNCATION_MARGIN {
            return Err(RadiiError::domain(
                Param::Z,
                format!("|z| = {rho} is too close to the unit circle for a truncated series"),
            ));
        }
        if order > 2 {
            return Err(RadiiError::domain(
                Param::Z,
                format!("derivative order {order} is not supported"),
            ));
        }

        let falling = |p: u32| -> f64 { (0..order).map(|i| f64::from(p) - f64::from(i)).product() };
        let mut value = Complex64::new(0.0, 0.0);
        for n in (1..=n_terms).rev() {
            let p = self.power_of(n);
            if p < order {
                continue;
            }
            let c = self.coefficient(n) * falling(p);
            value += c * zv.powu(p - order);
        }

        // Beyond the last term: |coefficient(n)| <= scale * n^growth and the
        // derivative adds a factor p^order, so each term is at most
        // scale * n^(growth+order) * rho^(p-order), with ratio q below.
        let (scale, growth) = self.coefficient_envelope(n_terms);
        let degree = growth + order as i32;
        let first = n_terms + 1;
        let q = rho * (f64::from(first + 1) / f64::from(first)).powi(degree);
        let tail_bound = if scale == 0.0 {
            0.0
        } else if q < 1.0 {
            let p = self.power_of(first);
            scale * f64::from(first).powi(degree) * rho.powi((p - order) as i32) / (1.0 - q)
        } else {
            f64::INFINITY
        };
        Ok(Truncated { value, tail_bound })
    }

    /// Partial sum `Σ_{n=1}^{n_terms} coefficient(n) z^{power(n)}` and its
    /// tail bound.
    pub fn eval_truncated(&self, z: ComplexPoint, n_terms: u32) -> Result<Truncated> {
        self.eval_truncated_derivative(z, n_terms, 0)
    }
}

/// Uniform angle grid on `[0, 2π)`.
pub fn angle(k: usize, samples: usize) -> f64 {
    2.0 * PI * k as f64 / samples as f64
}
