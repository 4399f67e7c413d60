//! Bracketed root finding on `(0, 1)` and dispatch from a [`RadiusQuery`]
//! to the equation that answers it.

use crate::equations::{caratheodory_margin, caratheodory_radius, DefiningFunction, EquationId};
use crate::error::{Param, RadiiError, Result};
use crate::problem::{ClassSpec, Family, RadiusKind, RadiusQuery, RadiusResult};

/// Scan interval is `[SCAN_EPSILON, 1 - SCAN_EPSILON]`.
pub const SCAN_EPSILON: f64 = 1e-12;
/// Number of geometrically spaced scan points.
pub const SCAN_POINTS: usize = 64;

/// An interval on which a function changes sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
    pub g_lo: f64,
    pub g_hi: f64,
}

impl Bracket {
    /// Evaluates `g` at both ends and checks for a sign change.
    pub fn new<F: Fn(f64) -> f64>(g: F, lo: f64, hi: f64) -> Result<Self> {
        if lo.partial_cmp(&hi) != Some(std::cmp::Ordering::Less) {
            return Err(RadiiError::domain(
                Param::R,
                format!("bracket [{lo}, {hi}] is empty"),
            ));
        }
        let (g_lo, g_hi) = (g(lo), g(hi));
        // a NaN product is not a sign change
        if (g_lo * g_hi).is_nan() || g_lo * g_hi > 0.0 {
            return Err(RadiiError::NoRoot);
        }
        Ok(Bracket { lo, hi, g_lo, g_hi })
    }

    pub fn contains(&self, r: f64) -> bool {
        self.lo <= r && r <= self.hi
    }
}

fn scan_points() -> impl Iterator<Item = f64> {
    let ratio = ((1.0 - SCAN_EPSILON) / SCAN_EPSILON).powf(1.0 / (SCAN_POINTS - 1) as f64);
    (0..SCAN_POINTS).map(move |i| {
        if i == SCAN_POINTS - 1 {
            1.0 - SCAN_EPSILON
        } else {
            SCAN_EPSILON * ratio.powi(i as i32)
        }
    })
}

/// Locates the single sign change of `g` on `(0, 1)` by a geometric scan.
///
/// Points cluster near the origin, where every radius of interest lives.
/// More than one sign change is an error rather than a choice of root.
pub fn bracket_root<F: Fn(f64) -> f64>(g: F) -> Result<Bracket> {
    let samples: Vec<(f64, f64)> = scan_points().map(|r| (r, g(r))).collect();
    if let Some(&(r, _)) = samples.iter().find(|(_, v)| !v.is_finite()) {
        return Err(RadiiError::domain(
            Param::R,
            format!("defining function is not finite at r = {r}"),
        ));
    }
    let changes: Vec<Bracket> = samples
        .windows(2)
        .filter(|w| (w[0].1 >= 0.0) != (w[1].1 >= 0.0))
        .map(|w| Bracket {
            lo: w[0].0,
            hi: w[1].0,
            g_lo: w[0].1,
            g_hi: w[1].1,
        })
        .collect();
    match changes.as_slice() {
        [] => Err(RadiiError::NoRoot),
        [single] => Ok(*single),
        many => Err(RadiiError::MultipleRoots { count: many.len() }),
    }
}

/// Brent's method: inverse quadratic and secant steps kept only while they
/// stay inside the bracket and shrink it fast enough, bisection otherwise.
///
/// Stops once the bracket is narrower than `tol` and `|g| <= tol`.
pub fn refine<F: Fn(f64) -> f64>(
    g: F,
    bracket: Bracket,
    tol: f64,
    max_iter: usize,
    equation_id: &str,
) -> Result<RadiusResult> {
    let done = |r: f64, residual: f64, iterations: usize| {
        Ok(RadiusResult {
            radius: r,
            residual,
            iterations,
            equation_id: equation_id.to_string(),
        })
    };
    if bracket.g_lo == 0.0 {
        return done(bracket.lo, 0.0, 0);
    }
    if bracket.g_hi == 0.0 {
        return done(bracket.hi, 0.0, 0);
    }

    let (mut a, mut b) = (bracket.lo, bracket.hi);
    let (mut fa, mut fb) = (bracket.g_lo, bracket.g_hi);
    let (mut c, mut fc) = (b, fb);
    let mut d = b - a;
    let mut e = d;
    let mut xtol = tol;

    for iter in 1..=max_iter {
        if (fb > 0.0) == (fc > 0.0) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let xm = 0.5 * (c - b);
        let mut tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * xtol;
        if (xm.abs() <= tol1 || fb == 0.0) && fb.abs() <= tol {
            return done(b, fb, iter);
        }
        // bracket is tight but the residual is not: a steep g needs finer steps
        while xm.abs() <= tol1 && xtol > f64::EPSILON * f64::EPSILON {
            xtol *= 1e-3;
            tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * xtol;
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                let qa = fa / fc;
                let rb = fb / fc;
                p = s * (2.0 * xm * qa * (qa - rb) - (b - a) * (rb - 1.0));
                q = (qa - 1.0) * (rb - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            let min1 = 3.0 * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if 2.0 * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol1 { d } else { tol1.copysign(xm) };
        fb = g(b);
        if !fb.is_finite() {
            return Err(RadiiError::domain(
                Param::R,
                format!("defining function is not finite at r = {b}"),
            ));
        }
    }
    Err(RadiiError::NonConvergence {
        max_iter,
        estimate: b,
    })
}

fn solve_equation(
    query: &RadiusQuery,
    id: EquationId,
    alpha: f64,
    b: f64,
    m: Option<f64>,
    equation_id: &str,
) -> Result<RadiusResult> {
    let g = DefiningFunction::new(id, alpha, b, m)?;
    let f = |r: f64| g.evaluate(r);
    let bracket = bracket_root(f)?;
    refine(
        f,
        bracket,
        query.tolerance,
        query.max_iterations,
        equation_id,
    )
}

/// Computes the radius a query asks for.
pub fn solve_radius(query: &RadiusQuery) -> Result<RadiusResult> {
    query.validate()?;
    let ClassSpec { family, b, m } = query.class;
    let alpha = query.kind.alpha();
    match (family, query.kind.normalized()) {
        (Family::BoundByN, RadiusKind::StarlikeOrder(_)) => solve_equation(
            query,
            EquationId::StarlikeBoundN,
            alpha,
            b,
            m,
            EquationId::StarlikeBoundN.tag(),
        ),
        (Family::BoundByM, RadiusKind::StarlikeOrder(_)) => solve_equation(
            query,
            EquationId::StarlikeBoundM,
            alpha,
            b,
            m,
            EquationId::StarlikeBoundM.tag(),
        ),
        (Family::BoundByMOverN, RadiusKind::StarlikeOrder(_)) => solve_equation(
            query,
            EquationId::StarlikeBoundMOverN,
            alpha,
            b,
            m,
            EquationId::StarlikeBoundMOverN.tag(),
        ),
        (Family::BoundByN, RadiusKind::ConvexOrder(_)) => solve_equation(
            query,
            EquationId::ConvexBoundN,
            alpha,
            b,
            m,
            EquationId::ConvexBoundN.tag(),
        ),
        (Family::BoundByM, RadiusKind::ConvexOrder(_)) => solve_equation(
            query,
            EquationId::ConvexBoundM,
            alpha,
            b,
            m,
            EquationId::ConvexBoundM.tag(),
        ),
        // f is convex of order α exactly when z f' is starlike of order α;
        // z f' has |n a_n| <= M and second coefficient 2 a_2.
        (Family::BoundByMOverN, RadiusKind::ConvexOrder(_)) => {
            if 2.0 * b > 1.0 {
                return Err(RadiiError::domain(
                    Param::B,
                    format!("convexity for |a_n| <= M/n needs 2b <= 1, got b = {b}"),
                ));
            }
            solve_equation(
                query,
                EquationId::StarlikeBoundM,
                alpha,
                2.0 * b,
                m,
                REDUCED_CONVEX_M_OVER_N,
            )
        }
        (Family::Caratheodory, RadiusKind::PositiveRealPartOrder(_)) => {
            let m = query.class.m_or_zero();
            let radius = caratheodory_radius(alpha, b, m)?;
            let residual = if radius < 1.0 {
                caratheodory_margin(alpha, b, m, radius)?
            } else {
                0.0
            };
            Ok(RadiusResult {
                radius,
                residual,
                iterations: 0,
                equation_id: CARATHEODORY_CLOSED_FORM.to_string(),
            })
        }
        // validate() rules out every other pairing
        (family, kind) => Err(RadiiError::domain(
            Param::Kind,
            format!(
                "kind `{}` cannot be combined with class `{family}`",
                kind.label()
            ),
        )),
    }
}

/// Equation tag for convexity under `|a_n| <= M/n`.
pub const REDUCED_CONVEX_M_OVER_N: &str = "convex/bound-m-over-n=starlike/bound-m(2b)";
/// Equation tag for the Carathéodory closed form.
pub const CARATHEODORY_CLOSED_FORM: &str = "positive-real/caratheodory";

/// Radii that have closed forms in radicals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Radical {
    /// Starlikeness, `|a_n| <= n` for all `n >= 2`: the real root of
    /// `2(1-r)^3 = 1 + r`.
    StarlikeUnrestricted,
    /// Order 1/2 (parabolic) starlikeness, `|a_n| <= n` for all `n >= 2`.
    ParabolicUnrestricted,
    /// Order 1/2 starlikeness with `a_2 = 0`: `1 - 2^{-1/3}`.
    ParabolicVanishingSecond,
    /// Starlikeness for `|a_n| <= M` from `n = 2` on: `1 - sqrt(M/(1+M))`.
    BoundedCoefficients(f64),
}

impl Radical {
    pub fn value(self) -> f64 {
        match self {
            Radical::StarlikeUnrestricted => {
                let s = 330f64.sqrt();
                1.0 + ((s - 18.0).cbrt() - (s + 18.0).cbrt()) / 6f64.powf(2.0 / 3.0)
            }
            Radical::ParabolicUnrestricted => {
                let t = 2.0 * 2f64.sqrt();
                1.0 + ((3.0 - t).cbrt() - (3.0 + t).cbrt()) / 2f64.sqrt()
            }
            Radical::ParabolicVanishingSecond => 1.0 - 0.5f64.cbrt(),
            Radical::BoundedCoefficients(m) => 1.0 - (m / (1.0 + m)).sqrt(),
        }
    }

    /// The query whose numeric root this radical equals.
    pub fn query(self) -> RadiusQuery {
        match self {
            Radical::StarlikeUnrestricted => {
                RadiusQuery::new(ClassSpec::bound_by_n(1.0), RadiusKind::StarlikeOrder(0.0))
            }
            Radical::ParabolicUnrestricted => {
                RadiusQuery::new(ClassSpec::bound_by_n(1.0), RadiusKind::ParabolicStarlike)
            }
            Radical::ParabolicVanishingSecond => {
                RadiusQuery::new(ClassSpec::bound_by_n(0.0), RadiusKind::ParabolicStarlike)
            }
            // |a_2| <= M written as |a_2| = 2b with b = M/2
            Radical::BoundedCoefficients(m) => RadiusQuery::new(
                ClassSpec::bound_by_m(m / 2.0, m),
                RadiusKind::StarlikeOrder(0.0),
            ),
        }
    }
}

pub fn closed_form_radical(id: Radical) -> f64 {
    id.value()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equations::{g_convex_bound_n, g_starlike_bound_n};

    fn query(class: ClassSpec, kind: RadiusKind) -> RadiusQuery {
        RadiusQuery::new(class, kind)
    }

    #[test]
    fn bracket_contains_known_roots() {
        let g = |r: f64| g_starlike_bound_n(r, 0.0, 1.0).unwrap();
        let br = bracket_root(g).unwrap();
        assert!(br.contains(0.164878), "{br:?}");
        assert!(br.g_lo > 0.0 && br.g_hi < 0.0);

        let g = |r: f64| g_convex_bound_n(r, 0.5, 0.0).unwrap();
        assert!(bracket_root(g).unwrap().contains(0.125429));
    }

    #[test]
    fn bracket_errors() {
        assert_eq!(bracket_root(|_| 1.0), Err(RadiiError::NoRoot));
        // sign changes at 0.1 and 0.5
        let two = |r: f64| (r - 0.1) * (r - 0.5);
        assert_eq!(
            bracket_root(two),
            Err(RadiiError::MultipleRoots { count: 2 })
        );
        assert!(bracket_root(|_| f64::NAN).is_err());
    }

    #[test]
    fn refine_examples() {
        let g = |r: f64| g_starlike_bound_n(r, 0.5, 0.0).unwrap();
        let res = refine(g, bracket_root(g).unwrap(), 1e-12, 200, "t").unwrap();
        assert!((res.radius - (1.0 - 0.5f64.cbrt())).abs() < 1e-12);
        assert!((res.radius - 0.206299).abs() < 1e-6);

        let g = |r: f64| g_starlike_bound_n(r, 0.0, 0.0).unwrap();
        let res = refine(g, bracket_root(g).unwrap(), 1e-12, 200, "t").unwrap();
        assert!((res.radius - 0.253571).abs() < 1e-5);

        let linear = |r: f64| 0.5 - r;
        let res = refine(
            linear,
            Bracket::new(linear, 0.0, 1.0).unwrap(),
            1e-12,
            200,
            "t",
        )
        .unwrap();
        assert!((res.radius - 0.5).abs() <= 1e-12);
    }

    #[test]
    fn refine_reports_non_convergence() {
        let g = |r: f64| 0.3 - r * r * r;
        let err = refine(g, Bracket::new(g, 0.0, 1.0).unwrap(), 1e-13, 2, "t").unwrap_err();
        assert!(matches!(
            err,
            RadiiError::NonConvergence { max_iter: 2, .. }
        ));
    }

    #[test]
    fn refine_survives_rejected_interpolation() {
        // flat on most of the bracket: interpolation overshoots, bisection rescues
        let g = |r: f64| {
            if r < 0.7 {
                1e-4 + (0.7 - r).powi(3)
            } else {
                0.7001 - r
            }
        };
        let res = refine(g, Bracket::new(g, 0.0, 0.99).unwrap(), 1e-12, 200, "t").unwrap();
        assert!((res.radius - 0.7001).abs() < 1e-12);
        assert!(res.iterations < 200);
    }

    #[test]
    fn bracket_new_rejects_same_sign() {
        assert_eq!(
            Bracket::new(|r: f64| r + 1.0, 0.0, 0.5),
            Err(RadiiError::NoRoot)
        );
    }

    #[test]
    fn named_kinds_match_order_half() {
        let res = solve_radius(&query(
            ClassSpec::bound_by_n(1.0),
            RadiusKind::ParabolicStarlike,
        ))
        .unwrap();
        assert!((res.radius - 0.120385).abs() < 1e-5);
        let res = solve_radius(&query(
            ClassSpec::bound_by_n(1.0),
            RadiusKind::UniformlyConvex,
        ))
        .unwrap();
        assert!((res.radius - 0.064723).abs() < 1e-5);
        let half = solve_radius(&query(
            ClassSpec::bound_by_n(1.0),
            RadiusKind::ConvexOrder(0.5),
        ))
        .unwrap();
        assert_eq!(res.radius, half.radius);
    }

    #[test]
    fn convex_m_over_n_reduces_to_starlike_m() {
        let reduced = solve_radius(&query(
            ClassSpec::bound_by_m_over_n(0.25, 1.0),
            RadiusKind::ConvexOrder(0.0),
        ))
        .unwrap();
        let direct = solve_radius(&query(
            ClassSpec::bound_by_m(0.5, 1.0),
            RadiusKind::StarlikeOrder(0.0),
        ))
        .unwrap();
        assert_eq!(reduced.radius, direct.radius);
        assert_eq!(reduced.equation_id, REDUCED_CONVEX_M_OVER_N);

        // direct series Σ n(n-α)(M/n) r^{n-1} with b = 0.25, M = 1, α = 0
        let margin = |r: f64| {
            1.0 - 4.0 * 2.0 * 0.25 * r
                - (3..5_000)
                    .rev()
                    .map(|n| f64::from(n) * r.powi(n - 1))
                    .sum::<f64>()
        };
        assert!(margin(reduced.radius).abs() < 1e-11);
    }

    #[test]
    fn convex_m_over_n_rejects_large_b() {
        let err = solve_radius(&query(
            ClassSpec::bound_by_m_over_n(0.6, 1.0),
            RadiusKind::ConvexOrder(0.0),
        ))
        .unwrap_err();
        assert!(matches!(
            err,
            RadiiError::Domain {
                param: Param::B,
                ..
            }
        ));
    }

    #[test]
    fn caratheodory_dispatch() {
        let res = solve_radius(&query(
            ClassSpec::caratheodory(0.0, 1.0),
            RadiusKind::PositiveRealPartOrder(0.0),
        ))
        .unwrap();
        assert!((res.radius - 0.5).abs() < 1e-15);
        assert_eq!(res.iterations, 0);
        assert!(res.residual.abs() < 1e-15);
    }

    #[test]
    fn radicals_match_numeric_roots() {
        let radicals = [
            Radical::StarlikeUnrestricted,
            Radical::ParabolicUnrestricted,
            Radical::ParabolicVanishingSecond,
            Radical::BoundedCoefficients(0.5),
            Radical::BoundedCoefficients(1.0),
            Radical::BoundedCoefficients(2.0),
        ];
        for radical in radicals {
            let numeric = solve_radius(&radical.query()).unwrap().radius;
            let closed = closed_form_radical(radical);
            assert!(
                (numeric - closed).abs() <= 1e-12,
                "{radical:?}: {numeric} vs {closed}"
            );
        }
        assert!((Radical::StarlikeUnrestricted.value() - 0.164878).abs() < 1e-6);
        assert!((Radical::ParabolicVanishingSecond.value() - 0.206299).abs() < 1e-6);
        assert!((Radical::BoundedCoefficients(1.0).value() - 0.292893).abs() < 1e-6);
    }

    #[test]
    fn solve_is_deterministic() {
        let q = query(
            ClassSpec::bound_by_m_over_n(0.3, 2.0),
            RadiusKind::StarlikeOrder(0.35),
        );
        let a = solve_radius(&q).unwrap();
        let b = solve_radius(&q).unwrap();
        assert_eq!(a.radius.to_bits(), b.radius.to_bits());
        assert_eq!(a, b);
    }
}
