//! Sharp radii of starlikeness, convexity, parabolic starlikeness and
//! uniform convexity for normalized analytic functions
//! `f(z) = z + a_2 z^2 + ...` whose coefficients obey `|a_2| = 2b` and
//! `|a_n| <= n`, `M` or `M/n` for `n >= 3`, and the radius of
//! `Re p > α` for `p(z) = 1 + c_1 z + ...` with `|c_1| = 2b`, `|c_n| <= 2M`.
//!
//! ```
//! use univalent_radii::problem::{ClassSpec, RadiusKind, RadiusQuery};
//! use univalent_radii::solver::solve_radius;
//!
//! let query = RadiusQuery::new(ClassSpec::bound_by_n(1.0), RadiusKind::StarlikeOrder(0.0));
//! let r0 = solve_radius(&query).unwrap().radius;
//! assert!((r0 - 0.164878).abs() < 1e-6);
//! ```

pub mod cli;
pub mod equations;
pub mod error;
pub mod extremal;
pub mod problem;
pub mod solver;
pub mod verify;

pub use error::{RadiiError, Result};
pub use problem::{ClassSpec, Family, RadiusKind, RadiusQuery, RadiusResult, VerificationReport};
pub use solver::solve_radius;
