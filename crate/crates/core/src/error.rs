use std::fmt;

/// Parameter that failed validation. Carried by [`RadiiError::Domain`] so
/// front ends can name the offending input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Param {
    Alpha,
    B,
    M,
    R,
    Z,
    Kind,
    Tolerance,
    MaxIterations,
}

impl Param {
    pub fn name(self) -> &'static str {
        match self {
            Param::Alpha => "alpha",
            Param::B => "b",
            Param::M => "m",
            Param::R => "r",
            Param::Z => "z",
            Param::Kind => "kind",
            Param::Tolerance => "tol",
            Param::MaxIterations => "max-iterations",
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RadiiError {
    #[error("domain error in `{param}`: {message}")]
    Domain { param: Param, message: String },

    #[error("no sign change of the defining function on (0, 1)")]
    NoRoot,

    #[error("{count} sign changes of the defining function found on (0, 1)")]
    MultipleRoots { count: usize },

    #[error(
        "root refinement did not converge within {max_iter} iterations (last estimate {estimate})"
    )]
    NonConvergence { max_iter: usize, estimate: f64 },

    #[error("denominator vanishes at z = {re} + {im}i")]
    Pole { re: f64, im: f64 },

    #[error("unsupported class: {0}")]
    UnsupportedClass(String),
}

impl RadiiError {
    pub(crate) fn domain(param: Param, message: impl Into<String>) -> Self {
        RadiiError::Domain {
            param,
            message: message.into(),
        }
    }

    /// True for errors caused by bad input rather than numerical failure.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            RadiiError::Domain { .. } | RadiiError::UnsupportedClass(_)
        )
    }
}

pub type Result<T, E = RadiiError> = std::result::Result<T, E>;
