use thiserror::Error;

/// Errors produced by the numerical core.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },

    #[error("integrand returned a non-finite value at x = {at}")]
    NonFinite { at: f64 },

    #[error("quadrature did not converge: best estimate {value:e}, error bound {error_estimate:e} after {evaluations} evaluations")]
    NoConvergence {
        value: f64,
        error_estimate: f64,
        evaluations: usize,
    },

    #[error("series did not converge within {terms} terms: partial sum {value:e}, error bound {error_estimate:e}")]
    SeriesNoConvergence {
        value: f64,
        error_estimate: f64,
        terms: usize,
    },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("gap d/R = {ratio:e} is below the supported floor {floor:e}; use the plane-mirror formulas")]
    GapTooSmall { ratio: f64, floor: f64 },

    #[error("atom is within {distance:e} of the half-plane surface; use the plane-mirror formulas")]
    PlaneLimit { distance: f64 },

    #[error("transition {index}: {source}")]
    Transition {
        index: usize,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Best available estimate carried by a convergence failure, if any.
    pub fn best_estimate(&self) -> Option<(f64, f64)> {
        match self {
            Error::NoConvergence {
                value, error_estimate, ..
            }
            | Error::SeriesNoConvergence {
                value, error_estimate, ..
            } => Some((*value, *error_estimate)),
            Error::Transition { source, .. } => source.best_estimate(),
            _ => None,
        }
    }

    pub fn is_convergence_failure(&self) -> bool {
        self.best_estimate().is_some()
    }
}

pub(crate) fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidConfig(msg()))
    }
}
