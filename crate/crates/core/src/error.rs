use thiserror::Error;

/// Errors raised by the numerical core.
///
/// Numeric payloads are reported as `f64` regardless of the scalar type the
/// computation ran in.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole of {function} at {re} + {im}i")]
    Pole {
        function: &'static str,
        re: f64,
        im: f64,
    },
    #[error("{function} did not converge within {terms} terms")]
    NonConvergence { function: &'static str, terms: usize },
    #[error("domain error in {function}: {reason}")]
    Domain {
        function: &'static str,
        reason: String,
    },
    #[error("point lies on the isotropic cone (x1^2 - x2^2 = {interval})")]
    IsotropicCone { interval: f64 },
    #[error("no sign change found for level n = {n} inside the energy window [{lo}, {hi}]")]
    Bracket { n: i64, lo: f64, hi: f64 },
    #[error("search path crossed a Gamma pole near g = {g}")]
    PoleCrossing { g: f64 },
    #[error("near-origin phase fit residual {residual:.3e} exceeds {limit:.1e} of the amplitude")]
    FitQuality { residual: f64, limit: f64 },
    #[error("found {found} phase crossings in the window, {wanted} requested")]
    InsufficientRoots { found: usize, wanted: usize },
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<V> = std::result::Result<V, Error>;

impl Error {
    pub(crate) fn domain(function: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            function,
            reason: reason.into(),
        }
    }
}
