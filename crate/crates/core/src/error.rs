use thiserror::Error;

/// Errors raised by the algebra, mapping and PDE routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The element (or `t - ζ`) lies in the singular set and has no inverse.
    #[error("singular element: |det| = {det:e} is within tolerance {tol:e}")]
    Singular { det: f64, tol: f64 },

    /// A power series was evaluated too close to (or beyond) its radius,
    /// or its truncated sum could not certify the requested precision.
    #[error("point {re}+{im}i is outside the evaluation domain: {reason}")]
    OutOfDomain { re: f64, im: f64, reason: String },

    /// The two spectral characters coincide, so the contour radius rule is undefined.
    #[error("degenerate spectrum: |xi1 - xi2| = {gap:e}")]
    DegenerateSpectrum { gap: f64 },

    #[error("root iteration did not converge after {iterations} iterations")]
    NoConvergence { iterations: usize },

    #[error("polynomial has no nonzero coefficients")]
    DegeneratePolynomial,

    #[error("invalid triple: {0}")]
    InvalidTriple(String),

    #[error("invalid operator: {0}")]
    InvalidOperator(String),

    #[error("invalid function: {0}")]
    InvalidFunction(String),

    /// Symbolic product of two analytic functions outside the closed family.
    #[error("product is not representable: {0}")]
    NotRepresentable(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
