use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericsError {
    #[error("invalid quadrature spec: {0}")]
    BadSpec(String),
    #[error("integrand not finite at x = {at:e} (value {value})")]
    NonFinite { at: f64, value: f64 },
    #[error("bracket [{lo:e}, {hi:e}] does not enclose a sign change (f = {f_lo:e}, {f_hi:e})")]
    InvalidBracket { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },
    #[error("root solver did not converge within {iterations} iterations")]
    NoConvergence { iterations: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParamError {
    #[error("{field} must be > 0 (got {value})")]
    NotPositive { field: &'static str, value: f64 },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PotentialError {
    #[error("k = {k} is outside the tabulated range [{lo}, {hi}]; extrapolation is disallowed")]
    Extrapolation { k: f64, lo: f64, hi: f64 },
    #[error("invalid potential table: {0}")]
    BadTable(String),
    #[error("invalid potential parameter: {0}")]
    BadParameter(String),
    #[error("probe grid needs at least 2 points")]
    DegenerateProbe,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error(transparent)]
    Potential(#[from] PotentialError),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error("domain error: {what} at {at}")]
    Domain { what: &'static str, at: f64 },
    #[error("{what} is singular at zero momentum; use the regularized vertex")]
    Singular { what: &'static str },
    #[error("value {value} outside the range [{lo}, {hi}]")]
    OutOfRange { value: f64, lo: f64, hi: f64 },
    #[error("dispersion has a plateau on [{lo}, {hi}]; the model violates the no-plateau assumption")]
    Plateau { lo: f64, hi: f64 },
    #[error("singular measure: dω/dp vanishes at p = {p}")]
    SingularMeasure { p: f64 },
    #[error("parameter mismatch: {0}")]
    Mismatch(String),
    #[error("support resolution failed: {0}")]
    SupportResolution(String),
    #[error("near-singular root: |dω/dq| < 1e-8 √ν at p = {p}, q = {q}")]
    NearSingularRoot { p: f64, q: f64 },
    #[error("divergent integral: {0}")]
    Divergence(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
