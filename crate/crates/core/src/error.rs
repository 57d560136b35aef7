use thiserror::Error;

/// Errors raised by the field, tensor and scenario routines.
///
/// Every variant carries the violated bound together with the offending value.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum EmError {
    #[error("{name} must be positive and finite, got {value}")]
    NonPositive { name: &'static str, value: f64 },

    #[error("{name} must be non-negative, got {value}")]
    Negative { name: &'static str, value: f64 },

    #[error("{name} = {value} is outside the allowed range {bound}")]
    OutOfRange { name: &'static str, value: f64, bound: String },

    #[error("c^2 eps0 mu0 deviates from 1 by {residual}")]
    InconsistentConstants { residual: f64 },

    #[error("refractive index n = {n} does not equal sqrt(eps_r mu_r) = {expected}")]
    InconsistentIndex { n: f64, expected: f64 },

    #[error("operation requires a nonmagnetic medium (mu_r = 1), got mu_r = {mu_r}")]
    Magnetic { mu_r: f64 },

    #[error("direction and polarization must be orthogonal, dot product = {dot}")]
    NotTransverse { dot: f64 },

    #[error("{name} must be a non-zero finite vector")]
    DegenerateVector { name: &'static str },

    #[error("samples are not uniformly spaced: step {index} is {step}, expected {expected}")]
    NonUniformSampling { index: usize, step: f64, expected: f64 },

    #[error("sample span {span} s is shorter than one period {period} s")]
    SpanTooShort { span: f64, period: f64 },

    #[error("good-conductor regime violated: k/alpha = {ratio} must be < {bound}")]
    ConductorRegime { ratio: f64, bound: f64 },

    #[error("four-velocity not normalized: V.V = {norm}, expected -c^2 = {expected}")]
    UnnormalizedVelocity { norm: f64, expected: f64 },

    #[error("speed {speed} m/s is not below c")]
    Superluminal { speed: f64 },

    #[error("quadrature failed to converge: estimated error {error} after {intervals} intervals (tolerance {tolerance})")]
    QuadratureNotConverged { error: f64, intervals: usize, tolerance: f64 },
}

pub type Result<T, E = EmError> = std::result::Result<T, E>;
