use thiserror::Error;

pub type Result<T, E = ZetaError> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ZetaError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{function}: argument {point} is at a pole")]
    Pole { function: &'static str, point: String },

    #[error("{0}: result is not representable (overflow)")]
    Overflow(&'static str),

    /// The moment functional is numerically degenerate at this precision.
    #[error("orthogonal polynomial recurrence broke down at degree {degree}")]
    Breakdown { degree: usize },

    #[error("root finder did not converge after {iterations} iterations")]
    NonConvergence { iterations: usize },

    #[error("polynomial roots are not simple (closest pair separated by {separation:e})")]
    Multiplicity { separation: f64 },

    #[error("root pairing failed: {0}")]
    Pairing(String),

    #[error("vanishing divisor while computing quadrature weight {index}")]
    ZeroDivisor { index: isize },

    #[error("logarithm of node {index} lies on the branch cut")]
    Branch { index: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("trapezoidal sum did not decay within {k_max} steps")]
    NonDecay { k_max: usize },

    #[error("degenerate fit: {0}")]
    DegenerateFit(String),
}
