//! Error type shared by every module in the crate.

use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("index {index} out of range: sequence only covers |j| <= {max_index}")]
    IndexOutOfRange { index: i64, max_index: i64 },

    #[error("quadrature did not converge: last two estimates {prev} and {last}")]
    QuadratureAccuracy { prev: Complex64, last: Complex64 },

    #[error("kernel tolerance not met at entry ({row}, {col}): error {error:.3e} exceeds {tol:.3e}")]
    KernelAccuracy {
        row: usize,
        col: usize,
        error: f64,
        tol: f64,
    },

    #[error("matrix is numerically singular (estimated rank deficiency {rank_deficiency})")]
    SingularMatrix { rank_deficiency: usize },

    #[error("rank-deficient least-squares matrix: sigma_min/sigma_max = {sigma_ratio:.3e}")]
    RankDeficient { sigma_ratio: f64 },

    #[error("{what}: expected length {expected}, got {got}")]
    ShapeMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("reconstruction Gram matrix is not positive definite")]
    IndefiniteGram,

    #[error("ill-conditioned inner system: {0}")]
    Conditioning(String),

    #[error("evaluation point {x} lies outside [-1, 1]")]
    PointOutsideDomain { x: f64 },

    #[error("sampling system is missing required data: {0}")]
    MissingFrameData(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown preset '{0}'")]
    UnknownPreset(String),

    #[error("config error at line {line}: {msg}")]
    Config { line: usize, msg: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Machine-readable error record for the CLI.
    pub fn to_json(&self) -> String {
        let kind = match self {
            Error::IndexOutOfRange { .. } => "index_out_of_range",
            Error::QuadratureAccuracy { .. } => "quadrature_accuracy",
            Error::KernelAccuracy { .. } => "kernel_accuracy",
            Error::SingularMatrix { .. } => "singular_matrix",
            Error::RankDeficient { .. } => "rank_deficient",
            Error::ShapeMismatch { .. } => "shape_mismatch",
            Error::IndefiniteGram => "indefinite_gram",
            Error::Conditioning(_) => "conditioning",
            Error::PointOutsideDomain { .. } => "point_outside_domain",
            Error::MissingFrameData(_) => "missing_frame_data",
            Error::InvalidArgument(_) => "invalid_argument",
            Error::UnknownPreset(_) => "unknown_preset",
            Error::Config { .. } => "config",
            Error::Parse(_) => "parse",
            Error::Io(_) => "io",
        };
        format!(
            "{{\"error\": \"{kind}\", \"message\": {}}}",
            serde_json::to_string(&self.to_string()).unwrap_or_else(|_| "\"\"".into())
        )
    }
}
