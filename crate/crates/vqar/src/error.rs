use thiserror::Error;

/// Errors produced by the estimation pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension must be >= 1, got {0}")]
    InvalidDimension(usize),

    #[error("invalid count: {0}")]
    InvalidCount(String),

    #[error("need at least {need} points, got {got}")]
    InsufficientPoints { need: usize, got: usize },

    #[error("kernel support is empty at the conditioning point")]
    EmptySupport,

    #[error("series length must be even, got {0}")]
    OddLength(usize),

    #[error("marginal weight sums differ beyond tolerance: {0} vs {1}")]
    InfeasibleMarginals(f64, f64),

    #[error("input contains a non-finite value")]
    NonFiniteInput,

    #[error("transport row {0} carries no mass")]
    DegenerateRow(usize),

    #[error("operation requires d=2, got d={0}")]
    DimensionUnsupported(usize),

    #[error("tau must lie strictly in (0,1), got {0}")]
    TauOutOfRange(f64),

    #[error("quantile maps were built on different grids")]
    GridMismatch,

    #[error("brute-force solver limited to 4x4, got {0}x{1}")]
    SizeExceeded(usize, usize),

    #[error("conditional law is a point mass: noise scale vanishes")]
    DegenerateScale,

    #[error("solver failure: {0}")]
    SolverFailure(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Process exit code classes: 2 configuration, 3 data, 4 numerical.
    pub fn exit_code(&self) -> i32 {
        use Error::*;
        match self {
            InvalidDimension(_) | InvalidCount(_) | DimensionUnsupported(_)
            | TauOutOfRange(_) | GridMismatch | SizeExceeded(_, _) | Config(_) => 2,
            InsufficientPoints { .. } | EmptySupport | OddLength(_) | Io(_) | Parse(_) => 3,
            InfeasibleMarginals(_, _) | NonFiniteInput | DegenerateRow(_)
            | DegenerateScale | SolverFailure(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
