use alloc::string::String;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("matrix is not Hermitian (‖H - H*‖ = {defect:.3e}, allowed {allowed:.3e})")]
    NotHermitian { defect: f64, allowed: f64 },

    #[error("Jacobi iteration did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix dimension {0} is outside the supported range")]
    UnsupportedDimension(usize),

    #[error("invalid spec: {0}")]
    InvalidSpec(String),

    #[error("invalid rank {rank} for dimension {n}")]
    InvalidRank { n: usize, rank: usize },

    #[error("invalid k = {k} for dimension {n}")]
    InvalidK { n: usize, k: usize },

    #[error("grid size {0} is too small (need at least 8)")]
    GridTooSmall(usize),

    #[error("verdict changed between grid sizes {coarse} and {fine}")]
    GridUnstable { coarse: usize, fine: usize },

    #[error("matrix is not upper triangular")]
    NotTriangular,

    #[error("input is unitarily reducible (off-diagonal part vanishes)")]
    ReducibleInput,
}

pub type Result<T> = core::result::Result<T, Error>;
