use alloc::string::String;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimMismatch { expected: usize, found: usize },
    #[error("dimension must be positive")]
    ZeroDim,
    #[error("index {index} out of range for dimension {bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("non-finite value in input")]
    NonFinite,
    #[error("operator is {rows}x{cols}, expected a square operator")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix is not Hermitian (defect {defect:e})")]
    NotHermitian { defect: f64 },
    #[error("eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("partial map is not injective: {first} and {second} both map to {target}")]
    NotInjective {
        first: usize,
        second: usize,
        target: usize,
    },
    #[error("operator does not have full column rank")]
    NotInvertible,
    #[error("no linear map satisfies the given constraints (residual {residual:e})")]
    Inconsistent { residual: f64 },
    #[error("vectors do not form an orthonormal basis")]
    NotOrthonormalBasis,
    #[error("basis violates the orthonormality invariant")]
    InvalidSubspace,
    #[error("empty input")]
    Empty,
    #[error("unknown check name `{0}`")]
    UnknownCheckName(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
