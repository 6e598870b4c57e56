use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("gcd undefined: both polynomials are zero")]
    GcdUndefined,

    #[error("polynomial too wide: degree {degree} does not fit modulus n = {n}")]
    PolynomialTooWide { degree: usize, n: usize },

    #[error("modulus must be positive")]
    ZeroModulus,

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("not orthogonal: H_X · H_Zᵀ ≠ 0")]
    NotOrthogonal,

    #[error("kernel too large: dimension {dimension} exceeds cap {cap}")]
    KernelTooLarge { dimension: usize, cap: usize },

    #[error("zero generator cannot be shift-normalized")]
    ZeroGenerator,

    #[error("generator is not of weight two: {0}")]
    NotWeightTwo(String),

    #[error(
        "not reducible to canonical form: neither exponent {u} nor {v} is coprime with n = {n}"
    )]
    NotReducible { u: usize, v: usize, n: usize },

    #[error("degenerate graph: alpha = {alpha} must satisfy 1 < alpha < n - 1 for n = {n}")]
    DegenerateGraph { alpha: usize, n: usize },

    #[error("walk does not close: displacement ({x}, {y}) is not a lattice vector")]
    WalkDoesNotClose { x: i64, y: i64 },

    #[error("no certificate found for alpha = {alpha}, n = {n}")]
    NoCertificate { alpha: usize, n: usize },

    #[error("no square root of -1 modulo {0}")]
    NoSquareRootOfMinusOne(u64),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("i/o error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed record on line {line}: {message}")]
    Record { line: usize, message: String },
}
