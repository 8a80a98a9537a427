use thiserror::Error;

/// Errors raised by the workbench. Decoding failures are not errors; they are
/// reported through [`crate::rs::DecodeStatus`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("extension degree {0} out of range (2..=16)")]
    DegreeOutOfRange(u32),
    #[error("modulus {modulus:#x} does not have degree {m}")]
    ModulusDegree { m: u32, modulus: u32 },
    #[error("reducible: divisible by {factor}")]
    Reducible { factor: String },
    #[error("symbol {0:#x} is not an element of the field")]
    NotInField(u32),
    #[error("inverse of zero")]
    InverseOfZero,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("duplicate evaluation point {0:#x}")]
    DuplicatePoint(u16),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("point set is not the full multiplicative group; use poly_interp_lagrange")]
    NotFullGroup,
    #[error("reversal length {h} is smaller than degree {deg}")]
    ReversalTooShort { h: usize, deg: usize },
    #[error("degree exceeds evaluation subspace (needs {needed} points, subspace has {available})")]
    ExceedsSubspace { needed: usize, available: usize },
    #[error("not invertible mod x^k: constant term is zero")]
    NotInvertibleModXk,
    #[error("divisor is not monic")]
    NotMonic,
    #[error("degree precondition violated: {0}")]
    DegreeOrder(String),
    #[error("invalid code parameters: {0}")]
    InvalidCode(String),
    #[error("n - k = {0} is odd; the decoders assume an even number of parity symbols")]
    OddRedundancy(usize),
    #[error("syndrome decoder requires the cyclic point set (n = 2^m - 1); use gao or gao-mod for other points")]
    NotCyclic,
    #[error("message degree {deg} must be below k = {k}")]
    MessageTooLong { deg: usize, k: usize },
    #[error("{nu} erasures exceed the correction capacity 2t = {two_t}")]
    TooManyErasures { nu: usize, two_t: usize },
    #[error("erasure position {pos} is out of range for n = {n}")]
    ErasureOutOfRange { pos: usize, n: usize },
    #[error("erasure position {0} is listed twice")]
    DuplicateErasure(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
