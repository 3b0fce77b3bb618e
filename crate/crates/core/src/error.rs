//! Error type shared by every module of the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("cone is not line-free")]
    NotLineFree,

    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),

    #[error("Tschirnhausen iteration did not converge within {bound} steps")]
    NoConvergence { bound: usize },

    #[error("series is not Galois stable: {0}")]
    NotGaloisStable(String),

    #[error("cross-check mismatch: {0}")]
    CrossCheckMismatch(String),

    #[error("degenerate characteristic data: {0}")]
    DegenerateCharacteristicData(String),

    #[error("orbit count mismatch: {0}")]
    CountMismatch(String),

    #[error("g vanishes on the root of f to full available precision")]
    DividesF,

    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("polynomial is not quasi-ordinary after blowup")]
    NotQuasiOrdinaryAfterBlowup,

    #[error("no root branch found: {0}")]
    NoRootBranch(String),

    #[error("polynomial is not free: {0}")]
    NotFree(String),

    #[error("approximate root of the blowup disagrees with the direct one")]
    AppMismatch,

    #[error("discriminant vanishes identically; polynomial has a repeated factor")]
    ZeroDiscriminant,

    #[error("no shear parameter found within the degree bound")]
    ShearExhausted,

    #[error("bad input: {0}")]
    BadInput(String),
}
