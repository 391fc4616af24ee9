use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("state length {0} outside the supported range 1..=64")]
    InvalidLength(usize),

    #[error("invalid state string {0:?}: expected only '0' and '1'")]
    InvalidState(String),

    #[error("bit pattern {bits:#x} does not fit in {len} bits")]
    BitsOutOfRange { bits: u64, len: usize },

    #[error("the rotation operator is undefined on the all-zero state")]
    ZeroState,

    #[error("order {n} outside the supported range {min}..={max}")]
    OrderOutOfRange { n: usize, min: usize, max: usize },

    #[error("malformed {field}: {message}")]
    Parse { field: String, message: String },

    #[error("invalid rule spec: {0}")]
    InvalidSpec(String),

    #[error("state {state} is in the critical set but its conjugate {conjugate} is not")]
    NotPaired { state: String, conjugate: String },

    #[error("critical set does not span the cycles at cycle ({cycle}): {reason}")]
    NotSpanning { cycle: String, reason: String },

    #[error("expected {expected} bits, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("sequence is not a de Bruijn sequence of order {0}")]
    NotDeBruijn(usize),

    #[error("lcm(1..={0}) overflows 128 bits")]
    Overflow(u64),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
