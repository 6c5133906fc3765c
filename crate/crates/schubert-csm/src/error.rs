use thiserror::Error;

/// Errors surfaced by the library and mapped to exit code 2 by the CLI.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("unknown Lie type `{0}` (expected one of A, B, C, D, E, F, G)")]
    UnknownLieType(String),

    #[error("invalid rank {rank} for type {lie_type}: valid ranks are {valid}")]
    InvalidRank {
        lie_type: char,
        rank: usize,
        valid: &'static str,
    },

    #[error("rank mismatch: expected a vector of length {expected}, got {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("cannot parse element `{input}`: {reason}")]
    ParseElement { input: String, reason: String },

    #[error("permutation encoding is only available in type A (got type {lie_type})")]
    PermutationUnsupported { lie_type: char },

    #[error(
        "full enumeration of a Weyl group of order {order} exceeds the cap of {cap}; \
         bound the sweep with a maximum length"
    )]
    EnumerationCap { order: u128, cap: u64 },

    #[error("parabolic index {index} out of range 1..={rank}")]
    InvalidParabolic { index: usize, rank: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
