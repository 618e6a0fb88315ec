use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a toss sequence must contain at least one toss")]
    EmptySequence,

    #[error("invalid toss character {ch:?} at position {position} (expected '0' or '1')")]
    InvalidToss { ch: char, position: usize },

    #[error("invalid signature character {ch:?} at position {position} (expected '+' or '-')")]
    InvalidMark { ch: char, position: usize },

    #[error(
        "n = {n} exceeds the oracle cap of {cap}; raise it with --oracle-cap or the \
         STREAKCOUNT_ORACLE_CAP environment variable"
    )]
    OracleCapExceeded { n: u32, cap: u32 },

    #[error("n = {n} is beyond the hard enumeration limit of {limit} tosses")]
    OracleLimit { n: u32, limit: u32 },

    #[error("{what} is defined only for n >= {min} (got n = {n})")]
    OutOfDomain { what: &'static str, n: u32, min: u32 },

    #[error("the null signature has no minimum-length sequence")]
    NullSignature,

    #[error("a taily sequence needs a signature ending in '-' (got {signature:?})")]
    TailyNeedsMinus { signature: String },

    #[error("length {n} is shorter than the minimal feasible length {min_n} for this signature")]
    TooShort { n: u32, min_n: u32 },

    #[error("no insertion slot remains for {surplus} surplus zero(s) with a fixed leading 1")]
    NoSlots { surplus: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
