//! Exact counting for the HH-versus-HT coin-tossing game.
//!
//! Alice scores a point for every pair of consecutive heads and Bob for every
//! head followed by a tail. For `n` tosses this crate computes, exactly, how
//! many of the `2^n` sequences end in heads or tails with each score
//! difference, and therefore how many each player wins.
//!
//! Three independent routes produce the same numbers, and an exhaustive
//! enumerator checks all of them for small `n`:
//!
//! * [`counting`]: closed-form binomial sums,
//! * [`recurrence`]: a one-toss-at-a-time DP and per-score term vectors,
//! * [`oracle`]: brute force over all sequences.
//!
//! [`signatures`] constructs the sequences themselves. All counts are generic
//! over [`Count`]; [`BigCount`] is the arbitrary-precision default.

pub mod compositions;
pub mod counting;
pub mod decimal;
pub mod distribution;
pub mod error;
pub mod oracle;
pub mod recurrence;
pub mod scalar;
pub mod signatures;
pub mod toss;
pub mod verify;

pub use num_bigint;

pub use crate::compositions::{compositions, Compositions};
pub use crate::counting::{
    delta, gap, h2_closed, heady_count, taily_count, win_odds, ClosedForm, WinOdds,
};
pub use crate::distribution::{CloseCallTable, ScoreDistribution};
pub use crate::error::{Error, Result};
pub use crate::oracle::{Oracle, OracleCap};
pub use crate::recurrence::{table_sweep, DpTable, SweepMode, TableSweep, TermVector};
pub use crate::scalar::Count;
pub use crate::signatures::{
    complement, generate_sequences, lambda_of, min_length_sequence, signature_of, Mark,
    MinLengthSeq, SequenceGenerator, Signature,
    null_signature_sequence,
};
pub use crate::toss::{classify, score, Mode, Outcome, PackedSeq, Score, TossSequence};

/// Arbitrary-precision non-negative count.
pub type BigCount = num_bigint::BigUint;

/// Arbitrary-precision signed count, used for win gaps.
pub type SignedCount = num_bigint::BigInt;

pub type Distribution = ScoreDistribution<BigCount>;
pub type Table = CloseCallTable<BigCount>;
pub type Dp = DpTable<BigCount>;
pub type Sweep = TableSweep<BigCount>;
pub type Terms = TermVector<BigCount>;
