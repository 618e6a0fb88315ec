//! Exhaustive enumeration over all `2^n` toss sequences.
//!
//! This is the ground truth every other path is checked against. Sequences
//! are walked as packed words so the score of each costs two popcounts.

use num_bigint::BigInt;
use rayon::prelude::*;

pub use crate::distribution::{CloseCallTable, ScoreDistribution};
use crate::error::{Error, Result};
use crate::scalar::Count;
use crate::toss::{packed_score, score_range, Mode, PackedSeq};

/// Environment variable that overrides the default oracle cap.
pub const ORACLE_CAP_ENV: &str = "STREAKCOUNT_ORACLE_CAP";

pub const DEFAULT_ORACLE_CAP: u32 = 24;

/// Enumeration indexes sequences with a `u64`, so no cap can go past this.
pub const HARD_LIMIT: u32 = 62;

/// Index ranges at or below this size are enumerated on one thread.
const CHUNK_BITS: u32 = 16;

/// Largest `n` the oracle agrees to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleCap(u32);

impl Default for OracleCap {
    fn default() -> Self {
        OracleCap(DEFAULT_ORACLE_CAP)
    }
}

impl OracleCap {
    pub fn new(cap: u32) -> Result<Self> {
        if cap > HARD_LIMIT {
            return Err(Error::OracleLimit { n: cap, limit: HARD_LIMIT });
        }
        Ok(OracleCap(cap))
    }

    /// The default cap, unless [`ORACLE_CAP_ENV`] holds a valid override.
    pub fn from_env() -> Self {
        std::env::var(ORACLE_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<u32>().ok())
            .and_then(|v| OracleCap::new(v).ok())
            .unwrap_or_default()
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn check(self, n: u32) -> Result<()> {
        if n > self.0 {
            Err(Error::OracleCapExceeded { n, cap: self.0 })
        } else {
            Ok(())
        }
    }
}

/// Exhaustive enumerator with a length cap.
#[derive(Debug, Clone, Copy, Default)]
pub struct Oracle {
    cap: OracleCap,
}

impl Oracle {
    pub fn new(cap: OracleCap) -> Self {
        Oracle { cap }
    }

    pub fn cap(&self) -> OracleCap {
        self.cap
    }

    fn admit(&self, n: u32) -> Result<()> {
        if n == 0 {
            return Err(Error::OutOfDomain { what: "enumeration", n, min: 1 });
        }
        self.cap.check(n)
    }

    /// Full (score, last toss) distribution over all `2^n` sequences.
    pub fn distribution<C: Count>(&self, n: u32) -> Result<ScoreDistribution<C>> {
        self.admit(n)?;
        Ok(tally(n, true).into_distribution())
    }

    /// Same result as [`Oracle::distribution`] computed on a single thread.
    pub fn distribution_serial<C: Count>(&self, n: u32) -> Result<ScoreDistribution<C>> {
        self.admit(n)?;
        Ok(tally(n, false).into_distribution())
    }

    pub fn close_call_table<C: Count>(&self, n: u32) -> Result<CloseCallTable<C>> {
        Ok(self.distribution::<C>(n)?.close_call_table())
    }

    /// Bob's winning-sequence count minus Alice's, by enumeration.
    pub fn gap(&self, n: u32) -> Result<BigInt> {
        Ok(self.distribution::<u64>(n)?.gap())
    }

    /// Every `n`-sequence with score `s` ending as `mode`, in index order.
    pub fn sequences(&self, n: u32, s: i64, mode: Mode) -> Result<Vec<PackedSeq>> {
        self.admit(n)?;
        let last = u64::from(mode.last_toss()) << (n - 1);
        let rest = 1u64 << (n - 1);
        Ok((0..rest)
            .map(|low| low | last)
            .filter(|&bits| packed_score(bits, n) == s)
            .map(|bits| PackedSeq::new(bits, n))
            .collect())
    }
}

/// Enumerate the distribution for `n` under the default cap.
pub fn enumerate_distribution<C: Count>(n: u32) -> Result<ScoreDistribution<C>> {
    Oracle::default().distribution(n)
}

pub fn close_call_table<C: Count>(n: u32) -> Result<CloseCallTable<C>> {
    Oracle::default().close_call_table(n)
}

/// `D_n` by enumeration under the default cap.
pub fn oracle_gap(n: u32) -> Result<BigInt> {
    Oracle::default().gap(n)
}

/// Dense per-score counters for one `n`; index `s - lo`.
#[derive(Debug, Clone)]
struct Tally {
    n: u32,
    lo: i64,
    heady: Vec<u64>,
    taily: Vec<u64>,
}

impl Tally {
    fn new(n: u32) -> Self {
        let (lo, hi) = score_range(n);
        let width = (hi - lo + 1) as usize;
        Tally { n, lo, heady: vec![0; width], taily: vec![0; width] }
    }

    fn absorb(mut self, other: Tally) -> Tally {
        for (a, b) in self.heady.iter_mut().zip(other.heady) {
            *a += b;
        }
        for (a, b) in self.taily.iter_mut().zip(other.taily) {
            *a += b;
        }
        self
    }

    fn scan(mut self, range: std::ops::Range<u64>) -> Tally {
        let n = self.n;
        let top = n - 1;
        for bits in range {
            let idx = (packed_score(bits, n) - self.lo) as usize;
            if (bits >> top) & 1 == 1 {
                self.heady[idx] += 1;
            } else {
                self.taily[idx] += 1;
            }
        }
        self
    }

    fn into_distribution<C: Count>(self) -> ScoreDistribution<C> {
        let mut dist = ScoreDistribution::empty(self.n);
        for (i, (&h, &t)) in self.heady.iter().zip(&self.taily).enumerate() {
            let s = self.lo + i as i64;
            dist.add(Mode::Heady, s, &C::from_u64_exact(h));
            dist.add(Mode::Taily, s, &C::from_u64_exact(t));
        }
        dist
    }
}

fn tally(n: u32, parallel: bool) -> Tally {
    let total = 1u64 << n;
    if !parallel || n <= CHUNK_BITS {
        return Tally::new(n).scan(0..total);
    }
    let chunk = 1u64 << CHUNK_BITS;
    (0..total / chunk)
        .into_par_iter()
        .map(|c| Tally::new(n).scan(c * chunk..(c + 1) * chunk))
        .reduce(|| Tally::new(n), Tally::absorb)
}
