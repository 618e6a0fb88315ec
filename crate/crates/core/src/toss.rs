//! Toss sequences, the score statistic and win classification.
//!
//! A sequence is written as a string of `0`/`1` characters, first character
//! first toss, with `1` meaning heads. Toss positions are 1-based in all
//! user-facing text.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Alice's points (HH pairs) minus Bob's points (HT pairs).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Score(pub i64);

impl Score {
    pub fn get(self) -> i64 {
        self.0
    }

    pub fn outcome(self) -> Outcome {
        match self.0.signum() {
            1 => Outcome::AliceWin,
            -1 => Outcome::BobWin,
            _ => Outcome::Tie,
        }
    }
}

impl fmt::Display for Score {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    AliceWin,
    BobWin,
    Tie,
}

/// Which way the final toss landed: heady sequences end in 1, taily in 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    Heady,
    Taily,
}

impl Mode {
    pub fn of_last(last: bool) -> Mode {
        if last {
            Mode::Heady
        } else {
            Mode::Taily
        }
    }

    pub fn last_toss(self) -> bool {
        self == Mode::Heady
    }

    pub fn name(self) -> &'static str {
        match self {
            Mode::Heady => "heady",
            Mode::Taily => "taily",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "heady" => Ok(Mode::Heady),
            "taily" => Ok(Mode::Taily),
            other => Err(format!("unknown mode {other:?} (expected heady or taily)")),
        }
    }
}

/// Inclusive range of scores a heady `n`-sequence can take.
pub fn heady_score_range(n: u32) -> (i64, i64) {
    let n = i64::from(n);
    (-((n - 1) / 2), n - 1)
}

/// Inclusive range of scores a taily `n`-sequence can take.
pub fn taily_score_range(n: u32) -> (i64, i64) {
    let n = i64::from(n);
    (-(n / 2), (n - 3).max(0))
}

/// Inclusive range of scores any `n`-sequence can take.
pub fn score_range(n: u32) -> (i64, i64) {
    let n = i64::from(n);
    (-(n / 2), n - 1)
}

/// A non-empty sequence of coin tosses; `true` is heads.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TossSequence {
    tosses: Vec<bool>,
}

impl TossSequence {
    pub fn new(tosses: Vec<bool>) -> Result<Self> {
        if tosses.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(TossSequence { tosses })
    }

    /// Build from `0`/`1` integers.
    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        let tosses = bits
            .iter()
            .enumerate()
            .map(|(i, &b)| match b {
                0 => Ok(false),
                1 => Ok(true),
                _ => Err(Error::InvalidToss {
                    ch: char::from_digit(u32::from(b) % 36, 36).unwrap_or('?'),
                    position: i + 1,
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(tosses)
    }

    pub fn tosses(&self) -> &[bool] {
        &self.tosses
    }

    pub fn len(&self) -> usize {
        self.tosses.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn first(&self) -> bool {
        self.tosses[0]
    }

    pub fn last(&self) -> bool {
        self.tosses[self.tosses.len() - 1]
    }

    pub fn mode(&self) -> Mode {
        Mode::of_last(self.last())
    }

    pub fn score(&self) -> Score {
        score(self)
    }

    pub fn classify(&self) -> Outcome {
        classify(self)
    }

    /// The sequence with one more toss appended.
    pub fn extended(&self, toss: bool) -> TossSequence {
        let mut tosses = self.tosses.clone();
        tosses.push(toss);
        TossSequence { tosses }
    }

    /// The sequence with `count` tails prepended.
    pub fn with_leading_zeros(&self, count: usize) -> TossSequence {
        let mut tosses = vec![false; count];
        tosses.extend_from_slice(&self.tosses);
        TossSequence { tosses }
    }

    pub fn to_packed(&self) -> Option<PackedSeq> {
        PackedSeq::from_sequence(self)
    }
}

impl FromStr for TossSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tosses = s
            .chars()
            .enumerate()
            .map(|(i, ch)| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::InvalidToss { ch, position: i + 1 }),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(tosses)
    }
}

impl fmt::Display for TossSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &t in &self.tosses {
            f.write_str(if t { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Score of a sequence: HH pairs minus HT pairs over adjacent positions.
pub fn score(x: &TossSequence) -> Score {
    let s = x
        .tosses
        .windows(2)
        .map(|w| match (w[0], w[1]) {
            (true, true) => 1,
            (true, false) => -1,
            _ => 0,
        })
        .sum();
    Score(s)
}

pub fn classify(x: &TossSequence) -> Outcome {
    score(x).outcome()
}

/// Longest sequence that fits in a [`PackedSeq`].
pub const MAX_PACKED_LEN: u32 = 64;

/// A sequence of at most 64 tosses packed into a word; bit `i` holds toss
/// `i + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PackedSeq {
    bits: u64,
    len: u32,
}

impl PackedSeq {
    /// Panics if `len` is zero or above [`MAX_PACKED_LEN`], or if `bits` has
    /// bits set at or above `len`.
    pub fn new(bits: u64, len: u32) -> Self {
        assert!(len >= 1 && len <= MAX_PACKED_LEN, "packed length out of range");
        assert!(len == 64 || bits >> len == 0, "bits beyond sequence length");
        PackedSeq { bits, len }
    }

    pub fn from_sequence(x: &TossSequence) -> Option<Self> {
        if x.len() > MAX_PACKED_LEN as usize {
            return None;
        }
        let bits = x
            .tosses
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &t)| acc | (u64::from(t) << i));
        Some(PackedSeq { bits, len: x.len() as u32 })
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn len(self) -> u32 {
        self.len
    }

    pub fn last(self) -> bool {
        (self.bits >> (self.len - 1)) & 1 == 1
    }

    pub fn first(self) -> bool {
        self.bits & 1 == 1
    }

    pub fn score(self) -> i64 {
        packed_score(self.bits, self.len)
    }

    pub fn unpack(self) -> TossSequence {
        TossSequence {
            tosses: (0..self.len).map(|i| (self.bits >> i) & 1 == 1).collect(),
        }
    }
}

/// Score of the `len`-toss sequence stored in `bits` (bit `i` = toss `i + 1`).
#[inline]
pub fn packed_score(bits: u64, len: u32) -> i64 {
    if len < 2 {
        return 0;
    }
    let pairs = (1u64 << (len - 1)) - 1;
    let next = bits >> 1;
    let hh = (bits & next & pairs).count_ones();
    let ht = (bits & !next & pairs).count_ones();
    i64::from(hh) - i64::from(ht)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn seq(s: &str) -> TossSequence {
        s.parse().unwrap()
    }

    #[test]
    fn worked_scores() {
        assert_eq!(seq("01110").score(), Score(1));
        assert_eq!(seq("1").score(), Score(0));
        assert_eq!(seq("10001").score(), Score(-1));
    }

    #[test]
    fn worked_outcomes() {
        assert_eq!(seq("11").classify(), Outcome::AliceWin);
        assert_eq!(seq("00").classify(), Outcome::Tie);
        assert_eq!(seq("10").classify(), Outcome::BobWin);
    }

    #[test]
    fn parse_errors() {
        assert_eq!("".parse::<TossSequence>(), Err(Error::EmptySequence));
        assert_eq!(
            "0120".parse::<TossSequence>(),
            Err(Error::InvalidToss { ch: '2', position: 3 })
        );
        assert!(TossSequence::from_bits(&[0, 1, 3]).is_err());
        assert_eq!(TossSequence::from_bits(&[0, 1, 1]).unwrap().to_string(), "011");
    }

    #[test]
    fn extremes() {
        for n in 1..=40usize {
            let ones = TossSequence::new(vec![true; n]).unwrap();
            assert_eq!(ones.score().get(), n as i64 - 1);
            let alt = TossSequence::new((0..n).map(|i| i % 2 == 0).collect()).unwrap();
            assert_eq!(alt.score().get(), -((n / 2) as i64));
        }
    }

    #[test]
    fn ranges() {
        assert_eq!(heady_score_range(1), (0, 0));
        assert_eq!(taily_score_range(1), (0, 0));
        assert_eq!(taily_score_range(2), (-1, 0));
        assert_eq!(heady_score_range(5), (-2, 4));
        assert_eq!(taily_score_range(5), (-2, 2));
        assert_eq!(score_range(5), (-2, 4));
    }

    fn arb_seq(max: usize) -> impl Strategy<Value = TossSequence> {
        prop::collection::vec(any::<bool>(), 1..=max).prop_map(|v| TossSequence::new(v).unwrap())
    }

    proptest! {
        #[test]
        fn leading_zeros_keep_score(x in arb_seq(40), k in 0usize..10) {
            prop_assert_eq!(x.with_leading_zeros(k).score(), x.score());
        }

        #[test]
        fn append_transitions(x in arb_seq(40)) {
            let s = x.score().get();
            let (up, down) = (x.extended(true).score().get(), x.extended(false).score().get());
            if x.last() {
                prop_assert_eq!(up, s + 1);
                prop_assert_eq!(down, s - 1);
            } else {
                prop_assert_eq!(up, s);
                prop_assert_eq!(down, s);
            }
        }

        #[test]
        fn packed_matches_naive(x in arb_seq(64)) {
            let p = x.to_packed().unwrap();
            prop_assert_eq!(p.score(), x.score().get());
            prop_assert_eq!(p.last(), x.last());
            prop_assert_eq!(p.first(), x.first());
            prop_assert_eq!(p.unpack(), x.clone());
        }

        #[test]
        fn score_within_range(x in arb_seq(40)) {
            let n = x.len() as u32;
            let s = x.score().get();
            let (lo, hi) = if x.last() { heady_score_range(n) } else { taily_score_range(n) };
            prop_assert!(lo <= s && s <= hi);
        }

        #[test]
        fn display_roundtrip(x in arb_seq(64)) {
            prop_assert_eq!(x.to_string().parse::<TossSequence>().unwrap(), x);
        }
    }
}
