//! Per-length score distributions split by the final toss.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};

use crate::scalar::Count;
use crate::toss::{score_range, Mode};

/// Counts of `n`-sequences by (score, last toss). Zero entries may be absent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoreDistribution<C> {
    pub n: u32,
    pub heady: BTreeMap<i64, C>,
    pub taily: BTreeMap<i64, C>,
}

impl<C: Count> ScoreDistribution<C> {
    pub fn empty(n: u32) -> Self {
        ScoreDistribution { n, heady: BTreeMap::new(), taily: BTreeMap::new() }
    }

    pub fn side(&self, mode: Mode) -> &BTreeMap<i64, C> {
        match mode {
            Mode::Heady => &self.heady,
            Mode::Taily => &self.taily,
        }
    }

    pub fn side_mut(&mut self, mode: Mode) -> &mut BTreeMap<i64, C> {
        match mode {
            Mode::Heady => &mut self.heady,
            Mode::Taily => &mut self.taily,
        }
    }

    pub fn get(&self, mode: Mode, s: i64) -> C {
        self.side(mode).get(&s).cloned().unwrap_or_else(C::zero)
    }

    pub fn heady_at(&self, s: i64) -> C {
        self.get(Mode::Heady, s)
    }

    pub fn taily_at(&self, s: i64) -> C {
        self.get(Mode::Taily, s)
    }

    /// Add `count` to the (mode, s) cell.
    pub fn add(&mut self, mode: Mode, s: i64, count: &C) {
        if count.is_zero() {
            return;
        }
        *self.side_mut(mode).entry(s).or_insert_with(C::zero) += count;
    }

    /// Drop explicit zero entries so equal distributions compare equal.
    pub fn normalized(mut self) -> Self {
        self.heady.retain(|_, c| !c.is_zero());
        self.taily.retain(|_, c| !c.is_zero());
        self
    }

    /// Cell-wise sum of two distributions for the same `n`.
    pub fn merge(mut self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "merging distributions of different lengths");
        for (&s, c) in &other.heady {
            self.add(Mode::Heady, s, c);
        }
        for (&s, c) in &other.taily {
            self.add(Mode::Taily, s, c);
        }
        self
    }

    pub fn total(&self, mode: Mode) -> C {
        self.side(mode).values().fold(C::zero(), |mut acc, c| {
            acc += c;
            acc
        })
    }

    /// Sum over both sides of every cell whose score satisfies `pred`.
    pub fn count_where(&self, pred: impl Fn(i64) -> bool) -> C {
        self.heady
            .iter()
            .chain(self.taily.iter())
            .filter(|(&s, _)| pred(s))
            .fold(C::zero(), |mut acc, (_, c)| {
                acc += c;
                acc
            })
    }

    pub fn alice_wins(&self) -> C {
        self.count_where(|s| s > 0)
    }

    pub fn bob_wins(&self) -> C {
        self.count_where(|s| s < 0)
    }

    pub fn ties(&self) -> C {
        self.count_where(|s| s == 0)
    }

    /// Bob's winning-sequence count minus Alice's.
    pub fn gap(&self) -> BigInt {
        BigInt::from(self.bob_wins().to_big()) - BigInt::from(self.alice_wins().to_big())
    }

    /// Every score in the union support range, highest first, with both counts.
    pub fn rows(&self) -> Vec<(i64, C, C)> {
        let (lo, hi) = score_range(self.n.max(1));
        (lo..=hi).rev().map(|s| (s, self.heady_at(s), self.taily_at(s))).collect()
    }

    pub fn close_call_table(&self) -> CloseCallTable<C> {
        CloseCallTable {
            n: self.n,
            heady: bucket(&self.heady),
            taily: bucket(&self.taily),
        }
    }

    pub fn to_big(&self) -> ScoreDistribution<BigUint> {
        ScoreDistribution {
            n: self.n,
            heady: self.heady.iter().map(|(&s, c)| (s, c.to_big())).collect(),
            taily: self.taily.iter().map(|(&s, c)| (s, c.to_big())).collect(),
        }
    }
}

fn bucket<C: Count>(side: &BTreeMap<i64, C>) -> [C; 5] {
    let mut cells: [C; 5] = std::array::from_fn(|_| C::zero());
    for (&s, c) in side {
        let i = match s {
            s if s > 1 => 0,
            1 => 1,
            0 => 2,
            -1 => 3,
            _ => 4,
        };
        cells[i] += c;
    }
    cells
}

/// The 2x5 cross-classification by last toss against the score buckets
/// `S > 1`, `S = 1`, `S = 0`, `S = -1`, `S < -1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CloseCallTable<C> {
    pub n: u32,
    /// `h1..h5`, stored 0-based.
    pub heady: [C; 5],
    /// `t1..t5`, stored 0-based.
    pub taily: [C; 5],
}

impl<C: Count> CloseCallTable<C> {
    /// `h_i`, 1-based.
    pub fn h(&self, i: usize) -> &C {
        &self.heady[i - 1]
    }

    /// `t_i`, 1-based.
    pub fn t(&self, i: usize) -> &C {
        &self.taily[i - 1]
    }

    /// Build from two rows of five plain integers, as printed in tables.
    pub fn from_rows(n: u32, heady: [u64; 5], taily: [u64; 5]) -> Self {
        CloseCallTable {
            n,
            heady: heady.map(C::from_u64_exact),
            taily: taily.map(C::from_u64_exact),
        }
    }
}
