//! Closed-form counts of heady-s and taily-s sequences and the quantities
//! derived from them.
//!
//! With `q` minus marks and score `s`, a heady `n`-sequence has one of
//! `C(2q+s, q)` signature arrangements, each realised by `C(n-s-1-2q, q)`
//! zero placements; a taily one has `C(2q+s-1, q-1)` arrangements (the last
//! mark is forced to be `-`) and `C(n-s-2q, q)` placements, plus the
//! all-tails sequence when `s = 0`.

use std::sync::RwLock;

use num_bigint::{BigInt, BigUint};

use crate::decimal::render_ratio;
use crate::distribution::ScoreDistribution;
use crate::error::{Error, Result};
use crate::scalar::Count;
use crate::toss::{heady_score_range, score_range, taily_score_range, Mode};

/// `C(a, b)`, zero whenever `a < 0`, `b < 0` or `b > a`.
pub fn binomial<C: Count>(a: i64, b: i64) -> C {
    if a < 0 || b < 0 || b > a {
        return C::zero();
    }
    let b = b.min(a - b);
    let mut acc = C::one();
    for i in 1..=b {
        // acc = C(a - b + i, i) after this step, always an integer
        acc = acc * C::from_i64(a - b + i).expect("fits") / C::from_i64(i).expect("fits");
    }
    acc
}

/// Pascal's triangle grown on demand. Reads share a lock; growth takes it
/// exclusively. Results are identical to [`binomial`].
#[derive(Debug, Default)]
pub struct BinomialCache<C> {
    rows: RwLock<Vec<Vec<C>>>,
}

impl<C: Count> BinomialCache<C> {
    pub fn new() -> Self {
        BinomialCache { rows: RwLock::new(Vec::new()) }
    }

    pub fn get(&self, a: i64, b: i64) -> C {
        if a < 0 || b < 0 || b > a {
            return C::zero();
        }
        let (a, b) = (a as usize, b as usize);
        {
            let rows = self.rows.read().expect("binomial cache poisoned");
            if a < rows.len() {
                return rows[a][b].clone();
            }
        }
        let mut rows = self.rows.write().expect("binomial cache poisoned");
        while rows.len() <= a {
            let next = match rows.last() {
                None => vec![C::one()],
                Some(prev) => {
                    let mut row = Vec::with_capacity(prev.len() + 1);
                    row.push(C::one());
                    for w in prev.windows(2) {
                        row.push(w[0].clone() + w[1].clone());
                    }
                    row.push(C::one());
                    row
                }
            };
            rows.push(next);
        }
        rows[a][b].clone()
    }
}

/// Term `k` of the heady sum for score `s` at length `n`.
pub fn heady_term<C: Count>(s: i64, n: u32, k: i64) -> C {
    let ns = i64::from(n) - s - 1;
    binomial::<C>(2 * k + s, k) * binomial::<C>(ns - 2 * k, k)
}

/// Term `k` of the taily sum for score `s` at length `n`.
pub fn taily_term<C: Count>(s: i64, n: u32, k: i64) -> C {
    let ns = i64::from(n) - s;
    binomial::<C>(2 * k + s - 1, k - 1) * binomial::<C>(ns - 2 * k, k)
}

/// Index range `(first, last)` of the heady sum; empty when `first > last`.
pub fn heady_k_range(s: i64, n: u32) -> (i64, i64) {
    let ns = i64::from(n) - s - 1;
    (0.max(-s), ns.div_euclid(3))
}

/// Index range `(first, last)` of the taily sum; empty when `first > last`.
pub fn taily_k_range(s: i64, n: u32) -> (i64, i64) {
    let ns = i64::from(n) - s;
    (1.max(-s), ns.div_euclid(3))
}

fn heady_with<C: Count>(s: i64, n: u32, binom: impl Fn(i64, i64) -> C) -> C {
    if n == 0 {
        return C::zero();
    }
    let ns = i64::from(n) - s - 1;
    let (first, last) = heady_k_range(s, n);
    (first..=last).fold(C::zero(), |acc, k| {
        acc + binom(2 * k + s, k) * binom(ns - 2 * k, k)
    })
}

fn taily_with<C: Count>(s: i64, n: u32, binom: impl Fn(i64, i64) -> C) -> C {
    if n == 0 {
        return C::zero();
    }
    let ns = i64::from(n) - s;
    let (first, last) = taily_k_range(s, n);
    let base = if s == 0 { C::one() } else { C::zero() };
    (first..=last).fold(base, |acc, k| {
        acc + binom(2 * k + s - 1, k - 1) * binom(ns - 2 * k, k)
    })
}

/// Number of `n`-sequences ending in heads with score `s` (`H_s(n)`).
pub fn heady_count<C: Count>(s: i64, n: u32) -> C {
    heady_with(s, n, binomial::<C>)
}

/// Number of `n`-sequences ending in tails with score `s` (`T_s(n)`).
pub fn taily_count<C: Count>(s: i64, n: u32) -> C {
    taily_with(s, n, binomial::<C>)
}

pub fn count<C: Count>(mode: Mode, s: i64, n: u32) -> C {
    match mode {
        Mode::Heady => heady_count(s, n),
        Mode::Taily => taily_count(s, n),
    }
}

/// Closed-form evaluator backed by a shared binomial table; cheaper than the
/// free functions when many counts are needed.
#[derive(Debug, Default)]
pub struct ClosedForm<C> {
    binomials: BinomialCache<C>,
}

impl<C: Count> ClosedForm<C> {
    pub fn new() -> Self {
        ClosedForm { binomials: BinomialCache::new() }
    }

    pub fn heady(&self, s: i64, n: u32) -> C {
        heady_with(s, n, |a, b| self.binomials.get(a, b))
    }

    pub fn taily(&self, s: i64, n: u32) -> C {
        taily_with(s, n, |a, b| self.binomials.get(a, b))
    }

    pub fn count(&self, mode: Mode, s: i64, n: u32) -> C {
        match mode {
            Mode::Heady => self.heady(s, n),
            Mode::Taily => self.taily(s, n),
        }
    }

    /// The full distribution at length `n`.
    pub fn distribution(&self, n: u32) -> ScoreDistribution<C> {
        let mut dist = ScoreDistribution::empty(n);
        let (lo, hi) = heady_score_range(n);
        for s in lo..=hi {
            dist.add(Mode::Heady, s, &self.heady(s, n));
        }
        let (lo, hi) = taily_score_range(n);
        for s in lo..=hi {
            dist.add(Mode::Taily, s, &self.taily(s, n));
        }
        dist
    }
}

/// Heady close-call wins for Alice, `h2(n) = H_1(n)`, from the dedicated
/// single-sum formula.
pub fn h2_closed<C: Count>(n: u32) -> Result<C> {
    if n < 2 {
        return Err(Error::OutOfDomain { what: "h2", n, min: 2 });
    }
    let n = i64::from(n);
    Ok((1..=(n + 1) / 3).fold(C::zero(), |acc, k| {
        acc + binomial::<C>(2 * k - 1, k) * binomial::<C>(n - 2 * k, k - 1)
    }))
}

/// Bob's winning-sequence count minus Alice's, `D_n = H_{-1}(n)`.
pub fn gap<C: Count>(n: u32) -> Result<C> {
    if n < 2 {
        return Err(Error::OutOfDomain { what: "D", n, min: 2 });
    }
    Ok(heady_count(-1, n))
}

/// `D_n` as the partial sum `h2(2) + ... + h2(n-1)`.
pub fn gap_by_partial_sums<C: Count>(n: u32) -> Result<C> {
    if n < 2 {
        return Err(Error::OutOfDomain { what: "D", n, min: 2 });
    }
    Ok((2..n).fold(C::zero(), |acc, i| acc + heady_count::<C>(1, i)))
}

/// Forward increment `D_n - D_{n-1} = H_1(n-1)`, defined for `n >= 3`.
pub fn delta<C: Count>(n: u32) -> Result<C> {
    if n < 3 {
        return Err(Error::OutOfDomain { what: "delta", n, min: 3 });
    }
    Ok(heady_count(1, n - 1))
}

/// Exact win, loss and tie counts at length `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WinOdds {
    pub n: u32,
    pub alice_wins: BigUint,
    pub bob_wins: BigUint,
    pub ties: BigUint,
    /// `bob_wins - alice_wins`.
    pub gap: BigInt,
    pub digits: u32,
}

impl WinOdds {
    /// `2^n`, the number of sequences.
    pub fn total(&self) -> BigUint {
        BigUint::from(1u32) << self.n as usize
    }

    pub fn fraction(&self, count: &BigInt) -> String {
        format!("{}/{}", count, self.total())
    }

    pub fn decimal(&self, count: &BigInt) -> String {
        render_ratio(count, &self.total(), self.digits)
    }

    pub fn alice_decimal(&self) -> String {
        self.decimal(&BigInt::from(self.alice_wins.clone()))
    }

    pub fn bob_decimal(&self) -> String {
        self.decimal(&BigInt::from(self.bob_wins.clone()))
    }

    pub fn ties_decimal(&self) -> String {
        self.decimal(&BigInt::from(self.ties.clone()))
    }

    pub fn gap_decimal(&self) -> String {
        self.decimal(&self.gap)
    }
}

/// Win counts for both players by summing the closed forms over all scores.
pub fn win_odds(n: u32, digits: u32) -> WinOdds {
    let closed = ClosedForm::<BigUint>::new();
    let (lo, hi) = score_range(n);
    let mut alice = BigUint::default();
    let mut bob = BigUint::default();
    let mut ties = BigUint::default();
    for s in lo..=hi {
        let c = closed.heady(s, n) + closed.taily(s, n);
        match s.signum() {
            1 => alice += c,
            -1 => bob += c,
            _ => ties += c,
        }
    }
    let gap = BigInt::from(bob.clone()) - BigInt::from(alice.clone());
    WinOdds { n, alice_wins: alice, bob_wins: bob, ties, gap, digits }
}
