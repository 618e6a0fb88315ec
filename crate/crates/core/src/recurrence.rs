//! Incremental computation of the score distributions for increasing `n`.
//!
//! Two independent routes:
//!
//! * [`DpTable`] appends one toss at a time. A taily-s sequence of length
//!   `n + 1` is a taily-s or heady-(s+1) sequence followed by a 0; a heady-s
//!   one is a heady-(s-1) or taily-s sequence followed by a 1.
//! * [`TermVector`] keeps, for one score, every term of the closed-form sum
//!   and moves each term from `n - 1` to `n` with an exact integer increment.
//!   When the summation range grows, a new term is appended from a running
//!   frontier binomial.

use std::collections::BTreeMap;

use crate::distribution::ScoreDistribution;
use crate::scalar::Count;
use crate::toss::{heady_score_range, taily_score_range, Mode};

/// Score distribution grown one toss at a time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpTable<C> {
    dist: ScoreDistribution<C>,
}

impl<C: Count> DpTable<C> {
    /// The two length-1 sequences, both scoring 0.
    pub fn initial() -> Self {
        let mut dist = ScoreDistribution::empty(1);
        dist.add(Mode::Heady, 0, &C::one());
        dist.add(Mode::Taily, 0, &C::one());
        DpTable { dist }
    }

    pub fn from_distribution(dist: ScoreDistribution<C>) -> Self {
        DpTable { dist }
    }

    pub fn n(&self) -> u32 {
        self.dist.n
    }

    pub fn distribution(&self) -> &ScoreDistribution<C> {
        &self.dist
    }

    pub fn into_distribution(self) -> ScoreDistribution<C> {
        self.dist
    }

    /// The table for one more toss.
    pub fn extend(&self) -> DpTable<C> {
        let mut next = ScoreDistribution::empty(self.dist.n + 1);
        for (&s, c) in &self.dist.heady {
            // heady-s then 1 scores an HH, then 0 scores an HT
            next.add(Mode::Heady, s + 1, c);
            next.add(Mode::Taily, s - 1, c);
        }
        for (&s, c) in &self.dist.taily {
            next.add(Mode::Heady, s, c);
            next.add(Mode::Taily, s, c);
        }
        DpTable { dist: next }
    }

    /// The table at length `n`, extending from length 1.
    pub fn at(n: u32) -> DpTable<C> {
        assert!(n >= 1, "tables start at n = 1");
        (1..n).fold(DpTable::initial(), |t, _| t.extend())
    }
}

pub fn dp_extend<C: Count>(table: &DpTable<C>) -> DpTable<C> {
    table.extend()
}

/// Smallest term index of the sum for `(mode, s)`.
fn first_k(mode: Mode, s: i64) -> i64 {
    match mode {
        Mode::Heady => 0.max(-s),
        Mode::Taily => 1.max(-s),
    }
}

/// `n_s`: the length offset the second binomial is taken from.
fn offset_length(mode: Mode, s: i64, n: u32) -> i64 {
    match mode {
        Mode::Heady => i64::from(n) - s - 1,
        Mode::Taily => i64::from(n) - s,
    }
}

/// First length at which the sum for `(mode, s)` has a term, or `None` when
/// the score can never be reached that way.
pub fn start_length(mode: Mode, s: i64) -> Option<u32> {
    let n = match mode {
        Mode::Heady => 3 * first_k(mode, s) + s + 1,
        Mode::Taily => 3 * first_k(mode, s) + s,
    };
    u32::try_from(n).ok().filter(|&n| n >= 1)
}

fn to_count<C: Count>(v: i64) -> C {
    C::from_i64(v).expect("non-negative factor")
}

/// Exact quotient; a remainder means the update arithmetic is wrong.
fn exact_div<C: Count>(num: C, den: C, what: &str) -> C {
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "inexact division in {what}: remainder {r} over {den}");
    q
}

/// Every term of the closed-form sum for one `(mode, s)` at the current `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermVector<C> {
    mode: Mode,
    s: i64,
    n: u32,
    /// Term for index `first_k + i` at position `i`.
    terms: Vec<C>,
    /// First binomial factor of the newest term: `C(2l+s, l)` heady,
    /// `C(2l+s-1, l-1)` taily, with `l` the largest index.
    frontier: C,
}

impl<C: Count> TermVector<C> {
    /// The vector at its first valid length, where it holds the single term 1.
    pub fn start(mode: Mode, s: i64) -> Option<Self> {
        let n = start_length(mode, s)?;
        Some(TermVector { mode, s, n, terms: vec![C::one()], frontier: C::one() })
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn score(&self) -> i64 {
        self.s
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn terms(&self) -> &[C] {
        &self.terms
    }

    pub fn frontier(&self) -> &C {
        &self.frontier
    }

    pub fn first_k(&self) -> i64 {
        first_k(self.mode, self.s)
    }

    pub fn last_k(&self) -> i64 {
        self.first_k() + self.terms.len() as i64 - 1
    }

    /// Sum of the terms (without the all-tails indicator).
    pub fn sum(&self) -> C {
        self.terms.iter().fold(C::zero(), |mut acc, t| {
            acc += t;
            acc
        })
    }

    /// `H_s(n)` or `T_s(n)` at the current `n`.
    pub fn readout(&self) -> C {
        let sum = self.sum();
        if self.mode == Mode::Taily && self.s == 0 {
            sum + C::one()
        } else {
            sum
        }
    }

    /// Advance from `n` to `n + 1`.
    pub fn extend(&mut self) {
        let s = self.s;
        let ns = offset_length(self.mode, s, self.n);
        let first = self.first_k();
        for (i, term) in self.terms.iter_mut().enumerate() {
            let k = first + i as i64;
            if k == 0 {
                continue;
            }
            // term * (ns+1-2k)/(ns+1-3k) = term + term * k/(ns+1-3k)
            let inc = exact_div(
                term.clone() * to_count::<C>(k),
                to_count::<C>(ns + 1 - 3 * k),
                "term update",
            );
            *term += &inc;
        }
        if (ns + 1) % 3 == 0 {
            let l = self.last_k();
            let (num, den) = match self.mode {
                Mode::Heady => ((2 * l + s + 2) * (2 * l + s + 1), (l + 1) * (l + s + 1)),
                Mode::Taily => ((2 * l + s + 1) * (2 * l + s), l * (l + s + 1)),
            };
            let next = exact_div(
                self.frontier.clone() * to_count::<C>(num),
                to_count::<C>(den),
                "frontier update",
            );
            self.frontier = next.clone();
            // second factor C(ns+1-2L, L) is C(L, L) = 1 for the new index L
            self.terms.push(next);
        }
        self.n += 1;
    }
}

pub fn incremental_extend_heady<C: Count>(tv: &mut TermVector<C>) {
    assert_eq!(tv.mode(), Mode::Heady);
    tv.extend();
}

pub fn incremental_extend_taily<C: Count>(tv: &mut TermVector<C>) {
    assert_eq!(tv.mode(), Mode::Taily);
    tv.extend();
}

/// Which halves of the distribution a sweep computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    Heady,
    Taily,
    Both,
}

impl SweepMode {
    fn includes(self, mode: Mode) -> bool {
        match self {
            SweepMode::Both => true,
            SweepMode::Heady => mode == Mode::Heady,
            SweepMode::Taily => mode == Mode::Taily,
        }
    }
}

/// Iterator over the distributions for `n = 1, 2, ..., n_max` computed with
/// term vectors kept per score.
#[derive(Debug, Clone)]
pub struct TableSweep<C> {
    mode: SweepMode,
    n_max: u32,
    next_n: u32,
    scores: Option<(i64, i64)>,
    heady: BTreeMap<i64, TermVector<C>>,
    taily: BTreeMap<i64, TermVector<C>>,
}

impl<C: Count> TableSweep<C> {
    pub fn new(n_max: u32, mode: SweepMode) -> Self {
        TableSweep {
            mode,
            n_max,
            next_n: 1,
            scores: None,
            heady: BTreeMap::new(),
            taily: BTreeMap::new(),
        }
    }

    /// Only track scores in `lo..=hi`; other cells are left out of the
    /// yielded distributions.
    pub fn with_scores(mut self, lo: i64, hi: i64) -> Self {
        self.scores = Some((lo, hi));
        self
    }

    fn step(
        vectors: &mut BTreeMap<i64, TermVector<C>>,
        mode: Mode,
        n: u32,
        range: (i64, i64),
        out: &mut ScoreDistribution<C>,
    ) {
        for tv in vectors.values_mut() {
            tv.extend();
        }
        for s in range.0..=range.1 {
            if !vectors.contains_key(&s) && start_length(mode, s) == Some(n) {
                let tv = TermVector::start(mode, s).expect("score has a start length");
                vectors.insert(s, tv);
            }
        }
        for (&s, tv) in vectors.iter() {
            debug_assert_eq!(tv.n(), n);
            out.add(mode, s, &tv.readout());
        }
        // the all-tails sequence before any taily term vector for s = 0 exists
        if mode == Mode::Taily && !vectors.contains_key(&0) && range.0 <= 0 && 0 <= range.1 {
            out.add(mode, 0, &C::one());
        }
    }

    fn clip(&self, (lo, hi): (i64, i64)) -> (i64, i64) {
        match self.scores {
            Some((a, b)) => (lo.max(a), hi.min(b)),
            None => (lo, hi),
        }
    }
}

impl<C: Count> Iterator for TableSweep<C> {
    type Item = ScoreDistribution<C>;

    fn next(&mut self) -> Option<ScoreDistribution<C>> {
        if self.next_n > self.n_max {
            return None;
        }
        let n = self.next_n;
        self.next_n += 1;
        let mut out = ScoreDistribution::empty(n);
        if self.mode.includes(Mode::Heady) {
            let range = self.clip(heady_score_range(n));
            Self::step(&mut self.heady, Mode::Heady, n, range, &mut out);
        }
        if self.mode.includes(Mode::Taily) {
            let range = self.clip(taily_score_range(n));
            Self::step(&mut self.taily, Mode::Taily, n, range, &mut out);
        }
        Some(out)
    }
}

pub fn table_sweep<C: Count>(n_max: u32, mode: SweepMode) -> TableSweep<C> {
    TableSweep::new(n_max, mode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{binomial, heady_count, heady_term, taily_count, taily_term};
    use num_bigint::BigUint;
    use std::collections::BTreeMap;

    fn map(pairs: &[(i64, u64)]) -> BTreeMap<i64, u64> {
        pairs.iter().copied().collect()
    }

    #[test]
    fn dp_first_steps() {
        let t1 = DpTable::<u64>::initial();
        let t2 = dp_extend(&t1);
        assert_eq!(t2.distribution().heady, map(&[(1, 1), (0, 1)]));
        assert_eq!(t2.distribution().taily, map(&[(0, 1), (-1, 1)]));
        let t3 = t2.extend();
        assert_eq!(t3.distribution().heady, map(&[(2, 1), (1, 1), (0, 1), (-1, 1)]));
        assert_eq!(t3.distribution().taily, map(&[(0, 2), (-1, 2)]));
        assert_eq!(DpTable::<u64>::at(25).distribution().heady_at(1), 1_816_610);
    }

    #[test]
    fn dp_normalization() {
        let mut t = DpTable::<BigUint>::initial();
        for n in 1..=120u32 {
            let d = t.distribution();
            let total = d.total(Mode::Heady) + d.total(Mode::Taily);
            assert_eq!(total, BigUint::from(1u32) << n as usize);
            t = t.extend();
        }
    }

    #[test]
    fn heady_ones_stream() {
        let expect = [1u64, 1, 1, 4, 7, 10, 23, 46, 79];
        let mut tv = TermVector::<u64>::start(Mode::Heady, 1).unwrap();
        assert_eq!(tv.n(), 2);
        for (i, &e) in expect.iter().enumerate() {
            assert_eq!(tv.readout(), e, "n = {}", i + 2);
            incremental_extend_heady(&mut tv);
        }
        while tv.n() < 25 {
            tv.extend();
        }
        assert_eq!(tv.readout(), 1_816_610);
    }

    #[test]
    fn heady_minus_one_stream() {
        let mut tv = TermVector::<u64>::start(Mode::Heady, -1).unwrap();
        assert_eq!(tv.n(), 3);
        while tv.n() < 10 {
            tv.extend();
        }
        assert_eq!(tv.readout(), 93);
    }

    #[test]
    fn taily_streams() {
        let tv = TermVector::<u64>::start(Mode::Taily, -1).unwrap();
        assert_eq!((tv.n(), tv.readout()), (2, 1));
        let mut tv = tv;
        incremental_extend_taily(&mut tv);
        assert_eq!(tv.readout(), 2);

        let sweep: Vec<_> = table_sweep::<u64>(2, SweepMode::Taily).collect();
        assert_eq!(sweep[1].taily_at(0), 1);

        let mut tv = TermVector::<u64>::start(Mode::Taily, -2).unwrap();
        while tv.n() < 6 {
            tv.extend();
        }
        assert_eq!(tv.readout(), taily_count::<u64>(-2, 6));
    }

    #[test]
    fn start_values_match_closed_form() {
        for s in -30..=30i64 {
            for mode in [Mode::Heady, Mode::Taily] {
                let Some(tv) = TermVector::<u64>::start(mode, s) else {
                    continue;
                };
                let closed = match mode {
                    Mode::Heady => heady_count::<u64>(s, tv.n()),
                    Mode::Taily => taily_count::<u64>(s, tv.n()),
                };
                assert_eq!(tv.readout(), closed, "{mode} s={s}");
                if tv.n() > 1 {
                    let before = match mode {
                        Mode::Heady => heady_count::<u64>(s, tv.n() - 1),
                        Mode::Taily => taily_count::<u64>(s, tv.n() - 1) - u64::from(s == 0),
                    };
                    assert_eq!(before, 0, "{mode} s={s} starts late");
                }
            }
        }
    }

    #[test]
    fn terms_and_frontier_match_direct_products() {
        for s in -8..=8i64 {
            for mode in [Mode::Heady, Mode::Taily] {
                let mut tv = TermVector::<BigUint>::start(mode, s).unwrap();
                while tv.n() < 90 {
                    let before = tv.terms().len();
                    tv.extend();
                    let first = tv.first_k();
                    for (i, t) in tv.terms().iter().enumerate() {
                        let k = first + i as i64;
                        let direct = match mode {
                            Mode::Heady => heady_term::<BigUint>(s, tv.n(), k),
                            Mode::Taily => taily_term::<BigUint>(s, tv.n(), k),
                        };
                        assert_eq!(*t, direct, "{mode} s={s} n={} k={k}", tv.n());
                    }
                    if tv.terms().len() > before {
                        let l = tv.last_k();
                        let direct = match mode {
                            Mode::Heady => binomial::<BigUint>(2 * l + s, l),
                            Mode::Taily => binomial::<BigUint>(2 * l + s - 1, l - 1),
                        };
                        assert_eq!(*tv.frontier(), direct);
                    }
                }
            }
        }
    }

    #[test]
    fn term_count_formula() {
        for s in -6..=6i64 {
            let mut tv = TermVector::<BigUint>::start(Mode::Heady, s).unwrap();
            while tv.n() < 60 {
                let ns = i64::from(tv.n()) - s - 1;
                assert_eq!(tv.terms().len() as i64, ns / 3 - 0.max(-s) + 1);
                tv.extend();
            }
        }
    }

    #[test]
    fn sweep_matches_dp() {
        let mut dp = DpTable::<BigUint>::initial();
        for dist in table_sweep::<BigUint>(80, SweepMode::Both) {
            assert_eq!(dist, dp.distribution().clone().normalized(), "n = {}", dist.n);
            dp = dp.extend();
        }
    }

    #[test]
    fn restricted_sweep() {
        let last = table_sweep::<BigUint>(60, SweepMode::Heady).with_scores(-2, 2).last().unwrap();
        assert_eq!(last.heady.len(), 5);
        assert!(last.taily.is_empty());
        for s in -2..=2 {
            assert_eq!(last.heady_at(s), heady_count::<BigUint>(s, 60));
        }
    }
}
