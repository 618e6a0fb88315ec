//! Identity suites that cross-check every computation path.
//!
//! Each suite counts the individual equalities it checked and records a
//! message for every one that failed. The counts under test come from a
//! [`CountSource`], so a deliberately corrupted source can be plugged in to
//! confirm the suites notice.

use std::collections::HashSet;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::counting::{h2_closed, ClosedForm};
use crate::distribution::{CloseCallTable, ScoreDistribution};
use crate::oracle::{Oracle, OracleCap};
use crate::recurrence::{DpTable, SweepMode, TableSweep};
use crate::signatures::{
    complement, generate_sequences, lambda_of, min_length_sequence, null_signature_sequence,
    signature_of, Signature,
};
use crate::toss::{heady_score_range, score_range, taily_score_range, Mode};

/// Provider of `H_s(n)` and `T_s(n)` under test.
pub trait CountSource: Sync {
    fn heady(&self, s: i64, n: u32) -> BigUint;
    fn taily(&self, s: i64, n: u32) -> BigUint;

    fn count(&self, mode: Mode, s: i64, n: u32) -> BigUint {
        match mode {
            Mode::Heady => self.heady(s, n),
            Mode::Taily => self.taily(s, n),
        }
    }

    fn distribution(&self, n: u32) -> ScoreDistribution<BigUint> {
        let mut dist = ScoreDistribution::empty(n);
        let (lo, hi) = score_range(n);
        for s in lo..=hi {
            dist.add(Mode::Heady, s, &self.heady(s, n));
            dist.add(Mode::Taily, s, &self.taily(s, n));
        }
        dist
    }
}

impl CountSource for ClosedForm<BigUint> {
    fn heady(&self, s: i64, n: u32) -> BigUint {
        ClosedForm::heady(self, s, n)
    }

    fn taily(&self, s: i64, n: u32) -> BigUint {
        ClosedForm::taily(self, s, n)
    }
}

/// Wraps a source and adds one to a single cell.
#[derive(Debug)]
pub struct FaultInjected<S> {
    pub inner: S,
    pub mode: Mode,
    pub s: i64,
    pub n: u32,
}

impl<S: CountSource> CountSource for FaultInjected<S> {
    fn heady(&self, s: i64, n: u32) -> BigUint {
        let c = self.inner.heady(s, n);
        if (self.mode, self.s, self.n) == (Mode::Heady, s, n) {
            c + 1u32
        } else {
            c
        }
    }

    fn taily(&self, s: i64, n: u32) -> BigUint {
        let c = self.inner.taily(s, n);
        if (self.mode, self.s, self.n) == (Mode::Taily, s, n) {
            c + 1u32
        } else {
            c
        }
    }
}

/// Outcome of one suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: u64,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport { name, checks: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(msg());
        }
    }

    fn expect_eq<T: PartialEq + std::fmt::Debug>(&mut self, got: T, want: T, what: impl FnOnce() -> String) {
        self.checks += 1;
        if got != want {
            self.failures.push(format!("{}: got {got:?}, expected {want:?}", what()));
        }
    }
}

/// Bounds for a verification run.
#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    /// Largest `n` for the closed-form identity suites.
    pub max_n: u32,
    /// Largest `n` enumerated exhaustively.
    pub oracle_max: u32,
    /// Longest signature in the minimum-length invariance suite.
    pub lambda_marks: u32,
    /// Largest `n` in the generator completeness suite (also bounded by
    /// `oracle_max`).
    pub generator_max: u32,
    /// Longest close-call signature in the complement bijection suite.
    pub bijection_marks: u32,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: 64,
            oracle_max: 16,
            lambda_marks: 10,
            generator_max: 14,
            bijection_marks: 9,
        }
    }
}

fn pow2(e: u32) -> BigUint {
    BigUint::one() << e as usize
}

fn signed(c: BigUint) -> BigInt {
    BigInt::from(c)
}

/// `D_n` summed over every cell of the source.
fn source_gap(src: &dyn CountSource, n: u32) -> BigInt {
    src.distribution(n).gap()
}

/// The two small tables that anchor the induction, checked against both the
/// source and the oracle.
pub fn base_tables(src: &dyn CountSource) -> SuiteReport {
    let mut r = SuiteReport::new("base tables (n = 2, 3)");
    let expected = [
        CloseCallTable::<BigUint>::from_rows(2, [0, 1, 1, 0, 0], [0, 0, 1, 1, 0]),
        CloseCallTable::<BigUint>::from_rows(3, [1, 1, 1, 1, 0], [0, 0, 2, 2, 0]),
    ];
    let oracle = Oracle::default();
    for want in expected {
        let n = want.n;
        r.expect_eq(src.distribution(n).close_call_table(), want.clone(), || format!("source table n={n}"));
        match oracle.close_call_table::<BigUint>(n) {
            Ok(t) => r.expect_eq(t, want, || format!("oracle table n={n}")),
            Err(e) => r.check(false, || e.to_string()),
        }
    }
    r.expect_eq(source_gap(src, 2), BigInt::zero(), || "D_2".into());
    r.expect_eq(source_gap(src, 3), BigInt::one(), || "D_3".into());
    r
}

/// Both last-toss halves hold `2^(n-1)` sequences.
pub fn normalization(src: &dyn CountSource, max_n: u32) -> SuiteReport {
    let mut r = SuiteReport::new("normalization");
    for n in 1..=max_n {
        let d = src.distribution(n);
        let half = pow2(n - 1);
        r.expect_eq(d.total(Mode::Heady), half.clone(), || format!("sum of H_s({n})"));
        r.expect_eq(d.total(Mode::Taily), half, || format!("sum of T_s({n})"));
    }
    r
}

/// Counts vanish exactly outside the admissible score ranges.
pub fn range_emptiness(src: &dyn CountSource, max_n: u32) -> SuiteReport {
    let mut r = SuiteReport::new("range emptiness");
    for n in 1..=max_n {
        for (mode, (lo, hi)) in [
            (Mode::Heady, heady_score_range(n)),
            (Mode::Taily, taily_score_range(n)),
        ] {
            for s in lo - 2..=hi + 2 {
                let inside = lo <= s && s <= hi;
                let c = src.count(mode, s, n);
                r.check(inside != c.is_zero(), || {
                    format!("{mode} s={s} n={n}: count {c}, inside range = {inside}")
                });
            }
        }
    }
    r
}

/// The gap equals the heady close-call wins for Bob, and its increments the
/// heady close-call wins for Alice.
pub fn gap_identity(src: &dyn CountSource, max_n: u32) -> SuiteReport {
    let mut r = SuiteReport::new("D_n = H_-1(n), D_n - D_(n-1) = H_1(n-1)");
    let mut prev: Option<BigInt> = None;
    for n in 2..=max_n {
        let d = source_gap(src, n);
        r.expect_eq(d.clone(), signed(src.heady(-1, n)), || format!("D_{n} vs H_-1({n})"));
        if let Some(p) = prev {
            r.expect_eq(&d - &p, signed(src.heady(1, n - 1)), || format!("D_{n} - D_{}", n - 1));
        }
        prev = Some(d);
    }
    r
}

/// `D_(n+1) - D_n = D_n - (H_-1(n) - H_1(n))`.
pub fn increment_identity(src: &dyn CountSource, max_n: u32) -> SuiteReport {
    let mut r = SuiteReport::new("increment identity");
    for n in 2..max_n {
        let d = source_gap(src, n);
        let d_next = source_gap(src, n + 1);
        let rhs = &d - (signed(src.heady(-1, n)) - signed(src.heady(1, n)));
        r.expect_eq(d_next - d, rhs, || format!("n={n}"));
    }
    r
}

/// `H_-1(n+1) = H_1(n) + H_-1(n)`.
pub fn close_call_recurrence(src: &dyn CountSource, max_n: u32) -> SuiteReport {
    let mut r = SuiteReport::new("close-call recurrence");
    for n in 2..max_n {
        r.expect_eq(
            src.heady(-1, n + 1),
            src.heady(1, n) + src.heady(-1, n),
            || format!("n={n}"),
        );
    }
    r
}

/// `T_s(n) = T_s(n-1) + H_(s+1)(n-1)` for every admissible score.
pub fn taily_recurrence(src: &dyn CountSource, max_n: u32) -> SuiteReport {
    let mut r = SuiteReport::new("taily recurrence");
    for n in 2..=max_n {
        let (lo, hi) = taily_score_range(n);
        for s in lo..=hi {
            r.expect_eq(
                src.taily(s, n),
                src.taily(s, n - 1) + src.heady(s + 1, n - 1),
                || format!("s={s} n={n}"),
            );
        }
    }
    r
}

/// The single-sum formula for `h2(n)` against `H_1(n)`.
pub fn h2_single_sum(src: &dyn CountSource, max_n: u32) -> SuiteReport {
    let mut r = SuiteReport::new("h2 single-sum formula");
    for n in 2..=max_n {
        match h2_closed::<BigUint>(n) {
            Ok(h2) => r.expect_eq(h2, src.heady(1, n), || format!("n={n}")),
            Err(e) => r.check(false, || e.to_string()),
        }
    }
    r
}

/// Bob is strictly ahead from three tosses on and the gap keeps growing.
pub fn positivity(src: &dyn CountSource, max_n: u32) -> SuiteReport {
    let mut r = SuiteReport::new("positivity");
    for n in 2..=max_n {
        let h2 = src.heady(1, n);
        r.check(!h2.is_zero(), || format!("H_1({n}) = 0"));
        if n >= 3 {
            let d = source_gap(src, n);
            r.check(d >= BigInt::one(), || format!("D_{n} = {d}"));
        }
    }
    r
}

/// Source, DP and incremental sweep agree on every cell.
pub fn three_way(src: &dyn CountSource, max_n: u32) -> SuiteReport {
    let mut r = SuiteReport::new("closed form = DP = incremental");
    let mut dp = DpTable::<BigUint>::initial();
    for swept in TableSweep::<BigUint>::new(max_n, SweepMode::Both) {
        let n = swept.n;
        let closed = src.distribution(n).normalized();
        r.expect_eq(&closed, &dp.distribution().clone().normalized(), || format!("closed vs DP n={n}"));
        r.expect_eq(&closed, &swept.normalized(), || format!("closed vs incremental n={n}"));
        dp = dp.extend();
    }
    r
}

/// Source against exhaustive enumeration, cell by cell.
pub fn oracle_equivalence(src: &dyn CountSource, oracle: &Oracle, oracle_max: u32) -> SuiteReport {
    let mut r = SuiteReport::new("closed form = enumeration");
    for n in 1..=oracle_max {
        let truth = match oracle.distribution::<u64>(n) {
            Ok(d) => d,
            Err(e) => {
                r.check(false, || e.to_string());
                break;
            }
        };
        let (lo, hi) = score_range(n);
        for s in lo - 1..=hi + 1 {
            for mode in [Mode::Heady, Mode::Taily] {
                r.expect_eq(
                    src.count(mode, s, n),
                    BigUint::from(truth.get(mode, s)),
                    || format!("{mode} s={s} n={n}"),
                );
            }
        }
    }
    r
}

/// Minimum length depends only on the mark counts and the mode, and the
/// constructed sequence has that length.
pub fn lambda_invariance(max_marks: u32) -> SuiteReport {
    let mut r = SuiteReport::new("minimum length depends only on mark counts");
    for len in 1..=max_marks {
        for minus in 0..=len {
            let plus = len - minus;
            for mode in [Mode::Heady, Mode::Taily] {
                let mut seen: Option<u32> = None;
                for sig in Signature::arrangements(plus, minus) {
                    if mode == Mode::Taily && !sig.ends_with_minus() {
                        continue;
                    }
                    let (lambda, mu) = match (lambda_of(&sig, mode), min_length_sequence(&sig, mode)) {
                        (Ok(l), Ok(m)) => (l, m),
                        (a, b) => {
                            r.check(false, || format!("{sig} {mode}: {a:?} / {b:?}"));
                            continue;
                        }
                    };
                    r.expect_eq(mu.sequence.len() as u32, lambda, || format!("length of mu({sig}) {mode}"));
                    r.expect_eq(mu.lambda, lambda, || format!("lambda field of mu({sig}) {mode}"));
                    r.expect_eq(mu.sequence.mode(), mode, || format!("last toss of mu({sig})"));
                    r.expect_eq(
                        signature_of(&mu.sequence),
                        sig.clone(),
                        || format!("signature of mu({sig}) {mode}"),
                    );
                    match seen {
                        None => seen = Some(lambda),
                        Some(l) => r.expect_eq(lambda, l, || format!("{sig} {mode} vs first arrangement")),
                    }
                }
            }
        }
    }
    r
}

/// Signatures with score `s` whose minimum length in `mode` is at most `n`.
pub fn feasible_signatures(s: i64, n: u32, mode: Mode) -> Vec<Signature> {
    let mut out = Vec::new();
    let first_q = match mode {
        Mode::Heady => 0.max(-s),
        Mode::Taily => 1.max(-s),
    };
    let mut q = first_q;
    loop {
        let p = q + s;
        let lambda = match mode {
            Mode::Heady => p + 2 * q + 1,
            Mode::Taily => p + 2 * q,
        };
        if lambda > i64::from(n) {
            break;
        }
        if p >= 0 && p + q >= 1 {
            out.extend(
                Signature::arrangements(p as u32, q as u32)
                    .into_iter()
                    .filter(|sig| mode == Mode::Heady || sig.ends_with_minus()),
            );
        }
        q += 1;
    }
    out
}

/// Generated sequences, unioned over signatures, are exactly the
/// enumerated ones for every (score, mode).
pub fn generator_completeness(oracle: &Oracle, max_n: u32) -> SuiteReport {
    let mut r = SuiteReport::new("generator = enumeration");
    for n in 1..=max_n {
        let (lo, hi) = score_range(n);
        for mode in [Mode::Heady, Mode::Taily] {
            for s in lo..=hi {
                let mut generated: HashSet<Vec<bool>> = HashSet::new();
                let mut duplicates = 0u64;
                for sig in feasible_signatures(s, n, mode) {
                    let gen = match generate_sequences(&sig, n, mode, false) {
                        Ok(g) => g,
                        Err(e) => {
                            r.check(false, || format!("{sig} n={n} {mode}: {e}"));
                            continue;
                        }
                    };
                    for x in gen {
                        if !generated.insert(x.tosses().to_vec()) {
                            duplicates += 1;
                        }
                    }
                }
                if s == 0 {
                    let x = null_signature_sequence(n, mode).expect("n >= 1");
                    generated.insert(x.tosses().to_vec());
                }
                r.expect_eq(duplicates, 0, || format!("duplicates for {mode} s={s} n={n}"));
                let truth: HashSet<Vec<bool>> = match oracle.sequences(n, s, mode) {
                    Ok(v) => v.into_iter().map(|p| p.unpack().tosses().to_vec()).collect(),
                    Err(e) => {
                        r.check(false, || e.to_string());
                        return r;
                    }
                };
                r.check(generated == truth, || {
                    format!(
                        "{mode} s={s} n={n}: {} generated, {} enumerated",
                        generated.len(),
                        truth.len()
                    )
                });
            }
        }
    }
    r
}

/// Close-call wins for Alice with signature `sig` at length `n` pair off
/// with close-call wins for Bob at length `n + 1` that start with a 1 and
/// carry the complementary signature.
pub fn complement_bijection(max_marks: u32) -> SuiteReport {
    let mut r = SuiteReport::new("complement bijection");
    let mut q = 0u32;
    while 2 * q + 1 <= max_marks {
        for sig in Signature::arrangements(q + 1, q) {
            let lambda = lambda_of(&sig, Mode::Heady).expect("non-null");
            let comp = complement(&sig);
            r.expect_eq(
                lambda_of(&comp, Mode::Heady).ok(),
                Some(lambda + 1),
                || format!("lambda of complement of {sig}"),
            );
            for n in lambda..=lambda + 4 {
                let a = generate_sequences(&sig, n, Mode::Heady, false).map(|g| g.count());
                let b = generate_sequences(&comp, n + 1, Mode::Heady, true).map(|g| g.count());
                r.expect_eq(a, b, || format!("{sig} n={n} vs {comp} n={}", n + 1));
            }
        }
        q += 1;
    }
    r
}

/// Every suite, in a fixed order.
pub fn run_all(src: &dyn CountSource, cfg: &VerifyConfig) -> Vec<SuiteReport> {
    let oracle = Oracle::new(OracleCap::new(cfg.oracle_max.max(3)).unwrap_or_default());
    vec![
        base_tables(src),
        normalization(src, cfg.max_n),
        range_emptiness(src, cfg.max_n),
        gap_identity(src, cfg.max_n),
        increment_identity(src, cfg.max_n),
        close_call_recurrence(src, cfg.max_n),
        taily_recurrence(src, cfg.max_n),
        h2_single_sum(src, cfg.max_n),
        positivity(src, cfg.max_n),
        three_way(src, cfg.max_n),
        oracle_equivalence(src, &oracle, cfg.oracle_max),
        lambda_invariance(cfg.lambda_marks),
        generator_completeness(&oracle, cfg.generator_max.min(cfg.oracle_max)),
        complement_bijection(cfg.bijection_marks),
    ]
}
