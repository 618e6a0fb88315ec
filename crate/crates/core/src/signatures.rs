//! Signatures and the zero-insertion generator.
//!
//! A sequence's signature records, left to right, a `+` for every HH pair and
//! a `-` for every HT pair; 00 and 01 pairs leave no mark. Every sequence with
//! a given signature and final toss is its minimum-length sequence with runs
//! of extra zeros inserted at a fixed set of slots, so enumerating weak
//! compositions of the surplus enumerates the sequences.

use std::fmt;
use std::str::FromStr;

use crate::compositions::Compositions;
use crate::error::{Error, Result};
use crate::toss::{Mode, TossSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mark {
    Plus,
    Minus,
}

impl Mark {
    pub fn flipped(self) -> Mark {
        match self {
            Mark::Plus => Mark::Minus,
            Mark::Minus => Mark::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Mark::Plus => '+',
            Mark::Minus => '-',
        }
    }
}

/// Ordered `+`/`-` marks; the empty signature is the null signature.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Signature {
    marks: Vec<Mark>,
}

impl Signature {
    pub fn new(marks: Vec<Mark>) -> Self {
        Signature { marks }
    }

    pub fn null() -> Self {
        Signature::default()
    }

    pub fn marks(&self) -> &[Mark] {
        &self.marks
    }

    pub fn len(&self) -> usize {
        self.marks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.marks.is_empty()
    }

    pub fn is_null(&self) -> bool {
        self.marks.is_empty()
    }

    pub fn plus_count(&self) -> u32 {
        self.marks.iter().filter(|&&m| m == Mark::Plus).count() as u32
    }

    pub fn minus_count(&self) -> u32 {
        self.marks.iter().filter(|&&m| m == Mark::Minus).count() as u32
    }

    /// Plus count minus minus count; the score of any sequence with this
    /// signature.
    pub fn score(&self) -> i64 {
        i64::from(self.plus_count()) - i64::from(self.minus_count())
    }

    pub fn ends_with_minus(&self) -> bool {
        self.marks.last() == Some(&Mark::Minus)
    }

    pub fn complement(&self) -> Signature {
        complement(self)
    }

    /// Every arrangement of `plus` pluses and `minus` minuses, in
    /// lexicographic order (`+` before `-`).
    pub fn arrangements(plus: u32, minus: u32) -> Vec<Signature> {
        fn go(plus: u32, minus: u32, prefix: &mut Vec<Mark>, out: &mut Vec<Signature>) {
            if plus == 0 && minus == 0 {
                out.push(Signature::new(prefix.clone()));
                return;
            }
            for (mark, left) in [(Mark::Plus, plus), (Mark::Minus, minus)] {
                if left > 0 {
                    prefix.push(mark);
                    match mark {
                        Mark::Plus => go(plus - 1, minus, prefix, out),
                        Mark::Minus => go(plus, minus - 1, prefix, out),
                    }
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(plus, minus, &mut Vec::new(), &mut out);
        out
    }

    /// Every signature of exactly `len` marks.
    pub fn all_of_length(len: u32) -> Vec<Signature> {
        (0..=len).flat_map(|minus| Signature::arrangements(len - minus, minus)).collect()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.marks {
            write!(f, "{}", m.symbol())?;
        }
        Ok(())
    }
}

impl FromStr for Signature {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(i, ch)| match ch {
                '+' => Ok(Mark::Plus),
                '-' => Ok(Mark::Minus),
                _ => Err(Error::InvalidMark { ch, position: i + 1 }),
            })
            .collect::<Result<Vec<_>>>()
            .map(Signature::new)
    }
}

/// Signature of a sequence: `+` per HH pair, `-` per HT pair, left to right.
pub fn signature_of(x: &TossSequence) -> Signature {
    let marks = x
        .tosses()
        .windows(2)
        .filter_map(|w| match (w[0], w[1]) {
            (true, true) => Some(Mark::Plus),
            (true, false) => Some(Mark::Minus),
            _ => None,
        })
        .collect();
    Signature::new(marks)
}

pub fn complement(sig: &Signature) -> Signature {
    Signature::new(sig.marks.iter().map(|m| m.flipped()).collect())
}

fn check_buildable(sig: &Signature, mode: Mode) -> Result<()> {
    if sig.is_null() {
        return Err(Error::NullSignature);
    }
    if mode == Mode::Taily && !sig.ends_with_minus() {
        return Err(Error::TailyNeedsMinus { signature: sig.to_string() });
    }
    Ok(())
}

/// Length of the minimum-length sequence for `sig`, from the mark counts
/// alone: `3q + s + 1` heady, `3q + s` taily, with `q` minus marks and `s` the
/// signature's score.
pub fn lambda_of(sig: &Signature, mode: Mode) -> Result<u32> {
    check_buildable(sig, mode)?;
    let (p, q) = (sig.plus_count(), sig.minus_count());
    Ok(match mode {
        Mode::Heady => p + 2 * q + 1,
        Mode::Taily => p + 2 * q,
    })
}

/// The shortest sequence with a given signature and final toss.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinLengthSeq {
    pub sequence: TossSequence,
    pub mode: Mode,
    pub lambda: u32,
}

impl MinLengthSeq {
    /// 0-based positions of the first 1 of every run of 1s.
    pub fn run_starts(&self) -> Vec<usize> {
        let t = self.sequence.tosses();
        (0..t.len()).filter(|&i| t[i] && (i == 0 || !t[i - 1])).collect()
    }
}

/// Build the minimum-length sequence: a run of `j` pluses becomes `j + 1`
/// ones, a minus closes the current run with a 0 (or stands alone as `1,0`),
/// and a heady sequence gets a final 1 when the signature ends in a minus.
pub fn min_length_sequence(sig: &Signature, mode: Mode) -> Result<MinLengthSeq> {
    check_buildable(sig, mode)?;
    let mut tosses = Vec::with_capacity(sig.len() * 2 + 1);
    let mut in_run = false;
    for &mark in sig.marks() {
        match mark {
            Mark::Plus => {
                if !in_run {
                    tosses.push(true);
                    in_run = true;
                }
                tosses.push(true);
            }
            Mark::Minus => {
                if !in_run {
                    tosses.push(true);
                }
                tosses.push(false);
                in_run = false;
            }
        }
    }
    if mode == Mode::Heady && !in_run {
        tosses.push(true);
    }
    let lambda = tosses.len() as u32;
    debug_assert_eq!(Ok(lambda), lambda_of(sig, mode));
    Ok(MinLengthSeq { sequence: TossSequence::new(tosses)?, mode, lambda })
}

/// The single length-`n` sequence with the null signature and the given
/// final toss: all tails, or all tails then one head. The generator does not
/// handle the null signature, so callers that need every sequence add this
/// one themselves.
pub fn null_signature_sequence(n: u32, mode: Mode) -> Result<TossSequence> {
    if n == 0 {
        return Err(Error::EmptySequence);
    }
    let mut tosses = vec![false; n as usize];
    tosses[n as usize - 1] = mode.last_toss();
    TossSequence::new(tosses)
}

/// Generator for every length-`n` sequence with a given signature and final
/// toss.
///
/// Zeros are inserted immediately before the first 1 of each run of 1s of the
/// minimum-length sequence and, for taily sequences, after its end. With a
/// fixed leading 1 the slot before the first run is closed. Sequences come out
/// in composition order.
#[derive(Debug, Clone)]
pub struct SequenceGenerator {
    base: MinLengthSeq,
    /// Positions in the base sequence that receive zeros; `base.len()` is the
    /// end slot.
    slots: Vec<usize>,
    surplus: usize,
    compositions: Compositions,
}

impl SequenceGenerator {
    pub fn new(sig: &Signature, n: u32, mode: Mode, fixed_leading_one: bool) -> Result<Self> {
        let base = min_length_sequence(sig, mode)?;
        if n < base.lambda {
            return Err(Error::TooShort { n, min_n: base.lambda });
        }
        let mut slots = base.run_starts();
        if mode == Mode::Taily {
            slots.push(base.sequence.len());
        }
        if fixed_leading_one {
            slots.remove(0);
        }
        let surplus = (n - base.lambda) as usize;
        if slots.is_empty() && surplus > 0 {
            return Err(Error::NoSlots { surplus: surplus as u32 });
        }
        let compositions = Compositions::new(surplus, slots.len());
        Ok(SequenceGenerator { base, slots, surplus, compositions })
    }

    pub fn base(&self) -> &MinLengthSeq {
        &self.base
    }

    pub fn slot_count(&self) -> usize {
        self.slots.len()
    }

    pub fn surplus(&self) -> usize {
        self.surplus
    }

    /// Apply one composition of the surplus across the slots.
    pub fn sequence_for(&self, parts: &[usize]) -> TossSequence {
        assert_eq!(parts.len(), self.slots.len(), "composition has wrong number of parts");
        let src = self.base.sequence.tosses();
        let mut out = Vec::with_capacity(src.len() + self.surplus);
        let mut slot = 0;
        for pos in 0..=src.len() {
            while slot < self.slots.len() && self.slots[slot] == pos {
                out.extend(std::iter::repeat(false).take(parts[slot]));
                slot += 1;
            }
            if let Some(&t) = src.get(pos) {
                out.push(t);
            }
        }
        TossSequence::new(out).expect("generated sequence is non-empty")
    }

    /// Iterate `(composition, sequence)` pairs.
    pub fn with_compositions(self) -> impl Iterator<Item = (Vec<usize>, TossSequence)> {
        let SequenceGenerator { base, slots, surplus, compositions } = self;
        let shell = SequenceGenerator {
            base,
            slots,
            surplus,
            compositions: Compositions::new(0, 0),
        };
        compositions.map(move |parts| {
            let seq = shell.sequence_for(&parts);
            (parts, seq)
        })
    }
}

impl Iterator for SequenceGenerator {
    type Item = TossSequence;

    fn next(&mut self) -> Option<TossSequence> {
        let parts = self.compositions.next()?;
        Some(self.sequence_for(&parts))
    }
}

/// All length-`n` sequences with signature `sig` ending as `mode`.
pub fn generate_sequences(
    sig: &Signature,
    n: u32,
    mode: Mode,
    fixed_leading_one: bool,
) -> Result<SequenceGenerator> {
    SequenceGenerator::new(sig, n, mode, fixed_leading_one)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sig(s: &str) -> Signature {
        s.parse().unwrap()
    }

    fn seq(s: &str) -> TossSequence {
        s.parse().unwrap()
    }

    #[test]
    fn signatures_of_worked_sequences() {
        assert_eq!(signature_of(&seq("00111001")), sig("++-"));
        assert_eq!(signature_of(&seq("01010011")), sig("--+"));
        assert!(signature_of(&seq("000")).is_null());
        assert_eq!(sig("").to_string(), "");
        assert_eq!(
            "+x".parse::<Signature>(),
            Err(Error::InvalidMark { ch: 'x', position: 2 })
        );
    }

    #[test]
    fn complements() {
        assert_eq!(complement(&sig("++-")), sig("--+"));
        assert_eq!(complement(&sig("+-+-+")), sig("-+-+-"));
        assert!(complement(&Signature::null()).is_null());
    }

    #[test]
    fn minimum_length_sequences() {
        let cases = [
            ("++-", "11101", 5),
            ("--+", "101011", 6),
            ("+-+-+", "11011011", 8),
            ("-+-+-", "101101101", 9),
            ("+", "11", 2),
            ("-", "101", 3),
        ];
        for (s, expect, lambda) in cases {
            let mu = min_length_sequence(&sig(s), Mode::Heady).unwrap();
            assert_eq!(mu.sequence, seq(expect), "{s}");
            assert_eq!(mu.lambda, lambda);
            assert_eq!(signature_of(&mu.sequence), sig(s));
        }
        let mu = min_length_sequence(&sig("-"), Mode::Taily).unwrap();
        assert_eq!(mu.sequence, seq("10"));
        let mu = min_length_sequence(&sig("+-"), Mode::Taily).unwrap();
        assert_eq!(mu.sequence, seq("110"));
    }

    #[test]
    fn lambdas() {
        assert_eq!(lambda_of(&sig("--+"), Mode::Heady), Ok(6));
        assert_eq!(lambda_of(&sig("-+--+"), Mode::Heady), Ok(9));
        assert_eq!(lambda_of(&sig("-"), Mode::Taily), Ok(2));
    }

    #[test]
    fn rejections() {
        assert_eq!(lambda_of(&Signature::null(), Mode::Heady), Err(Error::NullSignature));
        assert!(matches!(
            min_length_sequence(&sig("-+"), Mode::Taily),
            Err(Error::TailyNeedsMinus { .. })
        ));
        assert_eq!(
            generate_sequences(&sig("++-"), 4, Mode::Heady, false).unwrap_err(),
            Error::TooShort { n: 4, min_n: 5 }
        );
        assert_eq!(
            generate_sequences(&sig("++"), 5, Mode::Heady, true).unwrap_err(),
            Error::NoSlots { surplus: 2 }
        );
        let only: Vec<_> = generate_sequences(&sig("++"), 3, Mode::Heady, true).unwrap().collect();
        assert_eq!(only, vec![seq("111")]);
    }

    #[test]
    fn worked_generation() {
        let gen = generate_sequences(&sig("++-"), 8, Mode::Heady, false).unwrap();
        let all: Vec<_> = gen.with_compositions().collect();
        assert_eq!(all.len(), 4);
        assert!(all.contains(&(vec![2, 1], seq("00111001"))));
        assert!(all.contains(&(vec![0, 3], seq("11100001"))));

        let gen = generate_sequences(&sig("+-+-+"), 13, Mode::Heady, false).unwrap();
        assert_eq!(gen.sequence_for(&[2, 1, 2]), seq("0011001100011"));
        assert_eq!(gen.count(), 21);

        let gen = generate_sequences(&sig("-+-+-"), 14, Mode::Heady, true).unwrap();
        assert_eq!(gen.sequence_for(&[2, 1, 2]), seq("10001100110001"));
        assert_eq!(gen.count(), 21);

        let all: Vec<_> = generate_sequences(&sig("+"), 2, Mode::Heady, false).unwrap().collect();
        assert_eq!(all, vec![seq("11")]);
    }

    #[test]
    fn null_signature_sequences() {
        for n in 1..=10 {
            for mode in [Mode::Heady, Mode::Taily] {
                let x = null_signature_sequence(n, mode).unwrap();
                assert!(signature_of(&x).is_null());
                assert_eq!((x.len() as u32, x.mode()), (n, mode));
            }
        }
        assert_eq!(null_signature_sequence(3, Mode::Heady).unwrap(), seq("001"));
        assert!(null_signature_sequence(0, Mode::Taily).is_err());
    }

    #[test]
    fn taily_end_slot() {
        let all: Vec<_> = generate_sequences(&sig("-"), 4, Mode::Taily, false).unwrap().collect();
        assert_eq!(all, vec![seq("0010"), seq("0100"), seq("1000")]);
    }

    #[test]
    fn slot_counts() {
        for len in 1..=8u32 {
            for s in Signature::all_of_length(len) {
                let q = s.minus_count() as usize;
                let lambda = lambda_of(&s, Mode::Heady).unwrap();
                let g = generate_sequences(&s, lambda, Mode::Heady, false).unwrap();
                assert_eq!(g.slot_count(), q + 1);
                let g = generate_sequences(&s, lambda, Mode::Heady, true).unwrap();
                assert_eq!(g.slot_count(), q);
                if s.ends_with_minus() {
                    let lambda = lambda_of(&s, Mode::Taily).unwrap();
                    let g = generate_sequences(&s, lambda, Mode::Taily, false).unwrap();
                    assert_eq!(g.slot_count(), q + 1);
                    let g = generate_sequences(&s, lambda, Mode::Taily, true).unwrap();
                    assert_eq!(g.slot_count(), q);
                }
            }
        }
    }

    #[test]
    fn arrangement_counts() {
        assert_eq!(Signature::arrangements(2, 1).len(), 3);
        assert_eq!(Signature::arrangements(0, 0), vec![Signature::null()]);
        assert_eq!(Signature::all_of_length(10).len(), 1024);
    }

    fn arb_sig(max: usize) -> impl Strategy<Value = Signature> {
        prop::collection::vec(prop_oneof![Just(Mark::Plus), Just(Mark::Minus)], 1..=max)
            .prop_map(Signature::new)
    }

    proptest! {
        #[test]
        fn complement_is_involution(s in arb_sig(20)) {
            prop_assert_eq!(complement(&complement(&s)), s.clone());
            prop_assert_eq!(complement(&s).score(), -s.score());
        }

        #[test]
        fn signature_score_matches_sequence_score(v in prop::collection::vec(any::<bool>(), 1..40)) {
            let x = TossSequence::new(v).unwrap();
            prop_assert_eq!(signature_of(&x).score(), x.score().get());
        }

        #[test]
        fn generated_roundtrip(s in arb_sig(6), extra in 0u32..4, fixed in any::<bool>(), taily in any::<bool>()) {
            let mode = if taily { Mode::Taily } else { Mode::Heady };
            prop_assume!(mode == Mode::Heady || s.ends_with_minus());
            let n = lambda_of(&s, mode).unwrap() + extra;
            let Ok(gen) = generate_sequences(&s, n, mode, fixed) else {
                return Ok(());
            };
            let mut seen = std::collections::HashSet::new();
            for x in gen {
                prop_assert_eq!(x.len() as u32, n);
                prop_assert_eq!(signature_of(&x), s.clone());
                prop_assert_eq!(x.score().get(), s.score());
                prop_assert_eq!(x.mode(), mode);
                if fixed {
                    prop_assert!(x.first());
                }
                prop_assert!(seen.insert(x));
            }
        }
    }
}
