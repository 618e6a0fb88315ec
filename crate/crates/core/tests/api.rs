use num_bigint::BigUint;

use streakcount_core::counting::count;
use streakcount_core::oracle::enumerate_distribution;
use streakcount_core::toss::score_range;
use streakcount_core::{
    classify, generate_sequences, signature_of, BigCount, ClosedForm, Count, Dp, DpTable, Mode,
    Outcome, Sweep, SweepMode, TableSweep, TossSequence,
};

fn as_big<C: Count>(c: &C) -> BigUint {
    c.to_big()
}

#[test]
fn scalar_types_agree_while_they_fit() {
    for n in 1..=60u32 {
        let (lo, hi) = score_range(n);
        for s in lo..=hi {
            for mode in [Mode::Heady, Mode::Taily] {
                let big = count::<BigCount>(mode, s, n);
                assert_eq!(as_big(&count::<u64>(mode, s, n)), big, "u64 {mode} s={s} n={n}");
                assert_eq!(as_big(&count::<u128>(mode, s, n)), big, "u128 {mode} s={s} n={n}");
            }
        }
    }
}

#[test]
fn dp_and_sweep_in_machine_words() {
    let closed = ClosedForm::<u128>::new();
    let mut dp = DpTable::<u128>::initial();
    for (i, dist) in TableSweep::<u128>::new(100, SweepMode::Both).enumerate() {
        let n = i as u32 + 1;
        if n > 1 {
            dp = dp.extend();
        }
        let want = closed.distribution(n).normalized();
        assert_eq!(dist.normalized(), want, "sweep n={n}");
        assert_eq!(dp.distribution().clone().normalized(), want, "dp n={n}");
    }
}

#[test]
fn aliases_are_usable() {
    let dp: Dp = Dp::at(12);
    let last = Sweep::new(12, SweepMode::Both).last().unwrap().normalized();
    assert_eq!(dp.distribution().clone().normalized(), last);
    assert_eq!(enumerate_distribution::<BigCount>(12).unwrap().normalized(), last);
}

#[test]
fn generated_sequences_classify_as_requested() {
    let sig = "+-+".parse().unwrap();
    let mut seen = 0;
    for x in generate_sequences(&sig, 11, Mode::Heady, false).unwrap() {
        assert_eq!(signature_of(&x), sig);
        assert_eq!(x.len(), 11);
        assert_eq!(classify(&x), Outcome::AliceWin);
        seen += 1;
    }
    assert!(seen > 0);
    let x: TossSequence = "0110".parse().unwrap();
    assert_eq!(classify(&x), Outcome::Tie);
}
