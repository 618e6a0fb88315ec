//! Exact decimal rendering of ratios of big integers.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

/// Render `num / den` with exactly `digits` digits after the decimal point,
/// rounding half to even on the last digit. Uses integer arithmetic only.
///
/// Panics if `den` is zero.
pub fn render_ratio(num: &BigInt, den: &BigUint, digits: u32) -> String {
    assert!(!den.is_zero(), "zero denominator");
    let negative = num.sign() == Sign::Minus;
    let scale = BigUint::from(10u32).pow(digits);
    let scaled = num.magnitude() * &scale;
    let (mut q, r) = scaled.div_rem(den);
    let twice = &r << 1usize;
    if twice > *den || (twice == *den && q.is_odd()) {
        q += BigUint::one();
    }
    let (int_part, frac_part) = q.div_rem(&scale);
    let sign = if negative && !q.is_zero() { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{:0>width$}", frac_part.to_string(), width = digits as usize)
    }
}
