//! The count type abstraction.
//!
//! Every counting path works over any exact unsigned integer type. Machine
//! words are fast but overflow quickly (`u64` holds the full distribution up
//! to roughly n = 62, `u128` to roughly n = 126); [`BigCount`](crate::BigCount)
//! never overflows. Floating-point types are deliberately not counts: the
//! incremental path relies on exact integer division.

use std::fmt::{Debug, Display};
use std::ops::AddAssign;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{FromPrimitive, Unsigned};

/// An exact, non-negative integer usable as a sequence count.
pub trait Count:
    Integer
    + Unsigned
    + Clone
    + FromPrimitive
    + Display
    + Debug
    + Send
    + Sync
    + for<'a> AddAssign<&'a Self>
    + 'static
{
    /// Lossless conversion from a machine count. Panics if the value does not
    /// fit, which for the provided impls can never happen.
    fn from_u64_exact(v: u64) -> Self {
        Self::from_u64(v).expect("u64 value fits in count type")
    }

    /// Convert to an arbitrary-precision value.
    fn to_big(&self) -> BigUint;
}

impl Count for u64 {
    fn to_big(&self) -> BigUint {
        BigUint::from(*self)
    }
}

impl Count for u128 {
    fn to_big(&self) -> BigUint {
        BigUint::from(*self)
    }
}

impl Count for BigUint {
    fn to_big(&self) -> BigUint {
        self.clone()
    }
}

