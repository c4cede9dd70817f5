//! Scalar types a multivector can carry.
//!
//! Everything algebraic in this crate (products, involutions, the sandwich
//! sums) only needs a commutative ring with negation, so it is written once
//! against [`Scalar`]. Floating point (`f32`, `f64`), machine integers and
//! `num_rational` ratios all qualify. Integer and rational scalars give exact
//! results, which is what the identity sweeps rely on.

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{Num, NumAssign};

use crate::blade::Sign;

/// Ring element usable as a multivector coefficient.
pub trait Scalar:
    Copy + Debug + PartialEq + Num + NumAssign + Neg<Output = Self> + Send + Sync + 'static
{
    /// `2^k` in this scalar type, built by doubling so it works for every ring.
    fn pow2(k: u32) -> Self {
        let two = Self::one() + Self::one();
        (0..k).fold(Self::one(), |acc, _| acc * two)
    }

    /// The integer `v` as a ring element, by binary expansion.
    fn from_i64_exact(v: i64) -> Self {
        let mut acc = Self::zero();
        let mut bit = Self::one();
        let mut rest = v.unsigned_abs();
        while rest != 0 {
            if rest & 1 == 1 {
                acc += bit;
            }
            bit = bit + bit;
            rest >>= 1;
        }
        if v < 0 {
            -acc
        } else {
            acc
        }
    }

    #[inline]
    fn signed(self, sign: Sign) -> Self {
        match sign {
            Sign::Pos => self,
            Sign::Neg => -self,
        }
    }
}

impl<T> Scalar for T where
    T: Copy + Debug + PartialEq + Num + NumAssign + Neg<Output = T> + Send + Sync + 'static
{
}

/// Floating point scalars, needed where the math leaves the ring
/// (trigonometric targets, Bernstein evaluation on real grids).
pub trait Real: Scalar + num_traits::Float + num_traits::FloatConst + num_traits::FromPrimitive {}

impl<T> Real for T where
    T: Scalar + num_traits::Float + num_traits::FloatConst + num_traits::FromPrimitive
{
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    #[test]
    fn pow2_in_each_ring() {
        assert_eq!(i64::pow2(12), 4096);
        assert_eq!(f64::pow2(3), 8.0);
        assert_eq!(Rational64::pow2(4), Rational64::from_integer(16));
        assert_eq!(i32::pow2(0), 1);
    }

    #[test]
    fn integers_embed_exactly() {
        for v in [-4097i64, -1, 0, 1, 2, 3, 255, 4096] {
            assert_eq!(i64::from_i64_exact(v), v);
            assert_eq!(f64::from_i64_exact(v), v as f64);
            assert_eq!(Rational64::from_i64_exact(v), Rational64::from_integer(v));
        }
    }

    #[test]
    fn signed_flips_only_on_neg() {
        assert_eq!(3i64.signed(Sign::Pos), 3);
        assert_eq!(3i64.signed(Sign::Neg), -3);
    }
}
