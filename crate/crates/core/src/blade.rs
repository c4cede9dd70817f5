//! Basis blades as bitmasks and the sign rules of the blade product.
//!
//! Bit `i-1` of a mask stands for generator `e_i`; a mask always denotes the
//! blade with its generators in ascending index order, so `0b101` is `e_13`.

use std::fmt;
use std::ops::{Mul, Neg};

use serde::{Deserialize, Serialize};

use crate::error::{CliffordError, Result};
use crate::signature::Signature;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    #[inline]
    pub fn from_parity(odd: bool) -> Self {
        if odd {
            Sign::Neg
        } else {
            Sign::Pos
        }
    }

    #[inline]
    pub fn to_i32(self) -> i32 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    #[inline]
    pub fn is_neg(self) -> bool {
        self == Sign::Neg
    }
}

impl Mul for Sign {
    type Output = Sign;

    #[inline]
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self.is_neg() != rhs.is_neg())
    }
}

impl Neg for Sign {
    type Output = Sign;

    #[inline]
    fn neg(self) -> Sign {
        Sign::from_parity(!self.is_neg())
    }
}

/// A canonical basis blade `e_I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BladeMask(u32);

impl BladeMask {
    pub const SCALAR: BladeMask = BladeMask(0);

    #[inline]
    pub const fn new(mask: u32) -> Self {
        BladeMask(mask)
    }

    pub fn checked(sig: Signature, mask: u32) -> Result<Self> {
        let blade = BladeMask(mask);
        if blade.is_valid_for(sig) {
            Ok(blade)
        } else {
            Err(CliffordError::BladeOutOfRange { mask, n: sig.n() })
        }
    }

    /// Blade from 1-based generator indices, which must be strictly ascending.
    pub fn from_indices(sig: Signature, indices: &[usize]) -> Result<Self> {
        let mut mask = 0u32;
        let mut last = 0;
        for &i in indices {
            if i == 0 || i > sig.n() {
                return Err(CliffordError::GeneratorOutOfRange { index: i, n: sig.n() });
            }
            if i <= last {
                return Err(CliffordError::Parse(format!(
                    "blade indices must be strictly ascending, got {indices:?}"
                )));
            }
            last = i;
            mask |= 1 << (i - 1);
        }
        Ok(BladeMask(mask))
    }

    /// The single generator `e_i`.
    pub fn generator(sig: Signature, i: usize) -> Result<Self> {
        Self::from_indices(sig, &[i])
    }

    /// The pseudoscalar `e_{12...n}`.
    pub fn pseudoscalar(sig: Signature) -> Self {
        BladeMask((1 << sig.n()) - 1)
    }

    #[inline]
    pub const fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub const fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub const fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_valid_for(self, sig: Signature) -> bool {
        (self.0 >> sig.n()) == 0
    }

    /// 1-based generator indices in ascending order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..32).filter(move |b| mask & (1 << b) != 0).map(|b| b + 1)
    }

    /// All `2^n` blades in mask order.
    pub fn all(sig: Signature) -> impl Iterator<Item = BladeMask> {
        (0..sig.dim() as u32).map(BladeMask)
    }

    /// Text label: `1` for the scalar, `e13` for `e_1 e_3`. When any index
    /// exceeds 9 the indices are separated by underscores (`e1_10`).
    pub fn label(self) -> String {
        if self.0 == 0 {
            return "1".to_string();
        }
        let idx: Vec<String> = self.indices().map(|i| i.to_string()).collect();
        if self.indices().any(|i| i > 9) {
            format!("e{}", idx.join("_"))
        } else {
            format!("e{}", idx.concat())
        }
    }
}

impl fmt::Display for BladeMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// `±e_I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedBlade {
    pub sign: Sign,
    pub mask: BladeMask,
}

impl SignedBlade {
    #[inline]
    pub fn new(sign: Sign, mask: BladeMask) -> Self {
        SignedBlade { sign, mask }
    }

    #[inline]
    pub fn positive(mask: BladeMask) -> Self {
        SignedBlade::new(Sign::Pos, mask)
    }
}

impl fmt::Display for SignedBlade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign.is_neg() { '-' } else { '+' };
        write!(f, "{s}{}", self.mask)
    }
}

/// Sign picked up by moving the generators of `b` left past those of `a`
/// into ascending order: for every set bit of `b`, count the set bits of `a`
/// strictly above it. Only the parity matters, so the counts are taken from
/// a suffix-parity mask of `a`.
#[inline]
pub fn reorder_sign(a: BladeMask, b: BladeMask) -> Sign {
    // bit i of `above` = parity of the bits of `a` at positions > i
    let mut above = a.0 >> 1;
    above ^= above >> 1;
    above ^= above >> 2;
    above ^= above >> 4;
    above ^= above >> 8;
    above ^= above >> 16;
    Sign::from_parity((above & b.0).count_ones() & 1 == 1)
}

/// Reference swap count: the literal per-bit loop.
#[cfg(test)]
fn reorder_sign_by_counting(a: BladeMask, b: BladeMask) -> Sign {
    let mut swaps = 0;
    for i in 0..32 {
        if b.0 >> i & 1 == 1 {
            swaps += (a.0 >> (i + 1)).count_ones();
        }
    }
    Sign::from_parity(swaps % 2 == 1)
}

/// Product of two basis blades in `R_{p,q}`: `e_A e_B = s e_{A xor B}`.
#[inline]
pub fn blade_product(sig: Signature, a: BladeMask, b: BladeMask) -> SignedBlade {
    debug_assert!(a.is_valid_for(sig) && b.is_valid_for(sig));
    let metric = Sign::from_parity((a.0 & b.0 & sig.negative_mask()).count_ones() & 1 == 1);
    SignedBlade::new(reorder_sign(a, b) * metric, BladeMask(a.0 ^ b.0))
}

/// Sign of the reversion on a grade-`k` blade, `(-1)^{k(k-1)/2}`.
#[inline]
pub fn reversion_sign(grade: usize) -> Sign {
    Sign::from_parity((grade * grade.wrapping_sub(1) / 2) & 1 == 1)
}

/// Sign of the principal involution on a grade-`k` blade, `(-1)^k`.
#[inline]
pub fn involution_sign(grade: usize) -> Sign {
    Sign::from_parity(grade & 1 == 1)
}

/// Sign of the Clifford conjugation on a grade-`k` blade, `(-1)^{k(k+1)/2}`.
#[inline]
pub fn conjugation_sign(grade: usize) -> Sign {
    Sign::from_parity((grade * (grade + 1) / 2) & 1 == 1)
}

/// Reciprocal blade `e^J = e^{j_k} ... e^{j_1}` with `e^i = e_i` for `i <= p`
/// and `e^i = -e_i` otherwise. Always `± e_J`, and `e_J e^J = 1`.
#[inline]
pub fn reciprocal_blade(sig: Signature, j: BladeMask) -> SignedBlade {
    debug_assert!(j.is_valid_for(sig));
    let negatives = (j.0 & sig.negative_mask()).count_ones();
    let sign = Sign::from_parity(negatives & 1 == 1) * reversion_sign(j.grade());
    SignedBlade::new(sign, j)
}
