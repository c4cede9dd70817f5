//! Metric signature `(p, q)` of the real Clifford algebra R_{p,q}.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{CliffordError, Result};

/// Largest supported dimension. Dense storage is `2^n` coefficients.
pub const MAX_N: usize = 12;

/// `p` generators square to `+1`, the following `q` square to `-1`.
///
/// Generators are numbered `1..=n`; index `i` is negative iff `i > p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "(usize, usize)", into = "(usize, usize)")]
pub struct Signature {
    p: u8,
    q: u8,
}

impl Signature {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        let n = p + q;
        if n == 0 || n > MAX_N {
            return Err(CliffordError::InvalidSignature { p, q, max: MAX_N });
        }
        Ok(Self {
            p: p as u8,
            q: q as u8,
        })
    }

    #[inline]
    pub fn p(self) -> usize {
        self.p as usize
    }

    #[inline]
    pub fn q(self) -> usize {
        self.q as usize
    }

    #[inline]
    pub fn n(self) -> usize {
        (self.p + self.q) as usize
    }

    /// Number of basis blades, `2^n`.
    #[inline]
    pub fn dim(self) -> usize {
        1 << self.n()
    }

    /// Bitmask of the generators squaring to `-1` (bits `p..n`).
    #[inline]
    pub fn negative_mask(self) -> u32 {
        ((1u32 << self.n()) - 1) & !((1u32 << self.p) - 1)
    }

    /// `e_i^2` for the 1-based generator index `i`.
    pub fn square(self, i: usize) -> Result<i32> {
        if i == 0 || i > self.n() {
            return Err(CliffordError::GeneratorOutOfRange { index: i, n: self.n() });
        }
        Ok(if i <= self.p() { 1 } else { -1 })
    }

    /// All signatures with `1 <= p+q <= max_n`, ordered by `n` then `p`.
    pub fn all_up_to(max_n: usize) -> Result<Vec<Signature>> {
        if max_n > MAX_N {
            return Err(CliffordError::ParameterOutOfRange(format!(
                "max n {max_n} exceeds {MAX_N}"
            )));
        }
        Ok((1..=max_n)
            .flat_map(|n| (0..=n).map(move |p| Signature::new(p, n - p).unwrap()))
            .collect())
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.p, self.q)
    }
}

impl FromStr for Signature {
    type Err = CliffordError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || CliffordError::SignatureSyntax(s.to_string());
        let (p, q) = s.split_once(',').ok_or_else(bad)?;
        let p: usize = p.trim().parse().map_err(|_| bad())?;
        let q: usize = q.trim().parse().map_err(|_| bad())?;
        Signature::new(p, q)
    }
}

impl TryFrom<(usize, usize)> for Signature {
    type Error = CliffordError;

    fn try_from((p, q): (usize, usize)) -> Result<Self> {
        Signature::new(p, q)
    }
}

impl From<Signature> for (usize, usize) {
    fn from(sig: Signature) -> Self {
        (sig.p(), sig.q())
    }
}
