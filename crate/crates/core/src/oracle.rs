//! Reference blade product by literal word rewriting.
//!
//! A product of generators is reduced with nothing but the defining
//! relations: swap an adjacent descending pair (flipping the sign) or cancel
//! an adjacent equal pair (multiplying by its square). It is quadratic and
//! slow, and shares no code with the bitmask kernel in [`crate::blade`].

use crate::blade::{BladeMask, Sign, SignedBlade};
use crate::error::{CliffordError, Result};
use crate::signature::Signature;

/// An unreduced product `e_{w_1} e_{w_2} ... e_{w_m}` of generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorWord {
    sig: Signature,
    word: Vec<usize>,
}

impl GeneratorWord {
    pub fn new(sig: Signature, word: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = word.iter().find(|&&i| i == 0 || i > sig.n()) {
            return Err(CliffordError::GeneratorOutOfRange { index: bad, n: sig.n() });
        }
        Ok(GeneratorWord { sig, word })
    }

    /// Ascending expansion of a canonical blade.
    pub fn from_blade(sig: Signature, blade: BladeMask) -> Self {
        GeneratorWord {
            sig,
            word: blade.indices().collect(),
        }
    }

    pub fn concat(&self, other: &GeneratorWord) -> Self {
        assert_eq!(self.sig, other.sig);
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        GeneratorWord { sig: self.sig, word }
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn letters(&self) -> &[usize] {
        &self.word
    }
}

/// Reduction result plus the number of rewrite steps taken.
pub fn reduce_word_counted(w: &GeneratorWord) -> (SignedBlade, usize) {
    let mut word = w.word.clone();
    let mut negative = false;
    let mut steps = 0;
    loop {
        let mut changed = false;
        let mut i = 0;
        while i + 1 < word.len() {
            let (x, y) = (word[i], word[i + 1]);
            if x > y {
                word.swap(i, i + 1);
                negative = !negative;
                steps += 1;
                changed = true;
            } else if x == y {
                if x > w.sig.p() {
                    negative = !negative;
                }
                word.drain(i..i + 2);
                steps += 1;
                changed = true;
                continue;
            }
            i += 1;
        }
        if !changed {
            break;
        }
    }
    let mask = word.iter().fold(0u32, |m, &i| m | 1 << (i - 1));
    let sign = if negative { Sign::Neg } else { Sign::Pos };
    (SignedBlade::new(sign, BladeMask::new(mask)), steps)
}

/// Reduces a generator word to `± e_I` with `I` strictly ascending.
pub fn reduce_word(w: &GeneratorWord) -> SignedBlade {
    reduce_word_counted(w).0
}

/// `e_A e_B` computed by concatenating both expansions and reducing.
pub fn oracle_product(a: BladeMask, b: BladeMask, sig: Signature) -> SignedBlade {
    let word = GeneratorWord::from_blade(sig, a).concat(&GeneratorWord::from_blade(sig, b));
    reduce_word(&word)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(p: usize, q: usize) -> Signature {
        Signature::new(p, q).unwrap()
    }

    fn word(s: Signature, w: &[usize]) -> GeneratorWord {
        GeneratorWord::new(s, w.to_vec()).unwrap()
    }

    #[test]
    fn small_words() {
        let s = sig(0, 2);
        assert_eq!(reduce_word(&word(s, &[2, 1])), SignedBlade::new(Sign::Neg, BladeMask::new(3)));
        assert_eq!(reduce_word(&word(s, &[1, 1])), SignedBlade::new(Sign::Neg, BladeMask::SCALAR));
        assert_eq!(reduce_word(&word(s, &[])), SignedBlade::positive(BladeMask::SCALAR));
        assert_eq!(
            oracle_product(BladeMask::new(3), BladeMask::new(3), s),
            SignedBlade::new(Sign::Neg, BladeMask::SCALAR)
        );
    }

    #[test]
    fn scalar_left_identity() {
        let s = sig(2, 3);
        for m in BladeMask::all(s) {
            assert_eq!(oracle_product(BladeMask::SCALAR, m, s), SignedBlade::positive(m));
        }
    }

    #[test]
    fn rejects_bad_letters() {
        assert!(GeneratorWord::new(sig(1, 1), vec![1, 3]).is_err());
        assert!(GeneratorWord::new(sig(1, 1), vec![0]).is_err());
    }

    #[test]
    fn step_bound_on_reversed_word() {
        let s = sig(6, 0);
        let w = word(s, &[6, 5, 4, 3, 2, 1, 1, 2, 3, 4, 5, 6]);
        let (res, steps) = reduce_word_counted(&w);
        assert!(steps <= w.letters().len().pow(2));
        // e_{654321} e_{123456} = (e_{654321})(e_{654321})~ = 1 in a positive metric
        assert_eq!(res, SignedBlade::positive(BladeMask::SCALAR));
    }
}
