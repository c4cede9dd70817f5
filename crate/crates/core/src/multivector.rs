//! Dense multivectors over `R_{p,q}`.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_traits::Signed;

use crate::blade::{
    blade_product, conjugation_sign, involution_sign, reciprocal_blade, reversion_sign, BladeMask,
    Sign, SignedBlade,
};
use crate::error::{CliffordError, Result};
use crate::scalar::Scalar;
use crate::signature::Signature;

/// `2^n` coefficients indexed by [`BladeMask`]; index 0 is the scalar part.
#[derive(Debug, Clone, PartialEq)]
pub struct Multivector<T> {
    sig: Signature,
    coeffs: Vec<T>,
}

impl<T: Scalar> Multivector<T> {
    pub fn zero(sig: Signature) -> Self {
        Multivector {
            sig,
            coeffs: vec![T::zero(); sig.dim()],
        }
    }

    pub fn scalar(sig: Signature, value: T) -> Self {
        Self::blade(sig, BladeMask::SCALAR, value)
    }

    /// `value * e_I`.
    pub fn blade(sig: Signature, mask: BladeMask, value: T) -> Self {
        assert!(mask.is_valid_for(sig), "blade {mask} outside signature {sig}");
        let mut mv = Self::zero(sig);
        mv.coeffs[mask.index()] = value;
        mv
    }

    pub fn from_signed_blade(sig: Signature, blade: SignedBlade) -> Self {
        Self::blade(sig, blade.mask, T::one().signed(blade.sign))
    }

    pub fn from_coeffs(sig: Signature, coeffs: Vec<T>) -> Result<Self> {
        if coeffs.len() != sig.dim() {
            return Err(CliffordError::CoefficientCount {
                expected: sig.dim(),
                got: coeffs.len(),
            });
        }
        Ok(Multivector { sig, coeffs })
    }

    pub fn from_fn(sig: Signature, mut f: impl FnMut(BladeMask) -> T) -> Self {
        Multivector {
            sig,
            coeffs: BladeMask::all(sig).map(&mut f).collect(),
        }
    }

    #[inline]
    pub fn sig(&self) -> Signature {
        self.sig
    }

    #[inline]
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    #[inline]
    pub fn get(&self, mask: BladeMask) -> T {
        self.coeffs[mask.index()]
    }

    #[inline]
    pub fn set(&mut self, mask: BladeMask, value: T) {
        self.coeffs[mask.index()] = value;
    }

    /// Scalar part, `<a>_0`.
    #[inline]
    pub fn scalar_part(&self) -> T {
        self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// True when every non-scalar coefficient vanishes.
    pub fn is_scalar(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn map(&self, f: impl Fn(T) -> T) -> Self {
        Multivector {
            sig: self.sig,
            coeffs: self.coeffs.iter().map(|&c| f(c)).collect(),
        }
    }

    pub fn scale(&self, factor: T) -> Self {
        self.map(|c| c * factor)
    }

    fn check_sig(&self, other: &Self) -> Result<()> {
        if self.sig != other.sig {
            return Err(CliffordError::SignatureMismatch {
                left: self.sig,
                right: other.sig,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(T, T) -> T) -> Self {
        Multivector {
            sig: self.sig,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    /// Geometric product, the bilinear extension of [`blade_product`].
    ///
    /// Zero coefficients of `self` are skipped, so products with sparse
    /// operands cost proportionally less.
    pub fn gp(&self, other: &Self) -> Result<Self> {
        self.check_sig(other)?;
        let sig = self.sig;
        let mut out = vec![T::zero(); sig.dim()];
        for (x, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (y, &b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let prod = blade_product(sig, BladeMask::new(x as u32), BladeMask::new(y as u32));
                out[prod.mask.index()] += (a * b).signed(prod.sign);
            }
        }
        Ok(Multivector { sig, coeffs: out })
    }

    /// `(±e_B) * self` in `O(2^n)`.
    pub fn left_mul_blade(&self, blade: SignedBlade) -> Self {
        let sig = self.sig;
        let mut out = vec![T::zero(); sig.dim()];
        for (x, &a) in self.coeffs.iter().enumerate() {
            let prod = blade_product(sig, blade.mask, BladeMask::new(x as u32));
            out[prod.mask.index()] = a.signed(prod.sign * blade.sign);
        }
        Multivector { sig, coeffs: out }
    }

    /// `self * (±e_B)` in `O(2^n)`.
    pub fn right_mul_blade(&self, blade: SignedBlade) -> Self {
        let sig = self.sig;
        let mut out = vec![T::zero(); sig.dim()];
        for (x, &a) in self.coeffs.iter().enumerate() {
            let prod = blade_product(sig, BladeMask::new(x as u32), blade.mask);
            out[prod.mask.index()] = a.signed(prod.sign * blade.sign);
        }
        Multivector { sig, coeffs: out }
    }

    /// `<a>_k`.
    pub fn grade_project(&self, k: usize) -> Result<Self> {
        if k > self.sig.n() {
            return Err(CliffordError::GradeOutOfRange {
                grade: k,
                n: self.sig.n(),
            });
        }
        Ok(Self::from_fn(self.sig, |m| {
            if m.grade() == k {
                self.get(m)
            } else {
                T::zero()
            }
        }))
    }

    fn grade_signed(&self, sign_of: impl Fn(usize) -> Sign) -> Self {
        Self::from_fn(self.sig, |m| self.get(m).signed(sign_of(m.grade())))
    }

    /// `a_*`: grade `k` scaled by `(-1)^k`. An algebra automorphism.
    pub fn principal_involution(&self) -> Self {
        self.grade_signed(involution_sign)
    }

    /// Clifford conjugation: grade `k` scaled by `(-1)^{k(k+1)/2}`.
    pub fn conjugation(&self) -> Self {
        self.grade_signed(conjugation_sign)
    }

    /// `a~`: grade `k` scaled by `(-1)^{k(k-1)/2}`.
    pub fn reversion(&self) -> Self {
        self.grade_signed(reversion_sign)
    }

    /// Component along `e_I` computed as `<a e^I>_0`.
    ///
    /// Only blades `x` with `e_x e^I` scalar contribute, i.e. `x = I`, so this
    /// evaluates the single product term instead of the whole product.
    pub fn coeff(&self, mask: BladeMask) -> T {
        assert!(mask.is_valid_for(self.sig), "blade {mask} outside {}", self.sig);
        let recip = reciprocal_blade(self.sig, mask);
        let prod = blade_product(self.sig, mask, recip.mask);
        debug_assert_eq!(prod.mask, BladeMask::SCALAR);
        self.get(mask).signed(prod.sign * recip.sign)
    }
}

impl<T: Scalar> Add for &Multivector<T> {
    type Output = Multivector<T>;

    /// Panics on mismatched signatures; see [`Multivector::try_add`].
    fn add(self, rhs: Self) -> Multivector<T> {
        self.try_add(rhs).expect("signature mismatch in add")
    }
}

impl<T: Scalar> Sub for &Multivector<T> {
    type Output = Multivector<T>;

    fn sub(self, rhs: Self) -> Multivector<T> {
        self.try_sub(rhs).expect("signature mismatch in sub")
    }
}

impl<T: Scalar> Neg for &Multivector<T> {
    type Output = Multivector<T>;

    fn neg(self) -> Multivector<T> {
        self.map(|c| -c)
    }
}

// Text format: `3.5*e13 - 2*e2 + 1`. Terms are written in mask order, the
// unit coefficient is elided (`e12`, `-e12`) and zero prints as `0`.

impl<T> fmt::Display for Multivector<T>
where
    T: Scalar + Signed + fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for m in BladeMask::all(self.sig) {
            let c = self.get(m);
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            if m == BladeMask::SCALAR {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl<T: Scalar + FromStr> Multivector<T> {
    /// Parses the text format. Repeated blades accumulate; `e0` and bare
    /// numbers denote the scalar.
    pub fn parse(sig: Signature, text: &str) -> Result<Self> {
        let mut mv = Self::zero(sig);
        let terms = split_terms(text)?;
        if terms.is_empty() {
            return Err(CliffordError::Parse("empty input".into()));
        }
        for (sign, term) in terms {
            let (value, mask) = parse_term::<T>(sig, &term)?;
            let idx = mask.index();
            mv.coeffs[idx] += value.signed(sign);
        }
        Ok(mv)
    }
}

fn split_terms(text: &str) -> Result<Vec<(Sign, String)>> {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let dangling = || CliffordError::Parse(format!("dangling operator in {text:?}"));
    let mut terms = Vec::new();
    let mut sign = Sign::Pos;
    let mut cur = String::new();
    let mut pending_op = false;
    for (i, &ch) in chars.iter().enumerate() {
        if ch == '+' || ch == '-' {
            // exponent sign inside a number such as `1.5e-3`
            let in_exponent = i >= 2
                && matches!(chars[i - 1], 'e' | 'E')
                && (chars[i - 2].is_ascii_digit() || chars[i - 2] == '.')
                && !cur.contains('*');
            if in_exponent {
                cur.push(ch);
                continue;
            }
            if cur.is_empty() {
                // only a single leading unary sign is allowed
                if i != 0 {
                    return Err(dangling());
                }
            } else {
                terms.push((sign, std::mem::take(&mut cur)));
            }
            sign = if ch == '-' { Sign::Neg } else { Sign::Pos };
            pending_op = true;
        } else {
            cur.push(ch);
            pending_op = false;
        }
    }
    if pending_op {
        return Err(dangling());
    }
    if !cur.is_empty() {
        terms.push((sign, cur));
    }
    Ok(terms)
}

fn parse_term<T: Scalar + FromStr>(sig: Signature, term: &str) -> Result<(T, BladeMask)> {
    let bad_number = || CliffordError::Parse(format!("bad coefficient in term {term:?}"));
    match term.split_once('*') {
        Some((coef, blade)) => {
            let value = coef.parse::<T>().map_err(|_| bad_number())?;
            Ok((value, parse_blade(sig, blade)?))
        }
        None if term.starts_with('e') => Ok((T::one(), parse_blade(sig, term)?)),
        None => Ok((term.parse::<T>().map_err(|_| bad_number())?, BladeMask::SCALAR)),
    }
}

fn parse_blade(sig: Signature, token: &str) -> Result<BladeMask> {
    let digits = token
        .strip_prefix('e')
        .ok_or_else(|| CliffordError::Parse(format!("expected blade, got {token:?}")))?;
    if digits == "0" {
        return Ok(BladeMask::SCALAR);
    }
    let bad = || CliffordError::Parse(format!("bad blade {token:?}"));
    if digits.is_empty() {
        return Err(bad());
    }
    let indices: Vec<usize> = if digits.contains('_') {
        digits
            .split('_')
            .map(|s| s.parse::<usize>().map_err(|_| bad()))
            .collect::<Result<_>>()?
    } else {
        digits
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
            .collect::<Result<_>>()?
    };
    BladeMask::from_indices(sig, &indices)
}
