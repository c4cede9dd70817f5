//! Exact evaluation of the binomial identities and the blade sandwich sums
//! that isolate the scalar part of a multivector.

use crate::blade::{blade_product, reciprocal_blade, BladeMask};
use crate::error::{CliffordError, Result};
use crate::multivector::Multivector;
use crate::scalar::Scalar;
use crate::signature::MAX_N;

/// `C(n, k)` by the multiplicative formula; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        // exact at every step: acc * (n - i) is divisible by (i + 1)
        acc = acc * (n - i) / (i + 1);
    }
    acc as i64
}

fn check_nk(n: usize, k: usize) -> Result<()> {
    if n > MAX_N || k > n {
        return Err(CliffordError::ParameterOutOfRange(format!(
            "need 0 <= k <= n <= {MAX_N}, got n={n}, k={k}"
        )));
    }
    Ok(())
}

/// Summation range `max(0, p-(n-k)) ..= min(p, k)` for the split index.
fn split_range(n: usize, k: usize, p: usize) -> std::ops::RangeInclusive<usize> {
    p.saturating_sub(n - k)..=p.min(k)
}

/// `sum_l C(n-k, p-l) C(k, l)` over the admissible split indices `l`.
/// Equals `C(n, p)` (Vandermonde convolution).
pub fn vandermonde_sum(n: usize, k: usize, p: usize) -> Result<i64> {
    check_nk(n, k)?;
    if p > n {
        return Err(CliffordError::ParameterOutOfRange(format!(
            "need 0 <= p <= n, got n={n}, p={p}"
        )));
    }
    Ok(split_range(n, k, p)
        .map(|l| binomial((n - k) as u64, (p - l) as u64) * binomial(k as u64, l as u64))
        .sum())
}

/// `sum_p sum_l (-1)^{pk + l} C(n-k, p-l) C(k, l)`.
pub fn signed_binomial_sum(n: usize, k: usize) -> Result<i64> {
    check_nk(n, k)?;
    let mut total = 0i64;
    for p in 0..=n {
        for l in split_range(n, k, p) {
            let term = binomial((n - k) as u64, (p - l) as u64) * binomial(k as u64, l as u64);
            if (p * k + l).is_multiple_of(2) {
                total += term;
            } else {
                total -= term;
            }
        }
    }
    Ok(total)
}

/// Closed form of [`signed_binomial_sum`]: `2^n` when `k = 0` or `k = n` is odd,
/// zero otherwise.
pub fn signed_binomial_closed_form(n: usize, k: usize) -> i64 {
    if k == 0 || (k == n && n % 2 == 1) {
        1 << n
    } else {
        0
    }
}

/// Coefficient `c` in `sum_J e_J e_I e^J = c e_I` for a grade-`k` blade,
/// counted by how many of the `p` generators of `J` fall inside `I`:
/// `l` shared generators contribute `(-1)^{(p-l)k} (-1)^{l(k-1)}` each.
pub fn blade_sandwich_count(n: usize, k: usize) -> Result<i64> {
    check_nk(n, k)?;
    let mut total = 0i64;
    for p in 0..=n {
        for l in split_range(n, k, p) {
            let term = binomial((n - k) as u64, (p - l) as u64) * binomial(k as u64, l as u64);
            let exponent = (p - l) * k + l * k.saturating_sub(1);
            if exponent.is_multiple_of(2) {
                total += term;
            } else {
                total -= term;
            }
        }
    }
    Ok(total)
}

/// `sum_J e_J a e^J` over all `2^n` blades `J`, the empty one included.
///
/// `e_J e_X e^J` is always `± e_X`, so each coefficient is scaled by the
/// exact integer total of those signs. Cancellation is then exact for
/// floating point scalars too.
pub fn sandwich_sum<T: Scalar>(a: &Multivector<T>) -> Multivector<T> {
    let sig = a.sig();
    let mut out = vec![T::zero(); sig.dim()];
    for (x, &c) in a.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let x = BladeMask::new(x as u32);
        let mut total = 0i64;
        for j in BladeMask::all(sig) {
            let recip = reciprocal_blade(sig, j);
            let left = blade_product(sig, j, x);
            let both = blade_product(sig, left.mask, recip.mask);
            debug_assert_eq!(both.mask, x);
            total += (left.sign * both.sign * recip.sign).to_i32() as i64;
        }
        out[x.index()] = c * T::from_i64_exact(total);
    }
    Multivector::from_coeffs(sig, out).expect("length 2^n")
}

/// The unnormalised scalar-part expression and the power of two it must be
/// divided by: `sum_J e_J a e^J` over `2^n` for even `n`, and
/// `sum_J e_J a e^J + sum_J e_J a_* e^J` over `2^{n+1}` for odd `n`.
pub fn scalar_part_expression<T: Scalar>(a: &Multivector<T>) -> (Multivector<T>, u32) {
    let n = a.sig().n() as u32;
    let direct = sandwich_sum(a);
    if n.is_multiple_of(2) {
        (direct, n)
    } else {
        let twisted = sandwich_sum(&a.principal_involution());
        (&direct + &twisted, n + 1)
    }
}

/// `<a>_0` recovered purely through blade sandwiches.
pub fn scalar_part_by_sandwich<T: Scalar>(a: &Multivector<T>) -> T {
    let (expr, shift) = scalar_part_expression(a);
    expr.scalar_part() / T::pow2(shift)
}

/// Expected value of `sum_J e_J e_I e^J`.
pub fn blade_sandwich_expected<T: Scalar>(sig: crate::Signature, blade: BladeMask) -> Multivector<T> {
    let n = sig.n();
    let k = blade.grade();
    if k == 0 || (k == n && n % 2 == 1) {
        Multivector::blade(sig, blade, T::pow2(n as u32))
    } else {
        Multivector::zero(sig)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Signature;

    fn pascal(max: usize) -> Vec<Vec<i64>> {
        let mut rows: Vec<Vec<i64>> = vec![vec![1]];
        for n in 1..=max {
            let prev = &rows[n - 1];
            let mut row = vec![1i64; n + 1];
            for k in 1..n {
                row[k] = prev[k - 1] + prev[k];
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn binomial_matches_pascal() {
        let table = pascal(20);
        for (n, row) in table.iter().enumerate() {
            for (k, &c) in row.iter().enumerate() {
                assert_eq!(binomial(n as u64, k as u64), c);
            }
            assert_eq!(binomial(n as u64, n as u64 + 1), 0);
        }
    }

    #[test]
    fn vandermonde_examples() {
        assert_eq!(vandermonde_sum(5, 2, 3).unwrap(), 10);
        for n in 0..=12 {
            for p in 0..=n {
                assert_eq!(vandermonde_sum(n, 0, p).unwrap(), binomial(n as u64, p as u64));
            }
        }
        assert!(vandermonde_sum(3, 4, 1).is_err());
        assert!(vandermonde_sum(3, 1, 4).is_err());
        assert!(vandermonde_sum(13, 1, 1).is_err());
    }

    #[test]
    fn signed_binomial_examples() {
        assert_eq!(signed_binomial_sum(3, 3).unwrap(), 8);
        assert_eq!(signed_binomial_sum(4, 2).unwrap(), 0);
        assert_eq!(signed_binomial_sum(4, 0).unwrap(), 16);
        assert_eq!(signed_binomial_sum(4, 4).unwrap(), 0);
        assert!(signed_binomial_sum(2, 3).is_err());
    }

    #[test]
    fn counting_argument_agrees_with_signed_sum() {
        for n in 0..=12 {
            for k in 0..=n {
                assert_eq!(blade_sandwich_count(n, k).unwrap(), signed_binomial_sum(n, k).unwrap());
            }
        }
    }

    #[test]
    fn sandwich_examples() {
        let s = Signature::new(1, 1).unwrap();
        assert_eq!(sandwich_sum(&Multivector::<i64>::scalar(s, 1)), Multivector::scalar(s, 4));

        let s = Signature::new(0, 2).unwrap();
        let e1 = Multivector::<i64>::blade(s, BladeMask::new(1), 1);
        assert!(sandwich_sum(&e1).is_zero());

        let s = Signature::new(0, 3).unwrap();
        let e123 = Multivector::<i64>::blade(s, BladeMask::new(7), 1);
        assert_eq!(sandwich_sum(&e123), e123.scale(8));
    }

    #[test]
    fn sandwich_matches_literal_products() {
        let s = Signature::new(2, 1).unwrap();
        let a = Multivector::from_fn(s, |m| 2 * m.bits() as i64 - 5);
        let mut literal = Multivector::zero(s);
        for j in BladeMask::all(s) {
            let ej = Multivector::blade(s, j, 1i64);
            let ej_recip = Multivector::from_signed_blade(s, reciprocal_blade(s, j));
            literal = &literal + &ej.gp(&a).unwrap().gp(&ej_recip).unwrap();
        }
        assert_eq!(sandwich_sum(&a), literal);
    }

    #[test]
    fn complex_real_part_identity() {
        // R_{0,1}: (a - i a i) + (a_* - i a_* i) = 4 Re a
        let s = Signature::new(0, 1).unwrap();
        let a = Multivector::<i64>::parse(s, "3 - 7*e1").unwrap();
        let (expr, shift) = scalar_part_expression(&a);
        assert_eq!(shift, 2);
        assert_eq!(expr, Multivector::scalar(s, 12));
        assert_eq!(scalar_part_by_sandwich(&a), 3);
    }

    #[test]
    fn quaternion_real_part_identity() {
        let s = Signature::new(0, 2).unwrap();
        let a = Multivector::<i64>::parse(s, "1 + 2*e1 + 3*e2 + 4*e12").unwrap();
        let (expr, shift) = scalar_part_expression(&a);
        assert_eq!((expr, shift), (Multivector::scalar(s, 4), 2));
        assert_eq!(scalar_part_by_sandwich(&a), 1);
    }

    #[test]
    fn float_and_rational_scalars() {
        use num_rational::Rational64;
        let s = Signature::new(2, 3).unwrap();
        let a = Multivector::<f64>::from_fn(s, |m| 0.25 * m.bits() as f64 - 1.5);
        assert_eq!(scalar_part_by_sandwich(&a), -1.5);
        let q = Multivector::from_fn(s, |m| Rational64::new(m.bits() as i64 + 1, 3));
        assert_eq!(scalar_part_by_sandwich(&q), Rational64::new(1, 3));
    }
}
