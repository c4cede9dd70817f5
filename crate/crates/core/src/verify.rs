//! Verification sweeps over the supported parameter range, producing
//! serialisable [`IdentityReport`]s.
//!
//! Independent cases run in parallel; the returned reports are always in
//! the same order (identity family, then signature, then blade).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::blade::{blade_product, reciprocal_blade, BladeMask};
use crate::error::{CliffordError, Result};
use crate::identities::{
    blade_sandwich_expected, sandwich_sum, scalar_part_by_sandwich, scalar_part_expression,
    signed_binomial_closed_form, signed_binomial_sum, vandermonde_sum, binomial,
};
use crate::multivector::Multivector;
use crate::oracle::oracle_product;
use crate::signature::{Signature, MAX_N};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ReportValue {
    Integer(i64),
    Text(String),
}

impl From<i64> for ReportValue {
    fn from(v: i64) -> Self {
        ReportValue::Integer(v)
    }
}

impl From<String> for ReportValue {
    fn from(v: String) -> Self {
        ReportValue::Text(v)
    }
}

impl std::fmt::Display for ReportValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ReportValue::Integer(v) => write!(f, "{v}"),
            ReportValue::Text(v) => f.write_str(v),
        }
    }
}

/// One verified instance of an identity. `pass` is set from exact equality
/// of `computed` and `expected` and cannot be set independently.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: String,
    pub params: serde_json::Value,
    pub computed: ReportValue,
    pub expected: ReportValue,
    pub pass: bool,
}

impl IdentityReport {
    pub fn new(
        identity: &str,
        params: serde_json::Value,
        computed: impl Into<ReportValue>,
        expected: impl Into<ReportValue>,
    ) -> Self {
        let computed = computed.into();
        let expected = expected.into();
        let pass = computed == expected;
        IdentityReport {
            identity: identity.to_string(),
            params,
            computed,
            expected,
            pass,
        }
    }
}

pub const VANDERMONDE: &str = "vandermonde-convolution";
pub const SIGNED_BINOMIAL: &str = "signed-binomial-sum";
pub const RECIPROCAL: &str = "reciprocal-blade";
pub const ORACLE: &str = "blade-product-oracle";
pub const BLADE_SANDWICH: &str = "blade-sandwich";
pub const SCALAR_PART: &str = "scalar-part-sandwich";
pub const COMPLEX_REAL_PART: &str = "complex-real-part";
pub const QUATERNION_REAL_PART: &str = "quaternion-real-part";

/// Uniform integer coefficients in `-bound..=bound`.
pub fn random_integer_multivector<R: Rng>(sig: Signature, rng: &mut R, bound: i64) -> Multivector<i64> {
    Multivector::from_fn(sig, |_| rng.gen_range(-bound..=bound))
}

/// Per-signature RNG so results do not depend on scheduling.
pub fn signature_rng(seed: u64, sig: Signature, salt: u64) -> ChaCha8Rng {
    let code = ((sig.p() as u64) << 8) | sig.q() as u64;
    ChaCha8Rng::seed_from_u64(seed ^ code.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ salt)
}

fn check_max_n(max_n: usize) -> Result<()> {
    if max_n > MAX_N {
        return Err(CliffordError::ParameterOutOfRange(format!(
            "max n {max_n} exceeds {MAX_N}"
        )));
    }
    Ok(())
}

/// Vandermonde convolution for every `0 <= k, p <= n <= max_n`.
pub fn verify_vandermonde(max_n: usize) -> Result<Vec<IdentityReport>> {
    check_max_n(max_n)?;
    let mut out = Vec::new();
    for n in 0..=max_n {
        for k in 0..=n {
            for p in 0..=n {
                out.push(IdentityReport::new(
                    VANDERMONDE,
                    json!({ "n": n, "k": k, "p": p }),
                    vandermonde_sum(n, k, p)?,
                    binomial(n as u64, p as u64),
                ));
            }
        }
    }
    Ok(out)
}

/// Signed double sum against its four-case closed form, `0 <= k <= n <= max_n`.
pub fn verify_signed_binomial(max_n: usize) -> Result<Vec<IdentityReport>> {
    check_max_n(max_n)?;
    let mut out = Vec::new();
    for n in 0..=max_n {
        for k in 0..=n {
            out.push(IdentityReport::new(
                SIGNED_BINOMIAL,
                json!({ "n": n, "k": k }),
                signed_binomial_sum(n, k)?,
                signed_binomial_closed_form(n, k),
            ));
        }
    }
    Ok(out)
}

/// Counts blades `J` with `e_J e^J = 1` (as a full product).
pub fn verify_reciprocal(sig: Signature) -> IdentityReport {
    let one = Multivector::<i64>::scalar(sig, 1);
    let good = BladeMask::all(sig)
        .filter(|&j| {
            let ej = Multivector::blade(sig, j, 1i64);
            let recip = Multivector::from_signed_blade(sig, reciprocal_blade(sig, j));
            ej.gp(&recip).map(|p| p == one).unwrap_or(false)
        })
        .count();
    IdentityReport::new(
        RECIPROCAL,
        json!({ "signature": sig.to_string() }),
        good as i64,
        sig.dim() as i64,
    )
}

/// Fast kernel against the word-rewriting oracle: exhaustive up to `n = 5`,
/// otherwise `samples` random pairs.
pub fn verify_oracle(sig: Signature, samples: usize, seed: u64) -> IdentityReport {
    let agree = |a: BladeMask, b: BladeMask| blade_product(sig, a, b) == oracle_product(a, b, sig);
    let (good, total) = if sig.n() <= 5 {
        let mut good = 0usize;
        for a in BladeMask::all(sig) {
            good += BladeMask::all(sig).filter(|&b| agree(a, b)).count();
        }
        (good, sig.dim() * sig.dim())
    } else {
        let mut rng = signature_rng(seed, sig, 1);
        let dim = sig.dim() as u32;
        let good = (0..samples)
            .filter(|_| {
                let a = BladeMask::new(rng.gen_range(0..dim));
                let b = BladeMask::new(rng.gen_range(0..dim));
                agree(a, b)
            })
            .count();
        (good, samples)
    };
    IdentityReport::new(
        ORACLE,
        json!({ "signature": sig.to_string(), "exhaustive": sig.n() <= 5 }),
        good as i64,
        total as i64,
    )
}

/// `sum_J e_J e_I e^J` against its expected value for a single blade.
pub fn blade_sandwich_check(sig: Signature, blade: BladeMask) -> IdentityReport {
    let computed = sandwich_sum(&Multivector::<i64>::blade(sig, blade, 1));
    let expected = blade_sandwich_expected::<i64>(sig, blade);
    IdentityReport::new(
        BLADE_SANDWICH,
        json!({ "signature": sig.to_string(), "blade": blade.label(), "grade": blade.grade() }),
        computed.to_string(),
        expected.to_string(),
    )
}

pub fn verify_blade_sandwich(sig: Signature) -> Vec<IdentityReport> {
    BladeMask::all(sig)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|b| blade_sandwich_check(sig, b))
        .collect()
}

/// Random integer multivectors: the sandwich expression must be purely
/// scalar and its normalised value must equal the scalar coefficient.
/// Reports the number of agreeing samples.
pub fn verify_scalar_part(sig: Signature, samples: usize, seed: u64) -> IdentityReport {
    let mut rng = signature_rng(seed, sig, 2);
    let inputs: Vec<_> = (0..samples)
        .map(|_| random_integer_multivector(sig, &mut rng, 100))
        .collect();
    let good = inputs
        .par_iter()
        .filter(|a| {
            let (expr, _) = scalar_part_expression(*a);
            expr.is_scalar() && scalar_part_by_sandwich(*a) == a.scalar_part()
        })
        .count();
    IdentityReport::new(
        SCALAR_PART,
        json!({ "signature": sig.to_string(), "samples": samples }),
        good as i64,
        samples as i64,
    )
}

/// `(a - i a i) + (a_* - i a_* i) = 4 Re a` in `R_{0,1}`.
pub fn verify_complex_real_part(samples: usize, seed: u64) -> IdentityReport {
    let sig = Signature::new(0, 1).unwrap();
    let mut rng = signature_rng(seed, sig, 3);
    let i = Multivector::<i64>::blade(sig, BladeMask::new(1), 1);
    let iai = |a: &Multivector<i64>| i.gp(a).unwrap().gp(&i).unwrap();
    let good = (0..samples)
        .filter(|_| {
            let a = random_integer_multivector(sig, &mut rng, 1000);
            let conj = a.principal_involution();
            let lhs = &(&a - &iai(&a)) + &(&conj - &iai(&conj));
            lhs == Multivector::scalar(sig, 4 * a.scalar_part())
        })
        .count();
    IdentityReport::new(
        COMPLEX_REAL_PART,
        json!({ "signature": sig.to_string(), "samples": samples }),
        good as i64,
        samples as i64,
    )
}

/// `a - i a i - j a j - k a k = 4 Re a` in `R_{0,2}` with `k = ij`.
pub fn verify_quaternion_real_part(samples: usize, seed: u64) -> IdentityReport {
    let sig = Signature::new(0, 2).unwrap();
    let mut rng = signature_rng(seed, sig, 4);
    let units: Vec<_> = [1u32, 2, 3]
        .iter()
        .map(|&m| Multivector::<i64>::blade(sig, BladeMask::new(m), 1))
        .collect();
    let good = (0..samples)
        .filter(|_| {
            let a = random_integer_multivector(sig, &mut rng, 1000);
            let lhs = units.iter().fold(a.clone(), |acc, u| {
                &acc - &u.gp(&a).unwrap().gp(u).unwrap()
            });
            lhs == Multivector::scalar(sig, 4 * a.scalar_part())
        })
        .count();
    IdentityReport::new(
        QUATERNION_REAL_PART,
        json!({ "signature": sig.to_string(), "samples": samples }),
        good as i64,
        samples as i64,
    )
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    /// Bound for the pure binomial identities.
    pub max_n: usize,
    pub signatures: Vec<Signature>,
    pub samples: usize,
    pub oracle_samples: usize,
    pub seed: u64,
}

impl VerifyConfig {
    pub fn up_to(max_n: usize) -> Result<Self> {
        Ok(VerifyConfig {
            max_n,
            signatures: Signature::all_up_to(max_n)?,
            samples: 1000,
            oracle_samples: 100_000,
            seed: 0x5EED,
        })
    }

    pub fn single(sig: Signature) -> Self {
        VerifyConfig {
            max_n: sig.n(),
            signatures: vec![sig],
            samples: 1000,
            oracle_samples: 100_000,
            seed: 0x5EED,
        }
    }
}

/// Every sweep for the configured range, in deterministic order.
pub fn verify_all(cfg: &VerifyConfig) -> Result<Vec<IdentityReport>> {
    let mut reports = verify_vandermonde(cfg.max_n)?;
    reports.extend(verify_signed_binomial(cfg.max_n)?);
    let per_sig: Vec<Vec<IdentityReport>> = cfg
        .signatures
        .par_iter()
        .map(|&sig| {
            let mut out = vec![
                verify_reciprocal(sig),
                verify_oracle(sig, cfg.oracle_samples, cfg.seed),
            ];
            out.extend(verify_blade_sandwich(sig));
            out.push(verify_scalar_part(sig, cfg.samples, cfg.seed));
            out
        })
        .collect();
    reports.extend(per_sig.into_iter().flatten());
    if cfg.signatures.iter().any(|s| (s.p(), s.q()) == (0, 1)) {
        reports.push(verify_complex_real_part(cfg.samples, cfg.seed));
    }
    if cfg.signatures.iter().any(|s| (s.p(), s.q()) == (0, 2)) {
        reports.push(verify_quaternion_real_part(cfg.samples, cfg.seed));
    }
    Ok(reports)
}
