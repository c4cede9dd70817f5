//! Dense Clifford algebra kernel for `R_{p,q}`.
//!
//! * [`blade`] and [`multivector`]: bitmask blades, the geometric product,
//!   grade projection, the three involutions and reciprocal blades.
//! * [`oracle`]: a deliberately naive word-rewriting product used to check
//!   the bitmask kernel.
//! * [`identities`] and [`verify`]: exact binomial identities, blade
//!   sandwich sums and the scalar-part formula, plus sweeps that report on
//!   them.
//! * [`approx`]: componentwise Bernstein approximation of Clifford-valued
//!   functions on `[0,1]` and `[0,1]^2`.
//!
//! The algebra is generic over [`Scalar`]; the aliases below cover the
//! usual choices.

pub mod approx;
pub mod blade;
pub mod error;
pub mod identities;
pub mod multivector;
pub mod oracle;
pub mod scalar;
pub mod signature;
pub mod verify;

pub use blade::{blade_product, reciprocal_blade, BladeMask, Sign, SignedBlade};
pub use error::{CliffordError, Result};
pub use multivector::Multivector;
pub use scalar::{Real, Scalar};
pub use signature::{Signature, MAX_N};

/// Exact rational scalars.
pub type Rational = num_rational::Rational64;

pub type Multivector32 = Multivector<f32>;
pub type Multivector64 = Multivector<f64>;
/// Integer coefficients; products and sandwich sums stay exact.
pub type MultivectorI64 = Multivector<i64>;
pub type MultivectorQ = Multivector<Rational>;
