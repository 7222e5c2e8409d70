//! Exact algebra kernel: rationals, sparse multivariate polynomials,
//! gcds, resultants and real-root isolation.

pub mod gcd;
pub mod poly;
pub mod resultant;
pub mod roots;
pub mod univariate;

pub use gcd::{certainly_coprime, gcd, strip_common_factors};
pub use poly::{parse_poly, Monomial, Poly, VAR_NAMES};
pub use resultant::resultant;
pub use roots::{isolate_real_roots, sign_at_root, RealRoot, SturmChain};
pub use univariate::UPoly;

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("substitution denominator is identically zero")]
    ZeroDenominator,
    #[error("polynomial has degree zero in variable x{0}")]
    DegreeZero(usize),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
