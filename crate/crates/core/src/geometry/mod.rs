//! Exact rational linear feasibility and the polyhedral predicates the
//! symbolic decision procedures reduce to.
//!
//! Verdicts here are combinatorial (member / non-member), so the whole
//! decision path runs over arbitrary-precision rationals; a float tolerance
//! could flip a verdict. Every answer carries a certificate that can be
//! re-checked by exact arithmetic:
//!
//! - membership: nonnegative coefficients `lambda` (summing to 1 in hull
//!   mode) and a nonnegative orthant slack with
//!   `target = sum(lambda_i * generator_i) + slack`;
//! - non-membership: a separating weight vector `w >= 0` with
//!   `w . target < inf { w . p : p in region }` (that infimum is `0` for the
//!   cone and `min_i w . generator_i` for the hull).

mod membership;
mod simplex;

pub use membership::{
    canonical_ray, cone_orthant_member, extreme_generators, hull_orthant_member,
    nonredundant_losers, verify_membership, CanonicalRay, MembershipCertificate, RegionKind,
};
pub use simplex::{
    check_farkas, solve_feasibility, FarkasCertificate, Feasibility, FeasibilityProblem,
};

use num_bigint::BigInt;

/// Exactness carrier for certificate coefficients: always reduced, positive
/// denominator (guaranteed by the underlying representation).
pub type Rational = num_rational::BigRational;

/// Convenience constructor from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Convenience constructor from a numerator/denominator pair.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}
