//! The scalar field: arbitrary-precision rationals, always reduced.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

/// Exact rational scalar. `num_rational` keeps the invariants we need:
/// gcd(|numerator|, denominator) = 1, denominator >= 1, zero is 0/1.
pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Fraction `n/d` as a reduced rational. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_one(r: &Rational) -> bool {
    r.is_one()
}

pub fn is_zero(r: &Rational) -> bool {
    r.is_zero()
}

/// Small random rational with |numerator| <= 20, 1 <= denominator <= 20.
/// Zero is allowed; callers that need nonzero values resample.
pub fn random_small(rng: &mut impl Rng) -> Rational {
    let n = rng.gen_range(-20i64..=20);
    let d = rng.gen_range(1i64..=20);
    ratio(n, d)
}
