//! Exact rational scalars.
//!
//! `Rat` is an arbitrary-precision rational kept in lowest terms with a
//! positive denominator, so equal values always have identical
//! representations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

/// Rational from an integer numerator and denominator. Panics on zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    assert!(den != 0, "zero denominator");
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Integer as a rational.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn is_zero(r: &Rat) -> bool {
    r.is_zero()
}

pub fn is_one(r: &Rat) -> bool {
    r.is_one()
}

/// Renders `p/q`, or just `p` when the denominator is one.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// gcd of two rationals as positive rational (unit normalization over Q is
/// the caller's business; this is used for integer content bookkeeping).
pub fn rat_gcd(a: &Rat, b: &Rat) -> Rat {
    use num_integer::Integer;
    if a.is_zero() {
        return b.abs();
    }
    if b.is_zero() {
        return a.abs();
    }
    // gcd(p1/q1, p2/q2) = gcd(p1, p2) / lcm(q1, q2)
    let num = a.numer().gcd(b.numer());
    let den = a.denom().lcm(b.denom());
    Rat::new(num, den).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(fmt_rat(&r), "-3/2");
        assert_eq!(fmt_rat(&rint(7)), "7");
        assert!(is_zero(&rat(0, 5)));
    }

    #[test]
    fn gcd_of_rationals() {
        assert_eq!(rat_gcd(&rat(4, 3), &rat(2, 9)), rat(2, 9));
        assert_eq!(rat_gcd(&rint(0), &rat(-5, 2)), rat(5, 2));
    }
}
