//! Exact arithmetic substrate: rationals, univariate polynomials, piecewise
//! polynomial calculus, interpolation and certified root isolation.

mod interp;
pub mod linalg;
mod piecewise;
mod poly;
mod roots;

pub use interp::interpolate;
pub use piecewise::{pw_integrate, Piece, PiecewisePoly};
pub use poly::{poly_defint, UniPoly};
pub use roots::{count_roots, isolate_root, isolate_root_to, sturm_sequence, RootCertificate};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// True when the value is in canonical form (lowest terms, denominator > 0).
pub fn is_canonical(x: &Rational) -> bool {
    x.denom().is_positive() && x.numer().gcd(x.denom()).is_one()
}

/// `p/q`, or just `p` when the denominator is 1.
pub fn format_rational(x: &Rational) -> String {
    debug_assert!(is_canonical(x));
    x.to_string()
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Decimal expansion truncated toward zero after `digits` fractional digits.
/// For display only.
pub fn decimal_approx(x: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = (x.numer().abs() * &scale) / x.denom();
    let (whole, frac) = scaled.div_rem(&scale);
    let sign = if x.is_negative() { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{whole}");
    }
    format!("{sign}{whole}.{:0>width$}", frac.to_string(), width = digits)
}

pub fn min_rat(a: &Rational, b: &Rational) -> Rational {
    if a <= b {
        a.clone()
    } else {
        b.clone()
    }
}

/// Serde adapter storing a rational as the string `p/q`.
pub mod serde_rational {
    use super::{format_rational, parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn string_form() {
        assert_eq!(format_rational(&rat(69, 80)), "69/80");
        assert_eq!(format_rational(&rat(6, 3)), "2");
        assert_eq!(format_rational(&rat(-3, 6)), "-1/2");
        assert_eq!(parse_rational("99/100").unwrap(), rat(99, 100));
        assert_eq!(parse_rational(" -7 ").unwrap(), int(-7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn construction_is_canonical() {
        assert!(is_canonical(&rat(10, -4)));
        assert_eq!(rat(10, -4), rat(-5, 2));
    }

    #[test]
    fn decimals() {
        assert_eq!(decimal_approx(&rat(1, 3), 5), "0.33333");
        assert_eq!(decimal_approx(&rat(-1, 8), 4), "-0.1250");
        assert_eq!(decimal_approx(&rat(1355, 1000), 3), "1.355");
        assert_eq!(decimal_approx(&int(3), 0), "3");
    }
}
