//! Exact rational helpers shared by every module.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary-precision rational used for weights, values and densities.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseRationalError(pub String);

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p/q"` or `"p"`. Whitespace around the parts is tolerated.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError(text.to_string());
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// Lowest-terms rendering; integers are printed without a denominator.
pub fn format_rational(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

pub fn pow(base: &Rational, exp: u32) -> Rational {
    num_traits::pow(base.clone(), exp as usize)
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Scales `value` by `den` and returns the integer numerator. `den` must be a
/// multiple of the value's denominator.
pub fn scaled_numerator(value: &Rational, den: &BigInt) -> BigInt {
    value.numer() * (den / value.denom())
}

/// Smallest integer `t` with `u < t  <=>  u / 2^53 < value` for every `u` in
/// `0..2^53`. Used to turn probabilities into exact thresholds for 53-bit draws.
pub fn unit_threshold(value: &Rational) -> u64 {
    const SCALE: u64 = 1 << 53;
    if !value.is_positive() {
        return 0;
    }
    if *value >= Rational::one() {
        return SCALE;
    }
    let scaled = value * Rational::from_integer(BigInt::from(SCALE));
    scaled.ceil().to_integer().to_u64().unwrap_or(SCALE)
}

/// Formats a float to 12 significant digits, switching to exponent form
/// outside `[1e-4, 1e12)`.
pub fn format_sig12(x: f64) -> String {
    if x == 0.0 {
        return "0.00000000000".to_string();
    }
    let mag = x.abs();
    if !(1e-4..1e12).contains(&mag) {
        return format!("{x:.11e}");
    }
    // the exponent form rounds correctly, including carries into a new digit
    let sci = format!("{:.11e}", mag);
    let (mantissa, exponent) = sci.split_once('e').expect("exponent form");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    let sign = if x < 0.0 { "-" } else { "" };
    if exponent >= 0 {
        let (int_part, frac) = digits.split_at(exponent as usize + 1);
        if frac.is_empty() {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac}")
        }
    } else {
        let zeros = "0".repeat((-exponent - 1) as usize);
        format!("{sign}0.{zeros}{digits}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig12_formatting() {
        assert_eq!(format_sig12(0.5), "0.500000000000");
        assert_eq!(format_sig12(-0.5), "-0.500000000000");
        assert_eq!(format_sig12(1.0), "1.00000000000");
        assert_eq!(format_sig12(0.999999999999999), "1.00000000000");
        assert_eq!(format_sig12(0.0), "0.00000000000");
        assert_eq!(format_sig12(1.5e-17), "1.50000000000e-17");
        assert_eq!(format_sig12(0.0123), "0.0123000000000");
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("2/4").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-3").unwrap(), int(-3));
        assert_eq!(parse_rational(" 1 / 3 ").unwrap(), ratio(1, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&ratio(6, 4)), "3/2");
        assert_eq!(format_rational(&int(0)), "0");
        assert_eq!(format_rational(&ratio(-1, 2)), "-1/2");
    }

    #[test]
    fn thresholds_are_exact() {
        assert_eq!(unit_threshold(&int(0)), 0);
        assert_eq!(unit_threshold(&int(1)), 1 << 53);
        assert_eq!(unit_threshold(&ratio(1, 2)), 1 << 52);
        // 1/3 * 2^53 is not an integer, so the threshold rounds up
        let t = unit_threshold(&ratio(1, 3));
        assert!(Rational::from_integer(BigInt::from(t - 1)) < ratio(1, 3) * int(1 << 53));
        assert!(Rational::from_integer(BigInt::from(t)) >= ratio(1, 3) * int(1 << 53));
    }
}
