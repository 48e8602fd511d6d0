//! Exact rational helpers on top of [`num_rational::BigRational`].
//!
//! Everything in the crate computes with [`Rational`]; floating point only
//! appears when a caller explicitly asks for a double-precision refinement
//! or for a printed decimal.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `num / den`, reduced. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn pow2(e: u32) -> Rational {
    Rational::from_integer(BigInt::one() << e)
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Exact rational value of a finite double.
pub fn from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError(pub String);

impl std::fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "invalid number literal {:?}", self.0)
    }
}

impl std::error::Error for ParseRationalError {}

/// Parses `p/q`, integers and decimals (with optional exponent) exactly.
///
/// `"0.1"` becomes `1/10`, never the nearest double.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let s = text.trim();
    let err = || ParseRationalError(text.to_string());
    if s.is_empty() {
        return Err(err());
    }
    if let Some((num, den)) = s.split_once('/') {
        let num = parse_decimal(num.trim()).ok_or_else(err)?;
        let den = parse_decimal(den.trim()).ok_or_else(err)?;
        if den.is_zero() {
            return Err(err());
        }
        return Ok(num / den);
    }
    parse_decimal(s).ok_or_else(err)
}

fn parse_decimal(s: &str) -> Option<Rational> {
    let (negative, body) = match s.as_bytes().first()? {
        b'-' => (true, &s[1..]),
        b'+' => (false, &s[1..]),
        _ => (false, s),
    };
    let (mantissa, exponent) = match body.find(['e', 'E']) {
        Some(pos) => (&body[..pos], body[pos + 1..].parse::<i32>().ok()?),
        None => (body, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    let all_digits = |p: &str| p.bytes().all(|b| b.is_ascii_digit());
    if !all_digits(int_part) || !all_digits(frac_part) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let value: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().ok()?
    };
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let mut r = Rational::from_integer(value);
    if scale >= 0 {
        r *= Rational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        r /= Rational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Some(if negative { -r } else { r })
}

/// `p/q` (or just `p` for integers).
pub fn to_literal(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn round_half_even(x: &Rational) -> BigInt {
    let floor = x.floor();
    let frac = x - &floor;
    let half = ratio(1, 2);
    let base = floor.to_integer();
    match frac.cmp(&half) {
        Ordering::Less => base,
        Ordering::Greater => base + 1,
        Ordering::Equal => {
            if base.is_even() {
                base
            } else {
                base + 1
            }
        }
    }
}

/// Decimal rendering with `digits` significant digits, rounding half to even.
///
/// Zero renders as `0.000…` with `digits - 1` fractional zeros; values below
/// one keep a leading `0.`, e.g. `-2/3` with 10 digits is `-0.6666666667`.
pub fn format_significant(r: &Rational, digits: usize) -> String {
    assert!(digits >= 1);
    if r.is_zero() {
        return if digits == 1 {
            "0".to_string()
        } else {
            format!("0.{}", "0".repeat(digits - 1))
        };
    }
    let negative = r.is_negative();
    let x = r.abs();
    let ten = Rational::from_integer(BigInt::from(10));
    // Exact decimal exponent: 10^e <= x < 10^(e+1).
    let mut e = to_f64(&x).log10().floor() as i64;
    let pow10 = |k: i64| -> Rational {
        if k >= 0 {
            num_traits::pow(ten.clone(), k as usize)
        } else {
            num_traits::pow(ten.clone(), (-k) as usize).recip()
        }
    };
    while pow10(e) > x {
        e -= 1;
    }
    while pow10(e + 1) <= x {
        e += 1;
    }
    let limit = num_traits::pow(BigInt::from(10), digits);
    let mut mantissa = round_half_even(&(&x * pow10(digits as i64 - 1 - e)));
    if mantissa >= limit {
        e += 1;
        mantissa = round_half_even(&(&x * pow10(digits as i64 - 1 - e)));
    }
    let d = mantissa.to_string();
    let body = if e >= 0 {
        let point = (e + 1) as usize;
        if point >= d.len() {
            format!("{}{}", d, "0".repeat(point - d.len()))
        } else {
            format!("{}.{}", &d[..point], &d[point..])
        }
    } else {
        format!("0.{}{}", "0".repeat((-e - 1) as usize), d)
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

/// The rational with the smallest denominator in the closed interval
/// `[lo, hi]`.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    debug_assert!(lo <= hi);
    if !lo.is_positive() && !hi.is_negative() {
        return Rational::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi, &-lo);
    }
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    let next = &fl + Rational::one();
    if &next <= hi {
        return next;
    }
    let inner = simplest_between(&(hi - &fl).recip(), &(lo - &fl).recip());
    fl + inner.recip()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_literals_exactly() {
        assert_eq!(parse_rational("1/3").unwrap(), ratio(1, 3));
        assert_eq!(parse_rational("-2/4").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational("0.1").unwrap(), ratio(1, 10));
        assert_eq!(parse_rational("-1.25").unwrap(), ratio(-5, 4));
        assert_eq!(parse_rational("1e-3").unwrap(), ratio(1, 1000));
        assert_eq!(parse_rational("2.5E2").unwrap(), int(250));
        assert_eq!(parse_rational(".5").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("7").unwrap(), int(7));
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "-", "1/0", "abc", "1..2", "1/2/3", "1,5", "e5"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn formats_like_the_tables() {
        assert_eq!(format_significant(&ratio(4, 3), 10), "1.333333333");
        assert_eq!(format_significant(&ratio(-2, 3), 10), "-0.6666666667");
        assert_eq!(format_significant(&ratio(-14, 9), 10), "-1.555555556");
        assert_eq!(format_significant(&int(-4), 10), "-4.000000000");
        assert_eq!(format_significant(&ratio(-10, 17), 10), "-0.5882352941");
        assert_eq!(format_significant(&int(0), 10), "0.000000000");
        assert_eq!(format_significant(&int(123456789012), 10), "123456789000");
        assert_eq!(format_significant(&ratio(1, 1000), 3), "0.00100");
        assert_eq!(format_significant(&ratio(9999, 1000), 3), "10.0");
    }

    #[test]
    fn rounds_half_to_even() {
        assert_eq!(format_significant(&ratio(125, 100), 2), "1.2");
        assert_eq!(format_significant(&ratio(135, 100), 2), "1.4");
        assert_eq!(format_significant(&ratio(-125, 100), 2), "-1.2");
    }

    #[test]
    fn simplest_rational() {
        assert_eq!(simplest_between(&ratio(1, 3), &ratio(1, 2)), ratio(1, 2));
        assert_eq!(simplest_between(&ratio(3, 10), &ratio(7, 20)), ratio(1, 3));
        assert_eq!(
            simplest_between(&ratio(-7, 20), &ratio(-3, 10)),
            ratio(-1, 3)
        );
        assert_eq!(simplest_between(&ratio(-1, 2), &ratio(1, 2)), int(0));
        assert_eq!(simplest_between(&ratio(5, 2), &ratio(5, 2)), ratio(5, 2));
    }

    #[test]
    fn literal_round_trip() {
        for r in [ratio(-8, 3), int(5), ratio(1, 1024)] {
            assert_eq!(parse_rational(&to_literal(&r)).unwrap(), r);
        }
    }
}
