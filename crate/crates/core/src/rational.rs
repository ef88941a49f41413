//! Exact rational numbers and their textual forms.
//!
//! Every probability, threshold and utility in the crate is a [`Rational`].
//! Text accepted by [`parse_rational`]: integers (`"8"`), fractions
//! (`"3/4"`, `"-9/10"`) and finite decimals (`"0.9"`, `"1.25"`), each
//! converted exactly. Rendering is canonical, so equal values always print
//! the same bytes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Shorthand for `numer/denom` as an exact rational. Panics on a zero denominator.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn half() -> Rational {
    rat(1, 2)
}

/// Parses `"p/q"`, an integer, or a finite decimal into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = || Error::Parse(format!("`{text}` is not an exact rational (expected p/q, integer or decimal)"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = parse_int(num).ok_or_else(bad)?;
        let den: BigInt = parse_int(den).ok_or_else(bad)?;
        if den.is_zero() {
            return Err(Error::Parse(format!("`{text}` has a zero denominator")));
        }
        return Ok(Rational::new(num, den));
    }
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    let all_digits = |p: &str| p.bytes().all(|b| b.is_ascii_digit());
    if !all_digits(whole) || !all_digits(frac) {
        return Err(bad());
    }
    let digits = format!("{whole}{frac}");
    let numer: BigInt = digits.parse().map_err(|_| bad())?;
    let denom = num_traits::pow(BigInt::from(10), frac.len());
    let value = Rational::new(numer, denom);
    Ok(if negative { -value } else { value })
}

fn parse_int(s: &str) -> Option<BigInt> {
    let s = s.trim();
    let body = s.strip_prefix('-').or_else(|| s.strip_prefix('+')).unwrap_or(s);
    if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Canonical exact rendering: `"n"` for integers, `"p/q"` otherwise.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

/// Renders a value as a plain decimal when its expansion terminates
/// (`5/4` → `"1.25"`), falling back to `"p/q"` when it does not.
pub fn format_terminating(value: &Rational) -> String {
    let mut den = value.denom().clone();
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    let (mut twos, mut fives) = (0usize, 0usize);
    while den.is_multiple_of(&two) {
        den /= &two;
        twos += 1;
    }
    while den.is_multiple_of(&five) {
        den /= &five;
        fives += 1;
    }
    if !den.is_one() {
        return format_rational(value);
    }
    let places = twos.max(fives);
    if places == 0 {
        return value.numer().to_string();
    }
    let scaled = value * Rational::from_integer(num_traits::pow(BigInt::from(10), places));
    let digits = scaled.to_integer().abs().to_string();
    let digits = format!("{digits:0>width$}", width = places + 1);
    let (int_part, frac_part) = digits.split_at(digits.len() - places);
    let frac_part = frac_part.trim_end_matches('0');
    let sign = if value.is_negative() { "-" } else { "" };
    if frac_part.is_empty() {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    }
}

/// Approximate decimal, for human-readable tables only.
pub fn approx(value: &Rational, places: usize) -> String {
    format!("{:.*}", places, to_f64(value))
}

pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_accepted_form() {
        assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("6/8").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("-9/10").unwrap(), rat(-9, 10));
        assert_eq!(parse_rational("8").unwrap(), int(8));
        assert_eq!(parse_rational("0.9").unwrap(), rat(9, 10));
        assert_eq!(parse_rational("1.25").unwrap(), rat(5, 4));
        assert_eq!(parse_rational(".5").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-0.75").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational(" 2 ").unwrap(), int(2));
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "1/0", "a/b", "1.2.3", "1e3", "--1", "/", ".", "1/", "0x10", "1/-"] {
            assert!(parse_rational(bad).is_err(), "{bad} accepted");
        }
    }

    #[test]
    fn terminating_rendering() {
        assert_eq!(format_terminating(&rat(5, 4)), "1.25");
        assert_eq!(format_terminating(&int(4)), "4");
        assert_eq!(format_terminating(&rat(1, 3)), "1/3");
        assert_eq!(format_terminating(&rat(-1, 8)), "-0.125");
        assert_eq!(format_terminating(&rat(1, 20)), "0.05");
        assert_eq!(format_terminating(&rat(101, 100)), "1.01");
    }

    #[test]
    fn canonical_rendering() {
        assert_eq!(format_rational(&rat(6, 8)), "3/4");
        assert_eq!(format_rational(&rat(2, 2)), "1");
        assert_eq!(format_rational(&rat(0, 5)), "0");
    }

    proptest::proptest! {
        #[test]
        fn format_then_parse_is_identity(n in -10_000i64..10_000, d in 1i64..10_000) {
            let r = rat(n, d);
            proptest::prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r.clone());
            proptest::prop_assert_eq!(parse_rational(&format_terminating(&r)).unwrap(), r);
        }
    }
}
