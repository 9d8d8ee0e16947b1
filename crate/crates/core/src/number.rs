//! Exact scalars: rationals for measures, rational complex pairs for
//! simple-function coefficients.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;
pub type Scalar = Complex<Rational>;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn real(r: Rational) -> Scalar {
    Scalar::new(r, Rational::zero())
}

/// Parses `7`, `-3/4` or a finite decimal such as `1.25`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    if let Some((num, den)) = text.split_once('/') {
        let num: BigInt = parse_int(num)?;
        let den: BigInt = parse_int(den)?;
        if den.is_zero() {
            return None;
        }
        return Some(Rational::new(num, den));
    }
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text.strip_prefix('+').unwrap_or(text)),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole.chars().all(|c| c.is_ascii_digit()) || !frac.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{whole}{frac}");
    let num: BigInt = digits.parse().ok()?;
    let den = num_traits::pow(BigInt::from(10), frac.len());
    let value = Rational::new(num, den);
    Some(if negative { -value } else { value })
}

fn parse_int(text: &str) -> Option<BigInt> {
    let text = text.trim();
    let body = text
        .strip_prefix('-')
        .or_else(|| text.strip_prefix('+'))
        .unwrap_or(text);
    if body.is_empty() || !body.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    text.parse().ok()
}

/// `3`, `-1/2`: the canonical textual form accepted back by [`parse_rational`].
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Real scalars print as rationals; others as `(re,im)`.
pub fn format_scalar(s: &Scalar) -> String {
    if s.im.is_zero() {
        format_rational(&s.re)
    } else {
        format!("({},{})", format_rational(&s.re), format_rational(&s.im))
    }
}

/// Accepts a rational or a `(re,im)` pair.
pub fn parse_scalar(text: &str) -> Option<Scalar> {
    let text = text.trim();
    if let Some(inner) = text.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
        let (re, im) = inner.split_once(',')?;
        return Some(Scalar::new(parse_rational(re)?, parse_rational(im)?));
    }
    if let Some(inner) = text.strip_prefix("-(").and_then(|t| t.strip_suffix(')')) {
        let (re, im) = inner.split_once(',')?;
        return Some(-Scalar::new(parse_rational(re)?, parse_rational(im)?));
    }
    parse_rational(text).map(real)
}

/// Serde adapter writing a rational as its [`format_rational`] string.
pub fn serialize_rational<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

/// Serde adapter for a sequence of rationals.
pub fn serialize_rationals<S: serde::Serializer>(rs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(rs.iter().map(format_rational))
}

pub(crate) fn is_nonnegative(r: &Rational) -> bool {
    !r.is_negative()
}
