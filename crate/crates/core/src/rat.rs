//! The scalar type: arbitrary-precision rationals.
//!
//! `Rat` is always stored in lowest terms with a positive denominator
//! (guaranteed by `num-rational`), so equality is structural and zero is
//! `0/1`.

use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar, the base field of every computation in this crate.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses a rational from the textual forms `"p"` and `"p/q"` with decimal
/// integer parts. Rejects zero denominators and anything else.
pub fn parse_rat(text: &str) -> Result<Rat, String> {
    let text = text.trim();
    let (num_str, den_str) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let numer: BigInt = num_str
        .parse()
        .map_err(|_| format_err(text, "invalid integer numerator"))?;
    let denom: BigInt = match den_str {
        Some(d) => d
            .parse()
            .map_err(|_| format_err(text, "invalid integer denominator"))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(format_err(text, "zero denominator"));
    }
    if denom.is_negative() {
        return Err(format_err(text, "denominator must be positive"));
    }
    Ok(Rat::new(numer, denom))
}

/// Renders a rational as `"p"` or `"p/q"`, the inverse of [`parse_rat`] on
/// canonical values.
pub fn format_rat(value: &Rat) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        let mut s = value.numer().to_string();
        s.push('/');
        s.push_str(&value.denom().to_string());
        s
    }
}

fn format_err(text: &str, reason: &str) -> String {
    let mut msg = String::from("cannot parse rational \"");
    msg.push_str(text);
    msg.push_str("\": ");
    msg.push_str(reason);
    msg
}
