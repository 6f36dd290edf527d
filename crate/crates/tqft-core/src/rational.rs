//! The one rational-number type used across the crate.

use alloc::string::String;
use core::str::FromStr;

use num_bigint::BigInt;
pub use num_rational::BigRational as Rational;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `p/q`. Panics when `q == 0`.
pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p"` or `"p/q"` with optional sign.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let p = BigInt::from_str(num).map_err(|_| alloc::format!("invalid integer `{num}`"))?;
    let q = match den {
        Some(d) => BigInt::from_str(d).map_err(|_| alloc::format!("invalid integer `{d}`"))?,
        None => BigInt::from(1),
    };
    if q == BigInt::from(0) {
        return Err(String::from("zero denominator"));
    }
    Ok(Rational::new(p, q))
}
