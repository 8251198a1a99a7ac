//! Exact rational scalars and the integer combinatorics used throughout.
//!
//! `Rational` is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator; zero is `0/1`. The canonical text form is `p/q` with
//! `q >= 2`, or plain `p` when the denominator is one (`-1/2`, `3`, `0`).
//! That exact format appears verbatim in all JSON and CSV output.

use num::bigint::BigInt;
use num::{One, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number in canonical reduced form.
pub type Rational = num::BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer in rational literal `{0}`")]
    BadInteger(String),
    #[error("zero denominator in rational literal `{0}`")]
    ZeroDenominator(String),
}

/// Parse the canonical text form. Non-canonical inputs such as `2/4` or
/// `1/-2` are accepted and reduced.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    match s.split_once('/') {
        None => s
            .parse::<BigInt>()
            .map(Rational::from_integer)
            .map_err(|_| ParseRationalError::BadInteger(s.to_string())),
        Some((numer, denom)) => {
            let n: BigInt = numer
                .parse()
                .map_err(|_| ParseRationalError::BadInteger(s.to_string()))?;
            let d: BigInt = denom
                .parse()
                .map_err(|_| ParseRationalError::BadInteger(s.to_string()))?;
            if d.is_zero() {
                return Err(ParseRationalError::ZeroDenominator(s.to_string()));
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Shorthand constructor. Panics on a zero denominator.
pub fn rat(numer: i64, denom: i64) -> Rational {
    assert!(denom != 0, "rat: zero denominator");
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// `1/n!` as a rational.
pub fn inv_factorial(n: usize) -> Rational {
    Rational::new(BigInt::one(), factorial(n))
}

/// Binomial coefficient via the Pascal recurrence; exact integers, no
/// division anywhere.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigInt::one());
        for j in 1..row.len() {
            next.push(&row[j - 1] + &row[j]);
        }
        next.push(BigInt::one());
        row = next;
    }
    row[k].clone()
}

/// `n! / (k! l! (n-k-l)!)` with `k + l <= n`.
pub fn multinomial3(n: usize, k: usize, l: usize) -> BigInt {
    assert!(k + l <= n, "multinomial3: indices exceed n");
    binomial(n, k) * binomial(n - k, l)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_reduction() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(-1, -2), rat(1, 2));
        assert_eq!(rat(1, -2), rat(-1, 2));
        assert_eq!(rat(0, 5).to_string(), "0");
    }

    #[test]
    fn text_form_round_trip() {
        for s in ["-1/2", "3", "0", "22/7", "-100000000000000000000/3"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert_eq!(parse_rational("2/4").unwrap().to_string(), "1/2");
        assert_eq!(parse_rational("1/-2").unwrap().to_string(), "-1/2");
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_rational(""), Err(ParseRationalError::Empty));
        assert!(matches!(
            parse_rational("abc"),
            Err(ParseRationalError::BadInteger(_))
        ));
        assert!(matches!(
            parse_rational("1/0"),
            Err(ParseRationalError::ZeroDenominator(_))
        ));
        assert!(matches!(
            parse_rational("1/2/3"),
            Err(ParseRationalError::BadInteger(_))
        ));
    }

    #[test]
    fn combinatorics() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(4, 7), BigInt::from(0));
        assert_eq!(binomial(21, 10), BigInt::from(352716i64));
        assert_eq!(multinomial3(4, 2, 1), BigInt::from(12));
        assert_eq!(multinomial3(3, 0, 0), BigInt::from(1));
    }
}
