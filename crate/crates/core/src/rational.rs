//! Exact scalar type and its string encoding.
//!
//! All coordinates, volumes and integrals are [`Rational`]s, rendered as
//! `"p/q"` (or `"p"` when the denominator is one).

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn frac(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn from_bigint(value: BigInt) -> Rational {
    Rational::from_integer(value)
}

pub fn ints(values: &[i64]) -> Vec<Rational> {
    values.iter().map(|&v| int(v)).collect()
}

pub fn parse(text: &str) -> Result<Rational> {
    let trimmed = text.trim();
    let bad = || Error::Parse(format!("invalid rational {trimmed:?}"));
    match trimmed.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => BigInt::from_str(trimmed).map(Rational::from_integer).map_err(|_| bad()),
    }
}

pub fn format(value: &Rational) -> String {
    value.to_string()
}

/// `n!` as a rational.
pub fn factorial(n: usize) -> Rational {
    from_bigint(factorial_int(n))
}

pub fn factorial_int(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Returns the integer value if `value` is integral.
pub fn as_integer(value: &Rational) -> Option<BigInt> {
    value.is_integer().then(|| value.to_integer())
}

pub fn floor(value: &Rational) -> BigInt {
    value.floor().to_integer()
}

pub fn ceil(value: &Rational) -> BigInt {
    value.ceil().to_integer()
}

/// Least common multiple of all denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

pub fn abs(value: &Rational) -> Rational {
    value.abs()
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Wire {
    Text(String),
    Int(i64),
}

pub fn deserialize_rational<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
    match Wire::deserialize(d)? {
        Wire::Text(s) => parse(&s).map_err(de::Error::custom),
        Wire::Int(i) => Ok(int(i)),
    }
}

/// Serde adapter for a single rational encoded as a `"p/q"` string.
pub mod serde_rational {
    use super::*;

    pub fn serialize<S: Serializer>(value: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        deserialize_rational(d)
    }
}

/// Serde adapter for a vector of rationals.
pub mod serde_vec {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(values: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(values.len()))?;
        for v in values {
            seq.serialize_element(&format(v))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Rational>, D::Error> {
        let raw: Vec<Wire> = Vec::deserialize(d)?;
        raw.into_iter()
            .map(|w| match w {
                Wire::Text(s) => parse(&s).map_err(de::Error::custom),
                Wire::Int(i) => Ok(int(i)),
            })
            .collect()
    }
}

/// Serde adapter for a matrix (list of rows) of rationals.
pub mod serde_matrix {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(rows: &[Vec<Rational>], s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(rows.len()))?;
        for row in rows {
            let text: Vec<String> = row.iter().map(format).collect();
            seq.serialize_element(&text)?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Vec<Rational>>, D::Error> {
        let raw: Vec<Vec<Wire>> = Vec::deserialize(d)?;
        raw.into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|w| match w {
                        Wire::Text(s) => parse(&s).map_err(de::Error::custom),
                        Wire::Int(i) => Ok(int(i)),
                    })
                    .collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse("6/4").unwrap(), frac(3, 2));
        assert_eq!(parse(" -7 ").unwrap(), int(-7));
        assert_eq!(format(&frac(-2, 4)), "-1/2");
        assert_eq!(format(&int(6)), "6");
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn lowest_terms_positive_denominator() {
        let r = frac(4, -6);
        assert_eq!(r.numer(), &BigInt::from(-2));
        assert_eq!(r.denom(), &BigInt::from(3));
    }

    #[test]
    fn factorials_and_binomials() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(5), int(120));
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(2, 3), BigInt::zero());
    }
}
