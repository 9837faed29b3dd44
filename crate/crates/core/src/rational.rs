//! Exact rationals and their `"p/q"` string encoding.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `"p/q"`, `"p"`, or a terminating decimal such as `"-0.25"`.
pub fn parse(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = || Error::Rational(text.to_string());
    if t.is_empty() {
        return Err(bad());
    }
    if let Some((whole, frac)) = t.split_once('.') {
        if t.contains('/') || frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let whole = whole.trim_start_matches(['-', '+']);
        if !whole.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits = format!("{}{}", if whole.is_empty() { "0" } else { whole }, frac);
        let numer = BigInt::from_str(&digits).map_err(|_| bad())?;
        let denom = num_traits::pow(BigInt::from(10), frac.len());
        let r = Rational::new(numer, denom);
        return Ok(if negative { -r } else { r });
    }
    let r = Rational::from_str(t).map_err(|_| bad())?;
    Ok(r)
}

/// `"p/q"` in lowest terms, or `"p"` when the denominator is 1.
pub fn format(r: &Rational) -> String {
    r.to_string()
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

pub(crate) mod serde_str {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format(r))
    }
}

pub(crate) mod serde_vec {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&format(r))?;
        }
        seq.end()
    }
}

/// Input side is lenient: JSON integers are accepted alongside strings.
#[derive(Deserialize)]
#[serde(untagged)]
pub(crate) enum RationalRepr {
    Int(i64),
    Text(String),
}

impl RationalRepr {
    pub(crate) fn into_rational(self) -> Result<Rational> {
        match self {
            RationalRepr::Int(i) => Ok(int(i)),
            RationalRepr::Text(t) => parse(&t),
        }
    }
}
