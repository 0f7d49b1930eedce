//! Exact arithmetic helpers shared by the counting engines.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Environment variable that overrides every enumeration cap in the crate.
pub const ENUM_CAP_VAR: &str = "HOMRED_ENUM_CAP";

/// Returns the enumeration cap (number of enumerated items), honouring
/// `HOMRED_ENUM_CAP` when it holds a positive integer.
pub fn enum_cap(default: u128) -> u128 {
    std::env::var(ENUM_CAP_VAR)
        .ok()
        .and_then(|s| s.trim().parse::<u128>().ok())
        .filter(|&c| c > 0)
        .unwrap_or(default)
}

/// `base^exp` as a `u128`, or `None` on overflow.
pub fn checked_pow(base: u128, exp: usize) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

/// Fails with [`Error::CapExceeded`] unless `base^exp <= cap`.
pub fn ensure_within_cap(what: &'static str, base: u128, exp: usize, cap: u128) -> Result<u128> {
    match checked_pow(base, exp) {
        Some(n) if n <= cap => Ok(n),
        other => Err(Error::CapExceeded {
            what,
            needed: other
                .map(|n| n.to_string())
                .unwrap_or_else(|| format!("{base}^{exp}")),
            cap,
        }),
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

pub fn uint_to_rat(n: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from(n.clone()))
}

/// Integer power with a possibly negative exponent.
pub fn rat_pow(base: &Rational, exp: i64) -> Rational {
    if exp >= 0 {
        num_traits::pow(base.clone(), exp as usize)
    } else {
        num_traits::pow(base.recip(), exp.unsigned_abs() as usize)
    }
}

/// Parses `a/b` or `a` (optionally signed) into a reduced rational.
pub fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num.trim()).map_err(|_| format!("bad rational `{s}`"))?;
    let den = BigInt::from_str(den.trim()).map_err(|_| format!("bad rational `{s}`"))?;
    if den.is_zero() {
        return Err(format!("zero denominator in `{s}`"));
    }
    Ok(Rational::new(num, den))
}

/// Lowest terms with a positive denominator; integers print without `/1`.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Largest integer `<= r`.
pub fn floor(r: &Rational) -> BigInt {
    r.floor().to_integer()
}

pub fn is_nonnegative(r: &Rational) -> bool {
    !r.is_negative()
}

/// A rational that (de)serialises as its `a/b` string form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exact(pub Rational);

impl Exact {
    pub fn int(n: impl Into<BigInt>) -> Self {
        Exact(rat_int(n))
    }
}

impl From<Rational> for Exact {
    fn from(r: Rational) -> Self {
        Exact(r)
    }
}

impl From<&BigUint> for Exact {
    fn from(n: &BigUint) -> Self {
        Exact(uint_to_rat(n))
    }
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_rational(&self.0))
    }
}

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for Exact {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map(Exact).map_err(serde::de::Error::custom)
    }
}
