use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational, serialized as `"P/Q"` (or `"P"` when `Q = 1`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(pub BigRational);

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseRational(s.to_string());
        let (n, d) = match s.trim().split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Rational(BigRational::new(n, d)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// A filling factor `ν = P/Q` with `Q` odd and `0 < ν ≤ 1`, stored reduced.
///
/// Members of a family `i/(2p+1)` also carry their basis address `(i, p)`,
/// which survives reduction (`3/9` displays as `1/3` but stays `(3, 4)`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FillingFactor {
    value: BigRational,
    address: Option<(u64, u64)>,
}

impl FillingFactor {
    pub fn new(value: BigRational) -> Result<Self> {
        if !value.is_positive() || value > BigRational::one() {
            return Err(Error::OutOfRange(Rational(value).to_string()));
        }
        if value.denom().is_even() {
            return Err(Error::EvenDenominator(Rational(value).to_string()));
        }
        Ok(FillingFactor { value, address: None })
    }

    pub fn from_ints(p: i64, q: i64) -> Result<Self> {
        if q == 0 {
            return Err(Error::ParseRational(format!("{p}/{q}")));
        }
        Self::new(BigRational::new(p.into(), q.into()))
    }

    pub(crate) fn with_address(mut self, i: u64, p: u64) -> Self {
        self.address = Some((i, p));
        self
    }

    pub fn value(&self) -> &BigRational {
        &self.value
    }

    pub fn numer(&self) -> &BigInt {
        self.value.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.value.denom()
    }

    pub fn address(&self) -> Option<(u64, u64)> {
        self.address
    }

    pub fn is_one(&self) -> bool {
        self.value.is_one()
    }
}

impl fmt::Display for FillingFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Rational(self.value.clone()).fmt(f)
    }
}

impl FromStr for FillingFactor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FillingFactor::new(s.parse::<Rational>()?.0)
    }
}

impl Serialize for FillingFactor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FillingFactor {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_reduces() {
        let nu: FillingFactor = "6/15".parse().unwrap();
        assert_eq!(nu.to_string(), "2/5");
        assert_eq!("1".parse::<FillingFactor>().unwrap().to_string(), "1");
        assert_eq!("3/3".parse::<FillingFactor>().unwrap().to_string(), "1");
    }

    #[test]
    fn rejects_out_of_scheme_values() {
        assert!(matches!("1/2".parse::<FillingFactor>(), Err(Error::EvenDenominator(_))));
        assert!(matches!("4/3".parse::<FillingFactor>(), Err(Error::OutOfRange(_))));
        assert!(matches!("0/3".parse::<FillingFactor>(), Err(Error::OutOfRange(_))));
        assert!(matches!("-1/3".parse::<FillingFactor>(), Err(Error::OutOfRange(_))));
        assert!(matches!("1/0".parse::<FillingFactor>(), Err(Error::ParseRational(_))));
        assert!(matches!("x/3".parse::<FillingFactor>(), Err(Error::ParseRational(_))));
    }

    #[test]
    fn serde_string_form() {
        let nu = FillingFactor::from_ints(2, 5).unwrap();
        assert_eq!(serde_json::to_string(&nu).unwrap(), "\"2/5\"");
        let back: FillingFactor = serde_json::from_str("\"2/5\"").unwrap();
        assert_eq!(back, nu);
    }
}
