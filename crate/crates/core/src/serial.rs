//! Decimal-string encoding of floats at 17 significant digits.
//!
//! Seventeen significant digits determine an `f64` uniquely, so
//! `parse(format(x)) == x` bit for bit. Used by the report and representation
//! documents through `#[serde(with = ...)]`.

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serializer};

pub fn format_sig17(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        x.to_string()
    }
}

pub fn parse_sig17<E: serde::de::Error>(s: &str) -> Result<f64, E> {
    s.trim().parse::<f64>().map_err(|e| E::custom(format!("bad decimal {s:?}: {e}")))
}

pub mod real {
    use super::*;

    pub fn serialize<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_sig17(*x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        let s = String::deserialize(d)?;
        parse_sig17(&s)
    }
}

pub mod complex {
    use super::*;

    pub fn serialize<S: Serializer>(z: &Complex64, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq([format_sig17(z.re), format_sig17(z.im)])
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Complex64, D::Error> {
        let [re, im] = <[String; 2]>::deserialize(d)?;
        Ok(Complex64::new(parse_sig17(&re)?, parse_sig17(&im)?))
    }
}

pub mod complex_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Complex64], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|z| [format_sig17(z.re), format_sig17(z.im)]))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Complex64>, D::Error> {
        let raw = Vec::<[String; 2]>::deserialize(d)?;
        raw.iter()
            .map(|[re, im]| Ok(Complex64::new(parse_sig17(re)?, parse_sig17(im)?)))
            .collect()
    }
}

pub mod real_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[f64], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| format_sig17(*x)))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<f64>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter().map(|x| parse_sig17(x)).collect()
    }
}
