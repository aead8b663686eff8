//! Serde adapters: big integers and exact rationals as decimal strings.
//!
//! JSON consumers routinely parse numbers into 64-bit floats; index
//! values here reach 8.3×10⁹ and beyond, so every big value is emitted
//! as a string ("8345660400", "3/2") and parsed back exactly.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{de, Deserialize, Deserializer, Serializer};

fn parse_bigint<E: de::Error>(s: &str) -> Result<BigInt, E> {
    BigInt::from_str(s).map_err(|e| E::custom(format!("invalid integer {s:?}: {e}")))
}

fn parse_ratio<E: de::Error>(s: &str) -> Result<BigRational, E> {
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(parse_bigint(s)?)),
        Some((n, d)) => Ok(BigRational::new(parse_bigint(n)?, parse_bigint(d)?)),
    }
}

/// Canonical display form of an exact rational: "7" or "3/2".
pub fn ratio_to_string(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses the canonical rational form; `None` on malformed input.
pub fn ratio_from_string(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        None => Some(BigRational::from_integer(BigInt::from_str(s).ok()?)),
        Some((n, d)) => {
            let den = BigInt::from_str(d).ok()?;
            if den == BigInt::from(0) {
                return None;
            }
            Some(BigRational::new(BigInt::from_str(n).ok()?, den))
        }
    }
}

fn ratio_string(r: &BigRational) -> String {
    ratio_to_string(r)
}

pub mod bigint {
    use super::*;

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        parse_bigint(&String::deserialize(d)?)
    }
}

pub mod bigint_opt {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(x) => s.serialize_some(&x.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| parse_bigint(&s))
            .transpose()
    }
}

pub mod bigint_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(BigInt::to_string))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| parse_bigint(s))
            .collect()
    }
}

pub mod ratio {
    use super::*;

    pub fn serialize<S: Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&ratio_string(v))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        parse_ratio(&String::deserialize(d)?)
    }
}

pub mod ratio_opt {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Option<BigRational>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(x) => s.serialize_some(&ratio_string(x)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigRational>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| parse_ratio(&s))
            .transpose()
    }
}
