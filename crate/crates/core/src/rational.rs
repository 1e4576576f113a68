//! Exact rational scalars and their `"p/q"` wire form.
//!
//! All LP weights and optimal values are arbitrary-precision rationals;
//! nothing in an optimality-critical path touches floating point. The
//! representation is backed by [`num::BigRational`], which keeps values
//! normalized (reduced, positive denominator) by construction.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

pub type Rational = BigRational;

/// Rational from an integer.
pub fn int(value: i64) -> Rational {
    BigRational::from_integer(BigInt::from(value))
}

/// Rational `num / den`; `den` must be nonzero.
pub fn ratio(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rational {
    BigRational::zero()
}

pub fn is_zero(value: &Rational) -> bool {
    value.is_zero()
}

pub fn one() -> Rational {
    BigRational::one()
}

/// Renders as `"p"` for integers and `"p/q"` otherwise.
pub fn to_pq(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_pq(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        None => text.parse::<BigInt>().ok().map(BigRational::from_integer),
        Some((p, q)) => {
            let p = p.trim().parse::<BigInt>().ok()?;
            let q = q.trim().parse::<BigInt>().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(BigRational::new(p, q))
            }
        }
    }
}

/// Largest integer at most `value`, as i64 (fits for every value this crate
/// produces: optima are bounded by the vertex count).
pub fn floor_i64(value: &Rational) -> i64 {
    use num::ToPrimitive;
    value
        .floor()
        .to_integer()
        .to_i64()
        .expect("value within i64 range")
}

/// Serde adapters rendering `Rational` as a `"p/q"` string.
pub mod serde_pq {
    use super::{parse_pq, to_pq, Rational};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(value: &Rational, ser: S) -> Result<S::Ok, S::Error> {
        to_pq(value).serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(de)?;
        parse_pq(&s).ok_or_else(|| serde::de::Error::custom(format!("bad rational: {s}")))
    }
}

/// Serde adapters for `Option<Rational>`.
pub mod serde_pq_opt {
    use super::{parse_pq, to_pq, Rational};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(value: &Option<Rational>, ser: S) -> Result<S::Ok, S::Error> {
        value.as_ref().map(to_pq).serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Option<Rational>, D::Error> {
        let s = Option::<String>::deserialize(de)?;
        match s {
            None => Ok(None),
            Some(s) => parse_pq(&s)
                .map(Some)
                .ok_or_else(|| serde::de::Error::custom(format!("bad rational: {s}"))),
        }
    }
}

/// Serde adapter for `Vec<Rational>`.
pub mod serde_pq_vec {
    use super::{parse_pq, to_pq, Rational};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(values: &[Rational], ser: S) -> Result<S::Ok, S::Error> {
        values.iter().map(to_pq).collect::<Vec<_>>().serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<Rational>, D::Error> {
        let strings = Vec::<String>::deserialize(de)?;
        strings
            .into_iter()
            .map(|s| {
                parse_pq(&s).ok_or_else(|| serde::de::Error::custom(format!("bad rational: {s}")))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pq_round_trip() {
        for (n, d, s) in [(1, 2, "1/2"), (5, 1, "5"), (-7, 3, "-7/3"), (0, 9, "0")] {
            let r = ratio(n, d);
            assert_eq!(to_pq(&r), s);
            assert_eq!(parse_pq(s).unwrap(), r);
        }
        assert_eq!(parse_pq("6/4").unwrap(), ratio(3, 2));
        assert!(parse_pq("1/0").is_none());
        assert!(parse_pq("x").is_none());
    }

    #[test]
    fn floor_behaves_on_negatives() {
        assert_eq!(floor_i64(&ratio(7, 2)), 3);
        assert_eq!(floor_i64(&ratio(-7, 2)), -4);
        assert_eq!(floor_i64(&int(4)), 4);
    }
}
