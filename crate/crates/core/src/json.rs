//! Serde helpers: integers that fit `i64` become JSON numbers, anything
//! larger a decimal string. Rationals are written as `"p/q"`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serializer;

use crate::exact_poly::Rat;

pub(crate) fn big<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(x) => s.serialize_i64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

pub(crate) fn rat<S: Serializer>(v: &Rat, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&fraction(v))
}

/// `p/q`, always with an explicit denominator.
pub fn fraction(v: &Rat) -> String {
    format!("{}/{}", v.numer(), v.denom())
}
