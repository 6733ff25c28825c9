// Exact values serialize as decimal strings ("p/q" for non-integral rationals).

use serde::ser::{SerializeSeq, Serializer};

use crate::exact::{Rational, Scalar};

pub fn rational<S: Serializer>(v: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn rationals<S: Serializer>(v: &[Rational; 4], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for r in v {
        seq.serialize_element(&r.to_string())?;
    }
    seq.end()
}

pub fn scalar<S: Serializer>(v: &Scalar, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}
