//! Integer drawings of the Horton set.
//!
//! [`small_horton`] builds the drawing `P^k` whose coordinates stay below
//! `2^{k(k-1)/2 - 1}`; [`classic_horton`] builds the textbook drawing `H^k`
//! whose vertical offsets grow like `3^{2^{k-1}}`. Both emit their points in
//! increasing x order, so label and x-rank agree.

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::drawing::Drawing;
use crate::error::{Error, Result};
use crate::exact::{Point, Scalar};
use crate::limits::Limits;

/// `f(1) = 0`, `f(i) = 2^{i(i-1)/2 - 1}` for `i >= 2`.
pub fn f(i: u32) -> Result<Scalar> {
    match i {
        0 => Err(Error::TooSmall { what: "i", min: 1, got: 0 }),
        1 => Ok(Scalar::zero()),
        _ => Ok(Scalar::one() << (exponent(i) as usize)),
    }
}

/// `g(1) = 0`, `g(i) = f(i) - f(i-1)` for `i >= 2`.
pub fn g(i: u32) -> Result<Scalar> {
    match i {
        0 => Err(Error::TooSmall { what: "i", min: 1, got: 0 }),
        1 => Ok(Scalar::zero()),
        _ => Ok(f(i)? - f(i - 1)?),
    }
}

fn exponent(i: u32) -> u64 {
    u64::from(i) * u64::from(i - 1) / 2 - 1
}

/// The small drawing `P^k` of the Horton set on `2^k` points.
pub fn small_horton(k: u32) -> Result<Drawing> {
    small_horton_with(k, &Limits::default())
}

pub fn small_horton_with(k: u32, limits: &Limits) -> Result<Drawing> {
    limits.check_small_k(k)?;
    // P^0 = {(0,0)}; P^i interleaves (2x, y) and (2x+1, y + g(i)).
    let mut pts = vec![Point::new(0, 0)];
    for i in 1..=k {
        let lift = g(i)?;
        let mut next = Vec::with_capacity(pts.len() * 2);
        for p in &pts {
            let x2 = &p.x << 1usize;
            next.push(Point::new(x2.clone(), p.y.clone()));
            next.push(Point::new(x2 + 1, &p.y + &lift));
        }
        pts = next;
    }
    Ok(Drawing::new(pts))
}

/// The classic drawing `H^k`: `H^0 = {(1,1)}`, `H^1 = {(1,1),(2,2)}`, and
/// `H^k = {(2x-1, y)} ∪ {(2x, y + 3^{2^{k-1}})}` over `(x, y)` in `H^{k-1}`.
pub fn classic_horton(k: u32) -> Result<Drawing> {
    classic_horton_with(k, &Limits::default())
}

pub fn classic_horton_with(k: u32, limits: &Limits) -> Result<Drawing> {
    limits.check_classic_k(k)?;
    if k == 0 {
        return Ok(Drawing::from_coords([(1, 1)]));
    }
    let mut pts = vec![Point::new(1, 1), Point::new(2, 2)];
    for i in 2..=k {
        let lift: Scalar = Pow::pow(BigInt::from(3), 1u64 << (i - 1));
        let mut next = Vec::with_capacity(pts.len() * 2);
        for p in &pts {
            let x2 = &p.x << 1usize;
            next.push(Point::new(&x2 - 1, p.y.clone()));
            next.push(Point::new(x2, &p.y + &lift));
        }
        pts = next;
    }
    Ok(Drawing::new(pts))
}

/// Predicted size of `P^k`: `2^{k(k-1)/2 - 1}`, i.e. `n^{log(n/2)/2} / 2`.
/// Only claimed for `n >= 16`.
pub fn predicted_small_size(k: u32) -> Result<Scalar> {
    if k < 4 {
        return Err(Error::TooSmall { what: "k", min: 4, got: k.into() });
    }
    f(k)
}
