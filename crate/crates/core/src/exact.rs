//! Exact arithmetic kernel.
//!
//! Coordinates are arbitrary-precision integers and every predicate is
//! decided exactly. Derived quantities that are not integral (intersections
//! with vertical lines, distances measured on them) are normalized rationals.
//!
//! Orientation follows the order-type convention used throughout the crate:
//! `-1` when the third point lies to the *left* of the directed line through
//! the first two, `+1` when it lies to the *right*, `0` when collinear. This
//! is the negation of the usual counterclockwise-positive determinant sign.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Exact signed integer coordinate.
pub type Scalar = BigInt;

/// Exact rational; always stored in lowest terms with a positive denominator.
pub type Rational = BigRational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point {
    pub fn new(x: impl Into<Scalar>, y: impl Into<Scalar>) -> Self {
        Point { x: x.into(), y: y.into() }
    }

    /// Largest absolute coordinate.
    pub fn size(&self) -> Scalar {
        self.x.abs().max(self.y.abs())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(i8)]
pub enum Orientation {
    Left = -1,
    Collinear = 0,
    Right = 1,
}

impl Orientation {
    pub fn sign(self) -> i8 {
        self as i8
    }

    pub fn from_sign(sign: i8) -> Self {
        match sign.signum() {
            -1 => Orientation::Left,
            0 => Orientation::Collinear,
            _ => Orientation::Right,
        }
    }

    pub fn reversed(self) -> Self {
        Orientation::from_sign(-self.sign())
    }

    pub fn is_collinear(self) -> bool {
        self == Orientation::Collinear
    }
}

/// Orientation of `r` relative to the directed line `p -> q`.
///
/// Returns `-sign(det[[q-p], [r-p]])`: `Left` (-1), `Right` (+1) or
/// `Collinear` (0).
pub fn orientation(p: &Point, q: &Point, r: &Point) -> Orientation {
    if let Some(sign) = orientation_small(p, q, r) {
        return Orientation::from_sign(-sign);
    }
    let det = (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x);
    Orientation::from_sign(-signum(&det))
}

// Exact i128 evaluation when all coordinates fit in i64; `None` on overflow.
fn orientation_small(p: &Point, q: &Point, r: &Point) -> Option<i8> {
    let small = |v: &Scalar| i64::try_from(v).ok().map(i128::from);
    let (px, py) = (small(&p.x)?, small(&p.y)?);
    let (qx, qy) = (small(&q.x)?, small(&q.y)?);
    let (rx, ry) = (small(&r.x)?, small(&r.y)?);
    let lhs = (qx - px).checked_mul(ry - py)?;
    let rhs = (qy - py).checked_mul(rx - px)?;
    Some(lhs.checked_sub(rhs)?.signum() as i8)
}

fn signum(v: &Scalar) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

/// The infinite line through two distinct points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    pub a: Point,
    pub b: Point,
}

impl Line {
    pub fn new(a: Point, b: Point) -> Result<Self> {
        if a == b {
            return Err(Error::Degenerate(format!("line through coincident points {a}")));
        }
        Ok(Line { a, b })
    }

    pub fn through(a: &Point, b: &Point) -> Result<Self> {
        Line::new(a.clone(), b.clone())
    }

    pub fn is_vertical(&self) -> bool {
        self.a.x == self.b.x
    }

    // Endpoints ordered by increasing x.
    fn left_to_right(&self) -> Result<(&Point, &Point)> {
        match self.a.x.cmp(&self.b.x) {
            std::cmp::Ordering::Less => Ok((&self.a, &self.b)),
            std::cmp::Ordering::Greater => Ok((&self.b, &self.a)),
            std::cmp::Ordering::Equal => Err(Error::VerticalLine),
        }
    }

    /// True iff `r` lies strictly below this (non-vertical) line.
    pub fn strictly_below(&self, r: &Point) -> Result<bool> {
        let (l, h) = self.left_to_right()?;
        Ok(orientation(l, h, r) == Orientation::Right)
    }

    /// True iff `r` lies strictly above this (non-vertical) line.
    pub fn strictly_above(&self, r: &Point) -> Result<bool> {
        let (l, h) = self.left_to_right()?;
        Ok(orientation(l, h, r) == Orientation::Left)
    }

    /// Exact y-coordinate where this line meets the vertical line `x = x0`.
    pub fn meet_vertical(&self, x0: &Rational) -> Result<Rational> {
        if self.is_vertical() {
            return Err(Error::VerticalLine);
        }
        let ax = Rational::from_integer(self.a.x.clone());
        let ay = Rational::from_integer(self.a.y.clone());
        let slope = Rational::new(&self.b.y - &self.a.y, &self.b.x - &self.a.x);
        Ok(ay + slope * (x0 - ax))
    }

    /// x-coordinate of the intersection with `other`, or `None` if parallel.
    pub fn intersection_x(&self, other: &Line) -> Option<Rational> {
        // a1 + s*(b1-a1) = a2 + u*(b2-a2); solve for the x of the meet point.
        let (d1x, d1y) = (&self.b.x - &self.a.x, &self.b.y - &self.a.y);
        let (d2x, d2y) = (&other.b.x - &other.a.x, &other.b.y - &other.a.y);
        let denom = &d1x * &d2y - &d1y * &d2x;
        if denom.is_zero() {
            return None;
        }
        let (ex, ey) = (&other.a.x - &self.a.x, &other.a.y - &self.a.y);
        let s = Rational::new(&ex * &d2y - &ey * &d2x, denom);
        Some(Rational::from_integer(self.a.x.clone()) + s * Rational::from_integer(d1x))
    }
}

/// `point_strictly_below` as a free function over a line.
pub fn point_strictly_below(line: &Line, r: &Point) -> Result<bool> {
    line.strictly_below(r)
}

pub fn point_strictly_above(line: &Line, r: &Point) -> Result<bool> {
    line.strictly_above(r)
}

pub fn line_meet_vertical(line: &Line, x0: &Rational) -> Result<Rational> {
    line.meet_vertical(x0)
}

/// First collinear triple `(i, j, k)` with `i < j < k` in lexicographic order.
pub fn find_collinear_triple(points: &[Point]) -> Option<(usize, usize, usize)> {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if orientation(&points[i], &points[j], &points[k]).is_collinear() {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

/// True iff no three points are collinear.
pub fn general_position(points: &[Point]) -> bool {
    find_collinear_triple(points).is_none()
}

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn int(v: impl Into<Scalar>) -> Rational {
    Rational::from_integer(v.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(orientation(&p(0, 0), &p(1, 0), &p(0, 1)), Orientation::Left);
        assert_eq!(orientation(&p(0, 0), &p(1, 1), &p(2, 2)), Orientation::Collinear);
        assert_eq!(orientation(&p(0, 0), &p(2, 0), &p(1, -5)), Orientation::Right);
        assert_eq!(Orientation::Left.sign(), -1);
    }

    #[test]
    fn small_path_overflow_falls_back() {
        let big = i64::MAX;
        let a = p(-big, -big);
        let b = p(big, big - 1);
        let c = p(big - 1, big);
        // Differences overflow i64 products; result must still be exact.
        let slow = {
            let det = (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x);
            Orientation::from_sign(-signum(&det))
        };
        assert_eq!(orientation(&a, &b, &c), slow);
        assert_eq!(slow, Orientation::Left);
    }

    #[test]
    fn below_above() {
        let l = Line::new(p(0, 0), p(2, 0)).unwrap();
        assert!(l.strictly_below(&p(1, -1)).unwrap());
        assert!(!l.strictly_below(&p(1, 0)).unwrap());
        assert!(!l.strictly_above(&p(1, 0)).unwrap());
        let diag = Line::new(p(0, 0), p(1, 1)).unwrap();
        assert!(diag.strictly_below(&p(2, 1)).unwrap());
        // Endpoint order must not matter.
        let rev = Line::new(p(1, 1), p(0, 0)).unwrap();
        assert!(rev.strictly_below(&p(2, 1)).unwrap());
        assert!(rev.strictly_above(&p(2, 3)).unwrap());
    }

    #[test]
    fn vertical_line_errors() {
        let v = Line::new(p(1, 0), p(1, 5)).unwrap();
        assert_eq!(v.strictly_below(&p(0, 0)), Err(Error::VerticalLine));
        assert_eq!(v.meet_vertical(&int(3)), Err(Error::VerticalLine));
        assert!(Line::new(p(1, 1), p(1, 1)).is_err());
    }

    #[test]
    fn meet_vertical_examples() {
        let l = Line::new(p(0, 0), p(2, 2)).unwrap();
        assert_eq!(l.meet_vertical(&int(1)).unwrap(), int(1));
        let l = Line::new(p(0, 0), p(2, 1)).unwrap();
        assert_eq!(l.meet_vertical(&int(1)).unwrap(), rational(1, 2));
        let l = Line::new(p(0, 0), p(3, 1)).unwrap();
        assert_eq!(l.meet_vertical(&rational(7, 2)).unwrap(), rational(7, 6));
    }

    #[test]
    fn intersection_of_lines() {
        let a = Line::new(p(0, 0), p(2, 2)).unwrap();
        let b = Line::new(p(0, 2), p(2, 0)).unwrap();
        assert_eq!(a.intersection_x(&b), Some(int(1)));
        let c = Line::new(p(0, 1), p(2, 3)).unwrap();
        assert_eq!(a.intersection_x(&c), None);
    }

    #[test]
    fn general_position_examples() {
        assert!(general_position(&[p(0, 0), p(1, 1), p(2, 0), p(3, 1)]));
        assert!(!general_position(&[p(0, 0), p(1, 1), p(2, 2)]));
        assert!(general_position(&[p(0, 0), p(5, 7)]));
        assert_eq!(find_collinear_triple(&[p(0, 0), p(9, 1), p(1, 1), p(2, 2)]), Some((0, 2, 3)));
    }

    #[test]
    fn rationals_are_normalized() {
        let r = rational(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        let z = rational(0, -7);
        assert_eq!(z.denom(), &BigInt::from(1));
    }

    fn pt() -> impl Strategy<Value = Point> {
        (-1_000_000i64..1_000_000, -1_000_000i64..1_000_000).prop_map(|(x, y)| p(x, y))
    }

    proptest! {
        #[test]
        fn antisymmetric(a in pt(), b in pt(), c in pt()) {
            prop_assert_eq!(orientation(&a, &b, &c), orientation(&b, &a, &c).reversed());
        }

        #[test]
        fn cyclic(a in pt(), b in pt(), c in pt()) {
            let o = orientation(&a, &b, &c);
            prop_assert_eq!(o, orientation(&b, &c, &a));
            prop_assert_eq!(o, orientation(&c, &a, &b));
        }

        #[test]
        fn meet_point_lies_on_line(a in pt(), b in pt(), num in -5000i64..5000, den in 1i64..50) {
            prop_assume!(a.x != b.x);
            let line = Line::new(a.clone(), b.clone()).unwrap();
            let x0 = rational(num, den);
            let y0 = line.meet_vertical(&x0).unwrap();
            // Clear denominators: scale everything by den(x0)*den(y0).
            let scale = x0.denom() * y0.denom();
            let sa = Point::new(&a.x * &scale, &a.y * &scale);
            let sb = Point::new(&b.x * &scale, &b.y * &scale);
            let m = Point::new(x0.numer() * y0.denom(), y0.numer() * x0.denom());
            prop_assert_eq!(orientation(&sa, &sb, &m), Orientation::Collinear);
        }
    }
}
