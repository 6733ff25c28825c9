// Independent reference implementations used as oracles. Nothing here calls
// into the library's predicates.
#![allow(dead_code)]

use horton::{Drawing, Point};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Signed doubled area of `pqr` by the rational cofactor expansion of
/// `det [[px, py, 1], [qx, qy, 1], [rx, ry, 1]]`.
pub fn det3(p: &Point, q: &Point, r: &Point) -> BigRational {
    let c = |v: &BigInt| BigRational::from_integer(v.clone());
    let one = BigRational::from_integer(1.into());
    let m = [[c(&p.x), c(&p.y), one.clone()], [c(&q.x), c(&q.y), one.clone()], [c(&r.x), c(&r.y), one]];
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

/// Orientation from [`det3`]: `-1` left, `+1` right, `0` collinear.
pub fn rational_side(p: &Point, q: &Point, r: &Point) -> i8 {
    let d = det3(p, q, r);
    if d.is_zero() {
        0
    } else if d.is_positive() {
        -1
    } else {
        1
    }
}

/// `-1` when `r` is left of `pq`, `+1` when right, `0` when collinear.
pub fn side(p: &Point, q: &Point, r: &Point) -> i8 {
    let d: BigInt = (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x);
    if d.is_zero() {
        0
    } else if d.is_positive() {
        -1
    } else {
        1
    }
}

pub fn in_general_position(pts: &[Point]) -> bool {
    let n = pts.len();
    (0..n).all(|i| (i + 1..n).all(|j| (j + 1..n).all(|k| side(&pts[i], &pts[j], &pts[k]) != 0)))
}

fn inside(a: &Point, b: &Point, c: &Point, r: &Point) -> bool {
    let (s1, s2, s3) = (side(a, b, r), side(b, c, r), side(c, a, r));
    s1 != 0 && s1 == s2 && s2 == s3
}

/// Empty triangles by testing every point against every triple. A degenerate
/// triple has nothing strictly inside and counts as empty.
pub fn naive_empty_triangles(s: &Drawing) -> usize {
    let p = s.points();
    let n = p.len();
    let mut count = 0;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if !(0..n).any(|r| inside(&p[i], &p[j], &p[k], &p[r])) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Distinct random points in `[-range, range]^2` with no three collinear.
pub fn random_general_position(rng: &mut ChaCha8Rng, n: usize, range: i64) -> Drawing {
    let mut pts: Vec<Point> = Vec::with_capacity(n);
    while pts.len() < n {
        let p = Point::new(rng.gen_range(-range..=range), rng.gen_range(-range..=range));
        if pts.contains(&p) {
            continue;
        }
        let ok = (0..pts.len()).all(|i| (i + 1..pts.len()).all(|j| side(&pts[i], &pts[j], &p) != 0));
        if ok {
            pts.push(p);
        }
    }
    Drawing::new(pts)
}

fn strictly_above_line(a: &Point, b: &Point, r: &Point) -> bool {
    // With a.x < b.x, r is above line ab iff it is left of a -> b.
    let (a, b) = if a.x < b.x { (a, b) } else { (b, a) };
    side(a, b, r) == -1
}

fn strictly_below_line(a: &Point, b: &Point, r: &Point) -> bool {
    let (a, b) = if a.x < b.x { (a, b) } else { (b, a) };
    side(a, b, r) == 1
}

/// The recursive definition with explicit sorting and splitting.
pub fn naive_is_horton(pts: &[Point]) -> bool {
    let mut pts = pts.to_vec();
    pts.sort_by(|a, b| a.x.cmp(&b.x));
    if pts.windows(2).any(|w| w[0].x == w[1].x) {
        return false;
    }
    fn rec(pts: &[Point]) -> bool {
        if pts.len() <= 1 {
            return true;
        }
        let even: Vec<Point> = pts.iter().step_by(2).cloned().collect();
        let odd: Vec<Point> = pts.iter().skip(1).step_by(2).cloned().collect();
        let upper_ok = odd
            .iter()
            .enumerate()
            .all(|(i, a)| odd[i + 1..].iter().all(|b| even.iter().all(|r| strictly_below_line(a, b, r))));
        let lower_ok = even
            .iter()
            .enumerate()
            .all(|(i, a)| even[i + 1..].iter().all(|b| odd.iter().all(|r| strictly_above_line(a, b, r))));
        upper_ok && lower_ok && rec(&even) && rec(&odd)
    }
    pts.len().is_power_of_two() && rec(&pts)
}

/// Largest subset in convex position with no other point inside, by
/// checking every subset.
pub fn subset_max_hole(s: &Drawing) -> usize {
    let p = s.points();
    let n = p.len();
    let mut best = n.min(2);
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size < 3 || size <= best {
            continue;
        }
        let sub: Vec<&Point> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| &p[i]).collect();
        let hull = convex_hull(&sub);
        if hull.len() != size {
            continue;
        }
        let empty = (0..n)
            .filter(|i| mask >> i & 1 == 0)
            .all(|r| (0..hull.len()).any(|e| side(hull[e], hull[(e + 1) % hull.len()], &p[r]) != -1));
        if empty {
            best = size;
        }
    }
    best
}

/// Counter-clockwise hull (strict), by gift wrapping.
fn convex_hull<'a>(pts: &[&'a Point]) -> Vec<&'a Point> {
    let start = *pts.iter().min_by(|a, b| (&a.x, &a.y).cmp(&(&b.x, &b.y))).unwrap();
    let mut hull = vec![start];
    let mut cur = start;
    loop {
        let mut next = if std::ptr::eq(pts[0], cur) { pts[1] } else { pts[0] };
        for &c in pts {
            if !std::ptr::eq(c, cur) && side(cur, next, c) == 1 {
                next = c;
            }
        }
        if std::ptr::eq(next, start) {
            return hull;
        }
        hull.push(next);
        cur = next;
        if hull.len() > pts.len() {
            return hull;
        }
    }
}

pub fn coords(s: &Drawing) -> Vec<(BigInt, BigInt)> {
    s.iter().map(|p| (p.x.clone(), p.y.clone())).collect()
}

/// Uniform signed integer with at most `bits` bits of magnitude.
pub fn random_bigint(rng: &mut ChaCha8Rng, bits: u32) -> BigInt {
    let bytes: Vec<u8> = (0..bits.div_ceil(8)).map(|_| rng.gen()).collect();
    let mag = BigInt::from_bytes_le(num_bigint::Sign::Plus, &bytes) >> (bytes.len() as u32 * 8 - bits);
    if rng.gen() {
        -mag
    } else {
        mag
    }
}
