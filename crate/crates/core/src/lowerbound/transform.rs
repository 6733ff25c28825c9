use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::analysis::{first_orientation_difference, horton_violation};
use crate::construct::small_horton;
use crate::drawing::Drawing;
use crate::error::{Error, Result};
use crate::exact::{Point, Scalar};

/// Output of [`isotheticize`]: the image of the odd-labeled points under
/// `(x, y) -> (a x + b y, a y - b x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotheticImage {
    pub drawing: Drawing,
    pub a: Scalar,
    pub b: Scalar,
}

type Dir = (Scalar, Scalar);

fn upper_half(d: &Dir) -> bool {
    d.1.is_positive() || (d.1.is_zero() && d.0.is_positive())
}

fn cross(u: &Dir, v: &Dir) -> Scalar {
    &u.0 * &v.1 - &u.1 * &v.0
}

fn dot(u: &Dir, v: &Dir) -> Scalar {
    &u.0 * &v.0 + &u.1 * &v.1
}

fn angular(u: &Dir, v: &Dir) -> Ordering {
    upper_half(v).cmp(&upper_half(u)).then_with(|| Scalar::zero().cmp(&cross(u, v)))
}

fn diff(p: &Point, q: &Point) -> Dir {
    (&q.x - &p.x, &q.y - &p.y)
}

/// Turns a drawing with the labeled order type of `P^k` into an isothetic
/// Horton drawing of `2^{k-1}` points.
///
/// Directions `v` along which the odd-labeled points project in label order
/// form an open arc bounded by normals of pair vectors. Every normal of every
/// pair of `S` is a critical direction; the sum of two angularly consecutive
/// critical directions is strictly between them, so it is feasible exactly
/// when its cell lies in the arc. Among feasible sums the shortest wins.
pub fn isotheticize(s: &Drawing) -> Result<IsotheticImage> {
    let k = s.log2_len().ok_or(Error::NotPowerOfTwo(s.len()))?;
    if k < 2 {
        return Err(Error::TooSmall { what: "isotheticize input", min: 4, got: s.len() as u64 });
    }
    let reference = small_horton(k)?;
    if let Some((i, j, l)) = first_orientation_difference(s, &reference)? {
        return Err(Error::OrderTypeMismatch(i, j, l));
    }

    let pts = s.points();
    // Projection order of the odd labels is increasing iff every
    // consecutive difference has positive dot product with v.
    let odd: Vec<&Point> = pts.iter().skip(1).step_by(2).collect();
    let steps: Vec<Dir> = odd.windows(2).map(|w| diff(w[0], w[1])).collect();

    let mut critical: Vec<Dir> = Vec::with_capacity(pts.len() * (pts.len() - 1));
    for (i, p) in pts.iter().enumerate() {
        for q in &pts[i + 1..] {
            let (ux, uy) = diff(p, q);
            critical.push((-&uy, ux.clone()));
            critical.push((uy, -ux));
        }
    }
    critical.sort_by(angular);
    critical.dedup_by(|u, v| upper_half(u) == upper_half(v) && cross(u, v).is_zero());

    let m = critical.len();
    let best = (0..m)
        .filter_map(|i| {
            let (c, d) = (&critical[i], &critical[(i + 1) % m]);
            if !cross(c, d).is_positive() {
                return None;
            }
            let v = (&c.0 + &d.0, &c.1 + &d.1);
            steps.iter().all(|w| dot(&v, w).is_positive()).then_some(v)
        })
        .min_by(|u, v| dot(u, u).cmp(&dot(v, v)))
        .ok_or_else(|| Error::Degenerate("no direction orders the odd points".into()))?;

    let (a, b) = best;
    let drawing =
        Drawing::new(odd.iter().map(|p| Point { x: &a * &p.x + &b * &p.y, y: &a * &p.y - &b * &p.x }).collect());
    if drawing.len() * 2 != s.len() {
        return Err(Error::Invariant("isotheticized drawing has the wrong size".into()));
    }
    drawing.check_x_sorted().map_err(|e| Error::Invariant(format!("image is not x-sorted: {e}")))?;
    if let Some(v) = horton_violation(&drawing)? {
        return Err(Error::Invariant(format!("image is not a Horton set: {v}")));
    }
    Ok(IsotheticImage { drawing, a, b })
}
