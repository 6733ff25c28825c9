//! Empty triangles in O(n^3).
//!
//! Points are processed in lexicographic `(x, y)` order, which is the strict
//! x order of an infinitesimally rotated copy of the set; orientations do not
//! change under rotation. For `a < b < c` in that order, let `below[a][c]`
//! count the points strictly between `a` and `c` that lie strictly below the
//! line `ac`. The number of points inside triangle `abc` is then
//! `below[a][b] + below[b][c] - below[a][c]` when `b` is above `ac`, and
//! `below[a][c] - below[a][b] - below[b][c] - 1` when `b` is below it.

use rayon::prelude::*;

use crate::drawing::Drawing;
use crate::error::Result;
use crate::exact::{orientation, Orientation, Point};
use crate::limits::Limits;

use super::order_type::{choose3, triple_rank, OrderTypeVector};

/// Emptiness of every triangle of a point set.
#[derive(Clone, Debug)]
pub struct TriangleTable {
    n: usize,
    // position of each label in lexicographic order
    position: Vec<usize>,
    // indexed by `triple_rank` over positions
    empty: Vec<bool>,
    count: usize,
}

impl TriangleTable {
    pub fn new(s: &Drawing) -> Self {
        let n = s.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| (&s[a].x, &s[a].y).cmp(&(&s[b].x, &s[b].y)));
        let mut position = vec![0; n];
        for (pos, &label) in order.iter().enumerate() {
            position[label] = pos;
        }
        let sorted = s.select(&order);
        let ot = OrderTypeVector::of_points(&sorted);
        let empty = if ot.first_collinear().is_some() { naive_table(sorted.points()) } else { sweep_table(&ot) };
        let count = empty.iter().filter(|&&e| e).count();
        TriangleTable { n, position, empty, count }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Number of empty triangles.
    pub fn count(&self) -> usize {
        self.count
    }

    /// Whether the triangle on three distinct labels has no point strictly inside.
    pub fn is_empty_triangle(&self, i: usize, j: usize, k: usize) -> bool {
        let mut t = [self.position[i], self.position[j], self.position[k]];
        t.sort_unstable();
        self.empty[triple_rank(self.n, t[0], t[1], t[2])]
    }
}

fn sweep_table(ot: &OrderTypeVector) -> Vec<bool> {
    let n = ot.n();
    let mut below = vec![0u32; n * n];
    for a in 0..n {
        for c in a + 2..n {
            below[a * n + c] = (a + 1..c).filter(|&b| ot.get(a, b, c) == Orientation::Left).count() as u32;
        }
    }
    let mut empty = Vec::with_capacity(choose3(n));
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let (ab, bc, ac) = (below[a * n + b] as i64, below[b * n + c] as i64, below[a * n + c] as i64);
                let inside = if ot.get(a, b, c) == Orientation::Right { ab + bc - ac } else { ac - ab - bc - 1 };
                debug_assert!(inside >= 0);
                empty.push(inside == 0);
            }
        }
    }
    empty
}

/// Strict containment: `r` is inside `abc` iff all three orientations agree.
pub fn strictly_inside(a: &Point, b: &Point, c: &Point, r: &Point) -> bool {
    let o1 = orientation(a, b, r);
    o1 != Orientation::Collinear && o1 == orientation(b, c, r) && o1 == orientation(c, a, r)
}

// Fallback for degenerate input, where the sweep identities do not hold.
fn naive_table(pts: &[Point]) -> Vec<bool> {
    let n = pts.len();
    (0..n)
        .into_par_iter()
        .flat_map_iter(|a| {
            (a + 1..n).flat_map(move |b| {
                (b + 1..n).map(move |c| !pts.iter().any(|r| strictly_inside(&pts[a], &pts[b], &pts[c], r)))
            })
        })
        .collect()
}

/// Number of triples with no point of `s` strictly inside their triangle.
pub fn count_empty_triangles(s: &Drawing) -> usize {
    TriangleTable::new(s).count()
}

/// [`count_empty_triangles`] behind the triangle-table size guard.
pub fn count_empty_triangles_with(s: &Drawing, limits: &Limits) -> Result<usize> {
    limits.check_triangle_points(s.len())?;
    Ok(count_empty_triangles(s))
}
