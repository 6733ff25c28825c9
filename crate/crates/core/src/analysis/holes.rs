//! Largest empty convex polygon (hole) of a point set.
//!
//! Every hole has a unique lowest vertex (ties broken by smaller x). For each
//! candidate anchor `a`, the points lexicographically above it are sorted by
//! angle around `a`; a hole anchored at `a` is then a chain `a, v1, ..., vm`
//! of increasing angle that turns left at every vertex and whose fan
//! triangles `a v_i v_{i+1}` are all empty. Extensions of a chain depend only
//! on its last edge, so the depth-first search is memoized per edge.

use rayon::prelude::*;
use serde::Serialize;

use crate::drawing::Drawing;
use crate::error::{Error, Result};
use crate::exact::{orientation, Orientation, Point};
use crate::limits::Limits;

use super::order_type::order_type;
use super::triangles::{strictly_inside, TriangleTable};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HoleReport {
    /// Largest `h` such that the set has an empty convex `h`-gon.
    pub max_hole: usize,
    /// Labels of one largest hole, counterclockwise from its lowest vertex.
    pub witness: Vec<usize>,
    pub empty_triangle_count: usize,
}

pub fn largest_empty_hole(s: &Drawing) -> Result<HoleReport> {
    largest_empty_hole_with(s, &Limits::default())
}

pub fn largest_empty_hole_with(s: &Drawing, limits: &Limits) -> Result<HoleReport> {
    limits.check_hole_points(s.len())?;
    if s.len() < 3 {
        if s.is_empty() {
            return Err(Error::Empty);
        }
        return Ok(HoleReport { max_hole: s.len(), witness: (0..s.len()).collect(), empty_triangle_count: 0 });
    }
    order_type(s)?;
    let table = TriangleTable::new(s);
    let best = (0..s.len()).into_par_iter().map(|a| best_anchored_at(s, &table, a)).reduce(Vec::new, |x, y| {
        if y.len() > x.len() {
            y
        } else {
            x
        }
    });
    Ok(HoleReport { max_hole: best.len(), witness: best, empty_triangle_count: table.count() })
}

fn lower(p: &Point, q: &Point) -> bool {
    (&p.y, &p.x) < (&q.y, &q.x)
}

fn best_anchored_at(s: &Drawing, table: &TriangleTable, a: usize) -> Vec<usize> {
    let pa = &s[a];
    let mut cand: Vec<usize> = (0..s.len()).filter(|&b| lower(pa, &s[b])).collect();
    // Angles around `a` all lie in [0, pi), so the turn test is a total order.
    cand.sort_by(|&b, &c| match orientation(pa, &s[b], &s[c]) {
        Orientation::Left => std::cmp::Ordering::Less,
        Orientation::Right => std::cmp::Ordering::Greater,
        Orientation::Collinear => std::cmp::Ordering::Equal,
    });
    let m = cand.len();
    if m < 2 {
        return Vec::new();
    }
    let pt = |i: usize| &s[cand[i]];
    // ext[i][j]: most vertices that can follow the edge v_i -> v_j and still
    // close back to `a`; -1 when no convex closure exists.
    const NONE: i32 = -1;
    let mut ext = vec![NONE; m * m];
    let mut next = vec![usize::MAX; m * m];
    for j in (0..m).rev() {
        for i in 0..j {
            let mut best = if orientation(pt(i), pt(j), pa) == Orientation::Left { 0 } else { NONE };
            let mut arg = usize::MAX;
            for l in j + 1..m {
                let e = ext[j * m + l];
                if e + 1 > best
                    && e != NONE
                    && orientation(pt(i), pt(j), pt(l)) == Orientation::Left
                    && table.is_empty_triangle(a, cand[j], cand[l])
                {
                    best = e + 1;
                    arg = l;
                }
            }
            ext[i * m + j] = best;
            next[i * m + j] = arg;
        }
    }
    let mut best_len = 0;
    let mut start = None;
    for i in 0..m {
        for j in i + 1..m {
            let e = ext[i * m + j];
            if e != NONE && table.is_empty_triangle(a, cand[i], cand[j]) && e as usize + 3 > best_len {
                best_len = e as usize + 3;
                start = Some((i, j));
            }
        }
    }
    let Some((mut i, mut j)) = start else {
        return Vec::new();
    };
    let mut hole = vec![a, cand[i], cand[j]];
    while next[i * m + j] != usize::MAX {
        let l = next[i * m + j];
        hole.push(cand[l]);
        (i, j) = (j, l);
    }
    debug_assert_eq!(hole.len(), best_len);
    hole
}

/// Exhaustive reference: tries every subset, largest first. Limited to 16 points.
pub fn largest_empty_hole_exhaustive(s: &Drawing) -> Result<usize> {
    let n = s.len();
    if n > 16 {
        return Err(Error::LimitExceeded { what: "n", got: n as u64, max: 16 });
    }
    if n < 3 {
        return Ok(n);
    }
    let pts = s.points();
    let mut best = 0;
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size < 3 || size <= best {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let Some(hull) = convex_cycle(pts, &members) else {
            continue;
        };
        let empty = (0..n).filter(|i| mask & (1 << i) == 0).all(|r| {
            (1..hull.len() - 1).all(|t| !strictly_inside(&pts[hull[0]], &pts[hull[t]], &pts[hull[t + 1]], &pts[r]))
        });
        if empty {
            best = size;
        }
    }
    Ok(best)
}

// Members in counterclockwise order if they are in convex position.
fn convex_cycle(pts: &[Point], members: &[usize]) -> Option<Vec<usize>> {
    // A point is a hull vertex iff it is in no triangle of the others.
    for &r in members {
        for (x, &i) in members.iter().enumerate() {
            for (y, &j) in members.iter().enumerate().skip(x + 1) {
                for &k in &members[y + 1..] {
                    if r != i && r != j && r != k && strictly_inside(&pts[i], &pts[j], &pts[k], &pts[r]) {
                        return None;
                    }
                }
            }
        }
    }
    let &low = members.iter().min_by(|&&a, &&b| (&pts[a].y, &pts[a].x).cmp(&(&pts[b].y, &pts[b].x)))?;
    let mut rest: Vec<usize> = members.iter().copied().filter(|&m| m != low).collect();
    rest.sort_by(|&b, &c| match orientation(&pts[low], &pts[b], &pts[c]) {
        Orientation::Left => std::cmp::Ordering::Less,
        Orientation::Right => std::cmp::Ordering::Greater,
        Orientation::Collinear => std::cmp::Ordering::Equal,
    });
    let mut cycle = vec![low];
    cycle.extend(rest);
    let h = cycle.len();
    let convex = (0..h)
        .all(|t| orientation(&pts[cycle[t]], &pts[cycle[(t + 1) % h]], &pts[cycle[(t + 2) % h]]) == Orientation::Left);
    convex.then_some(cycle)
}
