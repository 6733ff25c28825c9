//! The recursive Horton-set check.
//!
//! A point set with `2^k` distinct x-coordinates is a Horton set when its
//! even and odd x-rank halves are Horton sets and the odd half is *high
//! above* the even half: every line through two odd points passes strictly
//! above every even point and every line through two even points passes
//! strictly below every odd point.

use std::fmt;

use rayon::prelude::*;

use crate::drawing::Drawing;
use crate::error::{Error, Result};
use crate::exact::{orientation, Orientation, Point};

/// Why one set fails to be high above another. Labels index into the sets
/// as passed to [`high_above_violation`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HighAboveViolation {
    /// The line through `upper[i]`, `upper[j]` does not pass strictly above `lower[r]`.
    UpperLine { i: usize, j: usize, r: usize },
    /// The line through `lower[i]`, `lower[j]` does not pass strictly below `upper[r]`.
    LowerLine { i: usize, j: usize, r: usize },
}

fn check_distinct_x(s: &[Point]) -> Result<()> {
    let mut idx: Vec<usize> = (0..s.len()).collect();
    idx.sort_by(|&a, &b| s[a].x.cmp(&s[b].x));
    for w in idx.windows(2) {
        if s[w[0]].x == s[w[1]].x {
            return Err(Error::DuplicateX(w[0].min(w[1]), w[0].max(w[1])));
        }
    }
    Ok(())
}

// `r` strictly on the `want` side of the line through `a` and `b` (distinct x).
fn strictly(a: &Point, b: &Point, r: &Point, want: Orientation) -> bool {
    let o = if a.x < b.x { orientation(a, b, r) } else { orientation(b, a, r) };
    o == want
}

fn lines_miss(lines: &[Point], pts: &[Point], want: Orientation) -> Option<(usize, usize, usize)> {
    let m = lines.len();
    let scan = |i: usize| {
        for j in i + 1..m {
            for (r, p) in pts.iter().enumerate() {
                if !strictly(&lines[i], &lines[j], p, want) {
                    return Some((i, j, r));
                }
            }
        }
        None
    };
    if m * m * pts.len() > 1 << 14 {
        (0..m).into_par_iter().find_map_first(scan)
    } else {
        (0..m).find_map(scan)
    }
}

fn violation_unchecked(upper: &[Point], lower: &[Point]) -> Option<HighAboveViolation> {
    // Points strictly below a line are on its right when it is directed left to right.
    if let Some((i, j, r)) = lines_miss(upper, lower, Orientation::Right) {
        return Some(HighAboveViolation::UpperLine { i, j, r });
    }
    lines_miss(lower, upper, Orientation::Left).map(|(i, j, r)| HighAboveViolation::LowerLine { i, j, r })
}

/// First witness that `upper` is not high above `lower`, if any.
pub fn high_above_violation(upper: &Drawing, lower: &Drawing) -> Result<Option<HighAboveViolation>> {
    if upper.is_empty() || lower.is_empty() {
        return Err(Error::Empty);
    }
    check_distinct_x(upper.points())?;
    check_distinct_x(lower.points())?;
    Ok(violation_unchecked(upper.points(), lower.points()))
}

/// Whether `upper` is high above `lower`.
pub fn is_high_above(upper: &Drawing, lower: &Drawing) -> Result<bool> {
    Ok(high_above_violation(upper, lower)?.is_none())
}

/// A failed high-above test somewhere in the recursion. All labels refer to
/// the input drawing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HortonViolation {
    /// Labels of the node whose odd half is not high above its even half.
    pub node: Vec<usize>,
    /// The two labels spanning the offending line.
    pub line: (usize, usize),
    /// The point on the wrong side of it.
    pub point: usize,
    /// True when the line belongs to the odd (upper) half.
    pub line_in_upper: bool,
}

impl fmt::Display for HortonViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.line;
        if self.line_in_upper {
            write!(f, "line p{a}p{b} of the odd half does not pass strictly above p{}", self.point)
        } else {
            write!(f, "line p{a}p{b} of the even half does not pass strictly below p{}", self.point)
        }
    }
}

/// Checks the recursive definition; `Ok(None)` means `s` is a Horton set.
///
/// Points are taken in x order regardless of their labels. Fails if the
/// size is not a power of two or two points share an x-coordinate.
pub fn horton_violation(s: &Drawing) -> Result<Option<HortonViolation>> {
    let n = s.len();
    if !n.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(n));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| s[a].x.cmp(&s[b].x));
    if let Some(w) = order.windows(2).find(|w| s[w[0]].x == s[w[1]].x) {
        return Err(Error::DuplicateX(w[0].min(w[1]), w[0].max(w[1])));
    }
    Ok(check_node(s, &order))
}

// Top-down: the largest node is checked first, so the reported witness is the
// coarsest failure.
fn check_node(s: &Drawing, labels: &[usize]) -> Option<HortonViolation> {
    if labels.len() < 2 {
        return None;
    }
    let even: Vec<usize> = labels.iter().step_by(2).copied().collect();
    let odd: Vec<usize> = labels.iter().skip(1).step_by(2).copied().collect();
    let pts = |ls: &[usize]| ls.iter().map(|&i| s[i].clone()).collect::<Vec<_>>();
    let (ep, op) = (pts(&even), pts(&odd));
    if let Some(v) = violation_unchecked(&op, &ep) {
        let (line, point, line_in_upper) = match v {
            HighAboveViolation::UpperLine { i, j, r } => ((odd[i], odd[j]), even[r], true),
            HighAboveViolation::LowerLine { i, j, r } => ((even[i], even[j]), odd[r], false),
        };
        return Some(HortonViolation { node: labels.to_vec(), line, point, line_in_upper });
    }
    check_node(s, &even).or_else(|| check_node(s, &odd))
}

/// Whether `s` satisfies the recursive Horton-set definition.
pub fn is_horton(s: &Drawing) -> Result<bool> {
    Ok(horton_violation(s)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::small_horton;

    fn d(c: &[(i64, i64)]) -> Drawing {
        Drawing::from_coords(c.iter().copied())
    }

    #[test]
    fn high_above_examples() {
        assert!(is_high_above(&d(&[(1, 1), (3, 1)]), &d(&[(0, 0), (2, 0)])).unwrap());
        assert!(is_high_above(&d(&[(1, 0)]), &d(&[(0, 5)])).unwrap());
        assert!(!is_high_above(&d(&[(1, -1), (3, -1)]), &d(&[(0, 0), (2, 0)])).unwrap());
        assert_eq!(
            high_above_violation(&d(&[(1, -1), (3, -1)]), &d(&[(0, 0), (2, 0)])).unwrap(),
            Some(HighAboveViolation::UpperLine { i: 0, j: 1, r: 0 })
        );
    }

    #[test]
    fn high_above_errors() {
        assert_eq!(is_high_above(&d(&[(1, 0), (1, 3)]), &d(&[(0, 0)])), Err(Error::DuplicateX(0, 1)));
        assert_eq!(is_high_above(&Drawing::default(), &d(&[(0, 0)])), Err(Error::Empty));
    }

    #[test]
    fn horton_examples() {
        assert!(is_horton(&d(&[(0, 0)])).unwrap());
        assert!(is_horton(&d(&[(0, 0), (1, 1), (2, 0), (3, 1)])).unwrap());
        assert!(!is_horton(&d(&[(0, 0), (1, -1), (2, 0), (3, -1)])).unwrap());
        assert_eq!(is_horton(&d(&[(0, 0), (1, 1), (2, 0)])), Err(Error::NotPowerOfTwo(3)));
        assert_eq!(is_horton(&d(&[(0, 0), (0, 1)])), Err(Error::DuplicateX(0, 1)));
    }

    #[test]
    fn labels_do_not_matter() {
        let s = small_horton(3).unwrap();
        let mut pts = s.clone().into_points();
        pts.reverse();
        assert!(is_horton(&Drawing::new(pts)).unwrap());
    }

    #[test]
    fn witness_refers_to_input_labels() {
        let s = small_horton(3).unwrap().linear_map([[1, 0], [0, -1]]);
        let v = horton_violation(&s).unwrap().unwrap();
        assert_eq!(v.node, (0..8).collect::<Vec<_>>());
        assert!(v.line_in_upper);
        assert_eq!(v.line.0 % 2, 1);
        assert_eq!(v.point % 2, 0);
    }

    #[test]
    fn two_points_are_always_horton() {
        assert!(is_horton(&d(&[(0, 9), (1, -4)])).unwrap());
    }

    #[test]
    fn invariant_under_lift_and_scaling() {
        for k in 0..=5 {
            let s = small_horton(k).unwrap();
            assert!(is_horton(&s.translate(&0.into(), &12345.into())).unwrap());
            assert!(is_horton(&s.linear_map([[7, 0], [0, 7]])).unwrap());
        }
    }
}
