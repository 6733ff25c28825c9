use std::ops::Index;

use crate::error::{Error, Result};
use crate::exact::{Point, Scalar};

/// A labeled point set: the point at index `i` is `p_i`.
///
/// Drawings produced by the constructions are sorted by strictly increasing
/// x, so labels coincide with x-rank. Drawings read from files or obtained
/// by transforming another drawing keep their labels and may not be sorted.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Drawing {
    points: Vec<Point>,
}

impl Drawing {
    pub fn new(points: Vec<Point>) -> Self {
        Drawing { points }
    }

    pub fn from_coords<I, T>(coords: I) -> Self
    where
        I: IntoIterator<Item = (T, T)>,
        T: Into<Scalar>,
    {
        Drawing::new(coords.into_iter().map(|(x, y)| Point::new(x, y)).collect())
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn into_points(self) -> Vec<Point> {
        self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `Some(k)` when the drawing has exactly `2^k` points.
    pub fn log2_len(&self) -> Option<u32> {
        let n = self.len();
        n.is_power_of_two().then(|| n.trailing_zeros())
    }

    /// Maximum absolute coordinate.
    pub fn size(&self) -> Result<Scalar> {
        drawing_size(self)
    }

    /// Checks that x-coordinates are strictly increasing with the label.
    pub fn check_x_sorted(&self) -> Result<()> {
        for (i, w) in self.points.windows(2).enumerate() {
            if w[0].x >= w[1].x {
                return Err(if w[0].x == w[1].x {
                    Error::DuplicateX(i, i + 1)
                } else {
                    Error::OutOfRange(format!("points are not sorted by x at labels {i} and {}", i + 1))
                });
            }
        }
        Ok(())
    }

    /// The same points relabeled by increasing x. Fails on a repeated x.
    pub fn sorted_by_x(&self) -> Result<Drawing> {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by(|&a, &b| self.points[a].x.cmp(&self.points[b].x));
        for w in idx.windows(2) {
            if self.points[w[0]].x == self.points[w[1]].x {
                let (a, b) = (w[0].min(w[1]), w[0].max(w[1]));
                return Err(Error::DuplicateX(a, b));
            }
        }
        Ok(self.select(&idx))
    }

    pub fn select(&self, labels: &[usize]) -> Drawing {
        Drawing::new(labels.iter().map(|&i| self.points[i].clone()).collect())
    }

    /// Points with even label (`p_0, p_2, ...`).
    pub fn even(&self) -> Drawing {
        Drawing::new(self.points.iter().step_by(2).cloned().collect())
    }

    /// Points with odd label (`p_1, p_3, ...`).
    pub fn odd(&self) -> Drawing {
        Drawing::new(self.points.iter().skip(1).step_by(2).cloned().collect())
    }

    pub fn map(&self, f: impl Fn(&Point) -> Point) -> Drawing {
        Drawing::new(self.points.iter().map(f).collect())
    }

    pub fn translate(&self, dx: &Scalar, dy: &Scalar) -> Drawing {
        self.map(|p| Point::new(&p.x + dx, &p.y + dy))
    }

    /// Image under the integer linear map `(x, y) -> (m00 x + m01 y, m10 x + m11 y)`.
    pub fn linear_map(&self, m: [[i64; 2]; 2]) -> Drawing {
        let m = m.map(|r| r.map(Scalar::from));
        self.map(|p| Point::new(&m[0][0] * &p.x + &m[0][1] * &p.y, &m[1][0] * &p.x + &m[1][1] * &p.y))
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point> {
        self.points.iter()
    }
}

impl Index<usize> for Drawing {
    type Output = Point;

    fn index(&self, i: usize) -> &Point {
        &self.points[i]
    }
}

impl FromIterator<Point> for Drawing {
    fn from_iter<I: IntoIterator<Item = Point>>(iter: I) -> Self {
        Drawing::new(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Drawing {
    type Item = &'a Point;
    type IntoIter = std::slice::Iter<'a, Point>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

/// The size of a drawing: the maximum absolute value over all coordinates.
pub fn drawing_size(s: &Drawing) -> Result<Scalar> {
    s.points.iter().map(Point::size).max().ok_or(Error::Empty)
}
