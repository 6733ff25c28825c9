use rayon::prelude::*;

use crate::drawing::Drawing;
use crate::error::{Error, Result};
use crate::exact::{orientation, Orientation};

/// Orientation of every triple `(i, j, k)`, `i < j < k`, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderTypeVector {
    n: usize,
    signs: Vec<Orientation>,
}

pub(crate) fn choose3(n: usize) -> usize {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

fn choose2(n: usize) -> usize {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

/// Lexicographic rank of the triple `i < j < k` among all triples of `n`.
pub fn triple_rank(n: usize, i: usize, j: usize, k: usize) -> usize {
    debug_assert!(i < j && j < k && k < n);
    choose3(n) - choose3(n - i) + choose2(n - i - 1) - choose2(n - j) + (k - j - 1)
}

impl OrderTypeVector {
    /// Orientations of all triples, collinear ones included.
    pub fn of_points(s: &Drawing) -> Self {
        let n = s.len();
        let pts = s.points();
        let signs = (0..n)
            .into_par_iter()
            .flat_map_iter(|i| {
                (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| orientation(&pts[i], &pts[j], &pts[k])))
            })
            .collect();
        OrderTypeVector { n, signs }
    }

    pub fn from_signs(n: usize, signs: Vec<Orientation>) -> Result<Self> {
        if signs.len() != choose3(n) {
            return Err(Error::SizeMismatch(signs.len(), choose3(n)));
        }
        Ok(OrderTypeVector { n, signs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn signs(&self) -> &[Orientation] {
        &self.signs
    }

    /// Orientation of `(p_i, p_j, p_k)` for any three distinct labels.
    pub fn get(&self, i: usize, j: usize, k: usize) -> Orientation {
        // Sorting the labels is a permutation; odd permutations flip the sign.
        let (mut a, mut b, mut c) = (i, j, k);
        let mut flips = 0;
        if a > b {
            std::mem::swap(&mut a, &mut b);
            flips += 1;
        }
        if b > c {
            std::mem::swap(&mut b, &mut c);
            flips += 1;
        }
        if a > b {
            std::mem::swap(&mut a, &mut b);
            flips += 1;
        }
        let o = self.signs[triple_rank(self.n, a, b, c)];
        if flips % 2 == 1 {
            o.reversed()
        } else {
            o
        }
    }

    /// Iterates `((i, j, k), orientation)` in lexicographic order.
    pub fn triples(&self) -> impl Iterator<Item = ((usize, usize, usize), Orientation)> + '_ {
        let n = self.n;
        (0..n)
            .flat_map(move |i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k))))
            .zip(self.signs.iter().copied())
    }

    pub fn first_collinear(&self) -> Option<(usize, usize, usize)> {
        self.triples().find(|(_, o)| o.is_collinear()).map(|(t, _)| t)
    }
}

/// Order type of a drawing in general position with at least three points.
pub fn order_type(s: &Drawing) -> Result<OrderTypeVector> {
    if s.len() < 3 {
        return Err(Error::TooSmall { what: "number of points", min: 3, got: s.len() as u64 });
    }
    let ot = OrderTypeVector::of_points(s);
    if let Some((i, j, k)) = ot.first_collinear() {
        return Err(Error::Collinear(i, j, k));
    }
    Ok(ot)
}

/// First triple (lexicographically) whose orientation differs between `a` and `b`.
pub fn first_orientation_difference(a: &Drawing, b: &Drawing) -> Result<Option<(usize, usize, usize)>> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch(a.len(), b.len()));
    }
    let n = a.len();
    let (pa, pb) = (a.points(), b.points());
    Ok((0..n).into_par_iter().find_map_first(|i| {
        for j in i + 1..n {
            for k in j + 1..n {
                if orientation(&pa[i], &pa[j], &pa[k]) != orientation(&pb[i], &pb[j], &pb[k]) {
                    return Some((i, j, k));
                }
            }
        }
        None
    }))
}

/// Whether the identity labeling preserves every orientation.
pub fn same_labeled_order_type(a: &Drawing, b: &Drawing) -> Result<bool> {
    Ok(first_orientation_difference(a, b)?.is_none())
}

/// Whether `s` realizes the labeled order type `target`.
pub fn realizes(s: &Drawing, target: &OrderTypeVector) -> bool {
    s.len() == target.n() && OrderTypeVector::of_points(s).signs == target.signs
}
