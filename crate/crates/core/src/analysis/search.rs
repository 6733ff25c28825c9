//! Exhaustive search for a smallest drawing of a labeled order type.

use crate::drawing::Drawing;
use crate::error::Result;
use crate::exact::{Orientation, Point};
use crate::limits::Limits;

use super::order_type::OrderTypeVector;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    /// First realization found on the smallest grid that admits one.
    pub drawing: Option<Drawing>,
    /// Number of realizations on that smallest grid.
    pub solutions: u64,
    /// Complete labelings examined over all grids tried.
    pub labelings: u64,
}

/// Smallest-size drawing of `target` on the grid `[-radius, radius]^2`.
pub fn min_drawing_search(target: &OrderTypeVector, radius: u32) -> Result<Option<Drawing>> {
    Ok(min_drawing_search_with(target, radius, &Limits::default())?.drawing)
}

/// Tries grids of radius `0, 1, ..., radius` in turn; each grid is searched
/// exhaustively over ordered labelings, with a branch cut as soon as a
/// completed triple disagrees with the target.
pub fn min_drawing_search_with(target: &OrderTypeVector, radius: u32, limits: &Limits) -> Result<SearchOutcome> {
    let n = target.n();
    limits.check_search(n, radius)?;
    let mut labelings = 0;
    for r in 0..=radius as i64 {
        let grid: Vec<(i64, i64)> = (-r..=r).flat_map(|x| (-r..=r).map(move |y| (x, y))).collect();
        let mut st = State {
            target,
            grid: &grid,
            chosen: Vec::with_capacity(n),
            used: vec![false; grid.len()],
            first: None,
            solutions: 0,
            labelings: 0,
        };
        st.extend();
        labelings += st.labelings;
        if let Some(first) = st.first {
            let drawing = first.iter().map(|&g| Point::new(grid[g].0, grid[g].1)).collect();
            return Ok(SearchOutcome { drawing: Some(drawing), solutions: st.solutions, labelings });
        }
    }
    Ok(SearchOutcome { drawing: None, solutions: 0, labelings })
}

struct State<'a> {
    target: &'a OrderTypeVector,
    grid: &'a [(i64, i64)],
    chosen: Vec<usize>,
    used: Vec<bool>,
    first: Option<Vec<usize>>,
    solutions: u64,
    labelings: u64,
}

// Grid coordinates are tiny, so i64 arithmetic is exact here.
fn orient(p: (i64, i64), q: (i64, i64), r: (i64, i64)) -> Orientation {
    let det = (q.0 - p.0) * (r.1 - p.1) - (q.1 - p.1) * (r.0 - p.0);
    Orientation::from_sign(-det.signum() as i8)
}

impl State<'_> {
    fn extend(&mut self) {
        let k = self.chosen.len();
        if k == self.target.n() {
            self.labelings += 1;
            self.solutions += 1;
            if self.first.is_none() {
                self.first = Some(self.chosen.clone());
            }
            return;
        }
        for g in 0..self.grid.len() {
            if self.used[g] {
                continue;
            }
            let ok = (0..k).all(|i| {
                (i + 1..k).all(|j| {
                    orient(self.grid[self.chosen[i]], self.grid[self.chosen[j]], self.grid[g])
                        == self.target.get(i, j, k)
                })
            });
            if !ok {
                // Count the pruned subtree's labelings as examined.
                self.labelings += falling(self.grid.len() - k - 1, self.target.n() - k - 1);
                continue;
            }
            self.used[g] = true;
            self.chosen.push(g);
            self.extend();
            self.chosen.pop();
            self.used[g] = false;
        }
    }
}

fn falling(from: usize, count: usize) -> u64 {
    (0..count).map(|i| from.saturating_sub(i) as u64).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::order_type::{order_type, realizes};
    use crate::construct::small_horton;

    #[test]
    fn triangle_fits_in_unit_grid() {
        let target = order_type(&Drawing::from_coords([(0, 0), (1, 0), (0, 1)])).unwrap();
        let d = min_drawing_search(&target, 1).unwrap().unwrap();
        assert_eq!(d.size().unwrap(), 1.into());
        assert!(realizes(&d, &target));
    }

    #[test]
    fn radius_zero_is_too_small() {
        let target = order_type(&small_horton(2).unwrap()).unwrap();
        assert_eq!(min_drawing_search(&target, 0).unwrap(), None);
    }

    #[test]
    fn labelings_bounded_by_grid_permutations() {
        let target = order_type(&small_horton(2).unwrap()).unwrap();
        let out = min_drawing_search_with(&target, 1, &Limits::default()).unwrap();
        assert!(out.labelings <= 9 * 8 * 7 * 6);
    }

    #[test]
    fn caps() {
        let target = order_type(&small_horton(2).unwrap()).unwrap();
        assert!(min_drawing_search(&target, 4).unwrap_err().is_limit());
        let big = order_type(&small_horton(3).unwrap()).unwrap();
        assert!(min_drawing_search(&big, 1).unwrap_err().is_limit());
    }
}
