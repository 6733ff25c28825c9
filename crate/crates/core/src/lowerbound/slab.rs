//! The slab `R` and the four vertical lines used to measure girth and width.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::drawing::Drawing;
use crate::error::{Error, Result};
use crate::exact::{Rational, Scalar};

use super::ser;
use super::tree::HortonTree;

/// x-bounds of the closed slab through `p_{n/4}` and `p_{3n/4-1}`.
pub fn slab_r(s: &Drawing) -> Result<(Rational, Rational)> {
    let n = s.len();
    if n < 4 {
        return Err(Error::TooSmall { what: "number of points", min: 4, got: n as u64 });
    }
    s.check_x_sorted()?;
    Ok((Rational::from_integer(s[n / 4].x.clone()), Rational::from_integer(s[3 * n / 4 - 1].x.clone())))
}

/// Checks that the lines of the level-1 pairs do not cross inside the open
/// slab `R`, and that their bottom-up order at the middle of `R` is their
/// left-to-right order in the tree.
pub fn first_level_noncrossing(s: &Drawing) -> Result<bool> {
    let tree = HortonTree::new(s.clone())?;
    noncrossing(&tree)
}

pub fn noncrossing(tree: &HortonTree) -> Result<bool> {
    if tree.n() < 4 {
        return Ok(true);
    }
    let (lo, hi) = slab_r(tree.drawing())?;
    let lines = tree.level_nodes(1).into_iter().map(|q| tree.pair_line(q)).collect::<Result<Vec<_>>>()?;
    for (i, a) in lines.iter().enumerate() {
        for b in &lines[i + 1..] {
            if let Some(x) = a.intersection_x(b) {
                if lo < x && x < hi {
                    return Ok(false);
                }
            }
        }
    }
    let mid = (&lo + &hi) / Rational::from_integer(2.into());
    let heights = lines.iter().map(|l| l.meet_vertical(&mid)).collect::<Result<Vec<_>>>()?;
    Ok(heights.windows(2).all(|w| w[0] < w[1]))
}

/// Four vertical lines `l1 < l2 <= l3 < l4` with exactly `2^{k-t}` points
/// strictly between `l1, l2` and between `l3, l4`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SlabConfig {
    pub t: u32,
    #[serde(serialize_with = "ser::rationals")]
    pub lines: [Rational; 4],
    #[serde(serialize_with = "ser::rational")]
    pub d1: Rational,
    #[serde(serialize_with = "ser::rational")]
    pub d2: Rational,
    #[serde(serialize_with = "ser::rational")]
    pub span: Rational,
    /// Whether all four lines lie in the interior of `R`. Only `t = 2` gives
    /// up this property; see [`choose_slab_lines_for_xs`].
    pub inside_slab: bool,
}

impl SlabConfig {
    /// `l_i` for `i` in `1..=4`.
    pub fn line(&self, i: usize) -> Result<&Rational> {
        match i {
            1..=4 => Ok(&self.lines[i - 1]),
            _ => Err(Error::OutOfRange(format!("line index {i} is not in 1..=4"))),
        }
    }
}

/// A lower bound on the size of the drawing, valid under the stated reason.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SizeCertificate {
    #[serde(serialize_with = "ser::scalar")]
    pub bound: Scalar,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
#[allow(clippy::large_enum_variant)]
pub enum SlabChoice {
    Lines(SlabConfig),
    Certificate(SizeCertificate),
}

/// `ceil(2 log2 k)`, the smallest `t` with `2^t >= k^2`.
pub fn default_t(k: u32) -> u32 {
    let sq = u64::from(k) * u64::from(k);
    (0..64).find(|&t| 1u64 << t >= sq).unwrap_or(64)
}

pub fn choose_slab_lines(s: &Drawing, t: u32) -> Result<SlabChoice> {
    let tree = HortonTree::new(s.clone())?;
    choose_for_tree(&tree, t)
}

pub(crate) fn choose_for_tree(tree: &HortonTree, t: u32) -> Result<SlabChoice> {
    let xs: Vec<Scalar> = tree.drawing().iter().map(|p| p.x.clone()).collect();
    choose_slab_lines_for_xs(&xs, t)
}

/// Slab-line selection from the sorted x-coordinates alone.
///
/// Lines `φ_1, ..., φ_{2^{t-1}}` go at the midpoints of the gaps that follow
/// `p_{n/4}, p_{n/4 + w}, ...` with `w = 2^{k-t}`, so consecutive lines have
/// exactly `w` points between them and all lie inside `R`. Among pairs of
/// the resulting gaps whose widths are within a factor of two, the pair
/// minimizing the larger ratio is used, leftmost first.
///
/// For `t = 2` only one such gap fits inside `R`. The lines are then put at
/// the midpoints just left of `p_{n/4}`, just left of `p_{n/2}` and just
/// right of `p_{3n/4-1}`, splitting the points of `R` into two windows of
/// `n/4`; `inside_slab` is false.
///
/// When no pair qualifies and `t = ceil(2 log2 k)` with `k >= 16`, the
/// smallest gap spans `2^{k-t}` integer x-coordinates and the gaps at least
/// double, which forces size at least `n^{log(n)/2}`; that bound is returned
/// as a certificate. Other `t` or `k` give an error.
pub fn choose_slab_lines_for_xs(xs: &[Scalar], t: u32) -> Result<SlabChoice> {
    let n = xs.len();
    if !n.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(n));
    }
    let k = n.trailing_zeros();
    if t < 2 || t + 2 > k {
        return Err(Error::OutOfRange(format!("t = {t} must satisfy 2 <= t <= k - 2 = {}", k as i64 - 2)));
    }
    if let Some(i) = xs.windows(2).position(|w| w[0] >= w[1]) {
        return Err(if xs[i] == xs[i + 1] {
            Error::DuplicateX(i, i + 1)
        } else {
            Error::OutOfRange("x-coordinates are not sorted".into())
        });
    }
    let w = 1usize << (k - t);
    let quarter = n / 4;
    let mid_after = |g: usize| Rational::new(&xs[g] + &xs[g + 1], BigInt::from(2));
    let (phis, inside_slab): (Vec<Rational>, bool) = if t == 2 {
        (vec![mid_after(quarter - 1), mid_after(quarter - 1 + w), mid_after(quarter - 1 + 2 * w)], false)
    } else {
        ((0..1usize << (t - 1)).map(|i| mid_after(quarter + i * w)).collect(), true)
    };
    let gaps: Vec<Rational> = phis.windows(2).map(|p| &p[1] - &p[0]).collect();
    let two = Rational::from_integer(2.into());
    let mut best: Option<(Rational, usize, usize)> = None;
    for i in 0..gaps.len() {
        for j in i + 1..gaps.len() {
            let ratio = if gaps[i] > gaps[j] { &gaps[i] / &gaps[j] } else { &gaps[j] / &gaps[i] };
            if ratio <= two && best.as_ref().is_none_or(|(r, _, _)| ratio < *r) {
                best = Some((ratio, i, j));
            }
        }
    }
    if let Some((_, i, j)) = best {
        let lines = [phis[i].clone(), phis[i + 1].clone(), phis[j].clone(), phis[j + 1].clone()];
        return Ok(SlabChoice::Lines(SlabConfig {
            t,
            d1: gaps[i].clone(),
            d2: gaps[j].clone(),
            span: &lines[3] - &lines[0],
            lines,
            inside_slab,
        }));
    }
    if t == default_t(k) && k >= 16 {
        let full = Scalar::one() << ((k as usize) * (k as usize));
        let root = full.sqrt();
        let bound = if &root * &root == full { root } else { root + 1 };
        return Ok(SlabChoice::Certificate(SizeCertificate {
            bound,
            reason: format!(
                "no two of the {} slab gaps are within a factor of two, so the widest gap is at least 2^(k-t-1) * 2^(2^(t-1)-2) with k = {k}, t = {t}",
                gaps.len()
            ),
        }));
    }
    Err(Error::Degenerate(format!(
        "no two of the {} slab gaps are within a factor of two and t = {t}, k = {k} do not admit a size certificate",
        gaps.len()
    )))
}
