//! Width, girth and the girth growth inequalities.
//!
//! All distances are vertical and measured on one of the four slab lines:
//! `width_i(Q)` between `γ_D(Q)` and `γ_U(Q)`, and `girth_i(Q)` between
//! `γ_U(Q_L)` and `γ_D(Q_R)`.

use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::Rational;

use super::ser;
use super::slab::SlabConfig;
use super::tree::{HortonTree, TreeNode};

impl HortonTree {
    pub fn width_at(&self, q: TreeNode, i: usize, cfg: &SlabConfig) -> Result<Rational> {
        let x = cfg.line(i)?;
        let (down, up) = self.gamma_lines(q)?;
        Ok((up.meet_vertical(x)? - down.meet_vertical(x)?).abs())
    }

    pub fn girth_at(&self, q: TreeNode, i: usize, cfg: &SlabConfig) -> Result<Rational> {
        let x = cfg.line(i)?;
        if q.level < 2 {
            return Err(Error::OutOfRange(format!("girth needs more than two points, node has {}", q.len())));
        }
        let (left, right) = self.children(q).expect("level >= 2 has children");
        let (_, left_up) = self.gamma_lines(left)?;
        let (right_down, _) = self.gamma_lines(right)?;
        Ok((right_down.meet_vertical(x)? - left_up.meet_vertical(x)?).abs())
    }

    /// Evaluates both growth inequalities at `q` exactly.
    ///
    /// With `P = P(Q)`, `S = S(Q)`, `c = 2^{l-t-1}`:
    ///
    /// 1. `girth_1(P) >= d1^2 / ((d1 + d2) d2) * c * girth_4(Q) - width_1(S)`
    /// 2. `girth_4(P) >= d2^2 / ((d1 + d2) d1) * c * girth_1(Q) - width_4(S)`
    pub fn check_growth(&self, q: TreeNode, cfg: &SlabConfig) -> Result<GrowthCheck> {
        let (l, t, k) = (q.level, cfg.t, self.k());
        if !(t < l && l < k) {
            return Err(Error::OutOfRange(format!("level {l} is outside t < l < k with t = {t}, k = {k}")));
        }
        let parent = self.parent(q).expect("l < k");
        let sibling = self.s_node(q)?;
        let (d1, d2) = (&cfg.d1, &cfg.d2);
        let scale = Rational::from_integer(num_bigint::BigInt::from(1u8) << (l - t - 1) as usize);
        let sum = d1 + d2;
        let c1 = d1 * d1 / (&sum * d2) * &scale;
        let c2 = d2 * d2 / (&sum * d1) * &scale;
        let first_lhs = self.girth_at(parent, 1, cfg)?;
        let first_rhs = c1 * self.girth_at(q, 4, cfg)? - self.width_at(sibling, 1, cfg)?;
        let second_lhs = self.girth_at(parent, 4, cfg)?;
        let second_rhs = c2 * self.girth_at(q, 1, cfg)? - self.width_at(sibling, 4, cfg)?;
        Ok(GrowthCheck {
            node: q,
            first: first_lhs >= first_rhs,
            second: second_lhs >= second_rhs,
            first_lhs,
            first_rhs,
            second_lhs,
            second_rhs,
        })
    }

    /// Growth checks for every node at levels `t < l < k`, bottom level first.
    pub fn check_growth_all(&self, cfg: &SlabConfig) -> Result<Vec<GrowthCheck>> {
        (cfg.t + 1..self.k()).flat_map(|l| self.level_nodes(l)).map(|q| self.check_growth(q, cfg)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthCheck {
    #[serde(skip)]
    pub node: TreeNode,
    pub first: bool,
    pub second: bool,
    #[serde(serialize_with = "ser::rational")]
    pub first_lhs: Rational,
    #[serde(serialize_with = "ser::rational")]
    pub first_rhs: Rational,
    #[serde(serialize_with = "ser::rational")]
    pub second_lhs: Rational,
    #[serde(serialize_with = "ser::rational")]
    pub second_rhs: Rational,
}

impl GrowthCheck {
    pub fn holds(&self) -> bool {
        self.first && self.second
    }
}
