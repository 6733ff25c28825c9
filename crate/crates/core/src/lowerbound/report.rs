use rayon::prelude::*;
use serde::Serialize;

use crate::drawing::Drawing;
use crate::error::Result;
use crate::exact::{Rational, Scalar};

use super::measure::GrowthCheck;
use super::ser;
use super::slab::{choose_for_tree, noncrossing, SlabChoice, SlabConfig};
use super::tree::{HortonTree, TreeNode};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Range {
    #[serde(serialize_with = "ser::rational")]
    pub min: Rational,
    #[serde(serialize_with = "ser::rational")]
    pub max: Rational,
}

impl Range {
    fn of(values: impl IntoIterator<Item = Rational>) -> Option<Range> {
        values.into_iter().fold(None, |acc, v| match acc {
            None => Some(Range { min: v.clone(), max: v }),
            Some(Range { min, max }) => Some(Range { min: min.min(v.clone()), max: max.max(v) }),
        })
    }
}

/// Width ranges for levels `>= 1` and girth ranges for levels `>= 2`, on `l1` and `l4`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelStats {
    pub level: u32,
    pub nodes: usize,
    pub width_1: Range,
    pub width_4: Range,
    pub girth_1: Option<Range>,
    pub girth_4: Option<Range>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LowerBoundReport {
    pub n: usize,
    pub k: u32,
    pub t: u32,
    pub noncrossing: bool,
    pub slab: SlabChoice,
    pub levels: Vec<LevelStats>,
    pub growth_checked: usize,
    pub growth_failed: usize,
    pub all_growth_held: bool,
    #[serde(serialize_with = "ser::scalar")]
    pub size: Scalar,
    /// `log2` of `n^{log2(n)/8}`, the size bound for isothetic drawings.
    pub log2_isothetic_bound: f64,
    /// `log2` of `n^{log2(n/2)/24}`, the shape of the bound for all drawings
    /// (without its constant).
    pub log2_general_bound: f64,
}

impl LowerBoundReport {
    pub fn passed(&self) -> bool {
        self.noncrossing && self.all_growth_held
    }
}

fn level_stats(tree: &HortonTree, cfg: &SlabConfig, l: u32) -> Result<LevelStats> {
    let nodes = tree.level_nodes(l);
    let collect = |f: &dyn Fn(TreeNode) -> Result<Rational>| -> Result<Option<Range>> {
        Ok(Range::of(nodes.iter().map(|&q| f(q)).collect::<Result<Vec<_>>>()?))
    };
    let girth = |i| collect(&|q| tree.girth_at(q, i, cfg));
    let width = |i| collect(&|q| tree.width_at(q, i, cfg)).map(|r| r.expect("levels are nonempty"));
    Ok(LevelStats {
        level: l,
        nodes: nodes.len(),
        width_1: width(1)?,
        width_4: width(4)?,
        girth_1: if l >= 2 { girth(1)? } else { None },
        girth_4: if l >= 2 { girth(4)? } else { None },
    })
}

/// Runs the whole lower-bound apparatus on an isothetic drawing.
///
/// A size certificate from slab selection replaces the per-level statistics
/// and growth checks, which need slab lines.
pub fn lower_bound_report(s: &Drawing, t: u32) -> Result<LowerBoundReport> {
    let tree = HortonTree::new(s.clone())?;
    let k = tree.k();
    let slab = choose_for_tree(&tree, t)?;
    let (levels, checks) = match &slab {
        SlabChoice::Lines(cfg) => {
            let levels = (1..=k).map(|l| level_stats(&tree, cfg, l)).collect::<Result<Vec<_>>>()?;
            let nodes: Vec<TreeNode> = (t + 1..k).flat_map(|l| tree.level_nodes(l)).collect();
            let checks = nodes.par_iter().map(|&q| tree.check_growth(q, cfg)).collect::<Result<Vec<GrowthCheck>>>()?;
            (levels, checks)
        }
        SlabChoice::Certificate(_) => (Vec::new(), Vec::new()),
    };
    let failed = checks.iter().filter(|c| !c.holds()).count();
    let kf = f64::from(k);
    Ok(LowerBoundReport {
        n: tree.n(),
        k,
        t,
        noncrossing: noncrossing(&tree)?,
        slab,
        levels,
        growth_checked: checks.len(),
        growth_failed: failed,
        all_growth_held: failed == 0,
        size: s.size()?,
        log2_isothetic_bound: kf * kf / 8.0,
        log2_general_bound: kf * (kf - 1.0) / 24.0,
    })
}
