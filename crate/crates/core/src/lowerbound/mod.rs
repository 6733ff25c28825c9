//! The level tree of an isothetic Horton drawing and the quantities used to
//! bound its size from below: the slab `R` and its four vertical lines,
//! width and girth of tree nodes, the girth growth inequalities, level
//! pruning, and the change of basis that turns a drawing with the Horton
//! order type into an isothetic one.
//!
//! Everything is exact. Line positions, widths and girths are rationals.

mod measure;
mod prune;
mod report;
mod ser;
mod slab;
mod transform;
mod tree;

pub use measure::GrowthCheck;
pub use prune::{prune_level, Side};
pub use report::{lower_bound_report, LevelStats, LowerBoundReport, Range};
pub use slab::{
    choose_slab_lines, choose_slab_lines_for_xs, default_t, first_level_noncrossing, noncrossing, slab_r,
    SizeCertificate, SlabChoice, SlabConfig,
};
pub use transform::{isotheticize, IsotheticImage};
pub use tree::{build_tree, HortonTree, TreeNode};

use crate::drawing::Drawing;
use crate::error::Result;
use crate::exact::Rational;

pub fn width_at(s: &Drawing, q: TreeNode, i: usize, cfg: &SlabConfig) -> Result<Rational> {
    HortonTree::new(s.clone())?.width_at(q, i, cfg)
}

pub fn girth_at(s: &Drawing, q: TreeNode, i: usize, cfg: &SlabConfig) -> Result<Rational> {
    HortonTree::new(s.clone())?.girth_at(q, i, cfg)
}

/// Both growth inequalities at `q`; true iff both hold.
pub fn check_growth_inequality(s: &Drawing, q: TreeNode, cfg: &SlabConfig) -> Result<bool> {
    Ok(HortonTree::new(s.clone())?.check_growth(q, cfg)?.holds())
}
