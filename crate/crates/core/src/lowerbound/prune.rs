use crate::analysis::horton_violation;
use crate::drawing::Drawing;
use crate::error::{Error, Result};

use super::tree::HortonTree;

/// Which children of a level are deleted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl HortonTree {
    /// Labels that survive pruning level `l`, in increasing order.
    ///
    /// A level-`l` node `(o, s)` is a left child iff `o mod s < s/2`, so the
    /// survivors form alternating removed and kept runs of `2^{k-l-1}`
    /// consecutive labels starting at `p_0`.
    pub fn prune_labels(&self, l: u32, side: Side) -> Result<Vec<usize>> {
        let k = self.k();
        if l < 1 || l >= k {
            return Err(Error::OutOfRange(format!("pruning level {l} is outside 1..={}", k as i64 - 1)));
        }
        let stride = 1usize << (k - l);
        let half = stride / 2;
        Ok((0..self.n())
            .filter(|j| {
                let in_left_child = j % stride < half;
                match side {
                    Side::Left => !in_left_child,
                    Side::Right => in_left_child,
                }
            })
            .collect())
    }

    /// Deletes every left (or right) child at level `l` and checks that the
    /// remaining half is again a Horton drawing.
    pub fn prune_level(&self, l: u32, side: Side) -> Result<Drawing> {
        let kept = self.drawing().select(&self.prune_labels(l, side)?);
        if kept.len() * 2 != self.n() {
            return Err(Error::Invariant(format!("pruning kept {} of {} points", kept.len(), self.n())));
        }
        if let Some(v) = horton_violation(&kept)? {
            return Err(Error::Invariant(format!("pruned drawing is not a Horton set: {v}")));
        }
        Ok(kept)
    }
}

pub fn prune_level(s: &Drawing, l: u32, side: Side) -> Result<Drawing> {
    HortonTree::new(s.clone())?.prune_level(l, side)
}
