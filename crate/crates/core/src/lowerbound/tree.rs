use crate::analysis::horton_violation;
use crate::drawing::Drawing;
use crate::error::{Error, Result};
use crate::exact::{Line, Point};

/// A vertex of the level tree: the points `p_j` with `j ≡ offset (mod stride)`.
///
/// A node of stride `s` in a tree over `2^k` points holds `2^k / s` points
/// and sits at level `k - log2(s)`. Its left child is `(offset, 2s)` (the
/// even half) and its right child is `(offset + s, 2s)` (the odd half).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeNode {
    pub offset: usize,
    pub stride: usize,
    pub level: u32,
}

impl TreeNode {
    pub fn len(&self) -> usize {
        1 << self.level
    }

    pub fn is_leaf(&self) -> bool {
        self.level == 0
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// The complete binary tree of even/odd halves of an isothetic Horton drawing.
#[derive(Clone, Debug)]
pub struct HortonTree {
    drawing: Drawing,
    k: u32,
}

/// Builds the tree of `s`; fails unless `s` is x-sorted and a Horton set.
pub fn build_tree(s: &Drawing) -> Result<HortonTree> {
    HortonTree::new(s.clone())
}

impl HortonTree {
    pub fn new(drawing: Drawing) -> Result<Self> {
        let k = drawing.log2_len().ok_or(Error::NotPowerOfTwo(drawing.len()))?;
        drawing.check_x_sorted()?;
        if let Some(v) = horton_violation(&drawing)? {
            return Err(Error::NotHorton(v.to_string()));
        }
        Ok(HortonTree { drawing, k })
    }

    pub fn drawing(&self) -> &Drawing {
        &self.drawing
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> usize {
        self.drawing.len()
    }

    pub fn point(&self, label: usize) -> &Point {
        &self.drawing[label]
    }

    pub fn root(&self) -> TreeNode {
        TreeNode { offset: 0, stride: 1, level: self.k }
    }

    /// The node with the given offset and stride, if it exists in this tree.
    pub fn node(&self, offset: usize, stride: usize) -> Result<TreeNode> {
        if !stride.is_power_of_two() || stride > self.n() || offset >= stride {
            return Err(Error::OutOfRange(format!("no node with offset {offset} and stride {stride}")));
        }
        Ok(TreeNode { offset, stride, level: self.k - stride.trailing_zeros() })
    }

    pub fn leaf(&self, label: usize) -> Result<TreeNode> {
        self.node(label, self.n())
    }

    pub fn children(&self, q: TreeNode) -> Option<(TreeNode, TreeNode)> {
        (q.level > 0).then(|| {
            let s = q.stride * 2;
            let level = q.level - 1;
            (
                TreeNode { offset: q.offset, stride: s, level },
                TreeNode { offset: q.offset + q.stride, stride: s, level },
            )
        })
    }

    pub fn parent(&self, q: TreeNode) -> Option<TreeNode> {
        (q.level < self.k).then(|| {
            let s = q.stride / 2;
            TreeNode { offset: q.offset % s, stride: s, level: q.level + 1 }
        })
    }

    /// True for the even-half child of its parent. The root is neither.
    pub fn is_left_child(&self, q: TreeNode) -> bool {
        q.level < self.k && q.offset < q.stride / 2
    }

    /// `S(Q)`: the right child of `Q` if `Q` is a left child, else its left child.
    pub fn s_node(&self, q: TreeNode) -> Result<TreeNode> {
        if q.level >= self.k {
            return Err(Error::OutOfRange("the root has no parent".into()));
        }
        let (l, r) = self.children(q).ok_or_else(|| Error::OutOfRange("a leaf has no children".into()))?;
        Ok(if self.is_left_child(q) { r } else { l })
    }

    /// Labels of the points in `q`, in increasing x order.
    pub fn labels(&self, q: TreeNode) -> Vec<usize> {
        (q.offset..self.n()).step_by(q.stride).collect()
    }

    /// Nodes of level `l` in left-to-right tree order.
    pub fn level_nodes(&self, l: u32) -> Vec<TreeNode> {
        let mut out = Vec::new();
        if l <= self.k {
            self.collect_level(self.root(), l, &mut out);
        }
        out
    }

    fn collect_level(&self, q: TreeNode, l: u32, out: &mut Vec<TreeNode>) {
        if q.level == l {
            out.push(q);
        } else if let Some((a, b)) = self.children(q) {
            self.collect_level(a, l, out);
            self.collect_level(b, l, out);
        }
    }

    /// Edge labels (0 = left, 1 = right) on the path from leaf `p_i` to the root.
    pub fn path_bits(&self, label: usize) -> Result<Vec<u8>> {
        let mut q = self.leaf(label)?;
        let mut bits = Vec::with_capacity(self.k as usize);
        while let Some(p) = self.parent(q) {
            bits.push(u8::from(!self.is_left_child(q)));
            q = p;
        }
        Ok(bits)
    }

    /// `(γ_D(Q), γ_U(Q))`: the lines through the leftmost and the rightmost
    /// level-1 descendants of `q`.
    pub fn gamma_lines(&self, q: TreeNode) -> Result<(Line, Line)> {
        if q.is_leaf() {
            return Err(Error::OutOfRange("a leaf has no bounding lines".into()));
        }
        let (n, o, s) = (self.n(), q.offset, q.stride);
        let down = Line::through(self.point(o), self.point(o + n / 2))?;
        let up = Line::through(self.point(o + n / 2 - s), self.point(o + n - s))?;
        Ok((down, up))
    }

    /// The line through the two points of a level-1 node.
    pub fn pair_line(&self, q: TreeNode) -> Result<Line> {
        if q.level != 1 {
            return Err(Error::OutOfRange(format!("node at level {} is not a pair", q.level)));
        }
        Line::through(self.point(q.offset), self.point(q.offset + q.stride))
    }
}
