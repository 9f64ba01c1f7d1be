//! `r`-independence trees.
//!
//! Vertices are inserted in sequence by walking down from the root: at a
//! node `a` the walk turns right when some vertex `r`-dominates both `a` and
//! the new vertex, left otherwise, and the new vertex becomes the missing
//! child where the walk falls off.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, Serialize)]
pub struct TreeNode {
    pub vertex: usize,
    pub left: Option<usize>,
    pub right: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IndependenceTree {
    /// Node `0` is the root; nodes appear in insertion order.
    pub nodes: Vec<TreeNode>,
}

/// Whether some vertex reaches both `a` and `b` within `r` steps.
fn share_dominator(in_balls: &[VertexSet], a: usize, b: usize) -> bool {
    in_balls[a].intersects(&in_balls[b])
}

pub fn independence_tree(g: &Digraph, seq: &[usize], r: usize) -> Result<IndependenceTree> {
    if let Some(&v) = seq.iter().find(|&&v| v >= g.n()) {
        return Err(Error::arg(format!("vertex {v} out of range")));
    }
    let balls = g.in_balls(r);
    Ok(build(&balls, seq))
}

pub(crate) fn build(in_balls: &[VertexSet], seq: &[usize]) -> IndependenceTree {
    let mut nodes: Vec<TreeNode> = Vec::with_capacity(seq.len());
    for &v in seq {
        let id = nodes.len();
        nodes.push(TreeNode { vertex: v, left: None, right: None });
        if id == 0 {
            continue;
        }
        let mut at = 0;
        loop {
            let right = share_dominator(in_balls, nodes[at].vertex, v);
            let slot = if right { &mut nodes[at].right } else { &mut nodes[at].left };
            match *slot {
                Some(next) => at = next,
                None => {
                    *slot = Some(id);
                    break;
                }
            }
        }
    }
    IndependenceTree { nodes }
}

impl IndependenceTree {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Every root-leaf path as node indices.
    pub fn root_leaf_paths(&self) -> Vec<Vec<usize>> {
        let mut paths = Vec::new();
        if self.nodes.is_empty() {
            return paths;
        }
        let mut stack = vec![vec![0usize]];
        while let Some(path) = stack.pop() {
            let last = *path.last().expect("paths are nonempty");
            let kids: Vec<usize> = [self.nodes[last].left, self.nodes[last].right].into_iter().flatten().collect();
            if kids.is_empty() {
                paths.push(path);
                continue;
            }
            for k in kids {
                let mut p = path.clone();
                p.push(k);
                stack.push(p);
            }
        }
        paths
    }

    /// Number of levels; a single node has height 1.
    pub fn height(&self) -> usize {
        self.root_leaf_paths().iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Nodes of a path where it continues to the given side, plus its last
    /// node.
    fn chain(&self, path: &[usize], right: bool) -> Vec<usize> {
        let mut out = Vec::new();
        for w in path.windows(2) {
            let side = if right { self.nodes[w[0]].right } else { self.nodes[w[0]].left };
            if side == Some(w[1]) {
                out.push(w[0]);
            }
        }
        if let Some(&last) = path.last() {
            out.push(last);
        }
        out
    }

    /// Longest sequence along a root-leaf path in which every node is a
    /// right descendant of all earlier ones.
    pub fn max_right_chain(&self) -> usize {
        self.root_leaf_paths().iter().map(|p| self.chain(p, true).len()).max().unwrap_or(0)
    }

    /// Checks the node-count law `|T| <= h^(t+1)` where `h` is the height
    /// and `t` exceeds the longest right chain by one.
    pub fn check_size_law(&self) -> std::result::Result<(), String> {
        let h = self.height() as u128;
        let t = self.max_right_chain() as u32 + 1;
        let bound = h.checked_pow(t + 1).unwrap_or(u128::MAX);
        if self.len() as u128 > bound {
            return Err(format!("tree has {} nodes, above {h}^{}", self.len(), t + 1));
        }
        Ok(())
    }
}

/// The longest left chain as vertices: along some root-leaf path, the nodes
/// where the path turns left, followed by the leaf.
pub fn max_left_chain(tree: &IndependenceTree) -> Vec<usize> {
    tree.root_leaf_paths()
        .iter()
        .map(|p| tree.chain(p, false))
        .max_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.cmp(a)))
        .map(|c| c.into_iter().map(|i| tree.nodes[i].vertex).collect())
        .unwrap_or_default()
}

/// No vertex `r`-dominates two members of `w`.
pub fn is_scattered(g: &Digraph, w: &[usize], r: usize) -> bool {
    let Ok(balls) = w.iter().map(|&v| g.in_ball(v, r)).collect::<Result<Vec<VertexSet>>>() else {
        return false;
    };
    (0..w.len()).all(|i| (i + 1..w.len()).all(|j| w[i] != w[j] && !balls[i].intersects(&balls[j])))
}
