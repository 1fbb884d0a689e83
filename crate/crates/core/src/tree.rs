//! Plane trees and degree trees.
//!
//! Nodes are always stored in preorder with the root at index 0, so two
//! trees are equal exactly when their derived `PartialEq` says so.
//!
//! A degree tree stores the edge labeling (one label per non-root node, for
//! the edge to its parent). The node labeling is derived:
//! `ℓ(leaf) = 0` and `ℓ(v) = k - a + Σ ℓ(children)` where `a` is the label of
//! the leftmost descending edge.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: &'static str },
    #[error("children lists do not describe a tree in preorder")]
    NotPreorder,
    #[error("node labeling length {got} does not match node count {expected}")]
    LabelCount { got: usize, expected: usize },
    #[error("edge to node {node} is not a leftmost edge but carries label {label}")]
    NonLeftmostLabel { node: usize, label: usize },
    #[error("leftmost edge to node {node} has label {label} exceeding the child's node label {max}")]
    LabelTooLarge { node: usize, label: usize, max: i64 },
    #[error("leaf {node} has node label {label} (must be 0)")]
    LeafLabel { node: usize, label: i64 },
    #[error("node labeling at node {node} needs leftmost-edge label {a}, outside 0..={max}")]
    InconsistentNodeLabel { node: usize, a: i64, max: i64 },
}

/// An ordered rooted tree, nodes numbered in preorder.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlaneTree {
    children: Vec<Vec<usize>>,
    parent: Vec<Option<usize>>,
}

impl PlaneTree {
    pub fn single_node() -> Self {
        Self {
            children: vec![Vec::new()],
            parent: vec![None],
        }
    }

    /// Builds a tree from children lists already numbered in preorder.
    pub fn from_preorder_children(children: Vec<Vec<usize>>) -> Result<Self, TreeError> {
        let (tree, map) = Self::from_children(0, &children)?;
        if map.iter().enumerate().any(|(i, &j)| i != j) {
            return Err(TreeError::NotPreorder);
        }
        Ok(tree)
    }

    /// Builds a tree from arbitrary node ids, renumbering into preorder.
    /// Returns the tree and the map old id -> preorder index.
    pub fn from_children(
        root: usize,
        children: &[Vec<usize>],
    ) -> Result<(Self, Vec<usize>), TreeError> {
        let total = children.len();
        let mut order = vec![usize::MAX; total];
        let mut new_children = Vec::with_capacity(total);
        let mut parent = Vec::with_capacity(total);
        let mut stack = vec![(root, None::<usize>)];
        while let Some((v, par)) = stack.pop() {
            if v >= total || order[v] != usize::MAX {
                return Err(TreeError::NotPreorder);
            }
            let idx = new_children.len();
            order[v] = idx;
            new_children.push(Vec::new());
            parent.push(par);
            if let Some(p) = par {
                new_children[p].push(idx);
            }
            for &c in children[v].iter().rev() {
                stack.push((c, Some(idx)));
            }
        }
        if new_children.len() != total {
            return Err(TreeError::NotPreorder);
        }
        Ok((
            Self {
                children: new_children,
                parent,
            },
            order,
        ))
    }

    pub fn root(&self) -> usize {
        0
    }

    pub fn node_count(&self) -> usize {
        self.children.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.children.len() - 1
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.children[v].is_empty()
    }

    pub fn leftmost_child(&self, v: usize) -> Option<usize> {
        self.children[v].first().copied()
    }

    pub fn is_leftmost_child(&self, v: usize) -> bool {
        self.parent[v].is_some_and(|p| self.children[p][0] == v)
    }

    pub fn preorder(&self) -> Vec<usize> {
        (0..self.node_count()).collect()
    }

    pub fn reverse_preorder(&self) -> Vec<usize> {
        (0..self.node_count()).rev().collect()
    }

    pub fn postorder(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.node_count());
        let mut stack = vec![(self.root(), false)];
        while let Some((v, expanded)) = stack.pop() {
            if expanded {
                out.push(v);
            } else {
                stack.push((v, true));
                for &c in self.children[v].iter().rev() {
                    stack.push((c, false));
                }
            }
        }
        out
    }

    /// Number of proper descendants of every node.
    pub fn subtree_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.node_count()];
        for v in self.reverse_preorder() {
            sizes[v] = self.children[v].iter().map(|&c| sizes[c] + 1).sum();
        }
        sizes
    }

    /// Number of proper descendants of `v` (edge count of its subtree).
    pub fn subtree_size(&self, v: usize) -> usize {
        self.subtree_sizes()[v]
    }

    /// Preorder index one past the last node of the subtree of `v`.
    pub fn subtree_end(&self, v: usize) -> usize {
        v + self.subtree_size(v) + 1
    }

    /// Depth of every node (root has depth 0).
    pub fn depths(&self) -> Vec<usize> {
        let mut depth = vec![0; self.node_count()];
        for v in 1..self.node_count() {
            depth[v] = depth[self.parent[v].expect("non-root")] + 1;
        }
        depth
    }
}

/// Counts of leaf, zero and positive nodes, and the root label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TreeStats {
    pub lnode: usize,
    pub znode: usize,
    pub pnode: usize,
    pub rlabel: usize,
}

impl fmt::Display for TreeStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "lnode={} znode={} pnode={} rlabel={}",
            self.lnode, self.znode, self.pnode, self.rlabel
        )
    }
}

/// A plane tree with an edge labeling. Construction is permissive; use
/// [`DegreeTree::validate`] to check the degree-tree conditions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeTree {
    tree: PlaneTree,
    /// `labels[v]` is the label of the edge from `v` to its parent; the root
    /// entry is unused and kept at 0.
    labels: Vec<usize>,
}

impl DegreeTree {
    pub fn single_node() -> Self {
        Self {
            tree: PlaneTree::single_node(),
            labels: vec![0],
        }
    }

    pub fn new(tree: PlaneTree, mut labels: Vec<usize>) -> Result<Self, TreeError> {
        if labels.len() != tree.node_count() {
            return Err(TreeError::LabelCount {
                got: labels.len(),
                expected: tree.node_count(),
            });
        }
        labels[0] = 0;
        Ok(Self { tree, labels })
    }

    /// Same shape, every edge labeled 0.
    pub fn zero_labeled(tree: PlaneTree) -> Self {
        let labels = vec![0; tree.node_count()];
        Self { tree, labels }
    }

    pub fn tree(&self) -> &PlaneTree {
        &self.tree
    }

    pub fn size(&self) -> usize {
        self.tree.size()
    }

    /// Label of the edge from `v` to its parent (0 for the root).
    pub fn edge_label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn edge_labels(&self) -> &[usize] {
        &self.labels
    }

    /// Label of the leftmost descending edge of `v`, if `v` is internal.
    pub fn leftmost_label(&self, v: usize) -> Option<usize> {
        self.tree.leftmost_child(v).map(|c| self.labels[c])
    }

    /// The derived node labeling. Signed because an invalid edge labeling
    /// can drive it negative.
    pub fn node_labels(&self) -> Vec<i64> {
        let mut ell = vec![0i64; self.tree.node_count()];
        for v in self.tree.reverse_preorder() {
            let kids = self.tree.children(v);
            if let Some(&first) = kids.first() {
                ell[v] = kids.len() as i64 - self.labels[first] as i64
                    + kids.iter().map(|&c| ell[c]).sum::<i64>();
            }
        }
        ell
    }

    pub fn validate(&self) -> Result<(), TreeError> {
        let ell = self.node_labels();
        for (v, &label) in self.labels.iter().enumerate().skip(1) {
            if !self.tree.is_leftmost_child(v) {
                if label != 0 {
                    return Err(TreeError::NonLeftmostLabel { node: v, label });
                }
            } else if label as i64 > ell[v] {
                return Err(TreeError::LabelTooLarge {
                    node: v,
                    label,
                    max: ell[v],
                });
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// Recovers the edge labeling from a node labeling.
    pub fn from_node_labels(tree: PlaneTree, ell: &[i64]) -> Result<Self, TreeError> {
        if ell.len() != tree.node_count() {
            return Err(TreeError::LabelCount {
                got: ell.len(),
                expected: tree.node_count(),
            });
        }
        let mut labels = vec![0usize; tree.node_count()];
        for v in 0..tree.node_count() {
            let kids = tree.children(v);
            match kids.first() {
                None => {
                    if ell[v] != 0 {
                        return Err(TreeError::LeafLabel {
                            node: v,
                            label: ell[v],
                        });
                    }
                }
                Some(&first) => {
                    let a = kids.len() as i64 + kids.iter().map(|&c| ell[c]).sum::<i64>() - ell[v];
                    if a < 0 || a > ell[first] {
                        return Err(TreeError::InconsistentNodeLabel {
                            node: v,
                            a,
                            max: ell[first],
                        });
                    }
                    labels[first] = a as usize;
                }
            }
        }
        Ok(Self { tree, labels })
    }

    pub fn stats(&self) -> TreeStats {
        let mut stats = TreeStats {
            lnode: 0,
            znode: 0,
            pnode: 0,
            rlabel: self.node_labels()[0].max(0) as usize,
        };
        for v in 0..self.tree.node_count() {
            match self.leftmost_label(v) {
                None => stats.lnode += 1,
                Some(0) => stats.znode += 1,
                Some(_) => stats.pnode += 1,
            }
        }
        stats
    }

    /// Graphviz rendering, children left to right, edges carrying labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph tree {\n  ordering=out;\n  node [shape=circle, width=0.3];\n");
        let ell = self.node_labels();
        for (v, l) in ell.iter().enumerate() {
            out.push_str(&format!("  n{v} [label=\"{l}\"];\n"));
        }
        for v in 1..self.tree.node_count() {
            let p = self.tree.parent(v).expect("non-root");
            out.push_str(&format!("  n{p} -> n{v} [label=\"{}\", arrowhead=none];\n", self.labels[v]));
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Display for DegreeTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn write_node(t: &DegreeTree, v: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            f.write_str("(")?;
            for &c in t.tree.children(v) {
                write!(f, "{}:", t.labels[c])?;
                write_node(t, c, f)?;
            }
            f.write_str(")")
        }
        write_node(self, 0, f)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn err(&self, msg: &'static str) -> TreeError {
        TreeError::Parse { pos: self.pos, msg }
    }

    fn expect(&mut self, b: u8, msg: &'static str) -> Result<(), TreeError> {
        self.skip_ws();
        if self.bytes.get(self.pos) == Some(&b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(msg))
        }
    }

    fn number(&mut self) -> Result<usize, TreeError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a label"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| TreeError::Parse {
                pos: start,
                msg: "label out of range",
            })
    }

    // Appends the subtree rooted at a fresh node; returns its index.
    fn node(
        &mut self,
        children: &mut Vec<Vec<usize>>,
        labels: &mut Vec<usize>,
        label: usize,
    ) -> Result<usize, TreeError> {
        self.expect(b'(', "expected '('")?;
        let me = children.len();
        children.push(Vec::new());
        labels.push(label);
        loop {
            self.skip_ws();
            match self.bytes.get(self.pos) {
                Some(b')') => {
                    self.pos += 1;
                    return Ok(me);
                }
                Some(_) => {
                    let l = self.number()?;
                    self.expect(b':', "expected ':' after label")?;
                    let c = self.node(children, labels, l)?;
                    children[me].push(c);
                }
                None => return Err(self.err("unexpected end of input")),
            }
        }
    }
}

impl FromStr for DegreeTree {
    type Err = TreeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parser = Parser {
            bytes: s.as_bytes(),
            pos: 0,
        };
        let mut children = Vec::new();
        let mut labels = Vec::new();
        parser.node(&mut children, &mut labels, 0)?;
        parser.skip_ws();
        if parser.pos != parser.bytes.len() {
            return Err(parser.err("trailing input"));
        }
        let tree = PlaneTree::from_preorder_children(children)?;
        DegreeTree::new(tree, labels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> DegreeTree {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print() {
        for s in ["()", "(0:())", "(1:(0:()))", "(0:()0:())", "(2:(1:(0:())0:()))"] {
            assert_eq!(t(s).to_string(), s);
        }
        assert_eq!(t(" ( 0 : ( ) 0:() ) ").to_string(), "(0:()0:())");
        assert!("(".parse::<DegreeTree>().is_err());
        assert!("(0())".parse::<DegreeTree>().is_err());
        assert!("()()".parse::<DegreeTree>().is_err());
        assert!("(x:())".parse::<DegreeTree>().is_err());
    }

    #[test]
    fn node_label_examples() {
        assert_eq!(t("()").node_labels(), vec![0]);
        assert_eq!(t("(0:())").node_labels(), vec![1, 0]);
        assert_eq!(t("(1:(0:()))").node_labels(), vec![1, 1, 0]);
    }

    #[test]
    fn validate_examples() {
        assert!(t("(0:())").is_valid());
        assert_eq!(
            t("(1:())").validate(),
            Err(TreeError::LabelTooLarge {
                node: 1,
                label: 1,
                max: 0
            })
        );
        assert!(t("(1:(0:()))").is_valid());
        // Parsing is permissive, validation is not.
        assert_eq!(
            t("(0:()1:())").validate(),
            Err(TreeError::NonLeftmostLabel { node: 2, label: 1 })
        );
    }

    #[test]
    fn from_node_label_examples() {
        let single = PlaneTree::single_node();
        assert_eq!(DegreeTree::from_node_labels(single, &[0]).unwrap(), t("()"));
        let chain2 = t("(0:())").tree().clone();
        assert_eq!(
            DegreeTree::from_node_labels(chain2.clone(), &[1, 0]).unwrap(),
            t("(0:())")
        );
        let chain3 = t("(0:(0:()))").tree().clone();
        assert_eq!(
            DegreeTree::from_node_labels(chain3.clone(), &[1, 1, 0]).unwrap(),
            t("(1:(0:()))")
        );
        assert!(matches!(
            DegreeTree::from_node_labels(chain2.clone(), &[2, 0]),
            Err(TreeError::InconsistentNodeLabel { .. })
        ));
        assert!(matches!(
            DegreeTree::from_node_labels(chain2, &[1, 1]),
            Err(TreeError::LeafLabel { .. })
        ));
        assert!(DegreeTree::from_node_labels(chain3, &[1, 0]).is_err());
    }

    #[test]
    fn stats_examples() {
        let s = t("()").stats();
        assert_eq!((s.lnode, s.znode, s.pnode, s.rlabel), (1, 0, 0, 0));
        let s = t("(0:(0:()))").stats();
        assert_eq!((s.lnode, s.znode, s.pnode, s.rlabel), (1, 2, 0, 2));
        let s = t("(1:(0:()))").stats();
        assert_eq!((s.lnode, s.znode, s.pnode, s.rlabel), (1, 1, 1, 1));
    }

    #[test]
    fn traversal_examples() {
        let single = PlaneTree::single_node();
        assert_eq!(single.preorder(), vec![0]);
        assert_eq!(single.postorder(), vec![0]);
        let chain = t("(0:(0:()))").tree().clone();
        let mut rev = chain.postorder();
        rev.reverse();
        assert_eq!(chain.preorder(), rev);
        let cherry = t("(0:()0:())").tree().clone();
        assert_eq!(cherry.preorder(), vec![0, 1, 2]);
        assert_eq!(cherry.postorder(), vec![1, 2, 0]);
        assert_eq!(cherry.reverse_preorder(), vec![2, 1, 0]);
        assert_eq!(cherry.subtree_sizes(), vec![2, 0, 0]);
        assert_eq!(chain.subtree_size(1), 1);
        assert_eq!(chain.depths(), vec![0, 1, 2]);
    }

    #[test]
    fn renumbering_into_preorder() {
        // root 2 with children [0, 1]; node 0 has child 3.
        let children = vec![vec![3], vec![], vec![0, 1], vec![]];
        let (tree, map) = PlaneTree::from_children(2, &children).unwrap();
        assert_eq!(map, vec![1, 3, 0, 2]);
        assert_eq!(tree.children(0), &[1, 3]);
        assert_eq!(tree.children(1), &[2]);
        assert!(PlaneTree::from_preorder_children(children).is_err());
        // cycles and unreachable nodes are rejected
        assert!(PlaneTree::from_children(0, &[vec![1], vec![0]]).is_err());
        assert!(PlaneTree::from_children(0, &[vec![], vec![]]).is_err());
    }
}
