//! Degree trees to new intervals via certificates, and back via rising
//! contacts.

use crate::dyck::{DyckPath, NewInterval, Step};
use crate::tree::DegreeTree;

use super::BijectionError;

/// Certificates of the nodes (preorder indices) and how many nodes each
/// node certifies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateAssignment {
    pub certificate: Vec<usize>,
    pub count: Vec<usize>,
}

/// Runs the black/red coloring over the nodes in reverse preorder.
///
/// For an internal node whose leftmost edge carries `a > 0`, the scan
/// recolors the next `a` black nodes red and stops just before the
/// `(a+1)`-st black one.
pub fn certificates(tree: &DegreeTree) -> Result<CertificateAssignment, BijectionError> {
    tree.validate()?;
    let n = tree.tree().node_count();
    let mut red = vec![false; n];
    let mut certificate: Vec<usize> = (0..n).collect();
    for v in (0..n).rev() {
        let a = match tree.leftmost_label(v) {
            None | Some(0) => continue,
            Some(a) => a,
        };
        let mut seen_black = 0;
        let mut j = v + 1;
        loop {
            if j >= n {
                return Err(BijectionError::CertificateOverflow(v));
            }
            if !red[j] {
                if seen_black == a {
                    break;
                }
                seen_black += 1;
                red[j] = true;
            }
            j += 1;
        }
        certificate[v] = j - 1;
    }
    let mut count = vec![0; n];
    for &w in &certificate {
        count[w] += 1;
    }
    Ok(CertificateAssignment { certificate, count })
}

/// `I_T`: the lower path concatenates `u d^c(v)` over the preorder, the
/// upper path is the lifted depth walk of the tree.
pub fn tree_to_interval(tree: &DegreeTree) -> Result<NewInterval, BijectionError> {
    let cert = certificates(tree)?;
    let mut steps = Vec::with_capacity(2 * cert.count.len());
    for &c in &cert.count {
        steps.push(Step::Up);
        steps.extend(std::iter::repeat_n(Step::Down, c));
    }
    let lower = DyckPath::from_steps(steps)?;
    let upper = DyckPath::from_plane_tree(tree.tree()).lift();
    Ok(NewInterval::new(lower, upper)?)
}

/// `T_I`: shape from the upper path, leftmost-edge labels from rising
/// contacts of the lower-path factors.
pub fn interval_to_tree(interval: &NewInterval) -> Result<DegreeTree, BijectionError> {
    let inner = interval.upper().factor_between(1)?;
    let tree = inner.to_plane_tree();
    let mut labels = vec![0; tree.node_count()];
    for v in 0..tree.node_count() {
        if let Some(c) = tree.leftmost_child(v) {
            labels[c] = interval.lower().factor_between(v + 1)?.rising_contacts();
        }
    }
    let result = DegreeTree::new(tree, labels)?;
    result.validate()?;
    Ok(result)
}
