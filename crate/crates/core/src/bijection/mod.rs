//! The four transformations between maps, degree trees and new intervals,
//! and their composites.

mod interval_tree;
mod map_tree;

use thiserror::Error;

use crate::dyck::{DyckError, NewInterval};
use crate::planar_map::{MapError, PlanarMap};
use crate::tree::TreeError;

pub use interval_tree::{certificates, interval_to_tree, tree_to_interval, CertificateAssignment};
pub use map_tree::{
    check_exploration_shape, map_to_tree, map_to_tree_traced, tree_to_map, tree_to_map_traced,
    StepKind, Trace, TraceStep,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Dyck(#[from] DyckError),
    #[error("walk of {need} corners exceeds the outer face degree {have}")]
    WalkTooLong { need: usize, have: usize },
    #[error("certificate search ran past the end of the tree at node {0}")]
    CertificateOverflow(usize),
}

/// Map to new interval, through the degree tree.
pub fn map_to_interval(map: &PlanarMap) -> Result<NewInterval, BijectionError> {
    tree_to_interval(&map_to_tree(map)?)
}

/// New interval to map, through the degree tree.
pub fn interval_to_map(interval: &NewInterval) -> Result<PlanarMap, BijectionError> {
    tree_to_map(&interval_to_tree(interval)?)
}
