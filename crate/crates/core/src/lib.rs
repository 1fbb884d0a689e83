//! Bijections between new Tamari intervals, degree trees and rooted
//! bipartite planar maps, with exhaustive enumerators and an independent
//! permutation-pair oracle to check them against.
//!
//! ```
//! use tamari_atlas::bijection::map_to_interval;
//! use tamari_atlas::planar_map::HypermapCode;
//!
//! let double_edge: HypermapCode = "n=2\nsigma=(1 2)\nalpha=(1 2)\nroot=1".parse().unwrap();
//! let interval = map_to_interval(&double_edge.to_map()).unwrap();
//! assert_eq!(interval.to_string(), "uuddud;uuuddd");
//! ```

pub mod bijection;
pub mod cli;
pub mod dyck;
pub mod enumerate;
pub mod planar_map;
pub mod tree;
pub mod verify;
