//! Eccentricity-based topological indices of graphs.
//!
//! The central quantity is the eccentric connectivity index
//! `ξ(G) = Σ deg(v)·ε(v)`. The crate computes it (and related indices) for
//! arbitrary connected graphs by shortest-path sweeps and for weighted trees
//! in linear time, builds the standard named families, checks the known
//! bounds, and enumerates small trees and unicyclic graphs to verify
//! extremal results exhaustively.

pub mod algo;
pub mod bounds;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod indices;
pub mod io;
pub mod product;
pub mod random;
pub mod transforms;
pub mod tree_linear;

pub use algo::{AlgorithmRegistry, MetricsAlgorithm};
pub use error::{Error, Result};
pub use families::{FamilyRegistry, FamilySpec};
pub use graph::{Edge, Graph, GraphClass, MetricProfile, VertexMetrics};
pub use indices::{eci, IndexReport};
pub use tree_linear::eci_tree;
