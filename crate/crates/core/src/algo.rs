//! Interchangeable strategies for computing per-vertex metrics, selected by
//! name at runtime.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexMetrics};
use crate::indices::checked_dot;
use crate::tree_linear;

pub trait MetricsAlgorithm: Send + Sync {
    fn name(&self) -> &'static str;

    fn describe(&self) -> &'static str;

    /// Eccentricity of every vertex.
    fn eccentricities(&self, g: &Graph) -> Result<Vec<u64>>;

    /// Degree, eccentricity and distance sum of every vertex.
    fn vertex_metrics(&self, g: &Graph) -> Result<VertexMetrics>;

    fn eci(&self, g: &Graph) -> Result<u64> {
        checked_dot(&g.degrees(), &self.eccentricities(g)?, "eccentric connectivity index")
    }
}

/// One shortest-path sweep per source vertex; any connected graph.
pub struct BfsAllSources;

impl MetricsAlgorithm for BfsAllSources {
    fn name(&self) -> &'static str {
        "bfs"
    }

    fn describe(&self) -> &'static str {
        "shortest paths from every vertex, O(n·m); any connected graph"
    }

    fn eccentricities(&self, g: &Graph) -> Result<Vec<u64>> {
        g.eccentricities()
    }

    fn vertex_metrics(&self, g: &Graph) -> Result<VertexMetrics> {
        g.vertex_metrics()
    }
}

/// Two-pass tree recurrence with top-two child contributions; trees only.
pub struct LinearTree;

impl MetricsAlgorithm for LinearTree {
    fn name(&self) -> &'static str {
        "linear"
    }

    fn describe(&self) -> &'static str {
        "two-pass tree recurrence, O(n); weighted trees only"
    }

    fn eccentricities(&self, g: &Graph) -> Result<Vec<u64>> {
        tree_linear::compute_ecc_linear(g, 0)
    }

    fn vertex_metrics(&self, g: &Graph) -> Result<VertexMetrics> {
        Ok(VertexMetrics {
            degree: g.degrees(),
            ecc: tree_linear::compute_ecc_linear(g, 0)?,
            dist_sum: tree_linear::distance_sums_linear(g, 0)?,
        })
    }
}

/// Same recurrence, rescanning all siblings for each vertex. Quadratic on
/// stars; kept as a benchmark baseline.
pub struct RescanTree;

impl MetricsAlgorithm for RescanTree {
    fn name(&self) -> &'static str {
        "rescan"
    }

    fn describe(&self) -> &'static str {
        "tree recurrence with sibling rescans, O(Σ deg²); weighted trees only"
    }

    fn eccentricities(&self, g: &Graph) -> Result<Vec<u64>> {
        tree_linear::compute_ecc_rescan(g, 0)
    }

    fn vertex_metrics(&self, g: &Graph) -> Result<VertexMetrics> {
        Ok(VertexMetrics {
            degree: g.degrees(),
            ecc: tree_linear::compute_ecc_rescan(g, 0)?,
            dist_sum: tree_linear::distance_sums_linear(g, 0)?,
        })
    }
}

pub struct AlgorithmRegistry {
    entries: BTreeMap<&'static str, Box<dyn MetricsAlgorithm>>,
}

impl AlgorithmRegistry {
    pub fn empty() -> Self {
        AlgorithmRegistry {
            entries: BTreeMap::new(),
        }
    }

    pub fn register(&mut self, algo: Box<dyn MetricsAlgorithm>) {
        self.entries.insert(algo.name(), algo);
    }

    pub fn get(&self, name: &str) -> Result<&dyn MetricsAlgorithm> {
        self.entries
            .get(name)
            .map(|b| b.as_ref())
            .ok_or_else(|| Error::UnknownAlgorithm(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.entries.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn MetricsAlgorithm> {
        self.entries.values().map(|b| b.as_ref())
    }
}

impl Default for AlgorithmRegistry {
    fn default() -> Self {
        let mut r = AlgorithmRegistry::empty();
        r.register(Box::new(BfsAllSources));
        r.register(Box::new(LinearTree));
        r.register(Box::new(RescanTree));
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_lookup() {
        let reg = AlgorithmRegistry::default();
        assert_eq!(reg.names().collect::<Vec<_>>(), vec!["bfs", "linear", "rescan"]);
        assert!(matches!(reg.get("dijkstra"), Err(Error::UnknownAlgorithm(_))));
    }

    #[test]
    fn strategies_agree_on_a_tree() {
        let t = Graph::build(
            6,
            [(0usize, 1usize, 2u64), (1, 2, 1), (1, 3, 3), (3, 4, 1), (0, 5, 4)],
        )
        .unwrap();
        let reg = AlgorithmRegistry::default();
        let base = reg.get("bfs").unwrap().vertex_metrics(&t).unwrap();
        for algo in reg.iter() {
            assert_eq!(algo.vertex_metrics(&t).unwrap(), base, "{}", algo.name());
        }
    }

    #[test]
    fn tree_strategies_reject_cycles() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let reg = AlgorithmRegistry::default();
        assert_eq!(reg.get("linear").unwrap().eci(&c4), Err(Error::NotATree));
        assert_eq!(reg.get("bfs").unwrap().eci(&c4), Ok(16));
    }
}
