//! Immutable simple undirected graphs and the BFS distance machinery every
//! other module is built on.
//!
//! Vertices are dense ids `0..n`. Adjacency is stored in compressed sparse row
//! form with each neighbor list sorted; optional positive integer weights are
//! stored alongside the targets. A graph whose weights are all `1` is stored
//! as unweighted.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};

/// Distance value for a vertex that cannot be reached from the source.
pub const UNREACHABLE: u64 = u64::MAX;

/// One input edge for [`Graph::build`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: Option<u64>,
}

impl Edge {
    pub fn new(u: usize, v: usize) -> Self {
        Edge { u, v, weight: None }
    }

    pub fn weighted(u: usize, v: usize, weight: u64) -> Self {
        Edge {
            u,
            v,
            weight: Some(weight),
        }
    }
}

impl From<(usize, usize)> for Edge {
    fn from((u, v): (usize, usize)) -> Self {
        Edge::new(u, v)
    }
}

impl From<(usize, usize, u64)> for Edge {
    fn from((u, v, w): (usize, usize, u64)) -> Self {
        Edge::weighted(u, v, w)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
    weights: Option<Vec<u64>>,
}

/// Coarse structural class of a connected graph by cyclomatic number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphClass {
    Tree,
    Unicyclic,
    Bicyclic,
    General,
}

/// Per-vertex degree, eccentricity and distance sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexMetrics {
    pub degree: Vec<u64>,
    pub ecc: Vec<u64>,
    pub dist_sum: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MetricProfile {
    pub radius: u64,
    pub diameter: u64,
    pub center: Vec<usize>,
}

impl MetricProfile {
    /// Radius, diameter and center read off an eccentricity vector.
    pub fn from_ecc(ecc: &[u64]) -> Self {
        let radius = ecc.iter().copied().min().unwrap_or(0);
        let diameter = ecc.iter().copied().max().unwrap_or(0);
        let center = (0..ecc.len()).filter(|&v| ecc[v] == radius).collect();
        MetricProfile {
            radius,
            diameter,
            center,
        }
    }
}

impl Graph {
    /// Builds a graph on `n` vertices, rejecting self-loops, duplicate edges,
    /// out-of-range endpoints and zero weights.
    pub fn build<I, E>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut arcs: Vec<(usize, usize, u64)> = Vec::new();
        let mut weighted = false;
        for e in edges {
            let Edge { u, v, weight } = e.into();
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let w = match weight {
                Some(0) => return Err(Error::NonpositiveWeight(u, v)),
                Some(w) => w,
                None => 1,
            };
            weighted |= w != 1;
            arcs.push((u, v, w));
            arcs.push((v, u, w));
        }
        arcs.sort_unstable();
        for pair in arcs.windows(2) {
            if pair[0].0 == pair[1].0 && pair[0].1 == pair[1].1 {
                let (a, b) = (pair[0].0, pair[0].1);
                return Err(Error::DuplicateEdge(a.min(b), a.max(b)));
            }
        }
        let mut offsets = vec![0usize; n + 1];
        for &(u, _, _) in &arcs {
            offsets[u + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let targets = arcs.iter().map(|a| a.1).collect();
        let weights = weighted.then(|| arcs.iter().map(|a| a.2).collect());
        Ok(Graph {
            offsets,
            targets,
            weights,
        })
    }

    /// Unweighted convenience constructor.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        Graph::build(n, edges.iter().copied())
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn is_weighted(&self) -> bool {
        self.weights.is_some()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Neighbors of `v` paired with edge weights (1 for unweighted graphs).
    pub fn weighted_neighbors(&self, v: usize) -> impl Iterator<Item = (usize, u64)> + '_ {
        let range = self.offsets[v]..self.offsets[v + 1];
        let weights = self.weights.as_deref();
        range.map(move |i| (self.targets[i], weights.map_or(1, |w| w[i])))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edge weight, if the edge exists.
    pub fn weight(&self, u: usize, v: usize) -> Option<u64> {
        let i = self.neighbors(u).binary_search(&v).ok()?;
        Some(self.weights.as_ref().map_or(1, |w| w[self.offsets[u] + i]))
    }

    /// Each edge once, as `(u, v, weight)` with `u < v`, in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.weighted_neighbors(u)
                .filter(move |&(v, _)| u < v)
                .map(move |(v, w)| (u, v, w))
        })
    }

    pub fn degrees(&self) -> Vec<u64> {
        (0..self.n()).map(|v| self.degree(v) as u64).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Number of degree-one vertices.
    pub fn pendent_count(&self) -> usize {
        (0..self.n()).filter(|&v| self.degree(v) == 1).count()
    }

    /// Shortest-path distances from `source`; [`UNREACHABLE`] marks vertices
    /// in other components.
    pub fn bfs_distances(&self, source: usize) -> Vec<u64> {
        let mut dist = vec![UNREACHABLE; self.n()];
        let mut queue = VecDeque::new();
        self.distances_into(source, &mut dist, &mut queue);
        dist
    }

    fn distances_into(&self, source: usize, dist: &mut [u64], queue: &mut VecDeque<usize>) {
        dist.fill(UNREACHABLE);
        dist[source] = 0;
        if self.weights.is_none() {
            queue.clear();
            queue.push_back(source);
            while let Some(u) = queue.pop_front() {
                let du = dist[u] + 1;
                for &v in self.neighbors(u) {
                    if dist[v] == UNREACHABLE {
                        dist[v] = du;
                        queue.push_back(v);
                    }
                }
            }
        } else {
            let mut heap = BinaryHeap::new();
            heap.push(Reverse((0u64, source)));
            while let Some(Reverse((d, u))) = heap.pop() {
                if d > dist[u] {
                    continue;
                }
                for (v, w) in self.weighted_neighbors(u) {
                    let nd = d + w;
                    if nd < dist[v] {
                        dist[v] = nd;
                        heap.push(Reverse((nd, v)));
                    }
                }
            }
        }
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).iter().all(|&d| d != UNREACHABLE)
    }

    /// Degree, eccentricity and distance sum of every vertex, by one
    /// shortest-path sweep per source.
    pub fn vertex_metrics(&self) -> Result<VertexMetrics> {
        let n = self.n();
        let mut ecc = Vec::with_capacity(n);
        let mut dist_sum = Vec::with_capacity(n);
        let mut dist = vec![UNREACHABLE; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            self.distances_into(s, &mut dist, &mut queue);
            let mut e = 0u64;
            let mut total = 0u64;
            for &d in &dist {
                if d == UNREACHABLE {
                    return Err(Error::Disconnected);
                }
                e = e.max(d);
                total = total.checked_add(d).ok_or(Error::Overflow("distance sum"))?;
            }
            ecc.push(e);
            dist_sum.push(total);
        }
        Ok(VertexMetrics {
            degree: self.degrees(),
            ecc,
            dist_sum,
        })
    }

    /// Eccentricities only.
    pub fn eccentricities(&self) -> Result<Vec<u64>> {
        let n = self.n();
        let mut out = Vec::with_capacity(n);
        let mut dist = vec![UNREACHABLE; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            self.distances_into(s, &mut dist, &mut queue);
            let mut e = 0;
            for &d in &dist {
                if d == UNREACHABLE {
                    return Err(Error::Disconnected);
                }
                e = e.max(d);
            }
            out.push(e);
        }
        Ok(out)
    }

    pub fn metric_profile(&self) -> Result<MetricProfile> {
        Ok(MetricProfile::from_ecc(&self.eccentricities()?))
    }

    pub fn classify(&self) -> Result<GraphClass> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let (n, m) = (self.n(), self.m());
        Ok(if m + 1 == n {
            GraphClass::Tree
        } else if m == n {
            GraphClass::Unicyclic
        } else if m == n + 1 {
            GraphClass::Bicyclic
        } else {
            GraphClass::General
        })
    }

    pub fn is_tree(&self) -> bool {
        self.m() + 1 == self.n() && self.is_connected()
    }

    /// Vertices of the unique cycle of a unicyclic graph, in cyclic order
    /// starting from the smallest id.
    pub fn unique_cycle(&self) -> Result<Vec<usize>> {
        if self.classify()? != GraphClass::Unicyclic {
            return Err(Error::NotUnicyclic);
        }
        let n = self.n();
        let mut deg: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; n];
        let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
        while let Some(v) = stack.pop() {
            removed[v] = true;
            for &u in self.neighbors(v) {
                if !removed[u] {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        stack.push(u);
                    }
                }
            }
        }
        let start = (0..n).find(|&v| !removed[v]).ok_or(Error::NotUnicyclic)?;
        let mut cycle = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = self
                .neighbors(cur)
                .iter()
                .copied()
                .find(|&u| !removed[u] && u != prev)
                .ok_or(Error::NotUnicyclic)?;
            if next == start {
                break;
            }
            cycle.push(next);
            prev = cur;
            cur = next;
        }
        Ok(cycle)
    }

    /// Length of the unique cycle, found by repeatedly deleting leaves.
    pub fn girth_unicyclic(&self) -> Result<usize> {
        Ok(self.unique_cycle()?.len())
    }
}

/// Rewires a graph: drops `remove` edges and adds `add` edges, keeping ids.
pub(crate) fn rewire(
    g: &Graph,
    remove: &[(usize, usize)],
    add: &[(usize, usize)],
) -> Result<Graph> {
    let key = |u: usize, v: usize| (u.min(v), u.max(v));
    let removed: std::collections::HashSet<_> = remove.iter().map(|&(u, v)| key(u, v)).collect();
    let mut edges: Vec<Edge> = g
        .edges()
        .filter(|&(u, v, _)| !removed.contains(&key(u, v)))
        .map(|(u, v, w)| Edge::weighted(u, v, w))
        .collect();
    edges.extend(add.iter().map(|&(u, v)| Edge::new(u, v)));
    Graph::build(g.n(), edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn star(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn build_examples() {
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.m(), 3);
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.m(), 1);
        assert_eq!(Graph::from_edges(3, &[(0, 0)]), Err(Error::SelfLoop(0)));
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(
            Graph::build(2, [(0usize, 1usize, 0u64)]),
            Err(Error::NonpositiveWeight(0, 1))
        );
        assert_eq!(Graph::from_edges(0, &[]), Err(Error::EmptyGraph));
    }

    #[test]
    fn unit_weights_collapse_to_unweighted() {
        let g = Graph::build(2, [(0usize, 1usize, 1u64)]).unwrap();
        assert!(!g.is_weighted());
        let h = Graph::build(2, [(0usize, 1usize, 4u64)]).unwrap();
        assert!(h.is_weighted());
        assert_eq!(h.weight(1, 0), Some(4));
    }

    #[test]
    fn bfs_examples() {
        assert_eq!(path(4).bfs_distances(0), vec![0, 1, 2, 3]);
        let mut d = cycle(5).bfs_distances(2);
        d.sort();
        assert_eq!(d, vec![0, 1, 1, 2, 2]);
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.bfs_distances(0), vec![0, 1, UNREACHABLE, UNREACHABLE]);
    }

    #[test]
    fn weighted_distances() {
        let g = Graph::build(3, [(0usize, 1usize, 2u64), (1, 2, 5)]).unwrap();
        assert_eq!(g.bfs_distances(0), vec![0, 2, 7]);
    }

    #[test]
    fn metrics_examples() {
        let s5 = star(5).vertex_metrics().unwrap();
        assert_eq!(s5.ecc, vec![1, 2, 2, 2, 2]);
        let c6 = cycle(6).vertex_metrics().unwrap();
        assert!(c6.ecc.iter().all(|&e| e == 3));
        assert!(c6.dist_sum.iter().all(|&d| d == 9));
        let p5 = path(5).vertex_metrics().unwrap();
        assert_eq!((p5.ecc[2], p5.dist_sum[2]), (2, 6));
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.vertex_metrics(), Err(Error::Disconnected));
    }

    #[test]
    fn profile_examples() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let p = k4.metric_profile().unwrap();
        assert_eq!((p.radius, p.diameter, p.center), (1, 1, vec![0, 1, 2, 3]));
        let p = path(5).metric_profile().unwrap();
        assert_eq!((p.radius, p.diameter, p.center), (2, 4, vec![2]));
        // double star S_{3,3}: centers 0 and 1, two leaves each
        let ds = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        let p = ds.metric_profile().unwrap();
        assert_eq!((p.radius, p.diameter, p.center), (2, 3, vec![0, 1]));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(path(6).classify().unwrap(), GraphClass::Tree);
        assert_eq!(cycle(5).classify().unwrap(), GraphClass::Unicyclic);
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.classify().unwrap(), GraphClass::General);
        let single = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(single.classify().unwrap(), GraphClass::Tree);
    }

    #[test]
    fn girth_examples() {
        assert_eq!(cycle(7).girth_unicyclic().unwrap(), 7);
        // S6 plus an edge between two leaves
        let mut edges: Vec<_> = (1..6).map(|i| (0, i)).collect();
        edges.push((1, 2));
        let g = Graph::from_edges(6, &edges).unwrap();
        assert_eq!(g.girth_unicyclic().unwrap(), 3);
        assert_eq!(path(4).girth_unicyclic(), Err(Error::NotUnicyclic));
    }
}
