//! Seeded random graphs for property tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::Result;
use crate::graph::{Edge, Graph};

/// Edges of a uniformly random labelled tree on `n` vertices (Prüfer code).
pub fn random_tree_edges<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<(usize, usize)> {
    if n < 2 {
        return Vec::new();
    }
    if n == 2 {
        return vec![(0, 1)];
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut heap: std::collections::BinaryHeap<std::cmp::Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(std::cmp::Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let std::cmp::Reverse(leaf) = heap.pop().expect("a leaf always exists");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            heap.push(std::cmp::Reverse(c));
        }
    }
    let std::cmp::Reverse(a) = heap.pop().expect("two leaves remain");
    let std::cmp::Reverse(b) = heap.pop().expect("two leaves remain");
    edges.push((a, b));
    edges
}

pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<Graph> {
    Graph::from_edges(n, &random_tree_edges(rng, n))
}

/// Random tree with integer edge weights drawn from `weights`.
pub fn random_weighted_tree<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    weights: std::ops::RangeInclusive<u64>,
) -> Result<Graph> {
    let edges: Vec<Edge> = random_tree_edges(rng, n)
        .into_iter()
        .map(|(u, v)| Edge::weighted(u, v, rng.random_range(weights.clone())))
        .collect();
    Graph::build(n, edges)
}

/// Random connected graph: a random spanning tree plus `extra` further
/// distinct edges (fewer if the graph becomes complete).
pub fn random_connected<R: Rng + ?Sized>(rng: &mut R, n: usize, extra: usize) -> Result<Graph> {
    let mut edges = random_tree_edges(rng, n);
    let present: std::collections::HashSet<(usize, usize)> =
        edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    let mut missing: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|e| !present.contains(e))
        .collect();
    missing.shuffle(rng);
    edges.extend(missing.into_iter().take(extra));
    Graph::from_edges(n, &edges)
}
