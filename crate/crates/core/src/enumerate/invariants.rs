//! Matching and independence numbers of trees by leaf-first greedy passes.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Vertices in an order where every vertex follows its parent, plus the
/// parent array, for the tree rooted at 0.
fn rooted_order(t: &Graph) -> Result<(Vec<usize>, Vec<Option<usize>>)> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let mut parent = vec![None; t.n()];
    let mut seen = vec![false; t.n()];
    let mut order = vec![0];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        for &u in t.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                parent[u] = Some(v);
                order.push(u);
            }
        }
    }
    Ok((order, parent))
}

/// Maximum matching size: scanning leaves upward, match a vertex with its
/// parent whenever both are still free.
pub fn matching_number_tree(t: &Graph) -> Result<usize> {
    let (order, parent) = rooted_order(t)?;
    let mut matched = vec![false; t.n()];
    let mut size = 0;
    for &v in order.iter().rev() {
        if let Some(p) = parent[v] {
            if !matched[v] && !matched[p] {
                matched[v] = true;
                matched[p] = true;
                size += 1;
            }
        }
    }
    Ok(size)
}

/// Maximum independent set size: scanning leaves upward, take a vertex
/// whenever none of its children was taken.
pub fn independence_number_tree(t: &Graph) -> Result<usize> {
    let (order, parent) = rooted_order(t)?;
    let mut blocked = vec![false; t.n()];
    let mut size = 0;
    for &v in order.iter().rev() {
        if !blocked[v] {
            size += 1;
            if let Some(p) = parent[v] {
                blocked[p] = true;
            }
        }
    }
    Ok(size)
}
