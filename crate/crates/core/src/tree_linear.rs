//! Linear-time eccentricities of weighted trees.
//!
//! A first pass roots the tree and computes, for every vertex, the longest
//! path down into its own subtree (`ddown`). A second pass, top-down,
//! computes the longest path that leaves `v` through its parent (`dup`):
//!
//! ```text
//! dup[c] = w(v, c) + max(dup[v], max over siblings s of c: w(v, s) + ddown[s])
//! ```
//!
//! Keeping the best and second-best child contribution of each vertex makes
//! the sibling maximum O(1), so the whole computation is O(n) even on stars.
//! Both passes use explicit stacks; there is no recursion.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::indices::checked_dot;

/// Full state of the two-pass computation for one root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeEccState {
    pub root: usize,
    pub parent: Vec<Option<usize>>,
    pub ddown: Vec<u64>,
    pub dup: Vec<u64>,
    pub ecc: Vec<u64>,
}

struct Rooted {
    parent: Vec<Option<usize>>,
    /// Weight of the edge to the parent (0 at the root).
    up_weight: Vec<u64>,
    /// Preorder: every vertex appears after its parent.
    order: Vec<usize>,
}

fn root_tree(t: &Graph, root: usize) -> Result<Rooted> {
    let n = t.n();
    if root >= n {
        return Err(Error::VertexOutOfRange { vertex: root, n });
    }
    if t.m() + 1 != n {
        return Err(Error::NotATree);
    }
    let mut parent = vec![None; n];
    let mut up_weight = vec![0u64; n];
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    seen[root] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for (u, w) in t.weighted_neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                parent[u] = Some(v);
                up_weight[u] = w;
                stack.push(u);
            }
        }
    }
    if order.len() != n {
        return Err(Error::NotATree);
    }
    Ok(Rooted {
        parent,
        up_weight,
        order,
    })
}

fn ddown_pass(r: &Rooted) -> Vec<u64> {
    let mut ddown = vec![0u64; r.order.len()];
    for &v in r.order.iter().rev() {
        if let Some(p) = r.parent[v] {
            ddown[p] = ddown[p].max(r.up_weight[v] + ddown[v]);
        }
    }
    ddown
}

/// Longest downward path length from every vertex, and the parent array,
/// for `t` rooted at `root`.
pub fn compute_ddown(t: &Graph, root: usize) -> Result<(Vec<u64>, Vec<Option<usize>>)> {
    let r = root_tree(t, root)?;
    Ok((ddown_pass(&r), r.parent))
}

impl TreeEccState {
    pub fn compute(t: &Graph, root: usize) -> Result<TreeEccState> {
        let r = root_tree(t, root)?;
        let n = t.n();
        let ddown = ddown_pass(&r);

        // Best and second-best `w(v, c) + ddown[c]` over children c of v.
        let mut best = vec![(0u64, usize::MAX); n];
        let mut second = vec![0u64; n];
        for &c in &r.order {
            if let Some(p) = r.parent[c] {
                let via = r.up_weight[c] + ddown[c];
                if via > best[p].0 || best[p].1 == usize::MAX {
                    second[p] = best[p].0;
                    best[p] = (via, c);
                } else if via > second[p] {
                    second[p] = via;
                }
            }
        }

        let mut dup = vec![0u64; n];
        for &c in &r.order {
            if let Some(p) = r.parent[c] {
                let sibling = if best[p].1 == c { second[p] } else { best[p].0 };
                dup[c] = r.up_weight[c] + sibling.max(dup[p]);
            }
        }
        let ecc = ddown.iter().zip(&dup).map(|(&a, &b)| a.max(b)).collect();
        Ok(TreeEccState {
            root,
            parent: r.parent,
            ddown,
            dup,
            ecc,
        })
    }
}

/// Exact (weighted) eccentricity of every vertex of a tree in O(n).
pub fn compute_ecc_linear(t: &Graph, root: usize) -> Result<Vec<u64>> {
    Ok(TreeEccState::compute(t, root)?.ecc)
}

/// The same recurrence with the sibling maximum found by rescanning every
/// neighbor of the parent. Exact, but quadratic on high-degree vertices.
pub fn compute_ecc_rescan(t: &Graph, root: usize) -> Result<Vec<u64>> {
    let r = root_tree(t, root)?;
    let ddown = ddown_pass(&r);
    let n = t.n();
    let mut dup = vec![0u64; n];
    for &v in &r.order {
        if let Some(p) = r.parent[v] {
            let grand = r.parent[p];
            let mut best = 0;
            for (u, w) in t.weighted_neighbors(p) {
                if u != v && Some(u) != grand {
                    best = best.max(w + ddown[u]);
                }
            }
            dup[v] = r.up_weight[v] + best.max(dup[p]);
        }
    }
    Ok(ddown.iter().zip(&dup).map(|(&a, &b)| a.max(b)).collect())
}

/// Distance sum `D(v)` of every vertex of a tree in O(n), by rerooting
/// subtree sizes.
pub fn distance_sums_linear(t: &Graph, root: usize) -> Result<Vec<u64>> {
    let r = root_tree(t, root)?;
    let n = t.n();
    let mut size = vec![1u64; n];
    let mut down = vec![0u64; n];
    for &v in r.order.iter().rev() {
        if let Some(p) = r.parent[v] {
            size[p] += size[v];
            let add = r.up_weight[v]
                .checked_mul(size[v])
                .and_then(|x| x.checked_add(down[v]))
                .and_then(|x| x.checked_add(down[p]))
                .ok_or(Error::Overflow("distance sum"))?;
            down[p] = add;
        }
    }
    let mut sums = vec![0u64; n];
    sums[root] = down[root];
    for &c in &r.order {
        if let Some(p) = r.parent[c] {
            let w = r.up_weight[c];
            let outside = n as u64 - size[c];
            sums[c] = sums[p]
                .checked_add(w.checked_mul(outside).ok_or(Error::Overflow("distance sum"))?)
                .ok_or(Error::Overflow("distance sum"))?
                - w * size[c];
        }
    }
    Ok(sums)
}

/// Eccentric connectivity index of a tree in O(n) time and memory.
pub fn eci_tree(t: &Graph) -> Result<u64> {
    let ecc = compute_ecc_linear(t, 0)?;
    checked_dot(&t.degrees(), &ecc, "eccentric connectivity index")
}
