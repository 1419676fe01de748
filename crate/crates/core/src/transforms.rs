//! Index-monotone surgeries on graphs and trees.
//!
//! * `pi_shift` lengthens the longer of two pendant paths at a vertex by
//!   moving the far end of the shorter one (the index strictly increases).
//! * `delta_transform` moves all but the longest pendant path at a branching
//!   vertex onto its remaining neighbor.
//! * `rotate_deepest` moves a deepest leaf up to a shallow vertex with spare
//!   degree.
//!
//! All three keep vertex ids stable.

use crate::error::{Error, Result};
use crate::graph::{rewire, Graph, MetricProfile};

/// A base graph with two pendant paths of lengths `p` and `q` attached at
/// `w`. In [`PendantPathPair::build`] the base keeps its ids, the `p`-path
/// follows as `n..n+p` (from `w` outwards), then the `q`-path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PendantPathPair {
    pub base: Graph,
    pub w: usize,
    pub p: usize,
    pub q: usize,
}

impl PendantPathPair {
    fn validate(&self) -> Result<()> {
        if self.q == 0 || self.p < self.q {
            return Err(Error::BadConfig(format!(
                "need p >= q >= 1, got p = {}, q = {}",
                self.p, self.q
            )));
        }
        if self.base.n() < 2 || !self.base.is_connected() {
            return Err(Error::BadConfig("base must be connected with at least two vertices".into()));
        }
        if self.w >= self.base.n() {
            return Err(Error::VertexOutOfRange {
                vertex: self.w,
                n: self.base.n(),
            });
        }
        if self.base.is_weighted() {
            return Err(Error::WeightedUnsupported("pendant path transforms"));
        }
        Ok(())
    }

    fn with_lengths(&self, p: usize, q: usize) -> Result<Graph> {
        let n0 = self.base.n();
        let mut edges: Vec<(usize, usize)> = self.base.edges().map(|(u, v, _)| (u, v)).collect();
        // q-path ids are fixed by the original `p`, so the moved vertex keeps
        // its id: it is the last q-path vertex.
        let p_ids: Vec<usize> = (n0..n0 + self.p).collect();
        let q_ids: Vec<usize> = (n0 + self.p..n0 + self.p + self.q).collect();
        let mut chain = |ids: &[usize]| {
            let mut prev = self.w;
            for &x in ids {
                edges.push((prev, x));
                prev = x;
            }
        };
        if p == self.p {
            chain(&p_ids);
            chain(&q_ids);
        } else {
            let moved = *q_ids.last().expect("q >= 1");
            let mut longer = p_ids.clone();
            longer.push(moved);
            chain(&longer);
            chain(&q_ids[..q]);
        }
        Graph::from_edges(n0 + self.p + self.q, &edges)
    }

    /// `G(p, q)`.
    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        self.with_lengths(self.p, self.q)
    }
}

/// `G(p, q) -> G(p + 1, q - 1)`, ids as in [`PendantPathPair::build`].
pub fn pi_shift(cfg: &PendantPathPair) -> Result<Graph> {
    cfg.validate()?;
    cfg.with_lengths(cfg.p + 1, cfg.q - 1)
}

/// A maximal pendant path hanging off a vertex: its vertices ordered
/// outwards, ending at a leaf.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PendantPath {
    pub vertices: Vec<usize>,
}

impl PendantPath {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn leaf(&self) -> usize {
        *self.vertices.last().expect("pendant paths are nonempty")
    }
}

/// The pendant path leaving `w` through neighbor `x`, if the branch at `x`
/// is one.
fn follow_path(g: &Graph, w: usize, x: usize) -> Option<PendantPath> {
    let mut vertices = vec![x];
    let (mut prev, mut cur) = (w, x);
    loop {
        match g.degree(cur) {
            1 => return Some(PendantPath { vertices }),
            2 => {
                let next = g.neighbors(cur).iter().copied().find(|&y| y != prev)?;
                if next == w || vertices.contains(&next) {
                    return None;
                }
                vertices.push(next);
                prev = cur;
                cur = next;
            }
            _ => return None,
        }
    }
}

/// Every pendant path attached at `w`, ordered by first vertex.
pub fn pendant_paths_at(g: &Graph, w: usize) -> Vec<PendantPath> {
    g.neighbors(w).iter().filter_map(|&x| follow_path(g, w, x)).collect()
}

/// Shift on a raw graph: the two pendant paths at `w` are found
/// structurally. With three or more, `select` must name the first vertices
/// of the two paths to use. The longer path (ties: smaller first vertex)
/// grows.
pub fn pi_shift_at(g: &Graph, w: usize, select: Option<(usize, usize)>) -> Result<Graph> {
    if w >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: w, n: g.n() });
    }
    if g.is_weighted() {
        return Err(Error::WeightedUnsupported("pendant path transforms"));
    }
    let paths = pendant_paths_at(g, w);
    let (a, b) = match select {
        Some((x, y)) => {
            let find = |f| {
                paths.iter().find(|p| p.first() == f).cloned().ok_or_else(|| {
                    Error::BadConfig(format!("no pendant path at {w} starts at {f}"))
                })
            };
            if x == y {
                return Err(Error::BadConfig("selected paths must differ".into()));
            }
            (find(x)?, find(y)?)
        }
        None => match paths.len() {
            2 => (paths[0].clone(), paths[1].clone()),
            0 | 1 => {
                return Err(Error::BadConfig(format!(
                    "vertex {w} has {} pendant path(s), need two",
                    paths.len()
                )))
            }
            k => {
                return Err(Error::BadConfig(format!(
                    "vertex {w} has {k} pendant paths; select two explicitly"
                )))
            }
        },
    };
    if g.degree(w) < 3 {
        return Err(Error::BadConfig(
            "the graph without the two paths must be nontrivial".into(),
        ));
    }
    let (long, short) = if (a.len(), std::cmp::Reverse(a.first())) >= (b.len(), std::cmp::Reverse(b.first())) {
        (a, b)
    } else {
        (b, a)
    };
    let moved = short.leaf();
    let attach_to = if short.len() == 1 { w } else { short.vertices[short.len() - 2] };
    rewire(g, &[(attach_to, moved)], &[(long.leaf(), moved)])
}

/// The non-path neighbor `w` of `v` when exactly `deg(v) - 1` neighbors
/// start pendant paths.
fn delta_parts(t: &Graph, v: usize, w: usize) -> Result<Vec<PendantPath>> {
    let not_applicable = |why: String| Error::NotApplicable(format!("delta at {v}: {why}"));
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if !t.has_edge(v, w) {
        return Err(not_applicable(format!("{w} is not a neighbor")));
    }
    let mut paths = Vec::new();
    for &x in t.neighbors(v) {
        if x == w {
            continue;
        }
        paths.push(
            follow_path(t, v, x).ok_or_else(|| not_applicable(format!("branch at {x} is not a pendant path")))?,
        );
    }
    if paths.len() < 2 {
        return Err(not_applicable("needs at least two pendant paths".into()));
    }
    Ok(paths)
}

/// Result of a δ-transform: the new tree and the lengths of the moved paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaOutcome {
    pub tree: Graph,
    pub moved_lengths: Vec<usize>,
}

impl DeltaOutcome {
    /// `2 (n_1 + … + n_{m-1})`.
    pub fn predicted_decrease(&self) -> u64 {
        2 * self.moved_lengths.iter().sum::<usize>() as u64
    }
}

/// δ-transform toward the neighbor `w`: every other neighbor of `v` must
/// start a pendant path. All but the longest (ties: largest first vertex
/// stays) move to `w`.
pub fn delta_transform_toward(t: &Graph, v: usize, w: usize) -> Result<DeltaOutcome> {
    let mut paths = delta_parts(t, v, w)?;
    paths.sort_by_key(|p| (p.len(), p.first()));
    paths.pop();
    let remove: Vec<_> = paths.iter().map(|p| (v, p.first())).collect();
    let add: Vec<_> = paths.iter().map(|p| (w, p.first())).collect();
    Ok(DeltaOutcome {
        tree: rewire(t, &remove, &add)?,
        moved_lengths: paths.iter().map(PendantPath::len).collect(),
    })
}

/// δ-transform at `v`. `w` is the one neighbor not starting a pendant path;
/// when every neighbor starts one (a spider), `w` starts the longest
/// (ties: smallest id).
pub fn delta_transform(t: &Graph, v: usize) -> Result<DeltaOutcome> {
    if v >= t.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: t.n() });
    }
    let paths: Vec<(usize, Option<PendantPath>)> =
        t.neighbors(v).iter().map(|&x| (x, follow_path(t, v, x))).collect();
    let others: Vec<usize> = paths.iter().filter(|p| p.1.is_none()).map(|p| p.0).collect();
    match others.as_slice() {
        [w] => delta_transform_toward(t, v, *w),
        [] => {
            let w = paths
                .iter()
                .filter_map(|(x, p)| p.as_ref().map(|p| (p.len(), std::cmp::Reverse(*x))))
                .max()
                .map(|(_, std::cmp::Reverse(x))| x)
                .ok_or_else(|| Error::NotApplicable(format!("delta at {v}: isolated vertex")))?;
            delta_transform_toward(t, v, w)
        }
        _ => Err(Error::NotApplicable(format!(
            "delta at {v}: {} neighbors are not pendant paths, need at most one",
            others.len()
        ))),
    }
}

fn depth_from_center(t: &Graph, profile: &MetricProfile) -> Vec<u64> {
    let mut depth = vec![u64::MAX; t.n()];
    for &c in &profile.center {
        for (d, x) in depth.iter_mut().zip(t.bfs_distances(c)) {
            *d = (*d).min(x);
        }
    }
    depth
}

/// A pair `(v, w)` satisfying the monotonicity hypothesis: `v` is a
/// non-central branching vertex at maximum depth from the center, and `w`
/// its neighbor toward the center. Ties break by smallest `v`.
pub fn delta_candidate(t: &Graph) -> Result<Option<(usize, usize)>> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let ecc = t.eccentricities()?;
    let profile = MetricProfile::from_ecc(&ecc);
    let depth = depth_from_center(t, &profile);
    let deepest = (0..t.n()).filter(|&v| t.degree(v) >= 3).map(|v| depth[v]).max();
    let Some(dmax) = deepest else {
        return Ok(None);
    };
    if dmax == 0 {
        return Ok(None);
    }
    let v = (0..t.n())
        .find(|&v| t.degree(v) >= 3 && depth[v] == dmax)
        .expect("a deepest branching vertex exists");
    let w = t
        .neighbors(v)
        .iter()
        .copied()
        .find(|&x| depth[x] < depth[v])
        .expect("non-central vertex has a neighbor toward the center");
    Ok(Some((v, w)))
}

/// Whether `(v, w)` meets the hypothesis under which the δ-transform
/// strictly decreases the index by twice the moved length.
pub fn delta_hypothesis(t: &Graph, v: usize, w: usize) -> Result<bool> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let ecc = t.eccentricities()?;
    let profile = MetricProfile::from_ecc(&ecc);
    let depth = depth_from_center(t, &profile);
    let max_branch = (0..t.n()).filter(|&x| t.degree(x) >= 3).map(|x| depth[x]).max();
    Ok(t.degree(v) >= 3
        && t.has_edge(v, w)
        && !profile.center.contains(&v)
        && ecc[w] < ecc[v]
        && Some(depth[v]) == max_branch)
}

/// One rotation step with degree cap `cap`: root at the smallest-id center,
/// `u` the shallowest vertex with `deg(u) < cap`, `w` the deepest leaf whose
/// neighbor `v` has `ε(v) > ε(u)`; edge `vw` becomes `uw`.
pub fn rotate_deepest(t: &Graph, cap: usize) -> Result<Graph> {
    Ok(rotate_deepest_step(t, cap)?.0)
}

/// As [`rotate_deepest`], also returning `(u, v, w)`.
pub fn rotate_deepest_step(t: &Graph, cap: usize) -> Result<(Graph, (usize, usize, usize))> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if t.is_weighted() {
        return Err(Error::WeightedUnsupported("rotate_deepest"));
    }
    let ecc = t.eccentricities()?;
    let profile = MetricProfile::from_ecc(&ecc);
    let root = profile.center[0];
    let depth = t.bfs_distances(root);
    let by_depth = |pred: &dyn Fn(usize) -> bool, deepest: bool| {
        (0..t.n())
            .filter(|&x| pred(x))
            .min_by_key(|&x| (if deepest { u64::MAX - depth[x] } else { depth[x] }, x))
    };
    let u = by_depth(&|x| t.degree(x) < cap, false).ok_or(Error::NoEligiblePair)?;
    let w = by_depth(
        &|x| t.degree(x) == 1 && t.neighbors(x).first().is_some_and(|&v| v != u && ecc[v] > ecc[u]),
        true,
    )
    .ok_or(Error::NoEligiblePair)?;
    let v = t.neighbors(w)[0];
    Ok((rewire(t, &[(v, w)], &[(u, w)])?, (u, v, w)))
}

/// Identifies vertex `u` of `g` with vertex `at` of `t`. The vertices of
/// `t` other than `at` get ids `g.n()..` in their original order.
pub fn attach_at(g: &Graph, u: usize, t: &Graph, at: usize) -> Result<Graph> {
    if u >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: u, n: g.n() });
    }
    if at >= t.n() {
        return Err(Error::VertexOutOfRange { vertex: at, n: t.n() });
    }
    let map = |x: usize| match x.cmp(&at) {
        std::cmp::Ordering::Equal => u,
        std::cmp::Ordering::Less => g.n() + x,
        std::cmp::Ordering::Greater => g.n() + x - 1,
    };
    let mut edges: Vec<(usize, usize)> = g.edges().map(|(a, b, _)| (a, b)).collect();
    edges.extend(t.edges().map(|(a, b, _)| (map(a), map(b))));
    Graph::from_edges(g.n() + t.n() - 1, &edges)
}
