//! Typed constructors for every named family. Each validates its parameter
//! domain and numbers vertices so that vertex 0 is the distinguished vertex
//! (clique attachment, star center, root or cycle vertex).

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::product;

fn bad(family: &str, reason: impl Into<String>) -> Error {
    Error::BadParams {
        family: family.to_string(),
        reason: reason.into(),
    }
}

fn ensure(ok: bool, family: &str, reason: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(bad(family, reason))
    }
}

pub fn complete(n: usize) -> Result<Graph> {
    ensure(n >= 1, "complete", "n >= 1")?;
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    ensure(a >= 1 && b >= 1, "complete_bipartite", "a >= 1 and b >= 1")?;
    let mut edges = Vec::with_capacity(a * b);
    for i in 0..a {
        for j in 0..b {
            edges.push((i, a + j));
        }
    }
    Graph::from_edges(a + b, &edges)
}

pub fn path(n: usize) -> Result<Graph> {
    ensure(n >= 1, "path", "n >= 1")?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn star(n: usize) -> Result<Graph> {
    ensure(n >= 2, "star", "n >= 2")?;
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    ensure(n >= 3, "cycle", "n >= 3")?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn hypercube(dim: usize) -> Result<Graph> {
    ensure(dim <= 20, "hypercube", "0 <= n <= 20")?;
    let n = 1usize << dim;
    let mut edges = Vec::with_capacity(n * dim / 2);
    for v in 0..n {
        for bit in 0..dim {
            let u = v ^ (1 << bit);
            if v < u {
                edges.push((v, u));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Clique `K_{n-d}` on `0..n-d` with a `d`-vertex path hanging from vertex 0.
pub fn lollipop(n: usize, d: usize) -> Result<Graph> {
    ensure(d >= 1 && d + 2 <= n, "lollipop", "1 <= d <= n - 2")?;
    let c = n - d;
    let mut edges = Vec::new();
    for i in 0..c {
        for j in i + 1..c {
            edges.push((i, j));
        }
    }
    edges.push((0, c));
    for v in c + 1..n {
        edges.push((v - 1, v));
    }
    Graph::from_edges(n, &edges)
}

/// Starlike tree `T(n_1, …, n_k)`: paths of the given lengths sharing root 0.
pub fn starlike(lengths: &[usize]) -> Result<Graph> {
    ensure(!lengths.is_empty(), "starlike", "at least one path")?;
    ensure(lengths.iter().all(|&l| l >= 1), "starlike", "path lengths >= 1")?;
    let n = 1 + lengths.iter().sum::<usize>();
    let mut edges = Vec::with_capacity(n - 1);
    let mut next = 1;
    for &len in lengths {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// Broom `B_{n,Δ} = T(n-Δ, 1, …, 1)`; the root 0 has degree `Δ`.
pub fn broom(n: usize, delta: usize) -> Result<Graph> {
    ensure(delta >= 3 && delta + 2 <= n, "broom", "3 <= delta <= n - 2")?;
    let mut lengths = vec![n - delta];
    lengths.extend(std::iter::repeat_n(1, delta - 1));
    starlike(&lengths)
}

/// Path lengths of the balanced starlike tree `SB_{n,p}`: the first
/// `(n-1) mod p` paths are one longer.
pub fn balanced_lengths(n: usize, p: usize) -> Vec<usize> {
    let (q, r) = ((n - 1) / p, (n - 1) % p);
    (0..p).map(|i| if i < r { q + 1 } else { q }).collect()
}

pub fn balanced_starlike(n: usize, p: usize) -> Result<Graph> {
    ensure(p >= 2 && p < n, "balanced_starlike", "2 <= p <= n - 1")?;
    starlike(&balanced_lengths(n, p))
}

/// Volkmann tree: breadth-first complete, root of degree `Δ`, every other
/// internal vertex with `Δ - 1` children, the last level filled left to
/// right.
pub fn volkmann(n: usize, delta: usize) -> Result<Graph> {
    ensure(delta >= 3 && delta + 2 <= n, "volkmann", "3 <= delta <= n - 2")?;
    let edges: Vec<_> = (1..n)
        .map(|i| {
            let parent = if i <= delta {
                0
            } else {
                (i - delta - 1) / (delta - 1) + 1
            };
            (parent, i)
        })
        .collect();
    Graph::from_edges(n, &edges)
}

/// Spur `A_{n,m}`: star `S_{m+1}` centered at 0 with a pendant edge added
/// to `n - m - 1` of its leaves.
pub fn spur(n: usize, m: usize) -> Result<Graph> {
    ensure(n >= 3, "spur", "n >= 3")?;
    ensure(2 * m > n - 1 && m < n, "spur", "(n - 1)/2 < m <= n - 1")?;
    let mut edges: Vec<_> = (1..=m).map(|i| (0, i)).collect();
    for i in 1..n - m {
        edges.push((i, m + i));
    }
    Graph::from_edges(n, &edges)
}

/// Double star `S_{a,b}`: centers 0 and 1 joined, with `a - 1` and `b - 1`
/// leaves respectively.
pub fn double_star(a: usize, b: usize) -> Result<Graph> {
    ensure(a >= 2 && b >= 2, "double_star", "a >= 2 and b >= 2")?;
    let mut edges = vec![(0, 1)];
    let mut next = 2;
    for (center, leaves) in [(0, a - 1), (1, b - 1)] {
        for _ in 0..leaves {
            edges.push((center, next));
            next += 1;
        }
    }
    Graph::from_edges(a + b, &edges)
}

/// Caterpillar `C_{n,d}(p_1, …, p_{d-1})`: spine `0..=d`, with `p_i`
/// pendent vertices on spine vertex `i`.
pub fn caterpillar(d: usize, pendants: &[usize]) -> Result<Graph> {
    ensure(d >= 2, "caterpillar", "d >= 2")?;
    ensure(pendants.len() + 1 == d, "caterpillar", "exactly d - 1 pendant counts")?;
    let n = d + 1 + pendants.iter().sum::<usize>();
    let mut edges: Vec<_> = (1..=d).map(|i| (i - 1, i)).collect();
    let mut next = d + 1;
    for (i, &p) in pendants.iter().enumerate() {
        for _ in 0..p {
            edges.push((i + 1, next));
            next += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// `C_{n,d,i}`: all `n - d - 1` pendants on spine vertex `i`.
pub fn caterpillar_cndi(n: usize, d: usize, i: usize) -> Result<Graph> {
    ensure(d >= 2 && d + 2 <= n, "caterpillar_Cndi", "2 <= d <= n - 2")?;
    ensure(i >= 1 && i < d, "caterpillar_Cndi", "1 <= i <= d - 1")?;
    let mut pendants = vec![0; d - 1];
    pendants[i - 1] = n - d - 1;
    caterpillar(d, &pendants)
}

/// Member of the diameter-minimal set: spine `P_{d+1}` with `j` pendants on
/// spine vertex `⌊d/2⌋` and the remaining `n - d - 1 - j` on `⌈d/2⌉`.
/// `d = n - 1` gives the path.
pub fn diameter_min_tree(n: usize, d: usize, j: usize) -> Result<Graph> {
    ensure(d >= 1 && d < n, "diameter_min_tree", "1 <= d <= n - 1")?;
    ensure(j < n - d, "diameter_min_tree", "j <= n - d - 1")?;
    if d + 1 == n {
        return path(n);
    }
    ensure(d >= 2, "diameter_min_tree", "d >= 2 when n > d + 1")?;
    let mut pendants = vec![0; d - 1];
    pendants[d / 2 - 1] += j;
    pendants[d.div_ceil(2) - 1] += n - d - 1 - j;
    caterpillar(d, &pendants)
}

/// Member of the pendent-maximal set: path `P_{n-p}` with `a` pendants at
/// one end and `p - a` at the other. `p = n - 1` gives the star.
pub fn pendent_max_tree(n: usize, p: usize, a: usize) -> Result<Graph> {
    ensure(p >= 2 && p < n, "pendent_max_tree", "2 <= p <= n - 1")?;
    ensure(a >= 1 && a <= p / 2, "pendent_max_tree", "1 <= a <= p/2")?;
    if p + 1 == n {
        return star(n);
    }
    let d = n - p + 1;
    let mut pendants = vec![0; d - 1];
    pendants[0] += a - 1;
    pendants[d - 2] += p - a - 1;
    caterpillar(d, &pendants)
}

/// `H(n, k; n_1, …, n_k)`: cycle `0..k` with `counts[i]` pendants at cycle
/// vertex `i`.
pub fn unicyclic_h(counts: &[usize]) -> Result<Graph> {
    let k = counts.len();
    ensure(k >= 3, "unicyclic_H", "girth k >= 3")?;
    let n = k + counts.iter().sum::<usize>();
    let mut edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    let mut next = k;
    for (i, &c) in counts.iter().enumerate() {
        for _ in 0..c {
            edges.push((i, next));
            next += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// `H_{n,k}`: all `n - k` pendants at cycle vertex 0.
pub fn unicyclic_hnk(n: usize, k: usize) -> Result<Graph> {
    ensure(k >= 3 && k <= n, "unicyclic_Hnk", "3 <= k <= n")?;
    let mut counts = vec![0; k];
    counts[0] = n - k;
    unicyclic_h(&counts)
}

/// `L(n, k; n_1, …, n_k)`: cycle `0..k` with a pendant path of length
/// `lengths[i]` at cycle vertex `i`.
pub fn unicyclic_l(lengths: &[usize]) -> Result<Graph> {
    let k = lengths.len();
    ensure(k >= 3, "unicyclic_L", "girth k >= 3")?;
    let n = k + lengths.iter().sum::<usize>();
    let mut edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    let mut next = k;
    for (i, &len) in lengths.iter().enumerate() {
        let mut prev = i;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// `L_{n,k}`: one pendant path of length `n - k` at cycle vertex 0.
pub fn unicyclic_lnk(n: usize, k: usize) -> Result<Graph> {
    ensure(k >= 3 && k <= n, "unicyclic_Lnk", "3 <= k <= n")?;
    let mut lengths = vec![0; k];
    lengths[0] = n - k;
    unicyclic_l(&lengths)
}

/// `K_n - ke`: the edges `(0,1), (2,3), …, (2k-2, 2k-1)` are removed.
pub fn complete_minus_matching(n: usize, k: usize) -> Result<Graph> {
    ensure(n >= 1 && k <= n / 2, "complete_minus_matching", "0 <= k <= n/2")?;
    ensure(!(n == 2 && k == 1), "complete_minus_matching", "K_2 - e is disconnected")?;
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if !(j == i + 1 && i % 2 == 0 && i < 2 * k) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Rectangular grid `P_a □ P_b`, row-major ids.
pub fn grid(a: usize, b: usize) -> Result<Graph> {
    ensure(a >= 1 && b >= 1, "grid", "a >= 1 and b >= 1")?;
    product::cartesian_product(&path(a)?, &path(b)?)
}

/// `C_4` nanotorus `C_a □ C_b`.
pub fn nanotorus(a: usize, b: usize) -> Result<Graph> {
    ensure(a >= 3 && b >= 3, "nanotorus", "a >= 3 and b >= 3")?;
    product::cartesian_product(&cycle(a)?, &cycle(b)?)
}

/// `C_4` nanotube `P_a □ C_b`.
pub fn nanotube(a: usize, b: usize) -> Result<Graph> {
    ensure(a >= 1 && b >= 3, "nanotube", "a >= 1 and b >= 3")?;
    product::cartesian_product(&path(a)?, &cycle(b)?)
}
