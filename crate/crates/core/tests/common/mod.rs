//! Independent oracles shared by the integration tests. Distances come from
//! petgraph, isomorphism from VF2; nothing here calls the library's own
//! shortest-path or canonical-form code.

#![allow(dead_code)]

use std::collections::HashMap;

use eccentric::Graph;
use petgraph::algo::{dijkstra, is_isomorphic};
use petgraph::graph::{NodeIndex, UnGraph};

pub fn to_petgraph(g: &Graph) -> UnGraph<(), u64> {
    let mut pg = UnGraph::with_capacity(g.n(), g.m());
    let nodes: Vec<NodeIndex> = (0..g.n()).map(|_| pg.add_node(())).collect();
    for (u, v, w) in g.edges() {
        pg.add_edge(nodes[u], nodes[v], w);
    }
    pg
}

/// Eccentricity of every vertex by Dijkstra from each source.
pub fn oracle_ecc(g: &Graph) -> Vec<u64> {
    let pg = to_petgraph(g);
    pg.node_indices()
        .map(|s| {
            let d = dijkstra(&pg, s, None, |e| *e.weight());
            assert_eq!(d.len(), g.n(), "oracle needs a connected graph");
            *d.values().max().unwrap()
        })
        .collect()
}

pub fn oracle_eci(g: &Graph) -> u64 {
    let ecc = oracle_ecc(g);
    (0..g.n()).map(|v| g.degree(v) as u64 * ecc[v]).sum()
}

pub fn oracle_zeta(g: &Graph) -> u64 {
    oracle_ecc(g).iter().sum()
}

/// Edge count, sorted degrees, sorted eccentricities.
type BucketKey = (usize, Vec<usize>, Vec<u64>);
type Bucket = Vec<(Graph, UnGraph<(), u64>)>;

/// Cheap isomorphism invariant used to bucket candidates before VF2.
fn bucket_key(g: &Graph) -> BucketKey {
    let mut deg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    deg.sort_unstable();
    let mut ecc = oracle_ecc(g);
    ecc.sort_unstable();
    (g.m(), deg, ecc)
}

/// Keeps one representative per isomorphism class.
pub fn dedup_isomorphic(graphs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut buckets: HashMap<BucketKey, Bucket> = HashMap::new();
    let mut order = Vec::new();
    for g in graphs {
        let pg = to_petgraph(&g);
        let key = bucket_key(&g);
        let bucket = buckets.entry(key.clone()).or_default();
        if bucket.iter().all(|(_, h)| !is_isomorphic(h, &pg)) {
            bucket.push((g, pg));
            order.push((key, bucket.len() - 1));
        }
    }
    order
        .into_iter()
        .map(|(k, i)| buckets[&k][i].0.clone())
        .collect()
}

/// Free trees on `n` vertices grown by leaf addition.
pub fn oracle_trees(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::from_edges(1, &[]).unwrap()];
    for size in 2..=n {
        let grown = level.iter().flat_map(|t| {
            (0..t.n()).map(move |v| {
                let mut edges = plain_edges(t);
                edges.push((v, size - 1));
                Graph::from_edges(size, &edges).unwrap()
            })
        });
        level = dedup_isomorphic(grown.collect::<Vec<_>>());
    }
    level
}

/// Connected graphs with `n - 1 + extra` edges, from every tree plus every
/// choice of `extra` non-edges.
pub fn oracle_tree_plus(n: usize, extra: usize) -> Vec<Graph> {
    let mut all = Vec::new();
    for t in oracle_trees(n) {
        let missing: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !t.has_edge(u, v))
            .collect();
        for pick in combinations(missing.len(), extra) {
            let mut edges = plain_edges(&t);
            edges.extend(pick.iter().map(|&i| missing[i]));
            all.push(Graph::from_edges(n, &edges).unwrap());
        }
    }
    dedup_isomorphic(all)
}

pub fn plain_edges(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().map(|(u, v, _)| (u, v)).collect()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Relabels `g` by a permutation.
pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    Graph::build(g.n(), g.edges().map(|(u, v, w)| (perm[u], perm[v], w))).unwrap()
}
