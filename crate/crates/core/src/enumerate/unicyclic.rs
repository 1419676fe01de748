//! Unicyclic graphs of a given order, one per isomorphism class: a cycle
//! `C_k` with a rooted tree hanging at each cycle vertex, kept only when the
//! sequence of rooted codes is already its own rotation/reflection minimum.

use super::canon::{dihedral_min, LevelSequence};
use super::trees::RootedTrees;
use crate::graph::Graph;

/// Compositions of `total` into `parts` positive summands.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            cur.push(rest);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for first in 1..=rest + 1 - parts {
            cur.push(first);
            go(rest - first, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts >= 1 && total >= parts {
        go(total, parts, &mut Vec::new(), &mut out);
    }
    out
}

/// Builds the graph for a cycle with the given rooted trees; cycle vertices
/// are `0..k`.
pub fn unicyclic_from_codes(codes: &[LevelSequence]) -> Graph {
    let k = codes.len();
    let n: usize = codes.iter().map(Vec::len).sum();
    let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    let mut next = k;
    for (i, code) in codes.iter().enumerate() {
        let mut last_at = vec![i];
        for &l in &code[1..] {
            let l = l as usize;
            last_at.truncate(l);
            edges.push((last_at[l - 1], next));
            last_at.push(next);
            next += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("cycle with hanging trees is simple")
}

/// All unicyclic graphs on `n >= 3` vertices with their canonical codes,
/// ordered by girth.
pub fn unicyclic_graphs(n: usize) -> Vec<(Vec<LevelSequence>, Graph)> {
    let rooted: Vec<Vec<LevelSequence>> = (0..=n).map(|s| RootedTrees::new(s).collect()).collect();
    let mut out = Vec::new();
    for k in 3..=n {
        for sizes in compositions(n, k) {
            let lists: Vec<&Vec<LevelSequence>> = sizes.iter().map(|&s| &rooted[s]).collect();
            let mut idx = vec![0usize; k];
            loop {
                let codes: Vec<LevelSequence> = (0..k).map(|i| lists[i][idx[i]].clone()).collect();
                if dihedral_min(&codes) == codes {
                    let g = unicyclic_from_codes(&codes);
                    out.push((codes, g));
                }
                // odometer over the per-vertex choices
                let mut i = 0;
                while i < k {
                    idx[i] += 1;
                    if idx[i] < lists[i].len() {
                        break;
                    }
                    idx[i] = 0;
                    i += 1;
                }
                if i == k {
                    break;
                }
            }
        }
    }
    out
}
