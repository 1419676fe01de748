//! Rooted and free trees of a given order, one per isomorphism class.
//!
//! Rooted trees come from the level-sequence successor rule: find the last
//! position `p` with level above 1, the last earlier position `q` one level
//! up, and copy the block `q..p` periodically over `p..n`. Starting from the
//! path this visits every canonical level sequence once, in decreasing
//! order. A free tree is kept when its rooted sequence is its own canonical
//! (center-rooted) form.

use super::canon::{tree_code, LevelSequence};
use crate::graph::Graph;

/// Canonical level sequences of all rooted trees on `n >= 1` vertices.
pub struct RootedTrees {
    next: Option<LevelSequence>,
}

impl RootedTrees {
    pub fn new(n: usize) -> Self {
        RootedTrees {
            next: (n >= 1).then(|| (0..n as u32).collect()),
        }
    }
}

impl Iterator for RootedTrees {
    type Item = LevelSequence;

    fn next(&mut self) -> Option<LevelSequence> {
        let current = self.next.take()?;
        if let Some(p) = current.iter().rposition(|&l| l > 1) {
            let q = current[..p]
                .iter()
                .rposition(|&l| l == current[p] - 1)
                .expect("a level-sequence parent precedes every vertex");
            let mut succ = current.clone();
            for i in p..succ.len() {
                succ[i] = succ[i - (p - q)];
            }
            self.next = Some(succ);
        }
        Some(current)
    }
}

/// The tree described by a level sequence; vertex `i` is position `i`.
pub fn tree_from_levels(levels: &[u32]) -> Graph {
    let mut last_at: Vec<usize> = Vec::new();
    let mut edges = Vec::with_capacity(levels.len().saturating_sub(1));
    for (i, &l) in levels.iter().enumerate() {
        let l = l as usize;
        last_at.truncate(l);
        if l > 0 {
            edges.push((last_at[l - 1], i));
        }
        last_at.push(i);
    }
    Graph::from_edges(levels.len(), &edges).expect("level sequences describe trees")
}

/// Free trees on `n >= 1` vertices, each with its canonical sequence.
pub struct FreeTrees {
    rooted: RootedTrees,
}

impl FreeTrees {
    pub fn new(n: usize) -> Self {
        FreeTrees {
            rooted: RootedTrees::new(n),
        }
    }
}

impl Iterator for FreeTrees {
    type Item = (LevelSequence, Graph);

    fn next(&mut self) -> Option<Self::Item> {
        for levels in self.rooted.by_ref() {
            let t = tree_from_levels(&levels);
            if tree_code(&t).expect("generated graphs are trees") == levels {
                return Some((levels, t));
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rooted_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| RootedTrees::new(n).count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 20, 48, 115, 286, 719]);
        assert_eq!(RootedTrees::new(0).count(), 0);
    }

    #[test]
    fn rooted_order_four() {
        let all: Vec<_> = RootedTrees::new(4).collect();
        assert_eq!(all, vec![vec![0, 1, 2, 3], vec![0, 1, 2, 2], vec![0, 1, 2, 1], vec![0, 1, 1, 1]]);
    }

    #[test]
    fn free_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| FreeTrees::new(n).count()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
    }

    #[test]
    fn level_sequence_edges() {
        let t = tree_from_levels(&[0, 1, 2, 1]);
        assert!(t.has_edge(0, 1) && t.has_edge(1, 2) && t.has_edge(0, 3));
    }
}
