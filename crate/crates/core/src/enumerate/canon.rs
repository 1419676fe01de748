//! Canonical forms for trees and unicyclic graphs.
//!
//! A rooted tree is encoded by its level sequence with subtrees ordered so
//! that the sequence is lexicographically largest. A free tree uses the
//! encoding rooted at its center (the larger one for a bicenter). A
//! unicyclic graph is encoded by the rooted codes of the trees hanging off
//! its cycle, read around the cycle and minimized over rotations and
//! reflections.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphClass, MetricProfile};

pub type LevelSequence = Vec<u32>;

/// Canonical level sequence of the tree hanging at `root`, never entering a
/// vertex with `blocked[v]` set.
pub fn rooted_code(g: &Graph, root: usize, blocked: &[bool]) -> LevelSequence {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![root];
    parent[root] = root;
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        for &u in g.neighbors(v) {
            if parent[u] == usize::MAX && !blocked[u] {
                parent[u] = v;
                order.push(u);
            }
        }
    }
    let mut codes: Vec<Vec<LevelSequence>> = vec![Vec::new(); n];
    for &v in order.iter().rev() {
        let mut children = std::mem::take(&mut codes[v]);
        children.sort_unstable_by(|a, b| b.cmp(a));
        let mut code = Vec::with_capacity(1 + children.iter().map(Vec::len).sum::<usize>());
        code.push(0);
        for c in children {
            code.extend(c.into_iter().map(|x| x + 1));
        }
        if v == root {
            return code;
        }
        codes[parent[v]].push(code);
    }
    unreachable!("root is visited last in reverse order")
}

/// Canonical level sequence of a free tree.
pub fn tree_code(t: &Graph) -> Result<LevelSequence> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let profile = MetricProfile::from_ecc(&t.eccentricities()?);
    let free = vec![false; t.n()];
    Ok(profile
        .center
        .iter()
        .map(|&c| rooted_code(t, c, &free))
        .max()
        .expect("a tree has a center"))
}

/// Dihedral minimum of a cyclic sequence.
pub fn dihedral_min<T: Ord + Clone>(seq: &[T]) -> Vec<T> {
    let k = seq.len();
    let mut best: Option<Vec<T>> = None;
    for r in 0..k {
        for dir in [false, true] {
            let img: Vec<T> = (0..k)
                .map(|i| {
                    let j = if dir { (r + k - i) % k } else { (r + i) % k };
                    seq[j].clone()
                })
                .collect();
            if best.as_ref().is_none_or(|b| img < *b) {
                best = Some(img);
            }
        }
    }
    best.unwrap_or_default()
}

pub fn unicyclic_code(g: &Graph) -> Result<Vec<LevelSequence>> {
    let cycle = g.unique_cycle()?;
    let mut blocked = vec![false; g.n()];
    for &c in &cycle {
        blocked[c] = true;
    }
    let seq: Vec<LevelSequence> = cycle.iter().map(|&c| rooted_code(g, c, &blocked)).collect();
    Ok(dihedral_min(&seq))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CanonicalForm {
    Tree(LevelSequence),
    Unicyclic(Vec<LevelSequence>),
}

fn join(seq: &[u32]) -> String {
    seq.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CanonicalForm::Tree(s) => write!(f, "tree:{}", join(s)),
            CanonicalForm::Unicyclic(parts) => {
                write!(f, "unicyclic:")?;
                for p in parts {
                    write!(f, "({})", join(p))?;
                }
                Ok(())
            }
        }
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Canonical form of a tree or unicyclic graph; other graphs are
/// `NotApplicable`.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    match g.classify()? {
        GraphClass::Tree => Ok(CanonicalForm::Tree(tree_code(g)?)),
        GraphClass::Unicyclic => Ok(CanonicalForm::Unicyclic(unicyclic_code(g)?)),
        other => Err(Error::NotApplicable(format!(
            "no canonical form for {other:?} graphs"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::construct::{path, star, unicyclic_h};

    #[test]
    fn path_and_star_codes() {
        assert_eq!(tree_code(&path(4).unwrap()).unwrap(), vec![0, 1, 2, 1]);
        assert_eq!(tree_code(&path(5).unwrap()).unwrap(), vec![0, 1, 2, 1, 2]);
        assert_eq!(tree_code(&star(4).unwrap()).unwrap(), vec![0, 1, 1, 1]);
    }

    #[test]
    fn relabelling_invariant() {
        let a = Graph::from_edges(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        let b = Graph::from_edges(6, &[(5, 4), (4, 3), (4, 2), (2, 1), (2, 0)]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn unicyclic_rotations_agree() {
        let a = unicyclic_h(&[2, 0, 1, 0]).unwrap();
        let b = unicyclic_h(&[0, 1, 0, 2]).unwrap();
        let c = unicyclic_h(&[2, 1, 0, 0]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        assert_ne!(canonical_form(&a).unwrap(), canonical_form(&c).unwrap());
        assert_eq!(canonical_form(&c).unwrap().to_string(), "unicyclic:(0)(0)(0,1)(0,1,1)");
    }

    #[test]
    fn other_classes_rejected() {
        let k4 = crate::families::construct::complete(4).unwrap();
        assert!(matches!(canonical_form(&k4), Err(Error::NotApplicable(_))));
    }
}
