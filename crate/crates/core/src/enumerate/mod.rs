//! Exhaustive generation of small trees and unicyclic graphs, and the
//! extremal-result suites that run over them.

pub mod canon;
pub mod invariants;
pub mod suites;
pub mod trees;
pub mod unicyclic;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use canon::{canonical_form, CanonicalForm};
pub use invariants::{independence_number_tree, matching_number_tree};
pub use suites::{verify_extremal, ExtremalReport, ExtremalSuite, SuiteRegistry, Verdict};

/// Environment variable that overrides both order guards.
pub const MAX_N_ENV: &str = "ECCI_MAX_N";

/// Largest orders that the enumerators accept.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumConfig {
    pub max_tree_n: usize,
    pub max_unicyclic_n: usize,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            max_tree_n: 12,
            max_unicyclic_n: 9,
        }
    }
}

impl EnumConfig {
    /// Defaults, with both guards replaced by `ECCI_MAX_N` when it is set to
    /// a positive integer.
    pub fn from_env() -> Self {
        match std::env::var(MAX_N_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok()) {
            Some(n) if n > 0 => EnumConfig {
                max_tree_n: n,
                max_unicyclic_n: n,
            },
            _ => EnumConfig::default(),
        }
    }

    pub fn check_trees(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::TooSmall { n, min: 1 });
        }
        if n > self.max_tree_n {
            return Err(Error::TooLarge {
                what: "tree enumeration order",
                limit: self.max_tree_n,
            });
        }
        Ok(())
    }

    pub fn check_unicyclic(&self, n: usize) -> Result<()> {
        if n < 3 {
            return Err(Error::TooSmall { n, min: 3 });
        }
        if n > self.max_unicyclic_n {
            return Err(Error::TooLarge {
                what: "unicyclic enumeration order",
                limit: self.max_unicyclic_n,
            });
        }
        Ok(())
    }
}

/// Non-isomorphic trees on `n` vertices, guarded by [`EnumConfig::from_env`].
pub fn enumerate_trees(n: usize) -> Result<impl Iterator<Item = Graph>> {
    enumerate_trees_with(n, &EnumConfig::from_env())
}

pub fn enumerate_trees_with(n: usize, cfg: &EnumConfig) -> Result<impl Iterator<Item = Graph>> {
    cfg.check_trees(n)?;
    Ok(trees::FreeTrees::new(n).map(|(_, t)| t))
}

/// Non-isomorphic unicyclic graphs on `n` vertices, guarded by
/// [`EnumConfig::from_env`].
pub fn enumerate_unicyclic(n: usize) -> Result<impl Iterator<Item = Graph>> {
    enumerate_unicyclic_with(n, &EnumConfig::from_env())
}

pub fn enumerate_unicyclic_with(n: usize, cfg: &EnumConfig) -> Result<impl Iterator<Item = Graph>> {
    cfg.check_unicyclic(n)?;
    Ok(unicyclic::unicyclic_graphs(n).into_iter().map(|(_, g)| g))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn guards() {
        let cfg = EnumConfig::default();
        assert_eq!(enumerate_trees_with(4, &cfg).unwrap().count(), 2);
        assert!(matches!(enumerate_trees_with(13, &cfg), Err(Error::TooLarge { .. })));
        assert!(matches!(enumerate_trees_with(0, &cfg), Err(Error::TooSmall { .. })));
        assert!(matches!(enumerate_unicyclic_with(10, &cfg), Err(Error::TooLarge { .. })));
        assert_eq!(enumerate_unicyclic_with(3, &cfg).unwrap().count(), 1);
        let wide = EnumConfig {
            max_tree_n: 13,
            max_unicyclic_n: 10,
        };
        assert_eq!(enumerate_trees_with(13, &wide).unwrap().count(), 1301);
    }
}
