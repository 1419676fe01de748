//! Cartesian products and the factor decomposition of the eccentric
//! connectivity index.
//!
//! Vertex `(i, j)` of `G1 □ G2` has id `i * |G2| + j` (row-major).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::indices;

/// Largest product order that [`cartesian_product`] will materialize.
pub const MAX_PRODUCT_VERTICES: usize = 1_000_000;

pub fn cartesian_product(g1: &Graph, g2: &Graph) -> Result<Graph> {
    if g1.is_weighted() || g2.is_weighted() {
        return Err(Error::WeightedUnsupported("cartesian product"));
    }
    let (n1, n2) = (g1.n(), g2.n());
    let n = n1
        .checked_mul(n2)
        .filter(|&n| n <= MAX_PRODUCT_VERTICES)
        .ok_or(Error::TooLarge {
            what: "product vertex count",
            limit: MAX_PRODUCT_VERTICES,
        })?;
    let mut edges = Vec::with_capacity(n1 * g2.m() + n2 * g1.m());
    for i in 0..n1 {
        for (a, b, _) in g2.edges() {
            edges.push((i * n2 + a, i * n2 + b));
        }
    }
    for (a, b, _) in g1.edges() {
        for j in 0..n2 {
            edges.push((a * n2 + j, b * n2 + j));
        }
    }
    Graph::from_edges(n, &edges)
}

/// The factor invariants that determine the index of a product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FactorSummary {
    pub n: u64,
    pub m: u64,
    pub eci: u64,
    pub zeta: u64,
}

impl FactorSummary {
    pub fn of(g: &Graph) -> Result<FactorSummary> {
        if g.is_weighted() {
            return Err(Error::WeightedUnsupported("cartesian product"));
        }
        let metrics = g.vertex_metrics()?;
        Ok(FactorSummary {
            n: g.n() as u64,
            m: g.m() as u64,
            eci: indices::eci_from(&metrics.degree, &metrics.ecc)?,
            zeta: metrics.ecc.iter().sum(),
        })
    }

    /// Summary of `self □ other`, without building the product.
    pub fn compose(&self, other: &FactorSummary) -> Result<FactorSummary> {
        let of = || Error::Overflow("product index");
        let mul = |a: u64, b: u64| a.checked_mul(b).ok_or_else(of);
        let add = |a: u64, b: u64| a.checked_add(b).ok_or_else(of);
        let eci = add(
            add(mul(other.n, self.eci)?, mul(self.n, other.eci)?)?,
            add(mul(2 * other.m, self.zeta)?, mul(2 * self.m, other.zeta)?)?,
        )?;
        Ok(FactorSummary {
            n: mul(self.n, other.n)?,
            m: add(mul(self.n, other.m)?, mul(other.n, self.m)?)?,
            eci,
            zeta: add(mul(other.n, self.zeta)?, mul(self.n, other.zeta)?)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductDecomposition {
    pub factors: (FactorSummary, FactorSummary),
    pub composed: FactorSummary,
}

impl ProductDecomposition {
    pub fn new(g1: &Graph, g2: &Graph) -> Result<ProductDecomposition> {
        let a = FactorSummary::of(g1)?;
        let b = FactorSummary::of(g2)?;
        Ok(ProductDecomposition {
            factors: (a, b),
            composed: a.compose(&b)?,
        })
    }

    pub fn value(&self) -> u64 {
        self.composed.eci
    }
}

/// `|G2| ξ(G1) + |G1| ξ(G2) + 2‖G2‖ ζ(G1) + 2‖G1‖ ζ(G2)`.
pub fn eci_by_decomposition(g1: &Graph, g2: &Graph) -> Result<u64> {
    Ok(ProductDecomposition::new(g1, g2)?.value())
}

/// Index of a product of any number of factors, folded pairwise.
pub fn eci_of_product(factors: &[&Graph]) -> Result<u64> {
    let (first, rest) = factors.split_first().ok_or(Error::EmptyGraph)?;
    let mut acc = FactorSummary::of(first)?;
    for g in rest {
        acc = acc.compose(&FactorSummary::of(g)?)?;
    }
    Ok(acc.eci)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::construct::{complete, cycle, path, star};

    #[test]
    fn square() {
        let p2 = path(2).unwrap();
        let c4 = cartesian_product(&p2, &p2).unwrap();
        assert_eq!((c4.n(), c4.m()), (4, 4));
        assert!(c4.degrees().iter().all(|&d| d == 2));
        assert_eq!(eci_by_decomposition(&p2, &p2).unwrap(), 16);
    }

    #[test]
    fn torus_3_4() {
        let (c3, c4) = (cycle(3).unwrap(), cycle(4).unwrap());
        let t = cartesian_product(&c3, &c4).unwrap();
        assert_eq!((t.n(), t.m()), (12, 24));
        assert!(t.degrees().iter().all(|&d| d == 4));
        assert_eq!(indices::eci(&t).unwrap(), 144);
        assert_eq!(eci_by_decomposition(&c3, &c4).unwrap(), 144);
    }

    #[test]
    fn row_major_ids() {
        let g = cartesian_product(&path(2).unwrap(), &path(3).unwrap()).unwrap();
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && g.has_edge(0, 3) && g.has_edge(2, 5));
        assert!(!g.has_edge(2, 3));
    }

    #[test]
    fn identity_factor() {
        let g = star(6).unwrap();
        let k1 = complete(1).unwrap();
        let p = cartesian_product(&g, &k1).unwrap();
        assert_eq!(p.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
        assert_eq!(eci_by_decomposition(&g, &k1).unwrap(), indices::eci(&g).unwrap());
    }

    #[test]
    fn folding_three_factors() {
        let p2 = path(2).unwrap();
        let q3 = crate::families::construct::hypercube(3).unwrap();
        assert_eq!(eci_of_product(&[&p2, &p2, &p2]).unwrap(), indices::eci(&q3).unwrap());
    }

    #[test]
    fn guards() {
        let big = path(1001).unwrap();
        assert!(matches!(cartesian_product(&big, &big), Err(Error::TooLarge { .. })));
        let w = Graph::build(2, [(0usize, 1usize, 3u64)]).unwrap();
        assert!(matches!(cartesian_product(&w, &big), Err(Error::WeightedUnsupported(_))));
        let disc = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(eci_by_decomposition(&disc, &big), Err(Error::Disconnected));
    }
}
