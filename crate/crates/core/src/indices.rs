//! The eccentric connectivity index and the invariants built from the same
//! per-vertex data: total eccentricity, first Zagreb index, degree distance,
//! and the four derivative indices.
//!
//! Integer indices use checked 64-bit arithmetic and fail with
//! [`Error::Overflow`] rather than wrapping. Rational indices are exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexMetrics};

pub(crate) fn checked_dot(a: &[u64], b: &[u64], what: &'static str) -> Result<u64> {
    a.iter().zip(b).try_fold(0u64, |acc, (&x, &y)| {
        x.checked_mul(y)
            .and_then(|p| acc.checked_add(p))
            .ok_or(Error::Overflow(what))
    })
}

fn checked_sum(a: &[u64], what: &'static str) -> Result<u64> {
    a.iter()
        .try_fold(0u64, |acc, &x| acc.checked_add(x))
        .ok_or(Error::Overflow(what))
}

/// `Σ deg(v)·ε(v)` from precomputed vectors.
pub fn eci_from(degree: &[u64], ecc: &[u64]) -> Result<u64> {
    checked_dot(degree, ecc, "eccentric connectivity index")
}

/// Eccentric connectivity index `Σ deg(v)·ε(v)`.
pub fn eci(g: &Graph) -> Result<u64> {
    eci_from(&g.degrees(), &g.eccentricities()?)
}

/// Same value summed over edges: `Σ_{uv ∈ E} (ε(u) + ε(v))`.
pub fn eci_edge_sum(g: &Graph, ecc: &[u64]) -> Result<u64> {
    g.edges().try_fold(0u64, |acc, (u, v, _)| {
        acc.checked_add(ecc[u] + ecc[v])
            .ok_or(Error::Overflow("eccentric connectivity index"))
    })
}

pub fn total_eccentricity(g: &Graph) -> Result<u64> {
    checked_sum(&g.eccentricities()?, "total eccentricity")
}

/// First Zagreb index `Σ deg(v)²`.
pub fn zagreb_m1(g: &Graph) -> u64 {
    (0..g.n()).map(|v| (g.degree(v) as u64).pow(2)).sum()
}

/// Degree distance `Σ deg(v)·D(v)`.
pub fn degree_distance(g: &Graph) -> Result<u64> {
    let m = g.vertex_metrics()?;
    checked_dot(&m.degree, &m.dist_sum, "degree distance")
}

/// Degree distance summed over unordered pairs: `Σ (deg u + deg v)·d(u, v)`.
pub fn degree_distance_pairwise(g: &Graph) -> Result<u64> {
    let mut total = 0u64;
    for u in 0..g.n() {
        let dist = g.bfs_distances(u);
        for (v, &d) in dist.iter().enumerate().skip(u + 1) {
            if d == crate::graph::UNREACHABLE {
                return Err(Error::Disconnected);
            }
            let term = ((g.degree(u) + g.degree(v)) as u64)
                .checked_mul(d)
                .ok_or(Error::Overflow("degree distance"))?;
            total = total.checked_add(term).ok_or(Error::Overflow("degree distance"))?;
        }
    }
    Ok(total)
}

/// Product of the degrees of the neighbors of `v`.
pub fn neighbor_degree_product(g: &Graph, v: usize) -> BigInt {
    g.neighbors(v)
        .iter()
        .fold(BigInt::from(1u8), |acc, &u| acc * BigInt::from(g.degree(u)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivativeIndices {
    /// `Σ ε(v)·D(v)`
    pub ecc_distance_sum: u64,
    /// `Σ ε(v)·D(v) / deg(v)`
    pub adj_ecc_distance_sum: BigRational,
    /// `Σ M(v) / ε(v)`
    pub augmented_eci: BigRational,
    /// `Σ M(v) / ε(v)²`
    pub super_augmented_eci: BigRational,
}

fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> BigRational {
    BigRational::new(num.into(), den.into())
}

pub fn derivative_indices_from(g: &Graph, metrics: &VertexMetrics) -> Result<DerivativeIndices> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    let ecc_distance_sum = checked_dot(&metrics.ecc, &metrics.dist_sum, "eccentric distance sum")?;
    let mut aeds = BigRational::zero();
    let mut ac = BigRational::zero();
    let mut sac = BigRational::zero();
    for v in 0..n {
        let (e, d, deg) = (metrics.ecc[v], metrics.dist_sum[v], metrics.degree[v]);
        aeds += ratio(BigInt::from(e) * BigInt::from(d), deg);
        let mv = neighbor_degree_product(g, v);
        ac += ratio(mv.clone(), e);
        sac += ratio(mv, BigInt::from(e) * BigInt::from(e));
    }
    Ok(DerivativeIndices {
        ecc_distance_sum,
        adj_ecc_distance_sum: aeds,
        augmented_eci: ac,
        super_augmented_eci: sac,
    })
}

pub fn derivative_indices(g: &Graph) -> Result<DerivativeIndices> {
    derivative_indices_from(g, &g.vertex_metrics()?)
}

/// All invariants of one graph.
///
/// Serializes to a flat JSON object with the keys `eci`, `zeta`, `m1`, `dd`,
/// `eds`, `aeds`, `ac`, `sac` in that order. Rational values are written as
/// exact `"p/q"` strings, each followed by a `*_decimal` approximation. The
/// rational entries are `null` for the one-vertex graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexReport {
    pub eci: u64,
    pub total_ecc: u64,
    pub zagreb_m1: u64,
    pub degree_distance: u64,
    pub ecc_distance_sum: u64,
    pub adj_ecc_distance_sum: Option<BigRational>,
    pub augmented_eci: Option<BigRational>,
    pub super_augmented_eci: Option<BigRational>,
}

impl IndexReport {
    /// Builds the report from metrics computed by any algorithm.
    pub fn from_metrics(g: &Graph, metrics: &VertexMetrics) -> Result<IndexReport> {
        let derived = if g.n() >= 2 {
            Some(derivative_indices_from(g, metrics)?)
        } else {
            None
        };
        Ok(IndexReport {
            eci: eci_from(&metrics.degree, &metrics.ecc)?,
            total_ecc: checked_sum(&metrics.ecc, "total eccentricity")?,
            zagreb_m1: zagreb_m1(g),
            degree_distance: checked_dot(&metrics.degree, &metrics.dist_sum, "degree distance")?,
            ecc_distance_sum: checked_dot(&metrics.ecc, &metrics.dist_sum, "eccentric distance sum")?,
            adj_ecc_distance_sum: derived.as_ref().map(|d| d.adj_ecc_distance_sum.clone()),
            augmented_eci: derived.as_ref().map(|d| d.augmented_eci.clone()),
            super_augmented_eci: derived.map(|d| d.super_augmented_eci),
        })
    }

    pub fn compute(g: &Graph) -> Result<IndexReport> {
        IndexReport::from_metrics(g, &g.vertex_metrics()?)
    }
}

pub fn rational_string(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rational_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

impl Serialize for IndexReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(11))?;
        map.serialize_entry("eci", &self.eci)?;
        map.serialize_entry("zeta", &self.total_ecc)?;
        map.serialize_entry("m1", &self.zagreb_m1)?;
        map.serialize_entry("dd", &self.degree_distance)?;
        map.serialize_entry("eds", &self.ecc_distance_sum)?;
        for (key, value) in [
            ("aeds", &self.adj_ecc_distance_sum),
            ("ac", &self.augmented_eci),
            ("sac", &self.super_augmented_eci),
        ] {
            map.serialize_entry(key, &value.as_ref().map(rational_string))?;
            map.serialize_entry(
                &format!("{key}_decimal"),
                &value.as_ref().map(rational_f64),
            )?;
        }
        map.end()
    }
}
