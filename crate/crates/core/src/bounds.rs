//! Lower and upper bounds on the eccentric connectivity index, evaluated in
//! exact integer arithmetic, with equality detection.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, MetricProfile};
use crate::indices::{self, rational_string};

/// Largest integer `a` with `a² - 2na + a + 2m >= 0` below the vertex of
/// the parabola, i.e. `⌊(2n - 1 - √((2n-1)² - 8m)) / 2⌋`.
pub fn a_nm(n: u64, m: u64) -> Result<u64> {
    let max_m = n.checked_mul(n.saturating_sub(1)).map(|x| x / 2);
    if n == 0 || m + 1 < n || max_m.is_none_or(|max| m >= max) {
        return Err(Error::OutOfRange(format!(
            "a_nm needs n - 1 <= m < n(n-1)/2, got n = {n}, m = {m}"
        )));
    }
    let a = 2 * n as u128 - 1;
    let disc = a * a - 8 * m as u128;
    let s = disc.isqrt();
    // An irrational root lies strictly between s and s + 1.
    let num = if s * s == disc { a - s } else { a - s - 1 };
    Ok((num / 2) as u64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundFlag {
    pub holds: bool,
    pub equality: bool,
}

impl BoundFlag {
    fn lower(bound: u64, value: u64) -> Self {
        BoundFlag {
            holds: value >= bound,
            equality: value == bound,
        }
    }

    fn upper(bound: u64, value: u64) -> Self {
        BoundFlag {
            holds: value <= bound,
            equality: value == bound,
        }
    }
}

fn ser_rational<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rational_string(r))
}

/// Every bound applicable to one graph. Bounds outside their stated domain
/// are `None`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsReport {
    pub n: u64,
    pub m: u64,
    pub eci: u64,
    pub radius: u64,
    pub diameter: u64,
    pub sandwich_lo: u64,
    pub sandwich_hi: u64,
    /// `4m - k(n-1)`, `k` the number of dominating vertices; radius one only.
    pub k_bound: Option<u64>,
    pub a_nm: Option<u64>,
    pub general_lower: Option<i64>,
    pub zagreb_upper: u64,
    #[serde(serialize_with = "ser_rational")]
    pub dd_lower: BigRational,
    /// `3(n-1)`, for `n >= 4`.
    pub star_min: Option<u64>,
    pub diameter_upper: u64,
    pub flags: BTreeMap<&'static str, BoundFlag>,
}

impl BoundsReport {
    pub fn all_hold(&self) -> bool {
        self.flags.values().all(|f| f.holds)
    }

    pub fn failing(&self) -> Vec<&'static str> {
        self.flags
            .iter()
            .filter(|(_, f)| !f.holds)
            .map(|(&k, _)| k)
            .collect()
    }
}

pub fn bounds_report(g: &Graph) -> Result<BoundsReport> {
    if g.is_weighted() {
        return Err(Error::WeightedUnsupported("bounds"));
    }
    let metrics = g.vertex_metrics()?;
    let profile = MetricProfile::from_ecc(&metrics.ecc);
    let (n, m) = (g.n() as u64, g.m() as u64);
    if n < 2 {
        return Err(Error::TooSmall { n: g.n(), min: 2 });
    }
    let eci = indices::eci_from(&metrics.degree, &metrics.ecc)?;
    let (r, d) = (profile.radius, profile.diameter);
    let mut flags = BTreeMap::new();

    let sandwich_lo = 2 * m * r;
    let sandwich_hi = 2 * m * d;
    flags.insert("sandwich_lo", BoundFlag::lower(sandwich_lo, eci));
    flags.insert("sandwich_hi", BoundFlag::upper(sandwich_hi, eci));

    let k_bound = (r == 1).then(|| {
        let k = metrics.degree.iter().filter(|&&x| x == n - 1).count() as u64;
        4 * m - k * (n - 1)
    });
    if let Some(b) = k_bound {
        flags.insert("k_bound", BoundFlag::lower(b, eci));
    }

    let a = a_nm(n, m).ok();
    let general_lower = a.map(|a| 4 * m as i64 - (a * (n - 1)) as i64);
    if let Some(b) = general_lower {
        flags.insert(
            "general_lower",
            BoundFlag {
                holds: eci as i64 >= b,
                equality: eci as i64 == b,
            },
        );
    }

    let zagreb_upper = 2 * n * m - indices::zagreb_m1(g);
    flags.insert("zagreb_upper", BoundFlag::upper(zagreb_upper, eci));

    let dd = indices::degree_distance(g)?;
    let dd_lower = BigRational::new(BigInt::from(dd), BigInt::from(n - 1));
    let lhs = eci as u128 * (n - 1) as u128;
    flags.insert(
        "dd_lower",
        BoundFlag {
            holds: lhs >= dd as u128,
            equality: lhs == dd as u128,
        },
    );

    let star_min = (n >= 4).then(|| 3 * (n - 1));
    if let Some(b) = star_min {
        flags.insert("star_min", BoundFlag::lower(b, eci));
    }

    let diameter_upper = d * (3 * n - d + 1) + (n - d + 1) * (n - d + 1) * d;
    flags.insert("diameter_upper", BoundFlag::upper(diameter_upper, eci));

    Ok(BoundsReport {
        n,
        m,
        eci,
        radius: r,
        diameter: d,
        sandwich_lo,
        sandwich_hi,
        k_bound,
        a_nm: a,
        general_lower,
        zagreb_upper,
        dd_lower,
        star_min,
        diameter_upper,
        flags,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum EqualityTag {
    #[serde(rename = "self_centered")]
    SelfCentered,
    #[serde(rename = "G_nm_class")]
    GnmClass,
    #[serde(rename = "Kn_minus_ke_or_P4")]
    KnMinusKeOrP4,
    #[serde(rename = "star")]
    Star,
    #[serde(rename = "complete")]
    Complete,
}

impl EqualityTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            EqualityTag::SelfCentered => "self_centered",
            EqualityTag::GnmClass => "G_nm_class",
            EqualityTag::KnMinusKeOrP4 => "Kn_minus_ke_or_P4",
            EqualityTag::Star => "star",
            EqualityTag::Complete => "complete",
        }
    }
}

/// Which characterized equality cases `g` falls into, read off the tight
/// bounds.
pub fn check_equality_class(g: &Graph) -> Result<BTreeSet<EqualityTag>> {
    equality_tags(&bounds_report(g)?)
}

pub fn equality_tags(report: &BoundsReport) -> Result<BTreeSet<EqualityTag>> {
    let tight = |k: &str| report.flags.get(k).is_some_and(|f| f.equality);
    let mut tags = BTreeSet::new();
    if report.radius == report.diameter {
        tags.insert(EqualityTag::SelfCentered);
    }
    if tight("general_lower") {
        tags.insert(EqualityTag::GnmClass);
    }
    if report.n >= 3 && tight("zagreb_upper") {
        tags.insert(EqualityTag::KnMinusKeOrP4);
    }
    if tight("star_min") {
        tags.insert(EqualityTag::Star);
    }
    if tight("dd_lower") {
        tags.insert(EqualityTag::Complete);
    }
    Ok(tags)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::construct::{complete, complete_minus_matching, cycle, path, star};
    use EqualityTag::*;

    fn brute_a(n: i64, m: i64) -> i64 {
        // Largest a below the vertex (2n - 1)/2 with f(a) >= 0.
        (0..=n).filter(|&a| 2 * a < 2 * n && a * a - 2 * n * a + a + 2 * m >= 0).max().unwrap()
    }

    #[test]
    fn a_nm_examples() {
        assert_eq!(a_nm(5, 5).unwrap(), 1);
        assert_eq!(a_nm(5, 6).unwrap(), 1);
        assert_eq!(a_nm(4, 5).unwrap(), 2);
        assert!(matches!(a_nm(5, 10), Err(Error::OutOfRange(_))));
        assert!(matches!(a_nm(5, 3), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn a_nm_matches_brute_force() {
        for n in 2..60u64 {
            for m in n - 1..n * (n - 1) / 2 {
                assert_eq!(a_nm(n, m).unwrap() as i64, brute_a(n as i64, m as i64), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn cycle_is_self_centered() {
        let r = bounds_report(&cycle(6).unwrap()).unwrap();
        assert_eq!((r.sandwich_lo, r.sandwich_hi, r.eci), (36, 36, 36));
        assert!(r.flags["sandwich_lo"].equality && r.flags["sandwich_hi"].equality);
        assert!(r.all_hold());
        assert_eq!(r.k_bound, None);
    }

    #[test]
    fn p4_zagreb_tight() {
        let r = bounds_report(&path(4).unwrap()).unwrap();
        assert_eq!((r.zagreb_upper, r.eci), (14, 14));
        assert!(check_equality_class(&path(4).unwrap()).unwrap().contains(&KnMinusKeOrP4));
    }

    #[test]
    fn star_plus_edge() {
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2)]).unwrap();
        let r = bounds_report(&g).unwrap();
        assert_eq!(r.general_lower, Some(19));
        assert_eq!(r.eci, 19);
        assert_eq!(r.k_bound, Some(19));
    }

    #[test]
    fn tags() {
        let k5 = check_equality_class(&complete(5).unwrap()).unwrap();
        assert_eq!(k5, BTreeSet::from([SelfCentered, Complete, KnMinusKeOrP4]));
        let s7 = check_equality_class(&star(7).unwrap()).unwrap();
        assert!(s7.contains(&Star));
        assert!(!s7.contains(&SelfCentered) && !s7.contains(&Complete));
        let k6 = check_equality_class(&complete_minus_matching(6, 2).unwrap()).unwrap();
        assert!(k6.contains(&KnMinusKeOrP4));
    }

    #[test]
    fn dd_lower_is_exact() {
        let r = bounds_report(&path(3).unwrap()).unwrap();
        // D' = 1*3 + 2*2 + 1*3 = 10, over n - 1 = 2.
        assert_eq!(rational_string(&r.dd_lower), "5");
        let r = bounds_report(&path(4).unwrap()).unwrap();
        assert_eq!(rational_string(&r.dd_lower), "28/3");
    }

    #[test]
    fn rejects_disconnected() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(bounds_report(&g), Err(Error::Disconnected));
    }
}
