//! Extremal suites: each filters the enumerated graphs of one order by a
//! structural parameter, finds the extreme index values and their witnesses,
//! and compares them with the predicted extremal families.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use serde::Serialize;

use super::canon::canonical_form;
use super::invariants::{independence_number_tree, matching_number_tree};
use super::{trees, unicyclic, EnumConfig};
use crate::error::{Error, Result};
use crate::families::{construct as c, formulas as f};
use crate::graph::{Graph, MetricProfile};
use crate::indices;

#[derive(Debug, Clone)]
pub struct TreeRecord {
    pub graph: Graph,
    pub canon: String,
    pub eci: u64,
    pub pendent: usize,
    pub max_degree: usize,
    pub matching: usize,
    pub independence: usize,
    pub diameter: u64,
    pub radius: u64,
}

#[derive(Debug, Clone)]
pub struct UnicyclicRecord {
    pub graph: Graph,
    pub canon: String,
    pub eci: u64,
    pub girth: usize,
}

/// Enumerated graphs of one order with their parameters, computed on first
/// use.
pub struct Catalog {
    pub n: usize,
    cfg: EnumConfig,
    trees: OnceLock<Result<Vec<TreeRecord>>>,
    unicyclic: OnceLock<Result<Vec<UnicyclicRecord>>>,
}

impl Catalog {
    pub fn new(n: usize, cfg: EnumConfig) -> Self {
        Catalog {
            n,
            cfg,
            trees: OnceLock::new(),
            unicyclic: OnceLock::new(),
        }
    }

    pub fn trees(&self) -> Result<&[TreeRecord]> {
        self.trees
            .get_or_init(|| {
                self.cfg.check_trees(self.n)?;
                trees::FreeTrees::new(self.n)
                    .map(|(_, t)| {
                        let metrics = t.vertex_metrics()?;
                        let profile = MetricProfile::from_ecc(&metrics.ecc);
                        Ok(TreeRecord {
                            canon: canonical_form(&t)?.to_string(),
                            eci: indices::eci_from(&metrics.degree, &metrics.ecc)?,
                            pendent: t.pendent_count(),
                            max_degree: t.max_degree(),
                            matching: matching_number_tree(&t)?,
                            independence: independence_number_tree(&t)?,
                            diameter: profile.diameter,
                            radius: profile.radius,
                            graph: t,
                        })
                    })
                    .collect()
            })
            .as_deref()
            .map_err(Clone::clone)
    }

    pub fn unicyclic(&self) -> Result<&[UnicyclicRecord]> {
        self.unicyclic
            .get_or_init(|| {
                self.cfg.check_unicyclic(self.n)?;
                unicyclic::unicyclic_graphs(self.n)
                    .into_iter()
                    .map(|(codes, g)| {
                        Ok(UnicyclicRecord {
                            canon: canonical_form(&g)?.to_string(),
                            eci: indices::eci(&g)?,
                            girth: codes.len(),
                            graph: g,
                        })
                    })
                    .collect()
            })
            .as_deref()
            .map_err(Clone::clone)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Constraint {
    pub tag: &'static str,
    pub value: Option<u64>,
}

/// What the extremal results predict. Absent fields are not checked.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub family: String,
    pub min_value: Option<u64>,
    pub max_value: Option<u64>,
    pub min_witnesses: Option<Vec<String>>,
    pub max_witnesses: Option<Vec<String>>,
    /// A graph that must be among the minimizers (used when only the value
    /// is predicted).
    pub min_includes: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Match,
    Mismatch,
    /// Nothing was predicted; the extremes are reported only.
    Reported,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalReport {
    pub suite: &'static str,
    pub constraint: Constraint,
    pub n: usize,
    pub members: usize,
    pub min_value: u64,
    pub max_value: u64,
    pub min_witnesses: Vec<String>,
    pub max_witnesses: Vec<String>,
    pub expected: Expected,
    pub verdict: Verdict,
    pub failures: Vec<String>,
}

impl ExtremalReport {
    /// Extremes of `(value, canonical form)` pairs; `None` for an empty
    /// class.
    pub fn observe<'a, I>(
        suite: &'static str,
        constraint: Constraint,
        n: usize,
        items: I,
        expected: Expected,
    ) -> Option<ExtremalReport>
    where
        I: IntoIterator<Item = (u64, &'a str)>,
    {
        let items: Vec<(u64, &str)> = items.into_iter().collect();
        let min_value = items.iter().map(|x| x.0).min()?;
        let max_value = items.iter().map(|x| x.0).max()?;
        let witnesses = |v: u64| -> Vec<String> {
            let set: BTreeSet<&str> = items.iter().filter(|x| x.0 == v).map(|x| x.1).collect();
            set.into_iter().map(str::to_string).collect()
        };
        let mut report = ExtremalReport {
            suite,
            constraint,
            n,
            members: items.len(),
            min_value,
            max_value,
            min_witnesses: witnesses(min_value),
            max_witnesses: witnesses(max_value),
            expected,
            verdict: Verdict::Reported,
            failures: Vec::new(),
        };
        report.judge();
        Some(report)
    }

    fn judge(&mut self) {
        let e = &self.expected;
        let mut checked = false;
        let mut failures = Vec::new();
        let mut value = |what: &str, want: Option<u64>, got: u64| {
            if let Some(w) = want {
                checked = true;
                if w != got {
                    failures.push(format!("{what}: expected {w}, found {got}"));
                }
            }
        };
        value("min value", e.min_value, self.min_value);
        value("max value", e.max_value, self.max_value);
        for (what, want, got) in [
            ("min witnesses", &e.min_witnesses, &self.min_witnesses),
            ("max witnesses", &e.max_witnesses, &self.max_witnesses),
        ] {
            if let Some(w) = want {
                checked = true;
                if w != got {
                    failures.push(format!("{what}: expected {w:?}, found {got:?}"));
                }
            }
        }
        if let Some(x) = &e.min_includes {
            checked = true;
            if !self.min_witnesses.contains(x) {
                failures.push(format!("min witnesses do not include {x}"));
            }
        }
        self.verdict = if !failures.is_empty() {
            Verdict::Mismatch
        } else if checked {
            Verdict::Match
        } else {
            Verdict::Reported
        };
        self.failures.extend(failures);
    }

    /// Adds a failure found outside the min/max comparison.
    pub fn fail(&mut self, why: String) {
        self.failures.push(why);
        self.verdict = Verdict::Mismatch;
    }
}

fn canon(g: Result<Graph>) -> Result<String> {
    Ok(canonical_form(&g?)?.to_string())
}

/// Sorted, deduplicated canonical forms of a predicted family.
fn canon_set(graphs: impl IntoIterator<Item = Result<Graph>>) -> Result<Vec<String>> {
    let set = graphs.into_iter().map(canon).collect::<Result<BTreeSet<_>>>()?;
    Ok(set.into_iter().collect())
}

fn value_of(g: Result<Graph>) -> Result<u64> {
    indices::eci(&g?)
}

pub trait ExtremalSuite: Send + Sync {
    fn name(&self) -> &'static str;

    fn describe(&self) -> &'static str;

    /// One report per admissible parameter value at order `cat.n`; empty
    /// when the order is below the suite's range.
    fn run(&self, cat: &Catalog) -> Result<Vec<ExtremalReport>>;
}

fn by_param(
    records: &[TreeRecord],
    key: impl Fn(&TreeRecord) -> u64,
) -> BTreeMap<u64, Vec<&TreeRecord>> {
    let mut map: BTreeMap<u64, Vec<&TreeRecord>> = BTreeMap::new();
    for r in records {
        map.entry(key(r)).or_default().push(r);
    }
    map
}

fn pairs<'a>(rs: &'a [&'a TreeRecord]) -> impl Iterator<Item = (u64, &'a str)> + 'a {
    rs.iter().map(|r| (r.eci, r.canon.as_str()))
}

fn double_stars(n: usize) -> Vec<Result<Graph>> {
    (2..=n / 2).map(|a| c::double_star(a, n - a)).collect()
}

pub struct GlobalSuite;

impl ExtremalSuite for GlobalSuite {
    fn name(&self) -> &'static str {
        "global"
    }

    fn describe(&self) -> &'static str {
        "all trees: minimum at the star, maximum at the path"
    }

    fn run(&self, cat: &Catalog) -> Result<Vec<ExtremalReport>> {
        let n = cat.n;
        if n < 2 {
            return Ok(Vec::new());
        }
        let all = cat.trees()?;
        let expected = Expected {
            family: "min S_n, max P_n".into(),
            min_value: Some(value_of(c::star(n))?),
            max_value: Some(f::path(n as u64)),
            min_witnesses: Some(vec![canon(c::star(n))?]),
            max_witnesses: Some(vec![canon(c::path(n))?]),
            ..Expected::default()
        };
        let constraint = Constraint { tag: "none", value: None };
        Ok(ExtremalReport::observe(self.name(), constraint, n, all.iter().map(|r| (r.eci, r.canon.as_str())), expected)
            .into_iter()
            .collect())
    }
}

pub struct SecondSuite;

impl ExtremalSuite for SecondSuite {
    fn name(&self) -> &'static str {
        "second"
    }

    fn describe(&self) -> &'static str {
        "second-largest value at B_{n,3} (n >= 8); second-smallest reported"
    }

    fn run(&self, cat: &Catalog) -> Result<Vec<ExtremalReport>> {
        let n = cat.n;
        if n < 4 {
            return Ok(Vec::new());
        }
        let all = cat.trees()?;
        let lo = all.iter().map(|r| r.eci).min().unwrap_or(0);
        let hi = all.iter().map(|r| r.eci).max().unwrap_or(0);
        let inner: Vec<&TreeRecord> = all.iter().filter(|r| r.eci != lo && r.eci != hi).collect();
        let mut expected = Expected {
            family: "second max B_{n,3}".into(),
            ..Expected::default()
        };
        if n >= 8 {
            let n64 = n as u64;
            expected.max_value = Some(3 * (n64 - 1) * (n64 - 1) / 2 - n64);
            expected.max_witnesses = Some(vec![canon(c::broom(n, 3))?]);
        }
        let constraint = Constraint { tag: "second", value: None };
        let mut report = ExtremalReport::observe(self.name(), constraint, n, pairs(&inner), expected);
        if let (Some(r), true) = (report.as_mut(), n >= 8) {
            if f::broom(n as u64, 3) != r.expected.max_value.unwrap_or(0) {
                r.fail("broom closed form disagrees with the second-maximum value".into());
            }
        }
        Ok(report.into_iter().collect())
    }
}

/// `a` pendant paths of length `k` at one center and `p - a` at the other.
fn bicentral_spider(p: usize, k: usize, a: usize) -> Result<Graph> {
    let mut edges = vec![(0usize, 1usize)];
    let mut next = 2;
    for (center, count) in [(0, a), (1, p - a)] {
        for _ in 0..count {
            let mut prev = center;
            for _ in 0..k {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
    }
    Graph::from_edges(next, &edges)
}

pub struct PendentSuite;

impl ExtremalSuite for PendentSuite {
    fn name(&self) -> &'static str {
        "pendent"
    }

    fn describe(&self) -> &'static str {
        "p pendent vertices: minimum SB_{n,p}, maximum T^(n,p)"
    }

    fn run(&self, cat: &Catalog) -> Result<Vec<ExtremalReport>> {
        let n = cat.n;
        if n < 3 {
            return Ok(Vec::new());
        }
        let groups = by_param(cat.trees()?, |r| r.pendent as u64);
        let mut out = Vec::new();
        for p in 2..n {
            let Some(members) = groups.get(&(p as u64)) else {
                continue;
            };
            let sb = c::balanced_starlike(n, p);
            let min_witnesses = if p > 2 && p < n - 1 && (n - 2).is_multiple_of(p) {
                canon_set((1..=p / 2).map(|a| bicentral_spider(p, (n - 2) / p, a)))?
            } else {
                vec![canon(sb.clone())?]
            };
            let expected = Expected {
                family: "min SB_{n,p}, max T^(n,p)".into(),
                min_value: Some(value_of(sb)?),
                max_value: Some(f::pendent_max(n as u64, p as u64)),
                min_witnesses: Some(min_witnesses),
                max_witnesses: Some(canon_set((1..=p / 2).map(|a| c::pendent_max_tree(n, p, a)))?),
                ..Expected::default()
            };
            let constraint = Constraint { tag: "p", value: Some(p as u64) };
            out.extend(ExtremalReport::observe(self.name(), constraint, n, pairs(members), expected));
        }
        Ok(out)
    }
}

pub struct DegreeSuite;

impl ExtremalSuite for DegreeSuite {
    fn name(&self) -> &'static str {
        "degree"
    }

    fn describe(&self) -> &'static str {
        "maximum degree Δ: maximum at the broom (unique), minimum value at the Volkmann tree"
    }

    fn run(&self, cat: &Catalog) -> Result<Vec<ExtremalReport>> {
        let n = cat.n;
        if n < 5 {
            return Ok(Vec::new());
        }
        let groups = by_param(cat.trees()?, |r| r.max_degree as u64);
        let mut out = Vec::new();
        for delta in 3..=n - 2 {
            let Some(members) = groups.get(&(delta as u64)) else {
                continue;
            };
            let vt = c::volkmann(n, delta);
            let expected = Expected {
                family: "max B_{n,Δ}, min VT(n,Δ)".into(),
                min_value: Some(value_of(vt.clone())?),
                max_value: Some(f::broom(n as u64, delta as u64)),
                max_witnesses: Some(vec![canon(c::broom(n, delta))?]),
                min_includes: Some(canon(vt)?),
                ..Expected::default()
            };
            let constraint = Constraint { tag: "delta", value: Some(delta as u64) };
            out.extend(ExtremalReport::observe(self.name(), constraint, n, pairs(members), expected));
        }
        Ok(out)
    }
}

pub struct MatchingSuite;

impl ExtremalSuite for MatchingSuite {
    fn name(&self) -> &'static str {
        "matching"
    }

    fn describe(&self) -> &'static str {
        "matching number β: minimum at A_{n,n-β}; all double stars when β = 2"
    }

    fn run(&self, cat: &Catalog) -> Result<Vec<ExtremalReport>> {
        let n = cat.n;
        if n < 3 {
            return Ok(Vec::new());
        }
        let groups = by_param(cat.trees()?, |r| r.matching as u64);
        let mut out = Vec::new();
        for beta in 1..=n / 2 {
            let Some(members) = groups.get(&(beta as u64)) else {
                continue;
            };
            let spur = c::spur(n, n - beta);
            let witnesses = if beta == 2 {
                canon_set(double_stars(n))?
            } else {
                vec![canon(spur)?]
            };
            let expected = Expected {
                family: if beta == 2 { "min double stars S_{a,b}" } else { "min A_{n,n-β}" }.into(),
                min_value: Some(f::spur(n as u64, (n - beta) as u64)),
                min_witnesses: Some(witnesses),
                ..Expected::default()
            };
            let constraint = Constraint { tag: "beta", value: Some(beta as u64) };
            let mut report = ExtremalReport::observe(self.name(), constraint, n, pairs(members), expected);
            if let Some(r) = report.as_mut() {
                if 2 * beta == n && n > 4 && r.min_value != 6 * n as u64 - 7 {
                    r.fail(format!("perfect matching minimum {} is not 6n - 7", r.min_value));
                }
            }
            out.extend(report);
        }
        Ok(out)
    }
}

pub struct IndependenceSuite;

impl ExtremalSuite for IndependenceSuite {
    fn name(&self) -> &'static str {
        "independence"
    }

    fn describe(&self) -> &'static str {
        "independence number α: minimum at A_{n,α}; all double stars when α = n - 2"
    }

    fn run(&self, cat: &Catalog) -> Result<Vec<ExtremalReport>> {
        let n = cat.n;
        if n < 3 {
            return Ok(Vec::new());
        }
        let groups = by_param(cat.trees()?, |r| r.independence as u64);
        let mut out = Vec::new();
        for alpha in n.div_ceil(2)..n {
            let Some(members) = groups.get(&(alpha as u64)) else {
                continue;
            };
            let witnesses = if alpha + 2 == n {
                canon_set(double_stars(n))?
            } else {
                vec![canon(c::spur(n, alpha))?]
            };
            let expected = Expected {
                family: if alpha + 2 == n { "min double stars S_{a,b}" } else { "min A_{n,α}" }.into(),
                min_value: Some(f::spur(n as u64, alpha as u64)),
                min_witnesses: Some(witnesses),
                ..Expected::default()
            };
            let constraint = Constraint { tag: "alpha", value: Some(alpha as u64) };
            out.extend(ExtremalReport::observe(self.name(), constraint, n, pairs(members), expected));
        }
        Ok(out)
    }
}

/// Canonical forms of `T_(n,d)`.
fn diameter_min_set(n: usize, d: usize) -> Result<Vec<String>> {
    canon_set((0..n - d).map(|j| c::diameter_min_tree(n, d, j)))
}

pub struct DiameterSuite;

impl ExtremalSuite for DiameterSuite {
    fn name(&self) -> &'static str {
        "diameter"
    }

    fn describe(&self) -> &'static str {
        "diameter d: minimum exactly on T_(n,d)"
    }

    fn run(&self, cat: &Catalog) -> Result<Vec<ExtremalReport>> {
        let n = cat.n;
        if n < 3 {
            return Ok(Vec::new());
        }
        let groups = by_param(cat.trees()?, |r| r.diameter);
        let mut out = Vec::new();
        for d in 2..n {
            let Some(members) = groups.get(&(d as u64)) else {
                continue;
            };
            let set = diameter_min_set(n, d)?;
            let value = if d + 1 == n {
                f::path(n as u64)
            } else {
                f::caterpillar_central(n as u64, d as u64)
            };
            let multiplicity = if d + 1 == n || d % 2 == 0 { 1 } else { (n - d).div_ceil(2) };
            let expected = Expected {
                family: "min T_(n,d)".into(),
                min_value: Some(value),
                min_witnesses: Some(set.clone()),
                ..Expected::default()
            };
            let constraint = Constraint { tag: "d", value: Some(d as u64) };
            let mut report = ExtremalReport::observe(self.name(), constraint, n, pairs(members), expected);
            if let Some(r) = report.as_mut() {
                if set.len() != multiplicity {
                    r.fail(format!("T_(n,d) has {} members, stated {multiplicity}", set.len()));
                }
            }
            out.extend(report);
        }
        Ok(out)
    }
}

pub struct RadiusSuite;

impl ExtremalSuite for RadiusSuite {
    fn name(&self) -> &'static str {
        "radius"
    }

    fn describe(&self) -> &'static str {
        "radius r: minimum exactly on T_(n,2r-1)"
    }

    fn run(&self, cat: &Catalog) -> Result<Vec<ExtremalReport>> {
        let n = cat.n;
        if n < 4 {
            return Ok(Vec::new());
        }
        let groups = by_param(cat.trees()?, |r| r.radius);
        let mut out = Vec::new();
        for r in 2..=n / 2 {
            let Some(members) = groups.get(&(r as u64)) else {
                continue;
            };
            let d = 2 * r - 1;
            let expected = Expected {
                family: "min T_(n,2r-1)".into(),
                min_value: Some(value_of(c::diameter_min_tree(n, d, 0))?),
                min_witnesses: Some(diameter_min_set(n, d)?),
                ..Expected::default()
            };
            let constraint = Constraint { tag: "r", value: Some(r as u64) };
            out.extend(ExtremalReport::observe(self.name(), constraint, n, pairs(members), expected));
        }
        Ok(out)
    }
}

pub struct GirthSuite;

impl ExtremalSuite for GirthSuite {
    fn name(&self) -> &'static str {
        "girth"
    }

    fn describe(&self) -> &'static str {
        "unicyclic graphs of girth k: minimum H_{n,k}, maximum L_{n,k}, both unique"
    }

    fn run(&self, cat: &Catalog) -> Result<Vec<ExtremalReport>> {
        let n = cat.n;
        if n < 3 {
            return Ok(Vec::new());
        }
        let all = cat.unicyclic()?;
        let mut out = Vec::new();
        for k in 3..=n {
            let members: Vec<(u64, &str)> = all
                .iter()
                .filter(|r| r.girth == k)
                .map(|r| (r.eci, r.canon.as_str()))
                .collect();
            let lnk = c::unicyclic_lnk(n, k);
            let expected = Expected {
                family: "min H_{n,k}, max L_{n,k}".into(),
                min_value: Some(f::unicyclic_hnk(n as u64, k as u64)),
                max_value: Some(value_of(lnk.clone())?),
                min_witnesses: Some(vec![canon(c::unicyclic_hnk(n, k))?]),
                max_witnesses: Some(vec![canon(lnk)?]),
                ..Expected::default()
            };
            let constraint = Constraint { tag: "k", value: Some(k as u64) };
            out.extend(ExtremalReport::observe(self.name(), constraint, n, members, expected));
        }
        Ok(out)
    }
}

pub struct SuiteRegistry {
    entries: BTreeMap<&'static str, Box<dyn ExtremalSuite>>,
}

impl SuiteRegistry {
    pub fn empty() -> Self {
        SuiteRegistry {
            entries: BTreeMap::new(),
        }
    }

    pub fn register(&mut self, suite: Box<dyn ExtremalSuite>) {
        self.entries.insert(suite.name(), suite);
    }

    pub fn get(&self, name: &str) -> Result<&dyn ExtremalSuite> {
        self.entries
            .get(name)
            .map(|b| b.as_ref())
            .ok_or_else(|| Error::UnknownSuite(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.entries.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn ExtremalSuite> {
        self.entries.values().map(|b| b.as_ref())
    }
}

impl Default for SuiteRegistry {
    fn default() -> Self {
        let mut r = SuiteRegistry::empty();
        r.register(Box::new(GlobalSuite));
        r.register(Box::new(SecondSuite));
        r.register(Box::new(PendentSuite));
        r.register(Box::new(DegreeSuite));
        r.register(Box::new(MatchingSuite));
        r.register(Box::new(IndependenceSuite));
        r.register(Box::new(DiameterSuite));
        r.register(Box::new(RadiusSuite));
        r.register(Box::new(GirthSuite));
        r
    }
}

/// Runs one named suite at order `n` with the environment's guards.
pub fn verify_extremal(suite: &str, n: usize) -> Result<Vec<ExtremalReport>> {
    let registry = SuiteRegistry::default();
    let s = registry.get(suite)?;
    s.run(&Catalog::new(n, EnumConfig::from_env()))
}
