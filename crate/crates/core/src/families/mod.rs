//! Named graph families, looked up by tag at runtime.
//!
//! A [`FamilySpec`] pairs a family tag with named integer (and integer-list)
//! parameters. The [`FamilyRegistry`] maps each tag to a [`Family`]
//! implementation that validates the parameters, constructs the graph, and
//! evaluates the closed-form eccentric connectivity index where one exists.

pub mod construct;
pub mod formulas;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::indices;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Params {
    ints: BTreeMap<String, i64>,
    lists: BTreeMap<String, Vec<i64>>,
}

impl Params {
    pub fn set(&mut self, key: &str, value: i64) {
        self.ints.insert(key.to_string(), value);
    }

    pub fn set_list(&mut self, key: &str, values: Vec<i64>) {
        self.lists.insert(key.to_string(), values);
    }

    pub fn get(&self, key: &str) -> Option<i64> {
        self.ints.get(key).copied()
    }

    pub fn get_list(&self, key: &str) -> Option<&[i64]> {
        self.lists.get(key).map(Vec::as_slice)
    }

    pub fn is_empty(&self) -> bool {
        self.ints.is_empty() && self.lists.is_empty()
    }
}

/// A family tag plus its parameters, e.g. `broom:n=11,delta=6` or
/// `starlike:lengths=3/1/1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    pub family: String,
    pub params: Params,
}

impl FamilySpec {
    pub fn new(family: &str) -> Self {
        FamilySpec {
            family: family.to_string(),
            params: Params::default(),
        }
    }

    pub fn with(mut self, key: &str, value: i64) -> Self {
        self.params.set(key, value);
        self
    }

    pub fn with_list(mut self, key: &str, values: &[i64]) -> Self {
        self.params.set_list(key, values.to_vec());
        self
    }

    fn bad(&self, reason: impl Into<String>) -> Error {
        Error::BadParams {
            family: self.family.clone(),
            reason: reason.into(),
        }
    }

    /// Required non-negative integer parameter.
    pub fn uint(&self, key: &str) -> Result<usize> {
        let v = self
            .params
            .get(key)
            .ok_or_else(|| self.bad(format!("missing parameter `{key}`")))?;
        usize::try_from(v).map_err(|_| self.bad(format!("`{key}` must be non-negative")))
    }

    pub fn uint_list(&self, key: &str) -> Result<Vec<usize>> {
        let v = self
            .params
            .get_list(key)
            .ok_or_else(|| self.bad(format!("missing list parameter `{key}`")))?;
        v.iter()
            .map(|&x| usize::try_from(x).map_err(|_| self.bad(format!("`{key}` entries must be non-negative"))))
            .collect()
    }

    fn require(&self, ok: bool, reason: &str) -> Result<()> {
        if ok {
            Ok(())
        } else {
            Err(self.bad(reason))
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        let mut sep = ':';
        for (k, v) in &self.params.ints {
            write!(f, "{sep}{k}={v}")?;
            sep = ',';
        }
        for (k, v) in &self.params.lists {
            let joined: Vec<String> = v.iter().map(i64::to_string).collect();
            write!(f, "{sep}{k}={}", joined.join("/"))?;
            sep = ',';
        }
        Ok(())
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let mut spec = FamilySpec::new(name.trim());
        for item in rest.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| spec.bad(format!("expected key=value, got `{item}`")))?;
            let parse = |t: &str| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| spec.bad(format!("`{k}` has non-integer value `{t}`")))
            };
            if v.contains('/') {
                let list = v.split('/').map(parse).collect::<Result<Vec<_>>>()?;
                spec.params.set_list(k.trim(), list);
            } else {
                let x = parse(v)?;
                spec.params.set(k.trim(), x);
            }
        }
        Ok(spec)
    }
}

pub trait Family: Send + Sync {
    fn name(&self) -> &'static str;

    /// Parameter names, in documentation order.
    fn params(&self) -> &'static [&'static str];

    fn build(&self, spec: &FamilySpec) -> Result<Graph>;

    fn closed_form(&self, spec: &FamilySpec) -> Result<u64> {
        Err(Error::NoClosedForm(spec.family.clone()))
    }
}

type BuildFn = fn(&FamilySpec) -> Result<Graph>;
type ClosedFn = fn(&FamilySpec) -> Result<u64>;

/// A family backed by a constructor and an optional closed form.
struct Catalogued {
    name: &'static str,
    params: &'static [&'static str],
    build: BuildFn,
    closed: Option<ClosedFn>,
}

impl Family for Catalogued {
    fn name(&self) -> &'static str {
        self.name
    }

    fn params(&self) -> &'static [&'static str] {
        self.params
    }

    fn build(&self, spec: &FamilySpec) -> Result<Graph> {
        (self.build)(spec)
    }

    fn closed_form(&self, spec: &FamilySpec) -> Result<u64> {
        match self.closed {
            Some(f) => {
                // Validate the domain through the constructor's rules first.
                self.build_checked(spec)?;
                f(spec)
            }
            None => Err(Error::NoClosedForm(spec.family.clone())),
        }
    }
}

impl Catalogued {
    fn build_checked(&self, spec: &FamilySpec) -> Result<()> {
        // Hypercubes and products are validated without materializing them.
        match self.name {
            "hypercube" => spec.require(spec.uint("n")? <= 20, "0 <= n <= 20"),
            "grid" => spec.require(spec.uint("a")? >= 1 && spec.uint("b")? >= 1, "a, b >= 1"),
            "nanotorus" => spec.require(spec.uint("a")? >= 3 && spec.uint("b")? >= 3, "a, b >= 3"),
            "nanotube" => spec.require(spec.uint("a")? >= 1 && spec.uint("b")? >= 3, "a >= 1, b >= 3"),
            _ => (self.build)(spec).map(|_| ()),
        }
    }
}

fn u(x: usize) -> u64 {
    x as u64
}

fn catalogue() -> Vec<Catalogued> {
    use construct as c;
    use formulas as f;
    vec![
        Catalogued {
            name: "complete",
            params: &["n"],
            build: |s| c::complete(s.uint("n")?),
            closed: Some(|s| Ok(f::complete(u(s.uint("n")?)))),
        },
        Catalogued {
            name: "complete_bipartite",
            params: &["a", "b"],
            build: |s| c::complete_bipartite(s.uint("a")?, s.uint("b")?),
            closed: Some(|s| {
                let (a, b) = (s.uint("a")?, s.uint("b")?);
                if a < 2 || b < 2 {
                    return Err(Error::NoClosedForm(s.family.clone()));
                }
                Ok(f::complete_bipartite(u(a), u(b)))
            }),
        },
        Catalogued {
            name: "path",
            params: &["n"],
            build: |s| c::path(s.uint("n")?),
            closed: Some(|s| Ok(f::path(u(s.uint("n")?)))),
        },
        Catalogued {
            name: "star",
            params: &["n"],
            build: |s| c::star(s.uint("n")?),
            closed: Some(|s| {
                let n = s.uint("n")?;
                if n < 3 {
                    return Err(Error::NoClosedForm(s.family.clone()));
                }
                Ok(f::star(u(n)))
            }),
        },
        Catalogued {
            name: "cycle",
            params: &["n"],
            build: |s| c::cycle(s.uint("n")?),
            closed: Some(|s| Ok(f::cycle(u(s.uint("n")?)))),
        },
        Catalogued {
            name: "hypercube",
            params: &["n"],
            build: |s| c::hypercube(s.uint("n")?),
            closed: Some(|s| Ok(f::hypercube(u(s.uint("n")?)))),
        },
        Catalogued {
            name: "lollipop",
            params: &["n", "d"],
            build: |s| c::lollipop(s.uint("n")?, s.uint("d")?),
            closed: Some(|s| Ok(f::lollipop(u(s.uint("n")?), u(s.uint("d")?)))),
        },
        Catalogued {
            name: "broom",
            params: &["n", "delta"],
            build: |s| c::broom(s.uint("n")?, s.uint("delta")?),
            closed: Some(|s| Ok(f::broom(u(s.uint("n")?), u(s.uint("delta")?)))),
        },
        Catalogued {
            name: "volkmann",
            params: &["n", "delta"],
            build: |s| c::volkmann(s.uint("n")?, s.uint("delta")?),
            closed: None,
        },
        Catalogued {
            name: "balanced_starlike",
            params: &["n", "p"],
            build: |s| c::balanced_starlike(s.uint("n")?, s.uint("p")?),
            closed: None,
        },
        Catalogued {
            name: "starlike",
            params: &["lengths"],
            build: |s| c::starlike(&s.uint_list("lengths")?),
            closed: None,
        },
        Catalogued {
            name: "spur",
            params: &["n", "m"],
            build: |s| c::spur(s.uint("n")?, s.uint("m")?),
            closed: Some(|s| Ok(f::spur(u(s.uint("n")?), u(s.uint("m")?)))),
        },
        Catalogued {
            name: "double_star",
            params: &["a", "b"],
            build: |s| c::double_star(s.uint("a")?, s.uint("b")?),
            closed: Some(|s| Ok(f::double_star(u(s.uint("a")? + s.uint("b")?)))),
        },
        Catalogued {
            name: "caterpillar",
            params: &["n", "d", "pendants"],
            build: |s| {
                let (n, d) = (s.uint("n")?, s.uint("d")?);
                let pendants = s.uint_list("pendants")?;
                s.require(d >= 2 && d + 2 <= n, "2 <= d <= n - 2")?;
                s.require(
                    pendants.iter().sum::<usize>() + d + 1 == n,
                    "pendant counts must sum to n - d - 1",
                )?;
                c::caterpillar(d, &pendants)
            },
            closed: None,
        },
        Catalogued {
            name: "caterpillar_Cndi",
            params: &["n", "d", "i"],
            build: |s| c::caterpillar_cndi(s.uint("n")?, s.uint("d")?, s.uint("i")?),
            closed: Some(|s| {
                let (n, d, i) = (s.uint("n")?, s.uint("d")?, s.uint("i")?);
                if i != d / 2 {
                    return Err(Error::NoClosedForm(s.family.clone()));
                }
                Ok(f::caterpillar_central(u(n), u(d)))
            }),
        },
        Catalogued {
            name: "unicyclic_H",
            params: &["counts"],
            build: |s| c::unicyclic_h(&s.uint_list("counts")?),
            closed: None,
        },
        Catalogued {
            name: "unicyclic_Hnk",
            params: &["n", "k"],
            build: |s| c::unicyclic_hnk(s.uint("n")?, s.uint("k")?),
            closed: Some(|s| Ok(f::unicyclic_hnk(u(s.uint("n")?), u(s.uint("k")?)))),
        },
        Catalogued {
            name: "unicyclic_L",
            params: &["lengths"],
            build: |s| c::unicyclic_l(&s.uint_list("lengths")?),
            closed: None,
        },
        Catalogued {
            name: "unicyclic_Lnk",
            params: &["n", "k"],
            build: |s| c::unicyclic_lnk(s.uint("n")?, s.uint("k")?),
            closed: None,
        },
        Catalogued {
            name: "complete_minus_matching",
            params: &["n", "k"],
            build: |s| c::complete_minus_matching(s.uint("n")?, s.uint("k")?),
            closed: Some(|s| Ok(f::complete_minus_matching(u(s.uint("n")?), u(s.uint("k")?)))),
        },
        Catalogued {
            name: "grid",
            params: &["a", "b"],
            build: |s| c::grid(s.uint("a")?, s.uint("b")?),
            closed: Some(|s| Ok(f::grid(u(s.uint("a")?), u(s.uint("b")?)))),
        },
        Catalogued {
            name: "nanotorus",
            params: &["a", "b"],
            build: |s| c::nanotorus(s.uint("a")?, s.uint("b")?),
            closed: Some(|s| Ok(f::nanotorus(u(s.uint("a")?), u(s.uint("b")?)))),
        },
        Catalogued {
            name: "nanotube",
            params: &["a", "b"],
            build: |s| c::nanotube(s.uint("a")?, s.uint("b")?),
            closed: Some(|s| Ok(f::nanotube(u(s.uint("a")?), u(s.uint("b")?)))),
        },
    ]
}

pub struct FamilyRegistry {
    entries: BTreeMap<&'static str, Box<dyn Family>>,
}

impl FamilyRegistry {
    pub fn empty() -> Self {
        FamilyRegistry {
            entries: BTreeMap::new(),
        }
    }

    pub fn register(&mut self, family: Box<dyn Family>) {
        self.entries.insert(family.name(), family);
    }

    pub fn get(&self, name: &str) -> Result<&dyn Family> {
        self.entries
            .get(name)
            .map(|b| b.as_ref())
            .ok_or_else(|| Error::UnknownFamily(name.to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Family> {
        self.entries.values().map(|b| b.as_ref())
    }

    /// The registry with every built-in family.
    pub fn global() -> &'static FamilyRegistry {
        static REGISTRY: OnceLock<FamilyRegistry> = OnceLock::new();
        REGISTRY.get_or_init(FamilyRegistry::default)
    }
}

impl Default for FamilyRegistry {
    fn default() -> Self {
        let mut r = FamilyRegistry::empty();
        for f in catalogue() {
            r.register(Box::new(f));
        }
        r
    }
}

pub fn build(spec: &FamilySpec) -> Result<Graph> {
    FamilyRegistry::global().get(&spec.family)?.build(spec)
}

pub fn closed_form_eci(spec: &FamilySpec) -> Result<u64> {
    FamilyRegistry::global().get(&spec.family)?.closed_form(spec)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Agreement {
    Agree { value: u64 },
    Disagree { oracle: u64, formula: u64 },
}

impl Agreement {
    pub fn agrees(&self) -> bool {
        matches!(self, Agreement::Agree { .. })
    }
}

/// Builds the graph, computes the index by shortest-path sweeps, and
/// compares it with the closed form.
pub fn oracle_vs_closed_form(spec: &FamilySpec) -> Result<Agreement> {
    let formula = closed_form_eci(spec)?;
    let oracle = indices::eci(&build(spec)?)?;
    Ok(if oracle == formula {
        Agreement::Agree { value: oracle }
    } else {
        Agreement::Disagree { oracle, formula }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> FamilySpec {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        let s = spec("broom:n=11,delta=6");
        assert_eq!(s.family, "broom");
        assert_eq!(s.uint("delta").unwrap(), 6);
        assert_eq!(s.to_string(), "broom:delta=6,n=11");
        let s = spec("starlike:lengths=3/1/1");
        assert_eq!(s.uint_list("lengths").unwrap(), vec![3, 1, 1]);
        assert!(matches!("broom:n=x".parse::<FamilySpec>(), Err(Error::BadParams { .. })));
    }

    #[test]
    fn unknown_and_missing() {
        assert_eq!(
            build(&spec("petersen:n=10")),
            Err(Error::UnknownFamily("petersen".into()))
        );
        assert!(matches!(build(&spec("broom:n=11")), Err(Error::BadParams { .. })));
        assert!(matches!(build(&spec("path:n=-2")), Err(Error::BadParams { .. })));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_eci(&spec("hypercube:n=3")).unwrap(), 72);
        assert_eq!(closed_form_eci(&spec("caterpillar_Cndi:n=7,d=4,i=2")).unwrap(), 34);
        assert_eq!(closed_form_eci(&spec("unicyclic_Hnk:n=9,k=4")).unwrap(), 43);
        assert_eq!(
            closed_form_eci(&spec("volkmann:n=10,delta=3")),
            Err(Error::NoClosedForm("volkmann".into()))
        );
        assert_eq!(
            closed_form_eci(&spec("caterpillar_Cndi:n=7,d=4,i=1")),
            Err(Error::NoClosedForm("caterpillar_Cndi".into()))
        );
        assert!(matches!(
            closed_form_eci(&spec("broom:n=5,delta=4")),
            Err(Error::BadParams { .. })
        ));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(
            oracle_vs_closed_form(&spec("grid:a=2,b=2")).unwrap(),
            Agreement::Agree { value: 16 }
        );
        assert_eq!(
            oracle_vs_closed_form(&spec("spur:n=8,m=4")).unwrap(),
            Agreement::Agree { value: 41 }
        );
        assert_eq!(
            oracle_vs_closed_form(&spec("lollipop:n=12,d=4")).unwrap(),
            Agreement::Disagree {
                oracle: 302,
                formula: 297
            }
        );
        assert_eq!(
            oracle_vs_closed_form(&spec("broom:n=11,delta=6")).unwrap(),
            Agreement::Agree { value: 98 }
        );
    }

    #[test]
    fn double_stars_share_a_value() {
        for n in 4..16usize {
            for a in 2..=n / 2 {
                let g = construct::double_star(a, n - a).unwrap();
                assert_eq!(indices::eci(&g).unwrap(), formulas::double_star(n as u64));
            }
        }
    }

    #[test]
    fn complete_minus_matching_is_zagreb_tight() {
        for n in 3..10usize {
            for k in 0..=n / 2 {
                let g = construct::complete_minus_matching(n, k).unwrap();
                let bound = 2 * (n * g.m()) as u64 - indices::zagreb_m1(&g);
                assert_eq!(indices::eci(&g).unwrap(), bound);
            }
        }
    }

    #[test]
    fn every_family_is_registered() {
        let names: Vec<_> = FamilyRegistry::global().iter().map(|f| f.name()).collect();
        for tag in [
            "complete", "complete_bipartite", "path", "star", "cycle", "hypercube", "lollipop",
            "broom", "volkmann", "balanced_starlike", "starlike", "spur", "double_star",
            "caterpillar", "caterpillar_Cndi", "unicyclic_H", "unicyclic_Hnk", "unicyclic_L",
            "unicyclic_Lnk", "complete_minus_matching", "grid", "nanotorus", "nanotube",
        ] {
            assert!(names.contains(&tag), "{tag}");
        }
    }
}
