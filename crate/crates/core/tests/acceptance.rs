//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

mod common;

use std::time::{Duration, Instant};

use common::{oracle_eci, oracle_zeta};
use eccentric::bounds::bounds_report;
use eccentric::enumerate::{enumerate_trees, enumerate_unicyclic, verify_extremal, Verdict};
use eccentric::families::construct::{balanced_starlike, broom, caterpillar_cndi, lollipop, path, star};
use eccentric::families::{build, closed_form_eci, formulas, FamilyRegistry, FamilySpec};
use eccentric::product::{cartesian_product, eci_by_decomposition};
use eccentric::random::{random_connected, random_tree, random_weighted_tree};
use eccentric::transforms::{
    attach_at, delta_candidate, delta_hypothesis, delta_transform_toward, pi_shift, PendantPathPair,
};
use eccentric::{eci, eci_tree, Graph};
use rand::{rngs::StdRng, Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn closed_form_grid() -> Vec<FamilySpec> {
    let s = FamilySpec::new;
    let mut v = Vec::new();
    for n in 1..=12 {
        v.push(s("complete").with("n", n));
    }
    for a in 2..=8 {
        for b in 2..=8 {
            v.push(s("complete_bipartite").with("a", a).with("b", b));
        }
    }
    for n in 1..=60 {
        v.push(s("path").with("n", n));
    }
    for n in 3..=60 {
        v.push(s("star").with("n", n));
        v.push(s("cycle").with("n", n));
    }
    for n in 0..=10 {
        v.push(s("hypercube").with("n", n));
    }
    for n in 5..=30 {
        for delta in 3..=n - 2 {
            v.push(s("broom").with("n", n).with("delta", delta));
        }
    }
    for n in 3..=30i64 {
        for m in (n - 1) / 2 + 1..=n - 1 {
            v.push(s("spur").with("n", n).with("m", m));
        }
    }
    for n in 4..=30 {
        for d in 2..=n - 2 {
            v.push(s("caterpillar_Cndi").with("n", n).with("d", d).with("i", d / 2));
        }
    }
    for n in 4..=20 {
        for k in 3..=n - 1 {
            v.push(s("unicyclic_Hnk").with("n", n).with("k", k));
        }
    }
    for n in 1..=12 {
        for k in 0..=n / 2 {
            if !(n == 2 && k == 1) {
                v.push(s("complete_minus_matching").with("n", n).with("k", k));
            }
        }
    }
    for a in 2..=9 {
        for b in 2..=9 {
            v.push(s("grid").with("a", a).with("b", b));
            if b >= 3 {
                v.push(s("nanotube").with("a", a).with("b", b));
                if a >= 3 {
                    v.push(s("nanotorus").with("a", a).with("b", b));
                }
            }
        }
    }
    v
}

fn criterion_closed_forms() -> Outcome {
    let specs = closed_form_grid();
    for spec in &specs {
        let g = build(spec).map_err(|e| format!("{spec}: {e}"))?;
        let formula = closed_form_eci(spec).map_err(|e| format!("{spec}: {e}"))?;
        let oracle = oracle_eci(&g);
        if formula != oracle {
            return Err(format!("{spec}: oracle {oracle}, closed form {formula}"));
        }
    }
    Ok(format!("{} parameter points, all exact", specs.len()))
}

fn criterion_lollipop() -> Outcome {
    let g = lollipop(12, 4).map_err(|e| e.to_string())?;
    let oracle = oracle_eci(&g);
    let formula = formulas::lollipop(12, 4);
    if oracle != 302 {
        return Err(format!("LP(12,4) oracle {oracle}, expected 302"));
    }
    let note = if formula == oracle { "agrees" } else { "MISMATCH flagged" };
    Ok(format!("LP(12,4) oracle 302, printed formula {formula} ({note})"))
}

fn time_min(g: &Graph, reps: usize) -> Result<Duration, String> {
    let mut best = Duration::MAX;
    for _ in 0..reps {
        let t0 = Instant::now();
        std::hint::black_box(eci_tree(g).map_err(|e| e.to_string())?);
        best = best.min(t0.elapsed());
    }
    Ok(best)
}

fn criterion_linear() -> Outcome {
    let mut rng = StdRng::seed_from_u64(2024);
    for i in 0..1000 {
        let n = rng.random_range(1..=200);
        let t = random_weighted_tree(&mut rng, n, 1..=10).map_err(|e| e.to_string())?;
        let (ours, oracle) = (eci_tree(&t).map_err(|e| e.to_string())?, oracle_eci(&t));
        if ours != oracle {
            return Err(format!("tree {i} (n = {n}): linear {ours}, oracle {oracle}"));
        }
    }
    let mut timings = Vec::new();
    for (shape, make) in [("path", path as fn(usize) -> _), ("star", star)] {
        let small = make(100_000).map_err(|e| e.to_string())?;
        let large = make(1_000_000).map_err(|e| e.to_string())?;
        let ts = time_min(&small, 5)?;
        let tl = time_min(&large, 3)?;
        let ratio = tl.as_secs_f64() / ts.as_secs_f64();
        if tl > Duration::from_secs(5) || ratio > 20.0 {
            return Err(format!("{shape}: 1e6 in {tl:?}, ratio {ratio:.1}"));
        }
        timings.push(format!("{shape} 1e6 {:.0} ms ratio {ratio:.1}", tl.as_secs_f64() * 1e3));
    }
    Ok(format!("1000 weighted trees exact; {}", timings.join(", ")))
}

fn criterion_bounds() -> Outcome {
    let mut count = 0;
    let mut check = |g: &Graph, what: &str| -> Result<(), String> {
        let r = bounds_report(g).map_err(|e| format!("{what}: {e}"))?;
        count += 1;
        if r.all_hold() {
            Ok(())
        } else {
            Err(format!("{what}: {:?} fail", r.failing()))
        }
    };
    for n in 2..=10 {
        for t in enumerate_trees(n).map_err(|e| e.to_string())? {
            check(&t, "tree")?;
        }
    }
    for n in 3..=9 {
        for g in enumerate_unicyclic(n).map_err(|e| e.to_string())? {
            check(&g, "unicyclic")?;
        }
    }
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..500 {
        let n = rng.random_range(2..=30);
        let extra = rng.random_range(0..=(n * (n - 1) / 2 - (n - 1)).min(3 * n));
        let g = random_connected(&mut rng, n, extra).map_err(|e| e.to_string())?;
        check(&g, "random")?;
    }
    let witness = |spec: &str, flag: &str| -> Result<(), String> {
        let g = build(&spec.parse().map_err(|e: eccentric::Error| e.to_string())?)
            .map_err(|e| e.to_string())?;
        witness_graph(&g, spec, flag)
    };
    for n in [4, 7, 12] {
        witness(&format!("star:n={n}"), "star_min")?;
        witness(&format!("cycle:n={n}"), "sandwich_lo")?;
        witness(&format!("cycle:n={n}"), "sandwich_hi")?;
        witness(&format!("complete:n={n}"), "dd_lower")?;
        witness(&format!("complete_minus_matching:n={n},k=2"), "zagreb_upper")?;
        let mut edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        edges.push((1, 2));
        let plus_one = Graph::from_edges(n, &edges).map_err(|e| e.to_string())?;
        witness_graph(&plus_one, "star+edge", "general_lower")?;
        if n >= 5 {
            edges.push((3, 4));
            let plus_two = Graph::from_edges(n, &edges).map_err(|e| e.to_string())?;
            witness_graph(&plus_two, "star+2 edges", "general_lower")?;
        }
    }
    witness("path:n=4", "zagreb_upper")?;
    Ok(format!("{count} graphs, every bound holds; equality witnesses tight"))
}

fn witness_graph(g: &Graph, what: &str, flag: &str) -> Result<(), String> {
    let r = bounds_report(g).map_err(|e| e.to_string())?;
    match r.flags.get(flag) {
        Some(f) if f.equality => Ok(()),
        _ => Err(format!("{what}: {flag} not tight")),
    }
}

fn criterion_suites() -> Outcome {
    let suites = ["global", "second", "pendent", "degree", "matching", "independence", "diameter", "radius"];
    let mut matched = 0;
    let mut reported = 0;
    let mut run = |suite: &str, ns: std::ops::RangeInclusive<usize>| -> Result<(), String> {
        for n in ns {
            for r in verify_extremal(suite, n).map_err(|e| format!("{suite} n = {n}: {e}"))? {
                match r.verdict {
                    Verdict::Match => matched += 1,
                    Verdict::Reported => reported += 1,
                    Verdict::Mismatch => {
                        return Err(format!("{suite} n = {n} {:?}: {:?}", r.constraint, r.failures))
                    }
                }
            }
        }
        Ok(())
    };
    for suite in suites {
        run(suite, 2..=10)?;
    }
    run("girth", 3..=9)?;
    Ok(format!("{matched} reports match, {reported} informational"))
}

fn criterion_transforms() -> Outcome {
    let mut rng = StdRng::seed_from_u64(99);
    let e = |r: eccentric::Result<u64>| r.map_err(|e| e.to_string());
    for i in 0..500 {
        let n0 = rng.random_range(2..=20);
        let extra = rng.random_range(0..=n0);
        let base = random_connected(&mut rng, n0, extra).map_err(|e| e.to_string())?;
        let q = rng.random_range(1..=(40 - n0) / 2);
        let p = rng.random_range(q..=40 - n0 - q);
        let cfg = PendantPathPair { w: rng.random_range(0..n0), base, p, q };
        let before = e(eci(&cfg.build().map_err(|e| e.to_string())?))?;
        let after = e(eci(&pi_shift(&cfg).map_err(|e| e.to_string())?))?;
        if after <= before {
            return Err(format!("pi-shift config {i}: {before} -> {after}"));
        }
    }
    let mut applied = 0;
    while applied < 500 {
        let n = rng.random_range(5..=60);
        let t = random_tree(&mut rng, n).map_err(|e| e.to_string())?;
        let Some((v, w)) = delta_candidate(&t).map_err(|e| e.to_string())? else {
            continue;
        };
        if !delta_hypothesis(&t, v, w).map_err(|e| e.to_string())? {
            return Err(format!("candidate ({v}, {w}) fails the hypothesis"));
        }
        let out = delta_transform_toward(&t, v, w).map_err(|e| e.to_string())?;
        let (before, after) = (e(eci(&t))?, e(eci(&out.tree))?);
        if after >= before || before - after != out.predicted_decrease() {
            return Err(format!("delta: {before} -> {after}, predicted -{}", out.predicted_decrease()));
        }
        applied += 1;
    }
    let mut triples = 0;
    while triples < 200 {
        let n = rng.random_range(2..=12);
        let extra = rng.random_range(0..=n);
        let g = random_connected(&mut rng, n, extra).map_err(|e| e.to_string())?;
        let u = rng.random_range(0..n);
        let k = rng.random_range(5..=10);
        let t = random_tree(&mut rng, k).map_err(|e| e.to_string())?;
        if t.max_degree() == 2 || t.max_degree() == k - 1 {
            continue;
        }
        let at = rng.random_range(0..k);
        let attach = |h: &Graph, x: usize| attach_at(&g, u, h, x).map_err(|e| e.to_string());
        let with_path = e(eci(&attach(&path(k).map_err(|e| e.to_string())?, 0)?))?;
        let with_star = e(eci(&attach(&star(k).map_err(|e| e.to_string())?, 0)?))?;
        let with_t = e(eci(&attach(&t, at)?))?;
        if !(with_star < with_t && with_t < with_path) {
            return Err(format!("attachment ordering: star {with_star}, T {with_t}, path {with_path}"));
        }
        triples += 1;
    }
    for n in [10usize, 20, 30] {
        let ends = |inner: Vec<eccentric::Result<Graph>>| -> Result<Vec<Graph>, String> {
            let mut all = vec![path(n)];
            all.extend(inner);
            all.push(star(n));
            all.into_iter().collect::<Result<_, _>>().map_err(|e| e.to_string())
        };
        // Each chain runs from the path to the star; C_{n,2,1} is the star.
        let chains: [(&str, Vec<Graph>); 3] = [
            ("balanced starlike", ends((3..n - 1).map(|p| balanced_starlike(n, p)).collect())?),
            ("broom", ends((3..n - 1).map(|d| broom(n, d)).collect())?),
            ("caterpillar", ends((3..n - 1).rev().map(|d| caterpillar_cndi(n, d, d / 2)).collect())?),
        ];
        for (name, chain) in chains {
            let values: Vec<u64> = chain.iter().map(oracle_eci).collect();
            if values.windows(2).any(|w| w[1] >= w[0]) {
                return Err(format!("{name} chain n = {n} not strictly decreasing: {values:?}"));
            }
        }
    }
    Ok("500 pi-shifts increase; 500 delta steps decrease by 2·moved; 200 attachments order star < T < path; chains strict for n = 10, 20, 30".into())
}

fn criterion_product() -> Outcome {
    let mut rng = StdRng::seed_from_u64(5);
    for i in 0..100 {
        let (a, b) = (rng.random_range(1..=12), rng.random_range(1..=12));
        let (ea, eb) = (rng.random_range(0..=a), rng.random_range(0..=b));
        let g1 = random_connected(&mut rng, a, ea).map_err(|e| e.to_string())?;
        let g2 = random_connected(&mut rng, b, eb).map_err(|e| e.to_string())?;
        let composed = eci_by_decomposition(&g1, &g2).map_err(|e| e.to_string())?;
        let oracle = oracle_eci(&cartesian_product(&g1, &g2).map_err(|e| e.to_string())?);
        if composed != oracle {
            return Err(format!("pair {i}: decomposition {composed}, oracle {oracle}"));
        }
    }
    let registry = FamilyRegistry::global();
    let torus = registry.get("nanotorus").map_err(|e| e.to_string())?;
    for a in 3..=9 {
        for b in 3..=9 {
            let spec = FamilySpec::new("nanotorus").with("a", a).with("b", b);
            let g = torus.build(&spec).map_err(|e| e.to_string())?;
            let (x, z) = (oracle_eci(&g), oracle_zeta(&g));
            if x != 4 * z {
                return Err(format!("C{a}□C{b}: eci {x}, 4·zeta {}", 4 * z));
            }
        }
    }
    Ok("100 random pairs exact; eci = 4·zeta on C_a□C_b for 3 <= a, b <= 9".into())
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("closed-form agreement", criterion_closed_forms),
        ("lollipop discrepancy", criterion_lollipop),
        ("linear tree algorithm", criterion_linear),
        ("bounds", criterion_bounds),
        ("extremal suites", criterion_suites),
        ("transformations", criterion_transforms),
        ("product formula", criterion_product),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let outcome = check();
        let secs = t0.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {}. {name}: {detail} [{secs:.1}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {}. {name}: {detail} [{secs:.1}s]", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
