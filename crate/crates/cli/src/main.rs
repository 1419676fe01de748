use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use eccentric::bounds::{bounds_report, equality_tags, BoundsReport};
use eccentric::enumerate::suites::{Catalog, ExtremalReport, SuiteRegistry, Verdict};
use eccentric::enumerate::{self, canonical_form, EnumConfig};
use eccentric::families::{self, Agreement, FamilySpec};
use eccentric::io::{parse_edge_list, write_edge_list};
use eccentric::product::{cartesian_product, ProductDecomposition};
use eccentric::random::random_tree;
use eccentric::{indices, AlgorithmRegistry, Error, Graph, IndexReport};
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde::Serialize;
use serde_json::Value;

#[derive(Parser)]
#[command(name = "ecci", version, about = "Eccentric connectivity index toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, Default, PartialEq, Eq)]
enum Format {
    #[default]
    Json,
    Table,
}

#[derive(Args)]
struct Input {
    /// Edge-list file
    #[arg(long, conflicts_with = "family")]
    input: Option<PathBuf>,
    /// Family spec such as `broom:n=11,delta=6`
    #[arg(long)]
    family: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Index report for one graph
    Compute {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "bfs")]
        algo: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Build a named family member
    Family(FamilyArgs),
    /// Every bound with its equality flags
    Bounds {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Index of a Cartesian product from its factors, checked against the
    /// built product
    Product {
        /// First factor: edge-list file or family spec
        first: String,
        /// Second factor: edge-list file or family spec
        second: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run extremal suites over enumerated graphs
    Verify {
        /// Suite name, or `all`
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, conflicts_with_all = ["from", "to"])]
        n: Option<usize>,
        #[arg(long, requires = "to")]
        from: Option<usize>,
        #[arg(long, requires = "from")]
        to: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// List non-isomorphic trees or unicyclic graphs
    Enumerate {
        #[arg(long, value_enum)]
        class: GraphKind,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Time the linear tree algorithm against all-sources BFS
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = [100_000usize, 1_000_000])]
        sizes: Vec<usize>,
        /// Largest order at which the quadratic oracle is also timed
        #[arg(long, default_value_t = 5_000)]
        oracle_max: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphKind {
    Trees,
    Unicyclic,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long)]
    name: String,
    #[arg(long)]
    n: Option<i64>,
    #[arg(long)]
    m: Option<i64>,
    #[arg(long)]
    d: Option<i64>,
    #[arg(long)]
    delta: Option<i64>,
    #[arg(long)]
    p: Option<i64>,
    #[arg(long)]
    k: Option<i64>,
    #[arg(long)]
    a: Option<i64>,
    #[arg(long)]
    b: Option<i64>,
    #[arg(long)]
    i: Option<i64>,
    #[arg(long, value_delimiter = ',')]
    lengths: Option<Vec<i64>>,
    #[arg(long, value_delimiter = ',')]
    pendants: Option<Vec<i64>>,
    #[arg(long, value_delimiter = ',')]
    counts: Option<Vec<i64>>,
    /// Print the closed-form index
    #[arg(long, conflicts_with = "check")]
    value: bool,
    /// Compare the closed form with the computed index
    #[arg(long)]
    check: bool,
}

impl FamilyArgs {
    fn spec(&self) -> FamilySpec {
        let mut spec = FamilySpec::new(&self.name);
        let ints = [
            ("n", self.n),
            ("m", self.m),
            ("d", self.d),
            ("delta", self.delta),
            ("p", self.p),
            ("k", self.k),
            ("a", self.a),
            ("b", self.b),
            ("i", self.i),
        ];
        for (key, v) in ints {
            if let Some(v) = v {
                spec = spec.with(key, v);
            }
        }
        for (key, v) in [("lengths", &self.lengths), ("pendants", &self.pendants), ("counts", &self.counts)] {
            if let Some(v) = v {
                spec = spec.with_list(key, v);
            }
        }
        spec
    }
}

#[derive(Debug)]
enum CliError {
    Lib(Error),
    Io(PathBuf, std::io::Error),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Usage(m) => write!(f, "{m}"),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn read_graph(path: &Path) -> CliResult<Graph> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
    Ok(parse_edge_list(&text)?)
}

fn load(input: &Input) -> CliResult<Graph> {
    match (&input.input, &input.family) {
        (Some(p), None) => read_graph(p),
        (None, Some(s)) => Ok(families::build(&s.parse()?)?),
        _ => Err(CliError::Usage("give exactly one of --input or --family".into())),
    }
}

/// A file path if it exists, otherwise a family spec.
fn load_operand(s: &str) -> CliResult<Graph> {
    let p = Path::new(s);
    if p.exists() {
        read_graph(p)
    } else {
        Ok(families::build(&s.parse()?)?)
    }
}

fn table_line(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn emit<T: Serialize>(value: &T, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string(value).expect("reports serialize")),
        Format::Table => match serde_json::to_value(value).expect("reports serialize") {
            Value::Object(map) => {
                let width = map.keys().map(String::len).max().unwrap_or(0);
                for (k, x) in &map {
                    println!("{k:<width$}  {}", table_line(x));
                }
            }
            other => println!("{}", table_line(&other)),
        },
    }
}

fn compute(input: &Input, algo: &str, format: Format) -> CliResult<ExitCode> {
    let g = load(input)?;
    if g.is_weighted() && !g.is_tree() {
        return Err(Error::WeightedUnsupported("compute on graphs with cycles").into());
    }
    let registry = AlgorithmRegistry::default();
    let metrics = registry.get(algo)?.vertex_metrics(&g)?;
    emit(&IndexReport::from_metrics(&g, &metrics)?, format);
    Ok(ExitCode::SUCCESS)
}

fn family(args: &FamilyArgs) -> CliResult<ExitCode> {
    let spec = args.spec();
    if args.value {
        println!("{}", families::closed_form_eci(&spec)?);
        return Ok(ExitCode::SUCCESS);
    }
    if args.check {
        let agreement = families::oracle_vs_closed_form(&spec)?;
        #[derive(Serialize)]
        struct Check {
            family: String,
            #[serde(flatten)]
            agreement: Agreement,
        }
        emit(
            &Check {
                family: spec.to_string(),
                agreement,
            },
            Format::Json,
        );
        return Ok(if agreement.agrees() {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        });
    }
    print!("{}", write_edge_list(&families::build(&spec)?));
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct BoundsOut<'a> {
    #[serde(flatten)]
    report: &'a BoundsReport,
    equality_tags: Vec<&'static str>,
}

fn bounds(input: &Input, format: Format) -> CliResult<ExitCode> {
    let g = load(input)?;
    let report = bounds_report(&g)?;
    let tags = equality_tags(&report)?.iter().map(|t| t.as_str()).collect();
    emit(
        &BoundsOut {
            report: &report,
            equality_tags: tags,
        },
        format,
    );
    Ok(if report.all_hold() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn product(first: &str, second: &str, format: Format) -> CliResult<ExitCode> {
    let (g1, g2) = (load_operand(first)?, load_operand(second)?);
    let dec = ProductDecomposition::new(&g1, &g2)?;
    let oracle = match cartesian_product(&g1, &g2) {
        Ok(p) => Some(indices::eci(&p)?),
        Err(Error::TooLarge { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    #[derive(Serialize)]
    struct ProductOut {
        n: u64,
        m: u64,
        eci: u64,
        zeta: u64,
        oracle: Option<u64>,
        agree: Option<bool>,
    }
    let c = dec.composed;
    let agree = oracle.map(|o| o == c.eci);
    emit(
        &ProductOut {
            n: c.n,
            m: c.m,
            eci: c.eci,
            zeta: c.zeta,
            oracle,
            agree,
        },
        format,
    );
    Ok(if agree == Some(false) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn verify(suite: &str, orders: Vec<usize>, format: Format) -> CliResult<ExitCode> {
    let registry = SuiteRegistry::default();
    let suites: Vec<_> = if suite == "all" {
        registry.iter().collect()
    } else {
        vec![registry.get(suite)?]
    };
    let skip_guarded = suite == "all";
    let cfg = EnumConfig::from_env();
    // One worker per order; results are printed in order regardless of
    // completion.
    let results: Vec<Result<Vec<ExtremalReport>, Error>> = std::thread::scope(|scope| {
        let handles: Vec<_> = orders
            .iter()
            .map(|&n| {
                let suites = &suites;
                scope.spawn(move || {
                    let cat = Catalog::new(n, cfg);
                    let mut out = Vec::new();
                    for s in suites {
                        match s.run(&cat) {
                            Ok(reports) => out.extend(reports),
                            Err(Error::TooLarge { what, limit }) if skip_guarded => {
                                eprintln!("skipping {} at n = {n}: {what} exceeds {limit}", s.name());
                            }
                            Err(e) => return Err(e),
                        }
                    }
                    Ok(out)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut mismatch = false;
    for result in results {
        for r in result? {
            mismatch |= r.verdict == Verdict::Mismatch;
            match format {
                Format::Json => emit(&r, Format::Json),
                Format::Table => {
                    let param = r.constraint.value.map(|v| format!("={v}")).unwrap_or_default();
                    println!(
                        "{:<12} n={:<3} {}{:<5} min={:<6} max={:<6} {:?}{}",
                        r.suite,
                        r.n,
                        r.constraint.tag,
                        param,
                        r.min_value,
                        r.max_value,
                        r.verdict,
                        if r.failures.is_empty() {
                            String::new()
                        } else {
                            format!("  {}", r.failures.join("; "))
                        }
                    );
                }
            }
        }
    }
    Ok(if mismatch { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn enumerate_cmd(kind: GraphKind, n: usize, format: Format) -> CliResult<ExitCode> {
    let graphs: Box<dyn Iterator<Item = Graph>> = match kind {
        GraphKind::Trees => Box::new(enumerate::enumerate_trees(n)?),
        GraphKind::Unicyclic => Box::new(enumerate::enumerate_unicyclic(n)?),
    };
    #[derive(Serialize)]
    struct Member {
        index: usize,
        canonical: String,
        eci: u64,
        edges: Vec<(usize, usize)>,
    }
    for (index, g) in graphs.enumerate() {
        let canonical = canonical_form(&g)?.to_string();
        let eci = indices::eci(&g)?;
        match format {
            Format::Json => emit(
                &Member {
                    index,
                    canonical,
                    eci,
                    edges: g.edges().map(|(u, v, _)| (u, v)).collect(),
                },
                Format::Json,
            ),
            Format::Table => println!("{index:>5}  {eci:>6}  {canonical}"),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn bench(sizes: &[usize], oracle_max: usize, seed: u64, format: Format) -> CliResult<ExitCode> {
    #[derive(Serialize)]
    struct Timing {
        shape: &'static str,
        n: usize,
        eci: u64,
        linear_ms: f64,
        bfs_ms: Option<f64>,
        agree: Option<bool>,
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let registry = AlgorithmRegistry::default();
    let bfs = registry.get("bfs")?;
    for &n in sizes {
        for shape in ["path", "star", "random"] {
            let g = match shape {
                "path" => families::construct::path(n)?,
                "star" => families::construct::star(n)?,
                _ => random_tree(&mut rng, n)?,
            };
            let t0 = Instant::now();
            let eci = eccentric::eci_tree(&g)?;
            let linear_ms = t0.elapsed().as_secs_f64() * 1e3;
            let (bfs_ms, agree) = if n <= oracle_max {
                let t0 = Instant::now();
                let oracle = bfs.eci(&g)?;
                (Some(t0.elapsed().as_secs_f64() * 1e3), Some(oracle == eci))
            } else {
                (None, None)
            };
            emit(
                &Timing {
                    shape,
                    n,
                    eci,
                    linear_ms,
                    bfs_ms,
                    agree,
                },
                format,
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    match cli.command {
        Command::Compute { input, algo, format } => compute(&input, &algo, format),
        Command::Family(args) => family(&args),
        Command::Bounds { input, format } => bounds(&input, format),
        Command::Product { first, second, format } => product(&first, &second, format),
        Command::Verify {
            suite,
            n,
            from,
            to,
            format,
        } => {
            let orders: Vec<usize> = match (n, from, to) {
                (Some(n), _, _) => vec![n],
                (None, Some(a), Some(b)) if a <= b => (a..=b).collect(),
                _ => return Err(CliError::Usage("give --n, or --from and --to with from <= to".into())),
            };
            verify(&suite, orders, format)
        }
        Command::Enumerate { class, n, format } => enumerate_cmd(class, n, format),
        Command::Bench {
            sizes,
            oracle_max,
            seed,
            format,
        } => bench(&sizes, oracle_max, seed, format),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
