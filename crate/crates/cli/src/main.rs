use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use scm_core::format::{parse_facets, parse_ideal, parse_poset, write_facets, write_ideal, write_poset};
use scm_core::harness::search::{search_counterexample, SearchBounds, SearchOutcome};
use scm_core::harness::suite::{coskeleton, run_equivalence_suite, Family, SuiteConfig};
use scm_core::homology::{reduced_homology, relative_homology, HomologyProfile};
use scm_core::scm::{is_shellable, Checker, RankLevel, RankSetMode, ScmVerdict, Shelling};
use scm_core::sr::{hochster_betti, hochster_betti_ideal, stanley_reisner_generators, SquarefreeIdeal};
use scm_core::{Coefficient, Error, Face, FinitePoset, RelativePair, SimplicialComplex, VertexColoring};

const EXIT_TRUE: u8 = 0;
const EXIT_FALSE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "scm", version, about = "Sequential Cohen-Macaulay checks for simplicial complexes and posets")]
struct Cli {
    /// Coefficient ring: z, q or f<p> for a prime p
    #[arg(long, global = true, env = "SCM_COEFF")]
    coeff: Option<String>,

    /// Seed for generated instances
    #[arg(long, global = true, env = "SCM_SEED", default_value_t = 0)]
    seed: u64,

    /// Worker threads (0 = one per core)
    #[arg(long, global = true, env = "SCM_JOBS", default_value_t = 0)]
    jobs: usize,

    /// Wall-clock budget per check in milliseconds
    #[arg(long, global = true, env = "SCM_BUDGET_MS")]
    budget_ms: Option<u64>,

    #[arg(long, global = true, env = "SCM_FORMAT", value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputKind {
    Complex,
    Poset,
    Ideal,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    Links,
    Duval,
    Filtration,
    Dual,
    Cm,
    Sequential,
    Shellable,
    Intervals,
    RankLayers,
    RankSelection,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Sets {
    AllSubsets,
    RankIntervals,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Level {
    Layers,
    Ideals,
    Whole,
}

#[derive(Args)]
struct Input {
    /// Input file; the kind is taken from the extension (.poset, .ideal) unless given
    file: PathBuf,
    #[arg(long, value_enum)]
    input: Option<InputKind>,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced (or relative) homology of a complex or of a poset's order complex
    Homology {
        #[command(flatten)]
        input: Input,
        /// Subcomplex file for relative homology
        #[arg(long)]
        relative: Option<PathBuf>,
    },
    /// Decide CM / SCM properties by a chosen route
    Check {
        #[command(flatten)]
        input: Input,
        /// Default: links for complexes, intervals for posets
        #[arg(long, value_enum)]
        route: Option<Route>,
        /// Rank sets for the rank-selection route
        #[arg(long, value_enum, default_value_t = Sets::AllSubsets)]
        sets: Sets,
        /// Subposets for the rank-selection route
        #[arg(long, value_enum, default_value_t = Level::Layers)]
        level: Level,
    },
    /// Apply a named complex, poset or ideal operation
    Construct(Box<ConstructArgs>),
    /// Alexander dual of a complex
    Dual {
        #[command(flatten)]
        input: Input,
    },
    /// Graded Betti numbers via Hochster's formula (field coefficients)
    Betti {
        #[command(flatten)]
        input: Input,
    },
    /// Run the equivalence and preservation suites
    Suite(SuiteArgs),
    /// Search for a semipure poset with sequentially acyclic rank selections that is not SCM
    Search {
        #[arg(long, default_value_t = 10)]
        max_elements: usize,
        #[arg(long, default_value_t = 3)]
        max_length: usize,
        #[arg(long, default_value_t = 2000)]
        random_samples: usize,
    },
}

#[derive(Args)]
struct ConstructArgs {
    /// Operation name; `scm construct list` prints them all
    op: String,
    /// Operand files
    files: Vec<PathBuf>,
    /// Face such as "1,2,3"
    #[arg(long)]
    face: Option<String>,
    /// Vertex subset such as "1,2,4"
    #[arg(long)]
    vertices: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    dim: Option<i32>,
    #[arg(long)]
    codim: Option<usize>,
    #[arg(long)]
    apex: Option<u32>,
    /// Vertex colors such as "1:0,2:1,3:1"
    #[arg(long)]
    coloring: Option<String>,
    /// Selected colors or ranks such as "0,2"
    #[arg(long)]
    ranks: Option<String>,
    /// Selected coranks such as "0,1"
    #[arg(long)]
    coranks: Option<String>,
    #[arg(long)]
    lower: Option<String>,
    #[arg(long)]
    upper: Option<String>,
    #[arg(long)]
    element: Option<String>,
    #[arg(long)]
    strict: bool,
    #[arg(long)]
    bottom: bool,
    #[arg(long)]
    top: bool,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    j: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
}

#[derive(Args)]
struct SuiteArgs {
    #[arg(long, env = "SCM_MAX_VERTICES", default_value_t = 7)]
    max_vertices: usize,
    #[arg(long, default_value_t = 4)]
    exhaustive_vertices: usize,
    #[arg(long, default_value_t = 8)]
    homology_vertices: usize,
    #[arg(long, default_value_t = 9)]
    max_elements: usize,
    #[arg(long, default_value_t = 10)]
    semipure_elements: usize,
    #[arg(long, default_value_t = 50)]
    samples: usize,
    /// Comma-separated coefficient list; defaults to --coeff or z,q,f2
    #[arg(long)]
    coeffs: Option<String>,
    /// Comma-separated family names; defaults to all
    #[arg(long)]
    families: Option<String>,
    /// Record wall time per check (the report is then not reproducible)
    #[arg(long)]
    timing: bool,
}

/// A failure mapped to an exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e == Error::BudgetExhausted { EXIT_BUDGET } else { EXIT_USAGE };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

type CliResult<T> = Result<T, Failure>;

/// What to print and how to exit.
struct Output {
    json: Value,
    text: String,
    code: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global();
    }
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                OutputFormat::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("json")),
                OutputFormat::Text => print!("{}", out.text),
            }
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn kind_of(input: &Input) -> InputKind {
    input.input.unwrap_or_else(|| match input.file.extension().and_then(|e| e.to_str()) {
        Some("poset") => InputKind::Poset,
        Some("ideal") => InputKind::Ideal,
        _ => InputKind::Complex,
    })
}

fn load_complex(path: &Path) -> CliResult<SimplicialComplex> {
    parse_facets(&read(path)?).map_err(|e| usage(format!("{}:{e}", path.display())))
}

fn load_poset(path: &Path) -> CliResult<FinitePoset> {
    parse_poset(&read(path)?).map_err(|e| usage(format!("{}:{e}", path.display())))
}

fn load_ideal(path: &Path) -> CliResult<SquarefreeIdeal> {
    parse_ideal(&read(path)?).map_err(|e| usage(format!("{}:{e}", path.display())))
}

fn coefficient(cli: &Cli, default: Coefficient) -> CliResult<Coefficient> {
    match &cli.coeff {
        None => Ok(default),
        Some(s) => s.parse().map_err(|e: String| usage(e)),
    }
}

fn checker(cli: &Cli, coeff: Coefficient) -> Checker {
    Checker::with_deadline(coeff, cli.budget_ms.map(|ms| Instant::now() + Duration::from_millis(ms)))
}

fn run(cli: &Cli) -> CliResult<Output> {
    match &cli.command {
        Command::Homology { input, relative } => homology(cli, input, relative.as_deref()),
        Command::Check { input, route, sets, level } => check(cli, input, *route, *sets, *level),
        Command::Construct(args) => construct(args),
        Command::Dual { input } => {
            let c = load_complex(&input.file)?;
            Ok(complex_output(&c.alexander_dual()))
        }
        Command::Betti { input } => betti(cli, input),
        Command::Suite(args) => suite(cli, args),
        Command::Search { max_elements, max_length, random_samples } => {
            let coeff = coefficient(cli, Coefficient::Rationals)?;
            let bounds = SearchBounds { max_elements: *max_elements, max_length: *max_length, random_samples: *random_samples, coefficient: coeff };
            let deadline = cli.budget_ms.map(|ms| Instant::now() + Duration::from_millis(ms));
            let report = search_counterexample(&bounds, cli.seed, deadline);
            let mut text = format!("outcome: {}\n", serde_json::to_value(report.outcome).expect("json").as_str().unwrap_or(""));
            for (m, n) in &report.examined {
                let _ = writeln!(text, "examined {n} layered posets with {m} elements");
            }
            let _ = writeln!(text, "random candidates: {}", report.random_examined);
            if let Some(p) = &report.poset {
                text.push_str(&write_poset(p));
            }
            let code = match report.outcome {
                SearchOutcome::Found => EXIT_TRUE,
                SearchOutcome::ExhaustedBounds => EXIT_FALSE,
                SearchOutcome::BudgetExhausted => EXIT_BUDGET,
            };
            Ok(Output { json: serde_json::to_value(&report).expect("json"), text, code })
        }
    }
}

fn homology_text(h: &HomologyProfile) -> String {
    let mut out = String::new();
    for d in h.degrees.iter().filter(|d| !d.is_zero()) {
        let r = d.degree;
        let ring = match h.coefficient {
            Coefficient::Integers => "Z".to_string(),
            Coefficient::Rationals => "Q".to_string(),
            Coefficient::PrimeField(p) => format!("F{p}"),
        };
        let mut parts = Vec::new();
        if d.betti > 0 {
            parts.push(format!("{ring}^{}", d.betti));
        }
        parts.extend(d.torsion.iter().map(|t| format!("Z/{t}")));
        let _ = writeln!(out, "H~_{r} = {}", parts.join(" + "));
    }
    if out.is_empty() {
        out.push_str("reduced homology vanishes\n");
    }
    out
}

fn homology(cli: &Cli, input: &Input, relative: Option<&Path>) -> CliResult<Output> {
    let coeff = coefficient(cli, Coefficient::Integers)?;
    let ambient = match kind_of(input) {
        InputKind::Poset => load_poset(&input.file)?.order_complex(),
        InputKind::Ideal => load_ideal(&input.file)?.complex(),
        InputKind::Complex => load_complex(&input.file)?,
    };
    let h = match relative {
        Some(sub) => {
            let pair = RelativePair::new(ambient, load_complex(sub)?)?;
            relative_homology(&pair, coeff)
        }
        None => reduced_homology(&ambient, coeff),
    };
    Ok(Output { json: serde_json::to_value(&h).expect("json"), text: homology_text(&h), code: EXIT_TRUE })
}

fn verdict_output(check: &str, v: ScmVerdict) -> Output {
    let mut json = json!({ "check": check, "coefficient": v.coefficient, "verdict": v.verdict });
    let mut text = format!("{check} over {}: {}\n", v.coefficient, v.verdict);
    if let Some(w) = &v.witness {
        json["witness"] = serde_json::to_value(w).expect("json");
        let _ = writeln!(text, "witness: {}", serde_json::to_string(w).expect("json"));
    }
    Output { json, text, code: if v.verdict { EXIT_TRUE } else { EXIT_FALSE } }
}

fn check(cli: &Cli, input: &Input, route: Option<Route>, sets: Sets, level: Level) -> CliResult<Output> {
    let coeff = coefficient(cli, Coefficient::Integers)?;
    let ch = checker(cli, coeff);
    let kind = kind_of(input);
    let complex_route = |c: &SimplicialComplex, r: Route| -> CliResult<Output> {
        let (name, v) = match r {
            Route::Links => ("links", ch.is_scm_links(c)?),
            Route::Duval => ("duval", ch.is_scm_duval(c)?),
            Route::Filtration => ("filtration", ch.is_scm_filtration(c)?),
            Route::Dual => ("dual", ch.is_scm_dual(c)?),
            Route::Cm => ("cm", ch.is_cm(c)?),
            Route::Sequential => ("sequential", ch.is_sequentially_acyclic(c)?),
            Route::Shellable => return Ok(shelling_output(is_shellable(c))),
            _ => return Err(usage("route applies to posets only")),
        };
        Ok(verdict_output(name, v))
    };
    match kind {
        InputKind::Complex | InputKind::Ideal => {
            let c = if kind == InputKind::Ideal { load_ideal(&input.file)?.complex() } else { load_complex(&input.file)? };
            complex_route(&c, route.unwrap_or(Route::Links))
        }
        InputKind::Poset => {
            let p = load_poset(&input.file)?;
            match route.unwrap_or(Route::Intervals) {
                Route::Intervals => Ok(verdict_output("intervals", ch.poset_is_scm_intervals(&p)?)),
                Route::RankLayers => Ok(verdict_output("rank-layers", ch.semipure_is_scm_rankgen(&p)?)),
                Route::RankSelection => {
                    let mode = match sets {
                        Sets::AllSubsets => RankSetMode::AllSubsets,
                        Sets::RankIntervals => RankSetMode::RankIntervals,
                    };
                    let level = match level {
                        Level::Layers => RankLevel::Layers,
                        Level::Ideals => RankLevel::Ideals,
                        Level::Whole => RankLevel::Whole,
                    };
                    Ok(verdict_output("rank-selection", ch.rank_selection_profile(&p, mode, level)?))
                }
                r => complex_route(&p.order_complex(), r),
            }
        }
    }
}

fn shelling_output(s: Shelling) -> Output {
    let code = match &s {
        Shelling::Shellable(_) => EXIT_TRUE,
        Shelling::NotShellable => EXIT_FALSE,
        Shelling::Unknown => EXIT_BUDGET,
    };
    let mut json = json!({ "check": "shellable" });
    json["shelling"] = serde_json::to_value(&s).expect("json");
    let text = match &s {
        Shelling::Shellable(order) => {
            let fs: Vec<String> = order.iter().map(Face::to_string).collect();
            format!("shellable: {}\n", fs.join(" "))
        }
        Shelling::NotShellable => "not shellable\n".to_string(),
        Shelling::Unknown => "unknown (search bounds exceeded)\n".to_string(),
    };
    Output { json, text, code }
}

fn betti(cli: &Cli, input: &Input) -> CliResult<Output> {
    let coeff = coefficient(cli, Coefficient::Rationals)?;
    let table_text = |name: &str, t: &scm_core::sr::GradedBettiTable| {
        let mut s = format!("{name}:\n");
        for ((i, j), v) in t.entries() {
            let _ = writeln!(s, "  beta_{i},{j} = {v}");
        }
        s
    };
    match kind_of(input) {
        InputKind::Ideal => {
            let ideal = load_ideal(&input.file)?;
            let t = hochster_betti_ideal(&ideal.complex(), coeff)?;
            Ok(Output { json: json!({ "coefficient": coeff, "ideal": t }), text: table_text("ideal", &t), code: EXIT_TRUE })
        }
        kind => {
            let c = if kind == InputKind::Poset { load_poset(&input.file)?.order_complex() } else { load_complex(&input.file)? };
            let q = hochster_betti(&c, coeff)?;
            let i = hochster_betti_ideal(&c, coeff)?;
            let text = table_text("quotient", &q) + &table_text("ideal", &i);
            Ok(Output { json: json!({ "coefficient": coeff, "quotient": q, "ideal": i }), text, code: EXIT_TRUE })
        }
    }
}

fn suite(cli: &Cli, args: &SuiteArgs) -> CliResult<Output> {
    let coefficients = match (&args.coeffs, &cli.coeff) {
        (Some(list), _) => list.split(',').map(|c| c.trim().parse().map_err(|e: String| usage(e))).collect::<CliResult<Vec<_>>>()?,
        (None, Some(_)) => vec![coefficient(cli, Coefficient::Integers)?],
        (None, None) => SuiteConfig::default().coefficients,
    };
    let families = match &args.families {
        Some(list) => list.split(',').map(|f| f.trim().parse::<Family>().map_err(usage)).collect::<CliResult<Vec<_>>>()?,
        None => Family::ALL.to_vec(),
    };
    let config = SuiteConfig {
        seed: cli.seed,
        exhaustive_vertices: args.exhaustive_vertices,
        max_vertices: args.max_vertices,
        homology_vertices: args.homology_vertices,
        max_elements: args.max_elements,
        semipure_elements: args.semipure_elements,
        samples: args.samples,
        coefficients,
        families,
        budget_ms: cli.budget_ms,
        jobs: cli.jobs,
        timing: args.timing,
    };
    check_suite_bounds(&config)?;
    let report = run_equivalence_suite(&config);
    let mut text = format!(
        "records: {}\ndisagreements: {}\nbudget exhausted: {}\n",
        report.summary.records, report.summary.disagreements, report.summary.budget_exhausted
    );
    for (family, n) in &report.summary.instances {
        let _ = writeln!(text, "  {family}: {n} instances");
    }
    for r in report.disagreements() {
        let _ = writeln!(text, "DISAGREEMENT {} on {}: {}", r.name, r.instance, serde_json::to_string(&r.verdicts).expect("json"));
    }
    let code = if report.summary.disagreements > 0 {
        EXIT_FALSE
    } else if report.summary.budget_exhausted > 0 {
        EXIT_BUDGET
    } else {
        EXIT_TRUE
    };
    Ok(Output { json: serde_json::to_value(&report).expect("json"), text, code })
}

fn check_suite_bounds(c: &SuiteConfig) -> CliResult<()> {
    let limits = [
        ("exhaustive-vertices", c.exhaustive_vertices, 5),
        ("max-vertices", c.max_vertices, 16),
        ("homology-vertices", c.homology_vertices, 16),
        ("max-elements", c.max_elements, 24),
        ("semipure-elements", c.semipure_elements, 24),
    ];
    for (name, v, bound) in limits {
        if v > bound {
            return Err(usage(format!("--{name} {v} exceeds bound {bound}")));
        }
        if v == 0 && name != "exhaustive-vertices" {
            return Err(usage(format!("--{name} must be positive")));
        }
    }
    Ok(())
}

// ----------------------------------------------------------------- construct

const COMPLEX_OPS: &[&str] = &[
    "link", "skeleton", "pure-skeleton", "coskeleton", "generated-above", "facet-layer", "join", "induced", "alexander-dual",
    "cone", "intersection", "union", "type-selected", "face-poset", "stanley-reisner",
];
const POSET_OPS: &[&str] = &[
    "dual", "adjoin-bounds", "open-interval", "closed-interval", "principal-filter", "principal-ideal", "ordinal-sum", "product",
    "interval-poset", "order-complex", "rank-selected", "birank-selected", "truncation", "max-deleted", "rank-generated-ideal",
    "maxrank-ideal",
];
const IDEAL_OPS: &[&str] = &["ideal-complex", "squarefree-part"];

fn complex_output(c: &SimplicialComplex) -> Output {
    let text = write_facets(c);
    Output { json: json!({ "kind": "complex", "value": c, "text": text }), text, code: EXIT_TRUE }
}

fn poset_output(p: &FinitePoset) -> Output {
    let text = write_poset(p);
    Output { json: json!({ "kind": "poset", "value": p, "text": text }), text, code: EXIT_TRUE }
}

fn ideal_output(i: &SquarefreeIdeal) -> Output {
    let text = write_ideal(i);
    Output { json: json!({ "kind": "ideal", "value": i, "text": text }), text, code: EXIT_TRUE }
}

fn parse_list<T: std::str::FromStr>(what: &str, s: &str) -> CliResult<Vec<T>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<T>().map_err(|_| usage(format!("--{what}: cannot parse `{t}`"))))
        .collect()
}

fn need<T: Clone>(what: &str, v: &Option<T>) -> CliResult<T> {
    v.clone().ok_or_else(|| usage(format!("this operation needs --{what}")))
}

fn construct(a: &ConstructArgs) -> CliResult<Output> {
    if a.op == "list" {
        let text = format!("complex: {}\nposet: {}\nideal: {}\n", COMPLEX_OPS.join(" "), POSET_OPS.join(" "), IDEAL_OPS.join(" "));
        return Ok(Output { json: json!({ "complex": COMPLEX_OPS, "poset": POSET_OPS, "ideal": IDEAL_OPS }), text, code: EXIT_TRUE });
    }
    let arity = if matches!(a.op.as_str(), "join" | "intersection" | "union" | "ordinal-sum" | "product") { 2 } else { 1 };
    if a.files.len() != arity {
        return Err(usage(format!("`{}` takes {arity} operand file(s), got {}", a.op, a.files.len())));
    }
    let op = a.op.as_str();
    if COMPLEX_OPS.contains(&op) {
        let c = load_complex(&a.files[0])?;
        let other = || load_complex(&a.files[1]);
        return Ok(match op {
            "link" => complex_output(&c.link(&Face::new(parse_list::<u32>("face", &need("face", &a.face)?)?))?),
            "skeleton" => complex_output(&c.skeleton(need("dim", &a.dim)?)),
            "pure-skeleton" => complex_output(&c.pure_skeleton(need("dim", &a.dim)?)?),
            "coskeleton" => complex_output(&coskeleton(&c, need("codim", &a.codim)?)),
            "generated-above" => complex_output(&c.generated_above(need("dim", &a.dim)?)),
            "facet-layer" => complex_output(&c.facet_layer(need("dim", &a.dim)?)),
            "join" => complex_output(&c.join(&other()?)?),
            "induced" => complex_output(&c.induced(&parse_list::<u32>("vertices", &need("vertices", &a.vertices)?)?)?),
            "alexander-dual" => complex_output(&c.alexander_dual()),
            "cone" => complex_output(&c.cone(need("apex", &a.apex)?)?),
            "intersection" => complex_output(&c.intersection(&other()?)),
            "union" => complex_output(&c.union(&other()?)),
            "type-selected" => {
                let coloring = parse_coloring(&need("coloring", &a.coloring)?)?;
                let colors: BTreeSet<u32> = parse_list::<u32>("ranks", &need("ranks", &a.ranks)?)?.into_iter().collect();
                complex_output(&c.type_selected(&coloring, &colors)?)
            }
            "face-poset" => poset_output(&FinitePoset::face_poset(&c)?),
            "stanley-reisner" => ideal_output(&stanley_reisner_generators(&c)),
            _ => unreachable!(),
        });
    }
    if POSET_OPS.contains(&op) {
        let p = load_poset(&a.files[0])?;
        let other = || load_poset(&a.files[1]);
        let element = |what: &str, v: &Option<String>| -> CliResult<usize> {
            let l = need(what, v)?;
            p.index_of(&l).ok_or_else(|| Failure::from(Error::UnknownElement(l)))
        };
        let ranks = |what: &str, v: &Option<String>| -> CliResult<BTreeSet<usize>> { Ok(parse_list::<usize>(what, &need(what, v)?)?.into_iter().collect()) };
        return Ok(match op {
            "dual" => poset_output(&p.dual()),
            "adjoin-bounds" => poset_output(&p.adjoin_bounds(a.bottom, a.top)),
            "open-interval" => poset_output(&p.open_interval_by_label(&need("lower", &a.lower)?, &need("upper", &a.upper)?)?),
            "closed-interval" => poset_output(&p.closed_interval_by_label(&need("lower", &a.lower)?, &need("upper", &a.upper)?)?),
            "principal-filter" => poset_output(&p.principal_filter(element("element", &a.element)?, a.strict)),
            "principal-ideal" => poset_output(&p.principal_ideal(element("element", &a.element)?, a.strict)),
            "ordinal-sum" => poset_output(&p.ordinal_sum(&other()?)?),
            "product" => poset_output(&p.product(&other()?)),
            "interval-poset" => poset_output(&p.interval_poset()),
            "order-complex" => complex_output(&p.order_complex()),
            "rank-selected" => poset_output(&p.rank_selected(&ranks("ranks", &a.ranks)?)?),
            "birank-selected" => poset_output(&p.birank_selected(&ranks("ranks", &a.ranks)?, &ranks("coranks", &a.coranks)?)?),
            "truncation" => poset_output(&p.truncation(need("s", &a.s)?, need("t", &a.t)?)?),
            "max-deleted" => poset_output(&p.max_deleted(need("t", &a.t)?)),
            "rank-generated-ideal" => poset_output(&p.rank_generated_ideal(need("j", &a.j)?)?),
            "maxrank-ideal" => poset_output(&p.maxrank_ideal(need("j", &a.j)?)?),
            _ => unreachable!(),
        });
    }
    if IDEAL_OPS.contains(&op) {
        let i = load_ideal(&a.files[0])?;
        return Ok(match op {
            "ideal-complex" => complex_output(&i.complex()),
            "squarefree-part" => ideal_output(&i.squarefree_part(need("d", &a.d)?)),
            _ => unreachable!(),
        });
    }
    Err(usage(format!("unknown operation `{}`; try `scm construct list`", a.op)))
}

fn parse_coloring(s: &str) -> CliResult<VertexColoring> {
    let mut map = BTreeMap::new();
    for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let (v, c) = item.split_once(':').ok_or_else(|| usage(format!("--coloring: expected vertex:color, got `{item}`")))?;
        let v = v.trim().parse::<u32>().map_err(|_| usage(format!("--coloring: bad vertex `{v}`")))?;
        let c = c.trim().parse::<u32>().map_err(|_| usage(format!("--coloring: bad color `{c}`")))?;
        map.insert(v, c);
    }
    Ok(VertexColoring::new(map))
}
