//! The `gbcolor` command line.
//!
//! Exit codes: 0 when the computation ran (the answer is in the report),
//! 1 for input errors, 2 for configurations the tool refuses to run, and
//! 3 when `bench` finds methods disagreeing.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::algorithms::{decide, decompose, AlgorithmError, Method, SolveOptions, Verdict, VerdictReport};
use crate::coloring::nu_basis;
use crate::field::{Field, FieldConfig, PrimeField, Rationals};
use crate::graph::{enumerate_colorings, parse_dimacs_with_warnings, ColorPartition, Graph, OracleBudget};
use crate::poly::OrderKind;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_UNSUPPORTED: i32 = 2;
pub const EXIT_DISAGREEMENT: i32 = 3;

const DECOMPOSE_MAX_VERTICES: usize = 8;

#[derive(Debug, Parser)]
#[command(name = "gbcolor", version, about = "Decide graph colorability with Gröbner bases")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Term order for all Gröbner basis computations.
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Degrevlex)]
    pub order: OrderArg,
    /// Coefficient field: `q` or `fp:P` for a prime P not dividing k.
    #[arg(long, global = true)]
    pub field: Option<FieldConfig>,
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Expand the graph polynomial up front instead of reducing it factor
    /// by factor.
    #[arg(long, global = true)]
    pub monolithic: bool,
    /// Largest graph the brute-force oracle will enumerate.
    #[arg(long, global = true)]
    pub max_vertices: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Lex,
    Deglex,
    Degrevlex,
}

impl From<OrderArg> for OrderKind {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Lex => OrderKind::Lex,
            OrderArg::Deglex => OrderKind::DegLex,
            OrderArg::Degrevlex => OrderKind::DegRevLex,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ColorableMethod {
    Dim,
    One,
    NfInk,
    NfJnk,
}

impl From<ColorableMethod> for Method {
    fn from(m: ColorableMethod) -> Self {
        match m {
            ColorableMethod::Dim => Method::QuotientDim,
            ColorableMethod::One => Method::ReduceOne,
            ColorableMethod::NfInk => Method::NfGraphPolyInk,
            ColorableMethod::NfJnk => Method::NfGraphPolyJnk,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum UniqueMethod {
    Nubasis,
    Colon,
    Dim,
    GbShape,
}

impl From<UniqueMethod> for Method {
    fn from(m: UniqueMethod) -> Self {
        match m {
            UniqueMethod::Nubasis => Method::NuBasisMembership,
            UniqueMethod::Colon => Method::ColonMembership,
            UniqueMethod::Dim => Method::QuotientDimFactorial,
            UniqueMethod::GbShape => Method::GbShape,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether the graph has a proper k-coloring.
    Colorable {
        file: PathBuf,
        #[arg(short, value_parser = clap::value_parser!(u16).range(1..))]
        k: u16,
        #[arg(long, value_enum, default_value_t = ColorableMethod::Dim)]
        method: ColorableMethod,
    },
    /// Decide whether the graph is uniquely k-colorable.
    Unique {
        file: PathBuf,
        #[arg(short, value_parser = clap::value_parser!(u16).range(1..))]
        k: u16,
        #[arg(long, value_enum, default_value_t = UniqueMethod::Dim)]
        method: UniqueMethod,
        /// A proper coloring using all k colors, e.g. `1,3;2`.
        #[arg(long)]
        coloring: Option<ColorPartition>,
    },
    /// Print the ν-basis of a coloring.
    NuBasis {
        #[arg(short, value_parser = clap::value_parser!(u16).range(1..))]
        k: u16,
        #[arg(long)]
        partition: ColorPartition,
        #[arg(long)]
        reduced: bool,
    },
    /// Check that I_{G,k} is the intersection of the coloring ideals.
    Decompose {
        file: PathBuf,
        #[arg(short, value_parser = clap::value_parser!(u16).range(1..))]
        k: u16,
    },
    /// Count proper k-colorings by brute force.
    Oracle {
        file: PathBuf,
        #[arg(short, value_parser = clap::value_parser!(u16).range(1..))]
        k: u16,
    },
    /// Run every method under every order on each `.col` file in a directory
    /// and check that all answers agree.
    Bench {
        dir: PathBuf,
        #[arg(short, value_parser = clap::value_parser!(u16).range(1..))]
        k: u16,
    },
}

enum Failure {
    Input(String),
    Unsupported(String),
}

impl From<AlgorithmError> for Failure {
    fn from(e: AlgorithmError) -> Self {
        if e.is_unsupported() {
            Failure::Unsupported(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command,
/// writing the report to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_INPUT
                }
            };
        }
    };
    match execute(&config, out, err) {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Unsupported(msg)) => {
            let _ = writeln!(err, "unsupported: {msg}");
            EXIT_UNSUPPORTED
        }
    }
}

fn load_graph(path: &Path, err: &mut dyn Write) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let report = parse_dimacs_with_warnings(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    for w in &report.warnings {
        writeln!(err, "warning: {}: {w}", path.display())?;
    }
    Ok(report.graph)
}

fn solve_options(common: &CommonArgs, k: usize, err: &mut dyn Write) -> Result<SolveOptions, Failure> {
    let field = match common.field {
        Some(f) => f,
        None => {
            if k % 2 == 1 && !common.json {
                writeln!(err, "hint: --field fp:2 is usually much faster for odd k")?;
            }
            FieldConfig::Rationals
        }
    };
    let opts = SolveOptions::new(common.order.into(), field);
    Ok(if common.monolithic { opts.monolithic() } else { opts })
}

fn execute(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let common = &config.common;
    match &config.command {
        Command::Colorable { file, k, method } => {
            let k = *k as usize;
            let g = load_graph(file, err)?;
            let opts = solve_options(common, k, err)?;
            let v = decide(&g, k, (*method).into(), None, &opts)?;
            print_verdict(out, &v, common.json, &format!("{k}-colorable"))?;
        }
        Command::Unique { file, k, method, coloring } => {
            let k = *k as usize;
            let g = load_graph(file, err)?;
            let opts = solve_options(common, k, err)?;
            let v = decide(&g, k, (*method).into(), coloring.as_ref(), &opts)?;
            print_verdict(out, &v, common.json, &format!("uniquely {k}-colorable"))?;
        }
        Command::NuBasis { k, partition, reduced } => {
            let field = common.field.unwrap_or(FieldConfig::Rationals);
            field.validate(*k as usize).map_err(AlgorithmError::from)?;
            match field {
                FieldConfig::Rationals => {
                    print_nu_basis(out, Rationals, partition, *k as usize, *reduced, common.json)?
                }
                FieldConfig::PrimeField(p) => {
                    let f = PrimeField::new(p).map_err(AlgorithmError::from)?;
                    print_nu_basis(out, f, partition, *k as usize, *reduced, common.json)?
                }
            }
        }
        Command::Decompose { file, k } => {
            let k = *k as usize;
            let g = load_graph(file, err)?;
            let opts = solve_options(common, k, err)?;
            let budget = OracleBudget { max_vertices: common.max_vertices.unwrap_or(DECOMPOSE_MAX_VERTICES) };
            let d = decompose(&g, k, budget, &opts)?;
            if common.json {
                writeln!(out, "{}", serde_json::to_string(&d).expect("decomposition serializes"))?;
            } else {
                let verdict = if d.ideal_ok { "holds" } else { "FAILS" };
                writeln!(out, "I_(G,{k}) = intersection of {} coloring ideals: {verdict}", d.partitions.len())?;
                for p in &d.partitions {
                    writeln!(out, "  {p}")?;
                }
            }
        }
        Command::Oracle { file, k } => {
            let k = *k as usize;
            let g = load_graph(file, err)?;
            let budget =
                OracleBudget { max_vertices: common.max_vertices.unwrap_or(OracleBudget::default().max_vertices) };
            let census = enumerate_colorings(&g, k, budget).map_err(AlgorithmError::from)?;
            if common.json {
                writeln!(out, "{}", census.to_json())?;
            } else {
                writeln!(out, "proper {k}-colorings: {}", census.count)?;
                writeln!(out, "color-class partitions: {}", census.partitions.len())?;
                for p in &census.partitions {
                    writeln!(out, "  {p}")?;
                }
            }
        }
        Command::Bench { dir, k } => return bench(dir, *k as usize, common, out, err),
    }
    Ok(EXIT_OK)
}

fn print_verdict(out: &mut dyn Write, v: &Verdict, json: bool, question: &str) -> std::io::Result<()> {
    if json {
        return writeln!(out, "{}", v.to_json());
    }
    let r = v.report();
    write!(out, "{question}: {}", if r.answer { "yes" } else { "no" })?;
    write!(out, " (method {}, order {}, field {}", r.method, r.order.name(), r.field)?;
    if let Some(d) = r.dim {
        write!(out, ", dim {d}")?;
    }
    writeln!(out, ", {:.1} ms)", r.elapsed_ms)?;
    if let Some(p) = &r.partition {
        writeln!(out, "partition: {p}")?;
    }
    Ok(())
}

fn print_nu_basis<F: Field>(
    out: &mut dyn Write,
    field: F,
    p: &ColorPartition,
    k: usize,
    reduced: bool,
    json: bool,
) -> Result<(), Failure> {
    let basis = nu_basis(field, p, k, reduced).map_err(AlgorithmError::from)?;
    if json {
        writeln!(out, "{}", basis.to_json())?;
    } else {
        for line in basis.rendered() {
            writeln!(out, "{line}")?;
        }
    }
    Ok(())
}

#[derive(Debug, Serialize)]
struct BenchGraph {
    file: String,
    n: usize,
    edges: usize,
    colorable: Option<bool>,
    unique: Option<bool>,
    oracle_colorable: Option<bool>,
    oracle_unique: Option<bool>,
    agree: bool,
    verdicts: Vec<VerdictReport>,
    errors: Vec<String>,
}

struct Job<'a> {
    graph: usize,
    g: &'a Graph,
    method: Method,
    coloring: Option<&'a ColorPartition>,
    opts: SolveOptions,
}

/// Smallest prime that does not divide `k`.
fn bench_prime(k: usize) -> u64 {
    [2u64, 3, 5, 7, 11, 13].into_iter().find(|p| !(k as u64).is_multiple_of(*p)).expect("k has few small prime factors")
}

fn bench(dir: &Path, k: usize, common: &CommonArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "col"))
        .collect();
    files.sort();
    if files.is_empty() {
        return Err(Failure::Input(format!("{}: no .col files", dir.display())));
    }
    let graphs = files.iter().map(|f| load_graph(f, err)).collect::<Result<Vec<_>, _>>()?;

    let fields = match common.field {
        Some(f) => {
            f.validate(k).map_err(AlgorithmError::from)?;
            vec![f]
        }
        None => vec![FieldConfig::Rationals, FieldConfig::PrimeField(bench_prime(k))],
    };
    let budget = OracleBudget { max_vertices: common.max_vertices.unwrap_or(OracleBudget::default().max_vertices) };
    let census: Vec<_> = graphs.par_iter().map(|g| enumerate_colorings(g, k, budget).ok()).collect();
    let colorings: Vec<Option<ColorPartition>> =
        census.iter().map(|c| c.as_ref().and_then(|c| c.surjective_partition(k).cloned())).collect();

    let mut jobs = Vec::new();
    for (idx, g) in graphs.iter().enumerate() {
        for order in OrderKind::ALL {
            for &field in &fields {
                let mut opts = SolveOptions::new(order, field);
                if common.monolithic {
                    opts = opts.monolithic();
                }
                for method in Method::COLORABILITY.into_iter().chain(Method::UNIQUENESS) {
                    if method == Method::NfGraphPolyJnk
                        && !(k < g.n() && g.n() <= opts.jnk_max_n && k <= opts.jnk_max_k)
                    {
                        continue;
                    }
                    let coloring = colorings[idx].as_ref();
                    if method.needs_coloring() && coloring.is_none() {
                        continue;
                    }
                    jobs.push(Job { graph: idx, g, method, coloring, opts });
                }
            }
        }
    }

    let results: Vec<(usize, Result<VerdictReport, String>)> = jobs
        .par_iter()
        .map(|job| {
            let result =
                decide(job.g, k, job.method, job.coloring, &job.opts).map_err(|e| e.to_string()).and_then(|v| {
                    let report = v.report();
                    let parsed = VerdictReport::from_json(&v.to_json()).map_err(|e| e.to_string())?;
                    if parsed != report {
                        return Err(format!("{} report does not round-trip", job.method));
                    }
                    Ok(parsed)
                });
            (job.graph, result)
        })
        .collect();

    let mut rows: Vec<BenchGraph> = files
        .iter()
        .zip(&graphs)
        .zip(&census)
        .map(|((f, g), c)| BenchGraph {
            file: f.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default(),
            n: g.n(),
            edges: g.edge_count(),
            colorable: None,
            unique: None,
            oracle_colorable: c.as_ref().map(|c| c.count > 0),
            oracle_unique: c.as_ref().map(|c| c.is_uniquely_colorable(k)),
            agree: true,
            verdicts: Vec::new(),
            errors: Vec::new(),
        })
        .collect();
    for (idx, result) in results {
        let row = &mut rows[idx];
        match result {
            Ok(r) => {
                let (slot, oracle) = if r.method.decides_uniqueness() {
                    (&mut row.unique, row.oracle_unique)
                } else {
                    (&mut row.colorable, row.oracle_colorable)
                };
                if slot.is_some_and(|a| a != r.answer) || oracle.is_some_and(|a| a != r.answer) {
                    row.agree = false;
                }
                slot.get_or_insert(r.answer);
                row.verdicts.push(r);
            }
            Err(e) => {
                row.agree = false;
                row.errors.push(e);
            }
        }
    }

    let failures = rows.iter().filter(|r| !r.agree).count();
    if common.json {
        #[derive(Serialize)]
        struct Summary<'a> {
            k: usize,
            graphs: &'a [BenchGraph],
            disagreements: usize,
        }
        let summary = Summary { k, graphs: &rows, disagreements: failures };
        writeln!(out, "{}", serde_json::to_string(&summary).expect("bench summary serializes"))?;
    } else {
        print_bench_table(out, k, &rows)?;
    }
    Ok(if failures == 0 { EXIT_OK } else { EXIT_DISAGREEMENT })
}

fn yes_no(a: Option<bool>) -> &'static str {
    match a {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    }
}

fn print_bench_table(out: &mut dyn Write, k: usize, rows: &[BenchGraph]) -> std::io::Result<()> {
    writeln!(
        out,
        "{:<24} {:>3} {:>5} {:>10} {:>8} {:>7} {:>10}",
        "graph", "n", "edges", "colorable", "unique", "agree", "total ms"
    )?;
    for r in rows {
        let total: f64 = r.verdicts.iter().map(|v| v.elapsed_ms).sum();
        writeln!(
            out,
            "{:<24} {:>3} {:>5} {:>10} {:>8} {:>7} {:>10.1}",
            r.file,
            r.n,
            r.edges,
            yes_no(r.colorable),
            yes_no(r.unique),
            if r.agree { "ok" } else { "DISAGREE" },
            total
        )?;
        for e in &r.errors {
            writeln!(out, "  error: {e}")?;
        }
    }
    let mut per_method: std::collections::BTreeMap<Method, (usize, f64)> = Default::default();
    for v in rows.iter().flat_map(|r| &r.verdicts) {
        let e = per_method.entry(v.method).or_default();
        e.0 += 1;
        e.1 += v.elapsed_ms;
    }
    writeln!(out)?;
    writeln!(out, "{:<24} {:>6} {:>10}", "method (k = ".to_string() + &k.to_string() + ")", "runs", "total ms")?;
    for (m, (runs, ms)) in per_method {
        writeln!(out, "{:<24} {:>6} {:>10.1}", m.name(), runs, ms)?;
    }
    let bad = rows.iter().filter(|r| !r.agree).count();
    writeln!(out, "\n{} graphs, {} with disagreements", rows.len(), bad)
}
