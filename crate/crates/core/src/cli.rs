//! Command-line front end. [`run`] is the whole program minus process exit,
//! so it can be driven from tests with in-memory streams.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::Command;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bench::{render_table, run_bench, BenchConfig, Family};
use crate::cycles::{enumerate_simple_cycles, DEFAULT_MAX_CYCLES};
use crate::encoder::build_full;
use crate::error::Error;
use crate::families;
use crate::formula::cnf::{tseitin_cnf, write_dimacs};
use crate::formula::dnf::DEFAULT_MAX_CUBES;
use crate::graph::{parse_edge_list, Graph};
use crate::solver::{solve_graph, solve_via_external, Method, SolveOptions, SolveResult, DEFAULT_MAX_ROUNDS};
use crate::verify::{exhaustive_graphs, random_corpus, verify_corpus, verify_graph, Outcome, CHECK_NAMES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;
pub const EXIT_CAP_OVERFLOW: i32 = 3;
pub const EXIT_ASSUMPTIONS: i32 = 4;

const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "hcpsat", version, about = "Hamiltonian cycle to SAT encoder, solver and checker")]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(Debug, Subcommand)]
enum Commands {
    /// Print the formula F = F1 & F2 as an expression or DIMACS CNF
    Encode(EncodeArgs),
    /// Decide Hamiltonicity through the encoding and decode the cycles
    Solve(SolveArgs),
    /// Check the encoding against brute-force oracles
    Verify(VerifyArgs),
    /// List simple cycles in canonical form
    Cycles(CyclesArgs),
    /// Measure formula size across graph families
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Edge-list file (`-` for stdin)
    input: Option<PathBuf>,
    /// Generate the graph instead: complete:N, theta:N, random:N:P:SEED, regular:N:D:SEED
    #[arg(long, value_name = "SPEC", conflicts_with = "input")]
    generate: Option<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    /// `(a & b | ~c) & ...` with `~` for negation
    Expr,
    /// Juxtaposed literals, e.g. `(fg)(ad~f|a~df|~adf)`
    Compact,
    Dimacs,
}

#[derive(Debug, Args)]
struct EncodeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value = "expr")]
    format: Format,
    /// Emit F1 only
    #[arg(long)]
    no_f2: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_CYCLES, value_parser = positive)]
    max_cycles: usize,
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Exit with status 4 when the graph violates a structural assumption
    #[arg(long)]
    strict_assumptions: bool,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, default_value = "brute", value_parser = parse_method)]
    method: Method,
    /// Enumerate every model instead of stopping at the first
    #[arg(long)]
    all: bool,
    /// Solver output to check (method external)
    #[arg(long)]
    model_file: Option<PathBuf>,
    /// DIMACS solver executable to run on the exported CNF (method external)
    #[arg(long)]
    solver: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_MAX_ROUNDS, value_parser = positive)]
    max_rounds: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_CYCLES, value_parser = positive)]
    max_cycles: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_CUBES, value_parser = positive)]
    max_cubes: usize,
    #[arg(long)]
    strict_assumptions: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Single edge-list file to verify
    input: Option<PathBuf>,
    /// exhaustive-n<K> (connected labelled graphs on K <= 6 vertices) or random
    #[arg(long, conflicts_with = "input")]
    corpus: Option<String>,
    #[arg(long, default_value_t = 100, value_parser = positive)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    #[arg(long, default_value_t = 18)]
    max_m: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_CYCLES, value_parser = positive)]
    max_cycles: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_CUBES, value_parser = positive)]
    max_cubes: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct CyclesArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Omit cycles through every vertex
    #[arg(long)]
    non_spanning: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_CYCLES, value_parser = positive)]
    max_cycles: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long, default_value = "complete", value_parser = parse_family)]
    family: Family,
    #[arg(long, default_value_t = 5)]
    min_n: usize,
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    /// Vertex degree for random-regular
    #[arg(long, default_value_t = 3)]
    degree: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Also time lazy refinement
    #[arg(long)]
    solve: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_CYCLES, value_parser = positive)]
    max_cycles: usize,
    #[arg(long)]
    json: bool,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse()
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

/// Failure of a subcommand: a library error, or a plain message with its exit code.
enum Failure {
    Lib(Error),
    Exit(i32, String),
    /// Output closed by the reader.
    BrokenPipe,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure::BrokenPipe;
        }
        Failure::Exit(EXIT_USAGE, format!("error[E_IO]: {e}"))
    }
}

type CmdResult = Result<i32, Failure>;

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Internal(_) => EXIT_VERIFY_FAILED,
        e if e.is_cap_overflow() => EXIT_CAP_OVERFLOW,
        _ => EXIT_USAGE,
    }
}

/// Runs the CLI on `argv` (including the program name) and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
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
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Commands::Encode(a) => encode(a, out, err),
        Commands::Solve(a) => solve(a, out, err),
        Commands::Verify(a) => verify(a, out),
        Commands::Cycles(a) => cycles(a, out),
        Commands::Bench(a) => bench(a, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error[{}]: {e}", e.code());
            exit_code(&e)
        }
        Err(Failure::Exit(code, message)) => {
            let _ = writeln!(err, "{message}");
            code
        }
        Err(Failure::BrokenPipe) => EXIT_OK,
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Exit(EXIT_USAGE, format!("error[E_IO]: {}: {e}", path.display())))
    }
}

fn load_graph(input: &InputArgs) -> Result<Graph, Failure> {
    match (&input.input, &input.generate) {
        (Some(path), None) => Ok(parse_edge_list(&read_text(path)?)?),
        (None, Some(spec)) => Ok(families::from_spec(spec)?),
        _ => Err(Failure::Exit(
            EXIT_USAGE,
            "error[E_USAGE]: exactly one of INPUT or --generate is required".into(),
        )),
    }
}

/// Prints assumption warnings; returns the strict-mode exit code if any.
fn report_warnings(g: &Graph, warnings: &[crate::encoder::Warning], strict: bool, err: &mut dyn Write) -> Option<i32> {
    for w in warnings {
        let _ = writeln!(err, "warning[W_ASSUMPTION]: {}", w.describe(g));
    }
    (strict && !warnings.is_empty()).then_some(EXIT_ASSUMPTIONS)
}

fn encode(a: EncodeArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let g = load_graph(&a.input)?;
    let report = build_full(&g, a.max_cycles)?;
    let formula = if a.no_f2 { report.f1() } else { report.formula.clone() };
    let text = match a.format {
        Format::Dimacs => write_dimacs(&tseitin_cnf(&formula)),
        Format::Expr | Format::Compact => {
            let render = |f: &crate::formula::Formula| match a.format {
                Format::Compact => f.render_compact(),
                _ => f.render(),
            };
            let mut s = format!("F1 = {}\n", render(&report.f1()));
            if !a.no_f2 {
                let f2 = report.f2();
                let body = if f2.blocks().is_empty() { "true".to_string() } else { render(&f2) };
                s.push_str(&format!("F2 = {body}\n"));
            }
            s
        }
    };
    match &a.output {
        Some(path) => fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(report_warnings(&g, &report.warnings, a.strict_assumptions, err).unwrap_or(EXIT_OK))
}

fn edge_set(g: &Graph, bits: &crate::formula::Assignment) -> String {
    let labels: Vec<String> = bits.true_vars().iter().map(|&e| g.edge(e).display_label()).collect();
    format!("{{{}}}", labels.join(","))
}

fn solve(a: SolveArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let g = load_graph(&a.input)?;
    let warnings = build_full(&g, a.max_cycles)?.warnings;
    let result: SolveResult = match a.method {
        Method::External => {
            let text = match (&a.model_file, &a.solver) {
                (Some(path), _) => read_text(path)?,
                (None, Some(solver)) => run_external_solver(&g, solver, a.max_cycles)?,
                (None, None) => {
                    return Err(Failure::Exit(
                        EXIT_USAGE,
                        "error[E_USAGE]: --method external needs --model-file or --solver".into(),
                    ))
                }
            };
            solve_via_external(&g, &text, a.max_cycles)?
        }
        method => {
            let opts = SolveOptions {
                find_all: a.all,
                max_cycles: a.max_cycles,
                max_cubes: a.max_cubes,
                max_rounds: a.max_rounds,
                ..SolveOptions::default()
            };
            solve_graph(&g, method, &opts)?
        }
    };

    let models: Vec<(String, String)> = result
        .models
        .iter()
        .zip(&result.decoded_cycles)
        .map(|(m, c)| (edge_set(&g, m), g.format_walk(c)))
        .collect();
    if a.json {
        let doc = json!({
            "schema_version": SCHEMA_VERSION,
            "method": result.method.to_string(),
            "satisfiable": result.satisfiable,
            "models": models.iter().map(|(e, c)| json!({"edges": e, "cycle": c})).collect::<Vec<_>>(),
            "stats": {
                "assignments_tested": result.stats.assignments_tested,
                "search_nodes": result.stats.search_nodes,
                "rounds": result.stats.rounds,
                "blocks_added": result.stats.blocks_added,
                "dnf_cubes": result.stats.dnf_cubes,
            },
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json value"))?;
    } else {
        let verdict = if result.satisfiable { "SATISFIABLE" } else { "UNSATISFIABLE" };
        writeln!(out, "verdict: {verdict} (method {})", result.method)?;
        for (edges, cycle) in &models {
            writeln!(out, "edges: {edges} cycle: {cycle}")?;
        }
        writeln!(out, "stats:")?;
        writeln!(out, "  models: {}", result.models.len())?;
        writeln!(out, "  assignments_tested: {}", result.stats.assignments_tested)?;
        writeln!(out, "  search_nodes: {}", result.stats.search_nodes)?;
        writeln!(out, "  rounds: {}", result.stats.rounds)?;
        writeln!(out, "  blocks_added: {}", result.stats.blocks_added)?;
        writeln!(out, "  dnf_cubes: {}", result.stats.dnf_cubes)?;
    }
    Ok(report_warnings(&g, &warnings, a.strict_assumptions, err).unwrap_or(EXIT_OK))
}

/// Writes the CNF to a temporary file, runs `solver <file>` and returns its stdout.
fn run_external_solver(g: &Graph, solver: &Path, max_cycles: usize) -> Result<String, Failure> {
    let report = build_full(g, max_cycles)?;
    let path = std::env::temp_dir().join(format!("hcpsat-{}.cnf", std::process::id()));
    fs::write(&path, write_dimacs(&tseitin_cnf(&report.formula)))?;
    let output = Command::new(solver).arg(&path).output();
    let _ = fs::remove_file(&path);
    let output = output.map_err(|e| Failure::Exit(EXIT_USAGE, format!("error[E_SOLVER]: {}: {e}", solver.display())))?;
    Ok(String::from_utf8_lossy(&output.stdout).into_owned())
}

fn verify(a: VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let graphs: Vec<Graph> = match (&a.input, a.corpus.as_deref()) {
        (Some(path), None) => vec![parse_edge_list(&read_text(path)?)?],
        (None, Some("random")) => random_corpus(a.count, a.seed, a.max_n, a.max_m),
        (None, Some(name)) => match name.strip_prefix("exhaustive-n").and_then(|k| k.parse::<usize>().ok()) {
            Some(k) if (1..=6).contains(&k) => exhaustive_graphs(k, true),
            _ => {
                return Err(Failure::Exit(
                    EXIT_USAGE,
                    format!("error[E_USAGE]: unknown corpus {name:?} (expected exhaustive-n1..exhaustive-n6 or random)"),
                ))
            }
        },
        _ => {
            return Err(Failure::Exit(
                EXIT_USAGE,
                "error[E_USAGE]: exactly one of INPUT or --corpus is required".into(),
            ))
        }
    };

    let (report, checks) = if graphs.len() == 1 {
        let check = verify_graph(&graphs[0], a.max_cycles, a.max_cubes)?;
        verify_corpus(&graphs, a.max_cycles, a.max_cubes).map(|(r, _)| (r, vec![check]))?
    } else {
        verify_corpus(&graphs, a.max_cycles, a.max_cubes)?
    };

    if a.json {
        let doc = json!({
            "schema_version": SCHEMA_VERSION,
            "graphs": report.graphs,
            "passed": report.passed(),
            "checks": report.tallies,
            "failing": report.failing,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json value"))?;
    } else {
        if let [check] = checks.as_slice() {
            writeln!(
                out,
                "graph: n={} m={} 2-factors={} hamiltonian_cycles={} models={}",
                check.n,
                check.m,
                check.two_factors.map_or("-".to_string(), |c| c.to_string()),
                check.hamiltonian_cycles,
                check.f_models
            )?;
        }
        writeln!(out, "{:<30} {:>6} {:>6} {:>8}  result", "check", "pass", "fail", "skipped")?;
        for t in &report.tallies {
            let status = if t.fail == 0 { "PASS" } else { "FAIL" };
            writeln!(out, "{:<30} {:>6} {:>6} {:>8}  {status}", t.name, t.pass, t.fail, t.skipped)?;
        }
        for &i in &report.failing {
            let c = &checks[i];
            let failed: Vec<&str> = CHECK_NAMES
                .iter()
                .zip(c.outcomes)
                .filter(|(_, o)| *o == Outcome::Fail)
                .map(|(n, _)| *n)
                .collect();
            writeln!(out, "failing graph #{i}: {} ({})", failed.join(", "), c.notes.join("; "))?;
            write!(out, "{}", graphs[i].to_edge_list())?;
        }
        writeln!(
            out,
            "verdict: {} ({} graphs)",
            if report.passed() { "PASS" } else { "FAIL" },
            report.graphs
        )?;
    }
    Ok(if report.passed() { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

fn cycles(a: CyclesArgs, out: &mut dyn Write) -> CmdResult {
    let g = load_graph(&a.input)?;
    let cycles = enumerate_simple_cycles(&g, a.max_cycles)?;
    let shown: Vec<String> = cycles
        .iter()
        .filter(|c| !(a.non_spanning && c.spanning))
        .map(|c| g.format_walk(&c.vertices))
        .collect();
    if a.json {
        let doc = json!({"schema_version": SCHEMA_VERSION, "cycles": shown, "count": shown.len()});
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json value"))?;
    } else {
        for c in &shown {
            writeln!(out, "{c}")?;
        }
        writeln!(out, "count: {}", shown.len())?;
    }
    Ok(EXIT_OK)
}

fn bench(a: BenchArgs, out: &mut dyn Write) -> CmdResult {
    if a.min_n > a.max_n {
        return Err(Failure::Exit(EXIT_USAGE, "error[E_USAGE]: --min-n exceeds --max-n".into()));
    }
    let config = BenchConfig {
        family: a.family,
        sizes: (a.min_n..=a.max_n).collect(),
        degree: a.degree,
        seed: a.seed,
        max_cycles: a.max_cycles,
        solve: a.solve,
    };
    let (records, error) = run_bench(&config);
    if a.json {
        let doc = json!({"schema_version": SCHEMA_VERSION, "records": records});
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json value"))?;
    } else {
        write!(out, "{}", render_table(&records))?;
    }
    match error {
        None => Ok(EXIT_OK),
        Some(e) => Err(e.into()),
    }
}
