//! `otoric`: circuit binomials of toric ideals of weighted oriented
//! graphs, from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error,
//! 3 enumeration budget exceeded, 4 graph outside the robust class.

mod checks;

use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::bigint::BigInt;
use num::{Signed, ToPrimitive};
use rayon::prelude::*;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use otoric::circuits::circuit_for_support;
use otoric::{
    assemble_circuits, check_robust_class, circuits_brute_force, fixtures, graver_small,
    parse_graph, render_binomial, scan_supports, CircuitBinomial, CircuitSupport, OracleBudget,
    OracleError, WeightedOrientedGraph,
};

#[derive(Parser)]
#[command(
    name = "otoric",
    version,
    about = "Circuit binomials of toric ideals of vertex-weighted oriented graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structural report: vertices, edges, incidence matrix, cycles and balance
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the circuit binomials with their supporting shapes
    Circuits {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Compute the supports' generators on this many threads
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Run the invariant suite against the brute-force oracle
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Robustness verdict with generator count and Betti table
    Betti {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compare formula circuits, brute-force circuits and the bounded Graver set
    OracleCompare {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Graph document (JSON)
    graph: Option<PathBuf>,
    /// Use an embedded example document instead of a file
    #[arg(long, value_parser = fixture_names())]
    fixtures: Option<String>,
}

fn fixture_names() -> clap::builder::PossibleValuesParser {
    clap::builder::PossibleValuesParser::new(fixtures::NAMES)
}

#[derive(Args)]
struct BudgetArgs {
    /// Largest |entry| for bounded Graver enumeration
    /// (oracle-compare default: the largest circuit entry)
    #[arg(long)]
    bound: Option<u64>,
    /// Largest circuit support size enumerated
    #[arg(long)]
    max_support: Option<usize>,
    /// Cap on enumeration states (subsets or box points)
    #[arg(long)]
    max_states: Option<u64>,
}

impl BudgetArgs {
    fn to_budget(&self) -> OracleBudget {
        let defaults = OracleBudget::default();
        OracleBudget {
            max_entry_bound: self.bound.unwrap_or(defaults.max_entry_bound),
            max_support_size: self.max_support.unwrap_or(defaults.max_support_size),
            max_enumeration_count: self.max_states.unwrap_or(defaults.max_enumeration_count),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
    fn from_oracle(err: OracleError) -> Self {
        let code = match err {
            OracleError::BudgetExceeded(_) => 3,
            OracleError::Argument(_) => 2,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("otoric: {}", failure.message);
            failure.code
        }
    };
    std::process::exit(code);
}

struct Input {
    graph: WeightedOrientedGraph,
    digest: String,
}

fn load_input(input: &InputArgs) -> Result<Input, Failure> {
    let document = match (&input.fixtures, &input.graph) {
        (Some(name), _) => fixtures::by_name(name)
            .ok_or_else(|| Failure::input(format!("unknown fixture {name}")))?
            .to_string(),
        (None, Some(path)) => fs::read_to_string(path)
            .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?,
        (None, None) => {
            return Err(Failure::input(
                "no input: pass a graph document or --fixtures NAME",
            ))
        }
    };
    let graph = parse_graph(&document).map_err(|e| Failure::input(e.to_string()))?;
    let mut hasher = Sha256::new();
    hasher.update(document.as_bytes());
    let digest = hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect::<String>();
    Ok(Input {
        graph,
        digest: format!("sha256:{digest}"),
    })
}

/// Report envelope; `timing_ms` is the only nondeterministic field.
fn emit_json(
    command: &str,
    input: &Input,
    results: Value,
    timing: &[(&str, f64)],
    warnings: &[String],
) {
    let timing: Value = timing
        .iter()
        .map(|(k, v)| (k.to_string(), json!(v)))
        .collect::<serde_json::Map<String, Value>>()
        .into();
    let report = json!({
        "command": command,
        "input_digest": input.digest,
        "results": results,
        "timing_ms": timing,
        "warnings": warnings,
    });
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("valid JSON")
    );
}

fn ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn vector_strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn vector_display(v: &[BigInt]) -> String {
    format!(
        "({})",
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    )
}

fn support_json(s: &CircuitSupport<'_>, g: &WeightedOrientedGraph) -> Value {
    let edge_ids =
        |edges: &[usize]| -> Vec<String> { edges.iter().map(|&e| g.edge(e).id.clone()).collect() };
    json!({
        "kind": s.kind_name(),
        "cycles": s.cycles().iter().map(|c| edge_ids(c.edges())).collect::<Vec<_>>(),
        "path": s.path().map(|p| edge_ids(p.edges())),
        "outer": s.outer().map(|c| edge_ids(c.edges())),
    })
}

fn run(cli: Cli) -> Result<i32, Failure> {
    match cli.command {
        Command::Analyze { input, format } => cmd_analyze(&load_input(&input)?, format),
        Command::Circuits {
            input,
            format,
            jobs,
        } => cmd_circuits(&load_input(&input)?, format, jobs),
        Command::Verify {
            input,
            format,
            budget,
        } => cmd_verify(&load_input(&input)?, format, &budget.to_budget()),
        Command::Betti { input, format } => cmd_betti(&load_input(&input)?, format),
        Command::OracleCompare {
            input,
            format,
            budget,
        } => cmd_oracle_compare(
            &load_input(&input)?,
            format,
            budget.bound,
            &budget.to_budget(),
        ),
    }
}

fn cmd_analyze(input: &Input, format: Format) -> Result<i32, Failure> {
    let start = Instant::now();
    let g = &input.graph;
    let a = g.incidence_matrix();
    let cycles = otoric::enumerate_cycles(g);
    let sinks = g.sinks();
    let leaves = g.leaves();
    let compute_ms = ms(start);

    let ids =
        |idxs: &[usize]| -> Vec<String> { idxs.iter().map(|&v| g.vertex(v).id.clone()).collect() };
    match format {
        Format::Text => {
            println!(
                "graph: {} vertices, {} edges",
                g.vertex_count(),
                g.edge_count()
            );
            println!(
                "vertices: {}",
                g.vertices()
                    .iter()
                    .map(|v| format!("{}(w={})", v.id, v.weight))
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            println!(
                "edges: {}",
                g.edges()
                    .iter()
                    .map(|e| format!(
                        "{}=({}->{})",
                        e.id,
                        g.vertex(e.tail).id,
                        g.vertex(e.head).id
                    ))
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            println!("incidence matrix (rows = vertices, columns = edges):");
            print!("{a}");
            println!("sinks: {}", join_or_none(&ids(&sinks)));
            println!("leaves: {}", join_or_none(&ids(&leaves)));
            println!("cycles: {}", cycles.len());
            for (i, c) in cycles.iter().enumerate() {
                let det = c.det();
                println!(
                    "  [{}] length {}, {} (det {}): {} | {}",
                    i + 1,
                    c.len(),
                    if c.is_balanced() {
                        "balanced"
                    } else {
                        "unbalanced"
                    },
                    det,
                    ids(c.vertices()).join(" "),
                    c.edges()
                        .iter()
                        .map(|&e| g.edge(e).id.clone())
                        .collect::<Vec<_>>()
                        .join(" ")
                );
            }
        }
        Format::Json => {
            let results = json!({
                "vertices": g.vertices().iter().map(|v| json!({"id": v.id, "weight": v.weight})).collect::<Vec<_>>(),
                "edges": g.edges().iter().map(|e| json!({
                    "id": e.id,
                    "tail": g.vertex(e.tail).id,
                    "head": g.vertex(e.head).id,
                })).collect::<Vec<_>>(),
                "incidence_matrix": (0..a.rows()).map(|r| {
                    (0..a.cols()).map(|c| a.at(r, c).to_string()).collect::<Vec<_>>()
                }).collect::<Vec<_>>(),
                "sinks": ids(&sinks),
                "leaves": ids(&leaves),
                "cycles": cycles.iter().map(|c| json!({
                    "vertices": ids(c.vertices()),
                    "edges": c.edges().iter().map(|&e| g.edge(e).id.clone()).collect::<Vec<_>>(),
                    "length": c.len(),
                    "balanced": c.is_balanced(),
                    "det": c.det().to_string(),
                })).collect::<Vec<_>>(),
            });
            emit_json("analyze", input, results, &[("analyze", compute_ms)], &[]);
        }
    }
    Ok(0)
}

fn join_or_none(items: &[String]) -> String {
    if items.is_empty() {
        "(none)".to_string()
    } else {
        items.join(" ")
    }
}

fn compute_circuits(
    g: &WeightedOrientedGraph,
    jobs: Option<usize>,
) -> Result<(Vec<CircuitBinomial<'_>>, Vec<String>), Failure> {
    let scan = scan_supports(g);
    let skipped = scan.skipped.clone();
    let circuits = match jobs {
        Some(k) if k > 1 => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| Failure::input(format!("cannot build thread pool: {e}")))?;
            let vectors = pool.install(|| {
                scan.supports
                    .par_iter()
                    .map(|s| circuit_for_support(s).expect("scanned supports are valid"))
                    .collect::<Vec<_>>()
            });
            assemble_circuits(vectors)
        }
        _ => assemble_circuits(
            scan.supports
                .iter()
                .map(|s| circuit_for_support(s).expect("scanned supports are valid"))
                .collect(),
        ),
    };
    Ok((circuits, skipped))
}

fn cmd_circuits(input: &Input, format: Format, jobs: Option<usize>) -> Result<i32, Failure> {
    let start = Instant::now();
    let g = &input.graph;
    let (found, warnings) = compute_circuits(g, jobs)?;
    let compute_ms = ms(start);
    let names = g.edge_ids();
    match format {
        Format::Text => {
            for c in &found {
                println!("{}", c.render(&names));
            }
            for w in &warnings {
                eprintln!("warning: {w}");
            }
        }
        Format::Json => {
            let results = json!({
                "count": found.len(),
                "circuits": found.iter().map(|c| json!({
                    "vector": vector_strings(&c.vector),
                    "binomial": c.render(&names),
                    "supports": c.supports.iter().map(|s| support_json(s, g)).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
            });
            emit_json(
                "circuits",
                input,
                results,
                &[("circuits", compute_ms)],
                &warnings,
            );
        }
    }
    Ok(0)
}

fn cmd_verify(input: &Input, format: Format, budget: &OracleBudget) -> Result<i32, Failure> {
    let start = Instant::now();
    let outcomes = checks::run_checks(&input.graph, budget).map_err(Failure::from_oracle)?;
    let verify_ms = ms(start);
    let all_passed = outcomes.iter().all(|c| c.passed);
    match format {
        Format::Text => {
            for c in &outcomes {
                println!(
                    "{} {}: {}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                );
            }
            println!(
                "verify: {} of {} checks passed",
                outcomes.iter().filter(|c| c.passed).count(),
                outcomes.len()
            );
        }
        Format::Json => {
            let results = json!({
                "all_passed": all_passed,
                "checks": outcomes.iter().map(|c| json!({
                    "name": c.name,
                    "passed": c.passed,
                    "detail": c.detail,
                })).collect::<Vec<_>>(),
            });
            emit_json("verify", input, results, &[("verify", verify_ms)], &[]);
        }
    }
    Ok(if all_passed { 0 } else { 1 })
}

fn cmd_betti(input: &Input, format: Format) -> Result<i32, Failure> {
    let start = Instant::now();
    let report = check_robust_class(&input.graph);
    let compute_ms = ms(start);
    if !report.in_class {
        let reason = report
            .violated_condition
            .clone()
            .unwrap_or_else(|| "hypotheses violated".into());
        eprintln!("otoric: out of class: {reason}");
        return Ok(4);
    }
    let betti: Vec<String> = report.betti.iter().map(|b| b.to_string()).collect();
    match format {
        Format::Text => {
            println!("in-class: yes");
            println!("balanced cycles: {}", report.balanced_cycle_count);
            println!("unbalanced cycles: {}", report.unbalanced_cycle_count);
            println!("mu: {}", report.mu);
            println!("betti: {}", betti.join(" "));
            println!("projective dimension: {}", report.mu);
            if report.zero_ideal {
                println!("note: the toric ideal is zero");
            }
            for w in &report.warnings {
                eprintln!("warning: {w}");
            }
        }
        Format::Json => {
            let results = json!({
                "in_class": true,
                "balanced_cycles": report.balanced_cycle_count,
                "unbalanced_cycles": report.unbalanced_cycle_count,
                "mu": report.mu,
                "betti": betti,
                "projective_dimension": report.mu,
                "zero_ideal": report.zero_ideal,
                "case_table_mu": report.case_table_mu,
            });
            emit_json(
                "betti",
                input,
                results,
                &[("betti", compute_ms)],
                &report.warnings,
            );
        }
    }
    Ok(0)
}

fn cmd_oracle_compare(
    input: &Input,
    format: Format,
    bound: Option<u64>,
    budget: &OracleBudget,
) -> Result<i32, Failure> {
    let g = &input.graph;
    let a = g.incidence_matrix();
    let start = Instant::now();
    let (found, warnings) = compute_circuits(g, None)?;
    let mut formula: Vec<Vec<BigInt>> = found.iter().map(|c| c.vector.clone()).collect();
    formula.sort();
    let formula_ms = ms(start);

    let start = Instant::now();
    let brute = circuits_brute_force(&a, budget).map_err(Failure::from_oracle)?;
    let brute_ms = ms(start);

    let bound = bound.unwrap_or_else(|| {
        formula
            .iter()
            .flatten()
            .map(|x| x.abs())
            .max()
            .and_then(|x| x.to_u64())
            .unwrap_or(1)
            .max(1)
    });
    let start = Instant::now();
    let graver = graver_small(
        &a,
        &OracleBudget {
            max_entry_bound: bound,
            ..budget.clone()
        },
    )
    .map_err(Failure::from_oracle)?;
    let graver_ms = ms(start);

    let diff = |xs: &[Vec<BigInt>], ys: &[Vec<BigInt>]| -> Vec<Vec<BigInt>> {
        xs.iter().filter(|x| !ys.contains(x)).cloned().collect()
    };
    let formula_only = diff(&formula, &brute);
    let brute_only = diff(&brute, &formula);
    let graver_only = diff(&graver, &formula);
    let circuits_not_in_graver = diff(&formula, &graver);
    let all_equal = formula_only.is_empty()
        && brute_only.is_empty()
        && graver_only.is_empty()
        && circuits_not_in_graver.is_empty();

    let names = g.edge_ids();
    match format {
        Format::Text => {
            println!("formula circuits: {}", formula.len());
            for v in &formula {
                println!("  {}  {}", vector_display(v), render_binomial(v, &names));
            }
            println!("brute-force circuits: {}", brute.len());
            println!("bounded graver set (bound {bound}): {}", graver.len());
            print_diff("formula-only", &formula_only);
            print_diff("brute-force-only", &brute_only);
            print_diff("graver-only", &graver_only);
            print_diff("circuits-missing-from-graver", &circuits_not_in_graver);
            println!(
                "result: {}",
                if all_equal {
                    "all three sets equal"
                } else {
                    "sets differ"
                }
            );
            for w in &warnings {
                eprintln!("warning: {w}");
            }
        }
        Format::Json => {
            let to_json = |vs: &[Vec<BigInt>]| -> Vec<Vec<String>> {
                vs.iter().map(|v| vector_strings(v)).collect()
            };
            let results = json!({
                "bound": bound,
                "formula": to_json(&formula),
                "brute_force": to_json(&brute),
                "graver": to_json(&graver),
                "formula_only": to_json(&formula_only),
                "brute_force_only": to_json(&brute_only),
                "graver_only": to_json(&graver_only),
                "circuits_missing_from_graver": to_json(&circuits_not_in_graver),
                "equal": all_equal,
            });
            emit_json(
                "oracle-compare",
                input,
                results,
                &[
                    ("formula", formula_ms),
                    ("brute_force", brute_ms),
                    ("graver", graver_ms),
                ],
                &warnings,
            );
        }
    }
    Ok(if all_equal { 0 } else { 1 })
}

fn print_diff(label: &str, vs: &[Vec<BigInt>]) {
    if vs.is_empty() {
        println!("{label}: (none)");
    } else {
        println!("{label}: {}", vs.len());
        for v in vs {
            println!("  {}", vector_display(v));
        }
    }
}
