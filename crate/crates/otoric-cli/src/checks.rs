//! The `verify` subcommand's invariant suite.
//!
//! Each check is a named pass/fail over the set of circuit vectors the
//! formulas produce; `run_checks_on` takes the vectors as an argument so
//! the suite itself can be exercised against corrupted inputs.

use num::bigint::BigInt;
use num::{One, Zero};

use otoric::linalg::gcd_of_entries;
use otoric::{
    circuits, circuits_brute_force, is_primitive, OracleBudget, OracleError, WeightedOrientedGraph,
};

pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn outcome(name: &'static str, passed: bool, detail: String) -> CheckOutcome {
    CheckOutcome {
        name,
        passed,
        detail,
    }
}

/// Runs the full suite on the graph's own formula output.
pub fn run_checks(
    graph: &WeightedOrientedGraph,
    budget: &OracleBudget,
) -> Result<Vec<CheckOutcome>, OracleError> {
    let vectors: Vec<Vec<BigInt>> = circuits(graph).into_iter().map(|c| c.vector).collect();
    run_checks_on(graph, &vectors, budget)
}

/// Runs the suite against the given circuit vectors.
pub fn run_checks_on(
    graph: &WeightedOrientedGraph,
    vectors: &[Vec<BigInt>],
    budget: &OracleBudget,
) -> Result<Vec<CheckOutcome>, OracleError> {
    let a = graph.incidence_matrix();
    let mut checks = Vec::new();

    let bad_kernel = vectors
        .iter()
        .filter(|v| !a.kernel_contains(v).unwrap_or(false))
        .count();
    checks.push(outcome(
        "kernel-membership",
        bad_kernel == 0,
        format!(
            "{} of {} vectors lie in the kernel exactly",
            vectors.len() - bad_kernel,
            vectors.len()
        ),
    ));

    let bad_gcd = vectors
        .iter()
        .filter(|v| gcd_of_entries(v) != BigInt::one())
        .count();
    checks.push(outcome(
        "gcd-normalization",
        bad_gcd == 0,
        format!(
            "{} of {} vectors have coprime entries",
            vectors.len() - bad_gcd,
            vectors.len()
        ),
    ));

    // A vertex incident to exactly one support edge forces that entry to
    // zero; one incident to exactly two forces opposite signs.
    let mut sign_violations = 0usize;
    for v in vectors {
        for vertex in 0..graph.vertex_count() {
            let incident: Vec<&BigInt> = graph
                .edges()
                .iter()
                .enumerate()
                .filter(|(e, edge)| {
                    (edge.tail == vertex || edge.head == vertex) && !v[*e].is_zero()
                })
                .map(|(e, _)| &v[e])
                .collect();
            if incident.len() == 1
                || (incident.len() == 2 && incident[0].sign() == incident[1].sign())
            {
                sign_violations += 1;
            }
        }
    }
    checks.push(outcome(
        "sign-alternation",
        sign_violations == 0,
        format!("{sign_violations} vertex violations of the two-edge sign rule"),
    ));

    let leaves = graph.leaves();
    let mut leaf_violations = 0usize;
    for v in vectors {
        for (e, x) in v.iter().enumerate() {
            if !x.is_zero() {
                let edge = graph.edge(e);
                if leaves.contains(&edge.tail) || leaves.contains(&edge.head) {
                    leaf_violations += 1;
                }
            }
        }
    }
    checks.push(outcome(
        "leaf-exclusion",
        leaf_violations == 0,
        format!("{leaf_violations} support edges touch a leaf"),
    ));

    let mut non_primitive = 0usize;
    for v in vectors {
        match is_primitive(&a, v, budget) {
            Ok(true) => {}
            Ok(false) => non_primitive += 1,
            Err(OracleError::Argument(_)) => non_primitive += 1,
            Err(e @ OracleError::BudgetExceeded(_)) => return Err(e),
        }
    }
    checks.push(outcome(
        "primitivity",
        non_primitive == 0,
        format!(
            "{} of {} vectors primitive by box enumeration",
            vectors.len() - non_primitive,
            vectors.len()
        ),
    ));

    let mut formula = vectors.to_vec();
    formula.sort();
    formula.dedup();
    let brute = circuits_brute_force(&a, budget)?;
    let equal = formula == brute;
    checks.push(outcome(
        "oracle-equivalence",
        equal,
        format!(
            "formula route gives {} circuits, brute force gives {}",
            formula.len(),
            brute.len()
        ),
    ));

    let normalized = graph.normalize_sink_weights();
    let mut renormalized: Vec<Vec<BigInt>> = circuits(&normalized)
        .into_iter()
        .map(|c| c.vector)
        .collect();
    renormalized.sort();
    let sink_ok = formula == renormalized;
    checks.push(outcome(
        "sink-independence",
        sink_ok,
        "circuits unchanged by resetting sink weights to 1".to_string(),
    ));

    Ok(checks)
}
