//! Membership in the strongly-robust class, with the generator count
//! and Betti table for members.
//!
//! A graph is in the class when it has at most two unbalanced cycles,
//! no balanced cycle shares an edge with any path connecting the two
//! unbalanced cycles (when exactly two exist and are disjoint), and no
//! two balanced cycles share an edge. For such graphs the circuit set
//! is the whole Graver basis and a minimal generating set, so the
//! number of generators is the number of distinct circuits and the
//! Betti numbers are binomial coefficients.

use num::bigint::BigInt;
use num::One;
use thiserror::Error;

use crate::circuits::{circuits, CircuitBinomial};
use crate::cycles::{connecting_paths, enumerate_cycles};
use crate::graph::WeightedOrientedGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RobustnessError {
    #[error("out of class: {0}")]
    OutOfClass(String),
}

/// Verdict and derived data for one graph.
#[derive(Debug, Clone)]
pub struct RobustnessReport<'g> {
    pub in_class: bool,
    /// First violated hypothesis, when out of class.
    pub violated_condition: Option<String>,
    pub balanced_cycle_count: usize,
    pub unbalanced_cycle_count: usize,
    /// Number of distinct circuits; equals the minimal number of
    /// generators when `in_class` holds.
    pub mu: usize,
    /// `[C(mu, 0), ..., C(mu, mu)]`; meaningful when `in_class` holds.
    pub betti: Vec<BigInt>,
    /// True when the toric ideal is zero (no circuits).
    pub zero_ideal: bool,
    /// Generator count predicted by the case table, kept as a
    /// cross-check of the circuit list.
    pub case_table_mu: usize,
    pub warnings: Vec<String>,
    pub circuits: Vec<CircuitBinomial<'g>>,
}

/// Binomial coefficients `[C(mu, 0), ..., C(mu, mu)]`.
///
/// The projective dimension of an in-class ideal equals `mu`.
pub fn betti_table(mu: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(mu + 1);
    let mut c = BigInt::one();
    for i in 0..=mu {
        row.push(c.clone());
        if i < mu {
            c = c * BigInt::from(mu - i) / BigInt::from(i + 1);
        }
    }
    row
}

/// Evaluates the class hypotheses and fills the report.
pub fn check_robust_class(graph: &WeightedOrientedGraph) -> RobustnessReport<'_> {
    let cycles = enumerate_cycles(graph);
    let (balanced, unbalanced): (Vec<_>, Vec<_>) =
        cycles.into_iter().partition(|c| c.is_balanced());
    let mut violated: Option<String> = None;

    if unbalanced.len() > 2 {
        violated = Some("more than two unbalanced cycles".into());
    }

    // No two balanced cycles may share an edge ("share a path" read as a
    // path of length >= 1).
    if violated.is_none() {
        'pairs: for i in 0..balanced.len() {
            for j in i + 1..balanced.len() {
                if !balanced[i].edge_set().is_disjoint(&balanced[j].edge_set()) {
                    violated = Some("two balanced cycles share a path".into());
                    break 'pairs;
                }
            }
        }
    }

    // With exactly two disjoint unbalanced cycles, no balanced cycle may
    // share an edge with any connecting path.
    let mut connected_pair = false;
    let mut shared_vertex_pair = false;
    if unbalanced.len() == 2 {
        let (a, b) = (&unbalanced[0], &unbalanced[1]);
        let common = a.vertex_set().intersection(&b.vertex_set()).count();
        shared_vertex_pair = common == 1;
        if common == 0 {
            let paths = connecting_paths(graph, a, b);
            connected_pair = !paths.is_empty();
            if violated.is_none() {
                'outer: for p in &paths {
                    let path_edges = p.edge_set();
                    for c in &balanced {
                        if !c.edge_set().is_disjoint(&path_edges) {
                            violated = Some(
                                "a balanced cycle shares an edge with the path connecting the two unbalanced cycles"
                                    .into(),
                            );
                            break 'outer;
                        }
                    }
                }
            }
        }
    }

    let circuit_list = circuits(graph);
    let mu = circuit_list.len();
    let case_table_mu = if unbalanced.len() == 2 && (shared_vertex_pair || connected_pair) {
        balanced.len() + 1
    } else {
        balanced.len()
    };
    let in_class = violated.is_none();
    let mut warnings = Vec::new();
    if in_class && mu != case_table_mu {
        warnings.push(format!(
            "case table predicts mu = {case_table_mu} but the circuit list has {mu} entries"
        ));
    }

    RobustnessReport {
        in_class,
        violated_condition: violated,
        balanced_cycle_count: balanced.len(),
        unbalanced_cycle_count: unbalanced.len(),
        mu,
        betti: betti_table(mu),
        zero_ideal: mu == 0,
        case_table_mu,
        warnings,
        circuits: circuit_list,
    }
}

/// Minimal number of generators of an in-class graph's toric ideal.
pub fn mu_of(graph: &WeightedOrientedGraph) -> Result<usize, RobustnessError> {
    let report = check_robust_class(graph);
    if !report.in_class {
        return Err(RobustnessError::OutOfClass(
            report
                .violated_condition
                .unwrap_or_else(|| "hypotheses violated".into()),
        ));
    }
    Ok(report.mu)
}
