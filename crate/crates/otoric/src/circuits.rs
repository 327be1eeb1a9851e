//! Closed-form circuit binomial generators.
//!
//! Each of the four support shapes has an explicit formula for the
//! primitive binomial generator of its toric ideal, built from minors of
//! the incidence matrices of its constituent cycles and paths:
//!
//! * a balanced cycle `C` on `m` vertices: entry `i` is
//!   `(-1)^(i+1) * M(i)` where `M(i)` is the `(m-1)`-minor of `A(C)`
//!   deleting row 1 and column `i`, divided by the gcd `d` of all the
//!   minors;
//! * two unbalanced cycles sharing one vertex: the two cycles' minor
//!   vectors, cross-scaled by the opposite cycle's determinant;
//! * two unbalanced cycles joined by a path: the same cross-scaling with
//!   the path's end minors, and interior path entries scaled by both
//!   determinants;
//! * two unbalanced cycles sharing a path with unbalanced outer cycle:
//!   shared-path entries scaled by the outer determinant and the two arc
//!   entry blocks cross-scaled as above.
//!
//! Every produced vector lies in the kernel of the parent incidence
//! matrix, has coprime entries, and is sign-normalized so that its
//! lowest-indexed nonzero entry is positive.

use std::collections::{BTreeMap, BTreeSet};

use num::bigint::BigInt;
use num::{Signed, Zero};
use thiserror::Error;

use crate::cycles::{scan_supports, CircuitSupport, CycleSubgraph, Direction, PathSubgraph};
use crate::graph::WeightedOrientedGraph;
use crate::linalg::{canonical_sign, gcd_of_entries, IntMatrix};

/// Errors from the generator formulas.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CircuitError {
    /// The balanced-cycle formula was fed an unbalanced cycle.
    #[error("unbalanced cycle: {0}")]
    UnbalancedCycle(String),
    /// A pair formula was fed a balanced constituent cycle.
    #[error("unbalanced cycle required: {0}")]
    UnbalancedCycleRequired(String),
    /// The constituents do not form the expected shape.
    #[error("support shape error: {0}")]
    SupportShape(String),
    /// Shared-path formula with balanced outer cycle: the circuit is the
    /// balanced outer cycle itself.
    #[error("balanced outer cycle: use the balanced-cycle generator on the outer cycle")]
    BalancedOuterCycle,
    /// Generic argument error (zero vector and the like).
    #[error("argument error: {0}")]
    Argument(String),
}

/// A circuit binomial's exponent vector in parent edge order, together
/// with the support it was computed from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialVector<'g> {
    /// Exponents indexed by the parent graph's edge order; canonical sign.
    pub exponents: Vec<BigInt>,
    /// The shape the formula ran on.
    pub support: CircuitSupport<'g>,
}

/// A pure binomial split into its two monomials, stored as
/// (edge index, positive exponent) pairs in ascending edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Binomial {
    pub plus: Vec<(usize, BigInt)>,
    pub minus: Vec<(usize, BigInt)>,
}

impl Binomial {
    /// Splits an exponent vector: positive entries form the plus
    /// monomial, negative entries (negated) the minus monomial.
    pub fn from_vector(v: &[BigInt]) -> Self {
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for (i, x) in v.iter().enumerate() {
            if x.is_positive() {
                plus.push((i, x.clone()));
            } else if x.is_negative() {
                minus.push((i, -x.clone()));
            }
        }
        Self { plus, minus }
    }

    /// Renders one monomial, `1` if it is empty.
    fn render_side(side: &[(usize, BigInt)], names: &[String]) -> String {
        if side.is_empty() {
            return "1".to_string();
        }
        side.iter()
            .map(|(i, e)| {
                if *e == BigInt::from(1) {
                    names[*i].clone()
                } else {
                    format!("{}^{}", names[*i], e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Deterministic text form, e.g. `e1^6*e3*e5^36*e7^6 - e2^2*e4*e6^36*e8^6`.
    pub fn render(&self, names: &[String]) -> String {
        format!(
            "{} - {}",
            Self::render_side(&self.plus, names),
            Self::render_side(&self.minus, names)
        )
    }
}

/// Renders the binomial of an exponent vector with the given variable names.
pub fn render_binomial(vector: &[BigInt], names: &[String]) -> String {
    Binomial::from_vector(vector).render(names)
}

/// Divides a nonzero integer vector by the gcd of the absolute values of
/// its nonzero entries.
pub fn gcd_normalize(v: &[BigInt]) -> Result<Vec<BigInt>, CircuitError> {
    let g = gcd_of_entries(v);
    if g.is_zero() {
        return Err(CircuitError::Argument(
            "cannot normalize the zero vector".into(),
        ));
    }
    Ok(v.iter().map(|x| x / &g).collect())
}

/// Minor workings of one generator run, for reporting and tests.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorDetails {
    /// det of the first cycle's incidence matrix in formula labelling
    /// (`q` for pair shapes).
    pub q: Option<BigInt>,
    /// det of the second cycle (`p`).
    pub p: Option<BigInt>,
    /// det of the outer cycle (`s`, shared-path only).
    pub s: Option<BigInt>,
    /// Minor blocks in formula order (cycle minors, path minors, ...).
    pub minor_blocks: Vec<Vec<BigInt>>,
    /// gcd the raw vector was divided by.
    pub d: BigInt,
}

/// `(-1)^e` as a machine sign.
fn neg_one_pow(e: usize) -> i32 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

fn apply_sign(sign: i32, value: BigInt) -> BigInt {
    if sign < 0 {
        -value
    } else {
        value
    }
}

/// Minors `M(i)` of a cycle matrix: delete row 1 and column `i`.
fn cycle_minors(a: &IntMatrix) -> Vec<BigInt> {
    (0..a.cols())
        .map(|i| a.minor(&[0], &[i]).expect("cycle minor is square"))
        .collect()
}

/// Interior minors of a path matrix: delete the first and last rows and
/// column `i`. For a single-edge path this is the empty minor, 1.
fn path_interior_minors(a: &IntMatrix) -> Vec<BigInt> {
    let last = a.rows() - 1;
    (0..a.cols())
        .map(|i| a.minor(&[0, last], &[i]).expect("path minor is square"))
        .collect()
}

fn embed<'g>(
    graph: &WeightedOrientedGraph,
    positions: &[usize],
    entries: Vec<BigInt>,
    support: CircuitSupport<'g>,
) -> BinomialVector<'g> {
    debug_assert_eq!(positions.len(), entries.len());
    let mut exponents = vec![BigInt::zero(); graph.edge_count()];
    for (&pos, value) in positions.iter().zip(entries) {
        exponents[pos] = value;
    }
    canonical_sign(&mut exponents);
    debug_assert!(
        graph
            .incidence_matrix()
            .kernel_contains(&exponents)
            .expect("vector length matches"),
        "generator output must lie in the kernel"
    );
    BinomialVector { exponents, support }
}

/// Generator of the toric ideal of a balanced cycle, in the cycle's own
/// labelling.
pub fn balanced_cycle_generator<'g>(
    cycle: &CycleSubgraph<'g>,
) -> Result<BinomialVector<'g>, CircuitError> {
    Ok(balanced_cycle_generator_details(cycle)?.0)
}

/// Same as [`balanced_cycle_generator`] but also returns the minors and
/// the gcd `d`.
pub fn balanced_cycle_generator_details<'g>(
    cycle: &CycleSubgraph<'g>,
) -> Result<(BinomialVector<'g>, GeneratorDetails), CircuitError> {
    let a = cycle.incidence_matrix();
    if !a.det().expect("cycle matrix is square").is_zero() {
        return Err(CircuitError::UnbalancedCycle(
            "the balanced-cycle formula needs det(A(C)) = 0".into(),
        ));
    }
    let minors = cycle_minors(&a);
    // Entry i (1-based) carries the sign (-1)^(i+1).
    let raw: Vec<BigInt> = minors
        .iter()
        .enumerate()
        .map(|(i, m)| apply_sign(neg_one_pow(i), m.clone()))
        .collect();
    let d = gcd_of_entries(&raw);
    let entries = gcd_normalize(&raw)?;
    let vector = embed(
        cycle.graph(),
        cycle.edges(),
        entries,
        CircuitSupport::BalancedCycle {
            cycle: cycle.clone(),
        },
    );
    let details = GeneratorDetails {
        q: None,
        p: None,
        s: None,
        minor_blocks: vec![minors],
        d,
    };
    Ok((vector, details))
}

/// Generator for two unbalanced cycles sharing exactly one vertex.
///
/// Both cycles are re-anchored at the shared vertex (their traversal
/// directions are kept); the output is independent of those choices.
pub fn shared_vertex_generator<'g>(
    cm: &CycleSubgraph<'g>,
    cn: &CycleSubgraph<'g>,
) -> Result<BinomialVector<'g>, CircuitError> {
    Ok(shared_vertex_generator_details(cm, cn)?.0)
}

pub fn shared_vertex_generator_details<'g>(
    cm: &CycleSubgraph<'g>,
    cn: &CycleSubgraph<'g>,
) -> Result<(BinomialVector<'g>, GeneratorDetails), CircuitError> {
    let graph = cm.graph();
    let shared: Vec<usize> = cm
        .vertex_set()
        .intersection(&cn.vertex_set())
        .copied()
        .collect();
    if shared.len() != 1 {
        return Err(CircuitError::SupportShape(format!(
            "cycles must share exactly one vertex, found {}",
            shared.len()
        )));
    }
    if !cm.edge_set().is_disjoint(&cn.edge_set()) {
        return Err(CircuitError::SupportShape(
            "cycles must not share edges".into(),
        ));
    }
    // Rotate the anchor to the front of both labellings; each cycle's
    // own traversal direction is kept.
    let anchor = shared[0];
    let cm = cm
        .labelled_from(anchor, Direction::Forward)
        .expect("anchor is on the cycle");
    let cn = cn
        .labelled_from(anchor, Direction::Forward)
        .expect("anchor is on the cycle");
    let am = cm.incidence_matrix();
    let an = cn.incidence_matrix();
    let q = am.det().expect("square");
    let p = an.det().expect("square");
    if q.is_zero() || p.is_zero() {
        return Err(CircuitError::UnbalancedCycleRequired(
            "both cycles must be unbalanced".into(),
        ));
    }
    let m_minors = cycle_minors(&am);
    let n_minors = cycle_minors(&an);
    // First block signed (-1)^(i+1), second block (-1)^i, 1-based.
    let mut raw: Vec<BigInt> = Vec::with_capacity(cm.len() + cn.len());
    for (i, minor) in m_minors.iter().enumerate() {
        raw.push(apply_sign(neg_one_pow(i), &p * minor));
    }
    for (i, minor) in n_minors.iter().enumerate() {
        raw.push(apply_sign(neg_one_pow(i + 1), &q * minor));
    }
    let d = gcd_of_entries(&raw);
    let entries = gcd_normalize(&raw)?;
    let positions: Vec<usize> = cm.edges().iter().chain(cn.edges()).copied().collect();
    let support = CircuitSupport::SharedVertex {
        first: cm.clone(),
        second: cn.clone(),
    };
    let vector = embed(graph, &positions, entries, support);
    let details = GeneratorDetails {
        q: Some(q),
        p: Some(p),
        s: None,
        minor_blocks: vec![m_minors, n_minors],
        d,
    };
    Ok((vector, details))
}

/// Generator for two vertex-disjoint unbalanced cycles connected by a
/// path of length `k >= 1`.
///
/// The path may be given in either direction; it is oriented from the
/// first cycle to the second, and each cycle is re-anchored at its path
/// endpoint.
pub fn path_connected_generator<'g>(
    cm: &CycleSubgraph<'g>,
    path: &PathSubgraph<'g>,
    cn: &CycleSubgraph<'g>,
) -> Result<BinomialVector<'g>, CircuitError> {
    Ok(path_connected_generator_details(cm, path, cn)?.0)
}

pub fn path_connected_generator_details<'g>(
    cm: &CycleSubgraph<'g>,
    path: &PathSubgraph<'g>,
    cn: &CycleSubgraph<'g>,
) -> Result<(BinomialVector<'g>, GeneratorDetails), CircuitError> {
    let graph = cm.graph();
    if path.is_empty() {
        return Err(CircuitError::SupportShape(
            "a length-0 path is the shared-vertex shape".into(),
        ));
    }
    if !cm.vertex_set().is_disjoint(&cn.vertex_set()) {
        return Err(CircuitError::SupportShape(
            "the two cycles must be vertex-disjoint".into(),
        ));
    }
    // Orient the path from cm to cn.
    let path = if cm.contains_vertex(path.first()) && cn.contains_vertex(path.last()) {
        path.clone()
    } else if cn.contains_vertex(path.first()) && cm.contains_vertex(path.last()) {
        path.reversed()
    } else {
        return Err(CircuitError::SupportShape(
            "the path must run from one cycle to the other".into(),
        ));
    };
    if path
        .interior()
        .iter()
        .any(|v| cm.contains_vertex(*v) || cn.contains_vertex(*v))
    {
        return Err(CircuitError::SupportShape(
            "the path touches a cycle internally".into(),
        ));
    }
    let cm = cm
        .labelled_from(path.first(), Direction::Forward)
        .expect("path endpoint is on the first cycle");
    let cn = cn
        .labelled_from(path.last(), Direction::Forward)
        .expect("path endpoint is on the second cycle");
    let am = cm.incidence_matrix();
    let an = cn.incidence_matrix();
    let q = am.det().expect("square");
    let p = an.det().expect("square");
    if q.is_zero() || p.is_zero() {
        return Err(CircuitError::UnbalancedCycleRequired(
            "both cycles must be unbalanced".into(),
        ));
    }
    let ap = path.incidence_matrix();
    let k = path.len();
    // End minors: drop the cn-side endpoint row for the cm block, the
    // cm-side endpoint row for the cn block.
    let end_minor_cm = ap.minor(&[k], &[]).expect("k x k");
    let end_minor_cn = ap.minor(&[0], &[]).expect("k x k");
    let m_minors = cycle_minors(&am);
    let n_minors = cycle_minors(&an);
    let inner = path_interior_minors(&ap);

    // Blocks signed (-1)^(i+1), (-1)^i and (-1)^(i+k), 1-based.
    let pq = &p * &q;
    let mut raw = Vec::with_capacity(cm.len() + k + cn.len());
    for (i, minor) in m_minors.iter().enumerate() {
        raw.push(apply_sign(neg_one_pow(i), &p * &end_minor_cm * minor));
    }
    for (i, minor) in inner.iter().enumerate() {
        raw.push(apply_sign(neg_one_pow(i + 1), &pq * minor));
    }
    for (i, minor) in n_minors.iter().enumerate() {
        raw.push(apply_sign(
            neg_one_pow(i + 1 + k),
            &q * &end_minor_cn * minor,
        ));
    }
    let d = gcd_of_entries(&raw);
    let entries = gcd_normalize(&raw)?;
    let positions: Vec<usize> = cm
        .edges()
        .iter()
        .chain(path.edges())
        .chain(cn.edges())
        .copied()
        .collect();
    let support = CircuitSupport::PathConnected {
        first: cm.clone(),
        path: path.clone(),
        second: cn.clone(),
    };
    let vector = embed(graph, &positions, entries, support);
    let details = GeneratorDetails {
        q: Some(q),
        p: Some(p),
        s: None,
        minor_blocks: vec![m_minors, inner, n_minors, vec![end_minor_cm, end_minor_cn]],
        d,
    };
    Ok((vector, details))
}

/// Splits a cycle at the endpoints of a shared path: returns the arc
/// from `to` back to `from` using only edges outside the shared set.
fn cycle_arc<'g>(
    cycle: &CycleSubgraph<'g>,
    shared_edges: &BTreeSet<usize>,
    from: usize,
    to: usize,
) -> Result<PathSubgraph<'g>, CircuitError> {
    // Walk the cycle starting anywhere; collect the maximal run of
    // non-shared edges starting at `to` and ending at `from`.
    let labelled = cycle
        .labelled_from(to, Direction::Forward)
        .map_err(|e| CircuitError::SupportShape(e.to_string()))?;
    // The arc is a contiguous run in one of the two directions.
    for candidate in [
        labelled.clone(),
        cycle
            .labelled_from(to, Direction::Backward)
            .map_err(|e| CircuitError::SupportShape(e.to_string()))?,
    ] {
        if shared_edges.contains(&candidate.edges()[0]) {
            continue;
        }
        let mut vertices = vec![candidate.vertices()[0]];
        let mut edges = Vec::new();
        for (i, &e) in candidate.edges().iter().enumerate() {
            if shared_edges.contains(&e) {
                break;
            }
            edges.push(e);
            vertices.push(candidate.vertices()[(i + 1) % candidate.len()]);
        }
        if vertices.last() == Some(&from) {
            return PathSubgraph::new(cycle.graph(), vertices, edges)
                .map_err(|e| CircuitError::SupportShape(e.to_string()));
        }
    }
    Err(CircuitError::SupportShape(
        "cycle does not decompose into shared path plus arc".into(),
    ))
}

/// Generator for two unbalanced cycles sharing a path of length
/// `k >= 1` whose outer cycle is unbalanced.
///
/// The shared path may be given in either direction; its direction and
/// the order of the two cycles are free choices that only affect
/// intermediate signs, not the canonical output.
pub fn shared_path_generator<'g>(
    cm: &CycleSubgraph<'g>,
    cn: &CycleSubgraph<'g>,
    path: &PathSubgraph<'g>,
    outer: &CycleSubgraph<'g>,
) -> Result<BinomialVector<'g>, CircuitError> {
    Ok(shared_path_generator_details(cm, cn, path, outer)?.0)
}

pub fn shared_path_generator_details<'g>(
    cm: &CycleSubgraph<'g>,
    cn: &CycleSubgraph<'g>,
    path: &PathSubgraph<'g>,
    outer: &CycleSubgraph<'g>,
) -> Result<(BinomialVector<'g>, GeneratorDetails), CircuitError> {
    let graph = cm.graph();
    let shared_edges = path.edge_set();
    if path.is_empty() {
        return Err(CircuitError::SupportShape(
            "a shared path must have at least one edge".into(),
        ));
    }
    let actual_shared: BTreeSet<usize> = cm
        .edge_set()
        .intersection(&cn.edge_set())
        .copied()
        .collect();
    if actual_shared != shared_edges {
        return Err(CircuitError::SupportShape(
            "the given path is not the edge intersection of the two cycles".into(),
        ));
    }
    let shared_vertices: BTreeSet<usize> = cm
        .vertex_set()
        .intersection(&cn.vertex_set())
        .copied()
        .collect();
    if shared_vertices != path.vertex_set() {
        return Err(CircuitError::SupportShape(
            "the cycles meet outside the shared path".into(),
        ));
    }
    let expected_outer: BTreeSet<usize> = cm
        .edge_set()
        .union(&cn.edge_set())
        .copied()
        .filter(|e| !shared_edges.contains(e))
        .collect();
    if outer.edge_set() != expected_outer {
        return Err(CircuitError::SupportShape(
            "the outer cycle is not the union of the two cycles minus the shared path".into(),
        ));
    }

    let v1 = path.first();
    let vk1 = path.last();
    // Arcs run from the far end of the shared path back to its start.
    let arc_m = cycle_arc(cm, &shared_edges, v1, vk1)?;
    let arc_n = cycle_arc(cn, &shared_edges, v1, vk1)?;

    // Formula frame: each cycle is traversed shared path first, then its
    // own arc; the outer cycle starts at v1 and runs through the first
    // cycle's arc backwards, then the second cycle's arc.
    let cm_frame = frame_cycle(graph, path, &arc_m)?;
    let cn_frame = frame_cycle(graph, path, &arc_n)?;
    let q = cm_frame.det();
    let p = cn_frame.det();
    if q.is_zero() || p.is_zero() {
        return Err(CircuitError::UnbalancedCycleRequired(
            "both cycles must be unbalanced".into(),
        ));
    }
    let outer_frame = frame_outer(graph, &arc_m, &arc_n)?;
    let s = outer_frame.det();
    if s.is_zero() {
        return Err(CircuitError::BalancedOuterCycle);
    }

    let ap = path.incidence_matrix();
    let path_minors = path_interior_minors(&ap);
    let arc_m_minors = path_interior_minors(&arc_m.incidence_matrix());
    let arc_n_minors = path_interior_minors(&arc_n.incidence_matrix());

    // Blocks signed (-1)^(i+1), (-1)^(i+(m-k)+1) and (-1)^(i+(m-k)),
    // 1-based, where m-k is the first arc's length.
    let m_minus_k = arc_m.len();
    let mut raw = Vec::with_capacity(path.len() + arc_m.len() + arc_n.len());
    for (i, minor) in path_minors.iter().enumerate() {
        raw.push(apply_sign(neg_one_pow(i), &s * minor));
    }
    for (i, minor) in arc_m_minors.iter().enumerate() {
        raw.push(apply_sign(neg_one_pow(i + m_minus_k), &p * minor));
    }
    for (i, minor) in arc_n_minors.iter().enumerate() {
        raw.push(apply_sign(neg_one_pow(i + 1 + m_minus_k), &q * minor));
    }
    let d = gcd_of_entries(&raw);
    let entries = gcd_normalize(&raw)?;
    let positions: Vec<usize> = path
        .edges()
        .iter()
        .chain(arc_m.edges())
        .chain(arc_n.edges())
        .copied()
        .collect();
    let support = CircuitSupport::SharedPath {
        first: cm.clone(),
        second: cn.clone(),
        shared: path.clone(),
        outer: outer.clone(),
    };
    let vector = embed(graph, &positions, entries, support);
    let details = GeneratorDetails {
        q: Some(q),
        p: Some(p),
        s: Some(s),
        minor_blocks: vec![path_minors, arc_m_minors, arc_n_minors],
        d,
    };
    Ok((vector, details))
}

/// Cycle labelled shared-path-first: path vertices, then the arc's
/// interior, closing back at the path start.
fn frame_cycle<'g>(
    graph: &'g WeightedOrientedGraph,
    path: &PathSubgraph<'g>,
    arc: &PathSubgraph<'g>,
) -> Result<CycleSubgraph<'g>, CircuitError> {
    let mut vertices: Vec<usize> = path.vertices().to_vec();
    let arc_interior = &arc.vertices()[1..arc.vertices().len() - 1];
    vertices.extend_from_slice(arc_interior);
    let mut edges: Vec<usize> = path.edges().to_vec();
    edges.extend_from_slice(arc.edges());
    CycleSubgraph::new(graph, vertices, edges)
        .map_err(|e| CircuitError::SupportShape(e.to_string()))
}

/// Outer cycle labelled from the path start: first cycle's arc walked
/// backwards, then the second cycle's arc.
fn frame_outer<'g>(
    graph: &'g WeightedOrientedGraph,
    arc_m: &PathSubgraph<'g>,
    arc_n: &PathSubgraph<'g>,
) -> Result<CycleSubgraph<'g>, CircuitError> {
    let arc_m_rev = arc_m.reversed(); // from v1 to vk1
    let mut vertices: Vec<usize> = arc_m_rev.vertices().to_vec();
    let arc_n_interior = &arc_n.vertices()[1..arc_n.vertices().len() - 1];
    vertices.extend_from_slice(arc_n_interior);
    let mut edges: Vec<usize> = arc_m_rev.edges().to_vec();
    edges.extend_from_slice(arc_n.edges());
    CycleSubgraph::new(graph, vertices, edges)
        .map_err(|e| CircuitError::SupportShape(e.to_string()))
}

/// Runs the generator that matches the support's shape.
pub fn circuit_for_support<'g>(
    support: &CircuitSupport<'g>,
) -> Result<BinomialVector<'g>, CircuitError> {
    match support {
        CircuitSupport::BalancedCycle { cycle } => balanced_cycle_generator(cycle),
        CircuitSupport::SharedVertex { first, second } => shared_vertex_generator(first, second),
        CircuitSupport::PathConnected {
            first,
            path,
            second,
        } => path_connected_generator(first, path, second),
        CircuitSupport::SharedPath {
            first,
            second,
            shared,
            outer,
        } => shared_path_generator(first, second, shared, outer),
    }
}

/// A deduplicated circuit: one exponent vector with every support
/// description that produced it.
#[derive(Debug, Clone)]
pub struct CircuitBinomial<'g> {
    pub vector: Vec<BigInt>,
    pub binomial: Binomial,
    pub supports: Vec<CircuitSupport<'g>>,
}

impl CircuitBinomial<'_> {
    pub fn render(&self, names: &[String]) -> String {
        self.binomial.render(names)
    }
}

/// All circuit binomials of the graph: one entry per distinct vector
/// (up to global sign), each carrying every support that produces it,
/// in a deterministic order.
pub fn circuits(graph: &WeightedOrientedGraph) -> Vec<CircuitBinomial<'_>> {
    let scan = scan_supports(graph);
    assemble_circuits(
        scan.supports
            .iter()
            .map(|s| {
                circuit_for_support(s)
                    .expect("scanned supports always satisfy their generator's preconditions")
            })
            .collect(),
    )
}

/// Deduplicates generator outputs into circuits (canonical vectors are
/// already sign-normalized, so equal binomials collide exactly).
pub fn assemble_circuits(vectors: Vec<BinomialVector<'_>>) -> Vec<CircuitBinomial<'_>> {
    let mut map: BTreeMap<Vec<BigInt>, Vec<CircuitSupport<'_>>> = BTreeMap::new();
    for bv in vectors {
        map.entry(bv.exponents).or_default().push(bv.support);
    }
    let mut out: Vec<CircuitBinomial<'_>> = map
        .into_iter()
        .map(|(vector, mut supports)| {
            supports.sort_by_key(|s| s.sort_key());
            let binomial = Binomial::from_vector(&vector);
            CircuitBinomial {
                vector,
                binomial,
                supports,
            }
        })
        .collect();
    out.sort_by_key(|c| c.supports[0].sort_key());
    out
}
