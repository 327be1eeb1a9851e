//! Brute-force ground truth for the circuit formulas.
//!
//! Nothing here knows about the closed-form generators: circuits are
//! found as minimally dependent column sets of the incidence matrix,
//! primitivity is decided by exhaustive box enumeration, and a bounded
//! Graver set comes from enumerating every kernel vector in a box and
//! filtering by componentwise domination. All enumeration is budgeted
//! and fails loudly with `BudgetExceeded` instead of truncating.

use std::collections::BTreeSet;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::graph::WeightedOrientedGraph;
use crate::linalg::{canonical_sign, gcd_of_entries, IntMatrix};

/// Errors from oracle enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("argument error: {0}")]
    Argument(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
}

/// Enumeration limits. The oracle aborts with `BudgetExceeded` rather
/// than silently returning partial results.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleBudget {
    /// Largest |entry| considered by the bounded Graver enumeration.
    pub max_entry_bound: u64,
    /// Largest circuit support size enumerated.
    pub max_support_size: usize,
    /// Cap on enumeration states (subsets or box points).
    pub max_enumeration_count: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self {
            max_entry_bound: 64,
            max_support_size: 12,
            max_enumeration_count: 10_000_000,
        }
    }
}

impl OracleBudget {
    /// All bounds must be positive; a zero bound would truncate results
    /// without the loud `BudgetExceeded` the oracle promises.
    fn validate(&self) -> Result<(), OracleError> {
        if self.max_entry_bound == 0
            || self.max_support_size == 0
            || self.max_enumeration_count == 0
        {
            return Err(OracleError::Argument(
                "oracle budget bounds must all be positive".into(),
            ));
        }
        Ok(())
    }
}

/// True iff the columns indexed by `support` are linearly dependent and
/// every proper subset is independent.
pub fn is_circuit_support(a: &IntMatrix, support: &[usize]) -> bool {
    if support.is_empty() {
        return false;
    }
    let set: Vec<usize> = {
        let s: BTreeSet<usize> = support.iter().copied().collect();
        s.into_iter().collect()
    };
    let sub = a.column_submatrix(&set);
    if sub.rank() == set.len() {
        return false; // independent
    }
    for skip in 0..set.len() {
        let smaller: Vec<usize> = set
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, &c)| c)
            .collect();
        if a.column_submatrix(&smaller).rank() != smaller.len() {
            return false; // a proper subset is already dependent
        }
    }
    true
}

/// All circuits of the matrix: for every minimally dependent column set
/// within the budget, the integer-primitive kernel vector of the
/// restricted submatrix, embedded at full length with canonical sign.
///
/// Subsets are visited in increasing size; any subset containing an
/// already-found circuit is skipped, as is any subset in which some row
/// meets exactly one selected column (such a column is forced to zero in
/// every kernel vector, so the subset cannot be minimally dependent).
pub fn circuits_brute_force(
    a: &IntMatrix,
    budget: &OracleBudget,
) -> Result<Vec<Vec<BigInt>>, OracleError> {
    budget.validate()?;
    let cols = a.cols();
    let max_size = budget.max_support_size.min(cols);
    let mut visited: u64 = 0;
    let mut found: Vec<(Vec<usize>, Vec<BigInt>)> = Vec::new();

    // Nonzero row pattern per column, for the single-hit-row prefilter.
    let col_rows: Vec<Vec<usize>> = (0..cols)
        .map(|c| (0..a.rows()).filter(|&r| !a.at(r, c).is_zero()).collect())
        .collect();

    let mut row_hits = vec![0usize; a.rows()];
    for size in 1..=max_size {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            visited += 1;
            if visited > budget.max_enumeration_count {
                return Err(OracleError::BudgetExceeded(format!(
                    "column subset enumeration passed {} states",
                    budget.max_enumeration_count
                )));
            }

            if !found
                .iter()
                .any(|(circ, _)| circ.iter().all(|c| combo.binary_search(c).is_ok()))
            {
                for h in row_hits.iter_mut() {
                    *h = 0;
                }
                for &c in &combo {
                    for &r in &col_rows[c] {
                        row_hits[r] += 1;
                    }
                }
                let has_forced_zero = combo
                    .iter()
                    .any(|&c| col_rows[c].iter().any(|&r| row_hits[r] == 1));
                if !has_forced_zero {
                    let sub = a.column_submatrix(&combo);
                    if sub.rank() < combo.len() {
                        let basis = sub.rational_kernel_basis();
                        debug_assert_eq!(basis.len(), 1, "minimal dependence gives a line");
                        let prim = basis[0].integer_primitive();
                        let mut full = vec![BigInt::zero(); cols];
                        for (slot, &c) in combo.iter().enumerate() {
                            full[c] = prim[slot].clone();
                        }
                        canonical_sign(&mut full);
                        found.push((combo.clone(), full));
                    }
                }
            }

            // Next combination of the same size.
            let mut i = size;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if combo[i] != i + cols - size {
                    combo[i] += 1;
                    for j in i + 1..size {
                        combo[j] = combo[j - 1] + 1;
                    }
                    break;
                }
                if i == 0 {
                    combo.clear();
                    break;
                }
            }
            if combo.is_empty() {
                break;
            }
        }
    }
    let mut out: Vec<Vec<BigInt>> = found.into_iter().map(|(_, v)| v).collect();
    out.sort();
    Ok(out)
}

/// Decides primitivity of a kernel vector by walking the componentwise
/// box `0 <= x+ <= v+`, `0 <= x- <= v-`: `v` is primitive iff no other
/// nonzero kernel vector fits in the box.
pub fn is_primitive(
    a: &IntMatrix,
    v: &[BigInt],
    budget: &OracleBudget,
) -> Result<bool, OracleError> {
    budget.validate()?;
    if v.iter().all(|x| x.is_zero()) {
        return Err(OracleError::Argument(
            "the zero vector is not a binomial".into(),
        ));
    }
    match a.kernel_contains(v) {
        Ok(true) => {}
        Ok(false) => {
            return Err(OracleError::Argument(
                "the vector is not in the kernel of the matrix".into(),
            ))
        }
        Err(e) => return Err(OracleError::Argument(e.to_string())),
    }

    // Box size check before any walking.
    let mut states = BigInt::one();
    for x in v {
        if !x.is_zero() {
            states *= x.abs() + 1;
        }
    }
    if states > BigInt::from(budget.max_enumeration_count) {
        return Err(OracleError::BudgetExceeded(format!(
            "primitivity box has {states} states"
        )));
    }

    // Active coordinates: positions where v is nonzero, with their sign.
    let active: Vec<(usize, i64)> = v
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, if x.is_positive() { 1 } else { -1 }))
        .collect();

    // Fast path in machine integers when everything fits comfortably.
    let small_matrix: Option<Vec<Vec<(usize, i64)>>> = (0..a.cols())
        .map(|c| {
            (0..a.rows())
                .map(|r| a.at(r, c).to_i64().map(|x| (r, x)))
                .collect::<Option<Vec<(usize, i64)>>>()
                .map(|rows| rows.into_iter().filter(|&(_, x)| x != 0).collect())
        })
        .collect();
    let small_caps: Option<Vec<i64>> = active.iter().map(|&(i, _)| v[i].abs().to_i64()).collect();
    if let (Some(cols_small), Some(caps)) = (small_matrix, small_caps) {
        let fits = caps.iter().all(|&c| c < (1 << 20))
            && cols_small
                .iter()
                .flatten()
                .all(|&(_, x)| x.abs() < (1 << 20));
        if fits {
            return Ok(box_walk_i128(a.rows(), &cols_small, &active, &caps));
        }
    }
    Ok(box_walk_big(a, v, &active))
}

/// Mixed-radix box walk with i128 running sums.
fn box_walk_i128(
    rows: usize,
    col_rows: &[Vec<(usize, i64)>],
    active: &[(usize, i64)],
    caps: &[i64],
) -> bool {
    let n = active.len();
    let mut t = vec![0i64; n];
    let mut residual = vec![0i128; rows];
    let mut nonzero_rows = 0usize;
    let mut at_max = caps.iter().filter(|&&c| c == 0).count();
    let mut total: i64 = 0;

    let bump =
        |residual: &mut Vec<i128>, nonzero_rows: &mut usize, col: usize, sign: i64, delta: i64| {
            for &(r, val) in &col_rows[col] {
                let before = residual[r] != 0;
                residual[r] += (sign * delta) as i128 * val as i128;
                let after = residual[r] != 0;
                match (before, after) {
                    (false, true) => *nonzero_rows += 1,
                    (true, false) => *nonzero_rows -= 1,
                    _ => {}
                }
            }
        };

    loop {
        // Advance the odometer.
        let mut j = 0;
        loop {
            if j == n {
                return true; // box exhausted, nothing dominated v
            }
            let (col, sign) = active[j];
            if t[j] < caps[j] {
                t[j] += 1;
                total += 1;
                if t[j] == caps[j] {
                    at_max += 1;
                }
                bump(&mut residual, &mut nonzero_rows, col, sign, 1);
                break;
            } else {
                // reset and carry
                if caps[j] > 0 {
                    if t[j] == caps[j] {
                        at_max -= 1;
                    }
                    bump(&mut residual, &mut nonzero_rows, col, sign, -t[j]);
                    total -= t[j];
                    t[j] = 0;
                }
                j += 1;
            }
        }
        let is_v = at_max == n;
        if total > 0 && !is_v && nonzero_rows == 0 {
            return false; // found a smaller kernel vector inside the box
        }
    }
}

/// BigInt fallback for entries beyond the machine-integer comfort zone.
fn box_walk_big(a: &IntMatrix, v: &[BigInt], active: &[(usize, i64)]) -> bool {
    let n = active.len();
    let caps: Vec<BigInt> = active.iter().map(|&(i, _)| v[i].abs()).collect();
    let mut t = vec![BigInt::zero(); n];
    let mut x = vec![BigInt::zero(); v.len()];
    loop {
        let mut j = 0;
        loop {
            if j == n {
                return true;
            }
            let (col, sign) = active[j];
            if t[j] < caps[j] {
                t[j] += 1;
                x[col] = if sign > 0 {
                    t[j].clone()
                } else {
                    -t[j].clone()
                };
                break;
            } else {
                t[j] = BigInt::zero();
                x[col] = BigInt::zero();
                j += 1;
            }
        }
        if x.iter().any(|e| !e.is_zero())
            && x != *v
            && a.kernel_contains(&x).expect("lengths match")
        {
            return false;
        }
    }
}

/// Every primitive kernel vector with all |entries| bounded by
/// `budget.max_entry_bound`, canonical sign, exhaustive within the bound.
///
/// This is a truncated Graver set: complete for binomials whose
/// exponents fit the bound, silent about anything larger.
pub fn graver_small(a: &IntMatrix, budget: &OracleBudget) -> Result<Vec<Vec<BigInt>>, OracleError> {
    budget.validate()?;
    let bound = BigInt::from(budget.max_entry_bound);
    let basis = a.rational_kernel_basis();
    let t = basis.len();
    if t == 0 {
        return Ok(Vec::new());
    }

    // Kernel vectors are in bijection with their restriction to the free
    // columns, so enumerating the free coordinates over the box is
    // exhaustive for the whole box.
    let span = 2 * budget.max_entry_bound + 1;
    let mut states = BigInt::one();
    for _ in 0..t {
        states *= BigInt::from(span);
    }
    if states > BigInt::from(budget.max_enumeration_count) {
        return Err(OracleError::BudgetExceeded(format!(
            "free-coordinate box has {states} states for nullity {t}"
        )));
    }

    let cols = a.cols();
    let basis_ratios: Vec<Vec<BigRational>> = basis
        .iter()
        .map(|b| {
            let den = BigRational::from(b.denominator().clone());
            b.numerators()
                .iter()
                .map(|x| BigRational::from(x.clone()) / den.clone())
                .collect()
        })
        .collect();

    let lo = -BigInt::from(budget.max_entry_bound);
    let mut lambda = vec![lo.clone(); t];
    let mut candidates: Vec<Vec<BigInt>> = Vec::new();
    'outer: loop {
        // x = sum lambda_j * basis_j, exact.
        let mut x_rat = vec![BigRational::zero(); cols];
        for (j, b) in basis_ratios.iter().enumerate() {
            if lambda[j].is_zero() {
                continue;
            }
            let lam = BigRational::from(lambda[j].clone());
            for (c, val) in b.iter().enumerate() {
                if !val.is_zero() {
                    x_rat[c] += &lam * val;
                }
            }
        }
        let mut ok = true;
        let mut x = Vec::with_capacity(cols);
        for r in &x_rat {
            if !r.is_integer() {
                ok = false;
                break;
            }
            let n = r.to_integer();
            if n.abs() > bound {
                ok = false;
                break;
            }
            x.push(n);
        }
        if ok && x.iter().any(|e| !e.is_zero()) {
            candidates.push(x);
        }

        // Advance lambda.
        for j in 0..=t {
            if j == t {
                break 'outer;
            }
            if lambda[j] < bound {
                lambda[j] += 1;
                break;
            }
            lambda[j] = lo.clone();
        }
    }

    // Domination filter: v survives iff no other candidate u (both signs
    // are present in `candidates`) satisfies u+ <= v+ and u- <= v-.
    candidates.sort_by_key(|x| x.iter().map(|e| e.abs()).sum::<BigInt>());
    let mut primitive: Vec<Vec<BigInt>> = Vec::new();
    'cand: for (i, v) in candidates.iter().enumerate() {
        for u in &candidates[..i] {
            // earlier entries have L1(u) <= L1(v); dominators among
            // equals are exactly v itself, excluded by index
            let dominates = u
                .iter()
                .zip(v)
                .all(|(a, b)| (a.is_zero() || a.sign() == b.sign()) && a.abs() <= b.abs());
            if dominates && u != v {
                continue 'cand;
            }
        }
        let mut w = v.clone();
        canonical_sign(&mut w);
        if !primitive.contains(&w) {
            primitive.push(w);
        }
    }
    primitive.sort();
    Ok(primitive)
}

/// Checks that the circuits of the edge-subset subgraph are exactly the
/// circuits of the whole graph whose support lies inside the subset,
/// with both sides computed by brute force.
pub fn verify_restriction(
    graph: &WeightedOrientedGraph,
    edge_subset: &[usize],
    budget: &OracleBudget,
) -> Result<bool, OracleError> {
    let keep: Vec<usize> = {
        let s: BTreeSet<usize> = edge_subset.iter().copied().collect();
        s.into_iter().collect()
    };
    if keep.iter().any(|&e| e >= graph.edge_count()) {
        return Err(OracleError::Argument("edge index out of range".into()));
    }
    let sub = graph.edge_subgraph(&keep);
    let sub_circuits = circuits_brute_force(&sub.incidence_matrix(), budget)?;
    // Embed the subgraph's vectors into the parent's edge positions.
    let embedded: BTreeSet<Vec<BigInt>> = sub_circuits
        .into_iter()
        .map(|v| {
            let mut full = vec![BigInt::zero(); graph.edge_count()];
            for (slot, &e) in keep.iter().enumerate() {
                full[e] = v[slot].clone();
            }
            full
        })
        .collect();
    let keep_set: BTreeSet<usize> = keep.iter().copied().collect();
    let restricted: BTreeSet<Vec<BigInt>> =
        circuits_brute_force(&graph.incidence_matrix(), budget)?
            .into_iter()
            .filter(|v| {
                v.iter()
                    .enumerate()
                    .all(|(e, x)| x.is_zero() || keep_set.contains(&e))
            })
            .collect();
    Ok(embedded == restricted)
}

/// Convenience: every circuit vector passes gcd-primitivity and support
/// minimality; used as a self-check in tests.
pub fn circuit_invariants_hold(a: &IntMatrix, vectors: &[Vec<BigInt>]) -> bool {
    vectors.iter().all(|v| {
        let support: Vec<usize> = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, _)| i)
            .collect();
        a.kernel_contains(v).unwrap_or(false)
            && gcd_of_entries(v) == BigInt::one()
            && is_circuit_support(a, &support)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::parse_graph;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn c4_all_ones() -> IntMatrix {
        IntMatrix::from_i64_rows(&[
            vec![1, 0, 0, 1],
            vec![1, 1, 0, 0],
            vec![0, 1, 1, 0],
            vec![0, 0, 1, 1],
        ])
    }

    fn triangle() -> IntMatrix {
        IntMatrix::from_i64_rows(&[vec![1, 0, 1], vec![1, 1, 0], vec![0, 1, 1]])
    }

    #[test]
    fn circuit_support_examples() {
        let a = c4_all_ones();
        assert!(is_circuit_support(&a, &[0, 1, 2, 3]));
        assert!(!is_circuit_support(&a, &[0, 1, 2]));
        assert!(!is_circuit_support(&triangle(), &[0, 1, 2]));
    }

    #[test]
    fn brute_force_on_the_worked_example_fixtures() {
        let budget = OracleBudget::default();
        let c8 = fixtures::load("c8");
        let found = circuits_brute_force(&c8.incidence_matrix(), &budget).unwrap();
        assert_eq!(found, vec![ints(&[6, -2, 1, -1, 36, -36, 6, -6])]);

        let theta = fixtures::load("theta");
        let found = circuits_brute_force(&theta.incidence_matrix(), &budget).unwrap();
        assert_eq!(found, vec![ints(&[1, -2, 12, -3, -10, 2])]);

        assert!(circuits_brute_force(&triangle(), &budget)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn brute_force_respects_budget() {
        let budget = OracleBudget {
            max_enumeration_count: 3,
            ..OracleBudget::default()
        };
        let theta = fixtures::load("theta");
        assert!(matches!(
            circuits_brute_force(&theta.incidence_matrix(), &budget),
            Err(OracleError::BudgetExceeded(_))
        ));
    }

    #[test]
    fn primitivity_examples() {
        let budget = OracleBudget::default();
        let a = c4_all_ones();
        assert!(is_primitive(&a, &ints(&[1, -1, 1, -1]), &budget).unwrap());
        assert!(!is_primitive(&a, &ints(&[2, -2, 2, -2]), &budget).unwrap());

        let theta = fixtures::load("theta");
        let v = ints(&[1, -2, 12, -3, -10, 2]);
        assert!(is_primitive(&theta.incidence_matrix(), &v, &budget).unwrap());

        // Preconditions.
        assert!(is_primitive(&a, &ints(&[0, 0, 0, 0]), &budget).is_err());
        assert!(is_primitive(&a, &ints(&[1, 1, 1, 1]), &budget).is_err());
        let tight = OracleBudget {
            max_enumeration_count: 2,
            ..OracleBudget::default()
        };
        assert!(matches!(
            is_primitive(&a, &ints(&[1, -1, 1, -1]), &tight),
            Err(OracleError::BudgetExceeded(_))
        ));
    }

    #[test]
    fn graver_small_examples() {
        let c4 = c4_all_ones();
        let got = graver_small(
            &c4,
            &OracleBudget {
                max_entry_bound: 3,
                ..OracleBudget::default()
            },
        )
        .unwrap();
        assert_eq!(got, vec![ints(&[1, -1, 1, -1])]);

        assert!(graver_small(&triangle(), &OracleBudget::default())
            .unwrap()
            .is_empty());

        let bowtie = fixtures::load("bowtie");
        let got = graver_small(
            &bowtie.incidence_matrix(),
            &OracleBudget {
                max_entry_bound: 2,
                ..OracleBudget::default()
            },
        )
        .unwrap();
        assert_eq!(got, vec![ints(&[1, -1, 1, -1, 1, -1])]);
    }

    #[test]
    fn graver_output_is_domination_free() {
        let theta = fixtures::load("theta");
        let got = graver_small(
            &theta.incidence_matrix(),
            &OracleBudget {
                max_entry_bound: 12,
                max_enumeration_count: 100_000_000,
                ..OracleBudget::default()
            },
        )
        .unwrap();
        assert_eq!(got, vec![ints(&[1, -2, 12, -3, -10, 2])]);
        for v in &got {
            for u in &got {
                if u != v {
                    let dominates = u
                        .iter()
                        .zip(v)
                        .all(|(a, b)| (a.is_zero() || a.sign() == b.sign()) && a.abs() <= b.abs());
                    assert!(!dominates);
                }
            }
        }
    }

    #[test]
    fn restriction_examples() {
        let budget = OracleBudget::default();
        let bowtie = fixtures::load("bowtie");
        assert!(verify_restriction(&bowtie, &[0, 1, 2], &budget).unwrap());

        let theta = fixtures::load("theta");
        let all: Vec<usize> = (0..theta.edge_count()).collect();
        assert!(verify_restriction(&theta, &all, &budget).unwrap());

        // Balanced cycle plus a pendant edge: the leaf edge never enters
        // any support, so restriction to the cycle is exact.
        let doc = r#"{"vertices":[{"id":"v1","weight":1},{"id":"v2","weight":1},
                                  {"id":"v3","weight":1},{"id":"v4","weight":1},
                                  {"id":"v5","weight":1}],
                      "edges":[{"id":"e1","tail":"v1","head":"v2"},
                               {"id":"e2","tail":"v2","head":"v3"},
                               {"id":"e3","tail":"v3","head":"v4"},
                               {"id":"e4","tail":"v4","head":"v1"},
                               {"id":"e5","tail":"v1","head":"v5"}]}"#;
        let g = parse_graph(doc).unwrap();
        assert!(verify_restriction(&g, &[0, 1, 2, 3], &budget).unwrap());
    }

    #[test]
    fn zero_budgets_are_rejected() {
        let a = c4_all_ones();
        let bad = OracleBudget {
            max_support_size: 0,
            ..OracleBudget::default()
        };
        assert!(matches!(
            circuits_brute_force(&a, &bad),
            Err(OracleError::Argument(_))
        ));
        assert!(matches!(
            graver_small(
                &a,
                &OracleBudget {
                    max_entry_bound: 0,
                    ..OracleBudget::default()
                }
            ),
            Err(OracleError::Argument(_))
        ));
    }

    #[test]
    fn primitivity_handles_entries_beyond_machine_range() {
        // One huge-weight row; the small box forces the BigInt walk.
        let big = 1i64 << 40;
        let a = IntMatrix::from_i64_rows(&[vec![big, big]]);
        let budget = OracleBudget::default();
        assert!(is_primitive(&a, &ints(&[1, -1]), &budget).unwrap());
        assert!(!is_primitive(&a, &ints(&[2, -2]), &budget).unwrap());
    }

    #[test]
    fn sink_normalization_preserves_brute_force_circuits() {
        // v1 and v6 are sinks; resetting their weights must not change
        // the circuit set.
        let g = fixtures::load("c8");
        let budget = OracleBudget::default();
        let before = circuits_brute_force(&g.incidence_matrix(), &budget).unwrap();
        let after =
            circuits_brute_force(&g.normalize_sink_weights().incidence_matrix(), &budget).unwrap();
        assert_eq!(before, after);
    }

    #[test]
    fn brute_force_circuits_pass_their_own_invariants() {
        for name in ["c8", "theta", "bowtie", "dumbbell", "shared-edge-weighted"] {
            let g = fixtures::load(name);
            let a = g.incidence_matrix();
            let found = circuits_brute_force(&a, &OracleBudget::default()).unwrap();
            assert!(circuit_invariants_hold(&a, &found), "{name}");
        }
    }
}
