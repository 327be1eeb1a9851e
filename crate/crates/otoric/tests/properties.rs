//! Property tests: algebraic identities of the exact linear algebra and
//! structural invariants of the graph and circuit machinery.

mod common;

use num::bigint::BigInt;
use num::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use otoric::{circuits, enumerate_cycles, parse_graph, scan_supports, IntMatrix, OracleBudget};

/// Cofactor-expansion determinant, the independent cross-check for the
/// fraction-free elimination.
fn det_cofactor(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let sub: Vec<Vec<BigInt>> = (1..n)
            .map(|r| {
                (0..n)
                    .filter(|&c| c != j)
                    .map(|c| m[r][c].clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * det_cofactor(&sub);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn small_square() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=5)
        .prop_flat_map(|n| proptest::collection::vec(proptest::collection::vec(-6i64..=6, n), n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn bareiss_matches_cofactor_expansion(rows in small_square()) {
        let a = IntMatrix::from_i64_rows(&rows);
        let big: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        prop_assert_eq!(a.det().unwrap(), det_cofactor(&big));
    }

    #[test]
    fn laplace_expansion_identity(rows in small_square()) {
        let a = IntMatrix::from_i64_rows(&rows);
        let n = rows.len();
        let mut acc = BigInt::zero();
        for j in 0..n {
            let term = BigInt::from(rows[0][j]) * a.minor(&[0], &[j]).unwrap();
            if j % 2 == 0 { acc += term; } else { acc -= term; }
        }
        prop_assert_eq!(a.det().unwrap(), acc);
    }

    #[test]
    fn rank_plus_nullity_is_column_count(
        rows in (1usize..=5, 1usize..=6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-4i64..=4, c), r)
        })
    ) {
        let a = IntMatrix::from_i64_rows(&rows);
        let basis = a.rational_kernel_basis();
        prop_assert_eq!(a.rank() + basis.len(), a.cols());
        for v in &basis {
            prop_assert!(a.kernel_contains(v.numerators()).unwrap());
            let prim = v.integer_primitive();
            prop_assert!(a.kernel_contains(&prim).unwrap());
        }
    }

    #[test]
    fn random_graph_invariants(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_graph(&mut rng);

        // Round trip through the document format.
        let round = parse_graph(&g.to_json()).unwrap();
        prop_assert_eq!(&round, &g);

        // Sink normalization is idempotent and only rescales sink rows.
        let normalized = g.normalize_sink_weights();
        prop_assert_eq!(&normalized.normalize_sink_weights(), &normalized);
        let a = g.incidence_matrix();
        let b = normalized.incidence_matrix();
        let sinks = g.sinks();
        for r in 0..a.rows() {
            for c in 0..a.cols() {
                if sinks.contains(&r) {
                    // Row is the weight times the normalized row.
                    let w = BigInt::from(g.weight(r));
                    prop_assert_eq!(a.at(r, c).clone(), b.at(r, c) * &w);
                } else {
                    prop_assert_eq!(a.at(r, c), b.at(r, c));
                }
            }
        }

        // Cycle balance is invariant under relabelling.
        for cycle in enumerate_cycles(&g) {
            let balanced = cycle.is_balanced();
            for variant in cycle.all_labellings() {
                prop_assert_eq!(variant.is_balanced(), balanced);
            }
        }
    }

    #[test]
    fn circuit_outputs_are_kernel_primitive_and_leaf_free(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_graph(&mut rng);
        let a = g.incidence_matrix();
        let leaves = g.leaves();
        let scan = scan_supports(&g);
        for circuit in circuits(&g) {
            prop_assert!(a.kernel_contains(&circuit.vector).unwrap());
            let gcd = otoric::linalg::gcd_of_entries(&circuit.vector);
            prop_assert_eq!(gcd, BigInt::one());

            // No support edge touches a leaf.
            for (e, x) in circuit.vector.iter().enumerate() {
                if !x.is_zero() {
                    let edge = g.edge(e);
                    prop_assert!(!leaves.contains(&edge.tail));
                    prop_assert!(!leaves.contains(&edge.head));
                }
            }

            // Support equals the union of the producing shapes' edges.
            for support in &circuit.supports {
                let expected = support.edge_set();
                let actual: std::collections::BTreeSet<usize> = circuit
                    .vector
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(i, _)| i)
                    .collect();
                prop_assert_eq!(expected, actual);
            }

            // Any vertex meeting exactly two support edges sees opposite
            // signs, and no vertex meets exactly one.
            for v in 0..g.vertex_count() {
                let incident: Vec<&BigInt> = (0..g.edge_count())
                    .filter(|&e| {
                        let edge = g.edge(e);
                        (edge.tail == v || edge.head == v) && !circuit.vector[e].is_zero()
                    })
                    .map(|e| &circuit.vector[e])
                    .collect();
                prop_assert_ne!(incident.len(), 1);
                if incident.len() == 2 {
                    prop_assert!(incident[0].sign() != incident[1].sign());
                }
            }
        }
        let _ = scan; // scanned diagnostics are allowed but unused here
    }

    #[test]
    fn restriction_of_circuits_to_subgraphs(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_graph(&mut rng);
        if g.edge_count() == 0 {
            return Ok(());
        }
        // Keep a pseudo-random half of the edges.
        let keep: Vec<usize> = (0..g.edge_count()).filter(|e| (seed >> (e % 48)) & 1 == 0).collect();
        let h = g.edge_subgraph(&keep);

        // Formula route: circuits of H = circuits of G supported in H.
        let mut embedded: Vec<Vec<BigInt>> = circuits(&h)
            .into_iter()
            .map(|c| {
                let mut full = vec![BigInt::zero(); g.edge_count()];
                for (slot, &e) in keep.iter().enumerate() {
                    full[e] = c.vector[slot].clone();
                }
                full
            })
            .collect();
        embedded.sort();
        let mut restricted: Vec<Vec<BigInt>> = circuits(&g)
            .into_iter()
            .map(|c| c.vector)
            .filter(|v| {
                v.iter()
                    .enumerate()
                    .all(|(e, x)| x.is_zero() || keep.contains(&e))
            })
            .collect();
        restricted.sort();
        prop_assert_eq!(embedded, restricted);

        // Brute-force route agrees with itself across the same restriction.
        let budget = OracleBudget::default();
        prop_assert!(otoric::verify_restriction(&g, &keep, &budget).unwrap());
    }
}

/// Heavier coverage than the seeded corpus: denser graphs, wider
/// weights. Run explicitly with `cargo test -- --ignored`.
#[test]
#[ignore = "slow stress run"]
fn stress_oracle_equivalence_on_denser_graphs() {
    use rand::seq::SliceRandom;
    use rand::Rng;

    let mut rng = ChaCha8Rng::seed_from_u64(0xD1CE);
    let budget = OracleBudget {
        max_support_size: 14,
        max_enumeration_count: 100_000_000,
        ..OracleBudget::default()
    };
    let mut total = 0usize;
    for _ in 0..150 {
        let n = rng.gen_range(4..=9usize);
        let mut pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .collect();
        pairs.shuffle(&mut rng);
        let m = rng.gen_range(0..=pairs.len().min(14));
        let vertices: Vec<(String, i64)> = (0..n)
            .map(|i| (format!("v{}", i + 1), rng.gen_range(1..=6i64)))
            .collect();
        let edges: Vec<(String, String, String)> = pairs[..m]
            .iter()
            .enumerate()
            .map(|(k, &(a, b))| {
                let (tail, head) = if rng.gen_bool(0.5) { (a, b) } else { (b, a) };
                (
                    format!("e{}", k + 1),
                    format!("v{}", tail + 1),
                    format!("v{}", head + 1),
                )
            })
            .collect();
        let g = otoric::WeightedOrientedGraph::new(vertices, edges).unwrap();
        let formula = common::formula_vectors(&g);
        let brute = common::sorted_vectors(
            otoric::circuits_brute_force(&g.incidence_matrix(), &budget).unwrap(),
        );
        assert_eq!(formula, brute, "mismatch on {}", g.to_json());
        total += formula.len();
    }
    println!("stress: 150 denser graphs, {total} circuits, zero mismatches");
}
