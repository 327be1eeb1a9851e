//! Circuit binomials of toric ideals of vertex-weighted oriented graphs.
//!
//! A weighted oriented graph assigns every vertex a positive integer
//! weight and every edge a direction. Its incidence matrix has a `1` in
//! each edge's tail row and the head's weight in the head row, and the
//! toric ideal of the graph is the kernel of the monomial map defined by
//! the matrix columns. This crate computes the *circuits* of that ideal
//! — the binomials of minimal support — in closed form from minors of
//! the incidence matrix, classifies the subgraph shapes that carry them,
//! decides membership in a strongly robust class, and cross-checks
//! everything against an independent brute-force oracle.
//!
//! ```
//! use otoric::{circuits, fixtures, render_binomial};
//!
//! // Two triangles sharing a vertex: one circuit binomial.
//! let graph = fixtures::load("bowtie");
//! let found = circuits(&graph);
//! assert_eq!(found.len(), 1);
//! assert_eq!(
//!     render_binomial(&found[0].vector, &graph.edge_ids()),
//!     "e1*e3*e5 - e2*e4*e6"
//! );
//! ```
//!
//! Graphs are read from a JSON document:
//!
//! ```json
//! { "vertices": [ {"id": "v1", "weight": 2}, ... ],
//!   "edges":    [ {"id": "e1", "tail": "v1", "head": "v2"}, ... ] }
//! ```
//!
//! Unknown fields are rejected and declaration order is canonical: it
//! fixes the incidence matrix layout and the printed form of every
//! circuit vector.

pub mod circuits;
pub mod cycles;
pub mod fixtures;
pub mod graph;
pub mod linalg;
pub mod oracle;
pub mod robustness;

pub use circuits::{
    assemble_circuits, balanced_cycle_generator, circuit_for_support, circuits, gcd_normalize,
    path_connected_generator, render_binomial, shared_path_generator, shared_vertex_generator,
    Binomial, BinomialVector, CircuitBinomial, CircuitError,
};
pub use cycles::{
    enumerate_cycles, find_circuit_supports, scan_supports, CircuitSupport, CycleError,
    CycleSubgraph, Direction, PathSubgraph, SupportScan,
};
pub use graph::{parse_graph, GraphError, WeightedOrientedGraph};
pub use linalg::{canonical_sign, IntMatrix, LinalgError, RationalVector};
pub use oracle::{
    circuits_brute_force, graver_small, is_circuit_support, is_primitive, verify_restriction,
    OracleBudget, OracleError,
};
pub use robustness::{betti_table, check_robust_class, mu_of, RobustnessError, RobustnessReport};

pub use num::BigInt;
