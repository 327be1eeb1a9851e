//! Weighted oriented graphs: data model, JSON round-tripping, incidence
//! matrices and structural queries.
//!
//! A weighted oriented graph is a simple graph (no loops, no parallel
//! edges) with an orientation on every edge and a positive integer
//! weight on every vertex. Declaration order matters: vertices fix the
//! row order and edges the column order of the incidence matrix, and
//! therefore the printed form of every vector derived from it.
//!
//! The incidence matrix has one column per edge with exactly two
//! nonzero entries: `1` in the tail vertex row and the head vertex's
//! weight in the head row.

use std::collections::{BTreeMap, BTreeSet};

use num::bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::IntMatrix;

/// Errors from graph parsing and validation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    /// The document is not valid JSON for the graph schema.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    /// The document is well-formed but violates a graph invariant.
    #[error("validation error: {0}")]
    Validation(String),
}

/// A vertex: opaque id plus a positive integer weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: String,
    pub weight: u64,
}

/// An oriented edge, stored with vertex indices into the parent graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub tail: usize,
    pub head: usize,
}

/// A vertex-weighted oriented graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedOrientedGraph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    vertices: Vec<VertexDoc>,
    edges: Vec<EdgeDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexDoc {
    id: String,
    weight: i64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeDoc {
    id: String,
    tail: String,
    head: String,
}

/// Parses a graph document (see the JSON schema in the crate docs).
///
/// Order of vertices and edges in the document is preserved exactly.
pub fn parse_graph(text: &str) -> Result<WeightedOrientedGraph, GraphError> {
    let doc: GraphDoc = serde_json::from_str(text).map_err(|e| GraphError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let vertices: Vec<(String, i64)> = doc.vertices.into_iter().map(|v| (v.id, v.weight)).collect();
    let edges: Vec<(String, String, String)> = doc
        .edges
        .into_iter()
        .map(|e| (e.id, e.tail, e.head))
        .collect();
    WeightedOrientedGraph::new(vertices, edges)
}

impl WeightedOrientedGraph {
    /// Builds and validates a graph from (id, weight) vertices and
    /// (id, tail id, head id) edges, preserving order.
    pub fn new(
        vertices: Vec<(String, i64)>,
        edges: Vec<(String, String, String)>,
    ) -> Result<Self, GraphError> {
        let mut index: BTreeMap<String, usize> = BTreeMap::new();
        let mut vs = Vec::with_capacity(vertices.len());
        for (id, weight) in vertices {
            if weight < 1 {
                return Err(GraphError::Validation(format!(
                    "vertex {id} has weight {weight}; weights must be at least 1"
                )));
            }
            if index.insert(id.clone(), vs.len()).is_some() {
                return Err(GraphError::Validation(format!("duplicate vertex id {id}")));
            }
            vs.push(Vertex {
                id,
                weight: weight as u64,
            });
        }
        let mut edge_ids: BTreeSet<String> = BTreeSet::new();
        let mut pairs: BTreeMap<(usize, usize), String> = BTreeMap::new();
        let mut es = Vec::with_capacity(edges.len());
        for (id, tail_id, head_id) in edges {
            if !edge_ids.insert(id.clone()) {
                return Err(GraphError::Validation(format!("duplicate edge id {id}")));
            }
            let tail = *index.get(&tail_id).ok_or_else(|| {
                GraphError::Validation(format!("edge {id} references undeclared vertex {tail_id}"))
            })?;
            let head = *index.get(&head_id).ok_or_else(|| {
                GraphError::Validation(format!("edge {id} references undeclared vertex {head_id}"))
            })?;
            if tail == head {
                return Err(GraphError::Validation(format!(
                    "edge {id} is a loop at vertex {tail_id}"
                )));
            }
            let key = (tail.min(head), tail.max(head));
            if let Some(other) = pairs.get(&key) {
                return Err(GraphError::Validation(format!(
                    "edge {id} is parallel to edge {other} between {} and {}",
                    vs[key.0].id, vs[key.1].id
                )));
            }
            pairs.insert(key, id.clone());
            es.push(Edge { id, tail, head });
        }
        Ok(Self {
            vertices: vs,
            edges: es,
        })
    }

    /// Serializes back to the JSON document format (order-preserving).
    pub fn to_json(&self) -> String {
        let doc = GraphDoc {
            vertices: self
                .vertices
                .iter()
                .map(|v| VertexDoc {
                    id: v.id.clone(),
                    weight: v.weight as i64,
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeDoc {
                    id: e.id.clone(),
                    tail: self.vertices[e.tail].id.clone(),
                    head: self.vertices[e.head].id.clone(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("graph document serializes")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex(&self, idx: usize) -> &Vertex {
        &self.vertices[idx]
    }

    pub fn edge(&self, idx: usize) -> &Edge {
        &self.edges[idx]
    }

    pub fn weight(&self, vertex: usize) -> u64 {
        self.vertices[vertex].weight
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }

    pub fn edge_ids(&self) -> Vec<String> {
        self.edges.iter().map(|e| e.id.clone()).collect()
    }

    /// Incidence entry for a (vertex, edge) pair: 1 at the tail, the
    /// vertex weight at the head, 0 otherwise.
    pub fn incidence_entry(&self, vertex: usize, edge: usize) -> BigInt {
        let e = &self.edges[edge];
        if e.tail == vertex {
            BigInt::from(1)
        } else if e.head == vertex {
            BigInt::from(self.vertices[vertex].weight)
        } else {
            BigInt::from(0)
        }
    }

    /// The incidence matrix: rows follow vertex declaration order,
    /// columns edge declaration order.
    pub fn incidence_matrix(&self) -> IntMatrix {
        let entries = (0..self.vertex_count())
            .flat_map(|r| (0..self.edge_count()).map(move |c| self.incidence_entry(r, c)))
            .collect();
        IntMatrix::new(
            self.vertex_count(),
            self.edge_count(),
            entries,
            self.vertices.iter().map(|v| v.id.clone()).collect(),
            self.edges.iter().map(|e| e.id.clone()).collect(),
        )
        .expect("graph invariants guarantee a well-formed matrix")
    }

    /// Outdegree of every vertex.
    pub fn outdegrees(&self) -> Vec<usize> {
        let mut out = vec![0usize; self.vertex_count()];
        for e in &self.edges {
            out[e.tail] += 1;
        }
        out
    }

    /// Undirected degree of every vertex.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.vertex_count()];
        for e in &self.edges {
            deg[e.tail] += 1;
            deg[e.head] += 1;
        }
        deg
    }

    /// Vertices of outdegree zero.
    pub fn sinks(&self) -> Vec<usize> {
        self.outdegrees()
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d == 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// Vertices of undirected degree one.
    pub fn leaves(&self) -> Vec<usize> {
        self.degrees()
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d == 1)
            .map(|(i, _)| i)
            .collect()
    }

    /// Underlying undirected adjacency: for each vertex, the sorted list
    /// of (neighbour, edge index) pairs.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for (i, e) in self.edges.iter().enumerate() {
            adj[e.tail].push((e.head, i));
            adj[e.head].push((e.tail, i));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// A copy of the graph with every sink's weight replaced by 1.
    ///
    /// Sink rows of the incidence matrix are positive scalar multiples of
    /// the corresponding all-ones rows, so this never changes the null
    /// space and therefore never changes the circuit binomials.
    pub fn normalize_sink_weights(&self) -> WeightedOrientedGraph {
        let sinks: BTreeSet<usize> = self.sinks().into_iter().collect();
        let vertices = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| Vertex {
                id: v.id.clone(),
                weight: if sinks.contains(&i) { 1 } else { v.weight },
            })
            .collect();
        WeightedOrientedGraph {
            vertices,
            edges: self.edges.clone(),
        }
    }

    /// The subgraph on the same vertex set keeping only the listed edges
    /// (in the induced order).
    pub fn edge_subgraph(&self, edge_indices: &[usize]) -> WeightedOrientedGraph {
        let keep: BTreeSet<usize> = edge_indices.iter().copied().collect();
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| keep.contains(i))
            .map(|(_, e)| e.clone())
            .collect();
        WeightedOrientedGraph {
            vertices: self.vertices.clone(),
            edges,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use num::Zero;

    #[test]
    fn parses_the_balanced_cycle_fixture() {
        let g = parse_graph(fixtures::C8).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 8);
        let a = g.incidence_matrix();
        let expected = [
            [4, 0, 0, 0, 0, 0, 0, 4],
            [1, 3, 0, 0, 0, 0, 0, 0],
            [0, 1, 2, 0, 0, 0, 0, 0],
            [0, 0, 1, 1, 0, 0, 0, 0],
            [0, 0, 0, 36, 1, 0, 0, 0],
            [0, 0, 0, 0, 7, 7, 0, 0],
            [0, 0, 0, 0, 0, 1, 6, 0],
            [0, 0, 0, 0, 0, 0, 1, 1],
        ];
        for r in 0..8 {
            for c in 0..8 {
                assert_eq!(a.at(r, c), &BigInt::from(expected[r][c]), "entry ({r},{c})");
            }
        }
    }

    #[test]
    fn theta_fixture_matches_printed_matrix() {
        let g = parse_graph(fixtures::THETA).unwrap();
        let a = g.incidence_matrix();
        let expected = [
            [1, 0, 0, 1, 0, 1],
            [2, 1, 0, 0, 0, 0],
            [0, 3, 3, 0, 3, 0],
            [0, 0, 1, 4, 0, 0],
            [0, 0, 0, 0, 1, 5],
        ];
        assert_eq!(a.rows(), 5);
        assert_eq!(a.cols(), 6);
        for r in 0..5 {
            for c in 0..6 {
                assert_eq!(a.at(r, c), &BigInt::from(expected[r][c]), "entry ({r},{c})");
            }
        }
    }

    #[test]
    fn rejects_loops() {
        let doc = r#"{"vertices":[{"id":"v1","weight":1}],"edges":[{"id":"e1","tail":"v1","head":"v1"}]}"#;
        assert!(matches!(parse_graph(doc), Err(GraphError::Validation(_))));
    }

    #[test]
    fn rejects_parallel_edges() {
        let doc = r#"{"vertices":[{"id":"v1","weight":1},{"id":"v2","weight":1}],
                      "edges":[{"id":"e1","tail":"v1","head":"v2"},{"id":"e2","tail":"v2","head":"v1"}]}"#;
        assert!(matches!(parse_graph(doc), Err(GraphError::Validation(_))));
    }

    #[test]
    fn rejects_nonpositive_weights() {
        let doc = r#"{"vertices":[{"id":"v1","weight":0},{"id":"v2","weight":1}],
                      "edges":[{"id":"e1","tail":"v1","head":"v2"}]}"#;
        let err = parse_graph(doc).unwrap_err();
        assert!(matches!(err, GraphError::Validation(ref m) if m.contains("v1")));
    }

    #[test]
    fn rejects_unknown_fields_and_dangling_endpoints() {
        let doc = r#"{"vertices":[{"id":"v1","weight":1,"color":"red"}],"edges":[]}"#;
        assert!(matches!(parse_graph(doc), Err(GraphError::Parse { .. })));
        let doc = r#"{"vertices":[{"id":"v1","weight":1}],"edges":[{"id":"e1","tail":"v1","head":"v9"}]}"#;
        assert!(matches!(parse_graph(doc), Err(GraphError::Validation(_))));
    }

    #[test]
    fn empty_document_is_the_empty_graph() {
        let g = parse_graph(r#"{"vertices":[],"edges":[]}"#).unwrap();
        assert_eq!(g.vertex_count(), 0);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.incidence_matrix().rank(), 0);
    }

    #[test]
    fn single_edge_columns() {
        let g = WeightedOrientedGraph::new(
            vec![("v1".into(), 1), ("v2".into(), 7)],
            vec![("e1".into(), "v1".into(), "v2".into())],
        )
        .unwrap();
        let a = g.incidence_matrix();
        assert_eq!(a.at(0, 0), &BigInt::from(1));
        assert_eq!(a.at(1, 0), &BigInt::from(7));
    }

    #[test]
    fn sink_normalization() {
        let g = WeightedOrientedGraph::new(
            vec![("v1".into(), 3), ("v2".into(), 9)],
            vec![("e1".into(), "v1".into(), "v2".into())],
        )
        .unwrap();
        let n = g.normalize_sink_weights();
        assert_eq!(n.weight(0), 3);
        assert_eq!(n.weight(1), 1);
        assert_eq!(n.normalize_sink_weights(), n, "idempotent");

        // A directed cycle has no sinks.
        let c = WeightedOrientedGraph::new(
            vec![("v1".into(), 2), ("v2".into(), 3), ("v3".into(), 4)],
            vec![
                ("e1".into(), "v1".into(), "v2".into()),
                ("e2".into(), "v2".into(), "v3".into()),
                ("e3".into(), "v3".into(), "v1".into()),
            ],
        )
        .unwrap();
        assert_eq!(c.normalize_sink_weights(), c);
    }

    #[test]
    fn structural_queries() {
        let path = WeightedOrientedGraph::new(
            vec![("v1".into(), 1), ("v2".into(), 1), ("v3".into(), 1)],
            vec![
                ("e1".into(), "v1".into(), "v2".into()),
                ("e2".into(), "v2".into(), "v3".into()),
            ],
        )
        .unwrap();
        assert_eq!(path.leaves(), vec![0, 2]);
        assert_eq!(path.sinks(), vec![2]);

        let star = WeightedOrientedGraph::new(
            vec![
                ("c".into(), 1),
                ("v1".into(), 1),
                ("v2".into(), 1),
                ("v3".into(), 1),
            ],
            vec![
                ("e1".into(), "v1".into(), "c".into()),
                ("e2".into(), "v2".into(), "c".into()),
                ("e3".into(), "v3".into(), "c".into()),
            ],
        )
        .unwrap();
        assert_eq!(star.sinks(), vec![0]);
        assert_eq!(star.leaves(), vec![1, 2, 3]);
    }

    #[test]
    fn round_trip_preserves_order() {
        let g = parse_graph(fixtures::THETA).unwrap();
        let again = parse_graph(&g.to_json()).unwrap();
        assert_eq!(g, again);
    }

    #[test]
    fn incidence_columns_have_two_nonzeros_with_unit_tail() {
        let g = parse_graph(fixtures::C8).unwrap();
        let a = g.incidence_matrix();
        for c in 0..a.cols() {
            let nonzero: Vec<usize> = (0..a.rows()).filter(|&r| !a.at(r, c).is_zero()).collect();
            assert_eq!(nonzero.len(), 2);
            let e = g.edge(c);
            assert!(nonzero.contains(&e.tail) && nonzero.contains(&e.head));
            assert_eq!(a.at(e.tail, c), &BigInt::from(1));
        }
    }
}
