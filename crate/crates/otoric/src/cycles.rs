//! Cycle enumeration, balance classification, usual labellings, and
//! detection of the four circuit-supporting subgraph shapes.
//!
//! Cycles here are always cycles of the underlying undirected graph;
//! edge orientations never restrict membership. A cycle or path carries
//! its *usual labelling*: vertices `v1..vm` and edges `e1..em` listed so
//! that edge `ei` joins `vi` and `v(i+1)` (indices mod m for cycles).
//! An even cycle is *balanced* when the determinant of its own incidence
//! matrix vanishes; only balanced cycles have a nonzero toric ideal on
//! their own.

use std::collections::BTreeSet;

use num::bigint::BigInt;
use num::Zero;
use thiserror::Error;

use crate::graph::WeightedOrientedGraph;
use crate::linalg::IntMatrix;

/// Errors from subgraph construction and labelling.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error("argument error: {0}")]
    Argument(String),
}

/// Traversal direction for relabelling a cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

/// A simple cycle of the underlying undirected graph, stored in usual
/// labelling: `edges[i]` joins `vertices[i]` and `vertices[i+1 mod m]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSubgraph<'g> {
    graph: &'g WeightedOrientedGraph,
    vertices: Vec<usize>,
    edges: Vec<usize>,
}

/// A simple path, stored in usual labelling: `edges[i]` joins
/// `vertices[i]` and `vertices[i+1]`. A single vertex (length 0) is a
/// valid degenerate path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSubgraph<'g> {
    graph: &'g WeightedOrientedGraph,
    vertices: Vec<usize>,
    edges: Vec<usize>,
}

fn edge_joins(g: &WeightedOrientedGraph, edge: usize, a: usize, b: usize) -> bool {
    let e = g.edge(edge);
    (e.tail == a && e.head == b) || (e.tail == b && e.head == a)
}

/// Incidence submatrix for an ordered list of vertices and edges, with
/// entries inherited from the parent graph.
fn labelled_incidence(g: &WeightedOrientedGraph, vertices: &[usize], edges: &[usize]) -> IntMatrix {
    let entries = vertices
        .iter()
        .flat_map(|&v| edges.iter().map(move |&e| g.incidence_entry(v, e)))
        .collect();
    IntMatrix::new(
        vertices.len(),
        edges.len(),
        entries,
        vertices.iter().map(|&v| g.vertex(v).id.clone()).collect(),
        edges.iter().map(|&e| g.edge(e).id.clone()).collect(),
    )
    .expect("subgraph labelling is well-formed")
}

impl<'g> CycleSubgraph<'g> {
    /// Builds a cycle from explicit usual labelling and checks the
    /// incidence invariant.
    pub fn new(
        graph: &'g WeightedOrientedGraph,
        vertices: Vec<usize>,
        edges: Vec<usize>,
    ) -> Result<Self, CycleError> {
        let m = vertices.len();
        if m < 3 {
            return Err(CycleError::Argument(format!(
                "a cycle needs at least 3 vertices, got {m}"
            )));
        }
        if edges.len() != m {
            return Err(CycleError::Argument(format!(
                "cycle has {m} vertices but {} edges",
                edges.len()
            )));
        }
        let distinct: BTreeSet<usize> = vertices.iter().copied().collect();
        if distinct.len() != m {
            return Err(CycleError::Argument("repeated vertex in cycle".into()));
        }
        for i in 0..m {
            if !edge_joins(graph, edges[i], vertices[i], vertices[(i + 1) % m]) {
                return Err(CycleError::Argument(format!(
                    "edge {} does not join consecutive cycle vertices",
                    graph.edge(edges[i]).id
                )));
            }
        }
        Ok(Self {
            graph,
            vertices,
            edges,
        })
    }

    pub fn graph(&self) -> &'g WeightedOrientedGraph {
        self.graph
    }

    /// Number of vertices (= number of edges).
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn vertex_set(&self) -> BTreeSet<usize> {
        self.vertices.iter().copied().collect()
    }

    pub fn edge_set(&self) -> BTreeSet<usize> {
        self.edges.iter().copied().collect()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// Incidence matrix in the cycle's current usual labelling (m x m).
    pub fn incidence_matrix(&self) -> IntMatrix {
        labelled_incidence(self.graph, &self.vertices, &self.edges)
    }

    /// Determinant of the incidence matrix in the current labelling.
    pub fn det(&self) -> BigInt {
        self.incidence_matrix()
            .det()
            .expect("cycle matrix is square")
    }

    /// True when the determinant of the cycle's incidence matrix is zero.
    /// Only even cycles can be balanced.
    pub fn is_balanced(&self) -> bool {
        self.det().is_zero()
    }

    /// The same cycle relabelled to start at position `start`, optionally
    /// reversing the traversal direction.
    pub fn relabelled(&self, start: usize, direction: Direction) -> CycleSubgraph<'g> {
        let m = self.len();
        let start = start % m;
        let (vertices, edges) = match direction {
            Direction::Forward => {
                let vertices = (0..m).map(|i| self.vertices[(start + i) % m]).collect();
                let edges = (0..m).map(|i| self.edges[(start + i) % m]).collect();
                (vertices, edges)
            }
            Direction::Backward => {
                // Walking backwards from `start`, the edge joining
                // v(start) and v(start-1) is edges[start-1].
                let vertices = (0..m).map(|i| self.vertices[(start + m - i) % m]).collect();
                let edges = (0..m)
                    .map(|i| self.edges[(start + m - 1 - i) % m])
                    .collect();
                (vertices, edges)
            }
        };
        CycleSubgraph {
            graph: self.graph,
            vertices,
            edges,
        }
    }

    /// Relabels so that `vertex` comes first, traversing in `direction`.
    pub fn labelled_from(
        &self,
        vertex: usize,
        direction: Direction,
    ) -> Result<CycleSubgraph<'g>, CycleError> {
        let Some(pos) = self.vertices.iter().position(|&v| v == vertex) else {
            return Err(CycleError::Argument(format!(
                "vertex {} is not on the cycle",
                self.graph.vertex(vertex).id
            )));
        };
        Ok(self.relabelled(pos, direction))
    }

    /// All 2m usual labellings of this cycle.
    pub fn all_labellings(&self) -> Vec<CycleSubgraph<'g>> {
        let m = self.len();
        let mut out = Vec::with_capacity(2 * m);
        for start in 0..m {
            out.push(self.relabelled(start, Direction::Forward));
            out.push(self.relabelled(start, Direction::Backward));
        }
        out
    }

    /// Canonical labelling: the minimum vertex index comes first and the
    /// second vertex is the smaller of its two cycle neighbours.
    pub fn canonical(&self) -> CycleSubgraph<'g> {
        let m = self.len();
        let min_pos = (0..m)
            .min_by_key(|&i| self.vertices[i])
            .expect("cycle is nonempty");
        let fwd = self.relabelled(min_pos, Direction::Forward);
        let bwd = self.relabelled(min_pos, Direction::Backward);
        if fwd.vertices[1] <= bwd.vertices[1] {
            fwd
        } else {
            bwd
        }
    }

    /// Key for deterministic ordering of cycles.
    pub fn sort_key(&self) -> (usize, Vec<usize>) {
        let c = self.canonical();
        (c.len(), c.vertices.clone())
    }
}

impl<'g> PathSubgraph<'g> {
    /// Builds a path from explicit usual labelling and checks the
    /// incidence invariant.
    pub fn new(
        graph: &'g WeightedOrientedGraph,
        vertices: Vec<usize>,
        edges: Vec<usize>,
    ) -> Result<Self, CycleError> {
        if vertices.is_empty() {
            return Err(CycleError::Argument(
                "a path needs at least one vertex".into(),
            ));
        }
        if edges.len() + 1 != vertices.len() {
            return Err(CycleError::Argument(format!(
                "path has {} vertices but {} edges",
                vertices.len(),
                edges.len()
            )));
        }
        let distinct: BTreeSet<usize> = vertices.iter().copied().collect();
        if distinct.len() != vertices.len() {
            return Err(CycleError::Argument("repeated vertex in path".into()));
        }
        for i in 0..edges.len() {
            if !edge_joins(graph, edges[i], vertices[i], vertices[i + 1]) {
                return Err(CycleError::Argument(format!(
                    "edge {} does not join consecutive path vertices",
                    graph.edge(edges[i]).id
                )));
            }
        }
        Ok(Self {
            graph,
            vertices,
            edges,
        })
    }

    pub fn graph(&self) -> &'g WeightedOrientedGraph {
        self.graph
    }

    /// Path length = number of edges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().expect("path is nonempty")
    }

    pub fn vertex_set(&self) -> BTreeSet<usize> {
        self.vertices.iter().copied().collect()
    }

    pub fn edge_set(&self) -> BTreeSet<usize> {
        self.edges.iter().copied().collect()
    }

    /// Interior vertices (everything but the two endpoints).
    pub fn interior(&self) -> &[usize] {
        if self.vertices.len() <= 2 {
            &[]
        } else {
            &self.vertices[1..self.vertices.len() - 1]
        }
    }

    /// Incidence matrix in the path's usual labelling ((k+1) x k).
    pub fn incidence_matrix(&self) -> IntMatrix {
        labelled_incidence(self.graph, &self.vertices, &self.edges)
    }

    pub fn reversed(&self) -> PathSubgraph<'g> {
        PathSubgraph {
            graph: self.graph,
            vertices: self.vertices.iter().rev().copied().collect(),
            edges: self.edges.iter().rev().copied().collect(),
        }
    }

    /// Relabels the path to start from the given endpoint.
    pub fn from_end(&self, vertex: usize) -> Result<PathSubgraph<'g>, CycleError> {
        if self.first() == vertex {
            Ok(self.clone())
        } else if self.last() == vertex {
            Ok(self.reversed())
        } else {
            Err(CycleError::Argument(format!(
                "vertex {} is not an endpoint of the path",
                self.graph.vertex(vertex).id
            )))
        }
    }
}

/// Every simple cycle of the underlying undirected graph, each reported
/// once in canonical labelling, in a deterministic order.
///
/// Backtracking search anchored at the minimum vertex of each cycle: a
/// path only visits vertices above the anchor, and a closure is recorded
/// only when the second vertex is smaller than the last, which picks one
/// of the two traversal directions.
pub fn enumerate_cycles(graph: &WeightedOrientedGraph) -> Vec<CycleSubgraph<'_>> {
    let n = graph.vertex_count();
    let adj = graph.adjacency();
    let mut out: Vec<CycleSubgraph<'_>> = Vec::new();

    for start in 0..n {
        let mut path_v = vec![start];
        let mut path_e: Vec<usize> = Vec::new();
        let mut on_path = vec![false; n];
        on_path[start] = true;
        // Iterative DFS; each frame tracks which adjacency entry to try next.
        let mut frames: Vec<usize> = vec![0];
        while let Some(frame) = frames.last_mut() {
            let v = *path_v.last().expect("path is nonempty");
            if *frame >= adj[v].len() {
                frames.pop();
                on_path[v] = false;
                path_v.pop();
                path_e.pop();
                continue;
            }
            let (u, e) = adj[v][*frame];
            *frame += 1;
            if u == start && path_v.len() >= 3 {
                // Close the cycle once per direction: second < last.
                if path_v[1] < v {
                    let mut edges = path_e.clone();
                    edges.push(e);
                    let cycle = CycleSubgraph::new(graph, path_v.clone(), edges)
                        .expect("search produces consistent labellings");
                    out.push(cycle);
                }
            } else if u > start && !on_path[u] {
                path_v.push(u);
                path_e.push(e);
                on_path[u] = true;
                frames.push(0);
            }
        }
    }
    out.sort_by_key(|c| c.sort_key());
    out
}

/// One of the four circuit-supporting shapes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CircuitSupport<'g> {
    /// A single balanced cycle.
    BalancedCycle { cycle: CycleSubgraph<'g> },
    /// Two unbalanced cycles meeting in exactly one vertex.
    SharedVertex {
        first: CycleSubgraph<'g>,
        second: CycleSubgraph<'g>,
    },
    /// Two vertex-disjoint unbalanced cycles joined by a path that is
    /// internally disjoint from both; `path` runs from `first` to
    /// `second`.
    PathConnected {
        first: CycleSubgraph<'g>,
        path: PathSubgraph<'g>,
        second: CycleSubgraph<'g>,
    },
    /// Two unbalanced cycles whose intersection is exactly `shared`
    /// (length >= 1), with unbalanced outer cycle.
    SharedPath {
        first: CycleSubgraph<'g>,
        second: CycleSubgraph<'g>,
        shared: PathSubgraph<'g>,
        outer: CycleSubgraph<'g>,
    },
}

impl<'g> CircuitSupport<'g> {
    pub fn kind_name(&self) -> &'static str {
        match self {
            CircuitSupport::BalancedCycle { .. } => "balanced-cycle",
            CircuitSupport::SharedVertex { .. } => "shared-vertex",
            CircuitSupport::PathConnected { .. } => "path-connected",
            CircuitSupport::SharedPath { .. } => "shared-path",
        }
    }

    /// All edges of the support (the expected support of its binomial).
    pub fn edge_set(&self) -> BTreeSet<usize> {
        match self {
            CircuitSupport::BalancedCycle { cycle } => cycle.edge_set(),
            CircuitSupport::SharedVertex { first, second } => {
                let mut s = first.edge_set();
                s.extend(second.edge_set());
                s
            }
            CircuitSupport::PathConnected {
                first,
                path,
                second,
            } => {
                let mut s = first.edge_set();
                s.extend(path.edge_set());
                s.extend(second.edge_set());
                s
            }
            CircuitSupport::SharedPath { first, second, .. } => {
                let mut s = first.edge_set();
                s.extend(second.edge_set());
                s
            }
        }
    }

    /// Constituent cycles, in order.
    pub fn cycles(&self) -> Vec<&CycleSubgraph<'g>> {
        match self {
            CircuitSupport::BalancedCycle { cycle } => vec![cycle],
            CircuitSupport::SharedVertex { first, second } => vec![first, second],
            CircuitSupport::PathConnected { first, second, .. } => vec![first, second],
            CircuitSupport::SharedPath { first, second, .. } => vec![first, second],
        }
    }

    /// The connecting or shared path, when the shape has one.
    pub fn path(&self) -> Option<&PathSubgraph<'g>> {
        match self {
            CircuitSupport::PathConnected { path, .. } => Some(path),
            CircuitSupport::SharedPath { shared, .. } => Some(shared),
            _ => None,
        }
    }

    pub fn outer(&self) -> Option<&CycleSubgraph<'g>> {
        match self {
            CircuitSupport::SharedPath { outer, .. } => Some(outer),
            _ => None,
        }
    }

    fn kind_rank(&self) -> u8 {
        match self {
            CircuitSupport::BalancedCycle { .. } => 0,
            CircuitSupport::SharedVertex { .. } => 1,
            CircuitSupport::PathConnected { .. } => 2,
            CircuitSupport::SharedPath { .. } => 3,
        }
    }

    /// Key for deterministic ordering of supports.
    pub fn sort_key(&self) -> (u8, Vec<usize>, Vec<usize>, Vec<usize>) {
        let all: Vec<usize> = self.edge_set().into_iter().collect();
        let first = self.cycles()[0].sort_key().1;
        let path = self.path().map(|p| p.edges().to_vec()).unwrap_or_default();
        (self.kind_rank(), all, first, path)
    }
}

/// Result of the support scan: the supports plus diagnostics for cycle
/// pairs whose intersection shape is outside the four covered kinds.
#[derive(Debug, Clone)]
pub struct SupportScan<'g> {
    pub supports: Vec<CircuitSupport<'g>>,
    pub skipped: Vec<String>,
}

/// Enumerates every circuit-supporting shape of the graph:
/// balanced cycles, unbalanced pairs sharing exactly one vertex,
/// vertex-disjoint unbalanced pairs with each internally-disjoint
/// connecting path, and unbalanced pairs sharing a single path whose
/// outer cycle is unbalanced.
///
/// A shared-path pair whose outer cycle is balanced is not emitted: its
/// circuit is the balanced outer cycle, already listed on its own.
/// Unbalanced pairs with a disconnected intersection are reported in
/// `skipped`; every circuit they carry is still reachable through other
/// cycles of the graph.
pub fn scan_supports(graph: &WeightedOrientedGraph) -> SupportScan<'_> {
    let cycles = enumerate_cycles(graph);
    let balanced: Vec<bool> = cycles.iter().map(|c| c.is_balanced()).collect();
    let mut supports: Vec<CircuitSupport<'_>> = Vec::new();
    let mut skipped: Vec<String> = Vec::new();

    for (c, is_bal) in cycles.iter().zip(&balanced) {
        if *is_bal {
            supports.push(CircuitSupport::BalancedCycle { cycle: c.clone() });
        }
    }

    for i in 0..cycles.len() {
        if balanced[i] {
            continue;
        }
        for j in i + 1..cycles.len() {
            if balanced[j] {
                continue;
            }
            let (ci, cj) = (&cycles[i], &cycles[j]);
            let shared_vertices: BTreeSet<usize> = ci
                .vertex_set()
                .intersection(&cj.vertex_set())
                .copied()
                .collect();
            let shared_edges: BTreeSet<usize> = ci
                .edge_set()
                .intersection(&cj.edge_set())
                .copied()
                .collect();

            if shared_edges.is_empty() {
                match shared_vertices.len() {
                    0 => {
                        for path in connecting_paths(graph, ci, cj) {
                            supports.push(CircuitSupport::PathConnected {
                                first: ci.clone(),
                                path,
                                second: cj.clone(),
                            });
                        }
                    }
                    1 => supports.push(CircuitSupport::SharedVertex {
                        first: ci.clone(),
                        second: cj.clone(),
                    }),
                    _ => skipped.push(format!(
                        "cycles {} and {} meet in {} vertices without sharing an edge",
                        cycle_label(ci),
                        cycle_label(cj),
                        shared_vertices.len()
                    )),
                }
                continue;
            }

            match shared_path(graph, &shared_edges, &shared_vertices) {
                Some(shared) => {
                    let outer_edges: BTreeSet<usize> = ci
                        .edge_set()
                        .union(&cj.edge_set())
                        .copied()
                        .filter(|e| !shared_edges.contains(e))
                        .collect();
                    match cycle_from_edge_set(graph, &outer_edges) {
                        Some(outer) => {
                            if outer.is_balanced() {
                                // The circuit of this pair is the balanced
                                // outer cycle, already emitted above.
                            } else {
                                supports.push(CircuitSupport::SharedPath {
                                    first: ci.clone(),
                                    second: cj.clone(),
                                    shared,
                                    outer,
                                });
                            }
                        }
                        None => skipped.push(format!(
                            "cycles {} and {} share a path but their symmetric difference is not a single cycle",
                            cycle_label(ci),
                            cycle_label(cj)
                        )),
                    }
                }
                None => skipped.push(format!(
                    "cycles {} and {} intersect in a shape that is not a single path",
                    cycle_label(ci),
                    cycle_label(cj)
                )),
            }
        }
    }

    supports.sort_by_key(|s| s.sort_key());
    SupportScan { supports, skipped }
}

/// The supports alone, without diagnostics.
pub fn find_circuit_supports(graph: &WeightedOrientedGraph) -> Vec<CircuitSupport<'_>> {
    scan_supports(graph).supports
}

fn cycle_label(c: &CycleSubgraph<'_>) -> String {
    let ids: Vec<&str> = c
        .vertices()
        .iter()
        .map(|&v| c.graph().vertex(v).id.as_str())
        .collect();
    format!("({})", ids.join(" "))
}

/// All simple paths from a vertex of `from` to a vertex of `to` whose
/// interior avoids both cycles, oriented from `from` to `to`.
pub fn connecting_paths<'g>(
    graph: &'g WeightedOrientedGraph,
    from: &CycleSubgraph<'g>,
    to: &CycleSubgraph<'g>,
) -> Vec<PathSubgraph<'g>> {
    let adj = graph.adjacency();
    let from_set = from.vertex_set();
    let to_set = to.vertex_set();
    let mut out = Vec::new();

    for &a in from.vertices() {
        // DFS over vertices outside both cycles, terminating on `to`.
        let mut path_v = vec![a];
        let mut path_e: Vec<usize> = Vec::new();
        let mut on_path = vec![false; graph.vertex_count()];
        on_path[a] = true;
        let mut frames = vec![0usize];
        while let Some(frame) = frames.last_mut() {
            let v = *path_v.last().expect("path is nonempty");
            if *frame >= adj[v].len() {
                frames.pop();
                on_path[v] = false;
                path_v.pop();
                path_e.pop();
                continue;
            }
            let (u, e) = adj[v][*frame];
            *frame += 1;
            if to_set.contains(&u) {
                let mut vertices = path_v.clone();
                vertices.push(u);
                let mut edges = path_e.clone();
                edges.push(e);
                out.push(
                    PathSubgraph::new(graph, vertices, edges)
                        .expect("search produces consistent labellings"),
                );
            } else if !from_set.contains(&u) && !on_path[u] {
                path_v.push(u);
                path_e.push(e);
                on_path[u] = true;
                frames.push(0);
            }
        }
    }
    out.sort_by_key(|p| p.vertices().to_vec());
    out
}

/// Checks that the shared edges form a single simple path whose vertex
/// set is exactly the shared vertex set, and returns it (oriented from
/// the smaller endpoint).
fn shared_path<'g>(
    graph: &'g WeightedOrientedGraph,
    shared_edges: &BTreeSet<usize>,
    shared_vertices: &BTreeSet<usize>,
) -> Option<PathSubgraph<'g>> {
    let mut degree: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for &e in shared_edges {
        let edge = graph.edge(e);
        degree.entry(edge.tail).or_default().push(e);
        degree.entry(edge.head).or_default().push(e);
    }
    // Path shape: exactly two endpoints of degree 1, the rest degree 2,
    // and no shared vertex outside the shared edges.
    if degree.keys().copied().collect::<BTreeSet<_>>() != *shared_vertices {
        return None;
    }
    let endpoints: Vec<usize> = degree
        .iter()
        .filter(|(_, es)| es.len() == 1)
        .map(|(&v, _)| v)
        .collect();
    if endpoints.len() != 2 || degree.values().any(|es| es.len() > 2) {
        return None;
    }
    let start = *endpoints.iter().min().expect("two endpoints");
    let mut vertices = vec![start];
    let mut edges = Vec::new();
    let mut used: BTreeSet<usize> = BTreeSet::new();
    let mut current = start;
    while edges.len() < shared_edges.len() {
        let next_edge = degree
            .get(&current)?
            .iter()
            .copied()
            .find(|e| !used.contains(e))?;
        used.insert(next_edge);
        let e = graph.edge(next_edge);
        let next = if e.tail == current { e.head } else { e.tail };
        edges.push(next_edge);
        vertices.push(next);
        current = next;
    }
    // Connectivity check: the walk must have consumed every shared edge.
    if used.len() != shared_edges.len() {
        return None;
    }
    PathSubgraph::new(graph, vertices, edges).ok()
}

/// Reassembles an edge set into a single simple cycle, if it is one.
pub fn cycle_from_edge_set<'g>(
    graph: &'g WeightedOrientedGraph,
    edges: &BTreeSet<usize>,
) -> Option<CycleSubgraph<'g>> {
    if edges.len() < 3 {
        return None;
    }
    let mut degree: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for &e in edges {
        let edge = graph.edge(e);
        degree.entry(edge.tail).or_default().push(e);
        degree.entry(edge.head).or_default().push(e);
    }
    if degree.len() != edges.len() || degree.values().any(|es| es.len() != 2) {
        return None;
    }
    let start = *degree.keys().min().expect("nonempty");
    let mut vertices = vec![start];
    let mut cycle_edges = Vec::new();
    let mut used: BTreeSet<usize> = BTreeSet::new();
    let mut current = start;
    loop {
        let next_edge = degree[&current]
            .iter()
            .copied()
            .find(|e| !used.contains(e))?;
        used.insert(next_edge);
        let e = graph.edge(next_edge);
        let next = if e.tail == current { e.head } else { e.tail };
        cycle_edges.push(next_edge);
        if next == start {
            break;
        }
        vertices.push(next);
        current = next;
    }
    if used.len() != edges.len() {
        return None; // disconnected union of cycles
    }
    CycleSubgraph::new(graph, vertices, cycle_edges)
        .ok()
        .map(|c| c.canonical())
}
