//! Shared helpers for the integration suites: seeded random graph
//! corpora and set comparison utilities.
//!
//! Different suites use different subsets of these helpers.
#![allow(dead_code)]

use num::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use otoric::WeightedOrientedGraph;

/// One random simple graph: up to 8 vertices, up to 12 edges, weights
/// in 1..=4, random orientations, no loops or parallel edges.
pub fn random_graph(rng: &mut ChaCha8Rng) -> WeightedOrientedGraph {
    let n = rng.gen_range(3..=8usize);
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    pairs.shuffle(rng);
    let max_m = pairs.len().min(12);
    let m = rng.gen_range(0..=max_m);
    let vertices: Vec<(String, i64)> = (0..n)
        .map(|i| (format!("v{}", i + 1), rng.gen_range(1..=4i64)))
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
    WeightedOrientedGraph::new(vertices, edges).expect("generator avoids invalid graphs")
}

/// Deterministic corpus used by the acceptance criteria.
pub fn corpus(seed: u64, count: usize) -> Vec<WeightedOrientedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_graph(&mut rng)).collect()
}

/// A graph in which only sinks may carry weight > 1, paired with its
/// all-weights-1 counterpart.
pub fn random_sink_weighted_pair(
    rng: &mut ChaCha8Rng,
) -> (WeightedOrientedGraph, WeightedOrientedGraph) {
    let shape = random_graph(rng);
    let sinks = shape.sinks();
    let vertices: Vec<(String, i64)> = shape
        .vertices()
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let w = if sinks.contains(&i) {
                rng.gen_range(1..=4i64)
            } else {
                1
            };
            (v.id.clone(), w)
        })
        .collect();
    let ones: Vec<(String, i64)> = shape.vertices().iter().map(|v| (v.id.clone(), 1)).collect();
    let edges: Vec<(String, String, String)> = shape
        .edges()
        .iter()
        .map(|e| {
            (
                e.id.clone(),
                shape.vertex(e.tail).id.clone(),
                shape.vertex(e.head).id.clone(),
            )
        })
        .collect();
    (
        WeightedOrientedGraph::new(vertices, edges.clone()).expect("valid"),
        WeightedOrientedGraph::new(ones, edges).expect("valid"),
    )
}

/// Sorted copy for order-insensitive set comparison.
pub fn sorted_vectors(mut vs: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    vs.sort();
    vs
}

/// Circuit vectors of the closed-form route, sorted.
pub fn formula_vectors(g: &WeightedOrientedGraph) -> Vec<Vec<BigInt>> {
    sorted_vectors(otoric::circuits(g).into_iter().map(|c| c.vector).collect())
}
