//! Embedded graph documents used by the test suite and the CLI's
//! `--fixtures` flag.

use crate::graph::{parse_graph, WeightedOrientedGraph};

/// Balanced 8-cycle with weights (4, 3, 2, 1, 36, 7, 6, 1).
///
/// Its toric ideal is principal with generator
/// `e1^6*e3*e5^36*e7^6 - e2^2*e4*e6^36*e8^6`.
pub const C8: &str = r#"{
  "vertices": [
    {"id": "v1", "weight": 4},
    {"id": "v2", "weight": 3},
    {"id": "v3", "weight": 2},
    {"id": "v4", "weight": 1},
    {"id": "v5", "weight": 36},
    {"id": "v6", "weight": 7},
    {"id": "v7", "weight": 6},
    {"id": "v8", "weight": 1}
  ],
  "edges": [
    {"id": "e1", "tail": "v2", "head": "v1"},
    {"id": "e2", "tail": "v3", "head": "v2"},
    {"id": "e3", "tail": "v4", "head": "v3"},
    {"id": "e4", "tail": "v4", "head": "v5"},
    {"id": "e5", "tail": "v5", "head": "v6"},
    {"id": "e6", "tail": "v7", "head": "v6"},
    {"id": "e7", "tail": "v8", "head": "v7"},
    {"id": "e8", "tail": "v8", "head": "v1"}
  ]
}"#;

/// Theta graph with weights (1, 2, 3, 4, 5): two unbalanced 4-cycles
/// sharing the path v1-v2-v3, with unbalanced outer cycle.
///
/// Its toric ideal is principal with generator
/// `e1*e3^12*e6^2 - e2^2*e4^3*e5^10`.
pub const THETA: &str = r#"{
  "vertices": [
    {"id": "v1", "weight": 1},
    {"id": "v2", "weight": 2},
    {"id": "v3", "weight": 3},
    {"id": "v4", "weight": 4},
    {"id": "v5", "weight": 5}
  ],
  "edges": [
    {"id": "e1", "tail": "v1", "head": "v2"},
    {"id": "e2", "tail": "v2", "head": "v3"},
    {"id": "e3", "tail": "v4", "head": "v3"},
    {"id": "e4", "tail": "v1", "head": "v4"},
    {"id": "e5", "tail": "v5", "head": "v3"},
    {"id": "e6", "tail": "v1", "head": "v5"}
  ]
}"#;

/// Two all-weights-1 directed triangles sharing the vertex v1.
/// Circuit vector (1, -1, 1, -1, 1, -1).
pub const BOWTIE: &str = r#"{
  "vertices": [
    {"id": "v1", "weight": 1},
    {"id": "v2", "weight": 1},
    {"id": "v3", "weight": 1},
    {"id": "v4", "weight": 1},
    {"id": "v5", "weight": 1}
  ],
  "edges": [
    {"id": "e1", "tail": "v1", "head": "v2"},
    {"id": "e2", "tail": "v2", "head": "v3"},
    {"id": "e3", "tail": "v3", "head": "v1"},
    {"id": "e4", "tail": "v1", "head": "v4"},
    {"id": "e5", "tail": "v4", "head": "v5"},
    {"id": "e6", "tail": "v5", "head": "v1"}
  ]
}"#;

/// Two directed triangles sharing v1, the first with w(v3) = 2.
/// Circuit vector (2, -2, 4, -3, 3, -3).
pub const SHARED_VERTEX_WEIGHTED: &str = r#"{
  "vertices": [
    {"id": "v1", "weight": 1},
    {"id": "v2", "weight": 1},
    {"id": "v3", "weight": 2},
    {"id": "v4", "weight": 1},
    {"id": "v5", "weight": 1}
  ],
  "edges": [
    {"id": "e1", "tail": "v1", "head": "v2"},
    {"id": "e2", "tail": "v2", "head": "v3"},
    {"id": "e3", "tail": "v3", "head": "v1"},
    {"id": "e4", "tail": "v1", "head": "v4"},
    {"id": "e5", "tail": "v4", "head": "v5"},
    {"id": "e6", "tail": "v5", "head": "v1"}
  ]
}"#;

/// Two all-weights-1 directed triangles joined by a single bridge edge.
/// Circuit vector (1, -1, 1, -2, 1, -1, 1).
pub const DUMBBELL: &str = r#"{
  "vertices": [
    {"id": "v1", "weight": 1},
    {"id": "v2", "weight": 1},
    {"id": "v3", "weight": 1},
    {"id": "v4", "weight": 1},
    {"id": "v5", "weight": 1},
    {"id": "v6", "weight": 1}
  ],
  "edges": [
    {"id": "e1", "tail": "v1", "head": "v2"},
    {"id": "e2", "tail": "v2", "head": "v3"},
    {"id": "e3", "tail": "v3", "head": "v1"},
    {"id": "e4", "tail": "v1", "head": "v4"},
    {"id": "e5", "tail": "v4", "head": "v5"},
    {"id": "e6", "tail": "v5", "head": "v6"},
    {"id": "e7", "tail": "v6", "head": "v4"}
  ]
}"#;

/// Two triangles sharing the edge v1-v2, with w(v3) = 2 on one side.
/// Circuit vector (1, 2, -4, -3, 3).
pub const SHARED_EDGE_WEIGHTED: &str = r#"{
  "vertices": [
    {"id": "v1", "weight": 1},
    {"id": "v2", "weight": 1},
    {"id": "v3", "weight": 2},
    {"id": "v4", "weight": 1}
  ],
  "edges": [
    {"id": "e1", "tail": "v1", "head": "v2"},
    {"id": "e2", "tail": "v2", "head": "v3"},
    {"id": "e3", "tail": "v3", "head": "v1"},
    {"id": "e4", "tail": "v2", "head": "v4"},
    {"id": "e5", "tail": "v4", "head": "v1"}
  ]
}"#;

/// All fixture names accepted by [`by_name`].
pub const NAMES: &[&str] = &[
    "c8",
    "theta",
    "bowtie",
    "shared-vertex-weighted",
    "dumbbell",
    "shared-edge-weighted",
];

/// Looks up an embedded document by name.
pub fn by_name(name: &str) -> Option<&'static str> {
    match name {
        "c8" => Some(C8),
        "theta" => Some(THETA),
        "bowtie" => Some(BOWTIE),
        "shared-vertex-weighted" => Some(SHARED_VERTEX_WEIGHTED),
        "dumbbell" => Some(DUMBBELL),
        "shared-edge-weighted" => Some(SHARED_EDGE_WEIGHTED),
        _ => None,
    }
}

/// Parses an embedded fixture; panics on unknown names.
pub fn load(name: &str) -> WeightedOrientedGraph {
    let doc = by_name(name).unwrap_or_else(|| panic!("unknown fixture {name}"));
    parse_graph(doc).expect("embedded fixtures are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_parse() {
        for name in NAMES {
            let g = load(name);
            assert!(g.vertex_count() > 0, "{name}");
        }
    }
}
