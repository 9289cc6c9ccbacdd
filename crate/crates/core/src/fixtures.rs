//! Small named graphs used throughout the tests and the CLI fixtures.

use crate::graph::Graph;

/// Edges of the seven-vertex example graph, 1-based.
pub const EXAMPLE_EDGES: [(usize, usize); 15] = [
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 7),
    (2, 3),
    (2, 7),
    (3, 5),
    (3, 6),
    (3, 7),
    (4, 5),
    (4, 6),
    (4, 7),
    (5, 6),
    (5, 7),
    (6, 7),
];

/// The seven-vertex example graph: cliques `{v1,v2,v3}` and `{v4,v5,v6}`
/// joined by three cross edges, plus the universal vertex `v7`.
pub fn example_graph() -> Graph {
    let edges: Vec<_> = EXAMPLE_EDGES.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
    Graph::from_edge_list(7, &edges).expect("fixture edges are valid")
}

/// Triangles `{0,1,2}` and `{3,4,5}` with no edges between them.
pub fn two_triangles() -> Graph {
    Graph::from_edge_list(6, &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
        .expect("fixture edges are valid")
}

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &edges).expect("cycle needs n >= 3")
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(n, &edges).expect("path edges are valid")
}
