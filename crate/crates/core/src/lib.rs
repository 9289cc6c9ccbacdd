//! Recognition of C0P-graphs and minimum k-tuple domination on them.
//!
//! A graph is C0P when the rows and columns of its closed adjacency matrix
//! can be permuted symmetrically so that every column's zeros are
//! consecutive. Such a graph splits into two cliques plus universal
//! vertices, and its k-tuple domination numbers follow from the stability
//! numbers of two interval graphs.

pub mod bits;
pub mod consecutive;
pub mod error;
pub mod fixtures;
pub mod generator;
pub mod graph;
pub mod interval;
pub mod io;
pub mod oracle;
pub mod recognition;
pub mod report;
pub mod solver;
pub mod structure;

pub use error::{Error, Result};
pub use graph::{BitMatrix, Graph, Vertex, VertexSet};
pub use oracle::{brute_force_c0p, brute_force_gamma};
pub use recognition::{find_c0p_ordering, verify_c0p_ordering, Ordering};
pub use solver::{gamma_ktuple, gamma_range, DominationResult, Rule, SolveOptions};
pub use structure::{analyze, C0PStructure, Partition};
