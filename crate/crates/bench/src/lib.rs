//! Fixed benchmark inputs, shared by the criterion benches.

use avoid_core::generate::{random_cograph, random_graph};
use avoid_core::Graph;

/// `G(n, p)` with a fixed seed per size.
pub fn gnp(n: usize, p: f64) -> Graph {
    random_graph(n, p, 0xbe9c + n as u64).expect("valid probability")
}

/// Sparse graph with about `2n` edges.
pub fn sparse(n: usize) -> Graph {
    gnp(n, 4.0 / (n.max(2) - 1) as f64)
}

pub fn cograph(leaves: usize) -> Graph {
    random_cograph(leaves, 0xc06 + leaves as u64).expect("at least one leaf").0
}
