//! Avoidable vertices, edges and induced paths in simple undirected graphs.
//!
//! Vertices are dense ids `0..n`. The main entry points are
//! [`list_avoidable`] for vertices, [`list_avoidable_edges`] for edges and
//! [`is_avoidable_path`] / [`min_shift_distance`] for induced paths. The
//! [`oracle`] module holds slow reference implementations used for
//! cross-checking, and [`generate`] holds seeded random graph families.

pub mod bitmatrix;
pub mod chordal;
pub mod edges;
pub mod error;
pub mod excluded_path;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod preprocess;
pub mod set;
pub mod triangulation;
pub mod vertex;

pub use edges::{
    enumerate_induced_paths, is_avoidable_edge, is_avoidable_path, is_protected_edge, is_simplicial_edge,
    list_avoidable_edges, min_shift_distance, neighbor_partition, shifts, EdgeNeighborhood, InducedPath, PathCaps,
    ShiftSequence,
};
pub use error::{Error, Result};
pub use excluded_path::{excluded_path_search, protects, ExcludedPathResult};
pub use graph::{
    co_components, complement, connected_components, contract_neighborhood, induced_subgraph, ContractedGraph,
    ContractedVertex, Graph, Partition,
};
pub use oracle::{edge_oracle, ov_gadget, path_oracle, OvGadget, OvInstance, OvRole};
pub use preprocess::{build_cotree, cograph_avoidable, decompose, Cotree, CotreeKind, TypicalCollection};
pub use set::VertexSet;
pub use triangulation::{is_minimal_triangulation, minimal_triangulation, minimal_triangulation_avoiding, Triangulation};
pub use vertex::{is_avoidable, list_avoidable, with_threads, Algorithm, AvoidabilityReport, ListOptions};
