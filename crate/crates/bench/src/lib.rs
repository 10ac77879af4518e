//! Shared fixtures for the benchmark targets.

use tac_orient_core::generators::{random_multigraph, tripled_path_oriented, TripledPathOrientation};
use tac_orient_core::graph::{Digraph, Multigraph};

/// The all-forward tripled path on `t` vertices as a digraph.
pub fn forward_tripled_path(t: usize) -> Digraph {
    let (g, o) = tripled_path_oriented(t, TripledPathOrientation::AllForward).unwrap();
    o.to_digraph(&g)
}

/// A fixed random multigraph, dense enough to have a nontrivial 2-edge-
/// connected decomposition.
pub fn medium_random_graph() -> Multigraph {
    random_multigraph(7, 14, 7).unwrap()
}
