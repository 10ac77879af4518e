//! Orientation algorithms for maximizing the total arc-connectivity of an
//! undirected multigraph, together with the verifiers, exhaustive oracles and
//! instance generators that certify them at small sizes.
//!
//! The centerpiece is [`approx::approx_tac_orientation`]: a reachability-
//! maximizing orientation refined by well-balanced orientations of the
//! 2-edge-connected classes, whose total arc-connectivity is at least 2/3 of
//! the optimum over all orientations.

pub mod approx;
pub mod balance;
pub mod connectivity;
pub mod flow;
pub mod generators;
pub mod graph;
pub mod reach;

pub use approx::{
    approx_tac_orientation, brute_force_max_tac, oco_decide, BruteForceError,
    OptimalOrientation, DEFAULT_EDGE_CAP,
};
pub use balance::{
    eulerian_orientation, orient_with_outdegrees, well_balanced_orientation,
    well_balanced_orientation_with, BalanceError, DegreePrescription, WbConfig, WbError,
};
pub use connectivity::{
    apex_vertex, is_strongly_connected, is_well_balanced, is_well_balanced_fast,
    local_arc_connectivity, local_edge_connectivity, reach_count, strongly_connected_components,
    tac, two_edge_connected_components, BalanceCheck, CutWitness, QueryError,
    TwoEdgeDecomposition, WbViolation,
};
pub use generators::{
    attach_tube, build_g1_g2, build_oco_instance, gadget, parse_bounds, parse_labels,
    random_multigraph, tripled_path, tripled_path_oriented, tube, FsubwboInstance,
    GadgetInstance, GenError, Label, LabelViolation, OcoInstance, ReductionOutput,
    SsubwboInstance, TripledPathOrientation,
};
pub use graph::{
    condense, orient, parse_digraph, parse_graph, parse_orientation, CondenseError, Digraph,
    ForestEdge, GraphError, Multigraph, Orientation, ParseError, WeightedForest,
};
pub use reach::{
    max_reach_orientation, robbins_orientation, tree_reach_dp, ForestOrientation, RobbinsError,
};
