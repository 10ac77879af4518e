//! The 2/3-approximation for maximum total arc-connectivity, together with
//! the exhaustive solver and decision procedure used as its oracle at small
//! sizes.

use std::fmt;

use crate::balance::{well_balanced_orientation_with, WbConfig, WbError};
use crate::connectivity::{tac, two_edge_connected_components};
use crate::graph::{Multigraph, Orientation};
use crate::reach::max_reach_orientation;

/// Default bound on the edge count accepted by the exhaustive solver.
pub const DEFAULT_EDGE_CAP: usize = 20;

/// Combines a reachability-maximizing orientation with well-balanced
/// orientations of the 2-edge-connected classes: intra-class edges take the
/// well-balanced direction, all remaining edges keep the base direction.
/// The result has tac at least 2/3 of the optimum.
pub fn approx_tac_orientation(g: &Multigraph) -> Result<Orientation, WbError> {
    approx_tac_orientation_with(g, &WbConfig::default())
}

pub fn approx_tac_orientation_with(
    g: &Multigraph,
    cfg: &WbConfig,
) -> Result<Orientation, WbError> {
    let base = max_reach_orientation(g);
    let mut heads = base.heads().to_vec();
    let dec = two_edge_connected_components(g);
    for class in &dec.classes {
        if class.len() < 2 {
            continue;
        }
        let (sub, edge_ids) = g.induced(class);
        let balanced = well_balanced_orientation_with(&sub, cfg)?;
        for (local, &orig) in edge_ids.iter().enumerate() {
            heads[orig] = class[balanced.head(local)];
        }
    }
    Ok(Orientation::new(g, heads).expect("heads stay on their edges"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BruteForceError {
    CapExceeded { edges: usize, cap: usize },
}

impl fmt::Display for BruteForceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BruteForceError::CapExceeded { edges, cap } => {
                write!(f, "{edges} edges exceed the exhaustive cap {cap}")
            }
        }
    }
}

impl std::error::Error for BruteForceError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptimalOrientation {
    pub orientation: Orientation,
    pub value: u64,
}

/// Enumerates all 2^m orientations as a binary counter over edge ids, with
/// "lower endpoint as head" as bit zero, and returns the lexicographically
/// smallest head sequence attaining the maximum tac.
pub fn brute_force_max_tac(
    g: &Multigraph,
    cap: usize,
) -> Result<OptimalOrientation, BruteForceError> {
    let m = g.edge_count();
    if m > cap {
        return Err(BruteForceError::CapExceeded { edges: m, cap });
    }
    let mut best: Option<OptimalOrientation> = None;
    for mask in 0u64..(1u64 << m) {
        let heads: Vec<usize> = (0..m)
            .map(|e| {
                let (lo, hi) = g.endpoints(e);
                if mask >> (m - 1 - e) & 1 == 0 {
                    lo
                } else {
                    hi
                }
            })
            .collect();
        let o = Orientation::new(g, heads).expect("endpoint heads");
        let value = tac(&o.to_digraph(g));
        let better = match &best {
            None => true,
            Some(b) => value > b.value,
        };
        if better {
            best = Some(OptimalOrientation {
                orientation: o,
                value,
            });
        }
    }
    Ok(best.expect("mask 0 always evaluated"))
}

/// Decides whether some orientation reaches total arc-connectivity `k`.
/// The threshold is wide enough for targets produced by the instance
/// generators.
pub fn oco_decide(g: &Multigraph, k: u128, cap: usize) -> Result<bool, BruteForceError> {
    Ok(brute_force_max_tac(g, cap)?.value as u128 >= k)
}
