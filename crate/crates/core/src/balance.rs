//! Orientation constructions: Eulerian orientations, orientations with
//! prescribed out-degrees, and certified well-balanced orientations via the
//! odd-vertex pairing search.

use std::fmt;

use crate::connectivity::{is_well_balanced, is_well_balanced_fast};
use crate::flow::FlowNetwork;
use crate::graph::{Multigraph, Orientation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BalanceError {
    OddDegree { vertex: usize },
}

impl fmt::Display for BalanceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BalanceError::OddDegree { vertex } => write!(f, "odd degree at {vertex}"),
        }
    }
}

impl std::error::Error for BalanceError {}

/// Orients every edge along an Euler tour of its component, so that
/// d⁺(v) = d⁻(v) for all v. Requires all degrees even.
pub fn eulerian_orientation(g: &Multigraph) -> Result<Orientation, BalanceError> {
    let n = g.vertex_count();
    for v in 0..n {
        if g.degree(v) % 2 == 1 {
            return Err(BalanceError::OddDegree { vertex: v });
        }
    }
    let mut heads = vec![usize::MAX; g.edge_count()];
    let mut used = vec![false; g.edge_count()];
    let mut ptr = vec![0usize; n];
    for start in 0..n {
        let mut stack = vec![start];
        while let Some(&v) = stack.last() {
            let inc = g.incident_edges(v);
            while ptr[v] < inc.len() && used[inc[ptr[v]]] {
                ptr[v] += 1;
            }
            if ptr[v] == inc.len() {
                stack.pop();
            } else {
                let e = inc[ptr[v]];
                used[e] = true;
                let w = g.other_endpoint(e, v);
                heads[e] = w;
                stack.push(w);
            }
        }
    }
    Ok(Orientation::new(g, heads).expect("tour orients every edge"))
}

/// Outcome of prescribing out-degrees: either an orientation realizing φ, or
/// a witness to infeasibility per Hakimi's condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DegreePrescription {
    Oriented(Orientation),
    /// Σφ does not equal the number of edges.
    SumMismatch { edge_count: usize, requested: usize },
    /// A set inducing more edges than its members are allowed to emit:
    /// i_G(S) > Σ_{v∈S} φ(v).
    Infeasible {
        dense_set: Vec<usize>,
        induced_edges: usize,
        allowed: usize,
    },
}

/// Finds an orientation with d⁺(v) = φ(v) for all v, via a bipartite flow
/// from edges to their endpoints, or returns the violated Hakimi condition.
pub fn orient_with_outdegrees(g: &Multigraph, phi: &[usize]) -> DegreePrescription {
    let n = g.vertex_count();
    let m = g.edge_count();
    assert_eq!(phi.len(), n, "phi must assign every vertex");
    let requested: usize = phi.iter().sum();
    if requested != m {
        return DegreePrescription::SumMismatch {
            edge_count: m,
            requested,
        };
    }
    // nodes: 0..n vertices, n..n+m edge nodes, then source and sink
    let source = n + m;
    let sink = n + m + 1;
    let big = (m + 1) as u64;
    let mut net = FlowNetwork::new(n + m + 2);
    let mut to_first_endpoint = Vec::with_capacity(m);
    for e in 0..m {
        let (u, v) = g.endpoints(e);
        net.add_edge(source, n + e, 1, 0);
        to_first_endpoint.push(net.add_edge(n + e, u, big, 0));
        net.add_edge(n + e, v, big, 0);
    }
    for v in 0..n {
        net.add_edge(v, sink, phi[v] as u64, 0);
    }
    let flow = net.max_flow(source, sink);
    if flow < m as u64 {
        let side = net.residual_side(source);
        let dense_set: Vec<usize> = side.into_iter().filter(|&x| x < n).collect();
        let induced_edges = g.induced_edge_count(&dense_set);
        let allowed = dense_set.iter().map(|&v| phi[v]).sum();
        return DegreePrescription::Infeasible {
            dense_set,
            induced_edges,
            allowed,
        };
    }
    // an edge's unit went to its tail, so the head is the other endpoint
    let mut heads = vec![usize::MAX; m];
    for e in 0..m {
        let (u, v) = g.endpoints(e);
        let went_to_u = net.residual_cap(to_first_endpoint[e]) < big;
        heads[e] = if went_to_u { v } else { u };
    }
    DegreePrescription::Oriented(Orientation::new(g, heads).expect("flow picks an endpoint"))
}

/// Configuration for the well-balanced orientation search. The pairing
/// enumeration is exponential in the number of odd-degree vertices of a
/// component, so larger inputs are rejected up front.
#[derive(Debug, Clone, Copy)]
pub struct WbConfig {
    pub max_odd_vertices: usize,
}

impl Default for WbConfig {
    fn default() -> Self {
        WbConfig {
            max_odd_vertices: 16,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WbError {
    TooManyOddVertices { count: usize, cap: usize },
    /// No pairing certified; existence of a feasible pairing is guaranteed,
    /// so this indicates a defect rather than a property of the input.
    SearchExhausted,
}

impl fmt::Display for WbError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WbError::TooManyOddVertices { count, cap } => write!(
                f,
                "component has {count} odd-degree vertices, exceeding the search cap {cap}"
            ),
            WbError::SearchExhausted => write!(f, "no odd-vertex pairing certified"),
        }
    }
}

impl std::error::Error for WbError {}

/// Computes a well-balanced orientation with the default configuration.
pub fn well_balanced_orientation(g: &Multigraph) -> Result<Orientation, WbError> {
    well_balanced_orientation_with(g, &WbConfig::default())
}

/// Nash-Williams pairing search: for each component, enumerate perfect
/// pairings of the odd-degree vertices in lexicographic order, Euler-orient
/// the component plus the pairing edges, drop the pairing arcs and keep the
/// first orientation the verifier certifies.
pub fn well_balanced_orientation_with(
    g: &Multigraph,
    cfg: &WbConfig,
) -> Result<Orientation, WbError> {
    let mut heads = vec![usize::MAX; g.edge_count()];
    for comp in g.connected_components() {
        let (sub, edge_ids) = g.induced(&comp);
        let sub_orientation = wb_component(&sub, cfg)?;
        for (local, &orig) in edge_ids.iter().enumerate() {
            heads[orig] = comp[sub_orientation.head(local)];
        }
    }
    let o = Orientation::new(g, heads).expect("every component was oriented");
    debug_assert!(is_well_balanced(g, &o).is_balanced());
    Ok(o)
}

fn wb_component(sub: &Multigraph, cfg: &WbConfig) -> Result<Orientation, WbError> {
    let odd: Vec<usize> = (0..sub.vertex_count())
        .filter(|&v| sub.degree(v) % 2 == 1)
        .collect();
    if odd.len() > cfg.max_odd_vertices {
        return Err(WbError::TooManyOddVertices {
            count: odd.len(),
            cap: cfg.max_odd_vertices,
        });
    }
    let mut pairing = Vec::with_capacity(odd.len() / 2);
    match try_pairings(sub, &odd, &mut pairing) {
        Some(o) => Ok(o),
        None => Err(WbError::SearchExhausted),
    }
}

fn try_pairings(
    sub: &Multigraph,
    remaining: &[usize],
    pairing: &mut Vec<(usize, usize)>,
) -> Option<Orientation> {
    if remaining.is_empty() {
        return try_candidate(sub, pairing);
    }
    let first = remaining[0];
    for i in 1..remaining.len() {
        let partner = remaining[i];
        let rest: Vec<usize> = remaining[1..]
            .iter()
            .copied()
            .filter(|&x| x != partner)
            .collect();
        pairing.push((first, partner));
        if let Some(o) = try_pairings(sub, &rest, pairing) {
            return Some(o);
        }
        pairing.pop();
    }
    None
}

fn try_candidate(sub: &Multigraph, pairing: &[(usize, usize)]) -> Option<Orientation> {
    let m = sub.edge_count();
    let mut edges = sub.edges().to_vec();
    edges.extend_from_slice(pairing);
    let augmented =
        Multigraph::new(sub.vertex_count(), edges).expect("pairing joins distinct vertices");
    let euler = eulerian_orientation(&augmented).expect("pairing evens all degrees");
    let heads = euler.heads()[..m].to_vec();
    let candidate = Orientation::new(sub, heads).expect("restriction keeps endpoints");
    if is_well_balanced_fast(sub, &candidate).is_balanced() {
        Some(candidate)
    } else {
        None
    }
}
