//! Local edge- and arc-connectivity, the tac and reachability aggregates,
//! 2-edge-connected decomposition and the well-balancedness verifier.
//!
//! Undirected local connectivity runs on the bidirected image of the graph;
//! directed local connectivity runs on the arc multiplicities directly. Both
//! certify their value with a cut side extracted from the flow residual.

use std::fmt;

use crate::flow::FlowNetwork;
use crate::graph::{Digraph, Multigraph, Orientation};

/// A certified local-connectivity value: `side` contains the source, excludes
/// the sink, and its cut degree (d for graphs, d⁺ for digraphs) equals `value`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutWitness {
    pub value: u64,
    pub side: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QueryError {
    SameVertex,
    VertexOutOfRange { vertex: usize },
}

impl fmt::Display for QueryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QueryError::SameVertex => write!(f, "endpoints of a connectivity query must differ"),
            QueryError::VertexOutOfRange { vertex } => {
                write!(f, "vertex {vertex} out of range")
            }
        }
    }
}

impl std::error::Error for QueryError {}

fn check_pair(n: usize, u: usize, v: usize) -> Result<(), QueryError> {
    for w in [u, v] {
        if w >= n {
            return Err(QueryError::VertexOutOfRange { vertex: w });
        }
    }
    if u == v {
        return Err(QueryError::SameVertex);
    }
    Ok(())
}

/// λ_G(u,v) with a minimum-cut witness.
pub fn local_edge_connectivity(
    g: &Multigraph,
    u: usize,
    v: usize,
) -> Result<CutWitness, QueryError> {
    check_pair(g.vertex_count(), u, v)?;
    let mut net = FlowNetwork::from_multigraph(g);
    let value = net.max_flow(u, v);
    let side = net.residual_side(u);
    Ok(CutWitness { value, side })
}

/// λ_D(u,v) with a minimum-cut witness.
pub fn local_arc_connectivity(d: &Digraph, u: usize, v: usize) -> Result<CutWitness, QueryError> {
    check_pair(d.vertex_count(), u, v)?;
    let mut net = FlowNetwork::from_digraph(d);
    let value = net.max_flow(u, v);
    let side = net.residual_side(u);
    Ok(CutWitness { value, side })
}

fn lambda_from_template(template: &FlowNetwork, u: usize, v: usize) -> u64 {
    let mut net = template.clone();
    net.max_flow(u, v)
}

/// tac(D): the sum of λ_D over all ordered vertex pairs, by n(n−1)
/// independent flow computations in lexicographic pair order.
pub fn tac(d: &Digraph) -> u64 {
    let n = d.vertex_count();
    if n < 2 {
        return 0;
    }
    let template = FlowNetwork::from_digraph(d);
    let mut total = 0;
    for u in 0..n {
        for v in 0..n {
            if u != v {
                total += lambda_from_template(&template, u, v);
            }
        }
    }
    total
}

/// Strongly connected components in topological order of the condensation
/// (source components first); members sorted ascending.
pub fn strongly_connected_components(d: &Digraph) -> Vec<Vec<usize>> {
    let (comps, _) = scc_with_assignment(d);
    comps
}

pub fn is_strongly_connected(d: &Digraph) -> bool {
    if d.vertex_count() <= 1 {
        return true;
    }
    strongly_connected_components(d).len() == 1
}

fn scc_with_assignment(d: &Digraph) -> (Vec<Vec<usize>>, Vec<usize>) {
    let n = d.vertex_count();
    let mut out_adj = vec![Vec::new(); n];
    let mut in_adj = vec![Vec::new(); n];
    for &(t, h) in d.arcs() {
        out_adj[t].push(h);
        in_adj[h].push(t);
    }
    // pass 1: vertices in order of finish time
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut stack = vec![(start, 0usize)];
        seen[start] = true;
        while let Some(&mut (v, ref mut idx)) = stack.last_mut() {
            if *idx < out_adj[v].len() {
                let w = out_adj[v][*idx];
                *idx += 1;
                if !seen[w] {
                    seen[w] = true;
                    stack.push((w, 0));
                }
            } else {
                order.push(v);
                stack.pop();
            }
        }
    }
    // pass 2: reverse graph in decreasing finish order
    let mut comp_of = vec![usize::MAX; n];
    let mut comps = Vec::new();
    for &start in order.iter().rev() {
        if comp_of[start] != usize::MAX {
            continue;
        }
        let c = comps.len();
        let mut members = Vec::new();
        let mut stack = vec![start];
        comp_of[start] = c;
        while let Some(v) = stack.pop() {
            members.push(v);
            for &w in &in_adj[v] {
                if comp_of[w] == usize::MAX {
                    comp_of[w] = c;
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        comps.push(members);
    }
    (comps, comp_of)
}

/// Number of ordered pairs `(u, v)` with `v` reachable from `u`, via strong
/// component condensation and bitset reachability rather than per-pair flows.
pub fn reach_count(d: &Digraph) -> u64 {
    let n = d.vertex_count();
    if n < 2 {
        return 0;
    }
    let (comps, comp_of) = scc_with_assignment(d);
    let k = comps.len();
    let mut dag_adj = vec![Vec::new(); k];
    for &(t, h) in d.arcs() {
        let (ct, ch) = (comp_of[t], comp_of[h]);
        if ct != ch {
            dag_adj[ct].push(ch);
        }
    }
    let words = k.div_ceil(64);
    let mut reach = vec![vec![0u64; words]; k];
    // components are emitted in topological order, so successors have larger
    // indices and are finished first when scanning backwards
    for c in (0..k).rev() {
        reach[c][c / 64] |= 1 << (c % 64);
        let succs = std::mem::take(&mut dag_adj[c]);
        for &s in &succs {
            for w in 0..words {
                let bits = reach[s][w];
                reach[c][w] |= bits;
            }
        }
    }
    let mut total = 0u64;
    for c in 0..k {
        let mut reachable_weight = 0u64;
        for w in 0..words {
            let mut bits = reach[c][w];
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                reachable_weight += comps[w * 64 + b].len() as u64;
                bits &= bits - 1;
            }
        }
        total += comps[c].len() as u64 * (reachable_weight - 1);
    }
    total
}

/// The unique partition into 2-edge-connected classes plus the bridge set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoEdgeDecomposition {
    /// Classes sorted by smallest member, each sorted ascending.
    pub classes: Vec<Vec<usize>>,
    /// Edge ids of all bridges, ascending.
    pub bridges: Vec<usize>,
}

/// Computes the 2-edge-connected classes and bridges by a lowpoint search.
/// Local connectivity is at most one across classes, at least two inside.
pub fn two_edge_connected_components(g: &Multigraph) -> TwoEdgeDecomposition {
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_bridge = vec![false; m];
    let mut timer = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        // frames: (vertex, edge used to enter, next incidence index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, parent_edge, ref mut idx)) = stack.last_mut() {
            if *idx < g.incident_edges(v).len() {
                let e = g.incident_edges(v)[*idx];
                *idx += 1;
                if e == parent_edge {
                    continue;
                }
                let w = g.other_endpoint(e, v);
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, e, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&mut (p, _, _)) = stack.last_mut() {
                    low[p] = low[p].min(low[v]);
                    if low[v] > disc[p] {
                        is_bridge[parent_edge] = true;
                    }
                }
            }
        }
    }
    // classes: connected components after deleting the bridges
    let mut class_of = vec![usize::MAX; n];
    let mut classes = Vec::new();
    for start in 0..n {
        if class_of[start] != usize::MAX {
            continue;
        }
        let c = classes.len();
        class_of[start] = c;
        let mut members = vec![start];
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &e in g.incident_edges(v) {
                if is_bridge[e] {
                    continue;
                }
                let w = g.other_endpoint(e, v);
                if class_of[w] == usize::MAX {
                    class_of[w] = c;
                    members.push(w);
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    let bridges = (0..m).filter(|&e| is_bridge[e]).collect();
    TwoEdgeDecomposition { classes, bridges }
}

/// A pair breaking the well-balancedness inequality, with both directed
/// values for the report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WbViolation {
    pub u: usize,
    pub v: usize,
    pub lambda_undirected: u64,
    pub forward: u64,
    pub backward: u64,
}

impl fmt::Display for WbViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "pair ({}, {}): lambda={} forward={} backward={}",
            self.u, self.v, self.lambda_undirected, self.forward, self.backward
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BalanceCheck {
    Balanced,
    Violated(WbViolation),
}

impl BalanceCheck {
    pub fn is_balanced(&self) -> bool {
        matches!(self, BalanceCheck::Balanced)
    }
}

/// Checks min{λ⃗(u,v), λ⃗(v,u)} ≥ ⌊λ_G(u,v)/2⌋ over all unordered pairs.
/// On failure reports the lexicographically first violating pair.
pub fn is_well_balanced(g: &Multigraph, o: &Orientation) -> BalanceCheck {
    let d = o.to_digraph(g);
    let undirected = FlowNetwork::from_multigraph(g);
    let directed = FlowNetwork::from_digraph(&d);
    for u in 0..g.vertex_count() {
        for v in (u + 1)..g.vertex_count() {
            if let Some(violation) = check_pair_balance(&undirected, &directed, u, v) {
                return BalanceCheck::Violated(violation);
            }
        }
    }
    BalanceCheck::Balanced
}

fn check_pair_balance(
    undirected: &FlowNetwork,
    directed: &FlowNetwork,
    u: usize,
    v: usize,
) -> Option<WbViolation> {
    let lambda_g = lambda_from_template(undirected, u, v);
    let forward = lambda_from_template(directed, u, v);
    let backward = lambda_from_template(directed, v, u);
    if forward.min(backward) < lambda_g / 2 {
        Some(WbViolation {
            u,
            v,
            lambda_undirected: lambda_g,
            forward,
            backward,
        })
    } else {
        None
    }
}

/// A vertex whose degree strictly dominates every other and whose local
/// connectivity to every vertex equals that vertex's degree. When present,
/// checking the pairs through it suffices for well-balancedness.
pub fn apex_vertex(g: &Multigraph) -> Option<usize> {
    let n = g.vertex_count();
    if n < 2 {
        return None;
    }
    let apex = (0..n).max_by_key(|&v| g.degree(v)).unwrap();
    if (0..n).any(|v| v != apex && g.degree(v) >= g.degree(apex)) {
        return None;
    }
    let net = FlowNetwork::from_multigraph(g);
    for v in 0..n {
        if v != apex && lambda_from_template(&net, apex, v) != g.degree(v) as u64 {
            return None;
        }
    }
    Some(apex)
}

/// Like [`is_well_balanced`], but when an apex vertex is detected only the
/// pairs through it are checked. The answer always matches the full verifier.
pub fn is_well_balanced_fast(g: &Multigraph, o: &Orientation) -> BalanceCheck {
    let apex = match apex_vertex(g) {
        Some(a) => a,
        None => return is_well_balanced(g, o),
    };
    let d = o.to_digraph(g);
    let undirected = FlowNetwork::from_multigraph(g);
    let directed = FlowNetwork::from_digraph(&d);
    for v in 0..g.vertex_count() {
        if v == apex {
            continue;
        }
        let (u, w) = (apex.min(v), apex.max(v));
        if let Some(violation) = check_pair_balance(&undirected, &directed, u, w) {
            return BalanceCheck::Violated(violation);
        }
    }
    BalanceCheck::Balanced
}
