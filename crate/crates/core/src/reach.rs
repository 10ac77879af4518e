//! Orientations maximizing the number of ordered reachable pairs: strong
//! orientation of 2-edge-connected classes (Robbins) plus a dynamic program
//! over the bridge forest that weighs each class by its size.

use std::fmt;

use crate::connectivity::{is_strongly_connected, reach_count, two_edge_connected_components};
use crate::graph::{condense, Multigraph, Orientation, WeightedForest};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RobbinsError {
    Disconnected,
    Bridge { edge: usize },
}

impl fmt::Display for RobbinsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RobbinsError::Disconnected => write!(f, "graph is not connected"),
            RobbinsError::Bridge { edge } => write!(f, "edge {edge} is a bridge"),
        }
    }
}

impl std::error::Error for RobbinsError {}

/// Strongly connected orientation of a 2-edge-connected graph: tree arcs
/// point away from the root, every other edge points back toward the
/// ancestor.
pub fn robbins_orientation(g: &Multigraph) -> Result<Orientation, RobbinsError> {
    if !g.is_connected() {
        return Err(RobbinsError::Disconnected);
    }
    let dec = two_edge_connected_components(g);
    if let Some(&edge) = dec.bridges.first() {
        return Err(RobbinsError::Bridge { edge });
    }
    let n = g.vertex_count();
    let m = g.edge_count();
    let mut disc = vec![usize::MAX; n];
    let mut is_tree = vec![false; m];
    let mut heads = vec![usize::MAX; m];
    if n > 0 {
        let mut timer = 0;
        disc[0] = 0;
        let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
        while let Some(&mut (v, ref mut idx)) = stack.last_mut() {
            if *idx < g.incident_edges(v).len() {
                let e = g.incident_edges(v)[*idx];
                *idx += 1;
                let w = g.other_endpoint(e, v);
                if disc[w] == usize::MAX {
                    timer += 1;
                    disc[w] = timer;
                    is_tree[e] = true;
                    heads[e] = w;
                    stack.push((w, 0));
                }
            } else {
                stack.pop();
            }
        }
    }
    for e in 0..m {
        if !is_tree[e] {
            let (u, v) = g.endpoints(e);
            heads[e] = if disc[u] < disc[v] { u } else { v };
        }
    }
    let o = Orientation::new(g, heads).expect("every edge oriented");
    assert!(
        is_strongly_connected(&o.to_digraph(g)),
        "orientation of a 2-edge-connected graph must be strong"
    );
    Ok(o)
}

/// Result of the forest DP: a head node per forest edge and the maximum of
/// Σ w(x)·w(y) over ordered node pairs (x, y) joined by a directed path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForestOrientation {
    pub edge_heads: Vec<usize>,
    pub value: u64,
}

#[derive(Clone, Copy, Debug)]
struct DpState {
    /// weight of subtree vertices that can reach the root, root included
    to_root: u64,
    /// weight of subtree vertices reachable from the root, root included
    from_root: u64,
    value: u64,
    from: Prov,
}

#[derive(Clone, Copy, Debug)]
enum Prov {
    Leaf,
    Step {
        prev: usize,
        child_state: usize,
        down: bool,
    },
}

struct NodeDp {
    children: Vec<(usize, usize)>,
    /// steps[k] is the Pareto table after merging the first k children
    steps: Vec<Vec<DpState>>,
}

/// Optimal orientation of a weighted forest for weighted ordered reachable
/// pairs. Children are merged in ascending node order; state tables keep one
/// entry per Pareto-maximal (to_root, from_root) pair.
pub fn tree_reach_dp(f: &WeightedForest) -> ForestOrientation {
    let k = f.node_count();
    let mut adj = vec![Vec::new(); k];
    for (idx, fe) in f.edges().iter().enumerate() {
        let (a, b) = fe.nodes;
        adj[a].push((b, idx));
        adj[b].push((a, idx));
    }
    for nbrs in adj.iter_mut() {
        nbrs.sort_unstable();
    }
    let mut tables: Vec<Option<NodeDp>> = (0..k).map(|_| None).collect();
    let mut edge_heads = vec![usize::MAX; f.edges().len()];
    let mut value = 0;
    let mut seen = vec![false; k];
    for root in 0..k {
        if seen[root] {
            continue;
        }
        mark_tree(root, &adj, &mut seen);
        build_tables(root, usize::MAX, f, &adj, &mut tables);
        let root_table = tables[root].as_ref().unwrap().steps.last().unwrap();
        let best = root_table
            .iter()
            .enumerate()
            .min_by_key(|(_, s)| (std::cmp::Reverse(s.value), s.to_root, s.from_root))
            .map(|(i, _)| i)
            .expect("table never empty");
        value += root_table[best].value;
        reconstruct(root, usize::MAX, best, &tables, &mut edge_heads);
    }
    ForestOrientation { edge_heads, value }
}

fn mark_tree(root: usize, adj: &[Vec<(usize, usize)>], seen: &mut [bool]) {
    let mut stack = vec![root];
    seen[root] = true;
    while let Some(v) = stack.pop() {
        for &(w, _) in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
}

fn build_tables(
    node: usize,
    parent: usize,
    f: &WeightedForest,
    adj: &[Vec<(usize, usize)>],
    tables: &mut Vec<Option<NodeDp>>,
) {
    let children: Vec<(usize, usize)> = adj[node]
        .iter()
        .copied()
        .filter(|&(w, _)| w != parent)
        .collect();
    for &(child, _) in &children {
        build_tables(child, node, f, adj, tables);
    }
    let w = f.weight(node) as u64;
    let mut steps = vec![vec![DpState {
        to_root: w,
        from_root: w,
        value: 0,
        from: Prov::Leaf,
    }]];
    for (ci, &(child, _)) in children.iter().enumerate() {
        let child_table = tables[child].as_ref().unwrap().steps.last().unwrap();
        let prev_table = &steps[ci];
        let mut candidates = Vec::new();
        for (pi, p) in prev_table.iter().enumerate() {
            for (si, s) in child_table.iter().enumerate() {
                // edge oriented node -> child: everything reaching the node
                // now reaches what the child root reaches
                candidates.push(DpState {
                    to_root: p.to_root,
                    from_root: p.from_root + s.from_root,
                    value: p.value + s.value + p.to_root * s.from_root,
                    from: Prov::Step {
                        prev: pi,
                        child_state: si,
                        down: true,
                    },
                });
                // edge oriented child -> node
                candidates.push(DpState {
                    to_root: p.to_root + s.to_root,
                    from_root: p.from_root,
                    value: p.value + s.value + s.to_root * p.from_root,
                    from: Prov::Step {
                        prev: pi,
                        child_state: si,
                        down: false,
                    },
                });
            }
        }
        steps.push(pareto_filter(candidates));
    }
    tables[node] = Some(NodeDp { children, steps });
}

/// Keeps, per (to_root, from_root), the best value, then drops states
/// dominated in all three coordinates. Output sorted by (to_root, from_root).
fn pareto_filter(mut candidates: Vec<DpState>) -> Vec<DpState> {
    candidates.sort_by_key(|s| (s.to_root, s.from_root, std::cmp::Reverse(s.value)));
    candidates.dedup_by_key(|s| (s.to_root, s.from_root));
    let mut kept: Vec<DpState> = Vec::with_capacity(candidates.len());
    for s in candidates {
        let dominated = kept
            .iter()
            .any(|t| t.to_root >= s.to_root && t.from_root >= s.from_root && t.value >= s.value);
        if dominated {
            continue;
        }
        kept.retain(|t| {
            !(s.to_root >= t.to_root && s.from_root >= t.from_root && s.value >= t.value)
        });
        kept.push(s);
    }
    kept.sort_by_key(|s| (s.to_root, s.from_root));
    kept
}

fn reconstruct(
    node: usize,
    step: usize,
    state_idx: usize,
    tables: &[Option<NodeDp>],
    edge_heads: &mut [usize],
) {
    let dp = tables[node].as_ref().unwrap();
    let step = if step == usize::MAX {
        dp.steps.len() - 1
    } else {
        step
    };
    let state = dp.steps[step][state_idx];
    match state.from {
        Prov::Leaf => {}
        Prov::Step {
            prev,
            child_state,
            down,
        } => {
            let (child, edge_idx) = dp.children[step - 1];
            edge_heads[edge_idx] = if down { child } else { node };
            reconstruct(node, step - 1, prev, tables, edge_heads);
            reconstruct(child, usize::MAX, child_state, tables, edge_heads);
        }
    }
}

/// An orientation of `g` maximizing the number of ordered reachable pairs:
/// each 2-edge-connected class is strongly oriented, bridges follow the
/// weighted forest DP, and within-class pairs contribute w(w−1) on top of
/// the DP value.
pub fn max_reach_orientation(g: &Multigraph) -> Orientation {
    let dec = two_edge_connected_components(g);
    let forest = condense(g, &dec.classes).expect("bridge quotient is a forest");
    let dp = tree_reach_dp(&forest);
    let mut heads = vec![usize::MAX; g.edge_count()];
    for class in &dec.classes {
        let (sub, edge_ids) = g.induced(class);
        let strong = robbins_orientation(&sub).expect("classes are 2-edge-connected");
        for (local, &orig) in edge_ids.iter().enumerate() {
            heads[orig] = class[strong.head(local)];
        }
    }
    for (idx, fe) in forest.edges().iter().enumerate() {
        let (u, v) = g.endpoints(fe.edge_id);
        let head_node = dp.edge_heads[idx];
        heads[fe.edge_id] = if forest.class_of()[v] == head_node {
            v
        } else {
            u
        };
    }
    let o = Orientation::new(g, heads).expect("classes and bridges cover every edge");
    debug_assert_eq!(
        reach_count(&o.to_digraph(g)),
        dp.value
            + forest
                .node_weights()
                .iter()
                .map(|&w| (w * (w.saturating_sub(1))) as u64)
                .sum::<u64>()
    );
    o
}
