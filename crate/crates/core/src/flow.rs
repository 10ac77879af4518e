//! Unit-capacity max-flow via blocking flows (Dinic). Parallel arcs between
//! the same ordered pair are merged into one residual edge whose capacity is
//! the multiplicity, and the min-cut side is read off the final residual as
//! the set of vertices reachable from the source.

use std::collections::BTreeMap;
use std::collections::VecDeque;

use crate::graph::{Digraph, Multigraph};

#[derive(Debug, Clone)]
struct ResidualEdge {
    to: usize,
    cap: u64,
}

/// A residual network; edges are stored in pairs, `e ^ 1` is the reverse of `e`.
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    adj: Vec<Vec<usize>>,
    edges: Vec<ResidualEdge>,
}

impl FlowNetwork {
    pub fn new(n: usize) -> Self {
        FlowNetwork {
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    /// Adds a residual edge pair and returns the id of the forward edge;
    /// the reverse edge is `id + 1`.
    pub fn add_edge(&mut self, from: usize, to: usize, cap: u64, rev_cap: u64) -> usize {
        let id = self.edges.len();
        self.edges.push(ResidualEdge { to, cap });
        self.edges.push(ResidualEdge { to: from, cap: rev_cap });
        self.adj[from].push(id);
        self.adj[to].push(id + 1);
        id
    }

    /// Remaining capacity of a residual edge; the flow pushed through edge
    /// `id` is its original capacity minus this.
    pub fn residual_cap(&self, id: usize) -> u64 {
        self.edges[id].cap
    }

    /// The network whose arcs are those of `d` with parallel arcs merged by
    /// multiplicity. Each unordered pair becomes one residual edge pair
    /// carrying both directions' multiplicities.
    pub fn from_digraph(d: &Digraph) -> Self {
        let mut mult: BTreeMap<(usize, usize), (u64, u64)> = BTreeMap::new();
        for &(t, h) in d.arcs() {
            let entry = mult.entry((t.min(h), t.max(h))).or_insert((0, 0));
            if t < h {
                entry.0 += 1;
            } else {
                entry.1 += 1;
            }
        }
        let mut net = FlowNetwork::new(d.vertex_count());
        for (&(a, b), &(ab, ba)) in &mult {
            net.add_edge(a, b, ab, ba);
        }
        net
    }

    /// The bidirected image of an undirected multigraph: each edge becomes
    /// capacity one in both directions, merged by multiplicity.
    pub fn from_multigraph(g: &Multigraph) -> Self {
        let mut mult: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        for &(u, v) in g.edges() {
            *mult.entry((u, v)).or_insert(0) += 1;
        }
        let mut net = FlowNetwork::new(g.vertex_count());
        for (&(u, v), &c) in &mult {
            net.add_edge(u, v, c, c);
        }
        net
    }

    /// Maximum flow from `s` to `t`; consumes residual capacities in place.
    pub fn max_flow(&mut self, s: usize, t: usize) -> u64 {
        assert_ne!(s, t);
        let n = self.node_count();
        let mut total = 0;
        let mut level = vec![-1i32; n];
        loop {
            if !self.bfs_levels(s, t, &mut level) {
                break;
            }
            let mut iter = vec![0usize; n];
            loop {
                let pushed = self.dfs_push(s, t, u64::MAX, &level, &mut iter);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
        total
    }

    fn bfs_levels(&self, s: usize, t: usize, level: &mut [i32]) -> bool {
        level.fill(-1);
        level[s] = 0;
        let mut queue = VecDeque::new();
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &e in &self.adj[v] {
                let edge = &self.edges[e];
                if edge.cap > 0 && level[edge.to] == -1 {
                    level[edge.to] = level[v] + 1;
                    queue.push_back(edge.to);
                }
            }
        }
        level[t] != -1
    }

    fn dfs_push(&mut self, v: usize, t: usize, limit: u64, level: &[i32], iter: &mut [usize]) -> u64 {
        if v == t {
            return limit;
        }
        while iter[v] < self.adj[v].len() {
            let e = self.adj[v][iter[v]];
            let (to, cap) = (self.edges[e].to, self.edges[e].cap);
            if cap > 0 && level[to] == level[v] + 1 {
                let pushed = self.dfs_push(to, t, limit.min(cap), level, iter);
                if pushed > 0 {
                    self.edges[e].cap -= pushed;
                    self.edges[e ^ 1].cap += pushed;
                    return pushed;
                }
            }
            iter[v] += 1;
        }
        0
    }

    /// Vertices reachable from `s` in the residual network, sorted. After a
    /// max flow this is the source side of the minimal min cut.
    pub fn residual_side(&self, s: usize) -> Vec<usize> {
        let mut seen = vec![false; self.node_count()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &e in &self.adj[v] {
                let edge = &self.edges[e];
                if edge.cap > 0 && !seen[edge.to] {
                    seen[edge.to] = true;
                    stack.push(edge.to);
                }
            }
        }
        (0..self.node_count()).filter(|&v| seen[v]).collect()
    }
}
