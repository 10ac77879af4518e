//! Multigraph and digraph data model: parsing, serialization, orientations,
//! cut-degree queries and condensation into a weighted forest.
//!
//! Edge identity is positional: edge `i` is the `i`-th line of the input file
//! and keeps that id through every transformation. Parallel edges are distinct
//! objects that only differ in their id.

use std::fmt;

/// Errors raised while reading one of the text formats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    /// A line could not be split into the expected integer fields.
    Malformed { line: usize },
    /// An edge joins a vertex to itself.
    Loop { line: usize },
    /// A vertex index is outside `0..n`.
    VertexOutOfRange { line: usize },
    /// The header announced a different number of edges or arcs.
    EdgeCountMismatch { expected: usize, found: usize },
    /// An orientation line is not a permutation of the edge's endpoints.
    NotAnEndpointPair { line: usize },
    /// The file is empty or the header line is missing.
    MissingHeader,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Malformed { line } => write!(f, "malformed line {line}"),
            ParseError::Loop { line } => write!(f, "loop at line {line}"),
            ParseError::VertexOutOfRange { line } => {
                write!(f, "vertex index out of range at line {line}")
            }
            ParseError::EdgeCountMismatch { expected, found } => {
                write!(f, "expected {expected} edge lines, found {found}")
            }
            ParseError::NotAnEndpointPair { line } => {
                write!(f, "line {line} is not a permutation of the edge's endpoints")
            }
            ParseError::MissingHeader => write!(f, "missing header line"),
        }
    }
}

impl std::error::Error for ParseError {}

/// Errors raised when constructing graphs or orientations from raw parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    Loop { edge: usize },
    VertexOutOfRange { edge: usize },
    /// The head chosen for an edge is not one of its endpoints.
    HeadNotEndpoint { edge: usize, head: usize },
    /// A head sequence has the wrong length for its base graph.
    HeadCountMismatch { expected: usize, found: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::Loop { edge } => write!(f, "edge {edge} is a loop"),
            GraphError::VertexOutOfRange { edge } => {
                write!(f, "edge {edge} has a vertex index out of range")
            }
            GraphError::HeadNotEndpoint { edge, head } => {
                write!(f, "head {head} is not an endpoint of edge {edge}")
            }
            GraphError::HeadCountMismatch { expected, found } => {
                write!(f, "expected {expected} heads, found {found}")
            }
        }
    }
}

impl std::error::Error for GraphError {}

/// An undirected multigraph on vertices `0..n`. Edge `i` is the unordered
/// pair stored at index `i`; parallel edges are distinct by index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    incidence: Vec<Vec<usize>>,
}

impl Multigraph {
    /// Builds a multigraph, normalizing each endpoint pair to `(min, max)`.
    /// Rejects loops and out-of-range endpoints.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        let mut normalized = Vec::with_capacity(edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= vertex_count || v >= vertex_count {
                return Err(GraphError::VertexOutOfRange { edge: i });
            }
            if u == v {
                return Err(GraphError::Loop { edge: i });
            }
            normalized.push((u.min(v), u.max(v)));
        }
        let mut incidence = vec![Vec::new(); vertex_count];
        for (i, &(u, v)) in normalized.iter().enumerate() {
            incidence[u].push(i);
            incidence[v].push(i);
        }
        Ok(Multigraph {
            vertex_count,
            edges: normalized,
            incidence,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of edge `e` as the normalized pair `(min, max)`.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Ids of the edges incident to `v`, in ascending edge-id order.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    /// Given one endpoint of edge `e`, returns the other.
    pub fn other_endpoint(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if v == a {
            b
        } else {
            debug_assert_eq!(v, b);
            a
        }
    }

    /// d_G(S): number of edges with exactly one endpoint in `side`.
    /// `side` must be a strictly increasing list of valid vertices.
    pub fn cut_degree(&self, side: &[usize]) -> usize {
        let mask = side_mask(self.vertex_count, side);
        self.edges
            .iter()
            .filter(|&&(u, v)| mask[u] != mask[v])
            .count()
    }

    /// i_G(S): number of edges with both endpoints in `side`.
    pub fn induced_edge_count(&self, side: &[usize]) -> usize {
        let mask = side_mask(self.vertex_count, side);
        self.edges
            .iter()
            .filter(|&&(u, v)| mask[u] && mask[v])
            .count()
    }

    /// Subgraph induced on `verts` (strictly increasing). Returns the subgraph,
    /// whose vertex `i` corresponds to `verts[i]`, plus the original ids of its
    /// edges in sub-edge order.
    pub fn induced(&self, verts: &[usize]) -> (Multigraph, Vec<usize>) {
        let mask = side_mask(self.vertex_count, verts);
        let mut local = vec![usize::MAX; self.vertex_count];
        for (i, &v) in verts.iter().enumerate() {
            local[v] = i;
        }
        let mut sub_edges = Vec::new();
        let mut edge_ids = Vec::new();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if mask[u] && mask[v] {
                sub_edges.push((local[u], local[v]));
                edge_ids.push(i);
            }
        }
        let sub = Multigraph::new(verts.len(), sub_edges).expect("induced edges are valid");
        (sub, edge_ids)
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count <= 1 {
            return true;
        }
        let comp = self.connected_components();
        comp.len() == 1
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertex_count];
        let mut comps = Vec::new();
        for start in 0..self.vertex_count {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &e in &self.incidence[v] {
                    let w = self.other_endpoint(e, v);
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Canonical text form: header `n m`, then one `u v` line per edge in
    /// stored edge-id order with the smaller endpoint first.
    pub fn to_canonical_string(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// DOT rendering of the undirected graph.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.vertex_count {
            out.push_str(&format!("  {v};\n"));
        }
        for &(u, v) in &self.edges {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// A directed multigraph on vertices `0..n`; arc `i` is `(tail, head)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    vertex_count: usize,
    arcs: Vec<(usize, usize)>,
}

impl Digraph {
    pub fn new(vertex_count: usize, arcs: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        for (i, &(t, h)) in arcs.iter().enumerate() {
            if t >= vertex_count || h >= vertex_count {
                return Err(GraphError::VertexOutOfRange { edge: i });
            }
            if t == h {
                return Err(GraphError::Loop { edge: i });
            }
        }
        Ok(Digraph { vertex_count, arcs })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|&&(t, _)| t == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|&&(_, h)| h == v).count()
    }

    /// `(d⁺(S), d⁻(S))`: arcs leaving and entering `side`.
    /// `side` must be a strictly increasing list of valid vertices.
    pub fn cut_degrees(&self, side: &[usize]) -> (usize, usize) {
        let mask = side_mask(self.vertex_count, side);
        let mut out = 0;
        let mut inc = 0;
        for &(t, h) in &self.arcs {
            if mask[t] && !mask[h] {
                out += 1;
            } else if !mask[t] && mask[h] {
                inc += 1;
            }
        }
        (out, inc)
    }

    /// The digraph with every arc reversed.
    pub fn reverse(&self) -> Digraph {
        Digraph {
            vertex_count: self.vertex_count,
            arcs: self.arcs.iter().map(|&(t, h)| (h, t)).collect(),
        }
    }

    pub fn to_canonical_string(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count, self.arcs.len());
        for &(t, h) in &self.arcs {
            out.push_str(&format!("{t} {h}\n"));
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph G {\n");
        for v in 0..self.vertex_count {
            out.push_str(&format!("  {v};\n"));
        }
        for &(t, h) in &self.arcs {
            out.push_str(&format!("  {t} -> {h};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// An orientation of a multigraph: entry `i` names the chosen head of edge `i`.
/// The base graph is passed alongside wherever endpoints are needed, so the
/// record stays a plain value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    heads: Vec<usize>,
}

impl Orientation {
    pub fn new(base: &Multigraph, heads: Vec<usize>) -> Result<Self, GraphError> {
        if heads.len() != base.edge_count() {
            return Err(GraphError::HeadCountMismatch {
                expected: base.edge_count(),
                found: heads.len(),
            });
        }
        for (i, &h) in heads.iter().enumerate() {
            let (u, v) = base.endpoints(i);
            if h != u && h != v {
                return Err(GraphError::HeadNotEndpoint { edge: i, head: h });
            }
        }
        Ok(Orientation { heads })
    }

    pub fn heads(&self) -> &[usize] {
        &self.heads
    }

    pub fn head(&self, e: usize) -> usize {
        self.heads[e]
    }

    pub fn tail(&self, base: &Multigraph, e: usize) -> usize {
        base.other_endpoint(e, self.heads[e])
    }

    /// The induced digraph: one arc per edge, same endpoints.
    pub fn to_digraph(&self, base: &Multigraph) -> Digraph {
        let arcs = self
            .heads
            .iter()
            .enumerate()
            .map(|(e, &h)| (base.other_endpoint(e, h), h))
            .collect();
        Digraph {
            vertex_count: base.vertex_count(),
            arcs,
        }
    }

    /// Orientation file form: line `i` is `tail head` for edge `i`.
    pub fn to_file_string(&self, base: &Multigraph) -> String {
        let mut out = String::new();
        for (e, &h) in self.heads.iter().enumerate() {
            out.push_str(&format!("{} {}\n", base.other_endpoint(e, h), h));
        }
        out
    }
}

/// Orients `base` by the given head choices and returns the induced digraph.
pub fn orient(base: &Multigraph, heads: &[usize]) -> Result<Digraph, GraphError> {
    Ok(Orientation::new(base, heads.to_vec())?.to_digraph(base))
}

/// Condensation of a multigraph by a vertex partition: one node per class
/// weighted by class size, one forest edge per inter-class edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedForest {
    node_weights: Vec<usize>,
    forest_edges: Vec<ForestEdge>,
    class_of: Vec<usize>,
}

/// A bridge of the base graph, kept with its original edge id.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ForestEdge {
    pub nodes: (usize, usize),
    pub edge_id: usize,
}

/// Errors raised by [`condense`] and [`WeightedForest::from_parts`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CondenseError {
    NotAPartition,
    EmptyClass { class: usize },
    /// Inter-class edges close a cycle in the quotient, so the partition is
    /// not the 2-edge-connected one.
    NotAForest { edge_id: usize },
}

impl fmt::Display for CondenseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CondenseError::NotAPartition => write!(f, "classes do not partition the vertices"),
            CondenseError::EmptyClass { class } => write!(f, "class {class} is empty"),
            CondenseError::NotAForest { edge_id } => {
                write!(f, "inter-class edge {edge_id} closes a cycle in the quotient")
            }
        }
    }
}

impl std::error::Error for CondenseError {}

impl WeightedForest {
    /// Builds a forest from explicit parts, for callers that do not start from
    /// a condensation. Vertices of the implied base graph are assigned to
    /// nodes contiguously so that the weight invariant holds.
    pub fn from_parts(
        node_weights: Vec<usize>,
        forest_edges: Vec<ForestEdge>,
    ) -> Result<Self, CondenseError> {
        for (i, &w) in node_weights.iter().enumerate() {
            if w == 0 {
                return Err(CondenseError::EmptyClass { class: i });
            }
        }
        let mut uf = UnionFind::new(node_weights.len());
        for fe in &forest_edges {
            if !uf.union(fe.nodes.0, fe.nodes.1) {
                return Err(CondenseError::NotAForest { edge_id: fe.edge_id });
            }
        }
        let mut class_of = Vec::new();
        for (node, &w) in node_weights.iter().enumerate() {
            class_of.extend(std::iter::repeat(node).take(w));
        }
        Ok(WeightedForest {
            node_weights,
            forest_edges,
            class_of,
        })
    }

    pub fn node_count(&self) -> usize {
        self.node_weights.len()
    }

    pub fn node_weights(&self) -> &[usize] {
        &self.node_weights
    }

    pub fn weight(&self, node: usize) -> usize {
        self.node_weights[node]
    }

    pub fn edges(&self) -> &[ForestEdge] {
        &self.forest_edges
    }

    pub fn class_of(&self) -> &[usize] {
        &self.class_of
    }
}

/// Condenses `g` by `classes`. Each class becomes a node weighted by its size;
/// every inter-class edge becomes a forest edge carrying its original id.
pub fn condense(g: &Multigraph, classes: &[Vec<usize>]) -> Result<WeightedForest, CondenseError> {
    let n = g.vertex_count();
    let mut class_of = vec![usize::MAX; n];
    let mut node_weights = Vec::with_capacity(classes.len());
    for (c, class) in classes.iter().enumerate() {
        if class.is_empty() {
            return Err(CondenseError::EmptyClass { class: c });
        }
        for &v in class {
            if v >= n || class_of[v] != usize::MAX {
                return Err(CondenseError::NotAPartition);
            }
            class_of[v] = c;
        }
        node_weights.push(class.len());
    }
    if class_of.iter().any(|&c| c == usize::MAX) {
        return Err(CondenseError::NotAPartition);
    }
    let mut uf = UnionFind::new(classes.len());
    let mut forest_edges = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let (cu, cv) = (class_of[u], class_of[v]);
        if cu == cv {
            continue;
        }
        if !uf.union(cu, cv) {
            return Err(CondenseError::NotAForest { edge_id: e });
        }
        forest_edges.push(ForestEdge {
            nodes: (cu, cv),
            edge_id: e,
        });
    }
    Ok(WeightedForest {
        node_weights,
        forest_edges,
        class_of,
    })
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let r = self.find(self.parent[x]);
            self.parent[x] = r;
        }
        self.parent[x]
    }

    /// Returns false if `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

fn side_mask(n: usize, side: &[usize]) -> Vec<bool> {
    let mut mask = vec![false; n];
    for w in side.windows(2) {
        assert!(w[0] < w[1], "cut side must be strictly increasing");
    }
    for &v in side {
        assert!(v < n, "cut side vertex {v} out of range");
        mask[v] = true;
    }
    mask
}

fn parse_usize(field: &str, line: usize) -> Result<usize, ParseError> {
    field
        .parse::<usize>()
        .map_err(|_| ParseError::Malformed { line })
}

fn parse_pair(text_line: &str, line: usize) -> Result<(usize, usize), ParseError> {
    let mut it = text_line.split_whitespace();
    let a = parse_usize(it.next().ok_or(ParseError::Malformed { line })?, line)?;
    let b = parse_usize(it.next().ok_or(ParseError::Malformed { line })?, line)?;
    if it.next().is_some() {
        return Err(ParseError::Malformed { line });
    }
    Ok((a, b))
}

/// Parses the graph file format: header `n m`, then `m` lines `u v`.
/// Repeated lines create parallel edges; edge id equals line order.
pub fn parse_graph(text: &str) -> Result<Multigraph, ParseError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let (n, m) = parse_pair(header, 1)?;
    let mut edges = Vec::with_capacity(m);
    for (idx, raw) in lines {
        let line = idx + 1;
        if edges.len() == m {
            return Err(ParseError::EdgeCountMismatch {
                expected: m,
                found: m + 1,
            });
        }
        let (u, v) = parse_pair(raw, line)?;
        if u >= n || v >= n {
            return Err(ParseError::VertexOutOfRange { line });
        }
        if u == v {
            return Err(ParseError::Loop { line });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCountMismatch {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(Multigraph::new(n, edges).expect("validated during parse"))
}

/// Parses the digraph file format: header `n m`, then `m` lines `tail head`.
pub fn parse_digraph(text: &str) -> Result<Digraph, ParseError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let (n, m) = parse_pair(header, 1)?;
    let mut arcs = Vec::with_capacity(m);
    for (idx, raw) in lines {
        let line = idx + 1;
        if arcs.len() == m {
            return Err(ParseError::EdgeCountMismatch {
                expected: m,
                found: m + 1,
            });
        }
        let (t, h) = parse_pair(raw, line)?;
        if t >= n || h >= n {
            return Err(ParseError::VertexOutOfRange { line });
        }
        if t == h {
            return Err(ParseError::Loop { line });
        }
        arcs.push((t, h));
    }
    if arcs.len() != m {
        return Err(ParseError::EdgeCountMismatch {
            expected: m,
            found: arcs.len(),
        });
    }
    Ok(Digraph::new(n, arcs).expect("validated during parse"))
}

/// Parses an orientation file against its base graph: line `i` must be a
/// permutation of edge `i`'s endpoints.
pub fn parse_orientation(text: &str, base: &Multigraph) -> Result<Orientation, ParseError> {
    let mut heads = Vec::with_capacity(base.edge_count());
    for (idx, raw) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let line = idx + 1;
        if heads.len() == base.edge_count() {
            return Err(ParseError::EdgeCountMismatch {
                expected: base.edge_count(),
                found: base.edge_count() + 1,
            });
        }
        let (t, h) = parse_pair(raw, line)?;
        let (a, b) = base.endpoints(heads.len());
        if (t, h) != (a, b) && (t, h) != (b, a) {
            return Err(ParseError::NotAnEndpointPair { line });
        }
        heads.push(h);
    }
    if heads.len() != base.edge_count() {
        return Err(ParseError::EdgeCountMismatch {
            expected: base.edge_count(),
            found: heads.len(),
        });
    }
    Ok(Orientation::new(base, heads).expect("validated during parse"))
}
