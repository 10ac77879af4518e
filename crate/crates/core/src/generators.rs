//! Instance generators: grid gadgets with terminal sets, tubes and tube
//! attachment, tripled paths with their extremal orientations, the labeled
//! reduction instances with their validators, and seeded random multigraphs.

use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::connectivity::local_edge_connectivity;
use crate::graph::{Multigraph, Orientation, ParseError};

/// A failed validation condition, reported by its letter in the instance
/// definition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelViolation {
    pub condition: char,
    pub detail: String,
}

impl fmt::Display for LabelViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "condition ({}): {}", self.condition, self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenError {
    ParityMismatch { alpha: usize, beta: usize },
    BelowMinimum { name: &'static str, value: usize, minimum: usize },
    InvalidVertex { vertex: usize },
    Label(LabelViolation),
    InstanceTooLarge { vertices: u128 },
    /// A gadget out-degree mapping must use values 1 and 2 equally often.
    UnbalancedMapping,
}

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenError::ParityMismatch { alpha, beta } => {
                write!(f, "parity mismatch: {alpha} and {beta} differ mod 2")
            }
            GenError::BelowMinimum { name, value, minimum } => {
                write!(f, "{name} = {value} is below the minimum {minimum}")
            }
            GenError::InvalidVertex { vertex } => write!(f, "vertex {vertex} out of range"),
            GenError::Label(v) => write!(f, "{v}"),
            GenError::InstanceTooLarge { vertices } => {
                write!(f, "instance would have {vertices} vertices")
            }
            GenError::UnbalancedMapping => {
                write!(f, "terminal out-degree mapping must be balanced between 1 and 2")
            }
        }
    }
}

impl std::error::Error for GenError {}

impl From<LabelViolation> for GenError {
    fn from(v: LabelViolation) -> Self {
        GenError::Label(v)
    }
}

/// A grid gadget: the graph plus its two terminal sequences. Terminals have
/// degree 3, every other vertex degree 4, and local connectivity between any
/// two vertices equals the smaller degree.
#[derive(Debug, Clone)]
pub struct GadgetInstance {
    pub graph: Multigraph,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    /// Side length of the square grid.
    pub side: usize,
}

impl GadgetInstance {
    /// Vertex id of grid coordinate (row, col), both 1-based.
    pub fn vertex(&self, row: usize, col: usize) -> usize {
        (row - 1) * self.side + (col - 1)
    }
}

/// Builds the (alpha, beta) grid gadget: a wrapped square grid of side
/// alpha + beta + 4 (alpha even) or + 5 (alpha odd), with doubling edges in
/// the first and last rows that leave exactly the terminals at degree 3.
pub fn gadget(alpha: usize, beta: usize) -> Result<GadgetInstance, GenError> {
    if alpha == 0 {
        return Err(GenError::BelowMinimum { name: "alpha", value: alpha, minimum: 1 });
    }
    if beta == 0 {
        return Err(GenError::BelowMinimum { name: "beta", value: beta, minimum: 1 });
    }
    if alpha % 2 != beta % 2 {
        return Err(GenError::ParityMismatch { alpha, beta });
    }
    let gamma = if alpha % 2 == 0 {
        alpha + beta + 4
    } else {
        alpha + beta + 5
    };
    let id = |row: usize, col: usize| (row - 1) * gamma + (col - 1);
    let mut edges = Vec::new();
    for row in 1..=gamma {
        for col in 1..=gamma {
            if col < gamma {
                edges.push((id(row, col), id(row, col + 1)));
            }
            if row < gamma {
                edges.push((id(row, col), id(row + 1, col)));
            }
        }
    }
    for row in 1..=gamma {
        edges.push((id(row, 1), id(row, gamma)));
    }
    for i in 1..=(gamma - alpha) / 2 {
        edges.push((id(1, alpha + 2 * i - 1), id(1, alpha + 2 * i)));
    }
    for i in 1..=(gamma - beta) / 2 {
        edges.push((id(gamma, 2 * i - 1), id(gamma, 2 * i)));
    }
    edges.sort_unstable();
    let graph = Multigraph::new(gamma * gamma, edges).expect("grid edges are valid");
    let x = (1..=alpha).map(|i| id(1, i)).collect();
    let y = (1..=beta).map(|i| id(gamma, gamma - beta + i)).collect();
    Ok(GadgetInstance {
        graph,
        x,
        y,
        side: gamma,
    })
}

/// Extends a terminal out-degree mapping to the whole gadget (interior
/// vertices get out-degree 2). The mapping must assign 1 and 2 equally often
/// over X ∪ Y; unbalanced mappings are rejected rather than guessed at.
pub fn gadget_outdegree_target(
    gadget: &GadgetInstance,
    terminal_phi: &[(usize, usize)],
) -> Result<Vec<usize>, GenError> {
    let ones = terminal_phi.iter().filter(|&&(_, d)| d == 1).count();
    let twos = terminal_phi.iter().filter(|&&(_, d)| d == 2).count();
    if ones != twos || ones + twos != gadget.x.len() + gadget.y.len() {
        return Err(GenError::UnbalancedMapping);
    }
    let mut phi = vec![2usize; gadget.graph.vertex_count()];
    for &(v, d) in terminal_phi {
        if v >= gadget.graph.vertex_count() {
            return Err(GenError::InvalidVertex { vertex: v });
        }
        phi[v] = d;
    }
    Ok(phi)
}

/// A path on `n` vertices with every edge replaced by `alpha` parallel
/// copies. The two ends, vertices 0 and n−1, have degree `alpha`.
pub fn tube(n: usize, alpha: usize) -> Result<Multigraph, GenError> {
    if n < 1 {
        return Err(GenError::BelowMinimum { name: "n", value: n, minimum: 1 });
    }
    if alpha < 1 {
        return Err(GenError::BelowMinimum { name: "alpha", value: alpha, minimum: 1 });
    }
    let mut edges = Vec::with_capacity((n - 1) * alpha);
    for i in 0..n - 1 {
        for _ in 0..alpha {
            edges.push((i, i + 1));
        }
    }
    Ok(Multigraph::new(n, edges).expect("path edges are valid"))
}

/// Disjoint union of `g` and an (n, alpha)-tube, identifying `v` with one of
/// the tube's degree-alpha end vertices. Edge ids of `g` are preserved; tube
/// edges are appended.
pub fn attach_tube(
    g: &Multigraph,
    v: usize,
    n: usize,
    alpha: usize,
) -> Result<Multigraph, GenError> {
    if v >= g.vertex_count() {
        return Err(GenError::InvalidVertex { vertex: v });
    }
    if n < 1 {
        return Err(GenError::BelowMinimum { name: "n", value: n, minimum: 1 });
    }
    if alpha < 1 {
        return Err(GenError::BelowMinimum { name: "alpha", value: alpha, minimum: 1 });
    }
    let base = g.vertex_count();
    // tube vertex 0 becomes v, tube vertex j >= 1 becomes base + j - 1
    let map = |t: usize| if t == 0 { v } else { base + t - 1 };
    let mut edges = g.edges().to_vec();
    for i in 0..n - 1 {
        for _ in 0..alpha {
            edges.push((map(i), map(i + 1)));
        }
    }
    Ok(Multigraph::new(base + n - 1, edges).expect("mapped tube edges are valid"))
}

/// The two extremal orientations of a tripled path: the alternating 2/1
/// pattern that is well-balanced, and the all-forward pattern that maximizes
/// tac.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TripledPathOrientation {
    /// Two arcs forward and one back at even positions, the reverse at odd
    /// positions (counting from the first path edge).
    Alternating21,
    /// All three arcs forward on every path edge.
    AllForward,
}

/// A path on `t` vertices with every edge tripled.
pub fn tripled_path(t: usize) -> Result<Multigraph, GenError> {
    if t < 2 {
        return Err(GenError::BelowMinimum { name: "t", value: t, minimum: 2 });
    }
    tube(t, 3)
}

/// The tripled path together with one of its named orientations.
pub fn tripled_path_oriented(
    t: usize,
    variant: TripledPathOrientation,
) -> Result<(Multigraph, Orientation), GenError> {
    let g = tripled_path(t)?;
    let mut heads = Vec::with_capacity(3 * (t - 1));
    for p in 0..t - 1 {
        match variant {
            TripledPathOrientation::AllForward => heads.extend([p + 1, p + 1, p + 1]),
            TripledPathOrientation::Alternating21 => {
                if p % 2 == 0 {
                    heads.extend([p + 1, p + 1, p]);
                } else {
                    heads.extend([p + 1, p, p]);
                }
            }
        }
    }
    let o = Orientation::new(&g, heads).expect("heads lie on path edges");
    Ok((g, o))
}

/// Uniformly random loopless endpoint pairs from a seeded generator.
/// Identical (n, m, seed) triples produce identical graphs.
pub fn random_multigraph(n: usize, m: usize, seed: u64) -> Result<Multigraph, GenError> {
    if n < 2 {
        return Err(GenError::BelowMinimum { name: "n", value: n, minimum: 2 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let u = rng.gen_range(0..n);
        let mut v = rng.gen_range(0..n - 1);
        if v >= u {
            v += 1;
        }
        edges.push((u.min(v), u.max(v)));
    }
    edges.sort_unstable();
    Ok(Multigraph::new(n, edges).expect("loopless by construction"))
}

/// Vertex labels of the reduction instances. `V3` vertices carry the
/// out-degree bound 1; everything else is unconstrained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Label {
    V3,
    V3Prime,
    V4,
    Apex,
    ApexPrime,
}

impl Label {
    pub fn as_str(self) -> &'static str {
        match self {
            Label::V3 => "V3",
            Label::V3Prime => "V3p",
            Label::V4 => "V4",
            Label::Apex => "a",
            Label::ApexPrime => "ap",
        }
    }

    pub fn from_str(s: &str) -> Option<Label> {
        match s {
            "V3" => Some(Label::V3),
            "V3p" => Some(Label::V3Prime),
            "V4" => Some(Label::V4),
            "a" => Some(Label::Apex),
            "ap" => Some(Label::ApexPrime),
            _ => None,
        }
    }
}

/// Parses a label file: one `index label` line per vertex, every vertex
/// covered exactly once.
pub fn parse_labels(text: &str, n: usize) -> Result<Vec<Label>, ParseError> {
    let mut labels = vec![None; n];
    let mut count = 0;
    for (idx, raw) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let line = idx + 1;
        let mut it = raw.split_whitespace();
        let v: usize = it
            .next()
            .and_then(|f| f.parse().ok())
            .ok_or(ParseError::Malformed { line })?;
        let label = it
            .next()
            .and_then(Label::from_str)
            .ok_or(ParseError::Malformed { line })?;
        if it.next().is_some() {
            return Err(ParseError::Malformed { line });
        }
        if v >= n {
            return Err(ParseError::VertexOutOfRange { line });
        }
        if labels[v].is_some() {
            return Err(ParseError::Malformed { line });
        }
        labels[v] = Some(label);
        count += 1;
    }
    if count != n {
        return Err(ParseError::EdgeCountMismatch {
            expected: n,
            found: count,
        });
    }
    Ok(labels.into_iter().map(|l| l.unwrap()).collect())
}

/// Parses an out-degree bound file: one `index bound` line per vertex.
pub fn parse_bounds(text: &str, n: usize) -> Result<Vec<usize>, ParseError> {
    let mut bounds = vec![None; n];
    let mut count = 0;
    for (idx, raw) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let line = idx + 1;
        let mut it = raw.split_whitespace();
        let v: usize = it
            .next()
            .and_then(|f| f.parse().ok())
            .ok_or(ParseError::Malformed { line })?;
        let b: usize = it
            .next()
            .and_then(|f| f.parse().ok())
            .ok_or(ParseError::Malformed { line })?;
        if it.next().is_some() {
            return Err(ParseError::Malformed { line });
        }
        if v >= n {
            return Err(ParseError::VertexOutOfRange { line });
        }
        if bounds[v].is_some() {
            return Err(ParseError::Malformed { line });
        }
        bounds[v] = Some(b);
        count += 1;
    }
    if count != n {
        return Err(ParseError::EdgeCountMismatch {
            expected: n,
            found: count,
        });
    }
    Ok(bounds.into_iter().map(|b| b.unwrap()).collect())
}

fn degree_between(g: &Multigraph, u: usize, v: usize) -> usize {
    g.edges()
        .iter()
        .filter(|&&(a, b)| (a, b) == (u.min(v), u.max(v)))
        .count()
}

/// A labeled instance with out-degree bounds, in the second restricted form:
/// one apex, one degree-3 satellite tied to the apex, and the (a)–(g)
/// conditions checked by [`SsubwboInstance::validate`].
#[derive(Debug, Clone)]
pub struct SsubwboInstance {
    pub graph: Multigraph,
    pub labels: Vec<Label>,
    pub bounds: Vec<usize>,
}

impl SsubwboInstance {
    /// Derives the bounds from the labels: 1 on V3, the degree elsewhere.
    pub fn from_labels(graph: Multigraph, labels: Vec<Label>) -> Self {
        assert_eq!(labels.len(), graph.vertex_count());
        let bounds = labels
            .iter()
            .enumerate()
            .map(|(v, &l)| if l == Label::V3 { 1 } else { graph.degree(v) })
            .collect();
        SsubwboInstance {
            graph,
            labels,
            bounds,
        }
    }

    pub fn from_parts(graph: Multigraph, labels: Vec<Label>, bounds: Vec<usize>) -> Self {
        assert_eq!(labels.len(), graph.vertex_count());
        assert_eq!(bounds.len(), graph.vertex_count());
        SsubwboInstance {
            graph,
            labels,
            bounds,
        }
    }

    pub fn apex(&self) -> Option<usize> {
        self.labels.iter().position(|&l| l == Label::Apex)
    }

    /// Checks conditions (a)–(g); degree conditions are reported before the
    /// apex connectivity condition.
    pub fn validate(&self) -> Result<(), LabelViolation> {
        let g = &self.graph;
        let n = g.vertex_count();
        for v in 0..n {
            match self.labels[v] {
                Label::V3 | Label::V3Prime => {
                    if g.degree(v) != 3 {
                        return Err(LabelViolation {
                            condition: 'c',
                            detail: format!("vertex {v} has degree {}, not 3", g.degree(v)),
                        });
                    }
                }
                Label::V4 => {
                    let d = g.degree(v);
                    if d < 4 || d % 2 != 0 {
                        return Err(LabelViolation {
                            condition: 'd',
                            detail: format!("vertex {v} has degree {d}, need at least 4 and even"),
                        });
                    }
                    let same = (0..n).filter(|&u| g.degree(u) == d).count();
                    if same < 3 {
                        return Err(LabelViolation {
                            condition: 'd',
                            detail: format!("only {same} vertices share degree {d}"),
                        });
                    }
                }
                Label::Apex | Label::ApexPrime => {}
            }
        }
        let apexes: Vec<usize> = (0..n).filter(|&v| self.labels[v] == Label::Apex).collect();
        if apexes.len() != 1 {
            return Err(LabelViolation {
                condition: 'a',
                detail: format!("need exactly one apex, found {}", apexes.len()),
            });
        }
        let apex = apexes[0];
        for v in 0..n {
            if v != apex && g.degree(v) >= g.degree(apex) {
                return Err(LabelViolation {
                    condition: 'a',
                    detail: format!(
                        "apex degree {} does not dominate vertex {v} of degree {}",
                        g.degree(apex),
                        g.degree(v)
                    ),
                });
            }
        }
        let satellites: Vec<usize> = (0..n)
            .filter(|&v| self.labels[v] == Label::ApexPrime)
            .collect();
        if satellites.len() != 1 {
            return Err(LabelViolation {
                condition: 'b',
                detail: format!("need exactly one satellite, found {}", satellites.len()),
            });
        }
        let sat = satellites[0];
        if g.degree(sat) != 3 || degree_between(g, apex, sat) != 3 {
            return Err(LabelViolation {
                condition: 'b',
                detail: format!(
                    "satellite {sat} must have degree 3 with all edges to the apex; \
                     degree {}, edges to apex {}",
                    g.degree(sat),
                    degree_between(g, apex, sat)
                ),
            });
        }
        for v in 0..n {
            if self.labels[v] == Label::V3 {
                for &e in g.incident_edges(v) {
                    let w = g.other_endpoint(e, v);
                    if self.labels[w] != Label::V4 {
                        return Err(LabelViolation {
                            condition: 'e',
                            detail: format!("vertex {v} has neighbor {w} outside V4"),
                        });
                    }
                }
            }
            if self.labels[v] == Label::V3Prime {
                let ok = g
                    .incident_edges(v)
                    .iter()
                    .any(|&e| self.labels[g.other_endpoint(e, v)] == Label::V4);
                if !ok {
                    return Err(LabelViolation {
                        condition: 'f',
                        detail: format!("vertex {v} has no neighbor in V4"),
                    });
                }
            }
        }
        for v in 0..n {
            let want = if self.labels[v] == Label::V3 {
                1
            } else {
                g.degree(v)
            };
            if self.bounds[v] != want {
                return Err(LabelViolation {
                    condition: 'g',
                    detail: format!("vertex {v} has bound {}, expected {want}", self.bounds[v]),
                });
            }
        }
        for v in 0..n {
            if v == apex {
                continue;
            }
            let lam = local_edge_connectivity(g, apex, v)
                .expect("validated vertices")
                .value;
            if lam != g.degree(v) as u64 {
                return Err(LabelViolation {
                    condition: 'a',
                    detail: format!(
                        "connectivity from the apex to {v} is {lam}, expected degree {}",
                        g.degree(v)
                    ),
                });
            }
        }
        Ok(())
    }
}

/// The first restricted form: like the second, but with no satellite vertex
/// and a free bound k at the apex.
#[derive(Debug, Clone)]
pub struct FsubwboInstance {
    pub graph: Multigraph,
    pub labels: Vec<Label>,
    pub bounds: Vec<usize>,
}

impl FsubwboInstance {
    pub fn from_parts(graph: Multigraph, labels: Vec<Label>, bounds: Vec<usize>) -> Self {
        assert_eq!(labels.len(), graph.vertex_count());
        assert_eq!(bounds.len(), graph.vertex_count());
        FsubwboInstance {
            graph,
            labels,
            bounds,
        }
    }

    pub fn apex(&self) -> Option<usize> {
        self.labels.iter().position(|&l| l == Label::Apex)
    }

    /// Checks conditions (α)–(ζ). The bound clause is checked over V3' ∪ V4
    /// only, since there is no satellite in this form.
    pub fn validate(&self) -> Result<(), LabelViolation> {
        let g = &self.graph;
        let n = g.vertex_count();
        if self.labels.iter().any(|&l| l == Label::ApexPrime) {
            return Err(LabelViolation {
                condition: 'α',
                detail: "satellite labels are not part of this form".to_string(),
            });
        }
        for v in 0..n {
            match self.labels[v] {
                Label::V3 | Label::V3Prime => {
                    if g.degree(v) != 3 {
                        return Err(LabelViolation {
                            condition: 'β',
                            detail: format!("vertex {v} has degree {}, not 3", g.degree(v)),
                        });
                    }
                }
                Label::V4 => {
                    let d = g.degree(v);
                    if d < 4 || d % 2 != 0 {
                        return Err(LabelViolation {
                            condition: 'γ',
                            detail: format!("vertex {v} has degree {d}, need at least 4 and even"),
                        });
                    }
                }
                _ => {}
            }
        }
        let apexes: Vec<usize> = (0..n).filter(|&v| self.labels[v] == Label::Apex).collect();
        if apexes.len() != 1 {
            return Err(LabelViolation {
                condition: 'α',
                detail: format!("need exactly one apex, found {}", apexes.len()),
            });
        }
        let apex = apexes[0];
        for v in 0..n {
            if v != apex && g.degree(v) >= g.degree(apex) {
                return Err(LabelViolation {
                    condition: 'α',
                    detail: format!(
                        "apex degree {} does not dominate vertex {v} of degree {}",
                        g.degree(apex),
                        g.degree(v)
                    ),
                });
            }
        }
        for v in 0..n {
            if self.labels[v] == Label::V3 {
                for &e in g.incident_edges(v) {
                    let w = g.other_endpoint(e, v);
                    if self.labels[w] != Label::V4 && w != apex {
                        return Err(LabelViolation {
                            condition: 'δ',
                            detail: format!("vertex {v} has neighbor {w} outside V4 and the apex"),
                        });
                    }
                }
            }
            if self.labels[v] == Label::V3Prime {
                let ok = g.incident_edges(v).iter().any(|&e| {
                    let w = g.other_endpoint(e, v);
                    self.labels[w] == Label::V4 || w == apex
                });
                if !ok {
                    return Err(LabelViolation {
                        condition: 'ε',
                        detail: format!("vertex {v} has no neighbor in V4 or the apex"),
                    });
                }
            }
        }
        if 2 * self.bounds[apex] < g.degree(apex) {
            return Err(LabelViolation {
                condition: 'ζ',
                detail: format!(
                    "apex bound {} is below half the apex degree {}",
                    self.bounds[apex],
                    g.degree(apex)
                ),
            });
        }
        for v in 0..n {
            if v == apex {
                continue;
            }
            let want = if self.labels[v] == Label::V3 {
                1
            } else {
                g.degree(v)
            };
            if self.bounds[v] != want {
                return Err(LabelViolation {
                    condition: 'ζ',
                    detail: format!("vertex {v} has bound {}, expected {want}", self.bounds[v]),
                });
            }
        }
        for v in 0..n {
            if v == apex {
                continue;
            }
            let lam = local_edge_connectivity(g, apex, v)
                .expect("validated vertices")
                .value;
            if lam != g.degree(v) as u64 {
                return Err(LabelViolation {
                    condition: 'α',
                    detail: format!(
                        "connectivity from the apex to {v} is {lam}, expected degree {}",
                        g.degree(v)
                    ),
                });
            }
        }
        Ok(())
    }
}

/// An orientation-target instance: the amplified graph H plus the threshold
/// value k.
#[derive(Debug, Clone)]
pub struct OcoInstance {
    pub graph: Multigraph,
    pub target: u128,
}

/// Attaches amplification tubes to a validated labeled instance and computes
/// the target value. V4 vertices and the two special vertices receive
/// (n^p, degree)-tubes, V3 vertices (n^q, 3)-tubes. The default exponents
/// are (5, 2); tests override them to keep instances at desk scale.
pub fn build_oco_instance(
    inst: &SsubwboInstance,
    p: u32,
    q: u32,
) -> Result<OcoInstance, GenError> {
    inst.validate()?;
    let g = &inst.graph;
    let n = g.vertex_count();
    let np = (n as u128).pow(p);
    let nq = (n as u128).pow(q);
    let degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut total_vertices = n as u128;
    for v in 0..n {
        match inst.labels[v] {
            Label::V4 | Label::Apex | Label::ApexPrime => total_vertices += np - 1,
            Label::V3 => total_vertices += nq - 1,
            Label::V3Prime => {}
        }
    }
    if total_vertices > 100_000_000 {
        return Err(GenError::InstanceTooLarge {
            vertices: total_vertices,
        });
    }
    let mut h = g.clone();
    for v in 0..n {
        match inst.labels[v] {
            Label::V4 | Label::Apex | Label::ApexPrime => {
                h = attach_tube(&h, v, np as usize, degrees[v])?;
            }
            Label::V3 => {
                h = attach_tube(&h, v, nq as usize, 3)?;
            }
            Label::V3Prime => {}
        }
    }
    // important pairs avoid V3' and contain at most one V3 vertex; the
    // super-important ones avoid V3 entirely
    let mut super_min_sum: u128 = 0;
    let mut mixed_count: u128 = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            let labels = (inst.labels[u], inst.labels[v]);
            if labels.0 == Label::V3Prime || labels.1 == Label::V3Prime {
                continue;
            }
            let v3s = [labels.0, labels.1]
                .iter()
                .filter(|&&l| l == Label::V3)
                .count();
            match v3s {
                0 => super_min_sum += degrees[u].min(degrees[v]) as u128,
                1 => mixed_count += 1,
                _ => {}
            }
        }
    }
    let heavy_degree_sum: u128 = (0..n)
        .filter(|&v| {
            matches!(
                inst.labels[v],
                Label::V4 | Label::Apex | Label::ApexPrime
            )
        })
        .map(|v| degrees[v] as u128)
        .sum();
    let target = np * (np - 1) / 2 * heavy_degree_sum
        + np * np * super_min_sum
        + 3 * np * nq * mixed_count;
    Ok(OcoInstance { graph: h, target })
}

/// Output of the two-step reduction: the gadget-spliced graph with its
/// bounds, the terminals for structural checks, and the second-form instance
/// obtained by adding the booster vertices and the satellite.
#[derive(Debug, Clone)]
pub struct ReductionOutput {
    pub g1: Multigraph,
    pub ell1: Vec<usize>,
    pub apex: usize,
    pub gadget_x: Vec<usize>,
    pub gadget_y: Vec<usize>,
    pub second: SsubwboInstance,
}

/// Splices a gadget in place of the apex edges of a validated first-form
/// instance, then extends to the second form.
///
/// The gadget has parameters (2k + μ − d(a), d(a)) where k is the apex bound
/// and μ the largest V4 degree. The apex is joined to every X terminal; each
/// former apex edge is redirected through a distinct Y terminal. The second
/// form adds two booster vertices per V4 member, each tied to the apex by
/// that member's degree, plus a degree-3 satellite.
pub fn build_g1_g2(inst: &FsubwboInstance) -> Result<ReductionOutput, GenError> {
    inst.validate()?;
    let g0 = &inst.graph;
    let n0 = g0.vertex_count();
    let apex = inst.apex().expect("validated");
    let v4: Vec<usize> = (0..n0)
        .filter(|&v| inst.labels[v] == Label::V4)
        .collect();
    if v4.is_empty() {
        return Err(GenError::Label(LabelViolation {
            condition: 'γ',
            detail: "no V4 vertex, so the maximum even degree is undefined".to_string(),
        }));
    }
    let k = inst.bounds[apex];
    let mu = v4.iter().map(|&v| g0.degree(v)).max().unwrap();
    let d_apex = g0.degree(apex);
    let alpha = 2 * k + mu - d_apex;
    let beta = d_apex;
    let w = gadget(alpha, beta)?;
    let shift = n0;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut apex_partners = Vec::new();
    for (e, &(a, b)) in g0.edges().iter().enumerate() {
        if a == apex || b == apex {
            apex_partners.push(g0.other_endpoint(e, apex));
        } else {
            edges.push((a, b));
        }
    }
    for &(a, b) in w.graph.edges() {
        edges.push((a + shift, b + shift));
    }
    for &x in &w.x {
        edges.push((apex, x + shift));
    }
    debug_assert_eq!(apex_partners.len(), w.y.len());
    for (i, &partner) in apex_partners.iter().enumerate() {
        edges.push((partner, w.y[i] + shift));
    }
    let n1 = n0 + w.graph.vertex_count();
    let g1 = Multigraph::new(n1, edges).expect("spliced edges are valid");
    let ell1: Vec<usize> = (0..n1)
        .map(|v| {
            if v < n0 && inst.labels[v] == Label::V3 {
                1
            } else {
                g1.degree(v)
            }
        })
        .collect();
    // second form: two boosters per V4 vertex, then the satellite
    let booster_count = 2 * v4.len();
    let n2 = n1 + booster_count + 1;
    let satellite = n2 - 1;
    let mut edges2: Vec<(usize, usize)> = g1.edges().to_vec();
    for (i, &v) in v4.iter().enumerate() {
        let d = g1.degree(v);
        for booster in [n1 + 2 * i, n1 + 2 * i + 1] {
            for _ in 0..d {
                edges2.push((apex, booster));
            }
        }
    }
    for _ in 0..3 {
        edges2.push((apex, satellite));
    }
    let g2 = Multigraph::new(n2, edges2).expect("extension edges are valid");
    let mut labels2 = Vec::with_capacity(n2);
    for v in 0..n0 {
        labels2.push(inst.labels[v]);
    }
    for _ in n0..n1 + booster_count {
        labels2.push(Label::V4);
    }
    labels2.push(Label::ApexPrime);
    let ell2: Vec<usize> = (0..n2)
        .map(|v| {
            if v < n0 && inst.labels[v] == Label::V3 {
                1
            } else {
                g2.degree(v)
            }
        })
        .collect();
    let second = SsubwboInstance::from_parts(g2, labels2, ell2);
    Ok(ReductionOutput {
        g1,
        ell1,
        apex,
        gadget_x: w.x.iter().map(|&x| x + shift).collect(),
        gadget_y: w.y.iter().map(|&y| y + shift).collect(),
        second,
    })
}
