//! Shared test oracles and corpus generators. Everything here recomputes
//! values by enumeration or naive search, independently of the library's
//! algorithmic path, so the two sides can be compared.
#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tac_orient_core::graph::{Digraph, Multigraph};

/// λ_D(u,v) by enumerating every u-v̄-set and minimizing the out-cut.
pub fn directed_min_cut_enumeration(d: &Digraph, u: usize, v: usize) -> u64 {
    let n = d.vertex_count();
    assert!(n <= 16);
    let mut best = u64::MAX;
    for mask in 0u32..(1 << n) {
        if mask & (1 << u) == 0 || mask & (1 << v) != 0 {
            continue;
        }
        let side: Vec<usize> = (0..n).filter(|&x| mask & (1 << x) != 0).collect();
        best = best.min(d.cut_degrees(&side).0 as u64);
    }
    best
}

/// λ_G(u,v) by enumerating every u-v̄-set and minimizing the cut degree.
pub fn undirected_min_cut_enumeration(g: &Multigraph, u: usize, v: usize) -> u64 {
    let n = g.vertex_count();
    assert!(n <= 16);
    let mut best = u64::MAX;
    for mask in 0u32..(1 << n) {
        if mask & (1 << u) == 0 || mask & (1 << v) != 0 {
            continue;
        }
        let side: Vec<usize> = (0..n).filter(|&x| mask & (1 << x) != 0).collect();
        best = best.min(g.cut_degree(&side) as u64);
    }
    best
}

/// Ordered reachable pairs by one DFS per vertex over the raw arc list.
pub fn naive_reach_count(d: &Digraph) -> u64 {
    let n = d.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for &(t, h) in d.arcs() {
        adj[t].push(h);
    }
    let mut total = 0u64;
    let mut seen = vec![false; n];
    for s in 0..n {
        seen.fill(false);
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        total += seen.iter().filter(|&&b| b).count() as u64 - 1;
    }
    total
}

/// Head vector for orientation number `mask`, taking the higher endpoint as
/// head where the bit for the edge is set.
pub fn heads_for_mask(g: &Multigraph, mask: u64) -> Vec<usize> {
    (0..g.edge_count())
        .map(|e| {
            let (lo, hi) = g.endpoints(e);
            if mask >> e & 1 == 0 {
                lo
            } else {
                hi
            }
        })
        .collect()
}

/// Maximum of the naive reach count over all 2^m orientations. Buffers are
/// reused across orientations to keep the exhaustive corpus runs fast.
pub fn brute_force_max_reach(g: &Multigraph) -> u64 {
    let m = g.edge_count();
    let n = g.vertex_count();
    assert!(m <= 20);
    let edges = g.edges();
    let mut best = 0;
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut seen = vec![false; n];
    let mut stack = Vec::with_capacity(n);
    for mask in 0u64..(1 << m) {
        for a in adj.iter_mut() {
            a.clear();
        }
        for (e, &(lo, hi)) in edges.iter().enumerate() {
            let (t, h) = if mask >> e & 1 == 0 { (hi, lo) } else { (lo, hi) };
            adj[t].push(h);
        }
        let mut total = 0u64;
        for s in 0..n {
            seen.fill(false);
            seen[s] = true;
            stack.push(s);
            let mut reached = 0u64;
            while let Some(v) = stack.pop() {
                reached += 1;
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            total += reached - 1;
        }
        best = best.max(total);
    }
    best
}

/// Every labeled multigraph on exactly `n` vertices with at most `max_edges`
/// edges, as sorted edge multisets; connected ones only.
pub fn connected_multigraphs_exact(n: usize, max_edges: usize) -> Vec<Multigraph> {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            pairs.push((u, v));
        }
    }
    let mut out = Vec::new();
    let mut multiset: Vec<(usize, usize)> = Vec::new();
    enumerate_multisets(n, &pairs, 0, max_edges, &mut multiset, &mut out);
    out
}

fn enumerate_multisets(
    n: usize,
    pairs: &[(usize, usize)],
    from: usize,
    left: usize,
    multiset: &mut Vec<(usize, usize)>,
    out: &mut Vec<Multigraph>,
) {
    let g = Multigraph::new(n, multiset.clone()).unwrap();
    if g.is_connected() {
        out.push(g);
    }
    if left == 0 {
        return;
    }
    for idx in from..pairs.len() {
        multiset.push(pairs[idx]);
        enumerate_multisets(n, pairs, idx, left - 1, multiset, out);
        multiset.pop();
    }
}

/// All connected labeled multigraphs with `n ≤ max_vertices` and
/// `m ≤ max_edges`.
pub fn connected_multigraphs(max_vertices: usize, max_edges: usize) -> Vec<Multigraph> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        out.extend(connected_multigraphs_exact(n, max_edges));
    }
    out
}

/// All trees on exactly `n` vertices up to isomorphism, generated by leaf
/// augmentation with canonical-form deduplication.
pub fn unlabeled_trees(n: usize) -> Vec<Multigraph> {
    assert!(n >= 1);
    let mut current = vec![Multigraph::new(1, Vec::new()).unwrap()];
    for size in 2..=n {
        let mut seen = std::collections::HashSet::new();
        let mut next = Vec::new();
        for t in &current {
            for v in 0..size - 1 {
                let mut edges = t.edges().to_vec();
                edges.push((v, size - 1));
                let candidate = Multigraph::new(size, edges).unwrap();
                if seen.insert(tree_canonical_form(&candidate)) {
                    next.push(candidate);
                }
            }
        }
        current = next;
    }
    current
}

/// Canonical string of a free tree: the lexicographically smallest rooted
/// encoding over its centroids. Distinguishes trees up to isomorphism.
pub fn tree_canonical_form(g: &Multigraph) -> String {
    let n = g.vertex_count();
    if n == 1 {
        return "()".to_string();
    }
    // centroid(s): remove leaves layer by layer
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut remaining = n;
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for &e in g.incident_edges(v) {
                let w = g.other_endpoint(e, v);
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    let centers: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    centers
        .iter()
        .map(|&c| rooted_encoding(g, c, usize::MAX))
        .min()
        .unwrap()
}

fn rooted_encoding(g: &Multigraph, v: usize, parent: usize) -> String {
    let mut child_codes: Vec<String> = g
        .incident_edges(v)
        .iter()
        .map(|&e| g.other_endpoint(e, v))
        .filter(|&w| w != parent)
        .map(|w| rooted_encoding(g, w, v))
        .collect();
    child_codes.sort();
    format!("({})", child_codes.concat())
}

/// Deterministic stream of random connected multigraphs with n in
/// `2..=max_vertices` and m in `1..=max_edges`.
pub fn random_connected_multigraphs(
    count: usize,
    max_vertices: usize,
    max_edges: usize,
    seed: u64,
) -> Vec<Multigraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let n = rng.gen_range(2..=max_vertices);
        let m = rng.gen_range(n - 1..=max_edges.max(n - 1));
        let g = tac_orient_core::random_multigraph(n, m, rng.gen()).unwrap();
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// Deterministic stream of random multigraphs, connected or not.
pub fn random_multigraphs(
    count: usize,
    max_vertices: usize,
    max_edges: usize,
    seed: u64,
) -> Vec<Multigraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=max_vertices);
            let m = rng.gen_range(0..=max_edges);
            tac_orient_core::random_multigraph(n, m, rng.gen()).unwrap()
        })
        .collect()
}

/// Deterministic stream of random 2-edge-connected multigraphs.
pub fn random_two_edge_connected(count: usize, max_vertices: usize, seed: u64) -> Vec<Multigraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let n = rng.gen_range(3..=max_vertices);
        let m = rng.gen_range(n + 1..=2 * n + 2);
        let g = tac_orient_core::random_multigraph(n, m, rng.gen()).unwrap();
        let dec = tac_orient_core::two_edge_connected_components(&g);
        if g.is_connected() && dec.bridges.is_empty() && dec.classes.len() == 1 {
            out.push(g);
        }
    }
    out
}

/// Sum of λ_G over all unordered vertex pairs.
pub fn total_undirected_connectivity(g: &Multigraph) -> u64 {
    let n = g.vertex_count();
    let mut total = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            total += tac_orient_core::local_edge_connectivity(g, u, v)
                .unwrap()
                .value;
        }
    }
    total
}

// ---- gadget property suite -------------------------------------------------

use tac_orient_core::balance::DegreePrescription;
use tac_orient_core::generators::{gadget_outdegree_target, GadgetInstance};

/// Properties (2) and (3): terminals have degree 3, everything else 4.
pub fn check_gadget_degrees(w: &GadgetInstance) -> Result<(), String> {
    let g = &w.graph;
    let terminal: Vec<bool> = {
        let mut t = vec![false; g.vertex_count()];
        for &v in w.x.iter().chain(w.y.iter()) {
            t[v] = true;
        }
        t
    };
    for v in 0..g.vertex_count() {
        let want = if terminal[v] { 3 } else { 4 };
        if g.degree(v) != want {
            return Err(format!("vertex {v} has degree {}, want {want}", g.degree(v)));
        }
    }
    Ok(())
}

/// Property (1): λ equals the smaller degree, over every unordered pair.
pub fn gadget_property1_violations(w: &GadgetInstance) -> usize {
    let g = &w.graph;
    let n = g.vertex_count();
    let mut violations = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            let lam = tac_orient_core::local_edge_connectivity(g, u, v)
                .unwrap()
                .value;
            if lam != g.degree(u).min(g.degree(v)) as u64 {
                violations += 1;
            }
        }
    }
    violations
}

fn grow_connected_set(
    w: &GadgetInstance,
    rng: &mut ChaCha8Rng,
    start: usize,
    stop_when: impl Fn(&[bool]) -> bool,
    extra_growth: usize,
) -> Vec<usize> {
    let g = &w.graph;
    let n = g.vertex_count();
    let mut in_set = vec![false; n];
    let mut frontier: Vec<usize> = Vec::new();
    let absorb = |v: usize, in_set: &mut Vec<bool>, frontier: &mut Vec<usize>| {
        in_set[v] = true;
        for &e in g.incident_edges(v) {
            let u = g.other_endpoint(e, v);
            if !in_set[u] && !frontier.contains(&u) {
                frontier.push(u);
            }
        }
    };
    absorb(start, &mut in_set, &mut frontier);
    while !stop_when(&in_set) && !frontier.is_empty() {
        let pick = rng.gen_range(0..frontier.len());
        let v = frontier.swap_remove(pick);
        if !in_set[v] {
            absorb(v, &mut in_set, &mut frontier);
        }
    }
    for _ in 0..extra_growth {
        if frontier.is_empty() {
            break;
        }
        let pick = rng.gen_range(0..frontier.len());
        let v = frontier.swap_remove(pick);
        if !in_set[v] {
            absorb(v, &mut in_set, &mut frontier);
        }
    }
    (0..n).filter(|&v| in_set[v]).collect()
}

/// Property (4): connected sets meeting both terminal groups have cut degree
/// at least the number of missed Y terminals. Returns violation count.
pub fn gadget_property4_violations(w: &GadgetInstance, samples: usize, seed: u64) -> usize {
    let g = &w.graph;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = 0;
    for _ in 0..samples {
        let x = w.x[rng.gen_range(0..w.x.len())];
        let extra = rng.gen_range(0..g.vertex_count() / 2);
        let y_hit = |in_set: &[bool]| w.y.iter().any(|&y| in_set[y]);
        let side = grow_connected_set(w, &mut rng, x, y_hit, extra);
        let missed = w.y.iter().filter(|&&y| !side.contains(&y)).count();
        if g.cut_degree(&side) < missed {
            violations += 1;
        }
    }
    violations
}

/// Property (5): sets avoiding Y have cut degree at least
/// min(|X ∩ S|, |Y|). Returns violation count.
pub fn gadget_property5_violations(w: &GadgetInstance, samples: usize, seed: u64) -> usize {
    let g = &w.graph;
    let n = g.vertex_count();
    let in_y: Vec<bool> = {
        let mut t = vec![false; n];
        for &y in &w.y {
            t[y] = true;
        }
        t
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = 0;
    for _ in 0..samples {
        let density: f64 = rng.gen();
        let side: Vec<usize> = (0..n)
            .filter(|&v| !in_y[v] && rng.gen::<f64>() < density)
            .collect();
        let x_in = w.x.iter().filter(|&&x| side.contains(&x)).count();
        let bound = x_in.min(w.y.len());
        if g.cut_degree(&side) < bound {
            violations += 1;
        }
    }
    violations
}

/// The row/column cut bound: d(S) is at least the minimum of the side
/// length, columns-plus-twice-rows met by S, and the same for the
/// complement. Returns violation count over random sets.
pub fn gadget_row_claim_violations(w: &GadgetInstance, samples: usize, seed: u64) -> usize {
    let g = &w.graph;
    let n = g.vertex_count();
    let gamma = w.side;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = 0;
    for _ in 0..samples {
        let density: f64 = rng.gen();
        let mask: Vec<bool> = (0..n).map(|_| rng.gen::<f64>() < density).collect();
        let side: Vec<usize> = (0..n).filter(|&v| mask[v]).collect();
        let mut rows_s = vec![false; gamma];
        let mut cols_s = vec![false; gamma];
        let mut rows_c = vec![false; gamma];
        let mut cols_c = vec![false; gamma];
        for v in 0..n {
            let (row, col) = (v / gamma, v % gamma);
            if mask[v] {
                rows_s[row] = true;
                cols_s[col] = true;
            } else {
                rows_c[row] = true;
                cols_c[col] = true;
            }
        }
        let count = |bits: &[bool]| bits.iter().filter(|&&b| b).count();
        let bound = gamma
            .min(count(&cols_s) + 2 * count(&rows_s))
            .min(count(&cols_c) + 2 * count(&rows_c));
        if g.cut_degree(&side) < bound {
            violations += 1;
        }
    }
    violations
}

/// All balanced assignments of out-degrees {1, 2} to the terminals.
pub fn balanced_terminal_mappings(w: &GadgetInstance) -> Vec<Vec<(usize, usize)>> {
    let terminals: Vec<usize> = w.x.iter().chain(w.y.iter()).copied().collect();
    let t = terminals.len();
    assert_eq!(t % 2, 0);
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    combos(t, t / 2, 0, &mut chosen, &mut |ones: &[usize]| {
        let mapping: Vec<(usize, usize)> = terminals
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, if ones.contains(&i) { 1 } else { 2 }))
            .collect();
        out.push(mapping);
    });
    out
}

fn combos(n: usize, k: usize, from: usize, chosen: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    if chosen.len() == k {
        emit(chosen);
        return;
    }
    for i in from..n {
        chosen.push(i);
        combos(n, k, i + 1, chosen, emit);
        chosen.pop();
    }
}

/// Property (6) for one balanced mapping: the prescribed orientation exists,
/// matches the extended out-degree target, and attains
/// λ⃗(u,v) = min(d⁺(u), d⁻(v)). Pairs are checked exhaustively unless a
/// budget limits them to a seeded sample. Returns violation count.
pub fn gadget_property6_violations(
    w: &GadgetInstance,
    mapping: &[(usize, usize)],
    pair_budget: Option<usize>,
    seed: u64,
) -> usize {
    let g = &w.graph;
    let n = g.vertex_count();
    let phi = gadget_outdegree_target(w, mapping).unwrap();
    let o = match tac_orient_core::orient_with_outdegrees(g, &phi) {
        DegreePrescription::Oriented(o) => o,
        other => panic!("balanced mapping must be feasible, got {other:?}"),
    };
    let d = o.to_digraph(g);
    let mut out_deg = vec![0usize; n];
    let mut in_deg = vec![0usize; n];
    for &(t, h) in d.arcs() {
        out_deg[t] += 1;
        in_deg[h] += 1;
    }
    let mut violations = 0;
    for v in 0..n {
        if out_deg[v] != phi[v] {
            violations += 1;
        }
    }
    let pairs: Vec<(usize, usize)> = match pair_budget {
        None => {
            let mut all = Vec::with_capacity(n * (n - 1));
            for u in 0..n {
                for v in 0..n {
                    if u != v {
                        all.push((u, v));
                    }
                }
            }
            all
        }
        Some(budget) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..budget)
                .map(|_| {
                    let u = rng.gen_range(0..n);
                    let mut v = rng.gen_range(0..n - 1);
                    if v >= u {
                        v += 1;
                    }
                    (u, v)
                })
                .collect()
        }
    };
    for (u, v) in pairs {
        let lam = tac_orient_core::local_arc_connectivity(&d, u, v)
            .unwrap()
            .value;
        if lam != out_deg[u].min(in_deg[v]) as u64 {
            violations += 1;
        }
    }
    violations
}
