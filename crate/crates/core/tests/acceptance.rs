//! Acceptance suite: one test per release criterion, each printing a
//! PASS line when its assertions hold. Run with
//! `cargo test -p tac-orient-core --test acceptance -- --nocapture`.

mod common;

use tac_orient_core::balance::well_balanced_orientation;
use tac_orient_core::connectivity::{is_well_balanced, local_edge_connectivity, tac};
use tac_orient_core::generators::{
    build_g1_g2, build_oco_instance, gadget, tripled_path_oriented, FsubwboInstance, Label,
    SsubwboInstance, TripledPathOrientation,
};
use tac_orient_core::graph::Multigraph;
use tac_orient_core::reach::max_reach_orientation;
use tac_orient_core::{approx_tac_orientation, brute_force_max_tac, reach_count};

fn binom2(t: u64) -> u64 {
    t * (t - 1) / 2
}

#[test]
fn criterion_1_tightness_family() {
    for t in 2..=50u64 {
        let (g, o1) =
            tripled_path_oriented(t as usize, TripledPathOrientation::Alternating21).unwrap();
        assert_eq!(tac(&o1.to_digraph(&g)), 2 * binom2(t) + (t - 1), "t={t}");
        let (g, o2) =
            tripled_path_oriented(t as usize, TripledPathOrientation::AllForward).unwrap();
        assert_eq!(tac(&o2.to_digraph(&g)), 3 * binom2(t), "t={t}");
    }
    let (g, o1) = tripled_path_oriented(100, TripledPathOrientation::Alternating21).unwrap();
    let (_, o2) = tripled_path_oriented(100, TripledPathOrientation::AllForward).unwrap();
    let t1 = tac(&o1.to_digraph(&g));
    let t2 = tac(&o2.to_digraph(&g));
    assert_eq!((t1, t2), (9999, 14850));
    // the ratio equals 9999/14850 exactly
    assert_eq!(t1 * 14850, t2 * 9999);
    println!("criterion 1 (tightness family, t = 2..=50 and t = 100): PASS");
}

#[test]
fn criterion_2_approximation_guarantee() {
    let mut corpus = common::connected_multigraphs(4, 6);
    corpus.extend(common::random_multigraphs(200, 5, 8, 0x5eed_0002));
    let mut checked = 0;
    for g in &corpus {
        let o = approx_tac_orientation(g).unwrap();
        let approx = tac(&o.to_digraph(g));
        let opt = brute_force_max_tac(g, 20).unwrap().value;
        assert!(
            3 * approx >= 2 * opt,
            "guarantee violated: approx={approx} opt={opt} on\n{}",
            g.to_canonical_string()
        );
        checked += 1;
    }
    println!("criterion 2 (2/3 guarantee on {checked} instances, zero violations): PASS");
}

#[test]
fn criterion_3_well_balanced_certification() {
    let mut corpus = Vec::new();
    {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_0003);
        for _ in 0..200 {
            let n = rng.gen_range(2..=8);
            let m = rng.gen_range(0..=16);
            corpus.push(tac_orient_core::random_multigraph(n, m, rng.gen()).unwrap());
        }
    }
    for t in 2..=10 {
        corpus.push(tac_orient_core::tripled_path(t).unwrap());
    }
    let mut checked = 0;
    for g in &corpus {
        let o = well_balanced_orientation(g).unwrap_or_else(|e| {
            panic!("construction failed ({e}) on\n{}", g.to_canonical_string())
        });
        assert!(
            is_well_balanced(g, &o).is_balanced(),
            "verifier rejected output on\n{}",
            g.to_canonical_string()
        );
        checked += 1;
    }
    println!("criterion 3 (well-balanced construction certified on {checked} graphs): PASS");
}

#[test]
fn criterion_4_gadget_suite() {
    let w = gadget(4, 2).unwrap();
    assert_eq!(w.side, 10);
    assert_eq!(w.graph.vertex_count(), 100);
    assert_eq!(w.graph.edge_count(), 197);
    common::check_gadget_degrees(&w).unwrap();
    assert_eq!(common::gadget_property1_violations(&w), 0);
    let mappings = common::balanced_terminal_mappings(&w);
    assert_eq!(mappings.len(), 20);
    for mapping in &mappings {
        assert_eq!(
            common::gadget_property6_violations(&w, mapping, None, 0),
            0
        );
    }
    assert_eq!(common::gadget_property4_violations(&w, 10_000, 0x5eed_0004), 0);
    assert_eq!(common::gadget_property5_violations(&w, 10_000, 0x5eed_0014), 0);
    assert_eq!(common::gadget_row_claim_violations(&w, 10_000, 0x5eed_0024), 0);
    println!(
        "criterion 4 (gadget (4,2): shape, exhaustive connectivity and mapping \
         properties, 10000 sampled sets each): PASS"
    );
}

#[test]
fn criterion_5_reachability_optimum() {
    // the derived reference values
    let p3 = Multigraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
    let o = max_reach_orientation(&p3);
    assert_eq!(reach_count(&o.to_digraph(&p3)), 3);
    let star = Multigraph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
    let o = max_reach_orientation(&star);
    assert_eq!(reach_count(&o.to_digraph(&star)), 5);

    let mut corpus = common::connected_multigraphs(6, 8);
    for n in 7..=9 {
        corpus.extend(common::unlabeled_trees(n));
    }
    corpus.extend(common::random_connected_multigraphs(300, 9, 8, 0x5eed_0005));
    let mut checked = 0;
    for g in &corpus {
        let o = max_reach_orientation(g);
        let achieved = common::naive_reach_count(&o.to_digraph(g));
        assert_eq!(achieved, reach_count(&o.to_digraph(g)));
        let best = common::brute_force_max_reach(g);
        assert_eq!(
            achieved,
            best,
            "reach gap on\n{}",
            g.to_canonical_string()
        );
        checked += 1;
    }
    println!("criterion 5 (reachability optimum matched on {checked} graphs, zero gaps): PASS");
}

#[test]
fn criterion_6_two_thirds_of_total_undirected_connectivity() {
    let corpus = common::random_two_edge_connected(50, 7, 0x5eed_0006);
    for g in &corpus {
        let o = approx_tac_orientation(g).unwrap();
        let approx = tac(&o.to_digraph(g));
        let total = common::total_undirected_connectivity(g);
        assert!(
            3 * approx >= 2 * total,
            "bound violated: approx={approx} total={total} on\n{}",
            g.to_canonical_string()
        );
    }
    println!("criterion 6 (2/3 of summed local connectivity on 50 2-edge-connected graphs): PASS");
}

fn toy_first_form() -> FsubwboInstance {
    let edges = vec![(0, 1), (0, 1), (0, 1), (0, 2), (0, 2), (0, 2), (1, 2)];
    let g = Multigraph::new(3, edges).unwrap();
    FsubwboInstance::from_parts(
        g,
        vec![Label::Apex, Label::V4, Label::V4],
        vec![3, 4, 4],
    )
}

fn toy_second_form() -> SsubwboInstance {
    let mut edges = vec![(0, 1), (0, 1), (0, 1)];
    for v in [2, 3, 4] {
        for _ in 0..3 {
            edges.push((0, v));
        }
        edges.push((v, 5));
    }
    let g = Multigraph::new(6, edges).unwrap();
    let labels = vec![
        Label::Apex,
        Label::ApexPrime,
        Label::V4,
        Label::V4,
        Label::V4,
        Label::V3,
    ];
    SsubwboInstance::from_labels(g, labels)
}

#[test]
fn criterion_7_hardness_instance_plumbing() {
    // gadget splice: connectivity from the apex equals the degree, everywhere
    let out = build_g1_g2(&toy_first_form()).unwrap();
    let g1 = &out.g1;
    for v in 0..g1.vertex_count() {
        if v == out.apex {
            continue;
        }
        let lam = local_edge_connectivity(g1, out.apex, v).unwrap().value;
        assert_eq!(
            lam,
            g1.degree(v) as u64,
            "splice broke connectivity at vertex {v}"
        );
    }
    // the extended instance satisfies the second form's conditions
    out.second.validate().unwrap();

    // target arithmetic: closed form versus a per-pair recount
    let inst = toy_second_form();
    let (p, q) = (2u32, 1u32);
    let oco = build_oco_instance(&inst, p, q).unwrap();
    let n = inst.graph.vertex_count() as u128;
    let tube_size = |label: Label| -> u128 {
        match label {
            Label::V4 | Label::Apex | Label::ApexPrime => n.pow(p),
            Label::V3 => n.pow(q),
            Label::V3Prime => 1,
        }
    };
    let mut recount: u128 = 0;
    for v in 0..inst.graph.vertex_count() {
        if matches!(inst.labels[v], Label::V4 | Label::Apex | Label::ApexPrime) {
            let s = tube_size(inst.labels[v]);
            recount += s * (s - 1) / 2 * inst.graph.degree(v) as u128;
        }
    }
    for u in 0..inst.graph.vertex_count() {
        for v in (u + 1)..inst.graph.vertex_count() {
            let important = inst.labels[u] != Label::V3Prime
                && inst.labels[v] != Label::V3Prime
                && !(inst.labels[u] == Label::V3 && inst.labels[v] == Label::V3);
            if important {
                let min_deg = inst.graph.degree(u).min(inst.graph.degree(v)) as u128;
                recount += tube_size(inst.labels[u]) * tube_size(inst.labels[v]) * min_deg;
            }
        }
    }
    assert_eq!(oco.target, recount);
    println!("criterion 7 (reduction structure and target arithmetic): PASS");
}
