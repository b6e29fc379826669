mod common;

use common::*;
use minecc::colorpair::{build_colorpair_network, round_half_integral, solve_lpvc};
use minecc::exact::{brute_force_lpvc, brute_force_minecc};
use minecc::localratio::{local_ratio_ecc, local_ratio_vc, VcGraph};
use minecc::maxflow::{max_flow, min_cut_source_side};
use minecc::report::{verify_report, SolveReport};
use minecc::vcflow::build_vc_network;
use minecc::{
    parse_hypergraph_str, solve, Algorithm, ColoredHypergraph, EdgeDeletionSet, EdgeSpec,
    NodeColoring, SolveOptions,
};
use num_rational::Ratio;
use proptest::prelude::*;

const CAP: usize = 1_000_000;

/// Instances with up to 7 nodes, 9 edges, 4 colors and weights 0–6.
fn instance() -> impl Strategy<Value = ColoredHypergraph> {
    (1usize..=7, 1u32..=4).prop_flat_map(|(n, k)| {
        let edge = (
            1..=k,
            0u64..=6,
            proptest::sample::subsequence((0..n).collect::<Vec<_>>(), 1..=n.min(4)),
        )
            .prop_map(|(c, w, nodes)| EdgeSpec::new(c, w, nodes));
        proptest::collection::vec(edge, 0..=9)
            .prop_map(move |specs| ColoredHypergraph::new(n, k, specs).unwrap())
    })
}

fn coloring_for(h: &ColoredHypergraph) -> impl Strategy<Value = Vec<u32>> {
    proptest::collection::vec(1..=h.color_count().max(1), h.node_count())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn unsatisfied_weight_matches_edge_scan(
        (h, c) in instance().prop_flat_map(|h| { let c = coloring_for(&h); (Just(h), c) })
    ) {
        let coloring = NodeColoring::new(c.clone());
        prop_assert_eq!(h.unsatisfied_weight(&coloring), naive_unsatisfied(&h, &c));
    }

    #[test]
    fn bad_pairs_match_all_pairs_scan(h in instance()) {
        let fast: Vec<_> = h.enumerate_bad_pairs(CAP).unwrap().iter().map(|p| (p.e, p.f)).collect();
        prop_assert_eq!(&fast, &naive_bad_pairs(&h));
        prop_assert_eq!(h.count_bad_pairs(), fast.len() as u64);
    }

    #[test]
    fn canonical_text_round_trips(h in instance()) {
        let text = h.to_canonical_string();
        let back = parse_hypergraph_str(&text).unwrap();
        prop_assert_eq!(back.to_canonical_string(), text);
        prop_assert_eq!(back.edges().len(), h.edges().len());
    }

    #[test]
    fn deletion_coloring_costs_at_most_deleted_weight(h in instance()) {
        let d = local_ratio_ecc(&h).deleted;
        let c = h.coloring_from_deletions(&d).unwrap();
        prop_assert!(h.unsatisfied_weight(&c) <= d.weight(&h));
        for e in 0..h.edge_count() {
            if !d.contains(e) {
                prop_assert!(h.is_satisfied(e, &c));
            }
        }
    }

    #[test]
    fn local_ratio_is_two_approximate(h in instance()) {
        let d = local_ratio_ecc(&h).deleted;
        prop_assert!(h.is_conflict_free(&d));
        let opt = brute_force_minecc(&h).unwrap().value;
        prop_assert!(d.weight(&h) <= 2 * opt);
    }

    #[test]
    fn explicit_local_ratio_is_two_approximate(h in instance()) {
        let g = VcGraph::from_hypergraph(&h, CAP).unwrap();
        let cover = local_ratio_vc(&g);
        prop_assert!(g.is_cover(&cover.cover));
        let d = EdgeDeletionSet::from_ids(h.edge_count(), cover.cover.iter().copied());
        prop_assert!(h.is_conflict_free(&d));
        let opt = brute_force_minecc(&h).unwrap().value;
        prop_assert!(d.weight(&h) <= 2 * opt);
    }

    #[test]
    fn colorpair_lp_is_optimal_and_rounds_within_bound(h in instance()) {
        let (_, lp, _) = solve_lpvc(&h, &SolveOptions::default()).unwrap();
        let (_, brute) = brute_force_lpvc(&h).unwrap();
        prop_assert_eq!(Ratio::new(lp.cut.value, 2), brute);
        prop_assert_eq!(lp.x.objective(&h), brute);
        prop_assert!(lp.x.is_feasible(&h, CAP).unwrap());

        let y = round_half_integral(&h, &lp.x);
        prop_assert!(h.is_conflict_free(&y));
        let k = h.colors_present().max(1) as u128;
        // w(Y) ≤ (2 − 2/k)·cut/2  ⇔  k·w(Y) ≤ (k − 1)·cut
        prop_assert!(k * y.weight(&h) as u128 <= (k - 1) * lp.cut.value);
    }

    #[test]
    fn vc_network_gives_same_lp(h in instance()) {
        let pairs = h.enumerate_bad_pairs(CAP).unwrap();
        let vc = build_vc_network(&h, &pairs);
        prop_assert_eq!(vc.network.node_count(), 2 * h.edge_count() + 2);
        prop_assert_eq!(vc.network.arc_count(), 2 * h.edge_count() + 2 * pairs.len());
        let f = max_flow(&vc.network);
        let (_, lp, _) = solve_lpvc(&h, &SolveOptions::default()).unwrap();
        prop_assert_eq!(f.value, lp.cut.value);
    }

    #[test]
    fn colorpair_network_size_formulas(h in instance()) {
        let cp = build_colorpair_network(&h);
        let sum_c: usize = (0..h.node_count()).map(|u| h.colors_at(u).len()).sum();
        let pairs_c: usize = (0..h.node_count())
            .map(|u| { let c = h.colors_at(u).len(); c * c.saturating_sub(1) / 2 })
            .sum();
        let mu: usize = h.edges().iter().map(|e| e.nodes.len()).sum();
        prop_assert_eq!(cp.network.node_count(), 2 + 2 * h.edge_count() + 2 * sum_c);
        prop_assert_eq!(cp.network.arc_count(), 2 * h.edge_count() + 2 * mu + 2 * pairs_c);
    }

    #[test]
    fn exact_oracles_agree(h in instance()) {
        let opt = brute_force_minecc(&h).unwrap();
        prop_assert_eq!(coloring_value(&h, &opt.coloring), opt.value);
        prop_assert_eq!(opt.value, min_conflict_free_deletion(&h));
        let (_, lp) = brute_force_lpvc(&h).unwrap();
        prop_assert!(lp <= Ratio::from_integer(opt.value as u128));
    }

    #[test]
    fn restricting_to_incident_colors_is_lossless(h in instance()) {
        prop_assert_eq!(brute_force_minecc(&h).unwrap().value, minecc_all_colors(&h));
    }

    #[test]
    fn every_report_verifies(h in instance()) {
        for alg in Algorithm::ALL {
            let r = solve(&h, alg, &SolveOptions::default()).unwrap();
            let rep = SolveReport::new(&h, &r, None);
            let v = verify_report(&h, &rep);
            prop_assert!(v.passed(), "{} failed: {:?}", alg, v.failures().collect::<Vec<_>>());
            let back = SolveReport::from_json(&rep.to_json()).unwrap();
            prop_assert!(verify_report(&h, &back).passed());
        }
    }

    #[test]
    fn max_flow_matches_augmenting_paths(seed in any::<u64>()) {
        let net = random_network(seed);
        let f = max_flow(&net);
        prop_assert_eq!(f.value, edmonds_karp(&net));
        let cut = min_cut_source_side(&net, &f);
        prop_assert_eq!(cut.value, f.value);
        prop_assert!(cut.contains(net.source()) && !cut.contains(net.sink()));
        for (i, a) in net.arcs().iter().enumerate() {
            if cut.contains(a.tail) && !cut.contains(a.head) {
                prop_assert_eq!(f.residual.residual_capacity(i), 0);
            }
            if !cut.contains(a.tail) && cut.contains(a.head) {
                prop_assert_eq!(f.residual.flow(i), 0);
            }
        }
    }
}

#[test]
fn generated_instances_are_deterministic() {
    for seed in 0..20 {
        assert_eq!(
            small_instance(seed).to_canonical_string(),
            small_instance(seed).to_canonical_string()
        );
    }
}

#[test]
fn cut_is_deterministic() {
    for seed in 0..50 {
        let net = random_network(seed);
        let a = min_cut_source_side(&net, &max_flow(&net));
        let b = min_cut_source_side(&net, &max_flow(&net));
        assert_eq!(a, b);
    }
}

#[test]
fn vc_flow_work_scales_with_pairs() {
    // One hub node shared by every edge: |𝓑| grows quadratically in |E|.
    let hub = |m: usize| {
        let specs = (0..m)
            .map(|i| EdgeSpec::new(1 + (i % 2) as u32, 1, vec![0, 1 + i]))
            .collect();
        ColoredHypergraph::new(m + 1, 2, specs).unwrap()
    };
    let arcs = |m| {
        let r = solve(&hub(m), Algorithm::VcFlow, &SolveOptions::default()).unwrap();
        (r.work["bad_pairs"], r.work["network_arcs"])
    };
    let (p1, a1) = arcs(40);
    let (p2, a2) = arcs(80);
    assert_eq!(p1, 20 * 20);
    assert_eq!(p2, 40 * 40);
    assert_eq!(a1, 2 * 40 + 2 * p1);
    assert_eq!(a2, 2 * 80 + 2 * p2);
    let cp = solve(&hub(80), Algorithm::ColorPair, &SolveOptions::default()).unwrap();
    assert!(cp.work["network_arcs"] < a2 / 4);
}
