mod common;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{naive_bounded_flow, naive_profile};
use trifree_core::cut::*;
use trifree_core::graph::{sample_gnp, GnpSpec};
use trifree_core::solve::max_triangle_free;
use trifree_core::{EdgeSet, Graph};

fn instance() -> impl Strategy<Value = (Graph, Cut, f64)> {
    (2usize..=24, 0.0f64..=1.0, any::<u64>(), any::<u64>(), 0.0f64..=1.2).prop_map(
        |(n, density, seed, cut_seed, p)| {
            let g = sample_gnp(GnpSpec::new(n, density, seed).unwrap()).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(cut_seed);
            let labels: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
            (g, Cut::from_labels(&labels), p)
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 300, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn profile_matches_double_loop((g, pi, p) in instance()) {
        let cfg = ParamConfig::default();
        let prof = cut_profile(&g, &pi, &cfg, p).unwrap();
        let naive = naive_profile(&g, &pi, &cfg, p);
        prop_assert_eq!(&prof.x, &naive.x);
        prop_assert_eq!(&prof.t, &naive.t);
        prop_assert_eq!(&prof.q_v, &naive.q_v);
        prop_assert_eq!(&prof.q_e, &naive.q_e);
        prop_assert!(prof.x.iter().all(|x| prof.t.contains(x)));
        prop_assert!(prof.q_v.iter().all(|&(x, y)| prof.in_x(x as usize) || prof.in_x(y as usize)));
        prop_assert!(prof.q_e.iter().all(|&(x, y)| !prof.in_x(x as usize) && !prof.in_x(y as usize)));
        prop_assert!(prof.q_v.iter().all(|q| !prof.q_e.contains(q)));
        prop_assert_eq!(prof.q().len(), prof.q_len());
        prop_assert!(prof.t_minus_x.iter().all(|v| prof.t.contains(v) && !prof.x.contains(v)));
    }

    #[test]
    fn phi_identities((g, pi, _p) in instance(), bits in any::<u64>()) {
        let f = EdgeSet::from_indices(g.edge_count(), (0..g.edge_count()).filter(|i| bits >> (i % 64) & 1 == 1));
        let cross = pi.crossing(&g);
        prop_assert_eq!(phi(&g, &cross, &pi), pi.size(&g));
        let in_a = |i: usize| { let (u, v) = g.edge(i); pi.in_a(u) && pi.in_a(v) };
        let in_b = |i: usize| { let (u, v) = g.edge(i); !pi.in_a(u) && !pi.in_a(v) };
        let fa = f.iter().filter(|&i| in_a(i)).count();
        let fb = f.iter().filter(|&i| in_b(i)).count();
        prop_assert_eq!(phi(&g, &f, &pi) + fb, f.count() + fa);
    }

    #[test]
    fn relabelling_b_preserves_profile((g, pi, p) in instance(), seed in any::<u64>()) {
        let n = g.vertex_count();
        let b: Vec<usize> = pi.side_b().iter().collect();
        let mut shuffled = b.clone();
        shuffled.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let mut perm: Vec<usize> = (0..n).collect();
        for (&from, &to) in b.iter().zip(&shuffled) {
            perm[from] = to;
        }
        let h = Graph::from_edges(n, g.edges().iter().map(|&(u, v)| (perm[u as usize], perm[v as usize]))).unwrap();
        let cfg = ParamConfig::default();
        let x = cut_profile(&g, &pi, &cfg, p).unwrap();
        let y = cut_profile(&h, &pi, &cfg, p).unwrap();
        prop_assert_eq!(x, y);
    }

    #[test]
    fn promotion_with_empty_x_is_identity((g, pi, p) in instance()) {
        let cfg = ParamConfig::default();
        let (star, r) = promote_cut(&g, &pi, &cfg, p).unwrap();
        prop_assert!(r.meets_degree_sum);
        prop_assert_eq!(r.promoted_size, star.size(&g));
        if r.moved.is_empty() {
            prop_assert_eq!(star, pi);
        } else {
            prop_assert!(r.moved.iter().all(|&x| !star.in_a(x as usize)));
        }
    }

    #[test]
    fn extraction_matches_independent_flow(
        nl in 1usize..12, nr in 1usize..12, seed in any::<u64>(), density in 0.05f64..1.0, cap in 1usize..5,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let left: Vec<u32> = (0..nl as u32).collect();
        let right: Vec<u32> = (100..100 + nr as u32).collect();
        let pairs: Vec<(u32, u32)> = left.iter()
            .flat_map(|&x| right.iter().map(move |&y| (x, y)))
            .filter(|_| rng.gen_bool(density))
            .collect();
        let q = BipartitePairs::new(left.clone(), right.clone(), pairs.clone()).unwrap();
        // tau / p = cap exactly.
        let p = 0.125;
        let r = extract_bounded_bipartite(&q, cap as f64 * p, p, 4.0).unwrap();
        prop_assert_eq!(r.degree_cap, cap);
        prop_assert!(r.max_degree <= cap);
        prop_assert!(r.pairs.iter().all(|pr| pairs.contains(pr)));
        prop_assert_eq!(r.pairs.len(), naive_bounded_flow(&left, &right, &pairs, cap));
        prop_assert_eq!(r.pairs.len(), max_flow_value(&q, cap));
    }
}

#[test]
fn sampled_profile_example() {
    let g = sample_gnp(GnpSpec::new(60, 0.5, 13).unwrap()).unwrap();
    let mut order: Vec<usize> = (0..60).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(13));
    let pi = Cut::from_side_a(60, order[..30].iter().copied());
    assert!(pi.is_balanced(0.001));
    let cfg = ParamConfig::default();
    let prof = cut_profile(&g, &pi, &cfg, 0.5).unwrap();
    let naive = naive_profile(&g, &pi, &cfg, 0.5);
    assert_eq!((prof.x, prof.t, prof.q_v, prof.q_e), (naive.x, naive.t, naive.q_v, naive.q_e));
}

#[test]
fn endgame_subgraph_report() {
    let g = sample_gnp(GnpSpec::new(30, 0.45, 2).unwrap()).unwrap();
    let cfg = ParamConfig::default();
    let chain = verify_main_chain(&g, &cfg, 0.45).unwrap();
    assert_eq!(chain.search, CutSearch::HillClimb);
    assert!(chain.t >= chain.b);
    assert_eq!(chain.t, max_triangle_free(&g).unwrap().optimum);
    assert!(chain.t_le_phi);
    assert_eq!(chain.phi_f1, chain.phi_f + 2 * chain.f1_in_q);
    assert_eq!(chain.lemma_2_2.phi, chain.phi_f);
    assert!(chain.lemma_2_2.triangle_free && chain.lemma_2_2.b_side_empty && chain.lemma_2_2.avoids_q);
    assert!(chain.lemma_2_2.crossing_dominates);
}

#[test]
fn lemma_2_3_on_sampled_graph() {
    let g = sample_gnp(GnpSpec::new(40, 0.5, 21).unwrap()).unwrap();
    let cfg = ParamConfig::default();
    let pi = Cut::from_side_a(40, 0..20);
    let prof = cut_profile(&g, &pi, &cfg, 0.5).unwrap();
    let q: Vec<(u32, u32)> = prof.graph_pairs(&g).pairs(&g);
    let r = check_lemma_2_3(&g, &pi, &q, &cfg, 0.5).unwrap();
    if q.is_empty() {
        assert_eq!(r.status, Lemma23Status::EmptyDomain);
    } else {
        assert_eq!(r.status, Lemma23Status::Evaluated);
        assert_eq!(r.bound, pi.size(&g) + 2 * q.len());
        assert!(r.max_cut.unwrap() >= pi.size(&g));
    }
}

#[test]
fn lopsided_promotion_report() {
    let g = sample_gnp(GnpSpec::new(60, 0.5, 8).unwrap()).unwrap();
    // A balanced cut whose A-side holds the 30 lowest-degree vertices into the rest.
    let mut order: Vec<usize> = (0..60).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    let pi = Cut::from_side_a(60, order[..30].iter().copied());
    let (star, r) = promote_cut(&g, &pi, &ParamConfig::default(), 0.5).unwrap();
    assert_eq!(r.gain, star.size(&g) as i64 - pi.size(&g) as i64);
    assert!(r.meets_degree_sum);
    assert_eq!(r.benchmark, r.moved.len() as f64 * 60.0 * 0.5 / 2.0);
}

#[test]
fn chain_on_small_sample() {
    let g = sample_gnp(GnpSpec::new(20, 0.6, 4).unwrap()).unwrap();
    let r = verify_main_chain(&g, &ParamConfig::default(), 0.6).unwrap();
    assert_eq!(r.search, CutSearch::Exhaustive { balanced_only: true });
    assert!(r.balanced && r.t >= r.b);
    assert_eq!(r.chain_holds, r.t <= r.bound && r.bound <= r.b);
}

#[test]
fn diagnostics_on_sample() {
    let g = sample_gnp(GnpSpec::new(200, 0.3, 7).unwrap()).unwrap();
    let r = whp_diagnostics(&g, &ParamConfig::default(), 0.3, &DiagnosticsOptions::default()).unwrap();
    assert_eq!(r.degree_window.evaluated, 200);
    assert_eq!(r.reduced_set_size.evaluated, 100);
    assert!(r.cross_density.skipped == 100);
}

#[test]
fn extraction_from_arbitrary_pairs() {
    let q: Vec<(u32, u32)> = vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 0)];
    let r = extract_from_pairs(&q, 0.2, 0.1, 2.0).unwrap();
    assert_eq!(r.degree_cap, 2);
    assert!(r.max_degree <= 2);
    assert!(r.pairs.len() >= 3);
}
