mod common;

use common::{brute_betweenness, brute_closeness, close, naive_kshell, random_graph};
use ddseed::centrality::{betweenness_centrality, closeness_centrality, degree_centrality, kshell_decomposition, pagerank};
use ddseed::diffusion::{arc_count, arc_index, simulate_with_uniforms};
use ddseed::graph::NeighborhoodQueryConfig;
use ddseed::metrics::{cn12_coverage, com_overlap, pearson};
use ddseed::seedselect::{degreedistance_select, sidd_select, SelectionConfig, Theta};
use ddseed::{Graph, View};
use proptest::prelude::*;

fn graph_strategy(max_n: usize, directed: bool) -> impl Strategy<Value = Graph> {
    (2..=max_n, any::<u64>(), 0.0f64..1.0).prop_map(move |(n, seed, density)| {
        let max = n * (n - 1) / if directed { 1 } else { 2 };
        random_graph(n, (density * max as f64) as usize, directed, seed)
    })
}

fn permuted(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<_> = (0..g.node_count())
        .flat_map(|u| g.neighbors(u).iter().map(move |&w| (perm[u], perm[w])))
        .collect();
    Graph::from_edges(g.node_count(), edges, g.is_directed()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn path_measures_match_enumeration(g in graph_strategy(8, false)) {
        prop_assert!(close(betweenness_centrality(&g).scores(), &brute_betweenness(&g), 1e-9));
        prop_assert!(close(closeness_centrality(&g).scores(), &brute_closeness(&g), 1e-12));
    }

    #[test]
    fn directed_path_measures_match_enumeration(g in graph_strategy(7, true)) {
        prop_assert!(close(betweenness_centrality(&g).scores(), &brute_betweenness(&g), 1e-9));
        prop_assert!(close(closeness_centrality(&g).scores(), &brute_closeness(&g), 1e-12));
    }

    #[test]
    fn kshell_matches_pruning(g in graph_strategy(25, false)) {
        let shells = kshell_decomposition(&g);
        prop_assert_eq!(shells.scores(), &naive_kshell(&g)[..]);
    }

    #[test]
    fn kshell_never_exceeds_degree(g in graph_strategy(30, false)) {
        let shells = kshell_decomposition(&g);
        for v in 0..g.node_count() {
            prop_assert!(shells.score(v) <= g.undirected_neighbors(v).len() as f64);
        }
    }

    #[test]
    fn relabelling_permutes_scores(g in graph_strategy(12, false), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut perm: Vec<usize> = (0..g.node_count()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let h = permuted(&g, &perm);
        let pairs = [
            (degree_centrality(&g), degree_centrality(&h)),
            (kshell_decomposition(&g), kshell_decomposition(&h)),
            (betweenness_centrality(&g), betweenness_centrality(&h)),
            (closeness_centrality(&g), closeness_centrality(&h)),
        ];
        for (a, b) in &pairs {
            for v in 0..g.node_count() {
                prop_assert!((a.score(v) - b.score(perm[v])).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn pagerank_is_a_distribution(g in graph_strategy(30, true)) {
        let s = pagerank(&g, 0.85, 1e-10).unwrap();
        let total: f64 = s.scores().iter().sum();
        prop_assert!((total - 1.0).abs() < 1e-8);
        prop_assert!(s.scores().iter().all(|&x| x > 0.0));
    }

    #[test]
    fn shells_partition_the_ball(g in graph_strategy(20, false), v in 0usize..20, r in 1usize..4) {
        let v = v % g.node_count();
        let shells = g.neighborhood(v, &NeighborhoodQueryConfig::new(r, View::Undirected).unwrap()).unwrap();
        let mut seen = std::collections::BTreeSet::new();
        for (i, shell) in shells.iter().enumerate() {
            for &w in shell {
                prop_assert!(seen.insert(w));
                prop_assert_eq!(g.distance(v, w, View::Undirected).unwrap(), Some(i + 1));
            }
        }
        let ball = (0..g.node_count())
            .filter(|&w| matches!(g.distance(v, w, View::Undirected).unwrap(), Some(d) if (1..=r).contains(&d)))
            .count();
        prop_assert_eq!(seen.len(), ball);
    }

    #[test]
    fn degreedistance_seeds_are_spread_out(g in graph_strategy(40, false), d_td in 2usize..5, k in 1usize..10) {
        let s = degreedistance_select(&g, &SelectionConfig { k, d_td, ..Default::default() }).unwrap();
        prop_assert!(s.len() <= k);
        for (i, &a) in s.seeds.iter().enumerate() {
            for &b in &s.seeds[i + 1..] {
                if let Some(d) = g.distance(a, b, View::Undirected).unwrap() {
                    prop_assert!(d >= d_td);
                }
            }
        }
    }

    #[test]
    fn selections_are_prefix_stable(g in graph_strategy(40, false), k in 1usize..8) {
        let cfg = |k| SelectionConfig { k, theta: Theta::Fixed(1), ..Default::default() };
        let small = sidd_select(&g, &cfg(k)).unwrap();
        let large = sidd_select(&g, &cfg(k + 3)).unwrap();
        prop_assert_eq!(&small.seeds[..], &large.seeds[..small.len()]);
    }

    #[test]
    fn spread_is_monotone_in_p_and_seeds(g in graph_strategy(15, true), seed in any::<u64>(), p1 in 0.0f64..1.0, p2 in 0.0f64..1.0) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let uniforms: Vec<f64> = (0..arc_count(&g)).map(|_| rng.random()).collect();
        let (lo, hi) = if p1 <= p2 { (p1, p2) } else { (p2, p1) };
        let a = simulate_with_uniforms(&g, &[0], lo, &uniforms).unwrap();
        let b = simulate_with_uniforms(&g, &[0], hi, &uniforms).unwrap();
        prop_assert!(a.iter().all(|v| b.contains(v)));
        let c = simulate_with_uniforms(&g, &[0, 1], lo, &uniforms).unwrap();
        prop_assert!(a.iter().all(|v| c.contains(v)));
        for (u, w) in common::arcs(&g) {
            prop_assert!(arc_index(&g, u, w).unwrap() < arc_count(&g));
        }
    }

    #[test]
    fn overlap_is_symmetric(a in prop::collection::vec(0usize..30, 10), b in prop::collection::vec(0usize..30, 10), k in 1usize..=10) {
        let ab = com_overlap(&a, &b, k).unwrap().com_percent;
        let ba = com_overlap(&b, &a, k).unwrap().com_percent;
        prop_assert_eq!(ab, ba);
        prop_assert_eq!(com_overlap(&a, &a, k).unwrap().com_percent == 100.0, {
            let mut x = a[..k].to_vec(); x.sort(); x.dedup(); x.len() == k
        });
    }

    #[test]
    fn coverage_bounds_and_order_invariance(g in graph_strategy(30, false), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut seeds: Vec<usize> = (0..g.node_count()).collect();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        seeds.shuffle(&mut rng);
        seeds.truncate(5.min(g.node_count()));
        let r = cn12_coverage(&g, &seeds, seeds.len()).unwrap();
        prop_assert!(r.unique <= r.total);
        prop_assert!((0.0..100.0).contains(&r.cov_percent));
        seeds.reverse();
        prop_assert_eq!(cn12_coverage(&g, &seeds, seeds.len()).unwrap(), r);
    }

    #[test]
    fn pearson_is_affine_invariant(
        xy in prop::collection::vec((-100.0f64..100.0, -100.0f64..100.0), 3..30),
        scale in 0.1f64..10.0,
        shift in -50.0f64..50.0,
    ) {
        let (x, y): (Vec<f64>, Vec<f64>) = xy.into_iter().unzip();
        if let Ok(r) = pearson(&x, &y) {
            let x2: Vec<f64> = x.iter().map(|v| scale * v + shift).collect();
            prop_assert!((pearson(&x2, &y).unwrap() - r).abs() < 1e-9);
            prop_assert!((-1.0..=1.0).contains(&r));
        }
    }
}

#[test]
fn figure_file_loads_with_summary() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/figure1.edges");
    let (g, summary) = ddseed::graph::load_edge_list_file(path, false).unwrap();
    assert_eq!((g.node_count(), g.edge_count()), (19, 22));
    assert_eq!(summary.duplicates_dropped, 1);
    assert_eq!(summary.comment_lines, 1);
}
