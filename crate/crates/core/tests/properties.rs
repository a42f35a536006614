use proptest::prelude::*;
use relaxcolor::cli::{
    parse_coloring, parse_instance, serialize_coloring, serialize_instance, Instance, InstanceGraph,
};
use relaxcolor::reductions::{augment_with_clique, build_lred_multigraph, collapse_1k_to_12, lred_edge_total};
use relaxcolor::verify::{check_mis_equivalence, oracle_opt};
use relaxcolor::{
    conflict_profile, covered_edges, generalized_cost, is_feasible, solve_exact, solve_greedy, solve_half_approx,
    solve_local_search, solve_r12_structural, ColorScheme, Coloring, CostParams, EdgeSet, Graph, Multigraph, Objective,
    SearchBudget,
};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |mask| {
            let all = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::new(n, all.zip(mask).filter(|(_, keep)| *keep).map(|(e, _)| e)).unwrap()
        })
    })
}

fn graph_with_coloring(max_n: usize, k: usize) -> impl Strategy<Value = (Graph, Coloring)> {
    graph(max_n).prop_flat_map(move |g| {
        let n = g.vertex_count();
        (Just(g), prop::collection::vec(0..k, n).prop_map(Coloring::new))
    })
}

fn scheme() -> impl Strategy<Value = ColorScheme> {
    (1usize..=3).prop_flat_map(|k| (0..=k).prop_map(move |r| ColorScheme::new(r, k).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn report_invariants((g, c) in graph_with_coloring(9, 3)) {
        let report = conflict_profile(&g, &c).unwrap();
        prop_assert_eq!(report.covered + report.conflicts, g.total_edges());
        prop_assert_eq!(report.kappa.iter().sum::<u64>(), 2 * report.conflicts);
        let linear = generalized_cost(&g, &c, CostParams::new(1.0).unwrap()).unwrap();
        prop_assert!((linear - 2.0 * report.conflicts as f64).abs() < 1e-9);
    }

    #[test]
    fn relaxing_a_color_keeps_feasibility((g, c) in graph_with_coloring(7, 3), r in 0usize..3) {
        let tight = ColorScheme::new(r, 3).unwrap();
        let loose = ColorScheme::new(r + 1, 3).unwrap();
        if is_feasible(&g, &c, tight).unwrap() {
            prop_assert!(is_feasible(&g, &c, loose).unwrap());
        }
    }

    #[test]
    fn optimum_grows_with_relaxed_and_total_colors(g in graph(6), r in 0usize..=2) {
        let base = oracle_opt(&g, ColorScheme::new(r, 2).unwrap()).unwrap();
        let more_relaxed = oracle_opt(&g, ColorScheme::new(r.min(2) + usize::from(r < 2), 2).unwrap()).unwrap();
        let more_colors = oracle_opt(&g, ColorScheme::new(r, 3).unwrap()).unwrap();
        prop_assert!(base <= more_relaxed);
        prop_assert!(base <= more_colors);
    }

    #[test]
    fn exact_dominates_and_solutions_recompute(g in graph(8), s in scheme(), seed in any::<u64>()) {
        let exact = solve_exact(&g, s).unwrap();
        let budget = SearchBudget { max_iterations: 5_000, random_seed: seed, restarts: 2 };
        let mut others = vec![solve_greedy(&g, s).unwrap(), solve_local_search(&g, s, Objective::Covered, budget).unwrap()];
        if s.r() >= 2 {
            others.push(relaxcolor::SolveOutcome::Solved(solve_half_approx(&g, s).unwrap()));
        }
        for outcome in std::iter::once(&exact).chain(&others) {
            match outcome.solution() {
                Some(sol) => {
                    prop_assert!(sol.feasible);
                    prop_assert_eq!(covered_edges(&g, &sol.coloring, s).unwrap(), sol.value);
                    prop_assert!(sol.value <= exact.value().unwrap());
                }
                None => prop_assert!(s.r() == 0 && exact.value().is_none()),
            }
        }
    }

    #[test]
    fn structural_matches_exact(g in graph(7)) {
        let s = ColorScheme::new(1, 2).unwrap();
        prop_assert_eq!(Some(solve_r12_structural(&g).unwrap().value), solve_exact(&g, s).unwrap().value());
    }

    #[test]
    fn half_cut_covers_half(g in graph(25), k in 2usize..5) {
        let sol = solve_half_approx(&g, ColorScheme::new(2, k).unwrap()).unwrap();
        prop_assert!(sol.value >= (g.edge_count() as u64).div_ceil(2));
        prop_assert!(sol.coloring.as_slice().iter().all(|&x| x < 2));
    }

    #[test]
    fn local_search_is_deterministic(g in graph(12), s in scheme(), seed in any::<u64>()) {
        let budget = SearchBudget { max_iterations: 2_000, random_seed: seed, restarts: 3 };
        for objective in [Objective::Covered, Objective::Defective, Objective::Generalized(CostParams::new(2.0).unwrap())] {
            prop_assert_eq!(
                solve_local_search(&g, s, objective, budget).unwrap(),
                solve_local_search(&g, s, objective, budget).unwrap()
            );
        }
    }

    #[test]
    fn collapse_is_feasible_and_keeps_a_share(g in graph(7), k in 2usize..5, seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let s = ColorScheme::new(1, k).unwrap();
        let c = relaxcolor::verify::random_feasible_coloring(&g, s, &mut rng).unwrap();
        let out = collapse_1k_to_12(&g, &c, k).unwrap();
        let value = covered_edges(&g, &out, ColorScheme::new(1, 2).unwrap()).unwrap();
        prop_assert!(value * (k as u64 - 1) >= covered_edges(&g, &c, s).unwrap());
    }

    #[test]
    fn construction_sizes(g in graph(8), q in 1usize..20, k in 3usize..7) {
        let n = g.vertex_count();
        let m = g.edge_count();
        prop_assert_eq!(augment_with_clique(&g, q).unwrap().graph.edge_count(), m + q * (q - 1) / 2 + n * q);
        let lm = build_lred_multigraph(&g, k).unwrap();
        prop_assert_eq!(lm.multigraph.vertex_count(), n + k - 2);
        prop_assert_eq!(lm.multigraph.total_edges(), lred_edge_total(m as u64, k as u64));
    }

    #[test]
    fn failing_certificates_replay(g in graph(5), q in 1usize..4) {
        let cert = check_mis_equivalence(&g, q).unwrap();
        prop_assert_eq!(cert.holds, cert.witness.is_none());
        if let Some(w) = cert.witness {
            let replay = check_mis_equivalence(&w.graph.unwrap(), q).unwrap();
            prop_assert!(!replay.holds);
        }
        if q > g.edge_count() {
            prop_assert!(check_mis_equivalence(&g, q).unwrap().holds);
        }
    }

    #[test]
    fn file_round_trips((g, c) in graph_with_coloring(10, 4), s in scheme(), multi in any::<bool>()) {
        let graph = if multi {
            let weighted = g.edges().iter().enumerate().map(|(i, &(u, v))| (u, v, 1 + i as u64 % 3));
            InstanceGraph::Multi(Multigraph::new(g.vertex_count(), weighted).unwrap())
        } else {
            InstanceGraph::Simple(g.clone())
        };
        let inst = Instance { graph, scheme: s };
        prop_assert_eq!(parse_instance(&serialize_instance(&inst)).unwrap(), inst);
        prop_assert_eq!(parse_coloring(&serialize_coloring(&c), g.vertex_count()).unwrap(), c.clone());
        let json = serde_json::to_string(&g).unwrap();
        prop_assert_eq!(serde_json::from_str::<Graph>(&json).unwrap(), g);
        prop_assert_eq!(serde_json::from_str::<Coloring>(&serde_json::to_string(&c).unwrap()).unwrap(), c);
    }
}

#[test]
fn invalid_graph_json_is_rejected() {
    assert!(serde_json::from_str::<Graph>(r#"{"vertex_count":2,"edges":[[0,0]]}"#).is_err());
    assert!(serde_json::from_str::<Multigraph>(r#"{"vertex_count":2,"edges":[[0,1,0]]}"#).is_err());
}
