use dynchrome::coloring::{assert_bipartite, bad_partition, bad_vertices, is_dynamic, is_proper, Color, Coloring};
use dynchrome::constructions::canonical_form;
use dynchrome::dimacs::{emit_dimacs, parse_dimacs};
use dynchrome::harness::color_graph;
use dynchrome::pipelines::{Algorithm, PipelineConfig};
use dynchrome::repair::{lemma6_fresh_color_repair, lemma8_normalize};
use dynchrome::Graph;
use proptest::prelude::*;

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Greedy proper coloring in `order`, each vertex taking the allowed color
/// selected by `picks`.
fn proper_coloring(g: &Graph, order: &[usize], picks: &[usize]) -> Coloring {
    let k = g.max_degree() as Color + 2;
    let mut colors = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        let allowed: Vec<Color> = (1..=k)
            .filter(|&c| g.neighbors(v).iter().all(|&u| colors[u] != c))
            .collect();
        colors[v] = allowed[picks[i] % allowed.len()];
    }
    Coloring::new(colors).unwrap()
}

fn instance() -> impl Strategy<Value = (Graph, Coloring)> {
    (2usize..13).prop_flat_map(|n| {
        (
            proptest::collection::vec(proptest::bool::weighted(0.35), n * (n - 1) / 2),
            Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
            proptest::collection::vec(any::<usize>(), n),
        )
            .prop_map(move |(bits, order, picks)| {
                let g = graph_from_bits(n, &bits);
                let c = proper_coloring(&g, &order, &picks);
                (g, c)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn fresh_repair_adds_at_most_one_color_per_bad_vertex((g, c) in instance()) {
        let bad = bad_vertices(&g, &c).len();
        let out = lemma6_fresh_color_repair(&g, &c).unwrap();
        prop_assert!(is_dynamic(&g, &out));
        prop_assert!(out.count_colors() <= c.count_colors() + bad);
    }

    #[test]
    fn bad_vertices_induce_a_bipartite_graph((g, c) in instance()) {
        let bp = bad_partition(&g, &c).unwrap();
        let (h, _) = g.induced_subgraph(&bp.bad).unwrap();
        prop_assert!(assert_bipartite(&h).is_ok());
        prop_assert!(bp.isolated_bad.iter().all(|v| g.neighbors(v).iter().all(|&u| !bp.bad.contains(u))));
    }

    #[test]
    fn normalization_leaves_independent_bad_set((g, c) in instance()) {
        let m = c.max_color();
        let out = lemma8_normalize(&g, &c, (m + 1, m + 2, m + 3)).unwrap();
        prop_assert!(is_proper(&g, &out.coloring));
        prop_assert!(g.is_independent(&bad_vertices(&g, &out.coloring)));
        prop_assert!(out.coloring.count_colors() <= c.count_colors() + 3);
    }

    #[test]
    fn pipelines_are_sound((g, _) in instance(), seed in any::<u64>()) {
        for algo in Algorithm::ALL {
            if !algo.applies_to(&g) {
                continue;
            }
            let r = color_graph(algo, &g, &PipelineConfig::new(seed)).unwrap();
            prop_assert!(r.is_proper && r.is_dynamic, "{algo}");
            prop_assert!(r.fallback_used || r.within_bound, "{algo}: {} > {}", r.colors_used, r.bound_formula_value);
            prop_assert!(r.consistency_errors.is_empty(), "{algo}: {:?}", r.consistency_errors);
        }
    }

    #[test]
    fn dimacs_round_trip((g, _) in instance()) {
        prop_assert_eq!(parse_dimacs(&emit_dimacs(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels((g, _) in instance(), perm_seed in any::<u64>()) {
        prop_assume!(g.n() <= 11);
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = perm_seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let relabeled = Graph::from_edges(n, g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap();
        prop_assert_eq!(canonical_form(&g), canonical_form(&relabeled));
    }
}
