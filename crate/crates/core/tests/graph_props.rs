use kaleido::graph::{build_graph, complete_edges, verify_kaleidoscope, ColoredGraph, SimpleGraph};
use proptest::prelude::*;

/// Random colored subgraph of `K_n`: each pair is absent or gets a color.
fn colored_graph() -> impl Strategy<Value = ColoredGraph> {
    (2usize..9, 1usize..5).prop_flat_map(|(n, k)| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(0..=k, pairs).prop_map(move |choice| {
            let edges = complete_edges(n)
                .zip(choice)
                .filter(|&(_, c)| c > 0)
                .map(|((u, v), c)| (u, v, c));
            build_graph(n, k, edges).unwrap()
        })
    })
}

fn shuffled_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..=n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn multiset_sums_to_degree(g in colored_graph()) {
        for v in g.vertices() {
            prop_assert_eq!(g.multiset_color(v).unwrap().degree(), g.degree(v));
        }
    }

    #[test]
    fn per_color_handshake(g in colored_graph()) {
        let tuples = g.multiset_colors();
        for (c, class) in g.color_classes() {
            let total: usize = tuples.iter().map(|t| t.counts()[c - 1]).sum();
            prop_assert_eq!(total, 2 * class.len());
        }
    }

    #[test]
    fn color_classes_partition_edges(g in colored_graph()) {
        let mut all: Vec<_> = g.color_classes().into_values().flatten().collect();
        all.sort_unstable();
        let edges: Vec<_> = g.edges().map(|(u, v, _)| (u, v)).collect();
        prop_assert_eq!(all, edges);
    }

    #[test]
    fn verdict_ignores_edge_order(g in colored_graph(), seed in any::<u64>()) {
        let mut edges: Vec<_> = g.edges().map(|(u, v, c)| if seed % 2 == 0 { (v, u, c) } else { (u, v, c) }).collect();
        let len = edges.len().max(1);
        edges.rotate_left((seed as usize) % len);
        edges.reverse();
        let h = build_graph(g.n(), g.k(), edges).unwrap();
        prop_assert_eq!(&h, &g);
        prop_assert_eq!(verify_kaleidoscope(&h), verify_kaleidoscope(&g));
    }

    #[test]
    fn verdict_ignores_relabeling(
        (g, perm) in colored_graph().prop_flat_map(|g| { let n = g.n(); (Just(g), shuffled_perm(n)) })
    ) {
        let h = g.relabel(&perm).unwrap();
        let a = verify_kaleidoscope(&g);
        let b = verify_kaleidoscope(&h);
        prop_assert_eq!(a.valid, b.valid);
        prop_assert_eq!(a.regular_degree, b.regular_degree);
        prop_assert_eq!(a.coverage_failures.len(), b.coverage_failures.len());
        prop_assert_eq!(a.duplicate_pairs.len(), b.duplicate_pairs.len());
    }

    #[test]
    fn valid_iff_no_failures(g in colored_graph()) {
        let r = verify_kaleidoscope(&g);
        prop_assert_eq!(
            r.valid,
            r.coverage_failures.is_empty() && r.duplicate_pairs.is_empty() && r.structural_errors.is_empty()
        );
    }
}

/// Every labeled regular graph on `n` vertices.
fn regular_graphs(n: usize) -> Vec<SimpleGraph> {
    let pairs: Vec<_> = complete_edges(n).collect();
    let mut out = Vec::new();
    for mask in 1u64..(1 << pairs.len()) {
        let mut deg = vec![0; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                deg[u - 1] += 1;
                deg[v - 1] += 1;
            }
        }
        if deg.iter().all(|&d| d == deg[0]) {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            out.push(SimpleGraph::new(n, edges).unwrap());
        }
    }
    out
}

#[test]
fn regular_graphs_have_no_two_kaleidoscope_up_to_six_vertices() {
    for n in 2..=6 {
        for g in regular_graphs(n) {
            let m = g.edges().len();
            for mask in 0u64..(1 << m) {
                let edges = g
                    .edges()
                    .iter()
                    .enumerate()
                    .map(|(i, &(u, v))| (u, v, 1 + (mask >> i & 1) as usize));
                let colored = build_graph(n, 2, edges).unwrap();
                let report = verify_kaleidoscope(&colored);
                assert!(!report.duplicate_pairs.is_empty(), "n={n} mask={mask:b}");
            }
        }
    }
}

fn random_regular_two_coloring() -> impl Strategy<Value = ColoredGraph> {
    // Circulant graphs are regular; pick a connection set and colors.
    (7usize..=8)
        .prop_flat_map(|n| {
            let half = n / 2;
            (
                Just(n),
                proptest::collection::btree_set(1..=half, 1..=half),
                any::<u64>(),
            )
        })
        .prop_filter_map("odd degree needs even n", |(n, jumps, bits)| {
            let mut edges = std::collections::BTreeSet::new();
            for u in 0..n {
                for &d in &jumps {
                    let v = (u + d) % n;
                    edges.insert((u.min(v) + 1, u.max(v) + 1));
                }
            }
            let edges: Vec<_> = edges
                .into_iter()
                .enumerate()
                .map(|(i, (u, v))| (u, v, 1 + (bits >> (i % 64) & 1) as usize))
                .collect();
            build_graph(n, 2, edges).ok()
        })
}

proptest! {
    #[test]
    fn sampled_regular_graphs_up_to_eight_vertices(g in random_regular_two_coloring()) {
        let report = verify_kaleidoscope(&g);
        prop_assert!(report.regular_degree.is_some());
        prop_assert!(!report.duplicate_pairs.is_empty());
    }
}
