use std::collections::BTreeSet;

use kaleido::complete::*;
use kaleido::graph::{complete_edges, verify_kaleidoscope};

/// Partition check done from scratch: every pair of `K_m` is covered once.
fn assert_partition(d: &Decomposition) {
    let m = d.m;
    assert_eq!(d.cycles.len(), m / 2 - 1);
    let mut seen = BTreeSet::new();
    for cycle in &d.cycles {
        let distinct: BTreeSet<_> = cycle.iter().copied().collect();
        assert_eq!(
            distinct,
            (1..=m).collect(),
            "cycle must visit every vertex once"
        );
        for i in 0..m {
            let (a, b) = (cycle[i], cycle[(i + 1) % m]);
            assert!(seen.insert((a.min(b), a.max(b))), "edge ({a},{b}) reused");
        }
    }
    let mut matched = BTreeSet::new();
    for &(a, b) in &d.matching {
        assert!(
            matched.insert(a) && matched.insert(b),
            "matching is not a matching"
        );
        assert!(seen.insert((a.min(b), a.max(b))), "matching edge reused");
    }
    assert_eq!(matched.len(), m);
    let all: BTreeSet<_> = complete_edges(m).collect();
    assert_eq!(seen, all);
}

#[test]
fn walecki_partitions_even_orders() {
    for m in (4..=24).step_by(2) {
        let d = walecki_decompose(m).unwrap();
        assert_partition(&d);
        assert_eq!(d, walecki_decompose(m).unwrap(), "deterministic");
    }
}

#[test]
fn threshold_graph_unique_equal_pair() {
    for m in 2..=50 {
        let g = threshold_graph(m).unwrap();
        let deg = g.degrees();
        assert!(deg.windows(2).all(|w| w[0] <= w[1]), "m={m}");
        let equal: Vec<_> = (1..m).filter(|&i| deg[i - 1] == deg[i]).collect();
        assert_eq!(
            equal,
            vec![m / 2],
            "m={m}: only v_(m/2) and its successor tie"
        );
        assert_eq!(deg[m / 2 - 1], m / 2);
        // Connected: the last vertex is adjacent to all others.
        assert_eq!(deg[m - 1], m - 1);
    }
}

#[test]
fn base_colorings_verify() {
    for n in 6..=20 {
        let g = base_coloring_n_minus_3(n).unwrap();
        let report = verify_kaleidoscope(&g);
        assert!(report.valid, "n={n}: {report}");
        assert_eq!(report.regular_degree, Some(n - 1));
        assert_eq!(g.k(), n - 3);
    }
}

#[test]
fn base_coloring_at_six_has_distinct_triples_summing_to_five() {
    let g = base_coloring_n_minus_3(6).unwrap();
    let tuples: BTreeSet<_> = g.multiset_colors().into_iter().collect();
    assert_eq!(tuples.len(), 6);
    assert!(tuples.iter().all(|t| t.degree() == 5));
}

#[test]
fn merge_preserves_prefix() {
    for n in 6..=20 {
        let base = base_coloring_n_minus_3(n).unwrap();
        for k in n.div_ceil(2)..=n - 3 {
            let merged = merge_colors(&base, k).unwrap();
            assert!(verify_kaleidoscope(&merged).valid, "({n},{k})");
            let before = base.multiset_colors();
            let after = merged.multiset_colors();
            for (b, a) in before.iter().zip(&after) {
                assert_eq!(&b.counts()[..k - 1], &a.counts()[..k - 1]);
                assert_eq!(b.counts()[k - 1..].iter().sum::<usize>(), a.counts()[k - 1]);
            }
        }
    }
}

#[test]
fn special_small_cases() {
    for (n, k) in [(9, 4), (11, 4), (11, 5)] {
        let (g, trace) = construct_complete(n, k).unwrap();
        assert_eq!(trace.case, CaseLabel::SpecialSmall);
        assert!(verify_kaleidoscope(&g).valid);
        // Deterministic: the cross coloring is the first one the search meets.
        assert_eq!(special_small(n, k).unwrap(), g);
    }
    let (g, trace) = construct_complete(9, 4).unwrap();
    let id = |name: &str| {
        *trace
            .labels
            .iter()
            .find(|(_, l)| l.as_str() == name)
            .unwrap()
            .0
    };
    for (a, b) in [
        ("v_1", "v_2"),
        ("v_3", "v_4"),
        ("v'_1", "v'_2"),
        ("v'_4", "v'_5"),
    ] {
        let (a, b) = (id(a), id(b));
        assert_eq!(
            g.s_tuple(a, &[1, 2]).unwrap(),
            g.s_tuple(b, &[1, 2]).unwrap()
        );
        assert_ne!(
            g.s_tuple(a, &[3, 4]).unwrap(),
            g.s_tuple(b, &[3, 4]).unwrap()
        );
    }
}

#[test]
fn soundness_up_to_fourteen() {
    let builder = CompleteBuilder::new();
    for n in 6..=14 {
        for k in 3..=n - 3 {
            let (g, trace) = builder.build(n, k).unwrap();
            let report = verify_kaleidoscope(&g);
            assert!(report.valid, "({n},{k})");
            assert_eq!(report.regular_degree, Some(n - 1));
            assert_eq!(trace.case, classify(n, k).unwrap());
            let kids: Vec<_> = trace.children.iter().map(|c| (c.n, c.k)).collect();
            assert_eq!(kids, subproblems(n, k).unwrap());
        }
    }
}

#[test]
fn out_of_range_pairs_are_rejected() {
    assert_eq!(
        construct_complete(8, 6).unwrap_err(),
        CompleteError::RangeViolation { n: 8, k: 6 }
    );
    assert_eq!(
        construct_complete(5, 3).unwrap_err(),
        CompleteError::RangeViolation { n: 5, k: 3 }
    );
    assert_eq!(
        construct_complete(10, 2).unwrap_err(),
        CompleteError::RangeViolation { n: 10, k: 2 }
    );
}

#[test]
fn dispatcher_total_and_well_founded() {
    for n in 1..=40 {
        for k in 0..=n + 1 {
            let res = classify(n, k);
            if !in_range(n, k) {
                assert!(res.is_err());
                continue;
            }
            let label = res.unwrap();
            let first = CaseLabel::ALL.iter().position(|c| c.admits(n, k)).unwrap();
            assert_eq!(CaseLabel::ALL[first], label);
            for (sub_n, sub_k) in subproblems(n, k).unwrap() {
                assert!(
                    sub_n < n && in_range(sub_n, sub_k),
                    "({n},{k}) -> ({sub_n},{sub_k})"
                );
            }
        }
    }
}
