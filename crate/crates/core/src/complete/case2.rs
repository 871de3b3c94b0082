//! Split constructions: `K_n` as two cliques joined by a complete bipartite
//! graph whose colors separate vertices the clique colorings cannot.

use std::collections::BTreeMap;

use crate::graph::{Color, ColoredGraph, Vertex};

use super::threshold::threshold_graph;
use super::{CompleteError, Labels};

/// Cross coloring of `K_{h,h}` keyed by `(i, j)` for the edge `v_i v'_j`.
pub type CrossColoring = BTreeMap<(usize, usize), Color>;

/// Colors `K_{h,h}` with `{1, 2}` so that `v_i` and `v'_i` get distinct
/// `{1,2}`-tuples for every `i`.
///
/// With `w_1 = v_h`, `w_i = v_{i-1}` and `w'_h = v'_1`, `w'_i = v'_{i+1}`, the
/// edge `w_i w'_j` is color 1 iff `h+1 <= i+j <= 2h-1`. The patch recolors
/// `w'_{h-2} w_h` to 2.
pub fn bipartite_threshold_coloring(
    half: usize,
    k4_patch: bool,
) -> Result<CrossColoring, CompleteError> {
    let h = half;
    if h < 5 {
        return Err(CompleteError::HalfTooSmall(h));
    }
    let w = |i: usize| if i == 1 { h } else { i - 1 };
    let w_prime = |j: usize| if j == h { 1 } else { j + 1 };
    let mut map = CrossColoring::new();
    for i in 1..=h {
        for j in 1..=h {
            let c = if (h + 1..=2 * h - 1).contains(&(i + j)) {
                1
            } else {
                2
            };
            map.insert((w(i), w_prime(j)), c);
        }
    }
    if k4_patch {
        let key = (w(h), w_prime(h - 2));
        debug_assert_eq!(map[&key], 1);
        map.insert(key, 2);
    }
    Ok(map)
}

fn half_labels(
    h: usize,
    offset: Vertex,
    prime: &str,
) -> impl Iterator<Item = (Vertex, String)> + '_ {
    (1..=h).map(move |i| (offset + i, format!("v{prime}_{i}")))
}

/// Even `n`, `5 <= k <= n/2 - 1`: both halves get the same `(k-2)`-coloring
/// shifted to colors `3..=k`.
pub(crate) fn even_general(
    n: usize,
    k: usize,
    half_coloring: &ColoredGraph,
) -> Result<(ColoredGraph, Labels), CompleteError> {
    let h = n / 2;
    debug_assert_eq!(half_coloring.n(), h);
    debug_assert_eq!(half_coloring.k(), k - 2);
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for (u, v, c) in half_coloring.edges() {
        edges.push((u, v, c + 2));
        edges.push((h + u, h + v, c + 2));
    }
    for ((i, j), c) in bipartite_threshold_coloring(h, false)? {
        edges.push((i, h + j, c));
    }
    let labels = half_labels(h, 0, "")
        .chain(half_labels(h, h, "'"))
        .collect();
    Ok((ColoredGraph::new(n, k, edges)?, labels))
}

/// Even `n >= 10`, `k = 4`: each half is a trimmed threshold graph in color 3
/// with the rest of the clique in color 4; the cross graph uses the patch.
pub(crate) fn even_k4(n: usize) -> Result<(ColoredGraph, Labels), CompleteError> {
    let h = n / 2;
    let f = threshold_graph(h)?;
    let trimmed = f.without_edge(h / 2, h)?;
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for offset in [0, h] {
        for u in 1..=h {
            for v in u + 1..=h {
                let c = if trimmed.contains(&(u, v)) { 3 } else { 4 };
                edges.push((offset + u, offset + v, c));
            }
        }
    }
    for ((i, j), c) in bipartite_threshold_coloring(h, true)? {
        edges.push((i, h + j, c));
    }
    let labels = half_labels(h, 0, "")
        .chain(half_labels(h, h, "'"))
        .collect();
    Ok((ColoredGraph::new(n, 4, edges)?, labels))
}

/// Odd `n >= 13`: halves of sizes `ceil(n/2)` and `floor(n/2)` with their own
/// colorings, joined by cross edges whose colors depend only on `i + j`.
///
/// * `k = 4`: halves are 3-colored with `2..=4`, every cross edge is 1.
/// * `k = 5`: halves are 3-colored with `3..=5`, cross color from `i+j mod 2`.
/// * `k >= 6`: halves are `(k-3)`-colored with `4..=k`, cross color from `i+j mod 3`.
pub(crate) fn odd_split(
    n: usize,
    k: usize,
    big: &ColoredGraph,
    small: &ColoredGraph,
) -> Result<(ColoredGraph, Labels), CompleteError> {
    let b = n.div_ceil(2);
    let s = n / 2;
    debug_assert_eq!((big.n(), small.n()), (b, s));
    let shift = match k {
        4 => 1,
        5 => 2,
        _ => 3,
    };
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for (u, v, c) in big.edges() {
        edges.push((u, v, c + shift));
    }
    for (u, v, c) in small.edges() {
        edges.push((b + u, b + v, c + shift));
    }
    for i in 1..=b {
        for j in 1..=s {
            let c = match k {
                4 => 1,
                5 => 2 - (i + j) % 2,
                _ => match (i + j) % 3 {
                    0 => 3,
                    r => r,
                },
            };
            edges.push((i, b + j, c));
        }
    }
    let labels = half_labels(b, 0, "")
        .chain(half_labels(s, b, "'"))
        .collect();
    Ok((ColoredGraph::new(n, k, edges)?, labels))
}
