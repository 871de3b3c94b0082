//! The explicit `(n-3)`-kaleidoscopic coloring of `K_n` and the color merge
//! that turns it into a `k`-coloring for `ceil(n/2) <= k <= n-3`.

use std::collections::BTreeMap;

use crate::graph::{Color, ColoredGraph, Vertex};

use super::walecki::{from_lowest, walecki_decompose};
use super::{CompleteError, Labels};

pub fn base_coloring_n_minus_3(n: usize) -> Result<ColoredGraph, CompleteError> {
    Ok(base_coloring_with_labels(n)?.0)
}

pub(crate) fn base_coloring_with_labels(n: usize) -> Result<(ColoredGraph, Labels), CompleteError> {
    if n < 6 {
        return Err(CompleteError::OrderTooSmall { order: n, min: 6 });
    }
    let mut colors: BTreeMap<(Vertex, Vertex), Color> = BTreeMap::new();
    let mut labels = Labels::new();
    // Rules run in order; later "remaining edges" clauses only fill gaps.
    let mut set = |a: Vertex, b: Vertex, c: Color| {
        colors.insert((a.min(b), a.max(b)), c);
    };

    // Even n: decompose K_n itself. Odd n: decompose K_{n-1} and add hub n.
    let m = if n.is_multiple_of(2) { n } else { n - 1 };
    let dec = walecki_decompose(m)?;
    let (last, rest) = dec.cycles.split_last().expect("m >= 6 gives two cycles");
    for (i, cycle) in rest.iter().enumerate() {
        for w in 0..m {
            let c = if w % 2 == 0 { 2 * i + 1 } else { 2 * i + 2 };
            set(cycle[w], cycle[(w + 1) % m], c);
        }
    }
    // The matching takes the top color of the even-order graph it lives in.
    for &(a, b) in &dec.matching {
        set(a, b, m - 3);
    }
    let order = from_lowest(last);
    for (idx, &v) in order.iter().enumerate() {
        labels.insert(v, format!("v_{}", idx + 1));
    }
    let at = |i: usize| order[(i - 1) % m];

    if n.is_multiple_of(2) {
        for i in 1..=m / 2 {
            set(at(2 * i - 1), at(2 * i), i);
            set(at(2 * i), at(2 * i + 1), i);
        }
    } else {
        let half = m / 2;
        for i in 1..=half {
            set(at(2 * i - 1), at(2 * i), i);
        }
        for w in 1..=m {
            colors
                .entry((at(w).min(at(w + 1)), at(w).max(at(w + 1))))
                .or_insert(n - 3);
        }
        let hub = n;
        labels.insert(hub, "v".to_string());
        for i in 1..=half {
            colors.insert((at(2 * i - 1), hub), i);
        }
        for i in 1..=half.saturating_sub(3) {
            colors.insert((at(2 * i), hub), half + i);
        }
        for u in 1..n {
            colors.entry((u, hub)).or_insert(n - 3);
        }
    }

    let g = ColoredGraph::new(n, n - 3, colors.into_iter().map(|((a, b), c)| (a, b, c)))?;
    Ok((g, labels))
}

/// Keeps colors below `k` and folds `k..=n-3` into `k`.
pub fn merge_colors(g: &ColoredGraph, k: usize) -> Result<ColoredGraph, CompleteError> {
    let n = g.n();
    if n < 6 || g.k() != n - 3 || k < n.div_ceil(2) || k > n - 3 {
        return Err(CompleteError::TargetOutOfRange { n, k });
    }
    Ok(g.recolor(k, |c| merged_color(c, k))?)
}

pub fn merged_color(c: Color, k: usize) -> Color {
    if c < k {
        c
    } else {
        k
    }
}
