//! The three small odd cases `(9,4)`, `(11,4)`, `(11,5)`.
//!
//! `K_9 = K_4 + K_5` and `K_11 = K_5 + K_6`. Inside each part a threshold
//! graph minus one edge is colored 1 and the rest of the part 2, which leaves
//! two pairs of equal-tuple vertices per part. The cross edges are colored by
//! search so those couples split.

use crate::graph::{Color, ColoredGraph, Vertex};
use crate::search::{search_bipartite_completion, SearchBudget};

use super::threshold::threshold_graph;
use super::{CompleteError, Labels};

/// One part: its size, the threshold edge removed, and its label prime.
struct Part {
    size: usize,
    removed: (Vertex, Vertex),
    prime: &'static str,
}

fn part(size: usize) -> Part {
    match size {
        4 => Part {
            size,
            removed: (2, 4),
            prime: "",
        },
        5 => Part {
            size,
            removed: (2, 5),
            prime: "'",
        },
        6 => Part {
            size,
            removed: (3, 6),
            prime: "''",
        },
        _ => unreachable!("only parts of size 4, 5, 6 occur"),
    }
}

pub fn is_special(n: usize, k: usize) -> bool {
    matches!((n, k), (9, 4) | (11, 4) | (11, 5))
}

/// Intra-part coloring of one part: `(u, v, color)` on local ids.
pub fn part_coloring(size: usize) -> Result<Vec<(Vertex, Vertex, Color)>, CompleteError> {
    let p = part(size);
    let trimmed = threshold_graph(p.size)?.without_edge(p.removed.0, p.removed.1)?;
    Ok((1..=size)
        .flat_map(|u| (u + 1..=size).map(move |v| (u, v)))
        .map(|(u, v)| (u, v, if trimmed.contains(&(u, v)) { 1 } else { 2 }))
        .collect())
}

/// Pairs of local vertices in one part with equal `{1,2}`-tuples.
pub fn equal_tuple_couples(size: usize) -> Result<Vec<(Vertex, Vertex)>, CompleteError> {
    let mut ones = vec![0usize; size + 1];
    for (u, v, c) in part_coloring(size)? {
        if c == 1 {
            ones[u] += 1;
            ones[v] += 1;
        }
    }
    let mut couples = Vec::new();
    for u in 1..=size {
        for v in u + 1..=size {
            if ones[u] == ones[v] {
                couples.push((u, v));
            }
        }
    }
    Ok(couples)
}

pub fn special_small(n: usize, k: usize) -> Result<ColoredGraph, CompleteError> {
    Ok(special_small_with_labels(n, k, &SearchBudget::default())?.0)
}

pub(crate) fn special_small_with_labels(
    n: usize,
    k: usize,
    budget: &SearchBudget,
) -> Result<(ColoredGraph, Labels), CompleteError> {
    if !is_special(n, k) {
        return Err(CompleteError::NotASpecialCase { n, k });
    }
    let (a, b) = if n == 9 { (4, 5) } else { (5, 6) };
    let cross_colors: Vec<Color> = (3..=k).collect();

    let mut couples = equal_tuple_couples(a)?;
    couples.extend(
        equal_tuple_couples(b)?
            .into_iter()
            .map(|(u, v)| (a + u, a + v)),
    );

    let outcome = search_bipartite_completion(a, b, &cross_colors, &couples, budget)?;
    let cross = outcome.witness.ok_or(CompleteError::SearchFailed {
        n,
        k,
        status: outcome.status,
    })?;

    let mut edges: Vec<(Vertex, Vertex, Color)> = part_coloring(a)?;
    edges.extend(
        part_coloring(b)?
            .into_iter()
            .map(|(u, v, c)| (a + u, a + v, c)),
    );
    edges.extend(cross.edges());

    let (pa, pb) = (part(a), part(b));
    let labels = (1..=a)
        .map(|i| (i, format!("v{}_{i}", pa.prime)))
        .chain((1..=b).map(|i| (a + i, format!("v{}_{i}", pb.prime))))
        .collect();
    Ok((ColoredGraph::new(n, k, edges)?, labels))
}
