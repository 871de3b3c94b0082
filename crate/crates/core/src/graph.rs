//! Colored simple graphs, per-vertex color tuples and the kaleidoscope verifier.
//!
//! Vertices are 1-based ids `1..=n` and colors are `1..=k`. Every edge carries
//! exactly one color; the color classes are derived from the edge map and are
//! never stored separately.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = usize;
pub type Color = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex pair ({0}, {1}) appears more than once")]
    DuplicateEdge(Vertex, Vertex),
    #[error("color {0} is outside the palette")]
    ColorOutOfRange(Color),
    #[error("vertex {0} is outside 1..={1}")]
    VertexOutOfRange(Vertex, usize),
    #[error("graph needs at least one vertex and one color (got n={n}, k={k})")]
    EmptyGraph { n: usize, k: usize },
    #[error("color subset must be nonempty and free of repeats")]
    BadColorSubset,
    #[error("degree {0} is below 3")]
    DegreeTooSmall(usize),
}

/// A simple undirected graph together with an edge coloring over `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    n: usize,
    k: usize,
    edges: BTreeMap<(Vertex, Vertex), Color>,
}

impl ColoredGraph {
    /// Builds a graph from an edge list in any order and orientation.
    pub fn new(
        n: usize,
        k: usize,
        edges: impl IntoIterator<Item = (Vertex, Vertex, Color)>,
    ) -> Result<Self, GraphError> {
        if n == 0 || k == 0 {
            return Err(GraphError::EmptyGraph { n, k });
        }
        let mut map = BTreeMap::new();
        for (u, v, c) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for x in [u, v] {
                if x == 0 || x > n {
                    return Err(GraphError::VertexOutOfRange(x, n));
                }
            }
            if c == 0 || c > k {
                return Err(GraphError::ColorOutOfRange(c));
            }
            let key = (u.min(v), u.max(v));
            if map.insert(key, c).is_some() {
                return Err(GraphError::DuplicateEdge(key.0, key.1));
            }
        }
        Ok(ColoredGraph { n, k, edges: map })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical `(u, v, color)` triples with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex, Color)> + '_ {
        self.edges.iter().map(|(&(u, v), &c)| (u, v, c))
    }

    pub fn color(&self, u: Vertex, v: Vertex) -> Option<Color> {
        self.edges.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<Vertex> {
        1..=self.n
    }

    /// Edges of one color, ascending.
    pub fn color_class(&self, color: Color) -> Vec<(Vertex, Vertex)> {
        self.edges
            .iter()
            .filter(|&(_, &c)| c == color)
            .map(|(&e, _)| e)
            .collect()
    }

    /// All color classes `W_1..W_k`, indexed from color 1.
    pub fn color_classes(&self) -> BTreeMap<Color, Vec<(Vertex, Vertex)>> {
        let mut classes: BTreeMap<Color, Vec<_>> = (1..=self.k).map(|c| (c, Vec::new())).collect();
        for (&e, &c) in &self.edges {
            classes.get_mut(&c).expect("color in palette").push(e);
        }
        classes
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges
            .keys()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Color count vectors for every vertex at once; index 0 is vertex 1.
    pub fn multiset_colors(&self) -> Vec<MultisetColor> {
        let mut counts = vec![vec![0usize; self.k]; self.n];
        for (&(u, v), &c) in &self.edges {
            counts[u - 1][c - 1] += 1;
            counts[v - 1][c - 1] += 1;
        }
        counts.into_iter().map(MultisetColor).collect()
    }

    pub fn multiset_color(&self, v: Vertex) -> Result<MultisetColor, GraphError> {
        self.check_vertex(v)?;
        let mut counts = vec![0usize; self.k];
        for (&(a, b), &c) in &self.edges {
            if a == v || b == v {
                counts[c - 1] += 1;
            }
        }
        Ok(MultisetColor(counts))
    }

    /// Incident-edge counts at `v` for the colors in `colors`, in that order.
    pub fn s_tuple(&self, v: Vertex, colors: &[Color]) -> Result<STuple, GraphError> {
        if colors.is_empty() {
            return Err(GraphError::BadColorSubset);
        }
        for (i, &c) in colors.iter().enumerate() {
            if c == 0 || c > self.k {
                return Err(GraphError::ColorOutOfRange(c));
            }
            if colors[..i].contains(&c) {
                return Err(GraphError::BadColorSubset);
            }
        }
        let full = self.multiset_color(v)?;
        let counts = colors.iter().map(|&c| full.0[c - 1]).collect();
        Ok(STuple {
            colors: colors.to_vec(),
            counts,
        })
    }

    /// Same edges with colors passed through `f`; the new palette is `1..=k`.
    pub fn recolor(&self, k: usize, f: impl Fn(Color) -> Color) -> Result<Self, GraphError> {
        ColoredGraph::new(self.n, k, self.edges().map(|(u, v, c)| (u, v, f(c))))
    }

    /// Same coloring with vertex `v` renamed to `perm[v - 1]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Self, GraphError> {
        ColoredGraph::new(
            self.n,
            self.k,
            self.edges().map(|(u, v, c)| (perm[u - 1], perm[v - 1], c)),
        )
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v == 0 || v > self.n {
            Err(GraphError::VertexOutOfRange(v, self.n))
        } else {
            Ok(())
        }
    }
}

/// Convenience wrapper mirroring [`ColoredGraph::new`].
pub fn build_graph(
    n: usize,
    k: usize,
    edges: impl IntoIterator<Item = (Vertex, Vertex, Color)>,
) -> Result<ColoredGraph, GraphError> {
    ColoredGraph::new(n, k, edges)
}

/// The ordered tuple `(a_1, ..., a_k)` of incident edge counts per color.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultisetColor(pub Vec<usize>);

impl MultisetColor {
    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for MultisetColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// Counts restricted to an ordered color subset.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct STuple {
    pub colors: Vec<Color>,
    pub counts: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct VerificationReport {
    pub valid: bool,
    pub regular_degree: Option<usize>,
    /// `(vertex, missing color)`
    pub coverage_failures: Vec<(Vertex, Color)>,
    /// Vertex pairs `u < v` with identical multiset-colors.
    pub duplicate_pairs: Vec<(Vertex, Vertex)>,
    pub structural_errors: Vec<String>,
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "valid: {}", self.valid)?;
        match self.regular_degree {
            Some(r) => writeln!(f, "regular degree: {r}")?,
            None => writeln!(f, "regular degree: none (degrees differ)")?,
        }
        for (v, c) in &self.coverage_failures {
            writeln!(f, "coverage: vertex {v} misses color {c}")?;
        }
        for (u, v) in &self.duplicate_pairs {
            writeln!(f, "duplicate: vertices {u} and {v} share a multiset-color")?;
        }
        for msg in &self.structural_errors {
            writeln!(f, "structure: {msg}")?;
        }
        Ok(())
    }
}

/// Checks every kaleidoscope condition and reports all violations.
pub fn verify_kaleidoscope(g: &ColoredGraph) -> VerificationReport {
    let tuples = g.multiset_colors();

    let mut coverage_failures = Vec::new();
    for (i, t) in tuples.iter().enumerate() {
        for (c, &a) in t.counts().iter().enumerate() {
            if a == 0 {
                coverage_failures.push((i + 1, c + 1));
            }
        }
    }

    let mut groups: HashMap<&MultisetColor, Vec<Vertex>> = HashMap::new();
    for (i, t) in tuples.iter().enumerate() {
        groups.entry(t).or_default().push(i + 1);
    }
    let mut duplicate_pairs = Vec::new();
    for members in groups.values().filter(|m| m.len() > 1) {
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                duplicate_pairs.push((u, v));
            }
        }
    }
    duplicate_pairs.sort_unstable();

    let first = tuples[0].degree();
    let regular_degree = tuples.iter().all(|t| t.degree() == first).then_some(first);

    let mut structural_errors = Vec::new();
    if regular_degree.is_none() {
        structural_errors.push("graph is not regular".to_string());
    }

    let valid =
        coverage_failures.is_empty() && duplicate_pairs.is_empty() && structural_errors.is_empty();
    VerificationReport {
        valid,
        regular_degree,
        coverage_failures,
        duplicate_pairs,
        structural_errors,
    }
}

/// Number of triples of positive integers summing to `r`, i.e. `C(r-1, 2)`.
///
/// This bounds the order of any `r`-regular 3-kaleidoscope.
pub fn tuple_count(r: usize) -> Result<u64, GraphError> {
    if r < 3 {
        return Err(GraphError::DegreeTooSmall(r));
    }
    let m = (r - 1) as u64;
    Ok(m * (m - 1) / 2)
}

/// An uncolored simple graph, the input to the search routines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl SimpleGraph {
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, GraphError> {
        // Reuse the colored constructor for validation and canonical order.
        let g = ColoredGraph::new(n, 1, edges.into_iter().map(|(u, v)| (u, v, 1)))?;
        Ok(SimpleGraph {
            n,
            edges: g.edges().map(|(u, v, _)| (u, v)).collect(),
        })
    }

    pub fn complete(n: usize) -> Self {
        SimpleGraph {
            n,
            edges: complete_edges(n).collect(),
        }
    }

    /// `K_{a,b}` with parts `1..=a` and `a+1..=a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        SimpleGraph {
            n: a + b,
            edges: (1..=a)
                .flat_map(|u| (a + 1..=a + b).map(move |v| (u, v)))
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u - 1] += 1;
            deg[v - 1] += 1;
        }
        deg
    }

    pub fn regular_degree(&self) -> Option<usize> {
        let deg = self.degrees();
        let first = *deg.first()?;
        deg.iter().all(|&d| d == first).then_some(first)
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * (self.n - 1) / 2
    }
}

/// Edges of the complete graph on `1..=n` with a single color.
pub fn complete_edges(n: usize) -> impl Iterator<Item = (Vertex, Vertex)> {
    (1..=n).flat_map(move |u| (u + 1..=n).map(move |v| (u, v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_graph() {
        let g = build_graph(2, 1, [(1, 2, 1)]).unwrap();
        assert_eq!(g.color_class(1), vec![(1, 2)]);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn reversed_duplicate_is_rejected() {
        let err = build_graph(3, 2, [(1, 2, 1), (2, 1, 2)]).unwrap_err();
        assert_eq!(err, GraphError::DuplicateEdge(1, 2));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(build_graph(3, 2, [(2, 2, 1)]), Err(GraphError::SelfLoop(2)));
        assert_eq!(
            build_graph(3, 2, [(1, 2, 3)]),
            Err(GraphError::ColorOutOfRange(3))
        );
        assert_eq!(
            build_graph(3, 2, [(1, 2, 0)]),
            Err(GraphError::ColorOutOfRange(0))
        );
        assert_eq!(
            build_graph(3, 2, [(1, 4, 1)]),
            Err(GraphError::VertexOutOfRange(4, 3))
        );
        assert!(matches!(
            build_graph(0, 1, []),
            Err(GraphError::EmptyGraph { .. })
        ));
    }

    #[test]
    fn input_order_does_not_matter() {
        let a = build_graph(3, 2, [(1, 2, 1), (2, 3, 2), (1, 3, 2)]).unwrap();
        let b = build_graph(3, 2, [(3, 1, 2), (3, 2, 2), (2, 1, 1)]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn s_tuple_single_color() {
        let g = build_graph(4, 2, [(1, 2, 1), (1, 3, 1), (1, 4, 1), (2, 3, 2)]).unwrap();
        assert_eq!(g.s_tuple(1, &[1]).unwrap().counts, vec![3]);
        assert_eq!(g.s_tuple(2, &[2, 1]).unwrap().counts, vec![1, 1]);
        assert_eq!(g.s_tuple(9, &[1]), Err(GraphError::VertexOutOfRange(9, 4)));
        assert_eq!(g.s_tuple(1, &[3]), Err(GraphError::ColorOutOfRange(3)));
        assert_eq!(g.s_tuple(1, &[]), Err(GraphError::BadColorSubset));
        assert_eq!(g.s_tuple(1, &[1, 1]), Err(GraphError::BadColorSubset));
    }

    #[test]
    fn monochrome_k4_misses_two_colors_everywhere() {
        let g = build_graph(4, 3, complete_edges(4).map(|(u, v)| (u, v, 1))).unwrap();
        let report = verify_kaleidoscope(&g);
        assert!(!report.valid);
        assert_eq!(report.regular_degree, Some(3));
        let expected: Vec<_> = (1..=4).flat_map(|v| [(v, 2), (v, 3)]).collect();
        assert_eq!(report.coverage_failures, expected);
        assert_eq!(report.duplicate_pairs.len(), 6);
    }

    #[test]
    fn every_two_coloring_of_k4_fails() {
        let pairs: Vec<_> = complete_edges(4).collect();
        for mask in 0u32..64 {
            let g = build_graph(
                4,
                2,
                pairs
                    .iter()
                    .enumerate()
                    .map(|(i, &(u, v))| (u, v, 1 + ((mask >> i) & 1) as usize)),
            )
            .unwrap();
            let report = verify_kaleidoscope(&g);
            assert!(!report.valid);
            assert!(!report.duplicate_pairs.is_empty() || !report.coverage_failures.is_empty());
        }
    }

    #[test]
    fn irregular_graph_is_flagged() {
        let g = build_graph(3, 1, [(1, 2, 1)]).unwrap();
        let report = verify_kaleidoscope(&g);
        assert_eq!(report.regular_degree, None);
        assert!(!report.valid);
        assert_eq!(report.structural_errors.len(), 1);
    }

    #[test]
    fn tuple_count_small_values() {
        assert_eq!(tuple_count(3), Ok(1));
        assert_eq!(tuple_count(5), Ok(6));
        assert_eq!(tuple_count(2), Err(GraphError::DegreeTooSmall(2)));
        let brute = (1..7)
            .flat_map(|a| (1..7).map(move |b| (a, b)))
            .filter(|&(a, b)| a + b < 7)
            .count();
        assert_eq!(tuple_count(7), Ok(brute as u64));
        assert_eq!(brute, 15);
    }
}
