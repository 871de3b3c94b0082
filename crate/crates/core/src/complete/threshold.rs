use crate::graph::Vertex;

use super::CompleteError;

/// The connected graph on `v_1..v_m` with `v_i v_j` an edge iff `i + j >= m + 1`.
///
/// Degrees are nondecreasing in the label and exactly one pair of vertices,
/// `v_{m/2}` and `v_{m/2+1}` (floor), shares a degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdGraph {
    m: usize,
    edges: Vec<(Vertex, Vertex)>,
}

pub fn threshold_graph(m: usize) -> Result<ThresholdGraph, CompleteError> {
    if m < 2 {
        return Err(CompleteError::OrderTooSmall { order: m, min: 2 });
    }
    Ok(ThresholdGraph::new(m))
}

impl ThresholdGraph {
    fn new(m: usize) -> Self {
        let edges = (1..=m)
            .flat_map(|i| (i + 1..=m).map(move |j| (i, j)))
            .filter(|&(i, j)| i + j > m)
            .collect();
        ThresholdGraph { m, edges }
    }

    /// Zero or one vertex gives the edgeless graph; used by callers that walk
    /// rows of every length.
    pub(crate) fn possibly_empty(m: usize) -> Self {
        ThresholdGraph::new(m)
    }

    pub fn order(&self) -> usize {
        self.m
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        let key = (a.min(b), a.max(b));
        self.edges.contains(&key)
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.m];
        for &(a, b) in &self.edges {
            deg[a - 1] += 1;
            deg[b - 1] += 1;
        }
        deg
    }

    /// Same graph minus one edge, which must be present.
    pub fn without_edge(
        &self,
        a: Vertex,
        b: Vertex,
    ) -> Result<Vec<(Vertex, Vertex)>, CompleteError> {
        if !self.has_edge(a, b) {
            return Err(CompleteError::MissingEdge(a, b));
        }
        let key = (a.min(b), a.max(b));
        Ok(self.edges.iter().copied().filter(|&e| e != key).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        assert_eq!(threshold_graph(2).unwrap().edges(), &[(1, 2)]);
        let g = threshold_graph(5).unwrap();
        assert_eq!(g.edges(), &[(1, 5), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)]);
        assert_eq!(g.degrees(), vec![1, 2, 2, 3, 4]);
        assert!(matches!(
            threshold_graph(1),
            Err(CompleteError::OrderTooSmall { .. })
        ));
    }

    #[test]
    fn edge_removal_must_hit() {
        let g = threshold_graph(4).unwrap();
        assert_eq!(g.without_edge(4, 2).unwrap(), vec![(1, 4), (2, 3), (3, 4)]);
        assert!(matches!(
            g.without_edge(1, 2),
            Err(CompleteError::MissingEdge(1, 2))
        ));
    }
}
