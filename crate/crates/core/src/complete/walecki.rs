use crate::graph::Vertex;

use super::CompleteError;

/// `K_m` (m even) split into `m/2 - 1` Hamiltonian cycles and a perfect matching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub m: usize,
    /// Each cycle lists all `m` vertices once, in traversal order.
    pub cycles: Vec<Vec<Vertex>>,
    pub matching: Vec<(Vertex, Vertex)>,
}

/// Rotational zig-zag decomposition with vertex `m` as the hub.
///
/// The other vertices are `Z_{m-1}` shifted by one. Cycle `i` runs
/// hub, `i`, `i+1`, `i-1`, `i+2`, `i-2`, ... and back to the hub; the
/// leftover edges form the matching.
pub fn walecki_decompose(m: usize) -> Result<Decomposition, CompleteError> {
    if m % 2 == 1 {
        return Err(CompleteError::OddOrder(m));
    }
    if m < 4 {
        return Err(CompleteError::OrderTooSmall { order: m, min: 4 });
    }
    let p = m / 2;
    let modulus = m - 1;
    let mut used = vec![vec![false; m + 1]; m + 1];
    let mut cycles = Vec::with_capacity(p - 1);
    for i in 0..p - 1 {
        let mut cycle = Vec::with_capacity(m);
        cycle.push(m);
        cycle.push(i + 1);
        for t in 1..p {
            cycle.push((i + t) % modulus + 1);
            cycle.push((i + modulus - t) % modulus + 1);
        }
        for w in 0..m {
            let (a, b) = (cycle[w], cycle[(w + 1) % m]);
            debug_assert!(!used[a][b], "zig-zag cycles overlap");
            used[a][b] = true;
            used[b][a] = true;
        }
        cycles.push(cycle);
    }
    let matching: Vec<_> = (1..=m)
        .flat_map(|a| (a + 1..=m).map(move |b| (a, b)))
        .filter(|&(a, b)| !used[a][b])
        .collect();
    debug_assert_eq!(matching.len(), p);
    Ok(Decomposition {
        m,
        cycles,
        matching,
    })
}

/// `cycle` rotated to start at its smallest vertex.
pub fn from_lowest(cycle: &[Vertex]) -> Vec<Vertex> {
    let start = cycle
        .iter()
        .enumerate()
        .min_by_key(|&(_, v)| v)
        .map(|(i, _)| i)
        .unwrap_or(0);
    cycle[start..]
        .iter()
        .chain(&cycle[..start])
        .copied()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_and_k6_counts() {
        let d = walecki_decompose(4).unwrap();
        assert_eq!(d.cycles.len(), 1);
        assert_eq!(d.matching.len(), 2);
        let d = walecki_decompose(6).unwrap();
        assert_eq!(d.cycles.len(), 2);
        assert_eq!(d.cycles.len() * 6 + d.matching.len(), 15);
    }

    #[test]
    fn bad_orders() {
        assert_eq!(walecki_decompose(7), Err(CompleteError::OddOrder(7)));
        assert!(matches!(
            walecki_decompose(2),
            Err(CompleteError::OrderTooSmall { .. })
        ));
    }

    #[test]
    fn rotation_to_lowest() {
        assert_eq!(from_lowest(&[4, 2, 1, 3]), vec![1, 3, 4, 2]);
    }
}
