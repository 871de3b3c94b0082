//! `k`-kaleidoscopic colorings of complete graphs `K_n` for `3 <= k <= n-3`.
//!
//! [`classify`] maps `(n, k)` to a construction; [`CompleteBuilder::build`]
//! runs it, recursing into smaller complete graphs where the construction
//! needs colored halves, and verifies the result before returning it.
//!
//! Case precedence, first match wins:
//!
//! | label               | range                                    |
//! |---------------------|------------------------------------------|
//! | `BaseK3`            | `k = 3` (search oracle)                  |
//! | `BaseNminus3`       | `k = n - 3`                              |
//! | `Case1`             | `ceil(n/2) <= k < n - 3` (merge)         |
//! | `SpecialSmall`      | `(9,4)`, `(11,4)`, `(11,5)`              |
//! | `Case2EvenK4`       | `n` even, `k = 4`                        |
//! | `Case2EvenGeneral`  | `n` even, `5 <= k <= n/2 - 1`            |
//! | `Case2OddK4`        | `n` odd, `n >= 13`, `k = 4`              |
//! | `Case2OddK5`        | `n` odd, `n >= 13`, `k = 5`              |
//! | `Case2OddGeneral`   | `n` odd, `n >= 13`, `6 <= k <= ceil(n/2)-1` |

mod case1;
mod case2;
mod special;
mod threshold;
mod walecki;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cache::{BaseCache, CacheError};
use crate::document::TraceSummary;
use crate::graph::{verify_kaleidoscope, ColoredGraph, GraphError, VerificationReport, Vertex};
use crate::search::{SearchBudget, SearchError, SearchStatus};

pub use case1::{base_coloring_n_minus_3, merge_colors, merged_color};
pub use case2::{bipartite_threshold_coloring, CrossColoring};
pub use special::{equal_tuple_couples, is_special, part_coloring, special_small};
pub use threshold::{threshold_graph, ThresholdGraph};
pub use walecki::{from_lowest, walecki_decompose, Decomposition};

/// Vertex id to construction name, e.g. `3 -> "v'_3"`.
pub type Labels = BTreeMap<Vertex, String>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompleteError {
    #[error("k={k} is outside the valid range 3..={} for n={n}", .n.saturating_sub(3))]
    RangeViolation { n: usize, k: usize },
    #[error("order {0} is odd")]
    OddOrder(usize),
    #[error("order {order} is below the minimum {min}")]
    OrderTooSmall { order: usize, min: usize },
    #[error("merge target k={k} is outside ceil(n/2)..=n-3 for n={n}")]
    TargetOutOfRange { n: usize, k: usize },
    #[error("half size {0} is below 5")]
    HalfTooSmall(usize),
    #[error("({n}, {k}) is not one of the special small cases")]
    NotASpecialCase { n: usize, k: usize },
    #[error("edge ({0}, {1}) is not present")]
    MissingEdge(Vertex, Vertex),
    #[error("search for ({n}, {k}) ended with {status:?}")]
    SearchFailed {
        n: usize,
        k: usize,
        status: SearchStatus,
    },
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("construction for ({n}, {k}) failed verification:\n{report}")]
    VerificationFailed {
        n: usize,
        k: usize,
        report: Box<VerificationReport>,
    },
}

impl From<CacheError> for CompleteError {
    fn from(e: CacheError) -> Self {
        match e {
            CacheError::Search(e) => CompleteError::Search(e),
            CacheError::NotFound { n, k, status } => CompleteError::SearchFailed { n, k, status },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseLabel {
    Case1,
    Case2EvenK4,
    Case2EvenGeneral,
    Case2OddK4,
    Case2OddK5,
    Case2OddGeneral,
    SpecialSmall,
    BaseK3,
    BaseNminus3,
}

impl CaseLabel {
    /// Precedence order used by [`classify`].
    pub const ALL: [CaseLabel; 9] = [
        CaseLabel::BaseK3,
        CaseLabel::BaseNminus3,
        CaseLabel::Case1,
        CaseLabel::SpecialSmall,
        CaseLabel::Case2EvenK4,
        CaseLabel::Case2EvenGeneral,
        CaseLabel::Case2OddK4,
        CaseLabel::Case2OddK5,
        CaseLabel::Case2OddGeneral,
    ];

    /// Whether this case's own construction applies to `(n, k)`, ignoring
    /// precedence. Assumes `(n, k)` is in range.
    pub fn admits(self, n: usize, k: usize) -> bool {
        let half_up = n.div_ceil(2);
        let even = n.is_multiple_of(2);
        match self {
            CaseLabel::BaseK3 => k == 3,
            CaseLabel::BaseNminus3 => k + 3 == n,
            CaseLabel::Case1 => half_up <= k && k + 3 <= n,
            CaseLabel::SpecialSmall => is_special(n, k),
            CaseLabel::Case2EvenK4 => even && k == 4 && k < half_up,
            CaseLabel::Case2EvenGeneral => even && 5 <= k && k < half_up,
            CaseLabel::Case2OddK4 => !even && n >= 13 && k == 4,
            CaseLabel::Case2OddK5 => !even && n >= 13 && k == 5,
            CaseLabel::Case2OddGeneral => !even && n >= 13 && 6 <= k && k < half_up,
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub fn in_range(n: usize, k: usize) -> bool {
    k >= 3 && n >= k + 3
}

/// Which construction handles `(n, k)`; no graph is built.
pub fn classify(n: usize, k: usize) -> Result<CaseLabel, CompleteError> {
    if !in_range(n, k) {
        return Err(CompleteError::RangeViolation { n, k });
    }
    CaseLabel::ALL
        .into_iter()
        .find(|c| c.admits(n, k))
        .ok_or(CompleteError::RangeViolation { n, k })
}

/// The smaller complete-graph instances the construction for `(n, k)` needs.
pub fn subproblems(n: usize, k: usize) -> Result<Vec<(usize, usize)>, CompleteError> {
    Ok(match classify(n, k)? {
        CaseLabel::Case2EvenGeneral => vec![(n / 2, k - 2)],
        CaseLabel::Case2OddK4 | CaseLabel::Case2OddK5 => vec![(n.div_ceil(2), 3), (n / 2, 3)],
        CaseLabel::Case2OddGeneral => vec![(n.div_ceil(2), k - 3), (n / 2, k - 3)],
        _ => vec![],
    })
}

/// Audit trail of one construction and its recursive subproblems.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionTrace {
    pub n: usize,
    pub k: usize,
    pub case: CaseLabel,
    pub children: Vec<ConstructionTrace>,
    pub labels: Labels,
}

impl ConstructionTrace {
    pub fn summary(&self) -> TraceSummary {
        TraceSummary {
            case: self.case.to_string(),
            n: self.n,
            k: self.k,
            children: self.children.iter().map(|c| c.summary()).collect(),
        }
    }

    /// e.g. `Case2EvenGeneral → (6,3)`
    pub fn line(&self) -> String {
        if self.children.is_empty() {
            return self.case.to_string();
        }
        let kids: Vec<String> = self
            .children
            .iter()
            .map(|c| format!("({},{})", c.n, c.k))
            .collect();
        format!("{} → {}", self.case, kids.join(", "))
    }

    pub fn depth(&self) -> usize {
        1 + self.children.iter().map(|c| c.depth()).max().unwrap_or(0)
    }
}

/// Runs the case analysis; holds the base-case cache shared across calls.
#[derive(Debug, Default)]
pub struct CompleteBuilder {
    cache: BaseCache,
    budget: SearchBudget,
}

impl CompleteBuilder {
    pub fn new() -> Self {
        CompleteBuilder::default()
    }

    pub fn with_cache(mut self, cache: BaseCache) -> Self {
        self.cache = cache;
        self
    }

    pub fn with_budget(mut self, budget: SearchBudget) -> Self {
        self.budget = budget;
        self
    }

    pub fn cache(&self) -> &BaseCache {
        &self.cache
    }

    pub fn build(
        &self,
        n: usize,
        k: usize,
    ) -> Result<(ColoredGraph, ConstructionTrace), CompleteError> {
        let case = classify(n, k)?;
        let mut children = Vec::new();
        let (g, labels) = match case {
            CaseLabel::BaseK3 => {
                let g = self.cache.get_or_search(n, 3, &self.budget)?;
                (g, Labels::new())
            }
            CaseLabel::BaseNminus3 => case1::base_coloring_with_labels(n)?,
            CaseLabel::Case1 => {
                let (base, labels) = case1::base_coloring_with_labels(n)?;
                (merge_colors(&base, k)?, labels)
            }
            CaseLabel::SpecialSmall => special::special_small_with_labels(n, k, &self.budget)?,
            CaseLabel::Case2EvenK4 => case2::even_k4(n)?,
            CaseLabel::Case2EvenGeneral => {
                let (half, trace) = self.build(n / 2, k - 2)?;
                children.push(trace);
                case2::even_general(n, k, &half)?
            }
            CaseLabel::Case2OddK4 | CaseLabel::Case2OddK5 | CaseLabel::Case2OddGeneral => {
                let sub_k = if k <= 5 { 3 } else { k - 3 };
                let (big, big_trace) = self.build(n.div_ceil(2), sub_k)?;
                let (small, small_trace) = self.build(n / 2, sub_k)?;
                children.push(big_trace);
                children.push(small_trace);
                case2::odd_split(n, k, &big, &small)?
            }
        };
        let report = verify_kaleidoscope(&g);
        if !report.valid || g.k() != k || g.edge_count() != n * (n - 1) / 2 {
            return Err(CompleteError::VerificationFailed {
                n,
                k,
                report: Box::new(report),
            });
        }
        let trace = ConstructionTrace {
            n,
            k,
            case,
            children,
            labels,
        };
        Ok((g, trace))
    }
}

/// Builds a verified `k`-kaleidoscopic coloring of `K_n` with a private
/// in-memory cache.
pub fn construct_complete(
    n: usize,
    k: usize,
) -> Result<(ColoredGraph, ConstructionTrace), CompleteError> {
    CompleteBuilder::new().build(n, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_examples() {
        assert_eq!(classify(6, 3), Ok(CaseLabel::BaseK3));
        assert_eq!(classify(12, 5), Ok(CaseLabel::Case2EvenGeneral));
        assert_eq!(classify(11, 5), Ok(CaseLabel::SpecialSmall));
        assert_eq!(classify(10, 4), Ok(CaseLabel::Case2EvenK4));
        assert_eq!(classify(13, 4), Ok(CaseLabel::Case2OddK4));
        assert_eq!(classify(13, 5), Ok(CaseLabel::Case2OddK5));
        assert_eq!(classify(13, 6), Ok(CaseLabel::Case2OddGeneral));
        assert_eq!(classify(13, 7), Ok(CaseLabel::Case1));
        assert_eq!(classify(13, 10), Ok(CaseLabel::BaseNminus3));
        assert_eq!(
            classify(8, 6),
            Err(CompleteError::RangeViolation { n: 8, k: 6 })
        );
        assert_eq!(
            classify(8, 2),
            Err(CompleteError::RangeViolation { n: 8, k: 2 })
        );
    }

    #[test]
    fn range_message_names_valid_range() {
        let msg = classify(8, 6).unwrap_err().to_string();
        assert!(msg.contains("3..=5"), "{msg}");
    }

    #[test]
    fn twelve_five_recurses_into_six_three() {
        let (g, trace) = construct_complete(12, 5).unwrap();
        assert!(verify_kaleidoscope(&g).valid);
        assert_eq!(trace.case, CaseLabel::Case2EvenGeneral);
        assert_eq!(trace.children.len(), 1);
        assert_eq!((trace.children[0].n, trace.children[0].k), (6, 3));
        assert_eq!(trace.line(), "Case2EvenGeneral → (6,3)");
    }

    #[test]
    fn v1_pair_tuple_at_n12() {
        let (g, trace) = construct_complete(12, 5).unwrap();
        let v1 = *trace
            .labels
            .iter()
            .find(|(_, l)| l.as_str() == "v_1")
            .unwrap()
            .0;
        assert_eq!(g.s_tuple(v1, &[1, 2]).unwrap().counts, vec![2, 4]);
    }

    #[test]
    fn halves_share_upper_tuples_in_even_split() {
        for (n, k) in [(12, 5), (14, 6), (16, 7), (10, 4), (12, 4)] {
            let (g, _) = construct_complete(n, k).unwrap();
            let h = n / 2;
            let upper: Vec<usize> = (3..=k).collect();
            for i in 1..=h {
                assert_eq!(
                    g.s_tuple(i, &upper).unwrap(),
                    g.s_tuple(h + i, &upper).unwrap()
                );
                assert_ne!(
                    g.s_tuple(i, &[1, 2]).unwrap(),
                    g.s_tuple(h + i, &[1, 2]).unwrap()
                );
            }
        }
    }

    #[test]
    fn odd_split_cross_sums_differ() {
        for (n, k) in [(13, 4), (13, 5), (13, 6), (15, 7)] {
            let (g, trace) = construct_complete(n, k).unwrap();
            let cross: Vec<usize> = match trace.case {
                CaseLabel::Case2OddK4 => vec![1],
                CaseLabel::Case2OddK5 => vec![1, 2],
                _ => vec![1, 2, 3],
            };
            let b = n.div_ceil(2);
            for v in 1..=n {
                let sum: usize = g.s_tuple(v, &cross).unwrap().counts.iter().sum();
                assert_eq!(sum, if v <= b { n / 2 } else { b });
            }
        }
    }
}
