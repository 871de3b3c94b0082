//! Exact backtracking search for kaleidoscopic colorings of small graphs.
//!
//! Two strategies are available. Complete graphs use a tuple-first search:
//! candidate sets of distinct target tuples are enumerated, then each color
//! class is realized as a degree-constrained subgraph. Everything else, and
//! any search run in exhaustive mode, uses plain edge-order backtracking,
//! which enumerates every coloring not excluded by a sound prune and so
//! certifies nonexistence when it runs dry.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{verify_kaleidoscope, Color, ColoredGraph, SimpleGraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("input graph is not regular")]
    NotRegular,
    #[error("vertex {vertex} has degree {degree}, fewer than the {colors} colors it must see")]
    InfeasibleDegree {
        vertex: Vertex,
        degree: usize,
        colors: usize,
    },
    #[error("only {available} distinct tuples exist but {needed} vertices need one")]
    NoCandidates { available: u64, needed: usize },
    #[error("search limits must be positive")]
    BadBudget,
    #[error("{0}")]
    BadInput(String),
}

/// Resource limits and tie-breaking seed for one search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBudget {
    pub node_limit: u64,
    pub time_limit: Option<Duration>,
    /// Seed 0 is the canonical lexicographic order; other seeds permute it.
    pub seed: u64,
    /// Force plain edge-order enumeration even on complete graphs.
    pub exhaustive: bool,
    /// Node cap for realizing one tuple candidate before moving on.
    pub candidate_node_limit: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            node_limit: 500_000_000,
            time_limit: None,
            seed: 0,
            exhaustive: false,
            candidate_node_limit: 200_000,
        }
    }
}

impl SearchBudget {
    pub fn new(
        node_limit: u64,
        time_limit: Option<Duration>,
        seed: u64,
    ) -> Result<Self, SearchError> {
        let budget = SearchBudget {
            node_limit,
            time_limit,
            seed,
            ..SearchBudget::default()
        };
        budget.validate()?;
        Ok(budget)
    }

    pub fn exhaustive() -> Self {
        SearchBudget {
            exhaustive: true,
            ..SearchBudget::default()
        }
    }

    fn validate(&self) -> Result<(), SearchError> {
        if self.node_limit == 0
            || self.candidate_node_limit == 0
            || self.time_limit.is_some_and(|t| t.is_zero())
        {
            return Err(SearchError::BadBudget);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStatus {
    Found,
    /// The whole space was enumerated: a certificate of nonexistence.
    ExhaustedNoSolution,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub witness: Option<ColoredGraph>,
    pub nodes: u64,
}

struct Meter {
    nodes: u64,
    limit: u64,
    deadline: Option<Instant>,
    exceeded: bool,
}

impl Meter {
    fn new(budget: &SearchBudget) -> Self {
        Meter {
            nodes: 0,
            limit: budget.node_limit,
            deadline: budget.time_limit.map(|t| Instant::now() + t),
            exceeded: false,
        }
    }

    /// Counts one node; false once any limit is hit.
    fn tick(&mut self) -> bool {
        if self.exceeded {
            return false;
        }
        self.nodes += 1;
        if self.nodes > self.limit {
            self.exceeded = true;
        } else if self.nodes.is_multiple_of(4096) {
            if let Some(d) = self.deadline {
                self.exceeded = Instant::now() >= d;
            }
        }
        !self.exceeded
    }
}

fn color_order(k: usize, first: Color, seed: u64) -> Vec<Color> {
    let mut order: Vec<Color> = (first..first + k).collect();
    if seed != 0 {
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    order
}

/// Searches for a `k`-kaleidoscopic coloring of the regular graph `g`.
pub fn search_kaleidoscope(
    g: &SimpleGraph,
    k: usize,
    budget: &SearchBudget,
) -> Result<SearchOutcome, SearchError> {
    budget.validate()?;
    if k == 0 {
        return Err(SearchError::BadInput("palette must be nonempty".into()));
    }
    let r = g.regular_degree().ok_or(SearchError::NotRegular)?;
    if r < k {
        return Err(SearchError::InfeasibleDegree {
            vertex: 1,
            degree: r,
            colors: k,
        });
    }
    let mut meter = Meter::new(budget);
    let outcome = if g.is_complete() && !budget.exhaustive {
        tuple_first(g.n(), r, k, budget, &mut meter)?
    } else {
        let spec = PlainSpec {
            n: g.n(),
            edges: g.edges().to_vec(),
            colors: color_order(k, 1, budget.seed),
            palette: k,
            separate: Separation::AllPairs,
        };
        plain_search(&spec, &mut meter)
    };
    if let Some(w) = &outcome.witness {
        // Never trust the search internals.
        assert!(
            verify_kaleidoscope(w).valid,
            "search produced an invalid witness"
        );
    }
    Ok(outcome)
}

/// Colors `K_{a,b}` (parts `1..=a`, `a+1..=a+b`) from `colors` so every vertex
/// sees every color and each couple differs on its color tuple.
pub fn search_bipartite_completion(
    a: usize,
    b: usize,
    colors: &[Color],
    couples: &[(Vertex, Vertex)],
    budget: &SearchBudget,
) -> Result<SearchOutcome, SearchError> {
    budget.validate()?;
    if a == 0 || b == 0 || colors.is_empty() {
        return Err(SearchError::BadInput("empty part or color set".into()));
    }
    let mut sorted = colors.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != colors.len() || sorted[0] == 0 {
        return Err(SearchError::BadInput(
            "colors must be distinct and positive".into(),
        ));
    }
    if b < colors.len() {
        return Err(SearchError::InfeasibleDegree {
            vertex: 1,
            degree: b,
            colors: colors.len(),
        });
    }
    if a < colors.len() {
        return Err(SearchError::InfeasibleDegree {
            vertex: a + 1,
            degree: a,
            colors: colors.len(),
        });
    }
    for &(u, v) in couples {
        if u == v || u == 0 || v == 0 || u > a + b || v > a + b {
            return Err(SearchError::BadInput(format!("bad couple ({u}, {v})")));
        }
    }
    let palette = *sorted.last().unwrap();
    let mut order = sorted.clone();
    if budget.seed != 0 {
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(budget.seed));
    }
    let spec = PlainSpec {
        n: a + b,
        edges: SimpleGraph::complete_bipartite(a, b).edges().to_vec(),
        colors: order,
        palette,
        separate: Separation::Couples(couples.to_vec()),
    };
    let mut meter = Meter::new(budget);
    let outcome = plain_search(&spec, &mut meter);
    if let Some(w) = &outcome.witness {
        assert!(
            bipartite_witness_ok(w, &sorted, couples),
            "search produced an invalid bipartite witness"
        );
    }
    Ok(outcome)
}

/// Independent re-check of a bipartite completion witness.
pub fn bipartite_witness_ok(
    w: &ColoredGraph,
    colors: &[Color],
    couples: &[(Vertex, Vertex)],
) -> bool {
    let tuples = w.multiset_colors();
    let covered = tuples
        .iter()
        .all(|t| colors.iter().all(|&c| t.counts()[c - 1] > 0));
    let separated = couples.iter().all(|&(u, v)| tuples[u - 1] != tuples[v - 1]);
    covered && separated
}

// ---------------------------------------------------------------------------
// Plain edge-order backtracking

enum Separation {
    AllPairs,
    Couples(Vec<(Vertex, Vertex)>),
}

struct PlainSpec {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    /// Try order; also the set of usable colors.
    colors: Vec<Color>,
    palette: usize,
    separate: Separation,
}

struct PlainState<'a> {
    spec: &'a PlainSpec,
    assigned: Vec<Color>,
    counts: Vec<Vec<usize>>,
    missing: Vec<usize>,
    open_edges: Vec<usize>,
    /// Index of the last edge touching each vertex.
    last_edge: Vec<usize>,
    done: Vec<bool>,
    partner: Vec<Vec<Vertex>>,
}

fn plain_search(spec: &PlainSpec, meter: &mut Meter) -> SearchOutcome {
    let n = spec.n;
    let mut open_edges = vec![0; n + 1];
    let mut last_edge = vec![usize::MAX; n + 1];
    for (i, &(u, v)) in spec.edges.iter().enumerate() {
        open_edges[u] += 1;
        open_edges[v] += 1;
        last_edge[u] = i;
        last_edge[v] = i;
    }
    let mut partner = vec![Vec::new(); n + 1];
    if let Separation::Couples(cs) = &spec.separate {
        for &(u, v) in cs {
            partner[u].push(v);
            partner[v].push(u);
        }
    }
    let mut state = PlainState {
        spec,
        assigned: Vec::with_capacity(spec.edges.len()),
        counts: vec![vec![0; spec.palette + 1]; n + 1],
        missing: vec![spec.colors.len(); n + 1],
        open_edges,
        last_edge,
        done: vec![false; n + 1],
        partner,
    };
    // Isolated vertices are complete from the start.
    for v in 1..=n {
        if state.last_edge[v] == usize::MAX {
            state.done[v] = true;
        }
    }
    if (1..=n).any(|v| state.missing[v] > state.open_edges[v]) {
        return SearchOutcome {
            status: SearchStatus::ExhaustedNoSolution,
            witness: None,
            nodes: 0,
        };
    }
    let found = plain_dfs(&mut state, meter);
    let status = if found {
        SearchStatus::Found
    } else if meter.exceeded {
        SearchStatus::BudgetExceeded
    } else {
        SearchStatus::ExhaustedNoSolution
    };
    let witness = found.then(|| {
        ColoredGraph::new(
            n,
            spec.palette,
            spec.edges
                .iter()
                .zip(&state.assigned)
                .map(|(&(u, v), &c)| (u, v, c)),
        )
        .expect("search edges are valid")
    });
    SearchOutcome {
        status,
        witness,
        nodes: meter.nodes,
    }
}

fn plain_dfs(st: &mut PlainState<'_>, meter: &mut Meter) -> bool {
    let idx = st.assigned.len();
    if idx == st.spec.edges.len() {
        return true;
    }
    let (u, v) = st.spec.edges[idx];
    for ci in 0..st.spec.colors.len() {
        let c = st.spec.colors[ci];
        if !meter.tick() {
            return false;
        }
        st.assigned.push(c);
        for x in [u, v] {
            if st.counts[x][c] == 0 {
                st.missing[x] -= 1;
            }
            st.counts[x][c] += 1;
            st.open_edges[x] -= 1;
        }
        if plain_feasible(st, idx, u, v) && plain_dfs(st, meter) {
            return true;
        }
        for x in [u, v] {
            st.open_edges[x] += 1;
            st.counts[x][c] -= 1;
            if st.counts[x][c] == 0 {
                st.missing[x] += 1;
            }
            st.done[x] = st.done[x] && st.last_edge[x] != idx;
        }
        st.assigned.pop();
        if meter.exceeded {
            return false;
        }
    }
    false
}

fn plain_feasible(st: &mut PlainState<'_>, idx: usize, u: Vertex, v: Vertex) -> bool {
    if st.missing[u] > st.open_edges[u] || st.missing[v] > st.open_edges[v] {
        return false;
    }
    for x in [u, v] {
        if st.last_edge[x] != idx {
            continue;
        }
        let clash = match &st.spec.separate {
            Separation::AllPairs => {
                (1..=st.spec.n).any(|y| y != x && st.done[y] && st.counts[y] == st.counts[x])
            }
            Separation::Couples(_) => st.partner[x]
                .iter()
                .any(|&y| st.done[y] && st.counts[y] == st.counts[x]),
        };
        if clash {
            return false;
        }
        st.done[x] = true;
    }
    true
}

// ---------------------------------------------------------------------------
// Tuple-first search on complete graphs

/// All compositions of `r` into `k` positive parts, in lexicographic order.
pub fn compositions(r: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for a in 1..=left.saturating_sub(parts - 1) {
            cur.push(a);
            rec(left - a, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k >= 1 && r >= k {
        rec(r, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Erdős–Gallai test: is `seq` the degree sequence of a simple graph?
pub fn is_graphic(seq: &[usize]) -> bool {
    let mut d = seq.to_vec();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let total: usize = d.iter().sum();
    if total % 2 == 1 {
        return false;
    }
    let n = d.len();
    let mut prefix = 0;
    for j in 0..n {
        prefix += d[j];
        let kk = j + 1;
        let tail: usize = d[kk..].iter().map(|&x| x.min(kk)).sum();
        if prefix > kk * (kk - 1) + tail {
            return false;
        }
    }
    true
}

/// Candidate sets of `n` distinct target tuples for an `r`-regular graph.
///
/// Tuples are ordered most-balanced first, and sets are produced in
/// lexicographic order of their indices into that pool. A set is skipped
/// unless every color's degree sequence is graphic (which includes even sum).
pub struct TupleCandidates {
    pool: Vec<Vec<usize>>,
    idx: Vec<usize>,
    k: usize,
    started: bool,
    finished: bool,
}

pub fn tuple_target_candidates(
    n: usize,
    r: usize,
    k: usize,
    seed: u64,
) -> Result<TupleCandidates, SearchError> {
    if k == 0 || n == 0 {
        return Err(SearchError::BadInput("n and k must be positive".into()));
    }
    let available = if r >= k {
        binomial(r as u64 - 1, k as u64 - 1)
    } else {
        0
    };
    if available < n as u64 {
        return Err(SearchError::NoCandidates {
            available,
            needed: n,
        });
    }
    let mut pool = compositions(r, k);
    if seed != 0 {
        pool.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    let spread = |t: &Vec<usize>| -> usize { t.iter().map(|&a| (k * a).abs_diff(r).pow(2)).sum() };
    pool.sort_by_key(spread);
    Ok(TupleCandidates {
        pool,
        idx: (0..n).collect(),
        k,
        started: false,
        finished: false,
    })
}

impl TupleCandidates {
    fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            return true;
        }
        let n = self.idx.len();
        let m = self.pool.len();
        let mut i = n;
        while i > 0 {
            i -= 1;
            if self.idx[i] < m - n + i {
                self.idx[i] += 1;
                for j in i + 1..n {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                return true;
            }
        }
        false
    }

    fn admissible(&self) -> bool {
        (0..self.k).all(|c| {
            let seq: Vec<usize> = self.idx.iter().map(|&i| self.pool[i][c]).collect();
            is_graphic(&seq)
        })
    }
}

impl Iterator for TupleCandidates {
    type Item = Vec<Vec<usize>>;

    fn next(&mut self) -> Option<Self::Item> {
        while !self.finished {
            if !self.advance() {
                self.finished = true;
                break;
            }
            if self.admissible() {
                let mut set: Vec<Vec<usize>> =
                    self.idx.iter().map(|&i| self.pool[i].clone()).collect();
                set.sort();
                return Some(set);
            }
        }
        None
    }
}

fn tuple_first(
    n: usize,
    r: usize,
    k: usize,
    budget: &SearchBudget,
    meter: &mut Meter,
) -> Result<SearchOutcome, SearchError> {
    let candidates = match tuple_target_candidates(n, r, k, budget.seed) {
        Ok(c) => c,
        Err(SearchError::NoCandidates { .. }) => {
            return Ok(SearchOutcome {
                status: SearchStatus::ExhaustedNoSolution,
                witness: None,
                nodes: 0,
            })
        }
        Err(e) => return Err(e),
    };
    let mut complete = true;
    for targets in candidates {
        let mut realizer = Realizer::new(n, k, &targets);
        let start = meter.nodes;
        let cap = start.saturating_add(budget.candidate_node_limit);
        match realizer.run(meter, cap) {
            Realized::Yes => {
                let witness =
                    ColoredGraph::new(n, k, realizer.edges()).expect("realized edges are valid");
                return Ok(SearchOutcome {
                    status: SearchStatus::Found,
                    witness: Some(witness),
                    nodes: meter.nodes,
                });
            }
            Realized::No => {}
            Realized::Capped => complete = false,
        }
        if meter.exceeded {
            break;
        }
    }
    let status = if meter.exceeded || !complete {
        SearchStatus::BudgetExceeded
    } else {
        SearchStatus::ExhaustedNoSolution
    };
    Ok(SearchOutcome {
        status,
        witness: None,
        nodes: meter.nodes,
    })
}

enum Realized {
    Yes,
    No,
    Capped,
}

/// Decomposes `K_n` into color classes with prescribed per-vertex degrees.
///
/// Edges are colored vertex by vertex, so after finishing vertex `u` the
/// uncolored edges form the complete graph on `u+1..=n` and every color's
/// residual degree sequence must stay graphic.
struct Realizer {
    n: usize,
    k: usize,
    /// `rem[v][c]`: color-`c` edges vertex `v` still needs.
    rem: Vec<Vec<usize>>,
    /// Edge color of `(u, w)` at `color[u][w]`, 0 if unset.
    color: Vec<Vec<Color>>,
    capped: bool,
}

impl Realizer {
    fn new(n: usize, k: usize, targets: &[Vec<usize>]) -> Self {
        let mut rem = vec![vec![0; k]; n + 1];
        for (v, t) in targets.iter().enumerate() {
            rem[v + 1] = t.clone();
        }
        Realizer {
            n,
            k,
            rem,
            color: vec![vec![0; n + 1]; n + 1],
            capped: false,
        }
    }

    fn run(&mut self, meter: &mut Meter, cap: u64) -> Realized {
        if self.dfs(1, 2, meter, cap) {
            Realized::Yes
        } else if self.capped || meter.exceeded {
            Realized::Capped
        } else {
            Realized::No
        }
    }

    fn edges(&self) -> Vec<(Vertex, Vertex, Color)> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            for w in u + 1..=self.n {
                out.push((u, w, self.color[u][w]));
            }
        }
        out
    }

    fn residual_graphic(&self, from: Vertex) -> bool {
        (0..self.k).all(|c| {
            let seq: Vec<usize> = (from..=self.n).map(|v| self.rem[v][c]).collect();
            is_graphic(&seq)
        })
    }

    fn dfs(&mut self, u: Vertex, w: Vertex, meter: &mut Meter, cap: u64) -> bool {
        if u >= self.n {
            return true;
        }
        if w > self.n {
            debug_assert!(self.rem[u].iter().all(|&x| x == 0));
            if !self.residual_graphic(u + 1) {
                return false;
            }
            return self.dfs(u + 1, u + 2, meter, cap);
        }
        for c in 0..self.k {
            if self.rem[u][c] == 0 || self.rem[w][c] == 0 {
                continue;
            }
            if !meter.tick() {
                return false;
            }
            if meter.nodes > cap {
                self.capped = true;
                return false;
            }
            self.rem[u][c] -= 1;
            self.rem[w][c] -= 1;
            self.color[u][w] = c + 1;
            // Vertex u still needs rem[u][c'] edges among w+1..=n.
            let ok = (0..self.k).all(|cc| {
                let need = self.rem[u][cc];
                need == 0 || (w + 1..=self.n).filter(|&x| self.rem[x][cc] > 0).count() >= need
            });
            if ok && self.dfs(u, w + 1, meter, cap) {
                return true;
            }
            self.color[u][w] = 0;
            self.rem[u][c] += 1;
            self.rem[w][c] += 1;
            if meter.exceeded || self.capped {
                return false;
            }
        }
        false
    }
}

/// Distinct multiset-colors of a witness, as a set, for quick assertions.
pub fn tuple_set(g: &ColoredGraph) -> HashSet<Vec<usize>> {
    g.multiset_colors().into_iter().map(|t| t.0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compositions_count_matches_binomial() {
        for r in 1..12 {
            for k in 1..=r {
                assert_eq!(
                    compositions(r, k).len() as u64,
                    binomial(r as u64 - 1, k as u64 - 1)
                );
            }
        }
    }

    #[test]
    fn graphic_sequences() {
        assert!(is_graphic(&[1, 1]));
        assert!(is_graphic(&[2, 2, 2]));
        assert!(!is_graphic(&[3, 1, 1]));
        assert!(!is_graphic(&[1, 1, 1]));
        assert!(is_graphic(&[]));
        assert!(!is_graphic(&[3, 3, 1, 1]));
    }

    #[test]
    fn k6_three_colors_found() {
        let out =
            search_kaleidoscope(&SimpleGraph::complete(6), 3, &SearchBudget::default()).unwrap();
        assert_eq!(out.status, SearchStatus::Found);
        assert!(verify_kaleidoscope(out.witness.as_ref().unwrap()).valid);
    }

    #[test]
    fn k4_two_colors_impossible() {
        let out =
            search_kaleidoscope(&SimpleGraph::complete(4), 2, &SearchBudget::exhaustive()).unwrap();
        assert_eq!(out.status, SearchStatus::ExhaustedNoSolution);
        let out =
            search_kaleidoscope(&SimpleGraph::complete(4), 2, &SearchBudget::default()).unwrap();
        assert_eq!(out.status, SearchStatus::ExhaustedNoSolution);
    }

    #[test]
    fn irregular_input_rejected() {
        let g = SimpleGraph::new(3, [(1, 2)]).unwrap();
        assert_eq!(
            search_kaleidoscope(&g, 1, &SearchBudget::default()),
            Err(SearchError::NotRegular)
        );
    }

    #[test]
    fn first_candidate_for_k6_is_everything() {
        let mut it = tuple_target_candidates(6, 5, 3, 0).unwrap();
        let first = it.next().unwrap();
        assert_eq!(first, compositions(5, 3));
        assert!(it.next().is_none());
    }

    #[test]
    fn too_few_tuples() {
        assert!(matches!(
            tuple_target_candidates(7, 5, 3, 0),
            Err(SearchError::NoCandidates {
                available: 6,
                needed: 7
            })
        ));
        assert!(matches!(
            tuple_target_candidates(4, 4, 2, 0),
            Err(SearchError::NoCandidates { .. })
        ));
    }

    #[test]
    fn bipartite_trivial_and_infeasible() {
        let out =
            search_bipartite_completion(3, 2, &[1, 2], &[], &SearchBudget::default()).unwrap();
        assert_eq!(out.status, SearchStatus::Found);
        assert!(matches!(
            search_bipartite_completion(1, 5, &[1, 2, 3], &[], &SearchBudget::default()),
            Err(SearchError::InfeasibleDegree { .. })
        ));
    }

    #[test]
    fn zero_budget_rejected() {
        assert_eq!(SearchBudget::new(0, None, 0), Err(SearchError::BadBudget));
    }

    #[test]
    fn tiny_budget_is_not_a_certificate() {
        let budget = SearchBudget::new(10, None, 0).unwrap();
        let out = search_kaleidoscope(&SimpleGraph::complete(20), 3, &budget).unwrap();
        assert_eq!(out.status, SearchStatus::BudgetExceeded);
        assert!(out.witness.is_none());
    }
}
