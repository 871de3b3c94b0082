//! Exhaustive search as a proof: small complete graphs with too few
//! distinct tuples admit no kaleidoscopic coloring.

use kaleido::graph::SimpleGraph;
use kaleido::search::{search_kaleidoscope, SearchBudget, SearchStatus};

fn main() {
    for (n, k) in [(4, 2), (5, 3), (6, 3), (7, 3)] {
        let out = search_kaleidoscope(&SimpleGraph::complete(n), k, &SearchBudget::exhaustive())
            .expect("valid input");
        let verdict = match out.status {
            SearchStatus::Found => "coloring exists",
            SearchStatus::ExhaustedNoSolution => "none exists (search exhausted)",
            SearchStatus::BudgetExceeded => "undecided within budget",
        };
        println!("K_{n}, {k} colors: {verdict} after {} nodes", out.nodes);
    }
}
