//! Direct search, with a node budget and a cache directory for reuse.
//!
//!     cargo run --release --example search -- 24 3

use std::time::{Duration, Instant};

use kaleido::cache::BaseCache;
use kaleido::graph::SimpleGraph;
use kaleido::search::{search_kaleidoscope, SearchBudget};

fn main() {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer"))
        .collect();
    let (n, k) = match args[..] {
        [n, k] => (n, k),
        _ => (12, 3),
    };
    for seed in [0, 7] {
        let budget =
            SearchBudget::new(50_000_000, Some(Duration::from_secs(60)), seed).expect("positive");
        let start = Instant::now();
        let out = search_kaleidoscope(&SimpleGraph::complete(n), k, &budget).expect("valid input");
        println!(
            "seed {seed}: {:?} after {} nodes in {:?}",
            out.status,
            out.nodes,
            start.elapsed()
        );
    }

    let dir = tempfile::tempdir().expect("temp dir");
    let cache = BaseCache::with_dir(dir.path());
    let start = Instant::now();
    cache
        .get_or_search(n, k, &SearchBudget::default())
        .expect("found");
    let first = start.elapsed();
    let start = Instant::now();
    BaseCache::with_dir(dir.path())
        .get_or_search(n, k, &SearchBudget::default())
        .expect("cached");
    println!(
        "cold {first:?}, from disk {:?} ({})",
        start.elapsed(),
        cache.entry_path(n, k).unwrap().display()
    );
}
