//! Writes a coloring to JSON, reads it back, and emits DOT and CSV.
//!
//!     cargo run --example export_dot | dot -Tsvg > k8.svg

use kaleido::construct_complete;
use kaleido::document::{to_csv, to_dot, ColoringDocument};

fn main() {
    let (g, trace) = construct_complete(8, 4).expect("in range");
    let doc = ColoringDocument::from_graph(&g)
        .with_labels(trace.labels.clone())
        .with_trace(trace.summary());

    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("k8.json");
    doc.save(&path).expect("write");
    let back = ColoringDocument::load(&path).expect("read");
    assert_eq!(back.to_json(), doc.to_json());

    let g = back.to_graph().expect("well formed");
    eprint!("{}", to_csv(&g));
    print!("{}", to_dot(&g, back.labels.as_ref()));
}
