//! Builds k-kaleidoscopic colorings of K_n and shows which case of the
//! recursive construction produced each one.
//!
//!     cargo run --example complete_graph -- 16 6

use kaleido::complete::{CompleteBuilder, ConstructionTrace};
use kaleido::verify_kaleidoscope;

fn print_trace(t: &ConstructionTrace, depth: usize) {
    println!(
        "{:indent$}{:?} for K_{} with {} colors",
        "",
        t.case,
        t.n,
        t.k,
        indent = 2 * depth
    );
    for child in &t.children {
        print_trace(child, depth + 1);
    }
}

fn main() {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer"))
        .collect();
    let (n, k) = match args[..] {
        [n, k] => (n, k),
        _ => (16, 6),
    };
    let builder = CompleteBuilder::new();
    let (g, trace) = match builder.build(n, k) {
        Ok(x) => x,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    print_trace(&trace, 0);
    let report = verify_kaleidoscope(&g);
    println!("\n{} edges, valid: {}", g.edge_count(), report.valid);
    for (v, t) in g.multiset_colors().iter().enumerate() {
        let name = trace.labels.get(&(v + 1)).map(String::as_str).unwrap_or("");
        println!("{:>3} {t:<24} {name}", v + 1);
    }

    // The whole admissible range for this n reuses the same base colorings.
    let valid = (3..=n.saturating_sub(3))
        .filter(|&k| {
            builder
                .build(n, k)
                .is_ok_and(|(g, _)| verify_kaleidoscope(&g).valid)
        })
        .count();
    println!(
        "\nK_{n}: {valid} of {} palettes verified",
        n.saturating_sub(5)
    );
}
