//! The r-regular 3-kaleidoscope on the triangular coordinates (s1,s2,s3),
//! where vertex x sees exactly s_i edges of color i.
//!
//!     cargo run --example regular3 -- 11

use kaleido::regular3::{construct_regular3, removed_vertex};
use kaleido::verify_kaleidoscope;

fn main() {
    let r: usize = std::env::args()
        .nth(1)
        .map_or(7, |a| a.parse().expect("integer"));
    let built = match construct_regular3(r) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    let g = &built.graph;
    println!(
        "r={r}: {} vertices, {} edges, removed {:?}",
        g.n(),
        g.edge_count(),
        removed_vertex(r)
    );

    // Print the triangle row by row (s2 fixed), marking each vertex by its tuple.
    // The top row held only the removed vertex.
    for s2 in 1..r - 2 {
        let row: Vec<String> = built
            .coords
            .iter()
            .enumerate()
            .filter(|(_, x)| x.s2 == s2)
            .map(|(i, _)| g.multiset_colors()[i].to_string())
            .collect();
        println!("{:indent$}{}", "", row.join(" "), indent = 4 * (s2 - 1));
    }
    let report = verify_kaleidoscope(g);
    let exact = g
        .multiset_colors()
        .iter()
        .zip(&built.coords)
        .all(|(t, x)| t.counts() == x.as_array());
    println!(
        "valid: {}, degree per color equals coordinate: {exact}",
        report.valid
    );
}
