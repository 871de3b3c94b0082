//! The Hamiltonian decomposition of K_m and the threshold graph, the two
//! building blocks of the complete-graph construction.

use kaleido::complete::{threshold_graph, walecki_decompose};

fn main() {
    let m = 10;
    let d = walecki_decompose(m).expect("even order");
    for (i, cycle) in d.cycles.iter().enumerate() {
        let path: Vec<_> = cycle.iter().map(usize::to_string).collect();
        println!("H_{} = {} -> {}", i + 1, path.join(" -> "), cycle[0]);
    }
    println!("F = {:?}", d.matching);

    let t = threshold_graph(7).expect("m >= 2");
    println!("\nthreshold graph on 7 vertices: {:?}", t.edges());
    println!("degrees {:?}", t.degrees());
}
