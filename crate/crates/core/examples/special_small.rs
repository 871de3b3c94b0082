//! The three instances the general recursion cannot reach, (9,4), (11,4) and
//! (11,5), are split into two threshold-colored cliques joined by a
//! searched bipartite layer.

use kaleido::complete::{construct_complete, equal_tuple_couples};
use kaleido::verify_kaleidoscope;

fn main() {
    for size in [4, 5, 6] {
        let couples = equal_tuple_couples(size).expect("part size");
        println!("K_{size} part: couples sharing a tuple {couples:?}");
    }
    for (n, k) in [(9, 4), (11, 4), (11, 5)] {
        let (g, trace) = construct_complete(n, k).expect("in range");
        let valid = verify_kaleidoscope(&g).valid;
        println!("\nK_{n}, {k} colors ({:?}), valid: {valid}", trace.case);
        for (v, t) in g.multiset_colors().iter().enumerate() {
            println!("  {:<5} {t}", trace.labels[&(v + 1)]);
        }
    }
}
