//! Kaleidoscopic edge-colorings of regular graphs.
//!
//! An edge-coloring of an `r`-regular graph with colors `1..=k` is
//! *kaleidoscopic* when every vertex sees every color and no two vertices
//! have the same count vector `(a_1, ..., a_k)` of incident colors.
//!
//! * [`complete`] builds `k`-kaleidoscopic colorings of `K_n` for every
//!   `3 <= k <= n-3`.
//! * [`regular3`] builds `r`-regular 3-kaleidoscopes of order `C(r-1,2) - 1`
//!   for `r ≡ 3 (mod 4)`.
//! * [`search`] is an exact backtracking oracle for small instances, used for
//!   base cases and nonexistence certificates.
//! * [`graph::verify_kaleidoscope`] checks any of the above.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod cache;
pub mod cli;
pub mod complete;
pub mod document;
pub mod graph;
pub mod regular3;
pub mod search;

pub use complete::{construct_complete, CompleteBuilder};
pub use graph::{verify_kaleidoscope, ColoredGraph, VerificationReport};
pub use regular3::construct_regular3;
