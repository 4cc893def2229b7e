//! A laboratory for conflict-free colorings of graphs and hypergraphs.
//!
//! A coloring of a hypergraph is *conflict-free* when every hyperedge
//! contains some color exactly once.  For a graph the interesting
//! hypergraphs are its open neighborhoods `N(v)` and closed neighborhoods
//! `N[v]`; the corresponding chromatic numbers are written here as the
//! open and closed conflict-free chromatic numbers.  This crate collects,
//! under one roof:
//!
//! - exact brute-force oracles for small instances ([`oracle`]),
//! - a bounded exact solver for arbitrary hypergraphs ([`hypergraph`]),
//! - a Moser-Tardos resampling colorer for near-uniform hypergraphs,
//!   backed by the Lovász local lemma ([`lll`]),
//! - a staged decomposition colorer for K_{1,k}-free graphs serving open
//!   neighborhoods ([`clawfree_cfon`]) and an iterated-MIS colorer serving
//!   closed neighborhoods ([`clawfree_cfcn`]),
//! - a sampling colorer for graphs whose minimum degree is large
//!   ([`mindeg`]),
//! - a layered weighted random graph with exact model diagnostics, the
//!   testbed for lower-bound experiments ([`layered`]),
//! - graph families and generators ([`generate`]), text file formats
//!   ([`io`]), and a command-line driver ([`cli`]).
//!
//! The fastest way to see the pieces work is the examples directory; each
//! one is a small, runnable tour of one capability:
//!
//! ```text
//! cargo run --release --example families         # generators and file formats
//! cargo run --release --example exact_small      # brute-force chromatic numbers
//! cargo run --release --example near_uniform_lll # resampling on near-uniform hypergraphs
//! cargo run --release --example clawfree_open    # staged coloring, open neighborhoods
//! cargo run --release --example clawfree_closed  # iterated MIS, closed neighborhoods
//! cargo run --release --example mindeg_open      # dense-graph sampling colorer
//! cargo run --release --example layered_lab      # layered model diagnostics
//! ```
//!
//! Everything randomized takes an explicit seed and is fully
//! deterministic; re-running any example, test, or CLI invocation
//! reproduces its output byte for byte.

pub mod clawfree_cfcn;
pub mod clawfree_cfon;
pub mod cli;
pub mod coloring;
pub mod generate;
pub mod graph;
pub mod hypergraph;
pub mod io;
pub mod layered;
pub mod lll;
pub mod mindeg;
pub mod oracle;

pub use coloring::Coloring;
pub use graph::Graph;
pub use hypergraph::Hypergraph;
