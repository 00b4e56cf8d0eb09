//! Exact tools for generalized Turán problems with a fixed number of edges.
//!
//! The crate is `no_std` (it needs `alloc`). It covers clique and pattern
//! counting on dense bit-matrix graphs, the single-pass edge filter that
//! extracts a dense clique-rich subgraph, closed-form exponents and their
//! validity conditions, lower-bound constructions (projective norm graphs and
//! a random deletion method), and an exhaustive isomorph-free oracle for tiny
//! extremal values.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bitset;
pub mod bounds;
pub mod cliques;
pub mod construct;
pub mod error;
pub mod experiment;
pub mod extraction;
pub mod field;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod pattern;
pub mod rng;

/// Exact rational used for exponents and average degrees.
pub type Rational = num_rational::Ratio<i64>;

pub use cliques::{count_cliques, edge_clique_participation, CliqueVector};
pub use error::{Error, Result};
pub use graph::Graph;
pub use pattern::{chromatic_number, count_copies, hom_exists, is_free, max_avg_degree, Pattern};
