//! Constructive dynamic graph coloring.
//!
//! A proper coloring is *dynamic* when every vertex of degree at least 2
//! sees at least two colors on its neighbors. This crate provides exact
//! oracles for χ, χ₂, α, α′ and ω, the recoloring subroutines that turn a
//! proper coloring into a dynamic one, bound-carrying pipelines built from
//! them, extremal graph families, and an experiment runner.

pub mod bounds;
pub mod coloring;
pub mod constructions;
pub mod dimacs;
pub mod error;
pub mod experiment;
pub mod graph;
pub mod harness;
pub mod oracles;
pub mod pipelines;
pub mod repair;

pub use coloring::{Color, Coloring};
pub use error::{Error, Result};
pub use graph::{Graph, Vertex, VertexSet};

/// Derives an independent seed for a numbered sub-stream (splitmix64).
pub(crate) fn derive_seed(seed: u64, stream: u64) -> u64 {
    let mut z = seed ^ stream.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(0x632B_E59B_D9B4_E019);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
