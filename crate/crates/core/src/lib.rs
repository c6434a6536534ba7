//! Enumeration of 3-polytopes (planar 3-connected graphs) by number of
//! edges, and an exhaustive search for the smallest ones of a given radius.
//!
//! The building blocks are embedded graphs with rotation systems
//! ([`EmbeddedGraph`]), canonical codes that decide isomorphism of
//! polyhedral graphs ([`canon`]), a level-by-level generator based on face
//! diagonals and vertex splits ([`generator`]), and the radius-extremal
//! checks in [`extremal`]. Independent brute-force references live in
//! [`oracle`].

pub mod cache;
pub mod canon;
pub mod embedding;
pub mod error;
pub mod extremal;
pub mod families;
pub mod generator;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod oracle;
pub mod structure;

pub use canon::{canonical_code, is_isomorphic, CodeBytes};
pub use embedding::EmbeddedGraph;
pub use error::{Error, Result};
pub use families::{prism, pyramid};
pub use graph::{cartesian_product, make_graph, Graph, Vertex};
