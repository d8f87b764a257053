//! Orientations modulo k of planar multigraphs.
//!
//! This crate holds the pure algorithmic core: a loopless multigraph with
//! identity-bearing parallel edges, vertex partitions and their weight
//! function, the S5-contractibility test, β-orientation search and strong
//! Z_k-connectivity, modular flow certificates, rotation systems with face
//! tracing and discharging, and a replayable reduction engine that builds
//! β-orientations of S5-contractible planar graphs by contraction and path
//! lifting.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the command
//! line and parallel sweeps live in the companion `sz5-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;

pub mod catalog;
pub mod graph;
pub mod orient;
pub mod partition;
pub mod planar;
pub mod reduce;
pub mod search;

pub use error::{Error, Result};
pub use graph::{Multigraph, VertexSet};
pub use search::{Budget, Search, SearchOutcome};
