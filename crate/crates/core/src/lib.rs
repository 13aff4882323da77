//! Extremal and spectral tools for non-r-partite graphs without complete
//! split subgraphs `B_{p,q} = K_p ∇ qK_1`.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`] and [`graph6`]: bitset graphs (at most 64 vertices) and the
//!   graph6 interchange format.
//! - [`constructions`]: Turán graphs, complete split graphs, `Y_p(n)` and the
//!   `G_{i,j}` family.
//! - [`oracles`]: exact clique, complete-split, colouring and criticality tests.
//! - [`spectral`] and [`poly`]: certified spectral radii, with an exact
//!   characteristic-polynomial fallback for near ties.
//! - [`procedure`]: the class-typed rewiring procedure toward `G_{i,j}`.
//! - [`canon`], [`enumerate`], [`search`] and [`store`]: isomorph-free
//!   enumeration and brute-force extremal records.

pub mod bits;
pub mod canon;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod oracles;
pub mod poly;
pub mod procedure;
pub mod search;
pub mod spectral;
pub mod store;

pub use error::{Error, Result};
pub use graph::{Graph, VertexPartition, MAX_VERTICES};
