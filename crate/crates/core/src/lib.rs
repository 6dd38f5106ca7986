//! Graph-analysis toolkit for heavy-subgraph hamiltonicity conditions.
//!
//! The pieces, bottom up:
//!
//! - [`graph`]: bitmask-backed simple graphs (n <= 64), connectivity,
//!   2-connectivity, line graphs.
//! - [`io`]: graph6 and edge-list parsing/writing, bit-exact.
//! - [`iso`]: isomorphism with witnesses; canonical keys for dedup.
//! - [`enumerate`]: exhaustive census of isomorphism classes, n <= 7.
//! - [`patterns`]: the named pattern graphs and the free / o-heavy /
//!   f-heavy / center-heavy predicates over induced copies.
//! - [`cliques`]: maximal clique enumeration.
//! - [`closure`]: the o-closure (heavy pairs, eligible vertices, local
//!   completion, fixed point) and the root-graph reconstruction.
//! - [`regions`]: region decomposition of a claw-o-heavy graph with the
//!   structural lemma checks.
//! - [`hamilton`]: exact Hamiltonian-cycle and circumference search.
//! - [`families`]: the two-triangle family P_{l1,l2,l3}, L1, L2, and the
//!   induced-member search.
//! - [`verify`]: condition reports, theorem checks, censuses, and seeded
//!   random sampling.

pub mod cliques;
pub mod closure;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod hamilton;
pub mod io;
pub mod iso;
pub mod patterns;
pub mod regions;
pub mod verify;

pub use graph::{Graph, VertexSet};
