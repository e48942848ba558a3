//! Exact and fixed-parameter algorithms for longest paths measured above a
//! guarantee: the `(s,t)` distance (longest detour) or the graph diameter
//! (longest path above diameter).
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the command
//! line tool and thread-based fan-out live in the `longpath` crate.
//!
//! Module map:
//!
//! * [`graph`]: immutable directed/undirected graphs, BFS layering,
//!   connectivity checks.
//! * [`flow`]: internally vertex-disjoint paths by unit-capacity max-flow.
//! * [`oracle`]: exponential ground-truth solvers (subset DP and
//!   branch-and-bound).
//! * [`subroutines`]: k-path, long `(s,t)`-path and exact detour behind a
//!   strategy selector (color coding, subset DP, branch-and-bound).
//! * [`chain`]: the ordered three-disjoint-paths query `s -> w -> v -> t`
//!   with pluggable backends.
//! * [`detour`]: the longest detour pipeline for directed and undirected
//!   graphs.
//! * [`diameter`]: longest path above diameter (undirected 2-connected
//!   solver, constructive `diam + 4` builder, decision orchestrator).
//! * [`gadgets`]: the `G_l` gadget family and both hardness reductions.
//! * [`random`]: seeded random graph families for test suites.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod chain;
pub mod detour;
pub mod diameter;
mod error;
pub mod flow;
pub mod gadgets;
pub mod graph;
pub mod oracle;
mod outcome;
pub mod path;
pub mod random;
mod search;
pub mod subroutines;

pub use error::Error;
pub use graph::{DirectedGraph, GraphRef, UndirectedGraph, VertexSet};
pub use outcome::{Certainty, Search};
pub use path::{Baseline, PathWitness};

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[cfg(test)]
pub(crate) mod testutil;
