//! Pattern transformations and self-reductions for triangle detection in
//! graphs that exclude a fixed pattern.
//!
//! The crate builds and verifies, at desk scale, the constructions that
//! relate triangle detection across three freeness regimes:
//!
//! - **Augmented patterns** ([`augment`]): H⁺ attaches two wedges to every
//!   non-edge of H, preserving 3-colorability and triangle count, so that
//!   detection in induced H-free hosts reduces to detection in H⁺-free
//!   hosts.
//! - **Coloring gadgets** ([`gadgets`]): equality and inequality gadgets
//!   carved out of the Grötzsch graph, the six-terminal gadget X, and the
//!   pattern H* whose every proper 3-coloring forces a forbidden colored
//!   copy of H.
//! - **Self-reduction** ([`reductions`]): a color-coding pass that splits a
//!   host into induced (never edge-deleted) 3-colored instances, vertex
//!   subsampling that isolates unique triangles, and an end-to-end
//!   detector with witness verification.
//! - **Degenerate colorings** ([`degenerate`]): greedy-peel certification
//!   and search for the colorings the fast base algorithms consume.
//!
//! Everything is exercised by brute-force oracles ([`graph`], [`pattern`],
//! [`coloring`]): exhaustive triangle scans, backtracking copy search, and
//! propagation-assisted coloring enumeration.
//!
//! Each major capability has a runnable example under `examples/`; the
//! `hfree` binary exposes the same operations as subcommands.

pub mod augment;
pub mod bench;
pub mod cli;
pub mod coloring;
pub mod degenerate;
pub mod fixtures;
pub mod gadgets;
pub mod graph;
pub mod io;
pub mod pattern;
pub mod reductions;

pub use coloring::{Color, Coloring};
pub use graph::{Graph, Vertex};
pub use pattern::{CopyMode, Embedding, Pattern};
