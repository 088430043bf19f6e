//! Proper disconnection numbers of small graphs.
//!
//! An edge-colored graph is *proper disconnected* when every pair of distinct
//! vertices is separated by an edge cut in which no two edges sharing an
//! endpoint have the same color. The proper disconnection number `pd(G)` is
//! the fewest colors that achieve this.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`], [`graph6`], [`blocks`], [`stats`]: the graph type, its
//!   interchange format and classical structure.
//! * [`coloring`]: edge colorings, proper sets, proper cuts and certificates.
//! * [`solver`], [`chromatic`], [`canon`], [`enumerate`]: exact engines.
//! * [`families`]: named graph families with their explicit pd-colorings.
//! * [`bounds`], [`outerplanar`], [`classify`]: bounds, block composition and
//!   outerplanar results.
//! * [`census`]: exhaustive per-graph theorem checks and report rows.

pub mod blocks;
pub mod bounds;
pub mod canon;
pub mod census;
pub mod chromatic;
pub mod classify;
pub mod coloring;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod outerplanar;
pub mod solver;
pub mod stats;

pub use error::{Error, Result};
pub use graph::Graph;
