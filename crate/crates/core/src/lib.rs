//! Exact spanning-tree counting for graph families `G x P_n` and `G x C_n`.
//!
//! For a fixed base graph `G` on `k` vertices, the spanning forests of the
//! product are tracked layer by layer through partitions of the frontier
//! vertices. That gives an integer transfer matrix whose powers produce the
//! spanning-tree counts, from which minimal linear recurrences and rational
//! generating functions follow. Every count can be checked against an
//! independent Matrix-Tree determinant.
//!
//! ```
//! use gridtrees::graphs::BaseGraph;
//! use gridtrees::path_transfer::tree_sequence;
//!
//! let seq = tree_sequence(&BaseGraph::path(2).unwrap(), 5).unwrap();
//! let seq: Vec<u64> = seq.iter().map(|t| t.try_into().unwrap()).collect();
//! assert_eq!(seq, [1, 4, 15, 56, 209]);
//! ```

pub mod cli;
pub mod cyl_transfer;
pub mod graphs;
pub mod kirchhoff;
pub mod path_transfer;
pub mod recurrence;
mod serial;
pub mod setpart;
pub mod system;
pub mod transfer;
pub mod verify;

pub use graphs::{BaseGraph, BaseSpec, Topology};
pub use num_bigint::{BigInt, BigUint};
