//! Toolkit for compact set-packing instances: intersecting set system
//! gadgets, reductions from subgraph isomorphism to set packing, exact
//! covering and GF(2) vector sum, exact solvers for all three targets, and
//! an end-to-end equivalence verification harness.

pub mod bench;
pub mod bitset;
pub mod error;
pub mod gen;
pub mod graph;
pub mod iss;
pub mod json;
pub mod reduction;
pub mod setsystem;
pub mod solvers;
pub mod verify;

pub use error::{Error, Result};
