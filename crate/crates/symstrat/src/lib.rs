//! Stratified symmetric powers over the rationals: partition collapse
//! posets, exact stratum homology for Euclidean space, E¹ pages of the
//! open-filtration spectral sequence for discriminants, compactly
//! supported Euler bookkeeping, transfer/stabilization operator algebra
//! and closed-form homological stability ranges.
//!
//! Everything is exact (big integers and rationals; no floating point)
//! and deterministic. See the `examples/` directory for one runnable
//! walkthrough per capability, and the `symstrat` binary for the
//! subcommand front end.

pub mod cli;
pub mod confighomology;
pub mod error;
pub mod euler;
pub mod graded;
pub mod linalg;
pub mod manifolds;
pub mod partitions;
pub mod ranges;
pub mod spectral;
pub mod sympower;

pub use error::{Error, Result};
pub use graded::GradedDim;
pub use manifolds::{ConditionA, ManifoldModel};
pub use partitions::{Partition, SetPartition};
