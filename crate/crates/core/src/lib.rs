//! Exact Littlewood–Richardson, Kronecker and Heisenberg coefficients,
//! stability of partition triples, and H-additive matrices.

pub mod additivity;
pub mod cache;
pub mod cli;
pub mod coefficients;
pub mod conformance;
pub(crate) mod memo;

pub mod partition;
pub mod ratfeas;
pub mod stability;
pub mod symfun;

pub use partition::{Composition, Dominance, Partition, PartitionError, RationalVector};
