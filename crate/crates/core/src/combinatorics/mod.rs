//! Partitions, composite partitions and the permutation enumerations used by
//! the character formulas.

pub mod cycles;
pub mod partition;
pub mod perm;
pub mod splits;

pub use cycles::{enumerate_cr, CycleTypePermutation};
pub use partition::{partitions_in_box, CompositePartition, Partition};
pub use perm::{all_permutations, factorial, Permutation};
pub use splits::{enumerate_splits, split_pairing_sign, Split};
