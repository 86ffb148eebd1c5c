//! Merged Johnson graphs `J(n,k)_I`: construction, automorphism-group descriptors,
//! Cayley and 2-regular classification, explicit witness groups and brute-force
//! permutation-group oracles that check every affirmative claim at desk scale.
//!
//! Points are 0-based internally and rendered 1-based at every I/O boundary.
//! Permutations compose left to right: `x·(pq) = (x·p)·q`.

pub mod classify;
pub mod complement;
pub mod error;
pub mod finitefield;
pub mod johnson;
pub mod nearfield;
pub mod permgroup;
pub mod verify;

pub use error::{Error, Result};
pub use finitefield::{FieldElement, FiniteField};
pub use johnson::{KSubset, MergeSet, MergedJohnsonGraph};
pub use nearfield::NearField;
pub use permgroup::{ActionDomain, Permutation, PermutationGroup};

/// Exact integer used for group orders that overflow machine words.
pub type Natural = num_bigint::BigUint;
