//! Bar lengths of bar partitions.
//!
//! Bar partitions (partitions into distinct parts) are studied through their
//! doubles: the bar lengths of `λ` are the hook lengths in the upper half of
//! the doubled partition `D(λ)`, and for odd `d` the `d`-abacus of `D(λ)`
//! yields the bar core `c̄_d(λ)`, the bar quotient and the quotient partition
//! `q̄_d(λ)`. On top of that the crate decomposes the bar-length multiset of
//! `λ` into the bar lengths of its core and modified bar lengths of its
//! quotient partition, and evaluates spin character degrees both by the bar
//! formula and by the relative formula that this decomposition implies.
//!
//! All arithmetic is exact. Degree routines are generic over the integer type
//! (see [`degrees::ExactInt`]); [`Degree`] is the unbounded default.

pub mod abacus;
pub mod bars;
pub mod degrees;
pub mod error;
pub mod multiset;
pub mod partitions;
pub mod render;
pub mod verify;

pub use abacus::{Abacus, Hook, Modulus, RunnerCounts};
pub use bars::{BarDecomposition, BarQuotient, HookKind};
pub use error::{Error, Result};
pub use multiset::IntMultiset;
pub use partitions::{BarPartition, BetaSet, FrobeniusSymbol, Partition};
pub use degrees::ExactInt;

/// Unbounded integer used for degrees by default.
pub type Degree = num_bigint::BigUint;

/// 128-bit alternative, enough for every degree with `n ≤ 30`.
pub type Degree128 = u128;
