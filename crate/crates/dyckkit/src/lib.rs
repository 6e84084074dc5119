//! Bounded weighted Dyck edit distance.
//!
//! A string over a bracket alphabet is scored by the cheapest non-crossing
//! partial matching: matched pairs pay [`pair_cost`], unmatched positions
//! pay [`single_cost`]. The bounded pipeline answers "is the distance at
//! most `k`, and if so what is it" without touching most of the input:
//!
//! 1. [`greedy_preprocess`] deletes adjacent matched pairs, which never
//!    changes the distance under a skewmetric table.
//! 2. [`dyck_kernel`] shrinks the remainder to at most `630k⁴` symbols,
//!    replacing long perfectly matched bracket runs by
//!    [`dyck_reduction`]-compressed stand-ins.
//! 3. [`weighted_dyck_dp`] prices the kernel exactly, with a band that
//!    prunes intervals whose height imbalance already rules them out.
//!
//! [`weighted_dyck_le_k`] runs the three stages end to end and clips the
//! answer at `k` units.

pub mod alphabet;
pub mod dp;
pub mod kernel;
pub mod preprocess;
pub mod profile;
pub mod reduction;

pub use alphabet::{BracketError, DyckAlphabet};
pub use dp::{pair_cost, single_cost, unweighted_dyck_bounded, weighted_dyck_dp, DyckMatching};
pub use kernel::{dyck_kernel, dyck_kernel_bound, weighted_dyck_le_k};
pub use preprocess::{greedy_preprocess, is_preprocessed};
pub use profile::{valley_count, HeightProfile};
pub use reduction::dyck_reduction;

/// Errors raised by the reduction and kernel stages.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum DyckError {
    /// [`dyck_reduction`] inputs must consist of opening brackets.
    #[error("position {at}: expected an opening bracket")]
    NotOpening { at: usize },
    /// [`dyck_kernel`] requires greedily preprocessed input.
    #[error("adjacent matched bracket pair at position {at}; run greedy_preprocess first")]
    NotPreprocessed { at: usize },
}
