//! Bounded weighted edit distance on strings.
//!
//! The pipeline answers `ed^w_{≤k}(X, Y)`: the exact weighted edit
//! distance when it is at most `k`, and INF otherwise. Long inputs are
//! first shrunk by [`string_kernel`] to at most `85k⁴` symbols per side
//! without disturbing any clipped weighted distance, then the banded
//! dynamic program finishes on the small pair. The kernel leans on a
//! bounded unweighted aligner ([`unweighted_ed_bounded`]) and a
//! repetition-capping reduction for perfectly matched runs
//! ([`string_reduction`]).

pub mod banded;
pub mod kernel;
pub mod lv;
pub mod reduction;

pub use banded::{banded_weighted_ed, weighted_ed_le_k};
pub use kernel::{string_kernel, string_kernel_bound, RunReplacement, StringKernelResult};
pub use lv::{unweighted_ed_bounded, unweighted_ed_bounded_with};
pub use reduction::string_reduction;
