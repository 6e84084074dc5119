//! Shared vocabulary for the weighted edit-distance pipelines.
//!
//! Every pipeline in this workspace (strings, forests, Dyck) speaks in terms
//! of four things defined here:
//!
//! * [`Symbol`] / [`Alphabet`] — interned tokens with dense integer ids.
//!   Id 0 is reserved for the empty symbol ε and never occurs in a sequence.
//! * [`CostValue`] — exact, nonnegative costs stored as integers scaled by
//!   10⁶, with a distinguished `INF` sentinel for threshold clipping.
//!   Distances are compared for *exact equality* in the test suites, so
//!   floating point is banned throughout.
//! * [`WeightTable`] — a total map Σ̄ × Σ̄ → finite costs with `w(a,a) = 0`,
//!   validated against three progressively stronger modes (normalized,
//!   quasimetric, skewmetric).
//! * [`Alignment`] — a monotone lattice path encoding deletions, insertions,
//!   and aligned symbol pairs between two sequences.

pub mod alignment;
pub mod cost;
pub mod symbol;
pub mod weights;

pub use alignment::{alignment_cost, Alignment, AlignmentError, Step};
pub use cost::{CostError, CostValue, SCALE};
pub use symbol::{Alphabet, Symbol};
pub use weights::{ValidationReport, Violation, WeightError, WeightMode, WeightTable};
