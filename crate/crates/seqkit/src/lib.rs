//! Sequence indexes and the shared periodicity-reduction engine.
//!
//! The three distance pipelines all lean on the same toolbox:
//!
//! * [`LceIndex`] — longest-common-extension queries within one sequence or
//!   across a pair, with a scan backend for few-query workloads and a
//!   suffix-array backend for query-heavy ones; both are exact.
//! * [`RangeMin`] — a block-decomposed range-minimum index used for LCP
//!   lookups and for height profiles of parenthesis strings.
//! * [`PeriodIndex`] — shortest-period queries on fragments, the periodicity
//!   test behind the reduction engine.
//! * [`periodicity_reduction`] — the left-to-right scan that caps the
//!   exponent of every accepted repetition at `e`, leaving no `Q^{e+1}`
//!   occurrence for any fragment `Q` the [`MembershipOracle`] accepts.

pub mod lce;
pub mod period;
pub mod reduction;
pub mod rmq;

pub use lce::LceIndex;
pub use period::{is_primitive_slice, shortest_period_slice, PeriodIndex};
pub use reduction::{periodicity_reduction, MembershipOracle, PrimitiveFragments};
pub use rmq::RangeMin;
