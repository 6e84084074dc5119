//! The periodicity-reduction engine.
//!
//! One left-to-right scan removes surplus repetitions: whenever the scan
//! position starts an occurrence of `Q^{e+1}` for a fragment `Q` accepted
//! by the membership oracle, one copy of `Q` is dropped (the position jumps
//! over it without emitting); otherwise a single symbol is emitted. The
//! output therefore arises from the input by repeatedly replacing `Q^{e+1}`
//! with `Q^e`, and contains no `Q^{e+1}` occurrence for any accepted `Q`.
//!
//! The period root of the current 2e-window is found with a failure
//! function (O(e) per position), and the repetition length test only needs
//! to examine the first `e·q` extension symbols, so the scan costs
//! O(|P|·e) on repetitive inputs and O(|P|·e²) in the worst case — linear
//! in |P| for any fixed threshold parameter.

use wed_core::Symbol;

use crate::period::{is_primitive_slice, shortest_period_slice};

/// The fragment family Q a reduction is allowed to shorten.
///
/// The engine only asks about fragments that arise as the shortest-period
/// root of the current window (or a single symbol), so every queried
/// fragment is primitive; implementations may still re-check cheaply.
/// Answers must be consistent across repeated calls, and should cost O(1)
/// for any fixed reduction parameter.
pub trait MembershipOracle {
    /// Whether `p[i..j)` belongs to Q.
    fn contains(&self, p: &[Symbol], i: usize, j: usize) -> bool;
}

/// Q = all primitive fragments of length at most `max_len`; the membership
/// family used by the plain string and Dyck reductions.
#[derive(Clone, Copy, Debug)]
pub struct PrimitiveFragments {
    pub max_len: usize,
}

impl MembershipOracle for PrimitiveFragments {
    fn contains(&self, p: &[Symbol], i: usize, j: usize) -> bool {
        j - i <= self.max_len && is_primitive_slice(&p[i..j])
    }
}

/// Caps every accepted repetition at exponent `e`.
///
/// At scan position `r`: the candidate step `q` is the shortest period of
/// the window `P[r..r+2e)` when that window fits and is periodic, else 1.
/// The position advances by `q` without emitting iff the repetition extends
/// for at least `e·q` further symbols (`P[r..r+m) = P[r+q..r+q+m)` with
/// `m ≥ e·q`) and `P[r..r+q)` is accepted; otherwise `P[r]` is emitted and
/// the position advances by one.
pub fn periodicity_reduction(
    p: &[Symbol],
    e: usize,
    oracle: &dyn MembershipOracle,
) -> Vec<Symbol> {
    assert!(e >= 1, "exponent threshold must be positive");
    let n = p.len();
    let mut out = Vec::new();
    let mut r = 0usize;
    while r < n {
        let q = if r + 2 * e <= n {
            shortest_period_slice(&p[r..r + 2 * e]).unwrap_or(1)
        } else {
            1
        };
        // The advance test compares the extension length against e·q, so
        // the match scan can stop as soon as that threshold is reached.
        let cap = e * q;
        let mut m = 0usize;
        while m < cap && r + q + m < n && p[r + m] == p[r + q + m] {
            m += 1;
        }
        if m >= cap && oracle.contains(p, r, r + q) {
            r += q;
        } else {
            out.push(p[r]);
            r += 1;
        }
    }
    out
}
