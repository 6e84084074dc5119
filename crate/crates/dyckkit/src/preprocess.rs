//! Greedy removal of adjacent matched bracket pairs.

use wed_core::Symbol;

use crate::alphabet::DyckAlphabet;

/// Exhaustively deletes adjacent pairs `X[i] X[i+1]` where `X[i]` is an
/// opening bracket and `X[i+1]` its complement. A single stack pass
/// suffices: removing one pair can only expose a new pair spanning the
/// junction, and the output buffer's tail is exactly that junction.
///
/// The weighted Dyck distance is unchanged for every skewmetric weight
/// table.
pub fn greedy_preprocess(x: &[Symbol], alpha: &DyckAlphabet) -> Vec<Symbol> {
    let mut out: Vec<Symbol> = Vec::with_capacity(x.len());
    for &s in x {
        match out.last() {
            Some(&top) if alpha.is_opening(top) && alpha.complement(top) == s => {
                out.pop();
            }
            _ => out.push(s),
        }
    }
    out
}

/// True when no adjacent matched pair remains, the precondition of the
/// kernel pipeline.
pub fn is_preprocessed(x: &[Symbol], alpha: &DyckAlphabet) -> bool {
    x.windows(2)
        .all(|pair| !(alpha.is_opening(pair[0]) && alpha.complement(pair[0]) == pair[1]))
}
