//! Weighted edit distance restricted to a diagonal band.

use wed_core::{CostValue, Symbol, WeightTable};

use crate::kernel::string_kernel;

/// Computes `ed^w(X, Y)` when it is at most `k`, and INF otherwise.
///
/// Only table cells with `|i − j| ≤ k` are evaluated; any alignment that
/// leaves the band makes more than `k` unit edits, and normalized weights
/// price every edit at one unit or more. Cells are clipped against `k` as
/// they are produced, which also keeps the arithmetic far from overflow
/// on long inputs.
pub fn banded_weighted_ed(x: &[Symbol], y: &[Symbol], k: usize, w: &WeightTable) -> CostValue {
    assert!(k >= 1, "edit budget must be positive");
    let (n, m) = (x.len(), y.len());
    if n.abs_diff(m) > k {
        return CostValue::INF;
    }
    let k_clip = u32::try_from(k).expect("edit budgets fit in u32");
    // Anything past k·SCALE can only grow along the remaining path, so
    // clipping every cell is exact; it also rules out overflow.
    let step = |cell: CostValue, edit: CostValue| {
        cell.checked_add(edit).map_or(CostValue::INF, |c| c.clip(k_clip))
    };
    let width = 2 * k + 1;
    // row[d] holds D[i][j] for j = i + d − k.
    let mut row = vec![CostValue::INF; width];
    row[k] = CostValue::ZERO;
    for d in k + 1..width.min(k + m + 1) {
        row[d] = step(row[d - 1], w.cost(Symbol::EPSILON, y[d - k - 1]));
    }
    for i in 1..=n {
        let mut next = vec![CostValue::INF; width];
        for j in i.saturating_sub(k)..=(i + k).min(m) {
            let d = j + k - i;
            let mut best = CostValue::INF;
            // Delete X[i-1]: j fixed, the diagonal shifts by one.
            if d + 1 < width {
                best = best.min(step(row[d + 1], w.cost(x[i - 1], Symbol::EPSILON)));
            }
            if j > 0 {
                if d >= 1 {
                    // Insert Y[j-1]: i fixed.
                    best = best.min(step(next[d - 1], w.cost(Symbol::EPSILON, y[j - 1])));
                }
                // Align X[i-1] with Y[j-1].
                best = best.min(step(row[d], w.cost(x[i - 1], y[j - 1])));
            }
            next[d] = best;
        }
        row = next;
    }
    row[m + k - n]
}

/// The full pipeline: kernelize, then run the banded table on the small
/// pair. Agrees with clipping the unrestricted quadratic table at `k`.
pub fn weighted_ed_le_k(x: &[Symbol], y: &[Symbol], k: usize, w: &WeightTable) -> CostValue {
    let kernel = string_kernel(x, y, k);
    banded_weighted_ed(&kernel.x, &kernel.y, k, w)
}
