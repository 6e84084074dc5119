//! Bounded unweighted edit distance with alignment recovery.

use seqkit::LceIndex;
use wed_core::{Alignment, Symbol};

/// Furthest-reaching frontier per (edit budget, diagonal). `table[e][k + d]`
/// is the largest `i` such that `X[0..i)` aligns with `Y[0..i-d)` using
/// exactly at most `e` edits, `None` when no such prefix pair exists.
struct Frontier {
    k: usize,
    rows: Vec<Vec<Option<usize>>>,
}

impl Frontier {
    fn new(k: usize) -> Frontier {
        Frontier { k, rows: Vec::with_capacity(k + 1) }
    }

    fn get(&self, e: usize, d: isize) -> Option<usize> {
        if d.unsigned_abs() > self.k {
            return None;
        }
        self.rows[e][(d + self.k as isize) as usize]
    }
}

/// Computes the unweighted edit distance of `X` and `Y` together with a
/// minimum alignment, or `None` when the distance exceeds `k`.
///
/// Runs the diagonal scheme: for each edit budget `e` the frontier on
/// every diagonal advances past the furthest mismatch, sliding along
/// matches with LCE jumps. Work is O(nk) with the scan-backed index and
/// O(n + k²) queries with a prebuilt suffix-array index.
///
/// Traceback ties prefer align over delete over insert.
pub fn unweighted_ed_bounded(
    x: &[Symbol],
    y: &[Symbol],
    k: usize,
) -> Option<(usize, Alignment)> {
    let lce = LceIndex::new_joint(x, y);
    unweighted_ed_bounded_with(x, y, k, &lce)
}

/// [`unweighted_ed_bounded`] against a caller-provided joint index over
/// exactly `X` and `Y`, letting a prebuilt suffix-array index be reused.
pub fn unweighted_ed_bounded_with(
    x: &[Symbol],
    y: &[Symbol],
    k: usize,
    lce: &LceIndex,
) -> Option<(usize, Alignment)> {
    assert!(k >= 1, "edit budget must be positive");
    let (n, m) = (x.len(), y.len());
    let target = n as isize - m as isize;
    if target.unsigned_abs() > k {
        return None;
    }

    let slide = |mut i: usize, d: isize| -> usize {
        let j = (i as isize - d) as usize;
        i += lce.lce_xy(i, j);
        i
    };

    let mut frontier = Frontier::new(k);
    for e in 0..=k {
        let mut row = vec![None; 2 * k + 1];
        for d in -(e as isize)..=e as isize {
            // Candidate pre-slide positions, best first: align beats
            // delete beats insert, and larger reach beats smaller.
            let mut base: Option<usize> = None;
            if e == 0 {
                if d == 0 {
                    base = Some(0);
                }
            } else {
                let reachable = |i: usize| i <= n && i as isize - d <= m as isize;
                let mut consider = |cand: Option<usize>| {
                    if let Some(i) = cand {
                        if reachable(i) && base.map_or(true, |b| i > b) {
                            base = Some(i);
                        }
                    }
                };
                consider(frontier.get(e - 1, d).map(|i| i + 1));
                consider(frontier.get(e - 1, d - 1).map(|i| i + 1));
                consider(frontier.get(e - 1, d + 1));
            }
            row[(d + k as isize) as usize] = base.map(|i| slide(i, d));
        }
        frontier.rows.push(row);
        if frontier.get(e, target) == Some(n) {
            return Some((e, traceback(&frontier, e, target)));
        }
    }
    None
}

/// Rebuilds the path by replaying each frontier entry's best predecessor
/// under the same tie order the forward pass used.
fn traceback(frontier: &Frontier, mut e: usize, mut d: isize) -> Alignment {
    let mut i = frontier.get(e, d).expect("traceback starts on a reached entry");
    let mut rev: Vec<(usize, usize)> = Vec::new();
    let pos = |i: usize, d: isize| (i, (i as isize - d) as usize);
    rev.push(pos(i, d));
    while e > 0 {
        let align = frontier.get(e - 1, d).map(|p| p + 1);
        let delete = frontier.get(e - 1, d - 1).map(|p| p + 1);
        let insert = frontier.get(e - 1, d + 1);
        let base = [align, delete, insert]
            .into_iter()
            .flatten()
            .filter(|&b| b <= i)
            .max()
            .expect("every reached entry has a predecessor");
        // Matched slide from the pre-edit position down to the frontier.
        while i > base {
            i -= 1;
            rev.push(pos(i, d));
        }
        if align == Some(base) {
            i -= 1;
        } else if delete == Some(base) {
            i -= 1;
            d -= 1;
        } else {
            d += 1;
        }
        rev.push(pos(i, d));
        e -= 1;
    }
    while i > 0 {
        i -= 1;
        rev.push(pos(i, d));
    }
    rev.reverse();
    Alignment::new(rev).expect("traceback yields a monotone lattice path")
}
