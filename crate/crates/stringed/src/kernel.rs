//! The string kernel: shrinking both inputs to O(k⁴) symbols.

use wed_core::{Step, Symbol};

use crate::lv::unweighted_ed_bounded;
use crate::reduction::string_reduction;

/// One matched run rewritten by the kernel walk: `X[x_start..x_end)` and
/// `Y[y_start..y_end)` hold the same symbols and were both replaced by
/// `text`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunReplacement {
    pub x_start: usize,
    pub x_end: usize,
    pub y_start: usize,
    pub y_end: usize,
    pub text: Vec<Symbol>,
}

/// Output of [`string_kernel`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StringKernelResult {
    pub x: Vec<Symbol>,
    pub y: Vec<Symbol>,
    /// One entry per maximal matched run of the witness alignment, in
    /// left-to-right order; empty when the walk never ran.
    pub replacements: Vec<RunReplacement>,
    /// The unweighted distance exceeded `k`, so the outputs are the
    /// unconditionally far-apart pair `(a^{k+1}, ε)`.
    pub failed: bool,
}

/// The maximum output length [`string_kernel`] guarantees on the kernel
/// path: `85k⁴`.
pub fn string_kernel_bound(k: usize) -> usize {
    85 * k.pow(4)
}

/// Shrinks `(X, Y)` to an equivalent pair of length at most `85k⁴` each.
///
/// Inputs already within the bound pass through unchanged. Otherwise a
/// bounded unweighted alignment is attempted: if even unit costs exceed
/// `k`, any normalized weighting does too, and the sentinel pair
/// `(a^{k+1}, ε)` with `a` the smallest symbol id present replaces the
/// inputs. With a witness alignment in hand, every edited character is
/// copied verbatim and every maximal matched run is replaced by its
/// [`string_reduction`] in both outputs, which keeps all clipped weighted
/// distances intact and preserves the length difference `|X| − |Y|`.
pub fn string_kernel(x: &[Symbol], y: &[Symbol], k: usize) -> StringKernelResult {
    assert!(k >= 1, "edit budget must be positive");
    if x.len().max(y.len()) <= string_kernel_bound(k) {
        return StringKernelResult {
            x: x.to_vec(),
            y: y.to_vec(),
            replacements: Vec::new(),
            failed: false,
        };
    }
    let Some((cost, alignment)) = unweighted_ed_bounded(x, y, k) else {
        let a = x
            .iter()
            .chain(y)
            .copied()
            .min()
            .expect("inputs longer than the bound are nonempty");
        return StringKernelResult {
            x: vec![a; k + 1],
            y: Vec::new(),
            replacements: Vec::new(),
            failed: true,
        };
    };

    // First pass: cut the alignment into maximal matched runs and the
    // edits separating them.
    enum Part {
        Run { xs: usize, xe: usize, ys: usize, ye: usize },
        Edit { step: Step, px: usize, py: usize },
    }
    let mut parts: Vec<Part> = Vec::new();
    for ((px, py), step) in alignment.steps() {
        if step == Step::Align && x[px] == y[py] {
            match parts.last_mut() {
                Some(Part::Run { xe, ye, .. }) if *xe == px => {
                    *xe = px + 1;
                    *ye = py + 1;
                }
                _ => parts.push(Part::Run { xs: px, xe: px + 1, ys: py, ye: py + 1 }),
            }
        } else {
            parts.push(Part::Edit { step, px, py });
        }
    }

    let mut out = StringKernelResult {
        x: Vec::new(),
        y: Vec::new(),
        replacements: Vec::new(),
        failed: false,
    };
    let mut edited_in_x = 0usize;
    for part in &parts {
        match *part {
            Part::Run { xs, xe, ys, ye } => {
                let text = string_reduction(&x[xs..xe], k);
                out.x.extend_from_slice(&text);
                out.y.extend_from_slice(&text);
                out.replacements.push(RunReplacement {
                    x_start: xs,
                    x_end: xe,
                    y_start: ys,
                    y_end: ye,
                    text,
                });
            }
            Part::Edit { step, px, py } => match step {
                Step::Align => {
                    out.x.push(x[px]);
                    out.y.push(y[py]);
                    edited_in_x += 1;
                }
                Step::Delete => {
                    out.x.push(x[px]);
                    edited_in_x += 1;
                }
                Step::Insert => out.y.push(y[py]),
            },
        }
    }

    // A cost-k alignment touches at most k characters of X and leaves at
    // most k+1 matched runs between them.
    assert!(edited_in_x <= cost && cost <= k);
    assert!(out.replacements.len() <= k + 1);
    debug_assert!(out.x.len().max(out.y.len()) <= string_kernel_bound(k));
    debug_assert_eq!(
        out.x.len() as isize - out.y.len() as isize,
        x.len() as isize - y.len() as isize
    );
    out
}
