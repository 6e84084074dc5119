//! Halving kernel steps for bounded weighted tree edit distance.
//!
//! One [`forest_kernel_step`] decomposes the larger forest into pieces,
//! pairs them with synchronized occurrences in the smaller one, and either
//! bails out with a sentinel pair (too many pieces failed to pair, so the
//! distance already exceeds `k`) or replaces every paired piece by its
//! reduced form, identically on both sides. [`forest_kernel`] iterates the
//! step down to a size bounded by `k` alone, after which the exact cubic
//! DP is affordable.

use thiserror::Error;
use wed_core::{CostValue, WeightTable};

use crate::context::Context;
use crate::decomp::{piece_decomposition, Piece};
use crate::forest::Forest;
use crate::pairs::pairs;
use crate::reduce::{horizontal_reduction, vertical_reduction};
use crate::ted::weighted_ted;
use crate::token::{smallest_label, Token};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ForestKernelError {
    /// The halving argument needs room to work: below `12716k⁵` tokens the
    /// piece budget `⌈n/2k⌉` no longer dominates the replacement forms.
    #[error("kernel step needs max(|F|, |G|) ≥ {needed} tokens, got {n}")]
    TooSmall { n: usize, needed: usize },
}

/// Largest token length [`forest_kernel`] leaves untouched; one step below
/// this size is not guaranteed to shrink anything.
pub fn kernel_size_bound(k: usize) -> usize {
    12717 * k.pow(5)
}

fn step_floor(k: usize) -> usize {
    12716 * k.pow(5)
}

/// Applies disjoint range replacements to `tokens`. Descending source order
/// keeps the still-pending offsets valid.
fn splice_all(tokens: &[Token], mut edits: Vec<(usize, usize, Vec<Token>)>) -> Vec<Token> {
    edits.sort_by(|a, b| b.0.cmp(&a.0));
    let mut out = tokens.to_vec();
    for (start, end, repl) in edits {
        out.splice(start..end, repl);
    }
    out
}

/// One halving step: both outputs have at most `n/2 + 6358k⁵` tokens and
/// the same `ted^w` as the inputs whenever it is at most `k`, for every
/// normalized quasimetric `w`.
///
/// Returns [`ForestKernelError::TooSmall`] when `max(|F|, |G|) < 12716k⁵`
/// tokens. The sentinel pair `((a)^{k+1}, ε)` is produced, larger side
/// first, when fewer than `|D| − k` pieces pair; its distance exceeds `k`
/// under any normalized table, matching the inputs'.
pub fn forest_kernel_step(
    f: &Forest,
    g: &Forest,
    k: usize,
) -> Result<(Forest, Forest), ForestKernelError> {
    assert!(k >= 1, "threshold k must be at least 1");
    let n = f.len().max(g.len());
    let needed = step_floor(k);
    if n < needed {
        return Err(ForestKernelError::TooSmall { n, needed });
    }
    let swapped = f.len() < g.len();
    let (big, small) = if swapped { (g, f) } else { (f, g) };

    let t = n.div_ceil(2 * k);
    let d = piece_decomposition(big, t);
    let s = pairs(big, &d, small, 2 * k);

    if s.len() + k < d.len() {
        // Unpaired pieces witness distance > k; any gap-(k+1) stand-in
        // with the right orientation preserves the clipped value.
        let a = smallest_label(big.tokens()).expect("the larger forest is nonempty");
        let mut power = Vec::with_capacity(2 * (k + 1));
        for _ in 0..=k {
            power.push(Token::open(a));
            power.push(Token::close(a));
        }
        let power = Forest::from_tokens(power).expect("leaf power is balanced");
        let empty = Forest::empty();
        return Ok(if swapped { (empty, power) } else { (power, empty) });
    }

    // Paired pieces have identical token content on both sides, so one
    // reduction serves both hosts and the offset gaps between pairs are
    // unchanged by the rewrite.
    let mut big_edits = Vec::new();
    let mut small_edits = Vec::new();
    for &(pf, pg) in &s {
        match (pf, pg) {
            (Piece::Balanced { i, j }, Piece::Balanced { i: gi, j: gj }) => {
                let piece = Forest::from_tokens(big.fragment(i, j))
                    .expect("balanced pieces parse as forests");
                let repl = horizontal_reduction(&piece, k);
                big_edits.push((i, j, repl.tokens().to_vec()));
                small_edits.push((gi, gj, repl.tokens().to_vec()));
            }
            (
                Piece::Context { i, il, jr, j },
                Piece::Context { i: gi, il: gil, jr: gjr, j: gj },
            ) => {
                let piece = Context::new(big.fragment(i, il), big.fragment(jr, j))
                    .expect("context pieces are valid contexts");
                let repl = vertical_reduction(&piece, k);
                big_edits.push((i, il, repl.left().to_vec()));
                big_edits.push((jr, j, repl.right().to_vec()));
                small_edits.push((gi, gil, repl.left().to_vec()));
                small_edits.push((gjr, gj, repl.right().to_vec()));
            }
            _ => unreachable!("pairs never mix piece shapes"),
        }
    }
    let big_out = Forest::from_tokens(splice_all(big.tokens(), big_edits))
        .expect("reductions keep hosts balanced");
    let small_out = Forest::from_tokens(splice_all(small.tokens(), small_edits))
        .expect("reductions keep hosts balanced");

    let cap = n / 2 + 6358 * k.pow(5);
    debug_assert!(
        big_out.len() <= cap && small_out.len() <= cap,
        "step outputs {} and {} exceed {}",
        big_out.len(),
        small_out.len(),
        cap
    );
    Ok(if swapped { (small_out, big_out) } else { (big_out, small_out) })
}

/// Iterated halving: both outputs have at most `12717k⁵` tokens and the
/// same `ted^w_{≤k}` as the inputs. Inputs already within the bound are
/// returned unchanged. Total work is linear in the input size because the
/// excess over `12716k⁵` at least halves per step.
pub fn forest_kernel(f: &Forest, g: &Forest, k: usize) -> (Forest, Forest) {
    assert!(k >= 1, "threshold k must be at least 1");
    let bound = kernel_size_bound(k);
    let (mut f, mut g) = (f.clone(), g.clone());
    while f.len().max(g.len()) > bound {
        let (nf, ng) = forest_kernel_step(&f, &g, k)
            .expect("sizes above the kernel bound satisfy the step precondition");
        f = nf;
        g = ng;
    }
    (f, g)
}

/// `ted^w_{≤k}(F, G)`: the exact weighted tree edit distance if it is at
/// most `k` whole units, INF otherwise.
pub fn weighted_ted_le_k(f: &Forest, g: &Forest, k: usize, w: &WeightTable) -> CostValue {
    let k32 = u32::try_from(k).expect("threshold k fits in u32");
    let (kf, kg) = forest_kernel(f, g, k);
    weighted_ted(&kf, &kg, w).clip(k32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::parse_forest;
    use wed_core::Alphabet;

    /// `copies` sibling leaves, one relabeled to `odd` at `odd_at` if given.
    fn leaf_row(copies: usize, odd_at: Option<usize>, alpha: &mut Alphabet) -> Forest {
        let a = alpha.intern("a");
        let b = alpha.intern("b");
        let mut tokens = Vec::with_capacity(2 * copies);
        for i in 0..copies {
            let label = if odd_at == Some(i) { b } else { a };
            tokens.push(Token::open(label));
            tokens.push(Token::close(label));
        }
        Forest::from_tokens(tokens).unwrap()
    }

    #[test]
    fn undersized_inputs_are_refused() {
        let mut alpha = Alphabet::new();
        let f = parse_forest("(a)", &mut alpha).unwrap();
        let g = parse_forest("(b)", &mut alpha).unwrap();
        assert_eq!(
            forest_kernel_step(&f, &g, 1),
            Err(ForestKernelError::TooSmall { n: 2, needed: 12716 })
        );
    }

    #[test]
    fn identical_hosts_shrink_identically() {
        let mut alpha = Alphabet::new();
        let f = leaf_row(10_000, None, &mut alpha);
        let (nf, ng) = forest_kernel_step(&f, &f, 1).unwrap();
        assert_eq!(nf, ng);
        assert!(nf.len() <= 10_000 + 6358);
        assert!(nf.len() < f.len());
    }

    #[test]
    fn one_relabel_survives_a_step_and_the_full_kernel() {
        let mut alpha = Alphabet::new();
        let f = leaf_row(10_000, None, &mut alpha);
        let g = leaf_row(10_000, Some(4_321), &mut alpha);
        let w = WeightTable::unit(alpha.clone());

        let (sf, sg) = forest_kernel_step(&f, &g, 1).unwrap();
        assert!(sf.len() <= 16_358 && sg.len() <= 16_358);

        let (kf, kg) = forest_kernel(&f, &g, 1);
        assert!(kf.len() <= kernel_size_bound(1) && kg.len() <= kernel_size_bound(1));
        assert_eq!(weighted_ted(&kf, &kg, &w), CostValue::UNIT);
        assert_eq!(weighted_ted_le_k(&f, &g, 1, &w), CostValue::UNIT);
    }

    #[test]
    fn unpairable_sides_collapse_to_the_sentinel() {
        let mut alpha = Alphabet::new();
        let f = leaf_row(10_000, None, &mut alpha);
        let g = Forest::empty();
        let a = alpha.lookup("a").unwrap();

        let (sf, sg) = forest_kernel_step(&f, &g, 1).unwrap();
        let pair = [Token::open(a), Token::close(a)];
        assert_eq!(sf.tokens(), [pair, pair].concat());
        assert_eq!(sg, Forest::empty());

        // Orientation follows the inputs.
        let (rf, rg) = forest_kernel_step(&g, &f, 1).unwrap();
        assert_eq!(rf, Forest::empty());
        assert_eq!(rg, sf);

        let w = WeightTable::unit(alpha.clone());
        assert_eq!(weighted_ted_le_k(&f, &g, 1, &w), CostValue::INF);
    }

    #[test]
    fn small_inputs_pass_through_the_kernel_unchanged() {
        let mut alpha = Alphabet::new();
        let f = parse_forest("(a (b) (c))", &mut alpha).unwrap();
        let g = parse_forest("(a (b))", &mut alpha).unwrap();
        let (kf, kg) = forest_kernel(&f, &g, 1);
        assert_eq!(kf, f);
        assert_eq!(kg, g);
    }
}
