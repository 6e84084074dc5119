//! Kernelization for the bounded weighted Dyck distance.

use wed_core::{CostValue, Symbol, WeightTable};

use crate::alphabet::DyckAlphabet;
use crate::dp::{unweighted_dyck_bounded, weighted_dyck_dp};
use crate::preprocess::greedy_preprocess;
use crate::profile::HeightProfile;
use crate::reduction::dyck_reduction;
use crate::DyckError;

/// The kernel length bound `630k⁴`.
pub fn dyck_kernel_bound(k: usize) -> usize {
    630 * k.pow(4)
}

/// Shrinks a greedily preprocessed string to at most `630k⁴` symbols while
/// preserving the k-clipped Dyck distance for every skewmetric table.
///
/// Inputs within the bound pass through unchanged. When even the unit-cost
/// distance exceeds `k`, the kernel is `ā^(k+1) a^(k+1)` for the smallest
/// opening bracket `a`, which also has distance beyond `k` under every
/// normalized table. Otherwise an optimal
/// unit-cost matching guides a left-to-right walk: edited positions are
/// copied verbatim, and each maximal run of perfectly matched brackets is
/// replaced by its reduction (computed on the opening side; closing runs
/// are reduced through their reverse complement).
pub fn dyck_kernel(
    x: &[Symbol],
    k: usize,
    alpha: &DyckAlphabet,
) -> Result<Vec<Symbol>, DyckError> {
    assert!(k >= 1, "the distance bound must be positive");
    if let Some(at) =
        (0..x.len().saturating_sub(1)).find(|&i| alpha.is_opening(x[i]) && alpha.complement(x[i]) == x[i + 1])
    {
        return Err(DyckError::NotPreprocessed { at });
    }
    if x.len() <= dyck_kernel_bound(k) {
        return Ok(x.to_vec());
    }
    let Some((_, matching)) = unweighted_dyck_bounded(x, k, alpha) else {
        // Distance beyond k; return a fixed far stand-in. In any matching
        // of close^(k+1) open^(k+1) a pair costs a unit per two positions
        // and a single costs one, so every normalized table prices it at
        // k+1 or more. A run of one symbol would not do: two copies of an
        // opening bracket repair with a single substitution.
        let a = alpha.smallest_opening().expect("a nonempty input implies bracket pairs");
        let mut sentinel = vec![alpha.complement(a); k + 1];
        sentinel.extend(std::iter::repeat(a).take(k + 1));
        return Ok(sentinel);
    };

    let n = x.len();
    let partner = matching.partner_map(n);
    let profile = HeightProfile::new(x, alpha);
    // A perfect pair opens at the smaller index and closes with the
    // complement at the larger one.
    let perfect = |lo: usize, hi: usize| {
        lo < hi && alpha.is_opening(x[lo]) && alpha.complement(x[lo]) == x[hi]
    };
    let edited = |i: usize| match partner[i] {
        None => true,
        Some(j) => !perfect(i.min(j), i.max(j)),
    };
    // Fragments matched by a witness of cost at most k are k-synchronized:
    // between the opening side's end and the closing side's start, the
    // height never drops far below both endpoints.
    let synchronized = |open_end: usize, close_start: usize| {
        let low = *profile.heights()[open_end..=close_start].iter().min().unwrap();
        profile.height(open_end) + profile.height(close_start) - 2 * low <= 2 * k as i64
    };

    let mut out = Vec::new();
    let mut p_run: Vec<Symbol> = Vec::new();
    let mut q_run: Vec<Symbol> = Vec::new();
    let mut run_start = 0usize;
    for i in 0..n {
        if edited(i) {
            debug_assert!(p_run.is_empty() && q_run.is_empty());
            out.push(x[i]);
            continue;
        }
        let j = partner[i].expect("unedited positions are matched");
        if alpha.is_opening(x[i]) {
            if p_run.is_empty() {
                run_start = i;
            }
            p_run.push(x[i]);
            // The run continues while the adjacent positions on both sides
            // form the next perfect pair.
            let continues =
                i + 1 < n && j >= 1 && partner[i + 1] == Some(j - 1) && perfect(i + 1, j - 1);
            if !continues {
                debug_assert_eq!(partner[run_start], Some(j + p_run.len() - 1));
                debug_assert!(synchronized(i + 1, j));
                out.extend(dyck_reduction(&p_run, k, alpha)?);
                p_run.clear();
            }
        } else {
            if q_run.is_empty() {
                run_start = i;
            }
            q_run.push(x[i]);
            let continues =
                i + 1 < n && j >= 1 && partner[i + 1] == Some(j - 1) && perfect(j - 1, i + 1);
            if !continues {
                let first = partner[run_start].expect("run positions are matched");
                debug_assert_eq!(first, j + q_run.len() - 1);
                debug_assert!(synchronized(first + 1, run_start));
                let flipped = alpha.reverse_complement(&q_run);
                let reduced = dyck_reduction(&flipped, k, alpha)?;
                out.extend(alpha.reverse_complement(&reduced));
                q_run.clear();
            }
        }
    }
    debug_assert!(p_run.is_empty() && q_run.is_empty());
    debug_assert!(out.len() <= dyck_kernel_bound(k));
    Ok(out)
}

/// End-to-end bounded distance: greedy preprocessing, kernelization, and
/// the banded interval DP, clipped at `k` units.
pub fn weighted_dyck_le_k(x: &[Symbol], k: usize, w: &WeightTable) -> CostValue {
    let alpha =
        DyckAlphabet::from_weight_table(w).expect("skewmetric tables carry the involution");
    let pre = greedy_preprocess(x, &alpha);
    let kernel =
        dyck_kernel(&pre, k, &alpha).expect("preprocessed input over the bracket alphabet");
    let (value, _) = weighted_dyck_dp(&kernel, w, Some(k));
    value
}

#[cfg(test)]
mod tests {
    use wed_core::Alphabet;

    use super::*;

    fn two_types() -> (DyckAlphabet, Vec<Symbol>) {
        let mut alpha = Alphabet::new();
        let dyck = DyckAlphabet::parse("(\t)\n[\t]\n", &mut alpha).unwrap();
        let syms = ["(", ")", "[", "]"]
            .iter()
            .map(|t| alpha.lookup(t).unwrap())
            .collect();
        (dyck, syms)
    }

    #[test]
    fn short_inputs_pass_through() {
        let (dyck, s) = two_types();
        let x = vec![s[1], s[0], s[2]];
        assert_eq!(dyck_kernel(&x, 1, &dyck).unwrap(), x);
        assert_eq!(dyck_kernel(&[], 1, &dyck).unwrap(), Vec::<Symbol>::new());
    }

    #[test]
    fn unpreprocessed_input_is_rejected() {
        let (dyck, s) = two_types();
        let err = dyck_kernel(&[s[1], s[0], s[1]], 1, &dyck).unwrap_err();
        assert_eq!(err, DyckError::NotPreprocessed { at: 1 });
    }

    #[test]
    fn far_inputs_collapse_to_the_sentinel() {
        let (dyck, s) = two_types();
        // 700 opens are at least 350 edits away.
        let x = vec![s[0]; 700];
        let sentinel = vec![s[1], s[1], s[0], s[0]];
        assert_eq!(dyck_kernel(&x, 1, &dyck).unwrap(), sentinel);
        // The stand-in itself prices beyond the budget.
        let w = dyck.unit_table();
        let (value, _) = crate::dp::weighted_dyck_dp(&sentinel, &w, None);
        assert_eq!(value, CostValue::from_units(2).unwrap());
    }

    #[test]
    fn bracketed_tower_with_one_intruder_shrinks_to_seventeen() {
        let (dyck, s) = two_types();
        let mut x = vec![s[0]; 1000];
        x.push(s[3]);
        x.extend(std::iter::repeat(s[1]).take(1000));
        let kernel = dyck_kernel(&x, 1, &dyck).unwrap();
        let mut expected = vec![s[0]; 8];
        expected.push(s[3]);
        expected.extend(std::iter::repeat(s[1]).take(8));
        assert_eq!(kernel, expected);
        assert_eq!(kernel.len(), 17);
    }

    #[test]
    fn pipeline_prices_the_intruder_at_one_unit() {
        let (dyck, s) = two_types();
        let w = dyck.unit_table();
        let mut x = vec![s[0]; 1000];
        x.push(s[3]);
        x.extend(std::iter::repeat(s[1]).take(1000));
        assert_eq!(weighted_dyck_le_k(&x, 1, &w), CostValue::UNIT);
    }

    #[test]
    fn balanced_inputs_cost_nothing_and_deep_stacks_overflow_the_bound() {
        let (dyck, s) = two_types();
        let w = dyck.unit_table();
        let x = vec![s[0], s[2], s[3], s[1]];
        assert_eq!(weighted_dyck_le_k(&x, 1, &w), CostValue::ZERO);
        assert!(weighted_dyck_le_k(&[s[0]; 5], 2, &w).is_inf());
    }
}
