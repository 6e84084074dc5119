//! Length reduction for perfectly matched runs.

use seqkit::{periodicity_reduction, PrimitiveFragments};
use wed_core::Symbol;

/// Shrinks `P` to an equivalent string of length at most `42k³`.
///
/// First caps repetitions: no substring `Q^{4k+1}` with primitive `Q` of
/// length at most `2k` survives. If the capped string still has at least
/// `42k³` symbols, only its length-`21k³` prefix and suffix are kept.
/// Each half is repetition-capped on its own, but gluing them can fuse a
/// fresh power across the junction (the prefix may end with `a^{4k}` and
/// the suffix begin with `a`), so the capping scan runs once more over
/// the cropped string; it is the identity whenever the junction is clean.
pub fn string_reduction(p: &[Symbol], k: usize) -> Vec<Symbol> {
    assert!(k >= 1, "edit budget must be positive");
    let family = PrimitiveFragments { max_len: 2 * k };
    let reduced = periodicity_reduction(p, 4 * k, &family);
    let half = 21 * k.pow(3);
    if reduced.len() >= 2 * half {
        let mut crop = reduced[..half].to_vec();
        crop.extend_from_slice(&reduced[reduced.len() - half..]);
        periodicity_reduction(&crop, 4 * k, &family)
    } else {
        reduced
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unary(len: usize) -> Vec<Symbol> {
        vec![Symbol::new(1); len]
    }

    #[test]
    fn unary_runs_cap_at_the_exponent() {
        assert_eq!(string_reduction(&unary(100), 1), unary(4));
        assert_eq!(string_reduction(&unary(3), 1), unary(3));
    }

    #[test]
    fn short_inputs_pass_through() {
        let ab = vec![Symbol::new(1), Symbol::new(2)];
        assert_eq!(string_reduction(&ab, 1), ab);
        assert_eq!(string_reduction(&[], 1), Vec::<Symbol>::new());
    }

    #[test]
    fn long_aperiodic_inputs_keep_prefix_and_suffix() {
        // The ruler word: position p holds the trailing-zero count of p,
        // plus one. Adjacent symbols always differ and no length-2 period
        // persists, so no Q^5 with |Q| ≤ 2 occurs anywhere.
        let p: Vec<Symbol> = (1u32..=120)
            .map(|pos| Symbol::new(pos.trailing_zeros() + 1))
            .collect();
        let out = string_reduction(&p, 1);
        assert_eq!(out.len(), 42);
        assert_eq!(out[..21], p[..21]);
        assert_eq!(out[21..], p[120 - 21..]);
    }
}
