//! Shrinking runs of opening brackets while preserving bounded distances.

use seqkit::{periodicity_reduction, PrimitiveFragments};
use wed_core::Symbol;

use crate::alphabet::DyckAlphabet;
use crate::DyckError;

/// Shrinks a run of opening brackets to at most `156k³` symbols. For every
/// skewmetric table, replacing a run and its reverse-complement partner by
/// the reduced forms preserves the k-clipped Dyck distance whenever the two
/// fragments are k-synchronized in the host string.
///
/// Periodicity reduction with exponent `8k` over primitive fragments of
/// length at most `4k` first removes long periodic stretches; if the result
/// still exceeds `156k³` symbols, the middle is cropped out, keeping `78k³`
/// from each end. The crop junction can fuse a fresh power out of a prefix
/// tail and a suffix head that were far apart before, so one more reduction
/// pass runs on the cropped string. That pass is the identity whenever the
/// seam is clean, and it never grows its input, so the output both fits the
/// length bound and avoids `Q^{8k+1}` for every primitive `Q` of length at
/// most `4k`.
pub fn dyck_reduction(
    p: &[Symbol],
    k: usize,
    alpha: &DyckAlphabet,
) -> Result<Vec<Symbol>, DyckError> {
    assert!(k >= 1, "the distance bound must be positive");
    if let Some(at) = (0..p.len()).find(|&i| !alpha.is_opening(p[i])) {
        return Err(DyckError::NotOpening { at });
    }
    let family = PrimitiveFragments { max_len: 4 * k };
    let reduced = periodicity_reduction(p, 8 * k, &family);
    let half = 78 * k.pow(3);
    Ok(if reduced.len() >= 2 * half {
        let mut crop = reduced[..half].to_vec();
        crop.extend_from_slice(&reduced[reduced.len() - half..]);
        periodicity_reduction(&crop, 8 * k, &family)
    } else {
        reduced
    })
}

#[cfg(test)]
mod tests {
    use wed_core::Alphabet;

    use super::*;

    fn setup() -> (DyckAlphabet, Symbol, Symbol, Symbol) {
        let mut alpha = Alphabet::new();
        let dyck = DyckAlphabet::parse("(\t)\n[\t]\n", &mut alpha).unwrap();
        let open1 = alpha.lookup("(").unwrap();
        let open2 = alpha.lookup("[").unwrap();
        let close1 = alpha.lookup(")").unwrap();
        (dyck, open1, open2, close1)
    }

    #[test]
    fn unary_run_collapses_to_exponent_eight() {
        let (dyck, open, _, _) = setup();
        let run = vec![open; 1000];
        assert_eq!(dyck_reduction(&run, 1, &dyck).unwrap(), vec![open; 8]);
    }

    #[test]
    fn short_aperiodic_runs_pass_through() {
        let (dyck, open1, open2, _) = setup();
        let run = vec![open1, open2, open1, open1, open2];
        assert_eq!(dyck_reduction(&run, 1, &dyck).unwrap(), run);
    }

    #[test]
    fn long_aperiodic_runs_are_cropped_to_both_ends() {
        let (dyck, open1, open2, _) = setup();
        // A ruler word over two openers: position i carries open2 raised to
        // min(1, trailing zeros), giving no ninth power of any short block.
        let run: Vec<Symbol> = (1u32..=200)
            .map(|pos| if pos.trailing_zeros() % 2 == 0 { open1 } else { open2 })
            .collect();
        let out = dyck_reduction(&run, 1, &dyck).unwrap();
        assert_eq!(out.len(), 156);
        assert_eq!(out[..78], run[..78]);
        assert_eq!(out[78..], run[run.len() - 78..]);
    }

    #[test]
    fn closing_brackets_are_rejected() {
        let (dyck, open1, _, close1) = setup();
        let err = dyck_reduction(&[open1, close1], 1, &dyck).unwrap_err();
        assert_eq!(err, DyckError::NotOpening { at: 1 });
    }
}
