//! Shortest periods and primitivity of fragments.
//!
//! `p` is a period of `S` when `S[i] = S[i+p]` wherever both sides exist.
//! A fragment counts as *periodic* only when its exponent reaches two,
//! i.e. its shortest period `p` satisfies `2p ≤ |S|`; shorter repetitions
//! are not usable by the reduction engine. A string is *primitive* when it
//! is not a proper power `Q^m`, `m ≥ 2`.

use wed_core::Symbol;

/// The smallest period of a nonempty slice, via the KMP failure function:
/// `per(S) = |S| − (longest proper border of S)`.
pub fn smallest_period_slice(s: &[Symbol]) -> usize {
    assert!(!s.is_empty(), "period of an empty string is undefined");
    let n = s.len();
    let mut border = vec![0usize; n];
    let mut b = 0;
    for i in 1..n {
        while b > 0 && s[i] != s[b] {
            b = border[b - 1];
        }
        if s[i] == s[b] {
            b += 1;
        }
        border[i] = b;
    }
    n - border[n - 1]
}

/// `Some(per(S))` when the fragment is periodic (exponent ≥ 2), else `None`.
pub fn shortest_period_slice(s: &[Symbol]) -> Option<usize> {
    if s.is_empty() {
        return None;
    }
    let p = smallest_period_slice(s);
    (2 * p <= s.len()).then_some(p)
}

/// Whether a nonempty slice is primitive: no period `p` with `2p ≤ |S|`
/// divides `|S|`.
pub fn is_primitive_slice(s: &[Symbol]) -> bool {
    match shortest_period_slice(s) {
        Some(p) => s.len() % p != 0,
        None => true,
    }
}

/// Shortest-period queries over fragments of one sequence.
///
/// Queries recompute the failure function of the fragment, costing
/// O(j − i) each; the reduction engine only ever asks about windows of
/// length 2e, so the per-window cost is bounded by the parameter.
#[derive(Clone, Debug)]
pub struct PeriodIndex {
    text: Vec<Symbol>,
}

impl PeriodIndex {
    pub fn new(text: &[Symbol]) -> PeriodIndex {
        PeriodIndex { text: text.to_vec() }
    }

    pub fn len(&self) -> usize {
        self.text.len()
    }

    pub fn is_empty(&self) -> bool {
        self.text.is_empty()
    }

    /// `per(X[i..j))` when the fragment is periodic (`j − i ≥ 2·per`),
    /// absent otherwise.
    pub fn shortest_period(&self, i: usize, j: usize) -> Option<usize> {
        assert!(i <= j && j <= self.text.len(), "bad fragment [{i}..{j}) of {}", self.text.len());
        shortest_period_slice(&self.text[i..j])
    }

    /// Primitivity of the nonempty fragment `X[i..j)`.
    pub fn is_primitive(&self, i: usize, j: usize) -> bool {
        assert!(i < j && j <= self.text.len(), "bad fragment [{i}..{j}) of {}", self.text.len());
        is_primitive_slice(&self.text[i..j])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn syms(ids: &[u32]) -> Vec<Symbol> {
        ids.iter().map(|&i| Symbol::new(i)).collect()
    }

    #[test]
    fn ababab_has_period_2() {
        let idx = PeriodIndex::new(&syms(&[1, 2, 1, 2, 1, 2]));
        assert_eq!(idx.shortest_period(0, 6), Some(2));
    }

    #[test]
    fn aab_is_not_periodic() {
        // aab has no border, so per(aab) = 3 and the exponent stays at 1.
        let idx = PeriodIndex::new(&syms(&[1, 1, 2]));
        assert_eq!(idx.shortest_period(0, 3), None);
        assert_eq!(smallest_period_slice(&syms(&[1, 1, 2])), 3);
    }

    #[test]
    fn unary_string_has_period_1() {
        let idx = PeriodIndex::new(&syms(&[7, 7, 7, 7]));
        assert_eq!(idx.shortest_period(0, 4), Some(1));
        assert_eq!(idx.shortest_period(1, 3), Some(1));
        assert_eq!(idx.shortest_period(2, 3), None, "single symbol has exponent 1");
    }

    #[test]
    fn primitivity_cases() {
        let abab = syms(&[1, 2, 1, 2]);
        let aba = syms(&[1, 2, 1]);
        let a = syms(&[1]);
        assert!(!is_primitive_slice(&abab), "(ab)^2 is a proper power");
        assert!(is_primitive_slice(&aba), "period 2 does not divide 3");
        assert!(is_primitive_slice(&a));
        let idx = PeriodIndex::new(&abab);
        assert!(idx.is_primitive(0, 3));
        assert!(!idx.is_primitive(0, 4));
    }
}
