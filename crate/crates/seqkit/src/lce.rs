//! Longest-common-extension queries.
//!
//! [`LceIndex`] answers `lce(i, j)`: the length of the longest common
//! prefix of two suffixes, within one sequence or across an indexed pair.
//! Two backends share the same exact semantics:
//!
//! * the default *scan* backend compares symbols directly — O(ℓ) per query
//!   with no build cost, the right trade for pipelines that issue a bounded
//!   number of queries whose total scanned length is near-linear;
//! * the *indexed* backend builds a suffix array (prefix doubling), the LCP
//!   array (Kasai), and a range-minimum table, paying an
//!   O(n log n)–O(n log² n) build for O(B)-time queries. Tests drive both
//!   against the naive definition.
//!
//! For a joint index the two sequences are concatenated around a separator
//! key that occurs nowhere else, so no query ever extends across the
//! boundary; the public API keeps the two coordinate spaces apart.

use wed_core::Symbol;

use crate::rmq::RangeMin;

#[derive(Clone, Debug)]
pub struct LceIndex {
    x_len: usize,
    /// Present iff two sequences are indexed jointly.
    y_len: Option<usize>,
    /// Symbol keys shifted by one, with 0 as the joint separator.
    text: Vec<u64>,
    indexed: Option<Indexed>,
}

#[derive(Clone, Debug)]
struct Indexed {
    rank: Vec<u32>,
    /// `lcp[w]` = LCE of the suffixes ranked `w-1` and `w`.
    lcp: RangeMin<u32>,
}

impl LceIndex {
    /// Scan-backed self-LCE over one sequence.
    pub fn new(x: &[Symbol]) -> LceIndex {
        LceIndex { x_len: x.len(), y_len: None, text: keys(x, None), indexed: None }
    }

    /// Scan-backed LCE over a pair of sequences.
    pub fn new_joint(x: &[Symbol], y: &[Symbol]) -> LceIndex {
        LceIndex { x_len: x.len(), y_len: Some(y.len()), text: keys(x, Some(y)), indexed: None }
    }

    /// Suffix-array-backed self-LCE.
    pub fn indexed(x: &[Symbol]) -> LceIndex {
        let mut idx = LceIndex::new(x);
        idx.build();
        idx
    }

    /// Suffix-array-backed LCE over a pair.
    pub fn indexed_joint(x: &[Symbol], y: &[Symbol]) -> LceIndex {
        let mut idx = LceIndex::new_joint(x, y);
        idx.build();
        idx
    }

    fn build(&mut self) {
        if self.text.is_empty() {
            return;
        }
        let sa = suffix_array(&self.text);
        let mut rank = vec![0u32; self.text.len()];
        for (w, &i) in sa.iter().enumerate() {
            rank[i as usize] = w as u32;
        }
        let lcp = kasai(&self.text, &sa, &rank);
        self.indexed = Some(Indexed { rank, lcp: RangeMin::new(&lcp) });
    }

    /// LCE of two suffixes of the first (or only) sequence.
    pub fn lce(&self, i: usize, j: usize) -> usize {
        assert!(i <= self.x_len && j <= self.x_len, "positions ({i}, {j}) exceed |X| = {}", self.x_len);
        if i == j {
            return self.x_len - i;
        }
        self.extend(i, j).min(self.x_len - i).min(self.x_len - j)
    }

    /// LCE of a suffix of X against a suffix of Y (joint indexes only).
    pub fn lce_xy(&self, i: usize, j: usize) -> usize {
        let y_len = self.y_len.expect("lce_xy requires a joint index");
        assert!(i <= self.x_len && j <= y_len, "positions ({i}, {j}) exceed ({}, {y_len})", self.x_len);
        self.extend(i, self.x_len + 1 + j).min(self.x_len - i).min(y_len - j)
    }

    /// LCE of two suffixes of Y (joint indexes only).
    pub fn lce_yy(&self, i: usize, j: usize) -> usize {
        let y_len = self.y_len.expect("lce_yy requires a joint index");
        assert!(i <= y_len && j <= y_len, "positions ({i}, {j}) exceed |Y| = {y_len}");
        if i == j {
            return y_len - i;
        }
        let base = self.x_len + 1;
        self.extend(base + i, base + j).min(y_len - i).min(y_len - j)
    }

    /// Common-extension length at two distinct concatenation positions.
    /// The separator is unique, so the result never spans it.
    fn extend(&self, i: usize, j: usize) -> usize {
        let n = self.text.len();
        if i >= n || j >= n {
            return 0;
        }
        match &self.indexed {
            Some(Indexed { rank, lcp }) => {
                let (ri, rj) = (rank[i] as usize, rank[j] as usize);
                let (lo, hi) = (ri.min(rj), ri.max(rj));
                lcp.min(lo + 1, hi) as usize
            }
            None => {
                let mut l = 0;
                while i + l < n && j + l < n && self.text[i + l] == self.text[j + l] {
                    l += 1;
                }
                l
            }
        }
    }
}

fn keys(x: &[Symbol], y: Option<&[Symbol]>) -> Vec<u64> {
    let mut text: Vec<u64> = Vec::with_capacity(x.len() + y.map_or(0, |y| y.len() + 1));
    text.extend(x.iter().map(|s| u64::from(s.id()) + 1));
    if let Some(y) = y {
        text.push(0);
        text.extend(y.iter().map(|s| u64::from(s.id()) + 1));
    }
    text
}

/// Prefix-doubling suffix array; each round re-sorts by (rank, rank+k).
fn suffix_array(text: &[u64]) -> Vec<u32> {
    let n = text.len();
    assert!(n < u32::MAX as usize, "sequence too long to index");
    let mut sa: Vec<u32> = (0..n as u32).collect();
    sa.sort_unstable_by_key(|&i| text[i as usize]);
    let mut rank = vec![0u32; n];
    for w in 1..n {
        let (prev, cur) = (sa[w - 1] as usize, sa[w] as usize);
        rank[cur] = rank[prev] + u32::from(text[cur] != text[prev]);
    }
    let mut k = 1;
    let mut tmp = vec![0u32; n];
    while k < n && (rank[sa[n - 1] as usize] as usize) < n - 1 {
        let key = |i: u32| {
            let i = i as usize;
            (rank[i], if i + k < n { rank[i + k] + 1 } else { 0 })
        };
        sa.sort_unstable_by_key(|&i| key(i));
        tmp[sa[0] as usize] = 0;
        for w in 1..n {
            let (prev, cur) = (sa[w - 1], sa[w]);
            tmp[cur as usize] = tmp[prev as usize] + u32::from(key(cur) != key(prev));
        }
        std::mem::swap(&mut rank, &mut tmp);
        k *= 2;
    }
    sa
}

/// Kasai's LCP construction: `lcp[w]` for adjacent suffix-array ranks.
fn kasai(text: &[u64], sa: &[u32], rank: &[u32]) -> Vec<u32> {
    let n = text.len();
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        let r = rank[i] as usize;
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1] as usize;
        while i + h < n && j + h < n && text[i + h] == text[j + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}
