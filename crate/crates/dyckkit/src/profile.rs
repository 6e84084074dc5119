//! Prefix height profiles of bracket strings.

use wed_core::Symbol;

use crate::alphabet::DyckAlphabet;

/// The prefix heights of a bracket string: `H(i)` is the number of opening
/// brackets minus the number of closing brackets among the first `i`
/// symbols, so `H(0) = 0` and consecutive entries differ by exactly one.
#[derive(Clone, Debug)]
pub struct HeightProfile {
    heights: Vec<i64>,
    peaks: Vec<usize>,
    valleys: Vec<usize>,
}

impl HeightProfile {
    pub fn new(x: &[Symbol], alpha: &DyckAlphabet) -> HeightProfile {
        let mut heights = Vec::with_capacity(x.len() + 1);
        heights.push(0);
        for &s in x {
            heights.push(heights.last().unwrap() + alpha.height(s));
        }
        let mut peaks = Vec::new();
        let mut valleys = Vec::new();
        for i in 1..x.len() {
            if heights[i - 1] > heights[i] && heights[i] < heights[i + 1] {
                valleys.push(i);
            } else if heights[i - 1] < heights[i] && heights[i] > heights[i + 1] {
                peaks.push(i);
            }
        }
        HeightProfile { heights, peaks, valleys }
    }

    /// `H(i)` for `i` in `0..=n`.
    pub fn height(&self, i: usize) -> i64 {
        self.heights[i]
    }

    /// All `n + 1` prefix heights.
    pub fn heights(&self) -> &[i64] {
        &self.heights
    }

    /// Indices `i` with `H(i-1) > H(i) < H(i+1)`.
    pub fn valleys(&self) -> &[usize] {
        &self.valleys
    }

    /// Indices `i` with `H(i-1) < H(i) > H(i+1)`.
    pub fn peaks(&self) -> &[usize] {
        &self.peaks
    }
}

/// The number of valleys in the height profile of `x`.
pub fn valley_count(x: &[Symbol], alpha: &DyckAlphabet) -> usize {
    HeightProfile::new(x, alpha).valleys().len()
}
