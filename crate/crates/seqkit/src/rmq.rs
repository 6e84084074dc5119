//! Block-decomposed range-minimum queries.
//!
//! Values are split into fixed blocks; a sparse table answers min queries
//! over whole blocks in O(1) and the two boundary blocks are scanned
//! directly. Queries cost O(B) with B = 64, and the index needs only
//! O(n/B · log(n/B)) extra words, which keeps height profiles of
//! multi-million-token forests cheap to index.

const BLOCK: usize = 64;

/// Range-minimum index over an owned copy of the values.
#[derive(Clone, Debug)]
pub struct RangeMin<T> {
    values: Vec<T>,
    /// `table[level]`: minima of 2^level consecutive blocks.
    table: Vec<Vec<T>>,
}

impl<T: Copy + Ord> RangeMin<T> {
    pub fn new(values: &[T]) -> RangeMin<T> {
        let blocks: Vec<T> = values
            .chunks(BLOCK)
            .map(|c| *c.iter().min().expect("chunks are nonempty"))
            .collect();
        let mut table = vec![blocks];
        let mut width = 1;
        while width * 2 <= table[0].len() {
            let prev = table.last().expect("at least one level");
            let next: Vec<T> = (0..prev.len() - width)
                .map(|i| prev[i].min(prev[i + width]))
                .collect();
            table.push(next);
            width *= 2;
        }
        RangeMin { values: values.to_vec(), table }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Minimum of `values[l..=r]`.
    pub fn min(&self, l: usize, r: usize) -> T {
        assert!(l <= r && r < self.values.len(), "bad range [{l}..={r}] of {}", self.values.len());
        let (bl, br) = (l / BLOCK, r / BLOCK);
        if br - bl <= 1 {
            return self.scan(l, r);
        }
        let head = self.scan(l, (bl + 1) * BLOCK - 1);
        let tail = self.scan(br * BLOCK, r);
        let mid = self.block_min(bl + 1, br - 1);
        head.min(tail).min(mid)
    }

    fn scan(&self, l: usize, r: usize) -> T {
        *self.values[l..=r].iter().min().expect("nonempty by construction")
    }

    /// Minimum over whole blocks `l..=r` via the sparse table.
    fn block_min(&self, l: usize, r: usize) -> T {
        let level = usize::BITS as usize - 1 - (r - l + 1).leading_zeros() as usize;
        let width = 1 << level;
        self.table[level][l].min(self.table[level][r + 1 - width])
    }
}
