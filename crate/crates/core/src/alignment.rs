//! Alignments as monotone lattice paths.
//!
//! An alignment of `X` onto `Y` is a path from `(0, 0)` to `(|X|, |Y|)`
//! whose steps move by `(1, 0)` (delete `X[x]`), `(0, 1)` (insert `Y[y]`),
//! or `(1, 1)` (align `X[x]` with `Y[y]`, a match when the symbols agree).

use thiserror::Error;

use crate::cost::{CostError, CostValue};
use crate::symbol::Symbol;
use crate::weights::WeightTable;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlignmentError {
    #[error("alignment path must contain at least the starting point")]
    EmptyPath,
    #[error("alignment must start at (0, 0), found ({0}, {1})")]
    BadStart(usize, usize),
    #[error("step {index} moves by ({dx}, {dy}); only (1,0), (0,1), (1,1) are allowed")]
    BadStep { index: usize, dx: isize, dy: isize },
    #[error("alignment ends at ({0}, {1}) but the sequences have lengths ({2}, {3})")]
    EndpointMismatch(usize, usize, usize, usize),
    #[error(transparent)]
    Cost(#[from] CostError),
}

/// One alignment step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    Delete,
    Insert,
    Align,
}

/// A monotone lattice path. Construction checks the start point and the
/// step shape; the endpoint is checked against concrete sequences by
/// [`alignment_cost`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alignment {
    path: Vec<(usize, usize)>,
}

impl Alignment {
    pub fn new(path: Vec<(usize, usize)>) -> Result<Alignment, AlignmentError> {
        match path.first() {
            None => return Err(AlignmentError::EmptyPath),
            Some(&(x, y)) if (x, y) != (0, 0) => return Err(AlignmentError::BadStart(x, y)),
            _ => {}
        }
        for (index, pair) in path.windows(2).enumerate() {
            let (dx, dy) = (
                pair[1].0 as isize - pair[0].0 as isize,
                pair[1].1 as isize - pair[0].1 as isize,
            );
            if !matches!((dx, dy), (1, 0) | (0, 1) | (1, 1)) {
                return Err(AlignmentError::BadStep { index, dx, dy });
            }
        }
        Ok(Alignment { path })
    }

    /// The diagonal alignment of two equal-length sequences.
    pub fn identity(n: usize) -> Alignment {
        Alignment { path: (0..=n).map(|i| (i, i)).collect() }
    }

    pub fn path(&self) -> &[(usize, usize)] {
        &self.path
    }

    pub fn endpoint(&self) -> (usize, usize) {
        *self.path.last().expect("paths are nonempty by construction")
    }

    /// Maximum |x − y| along the path.
    pub fn width(&self) -> usize {
        self.path
            .iter()
            .map(|&(x, y)| x.abs_diff(y))
            .max()
            .unwrap_or(0)
    }

    /// Steps together with the pre-step position.
    pub fn steps(&self) -> impl Iterator<Item = ((usize, usize), Step)> + '_ {
        self.path.windows(2).map(|pair| {
            let step = match (pair[1].0 - pair[0].0, pair[1].1 - pair[0].1) {
                (1, 0) => Step::Delete,
                (0, 1) => Step::Insert,
                (1, 1) => Step::Align,
                _ => unreachable!("validated on construction"),
            };
            (pair[0], step)
        })
    }
}

/// Total cost of the edits an alignment performs: `w(X[x], ε)` per
/// deletion, `w(ε, Y[y])` per insertion, `w(X[x], Y[y])` per aligned pair
/// (zero for matches since the diagonal is zero).
pub fn alignment_cost(
    x: &[Symbol],
    y: &[Symbol],
    alignment: &Alignment,
    w: &WeightTable,
) -> Result<CostValue, AlignmentError> {
    let end = alignment.endpoint();
    if end != (x.len(), y.len()) {
        return Err(AlignmentError::EndpointMismatch(end.0, end.1, x.len(), y.len()));
    }
    let mut total = CostValue::ZERO;
    for ((px, py), step) in alignment.steps() {
        let edit = match step {
            Step::Delete => w.cost(x[px], Symbol::EPSILON),
            Step::Insert => w.cost(Symbol::EPSILON, y[py]),
            Step::Align => w.cost(x[px], y[py]),
        };
        total = total.checked_add(edit)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbol::Alphabet;

    fn syms(alpha: &mut Alphabet, text: &str) -> Vec<Symbol> {
        text.split_whitespace().map(|t| alpha.intern(t)).collect()
    }

    #[test]
    fn delete_match_substitute_costs_two_units() {
        let mut alpha = Alphabet::new();
        let x = syms(&mut alpha, "a b c");
        let y = syms(&mut alpha, "b d");
        let w = WeightTable::unit(alpha);
        let a = Alignment::new(vec![(0, 0), (1, 0), (2, 1), (3, 2)]).unwrap();
        assert_eq!(
            alignment_cost(&x, &y, &a, &w).unwrap(),
            CostValue::from_units(2).unwrap()
        );
        assert_eq!(a.width(), 1);
    }

    #[test]
    fn identity_path_costs_zero() {
        let mut alpha = Alphabet::new();
        let x = syms(&mut alpha, "p q r s");
        let w = WeightTable::unit(alpha);
        let a = Alignment::identity(x.len());
        assert_eq!(alignment_cost(&x, &x, &a, &w).unwrap(), CostValue::ZERO);
    }

    #[test]
    fn align_then_delete_under_a_custom_table() {
        // X = a b, Y = c, aligning a~c then deleting b: 1 + 1 = 2.
        let mut alpha = Alphabet::new();
        let x = syms(&mut alpha, "a b");
        let y = syms(&mut alpha, "c");
        let table = WeightTable::parse(
            "a\tc\t1\nb\t-\t1\na\t-\t5\nb\tc\t5\nc\t-\t5\n-\ta\t5\n-\tb\t5\n-\tc\t5\n",
            &mut alpha,
        )
        .unwrap();
        let a = Alignment::new(vec![(0, 0), (1, 1), (2, 1)]).unwrap();
        assert_eq!(
            alignment_cost(&x, &y, &a, &table).unwrap(),
            CostValue::from_units(2).unwrap()
        );
    }

    #[test]
    fn invalid_paths_are_rejected() {
        assert_eq!(Alignment::new(vec![]).unwrap_err(), AlignmentError::EmptyPath);
        assert_eq!(
            Alignment::new(vec![(1, 0)]).unwrap_err(),
            AlignmentError::BadStart(1, 0)
        );
        assert!(matches!(
            Alignment::new(vec![(0, 0), (2, 1)]).unwrap_err(),
            AlignmentError::BadStep { index: 0, dx: 2, dy: 1 }
        ));
        assert!(matches!(
            Alignment::new(vec![(0, 0), (1, 1), (1, 0)]).unwrap_err(),
            AlignmentError::BadStep { index: 1, .. }
        ));
    }

    #[test]
    fn endpoint_must_match_the_sequences() {
        let mut alpha = Alphabet::new();
        let x = syms(&mut alpha, "a a");
        let w = WeightTable::unit(alpha);
        let a = Alignment::identity(1);
        assert!(matches!(
            alignment_cost(&x, &x, &a, &w).unwrap_err(),
            AlignmentError::EndpointMismatch(1, 1, 2, 2)
        ));
    }
}
