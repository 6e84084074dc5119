//! Contexts: trees with a single balanced hole.

use wed_core::Symbol;

use crate::forest::{Forest, ForestError};
use crate::token::{balanced_slice, Token};

/// Construction failures for contexts.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ContextError {
    #[error("context halves must both be nonempty")]
    EmptyHalf,
    #[error("context halves do not concatenate into a forest: {0}")]
    NotBalanced(ForestError),
    #[error("context halves concatenate into a forest with more than one root")]
    NotATree,
}

/// A context `⟨L; R⟩`: token sequences whose concatenation `L·R` is a
/// single tree. Substituting any balanced sequence between the halves
/// again yields a tree, so contexts compose: `C ⋆ C' = ⟨L·L'; R'·R⟩`.
#[derive(Clone, PartialEq, Eq)]
pub struct Context {
    left: Vec<Token>,
    right: Vec<Token>,
}

impl Context {
    pub fn new(left: Vec<Token>, right: Vec<Token>) -> Result<Context, ContextError> {
        if left.is_empty() || right.is_empty() {
            return Err(ContextError::EmptyHalf);
        }
        let mut joined = left.clone();
        joined.extend_from_slice(&right);
        let whole = Forest::from_tokens(joined).map_err(ContextError::NotBalanced)?;
        if !whole.is_tree(0, whole.len()) {
            return Err(ContextError::NotATree);
        }
        Ok(Context { left, right })
    }

    pub fn left(&self) -> &[Token] {
        &self.left
    }

    pub fn right(&self) -> &[Token] {
        &self.right
    }

    /// Total number of tokens across both halves.
    pub fn len(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of nodes split across the halves: opens of `L` whose close
    /// lies in `R`. These nodes form the root-to-hole spine.
    pub fn depth(&self) -> usize {
        let mut h: usize = 0;
        for t in &self.left {
            if t.is_open() {
                h += 1;
            } else {
                h -= 1;
            }
        }
        h
    }

    /// `self ⋆ inner`: plugs `inner` into the hole of `self`.
    pub fn compose(&self, inner: &Context) -> Context {
        let mut left = self.left.clone();
        left.extend_from_slice(&inner.left);
        let mut right = inner.right.clone();
        right.extend_from_slice(&self.right);
        Context { left, right }
    }

    /// Composes a nonempty chain of contexts outermost-first.
    pub fn compose_all(chain: &[Context]) -> Context {
        assert!(!chain.is_empty(), "cannot compose an empty chain");
        let mut left = Vec::new();
        let mut right = Vec::new();
        for c in chain {
            left.extend_from_slice(&c.left);
        }
        for c in chain.iter().rev() {
            right.extend_from_slice(&c.right);
        }
        Context { left, right }
    }

    /// The unique factorization into depth-1 contexts, outermost first.
    ///
    /// Each factor is `⟨open(a)·F; G·close(a)⟩` for a spine node labeled
    /// `a` with a balanced forest on either side of the hole.
    pub fn factor_depth1(&self) -> Vec<Depth1> {
        // Spine opens are the positions of L unmatched within L; spine
        // closes are the positions of R unmatched within R, in reverse
        // pairing order (the first unmatched close partners the last
        // unmatched open).
        let mut open_stack: Vec<usize> = Vec::new();
        for (i, t) in self.left.iter().enumerate() {
            if t.is_open() {
                open_stack.push(i);
            } else {
                open_stack.pop();
            }
        }
        let mut close_positions: Vec<usize> = Vec::new();
        let mut pending: usize = 0;
        for (i, t) in self.right.iter().enumerate() {
            if t.is_open() {
                pending += 1;
            } else if pending > 0 {
                pending -= 1;
            } else {
                close_positions.push(i);
            }
        }
        let d = open_stack.len();
        assert_eq!(close_positions.len(), d, "halves disagree on the spine");
        let mut out = Vec::with_capacity(d);
        for t in 0..d {
            let open_at = open_stack[t];
            let open_end = if t + 1 < d {
                open_stack[t + 1]
            } else {
                self.left.len()
            };
            let close_at = close_positions[d - 1 - t];
            let close_from = if t + 1 < d {
                close_positions[d - 2 - t] + 1
            } else {
                0
            };
            debug_assert!(self.left[open_at].is_open());
            debug_assert_eq!(self.left[open_at].partner(), self.right[close_at]);
            out.push(Depth1 {
                label: self.left[open_at].label(),
                below: self.left[open_at + 1..open_end].to_vec(),
                above: self.right[close_from..close_at].to_vec(),
            });
        }
        out
    }

    /// Root label of the underlying tree.
    pub fn root_label(&self) -> Symbol {
        self.left[0].label()
    }
}

impl std::fmt::Debug for Context {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "⟨{:?}; {:?}⟩", self.left, self.right)
    }
}

/// One depth-1 context `⟨open(label)·below; above·close(label)⟩`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Depth1 {
    pub label: Symbol,
    /// Balanced forest following the spine open in the left half.
    pub below: Vec<Token>,
    /// Balanced forest preceding the spine close in the right half.
    pub above: Vec<Token>,
}

impl Depth1 {
    pub fn to_context(&self) -> Context {
        debug_assert!(balanced_slice(&self.below) && balanced_slice(&self.above));
        let mut left = vec![Token::open(self.label)];
        left.extend_from_slice(&self.below);
        let mut right = self.above.clone();
        right.push(Token::close(self.label));
        Context { left, right }
    }

    pub fn len(&self) -> usize {
        2 + self.below.len() + self.above.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}
