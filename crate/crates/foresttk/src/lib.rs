//! Forests, contexts, and the tree edit distance kernel pipeline.
//!
//! A forest is stored as its balanced string of labeled parentheses
//! ([`Token`]s). On top of that sit the two structural reductions
//! ([`horizontal_reduction`] over sibling runs, [`vertical_reduction`]
//! over ancestor chains), the piece decomposition and piece pairing that
//! find synchronized common structure in two forests, and the halving
//! [`forest_kernel`] that shrinks any instance to `O(k⁵)` tokens while
//! preserving the weighted tree edit distance up to a threshold `k`.
//! [`weighted_ted`] is the exact cubic DP used on kernelized instances.

pub mod context;
pub mod decomp;
pub mod forest;
pub mod kernel;
pub mod pairs;
pub mod reduce;
pub mod ted;
pub mod token;

pub use context::{Context, ContextError, Depth1};
pub use decomp::{piece_decomposition, Piece, PieceDecomposition};
pub use forest::{forest_to_text, parse_forest, Forest, ForestError};
pub use kernel::{
    forest_kernel, forest_kernel_step, kernel_size_bound, weighted_ted_le_k, ForestKernelError,
};
pub use pairs::pairs;
pub use reduce::{
    canonical_path_tokens, context_identifiers, horizontal_reduction, vertical_reduction,
};
pub use ted::weighted_ted;
pub use token::{
    balanced_slice, smallest_label, symbols_to_tokens, tokens_to_symbols, Token,
};
