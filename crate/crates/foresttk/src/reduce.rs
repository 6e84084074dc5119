//! Horizontal and vertical reductions: shrinking sibling repetition in
//! forests and spine repetition in contexts while preserving every
//! threshold-clipped distance under normalized quasimetric weights.

use seqkit::{is_primitive_slice, periodicity_reduction, MembershipOracle};
use wed_core::Symbol;

use crate::context::{Context, Depth1};
use crate::forest::Forest;
use crate::token::{smallest_label, symbols_to_tokens, tokens_to_symbols, Token};

/// Balance test on token-encoded symbols (even codes open, odd close).
fn balanced_sym(p: &[Symbol]) -> bool {
    let mut h: i64 = 0;
    for s in p {
        if s.id() % 2 == 0 {
            h += 1;
        } else {
            h -= 1;
            if h < 0 {
                return false;
            }
        }
    }
    h == 0
}

/// Q for the horizontal reduction: primitive balanced fragments of
/// bounded length.
struct BalancedPrimitive {
    max_len: usize,
}

impl MembershipOracle for BalancedPrimitive {
    fn contains(&self, p: &[Symbol], i: usize, j: usize) -> bool {
        j - i <= self.max_len && balanced_sym(&p[i..j]) && is_primitive_slice(&p[i..j])
    }
}

/// Shrinks sibling repetition: caps every balanced repetition `Q^{4k+1}`
/// with `|Q| ≤ 4k` at exponent `4k`, then, when the result still has
/// length at least `74k³`, replaces it with the canonical deep path
/// `open(a)^{37k³} close(a)^{37k³}` for the smallest occurring label `a`.
/// The output is `ted^w`-equivalent to the input at every threshold `≤ k`
/// for every normalized quasimetric `w`.
pub fn horizontal_reduction(p: &Forest, k: usize) -> Forest {
    assert!(k >= 1, "threshold must be positive");
    let syms = tokens_to_symbols(p.tokens());
    let oracle = BalancedPrimitive { max_len: 4 * k };
    let reduced = periodicity_reduction(&syms, 4 * k, &oracle);
    let limit = 74 * k.pow(3);
    let tokens = if reduced.len() >= limit {
        let a = smallest_label(p.tokens()).expect("a long forest has labels");
        canonical_path_tokens(a, 37 * k.pow(3))
    } else {
        symbols_to_tokens(&reduced)
    };
    Forest::from_tokens(tokens).expect("reduction removes balanced fragments only")
}

pub fn canonical_path_tokens(a: Symbol, depth: usize) -> Vec<Token> {
    let mut tokens = Vec::with_capacity(2 * depth);
    tokens.extend(std::iter::repeat(Token::open(a)).take(depth));
    tokens.extend(std::iter::repeat(Token::close(a)).take(depth));
    tokens
}

/// Q for the vertical reduction: identifier fragments that are primitive
/// and whose composed context fits the length budget. Primitivity of the
/// composed context is decided on the identifier string: the depth-1
/// factorization is unique, so a vertical power and an identifier-string
/// power are the same thing.
struct VerticalFragments<'a> {
    prefix_len: &'a [usize],
    max_composed: usize,
}

impl MembershipOracle for VerticalFragments<'_> {
    fn contains(&self, p: &[Symbol], i: usize, j: usize) -> bool {
        self.prefix_len[j] - self.prefix_len[i] <= self.max_composed
            && is_primitive_slice(&p[i..j])
    }
}

/// Identifier view of a context: one integer per depth-1 factor, equal
/// factors sharing an identifier, together with each factor's token
/// length. Exposed so periodicity checks can run on reduction outputs.
pub fn context_identifiers(p: &Context) -> (Vec<Symbol>, Vec<usize>) {
    let factors = p.factor_depth1();
    let (ids, lens, _) = identify(&factors);
    (ids, lens)
}

type FactorKey = (Symbol, Vec<Token>, Vec<Token>);

fn identify(factors: &[Depth1]) -> (Vec<Symbol>, Vec<usize>, Vec<FactorKey>) {
    let mut keys: Vec<FactorKey> = factors
        .iter()
        .map(|f| (f.label, f.below.clone(), f.above.clone()))
        .collect();
    keys.sort();
    keys.dedup();
    let ids = factors
        .iter()
        .map(|f| {
            let key = (f.label, f.below.clone(), f.above.clone());
            let rank = keys.binary_search(&key).expect("every factor was ranked");
            Symbol::new(u32::try_from(rank + 1).expect("identifier fits u32"))
        })
        .collect();
    let lens = factors.iter().map(|f| f.len()).collect();
    (ids, lens, keys)
}

/// Shrinks spine repetition: factors the context into depth-1 contexts,
/// reduces each factor's forests horizontally, caps every vertical
/// repetition `Q^{6k+1}` with composed `|Q| ≤ 8k` at exponent `6k`, and,
/// when the result still has length at least `578k⁴`, replaces it with
/// the canonical spiral of `17k²` spine nodes over the smallest occurring
/// label. `ted^w`-equivalent to the input at thresholds `≤ k` for every
/// normalized quasimetric `w`.
pub fn vertical_reduction(p: &Context, k: usize) -> Context {
    assert!(k >= 1, "threshold must be positive");
    let factors: Vec<Depth1> = p
        .factor_depth1()
        .into_iter()
        .map(|f| Depth1 {
            label: f.label,
            below: reduce_forest_tokens(f.below, k),
            above: reduce_forest_tokens(f.above, k),
        })
        .collect();
    let (ids, lens, keys) = identify(&factors);
    let mut prefix_len = Vec::with_capacity(lens.len() + 1);
    prefix_len.push(0usize);
    for &l in &lens {
        prefix_len.push(prefix_len.last().unwrap() + l);
    }
    let oracle = VerticalFragments {
        prefix_len: &prefix_len,
        max_composed: 8 * k,
    };
    let reduced_ids = periodicity_reduction(&ids, 6 * k, &oracle);
    let chain: Vec<Context> = reduced_ids
        .iter()
        .map(|id| {
            let (label, below, above) = keys[id.index() - 1].clone();
            Depth1 {
                label,
                below,
                above,
            }
            .to_context()
        })
        .collect();
    let out = Context::compose_all(&chain);
    if out.len() >= 578 * k.pow(4) {
        let a = smallest_label(p.left()).expect("contexts are nonempty");
        canonical_spiral(a, k)
    } else {
        out
    }
}

fn reduce_forest_tokens(tokens: Vec<Token>, k: usize) -> Vec<Token> {
    if tokens.is_empty() {
        return tokens;
    }
    let forest = Forest::from_tokens(tokens).expect("factor forests are balanced");
    horizontal_reduction(&forest, k).tokens().to_vec()
}

/// The canonical context of `17k²` spine nodes: leaves migrate from below
/// the spine to above it one per level, making every level distinct.
fn canonical_spiral(a: Symbol, k: usize) -> Context {
    let m = 17 * k.pow(2);
    let leaf = [Token::open(a), Token::close(a)];
    let chain: Vec<Context> = (0..m)
        .map(|i| {
            let below: Vec<Token> = leaf.iter().copied().cycle().take(2 * i).collect();
            let above: Vec<Token> = leaf.iter().copied().cycle().take(2 * (m - 1 - i)).collect();
            Depth1 {
                label: a,
                below,
                above,
            }
            .to_context()
        })
        .collect();
    Context::compose_all(&chain)
}
