//! Power caps and canonical returns of the two structural reductions.

use foresttk::{
    canonical_path_tokens, context_identifiers, horizontal_reduction, parse_forest,
    tokens_to_symbols, vertical_reduction, Context, Depth1, Forest, Token,
};
use oracles::{gen, naive_power_scan};
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use wed_core::{Alphabet, Symbol};

fn labels(alpha: &mut Alphabet, n: usize) -> Vec<Symbol> {
    (0..n).map(|i| alpha.intern(&format!("l{i}"))).collect()
}

/// A forest with a planted sibling repetition: prefix, `reps` copies of a
/// small balanced block, suffix, sometimes under a shared root.
fn periodic_forest(syms: &[Symbol], max_block_nodes: usize, rng: &mut ChaCha8Rng) -> Forest {
    let block = gen::random_forest(rng.random_range(1..=max_block_nodes), syms, rng);
    let reps = rng.random_range(1..=30);
    let mut tokens = gen::random_forest(rng.random_range(0..=6), syms, rng)
        .tokens()
        .to_vec();
    for _ in 0..reps {
        tokens.extend_from_slice(block.tokens());
    }
    tokens.extend_from_slice(gen::random_forest(rng.random_range(0..=6), syms, rng).tokens());
    if rng.random_bool(0.3) {
        let root = syms[rng.random_range(0..syms.len())];
        tokens.insert(0, Token::open(root));
        tokens.push(Token::close(root));
    }
    Forest::from_tokens(tokens).expect("balanced blocks concatenate balanced")
}

#[test]
fn horizontal_outputs_carry_no_residual_powers() {
    let mut alpha = Alphabet::new();
    let syms = labels(&mut alpha, 3);
    let mut rng = gen::rng(0x51);
    for k in 1..=2usize {
        for _ in 0..100 {
            let f = periodic_forest(&syms, 2 * k, &mut rng);
            let out = horizontal_reduction(&f, k);
            assert!(out.len() <= f.len());
            assert!(out.len() <= 74 * k.pow(3));
            let hits = naive_power_scan(
                &tokens_to_symbols(out.tokens()),
                4 * k,
                4 * k,
                true,
                Some(&out),
            );
            assert!(hits.is_empty(), "k {k}: balanced powers remain at {hits:?}");
            let again = horizontal_reduction(&out, k);
            assert_eq!(again.tokens(), out.tokens(), "reduction is not idempotent");
        }
    }
}

#[test]
fn sibling_leaf_powers_cap_at_the_exponent() {
    let mut alpha = Alphabet::new();
    let many = parse_forest(&"(a) ".repeat(100), &mut alpha).unwrap();
    let capped = parse_forest("(a) (a) (a) (a)", &mut alpha).unwrap();
    assert_eq!(horizontal_reduction(&many, 1).tokens(), capped.tokens());

    let leaf = parse_forest("(a)", &mut alpha).unwrap();
    assert_eq!(horizontal_reduction(&leaf, 1).tokens(), leaf.tokens());
}

#[test]
fn long_aperiodic_forests_become_the_canonical_path() {
    // Fifty distinct labels leave the periodicity pass nothing to remove,
    // so the 100-token forest trips the canonical return.
    let mut alpha = Alphabet::new();
    let syms = labels(&mut alpha, 50);
    let mut tokens = Vec::new();
    for &s in &syms {
        tokens.push(Token::open(s));
        tokens.push(Token::close(s));
    }
    let f = Forest::from_tokens(tokens).unwrap();
    let out = horizontal_reduction(&f, 1);
    assert_eq!(out.tokens(), canonical_path_tokens(syms[0], 37).as_slice());
}

#[test]
fn spine_powers_cap_at_the_exponent() {
    let mut alpha = Alphabet::new();
    let a = alpha.intern("a");
    let p = Context::new(vec![Token::open(a); 20], vec![Token::close(a); 20]).unwrap();
    let out = vertical_reduction(&p, 1);
    let want = Context::new(vec![Token::open(a); 6], vec![Token::close(a); 6]).unwrap();
    assert_eq!(out, want);

    let single = Context::new(vec![Token::open(a)], vec![Token::close(a)]).unwrap();
    assert_eq!(vertical_reduction(&single, 1), single);
}

#[test]
fn vertical_outputs_carry_no_residual_identifier_powers() {
    let mut alpha = Alphabet::new();
    let syms = labels(&mut alpha, 2);
    let mut rng = gen::rng(0x52);
    for k in 1..=2usize {
        for _ in 0..80 {
            // A spine with a planted vertical repetition: a short factor
            // block repeated many times between random factors.
            let mut factors: Vec<Context> = Vec::new();
            let random_factor = |rng: &mut ChaCha8Rng| {
                Depth1 {
                    label: syms[rng.random_range(0..syms.len())],
                    below: gen::random_forest(rng.random_range(0..=2), &syms, rng)
                        .tokens()
                        .to_vec(),
                    above: gen::random_forest(rng.random_range(0..=2), &syms, rng)
                        .tokens()
                        .to_vec(),
                }
                .to_context()
            };
            for _ in 0..rng.random_range(0..=3) {
                factors.push(random_factor(&mut rng));
            }
            let block: Vec<Context> = (0..rng.random_range(1..=2))
                .map(|_| random_factor(&mut rng))
                .collect();
            for _ in 0..rng.random_range(1..=25) {
                factors.extend(block.iter().cloned());
            }
            for _ in 0..rng.random_range(0..=3) {
                factors.push(random_factor(&mut rng));
            }
            let p = Context::compose_all(&factors);
            let out = vertical_reduction(&p, k);
            assert!(out.len() <= 578 * k.pow(4));
            let (ids, lens) = context_identifiers(&out);
            // Any identifier period whose composed context fits in 8k
            // tokens must repeat at most 6k times.
            for (i, q) in naive_power_scan(&ids, 6 * k, 4 * k, false, None) {
                let composed: usize = lens[i..i + q].iter().sum();
                assert!(
                    composed > 8 * k,
                    "k {k}: identifier power of composed length {composed} remains"
                );
            }
            assert_eq!(vertical_reduction(&out, k), out, "reduction is not idempotent");
        }
    }
}

#[derive(Debug, Clone)]
struct Tree {
    label: u32,
    children: Vec<Tree>,
}

fn trees() -> impl Strategy<Value = Tree> {
    let leaf = (1u32..=2).prop_map(|label| Tree {
        label,
        children: vec![],
    });
    leaf.prop_recursive(4, 24, 4, |inner| {
        (1u32..=2, prop::collection::vec(inner, 0..4))
            .prop_map(|(label, children)| Tree { label, children })
    })
}

fn flatten(tree: &Tree, out: &mut Vec<Token>) {
    let label = Symbol::new(tree.label);
    out.push(Token::open(label));
    for child in &tree.children {
        flatten(child, out);
    }
    out.push(Token::close(label));
}

proptest! {
    /// The horizontal pass never grows a forest, stays within 74k³, and
    /// strips every balanced power beyond the cap, whatever the shape.
    #[test]
    fn horizontal_reduction_is_short_and_power_free(
        roots in prop::collection::vec(trees(), 0..6),
        k in 1usize..=2,
    ) {
        let mut tokens = Vec::new();
        for tree in &roots {
            flatten(tree, &mut tokens);
        }
        let f = Forest::from_tokens(tokens).unwrap();
        let out = horizontal_reduction(&f, k);
        prop_assert!(out.len() <= f.len());
        prop_assert!(out.len() <= 74 * k.pow(3));
        let hits = naive_power_scan(
            &tokens_to_symbols(out.tokens()),
            4 * k,
            4 * k,
            true,
            Some(&out),
        );
        prop_assert!(hits.is_empty(), "balanced powers remain at {:?}", hits);
    }
}

#[test]
fn long_aperiodic_contexts_become_the_canonical_spiral() {
    // Three hundred distinct spine labels: nothing repeats, the composed
    // length 600 exceeds 578, and the spiral over the smallest label
    // comes back.
    let mut alpha = Alphabet::new();
    let syms = labels(&mut alpha, 300);
    let chain: Vec<Context> = syms
        .iter()
        .map(|&s| Context::new(vec![Token::open(s)], vec![Token::close(s)]).unwrap())
        .collect();
    let p = Context::compose_all(&chain);
    let out = vertical_reduction(&p, 1);

    let a = syms[0];
    let leaf = [Token::open(a), Token::close(a)];
    let expected: Vec<Context> = (0..17usize)
        .map(|i| {
            Depth1 {
                label: a,
                below: leaf.iter().copied().cycle().take(2 * i).collect(),
                above: leaf.iter().copied().cycle().take(2 * (16 - i)).collect(),
            }
            .to_context()
        })
        .collect();
    assert_eq!(out, Context::compose_all(&expected));
    assert_eq!(out.len(), 578);
}
