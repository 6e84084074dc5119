//! Seeded random instance generators shared by the test suites.
//!
//! Every generator takes an explicit `Rng` so failures reproduce from the
//! seed alone. Weight tables come out *exactly* satisfying the requested
//! mode: triangle violations are removed by a min-plus closure rather than
//! by rejection sampling, and skew-symmetry is enforced pointwise before
//! the closure (reverse-complementing a path preserves its total weight,
//! so the closure cannot reintroduce asymmetry).

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use foresttk::{Forest, Token};
use wed_core::{Alphabet, CostValue, Symbol, WeightTable, SCALE};

/// The deterministic generator used across the suites.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_string<R: Rng>(len: usize, sigma: &[Symbol], rng: &mut R) -> Vec<Symbol> {
    (0..len).map(|_| sigma[rng.random_range(0..sigma.len())]).collect()
}

fn all_symbols(alpha: &Alphabet) -> Vec<Symbol> {
    std::iter::once(Symbol::EPSILON).chain(alpha.symbols()).collect()
}

/// Off-diagonal entries uniform over {1, 1.5, 2, ..., max_units} units.
fn sample_matrix<R: Rng>(side: usize, max_units: u64, rng: &mut R) -> Vec<u64> {
    let mut m = vec![0u64; side * side];
    for a in 0..side {
        for b in 0..side {
            if a != b {
                m[a * side + b] = rng.random_range(2..=2 * max_units) * (SCALE / 2);
            }
        }
    }
    m
}

fn min_plus_closure(m: &mut [u64], side: usize) {
    for via in 0..side {
        for a in 0..side {
            for b in 0..side {
                let detour = m[a * side + via].saturating_add(m[via * side + b]);
                if detour < m[a * side + b] {
                    m[a * side + b] = detour;
                }
            }
        }
    }
}

fn table_from_matrix(alpha: &Alphabet, m: &[u64]) -> WeightTable {
    let side = alpha.len() + 1;
    let mut w = WeightTable::unit(alpha.clone());
    for &a in &all_symbols(alpha) {
        for &b in &all_symbols(alpha) {
            if a != b {
                let cost = CostValue::from_scaled(m[a.index() * side + b.index()])
                    .expect("sampled costs are finite");
                w.set_cost(a, b, cost).expect("sampled costs are in range");
            }
        }
    }
    w
}

/// A random table with zero diagonal and off-diagonal entries ≥ 1 unit.
pub fn normalized_table<R: Rng>(alpha: &Alphabet, max_units: u64, rng: &mut R) -> WeightTable {
    let side = alpha.len() + 1;
    table_from_matrix(alpha, &sample_matrix(side, max_units, rng))
}

/// A random normalized table additionally satisfying the triangle
/// inequality exactly.
pub fn quasimetric_table<R: Rng>(alpha: &Alphabet, max_units: u64, rng: &mut R) -> WeightTable {
    let side = alpha.len() + 1;
    let mut m = sample_matrix(side, max_units, rng);
    min_plus_closure(&mut m, side);
    table_from_matrix(alpha, &m)
}

/// A random quasimetric table with `w(a, b) = w(b̄, ā)` under the
/// involution given by `pairs`, which must cover `alpha`. The involution
/// is installed on the returned table.
pub fn skewmetric_table<R: Rng>(
    alpha: &Alphabet,
    pairs: &[(Symbol, Symbol)],
    max_units: u64,
    rng: &mut R,
) -> WeightTable {
    let side = alpha.len() + 1;
    let mut comp: Vec<usize> = vec![0; side];
    for &(o, c) in pairs {
        comp[o.index()] = c.index();
        comp[c.index()] = o.index();
    }
    let mut m = sample_matrix(side, max_units, rng);
    for a in 0..side {
        for b in 0..side {
            let mirrored = m[comp[b] * side + comp[a]];
            if mirrored < m[a * side + b] {
                m[a * side + b] = mirrored;
            }
        }
    }
    min_plus_closure(&mut m, side);
    let mut w = table_from_matrix(alpha, &m);
    w.set_complement(pairs).expect("pairs cover the alphabet");
    w
}

fn build_forest<R: Rng>(nodes: usize, labels: &[Symbol], rng: &mut R, out: &mut Vec<Token>) {
    let mut left = nodes;
    while left > 0 {
        // The first remaining tree takes a uniform share of the nodes.
        let take = rng.random_range(1..=left);
        let label = labels[rng.random_range(0..labels.len())];
        out.push(Token::open(label));
        build_forest(take - 1, labels, rng, out);
        out.push(Token::close(label));
        left -= take;
    }
}

/// A random forest with exactly `nodes` nodes labeled from `labels`.
pub fn random_forest<R: Rng>(nodes: usize, labels: &[Symbol], rng: &mut R) -> Forest {
    assert!(nodes == 0 || !labels.is_empty(), "nonempty forests need labels");
    let mut tokens = Vec::with_capacity(2 * nodes);
    build_forest(nodes, labels, rng, &mut tokens);
    Forest::from_tokens(tokens).expect("generated token streams are balanced")
}

/// Applies `edits` random node edits (relabel, delete, insert leaf), so
/// the tree edit distance from `f` to the result is at most `edits`.
pub fn perturb_forest<R: Rng>(
    f: &Forest,
    edits: usize,
    labels: &[Symbol],
    rng: &mut R,
) -> Forest {
    assert!(!labels.is_empty(), "perturbation needs labels");
    let mut tokens = f.tokens().to_vec();
    for _ in 0..edits {
        let roll = rng.random_range(0..3);
        if roll < 2 && !tokens.is_empty() {
            let spans = Forest::from_tokens(tokens.clone())
                .expect("edits keep tokens balanced")
                .node_spans();
            let (_, o, c) = spans[rng.random_range(0..spans.len())];
            if roll == 0 {
                let label = labels[rng.random_range(0..labels.len())];
                tokens[o] = Token::open(label);
                tokens[c] = Token::close(label);
            } else {
                tokens.remove(c);
                tokens.remove(o);
            }
        } else {
            let label = labels[rng.random_range(0..labels.len())];
            let at = rng.random_range(0..=tokens.len());
            tokens.insert(at, Token::close(label));
            tokens.insert(at, Token::open(label));
        }
    }
    Forest::from_tokens(tokens).expect("edits keep tokens balanced")
}

fn build_brackets<R: Rng>(
    pairs: &[(Symbol, Symbol)],
    nodes: usize,
    rng: &mut R,
    out: &mut Vec<Symbol>,
) {
    let mut left = nodes;
    while left > 0 {
        let take = rng.random_range(1..=left);
        let (open, close) = pairs[rng.random_range(0..pairs.len())];
        out.push(open);
        build_brackets(pairs, take - 1, rng, out);
        out.push(close);
        left -= take;
    }
}

/// A random well-parenthesized string with `nodes` bracket pairs.
pub fn random_balanced_brackets<R: Rng>(
    pairs: &[(Symbol, Symbol)],
    nodes: usize,
    rng: &mut R,
) -> Vec<Symbol> {
    assert!(nodes == 0 || !pairs.is_empty(), "nonempty strings need bracket types");
    let mut out = Vec::with_capacity(2 * nodes);
    build_brackets(pairs, nodes, rng, &mut out);
    out
}
