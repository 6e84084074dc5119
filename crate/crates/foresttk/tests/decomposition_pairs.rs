//! Piece decompositions and the pairing DP on random forests.

use std::collections::HashSet;

use foresttk::{pairs, parse_forest, piece_decomposition, weighted_ted, Forest, Piece};
use oracles::gen;
use rand::Rng;
use wed_core::{Alphabet, Symbol, WeightTable};

fn labels(alpha: &mut Alphabet, n: usize) -> Vec<Symbol> {
    (0..n).map(|i| alpha.intern(&format!("l{i}"))).collect()
}

/// Structural audit of a pairing: identical content and form per pair,
/// source offsets within the width budget, and disjoint non-crossing
/// target pieces.
fn check_pairing(f: &Forest, g: &Forest, s: usize, pairing: &[(Piece, Piece)]) {
    let mut taken: Vec<(usize, usize)> = Vec::new();
    for &(pf, pg) in pairing {
        let rf = pf.ranges();
        let rg = pg.ranges();
        assert_eq!(rf.len(), rg.len(), "pieces of different forms paired");
        for (&(fi, fj), &(gi, gj)) in rf.iter().zip(&rg) {
            assert_eq!(fj - fi, gj - gi, "paired fragments differ in length");
            assert_eq!(
                &f.tokens()[fi..fj],
                &g.tokens()[gi..gj],
                "paired fragments differ in content"
            );
            assert!(fi.abs_diff(gi) <= s, "pair offset exceeds the width {s}");
            taken.push((gi, gj));
        }
    }
    taken.sort();
    for w in taken.windows(2) {
        assert!(w[0].1 <= w[1].0, "target pieces overlap: {:?}", w);
    }
}

#[test]
fn decompositions_cover_random_forests_within_budget() {
    let mut alpha = Alphabet::new();
    let syms = labels(&mut alpha, 4);
    let mut rng = gen::rng(0x41);
    for trial in 0..120 {
        let nodes = rng.random_range(0..=1000);
        let f = gen::random_forest(nodes, &syms, &mut rng);
        for t in [2usize, 8, 64] {
            let d = piece_decomposition(&f, t);
            d.verify(&f)
                .unwrap_or_else(|msg| panic!("trial {trial}, t {t}: {msg}"));
            // Count bound max(1, 6n/t - 1), kept in integers.
            assert!(
                d.len() <= 1 || (d.len() + 1) * t <= 6 * f.len(),
                "trial {trial}: {} pieces of budget {t} for {} tokens",
                d.len(),
                f.len()
            );
        }
    }
}

#[test]
fn tiny_decomposition_fixtures() {
    let mut alpha = Alphabet::new();
    let single = parse_forest("(a)", &mut alpha).unwrap();
    let d = piece_decomposition(&single, 2);
    assert_eq!(d.pieces(), &[Piece::Balanced { i: 0, j: 2 }]);

    let six = parse_forest("(a) (b) (a) (b) (a) (b)", &mut alpha).unwrap();
    let d = piece_decomposition(&six, 4);
    d.verify(&six).unwrap();
    assert!(d.len() <= 17);

    let empty = parse_forest("", &mut alpha).unwrap();
    assert!(piece_decomposition(&empty, 2).is_empty());
}

#[test]
fn zero_width_pairing_is_the_identity() {
    let mut alpha = Alphabet::new();
    let syms = labels(&mut alpha, 3);
    let mut rng = gen::rng(0x42);
    for _ in 0..60 {
        let nodes = rng.random_range(0..=40);
        let f = gen::random_forest(nodes, &syms, &mut rng);
        let d = piece_decomposition(&f, rng.random_range(2..=8));
        let s = pairs(&f, &d, &f, 0);
        assert_eq!(s.len(), d.len(), "some piece missed its own occurrence");
        let matched: HashSet<Piece> = s.iter().map(|&(pf, pg)| {
            assert_eq!(pf, pg, "width 0 admits only the identity alignment");
            pf
        }).collect();
        let all: HashSet<Piece> = d.pieces().iter().copied().collect();
        assert_eq!(matched, all);
        check_pairing(&f, &f, 0, &s);
    }
}

#[test]
fn disjoint_label_sets_pair_nothing() {
    let mut alpha = Alphabet::new();
    let left = labels(&mut alpha, 2);
    let right: Vec<Symbol> = (0..2).map(|i| alpha.intern(&format!("r{i}"))).collect();
    let mut rng = gen::rng(0x43);
    for _ in 0..40 {
        let nodes = rng.random_range(1..=20);
        let f = gen::random_forest(nodes, &left, &mut rng);
        let g = gen::random_forest(nodes, &right, &mut rng);
        let d = piece_decomposition(&f, 4);
        assert!(pairs(&f, &d, &g, 4).is_empty());
    }
}

#[test]
fn sibling_leaf_pair_fixture() {
    let mut alpha = Alphabet::new();
    let f = parse_forest("(a) (b)", &mut alpha).unwrap();
    let g = parse_forest("(a) (c)", &mut alpha).unwrap();
    let d = piece_decomposition(&f, 2);
    let mut sorted = d.pieces().to_vec();
    sorted.sort_by_key(|p| p.ranges()[0]);
    assert_eq!(
        sorted,
        &[Piece::Balanced { i: 0, j: 2 }, Piece::Balanced { i: 2, j: 4 }]
    );
    let s = pairs(&f, &d, &g, 2);
    assert_eq!(s.len(), 1);
    assert_eq!(s[0].0, Piece::Balanced { i: 0, j: 2 });
    assert_eq!(s[0].1, Piece::Balanced { i: 0, j: 2 });
}

#[test]
fn pairing_loses_at_most_one_piece_per_edit() {
    let mut alpha = Alphabet::new();
    let syms = labels(&mut alpha, 3);
    let unit = WeightTable::unit(alpha.clone());
    let mut rng = gen::rng(0x44);
    let mut checked = 0;
    for _ in 0..400 {
        let nodes = rng.random_range(1..=16);
        let f = gen::random_forest(nodes, &syms, &mut rng);
        let g = gen::perturb_forest(&f, rng.random_range(0..=3), &syms, &mut rng);
        if g.node_count() > 16 {
            continue;
        }
        let dist = weighted_ted(&f, &g, &unit)
            .scaled()
            .expect("unit distances on finite forests are finite")
            / wed_core::SCALE;
        let k = (dist as usize).max(1);
        if k > 3 {
            continue;
        }
        let d = piece_decomposition(&f, rng.random_range(2..=6));
        let s = pairs(&f, &d, &g, 2 * k);
        // Every piece holds whole nodes, so an alignment of cost at most
        // k leaves at most k pieces unmatched.
        assert!(
            s.len() + k >= d.len(),
            "{} of {} pieces paired at distance {dist}",
            s.len(),
            d.len()
        );
        check_pairing(&f, &g, 2 * k, &s);
        checked += 1;
    }
    assert!(checked >= 250, "only {checked} instances exercised the bound");
}
