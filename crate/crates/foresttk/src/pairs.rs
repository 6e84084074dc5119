//! Maximum sets of decomposition pieces matched perfectly by a narrow
//! alignment.

use std::collections::HashMap;
use std::rc::Rc;

use crate::decomp::{DecompNode, Piece, PieceDecomposition};
use crate::forest::Forest;

/// A persistent set of piece pairs: unions share structure, and only the
/// cached size is inspected while maximizing.
#[derive(Clone)]
struct PairSet {
    size: usize,
    node: Rc<SetNode>,
}

enum SetNode {
    Empty,
    Single((Piece, Piece)),
    Union(PairSet, PairSet),
}

impl PairSet {
    fn empty() -> PairSet {
        PairSet {
            size: 0,
            node: Rc::new(SetNode::Empty),
        }
    }

    fn single(pair: (Piece, Piece)) -> PairSet {
        PairSet {
            size: 1,
            node: Rc::new(SetNode::Single(pair)),
        }
    }

    fn union(a: PairSet, b: PairSet) -> PairSet {
        if a.size == 0 {
            return b;
        }
        if b.size == 0 {
            return a;
        }
        PairSet {
            size: a.size + b.size,
            node: Rc::new(SetNode::Union(a, b)),
        }
    }

    fn collect_into(&self, out: &mut Vec<(Piece, Piece)>) {
        match &*self.node {
            SetNode::Empty => {}
            SetNode::Single(pair) => out.push(*pair),
            SetNode::Union(a, b) => {
                a.collect_into(out);
                b.collect_into(out);
            }
        }
    }
}

/// Finds a maximum-size set of pairs (piece of `d`, piece of `g`) that a
/// single alignment of `f` onto `g` of width at most `s` can match
/// perfectly. Paired pieces have identical token content, their positional
/// offsets are bounded by `s`, and the `g` sides are disjoint and
/// non-crossing. Returns the empty set when the sizes differ by more
/// than `s`.
pub fn pairs(f: &Forest, d: &PieceDecomposition, g: &Forest, s: usize) -> Vec<(Piece, Piece)> {
    if f.len().abs_diff(g.len()) > s {
        return Vec::new();
    }
    let mut dp = PairsDp {
        f,
        d,
        g,
        s,
        memo: HashMap::new(),
    };
    let best = dp.solve(d.root, 0, g.len());
    let mut out = Vec::with_capacity(best.size);
    best.collect_into(&mut out);
    out
}

struct PairsDp<'a> {
    f: &'a Forest,
    d: &'a PieceDecomposition,
    g: &'a Forest,
    s: usize,
    memo: HashMap<(usize, usize, usize), PairSet>,
}

impl PairsDp<'_> {
    /// Maximum realizable pair set for the sub-decomposition at `node`
    /// against the window `G[gi..gj)`. Valid states keep both window
    /// endpoints within `s` of the node's own endpoints.
    fn solve(&mut self, node: usize, gi: usize, gj: usize) -> PairSet {
        if let Some(hit) = self.memo.get(&(node, gi, gj)) {
            return hit.clone();
        }
        let (i, j) = self.d.nodes[node].range();
        debug_assert!(gi <= gj && gj <= self.g.len());
        debug_assert!(i.abs_diff(gi) <= self.s && j.abs_diff(gj) <= self.s);
        let mut best = PairSet::empty();
        let consider = |cand: PairSet, best: &mut PairSet| {
            if cand.size > best.size {
                *best = cand;
            }
        };
        match self.d.nodes[node] {
            DecompNode::Empty { .. } => {}
            _ => {
                if gi < gj.min(i + self.s) {
                    let cand = self.solve(node, gi + 1, gj);
                    consider(cand, &mut best);
                }
                if gj > gi.max(j.saturating_sub(self.s)) {
                    let cand = self.solve(node, gi, gj - 1);
                    consider(cand, &mut best);
                }
                match self.d.nodes[node] {
                    DecompNode::Empty { .. } => unreachable!(),
                    DecompNode::Leaf { i, j, piece } => {
                        if gj - gi == j - i && self.f.tokens()[i..j] == self.g.tokens()[gi..gj] {
                            let pair = (self.d.pieces()[piece], Piece::Balanced { i: gi, j: gj });
                            consider(PairSet::single(pair), &mut best);
                        }
                    }
                    DecompNode::Split { m, left, right, .. } => {
                        let lo = m.saturating_sub(self.s).max(gi);
                        let hi = (m + self.s).min(gj);
                        for mid in lo..=hi {
                            let a = self.solve(left, gi, mid);
                            let b = self.solve(right, mid, gj);
                            consider(PairSet::union(a, b), &mut best);
                        }
                    }
                    DecompNode::Wrap {
                        i,
                        j,
                        il,
                        jr,
                        piece,
                        inner,
                    } => {
                        let (l, r) = (il - i, j - jr);
                        if gi + l + r <= gj
                            && self.f.tokens()[i..il] == self.g.tokens()[gi..gi + l]
                            && self.f.tokens()[jr..j] == self.g.tokens()[gj - r..gj]
                            && self.g.is_balanced(gi + l, gj - r)
                        {
                            let pair = (
                                self.d.pieces()[piece],
                                Piece::Context {
                                    i: gi,
                                    il: gi + l,
                                    jr: gj - r,
                                    j: gj,
                                },
                            );
                            let rest = self.solve(inner, gi + l, gj - r);
                            consider(PairSet::union(PairSet::single(pair), rest), &mut best);
                        }
                        let lo = il.saturating_sub(self.s).max(gi);
                        let hi = (jr + self.s).min(gj);
                        debug_assert!(lo <= hi);
                        let cand = self.solve(inner, lo, hi);
                        consider(cand, &mut best);
                    }
                }
            }
        }
        self.memo.insert((node, gi, gj), best.clone());
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::piece_decomposition;
    use crate::forest::parse_forest;
    use wed_core::Alphabet;

    #[test]
    fn identical_forests_at_width_zero_pair_every_piece() {
        let mut alpha = Alphabet::default();
        let f = parse_forest("(a (b) (c (d))) (e) (a (a))", &mut alpha).unwrap();
        for t in [2, 3, 5] {
            let d = piece_decomposition(&f, t);
            d.verify(&f).unwrap();
            let s = pairs(&f, &d, &f, 0);
            assert_eq!(s.len(), d.len(), "budget {t}");
            for (pf, pg) in s {
                assert_eq!(pf, pg);
            }
        }
    }

    #[test]
    fn disjoint_label_sets_share_nothing() {
        let mut alpha = Alphabet::default();
        let f = parse_forest("(a (a)) (a)", &mut alpha).unwrap();
        let g = parse_forest("(b (b)) (b)", &mut alpha).unwrap();
        let d = piece_decomposition(&f, 2);
        assert!(pairs(&f, &d, &g, 3).is_empty());
    }

    #[test]
    fn sibling_relabel_keeps_the_identical_leaf() {
        let mut alpha = Alphabet::default();
        let f = parse_forest("(a) (b)", &mut alpha).unwrap();
        let g = parse_forest("(a) (c)", &mut alpha).unwrap();
        let d = piece_decomposition(&f, 2);
        assert_eq!(d.len(), 2);
        let s = pairs(&f, &d, &g, 2);
        assert_eq!(
            s,
            vec![(Piece::Balanced { i: 0, j: 2 }, Piece::Balanced { i: 0, j: 2 })]
        );
    }

    #[test]
    fn size_gap_beyond_the_width_budget_yields_nothing() {
        let mut alpha = Alphabet::default();
        let f = parse_forest("(a) (a) (a)", &mut alpha).unwrap();
        let g = parse_forest("(a)", &mut alpha).unwrap();
        let d = piece_decomposition(&f, 2);
        assert!(pairs(&f, &d, &g, 1).is_empty());
        assert!(!pairs(&f, &d, &g, 4).is_empty());
    }

    #[test]
    fn shifted_occurrence_is_found_within_the_width() {
        let mut alpha = Alphabet::default();
        // G inserts one leaf (x) in front; every piece of F recurs in G
        // shifted by two positions.
        let f = parse_forest("(a (b)) (c)", &mut alpha).unwrap();
        let g = parse_forest("(x) (a (b)) (c)", &mut alpha).unwrap();
        let d = piece_decomposition(&f, 4);
        let s = pairs(&f, &d, &g, 2);
        assert_eq!(s.len(), d.len());
        for (pf, pg) in &s {
            let shifted: Vec<(usize, usize)> = pf
                .ranges()
                .iter()
                .map(|&(a, b)| (a + 2, b + 2))
                .collect();
            assert_eq!(pg.ranges(), shifted);
        }
    }
}
