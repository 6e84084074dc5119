//! Piece decompositions of forests.
//!
//! A piece is either a balanced fragment or a context-shaped pair of
//! fragments. The decomposition recursion grows a prefix and a suffix
//! around each fragment until a size budget forces a split, producing at
//! most `max(1, 6n/t - 1)` pieces of length at most `t` each.

use crate::forest::Forest;

/// One piece of a host forest, identified by token ranges.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Piece {
    /// The balanced fragment `[i..j)`.
    Balanced { i: usize, j: usize },
    /// The context `⟨[i..il); [jr..j)⟩` around the balanced hole `[il..jr)`.
    Context {
        i: usize,
        il: usize,
        jr: usize,
        j: usize,
    },
}

impl Piece {
    /// Number of tokens the piece owns (the hole of a context excluded).
    pub fn len(&self) -> usize {
        match *self {
            Piece::Balanced { i, j } => j - i,
            Piece::Context { i, il, jr, j } => (il - i) + (j - jr),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Token ranges owned by the piece, left to right.
    pub fn ranges(&self) -> Vec<(usize, usize)> {
        match *self {
            Piece::Balanced { i, j } => vec![(i, j)],
            Piece::Context { i, il, jr, j } => vec![(i, il), (jr, j)],
        }
    }
}

/// Internal recursion tree of a decomposition; also drives the pairs DP.
#[derive(Clone, Copy, Debug)]
pub(crate) enum DecompNode {
    /// The empty fragment `[i..i)`.
    Empty { i: usize },
    /// A whole fragment kept as one balanced piece.
    Leaf { i: usize, j: usize, piece: usize },
    /// Union of the decompositions of `[i..m)` and `[m..j)`.
    Split {
        i: usize,
        j: usize,
        m: usize,
        left: usize,
        right: usize,
    },
    /// A context piece around the decomposition of its hole `[il..jr)`.
    Wrap {
        i: usize,
        j: usize,
        il: usize,
        jr: usize,
        piece: usize,
        inner: usize,
    },
}

impl DecompNode {
    pub(crate) fn range(&self) -> (usize, usize) {
        match *self {
            DecompNode::Empty { i } => (i, i),
            DecompNode::Leaf { i, j, .. } => (i, j),
            DecompNode::Split { i, j, .. } => (i, j),
            DecompNode::Wrap { i, j, .. } => (i, j),
        }
    }
}

/// A piece decomposition of a whole forest.
pub struct PieceDecomposition {
    pub(crate) nodes: Vec<DecompNode>,
    pub(crate) root: usize,
    pieces: Vec<Piece>,
    t: usize,
}

impl PieceDecomposition {
    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    /// The size budget the decomposition was built with.
    pub fn budget(&self) -> usize {
        self.t
    }

    /// Structural audit: every piece well-formed and within budget, and
    /// the pieces partition the host's tokens. Intended for tests.
    pub fn verify(&self, f: &Forest) -> Result<(), String> {
        let mut owner = vec![usize::MAX; f.len()];
        for (idx, piece) in self.pieces.iter().enumerate() {
            if piece.len() == 0 || piece.len() > self.t {
                return Err(format!("piece {idx} has length {} over budget {}", piece.len(), self.t));
            }
            match *piece {
                Piece::Balanced { i, j } => {
                    if !f.is_balanced(i, j) {
                        return Err(format!("piece {idx} is not balanced"));
                    }
                }
                Piece::Context { i, il, jr, j } => {
                    if !(i < il && il <= jr && jr < j) {
                        return Err(format!("piece {idx} has malformed context ranges"));
                    }
                    if !f.is_tree(i, j) || !f.is_balanced(il, jr) {
                        return Err(format!("piece {idx} is not a context"));
                    }
                }
            }
            for (a, b) in piece.ranges() {
                for p in a..b {
                    if owner[p] != usize::MAX {
                        return Err(format!("token {p} owned by pieces {} and {idx}", owner[p]));
                    }
                    owner[p] = idx;
                }
            }
        }
        if let Some(p) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(format!("token {p} not covered by any piece"));
        }
        self.verify_node(f, self.root)?;
        let (ri, rj) = self.nodes[self.root].range();
        if (ri, rj) != (0, f.len()) {
            return Err("root does not cover the forest".to_string());
        }
        Ok(())
    }

    fn verify_node(&self, f: &Forest, at: usize) -> Result<(), String> {
        match self.nodes[at] {
            DecompNode::Empty { .. } => Ok(()),
            DecompNode::Leaf { i, j, piece } => {
                if self.pieces[piece] != (Piece::Balanced { i, j }) || i >= j {
                    return Err(format!("leaf node {at} disagrees with its piece"));
                }
                Ok(())
            }
            DecompNode::Split { i, j, m, left, right } => {
                if !(i < m && m < j) {
                    return Err(format!("split node {at} has boundary m out of range"));
                }
                if self.nodes[left].range() != (i, m) || self.nodes[right].range() != (m, j) {
                    return Err(format!("split node {at} children cover wrong ranges"));
                }
                self.verify_node(f, left)?;
                self.verify_node(f, right)
            }
            DecompNode::Wrap { i, j, il, jr, piece, inner } => {
                if self.pieces[piece] != (Piece::Context { i, il, jr, j }) {
                    return Err(format!("wrap node {at} disagrees with its piece"));
                }
                if self.nodes[inner].range() != (il, jr) {
                    return Err(format!("wrap node {at} inner covers the wrong range"));
                }
                self.verify_node(f, inner)
            }
        }
    }
}

/// Decomposes `f` into pieces of length at most `t`.
///
/// Each recursive call grows a context shell `(i', j')` inward from the
/// fragment ends, absorbing whole subtrees on the left, then on the
/// right, then the deepest remaining root, while the shell fits the
/// budget; once nothing fits it splits at the first tree boundary of the
/// remaining hole (forest case) or emits the shell as a context piece
/// (tree case).
pub fn piece_decomposition(f: &Forest, t: usize) -> PieceDecomposition {
    assert!(t >= 2, "piece budget must be at least 2");
    let mut b = Builder {
        f,
        t,
        nodes: Vec::new(),
        pieces: Vec::new(),
    };
    let root = b.build(0, f.len());
    PieceDecomposition {
        nodes: b.nodes,
        root,
        pieces: b.pieces,
        t,
    }
}

struct Builder<'a> {
    f: &'a Forest,
    t: usize,
    nodes: Vec<DecompNode>,
    pieces: Vec<Piece>,
}

impl Builder<'_> {
    fn push(&mut self, node: DecompNode) -> usize {
        self.nodes.push(node);
        self.nodes.len() - 1
    }

    fn push_piece(&mut self, piece: Piece) -> usize {
        self.pieces.push(piece);
        self.pieces.len() - 1
    }

    fn build(&mut self, i: usize, j: usize) -> usize {
        debug_assert!(self.f.is_balanced(i, j));
        if j == i {
            return self.push(DecompNode::Empty { i });
        }
        if j <= i + self.t {
            let piece = self.push_piece(Piece::Balanced { i, j });
            return self.push(DecompNode::Leaf { i, j, piece });
        }
        let whole_tree = self.f.is_tree(i, j);
        let (mut il, mut jr) = (i, j);
        loop {
            // F[il..jr) is balanced and nonempty: the budget caps the
            // absorbed shell at t < j - i tokens.
            debug_assert!(il < jr);
            let m = self.f.match_of(il) + 1;
            if (m - i) + (j - jr) <= self.t {
                il = m;
            } else if m < jr && (il - i) + (j - m) <= self.t {
                jr = m;
            } else if !whole_tree {
                return self.chain(&[i, il, m, jr, j]);
            } else if m == jr && (il + 1 - i) + (j - jr + 1) <= self.t {
                il += 1;
                jr -= 1;
            } else {
                let piece = self.push_piece(Piece::Context { i, il, jr, j });
                let inner = self.chain(&[il, m, jr]);
                return self.push(DecompNode::Wrap {
                    i,
                    j,
                    il,
                    jr,
                    piece,
                    inner,
                });
            }
        }
    }

    /// Decomposes each consecutive nonempty range between `cuts` and joins
    /// them with right-leaning splits.
    fn chain(&mut self, cuts: &[usize]) -> usize {
        let mut bounds: Vec<usize> = Vec::with_capacity(cuts.len());
        for &c in cuts {
            if bounds.last() != Some(&c) {
                bounds.push(c);
            }
        }
        if bounds.len() == 1 {
            return self.push(DecompNode::Empty { i: bounds[0] });
        }
        let last = bounds.len() - 1;
        let mut node = self.build(bounds[last - 1], bounds[last]);
        for w in (0..last - 1).rev() {
            let (i, m) = (bounds[w], bounds[w + 1]);
            let left = self.build(i, m);
            let (_, j) = self.nodes[node].range();
            let right = node;
            node = self.push(DecompNode::Split { i, j, m, left, right });
        }
        node
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::parse_forest;
    use wed_core::Alphabet;

    #[test]
    fn single_node_with_budget_two_is_one_piece() {
        let mut alpha = Alphabet::default();
        let f = parse_forest("(a)", &mut alpha).unwrap();
        let d = piece_decomposition(&f, 2);
        assert_eq!(d.pieces(), &[Piece::Balanced { i: 0, j: 2 }]);
        d.verify(&f).unwrap();
    }

    #[test]
    fn empty_forest_decomposes_into_nothing() {
        let f = Forest::empty();
        let d = piece_decomposition(&f, 2);
        assert!(d.is_empty());
        d.verify(&f).unwrap();
    }

    #[test]
    fn six_sibling_leaves_fit_the_count_bound() {
        let mut alpha = Alphabet::default();
        let f = parse_forest("(a) (a) (a) (a) (a) (a)", &mut alpha).unwrap();
        let d = piece_decomposition(&f, 4);
        d.verify(&f).unwrap();
        let n = f.len();
        let t = 4;
        assert!(d.pieces().iter().all(|p| p.len() <= t));
        assert!(d.len() <= 1 || (d.len() + 1) * t <= 6 * n, "count {} too large", d.len());
        assert!(d.len() <= 17);
    }

    #[test]
    fn deep_path_produces_context_pieces() {
        let mut alpha = Alphabet::default();
        // A path of 8 nested nodes forces context pieces at budget 4.
        let f = parse_forest("(a (a (a (a (a (a (a (a))))))))", &mut alpha).unwrap();
        let d = piece_decomposition(&f, 4);
        d.verify(&f).unwrap();
        assert!(d
            .pieces()
            .iter()
            .any(|p| matches!(p, Piece::Context { .. })));
        assert!(d.pieces().iter().all(|p| p.len() <= 4));
    }
}
