//! Exact weighted tree edit distance between forests.
//!
//! The classical keyroot decomposition over postorder-numbered nodes.
//! Each forest is wrapped in a virtual root labeled ε before the DP runs:
//! relabeling the virtual root to a real node costs exactly that node's
//! insertion, and deleting it costs w(ε, ε) = 0, so every mapping of the
//! wrapped trees prices some forest mapping of the originals and the
//! minima coincide.

use wed_core::{CostValue, Symbol, WeightTable};

use crate::forest::Forest;

struct TreeIndex {
    /// Node labels in postorder; the virtual root is last.
    labels: Vec<Symbol>,
    /// Postorder index of the leftmost leaf of each node's subtree.
    lml: Vec<usize>,
    /// Nodes that start a new leftmost-leaf chain, ascending.
    keyroots: Vec<usize>,
}

fn index(forest: &Forest) -> TreeIndex {
    let n = forest.node_count() + 1;
    let mut labels = Vec::with_capacity(n);
    let mut lml = Vec::with_capacity(n);
    // One frame per open node: the leftmost leaf seen in its subtree.
    let mut stack: Vec<Option<usize>> = vec![None];
    for t in forest.tokens() {
        if t.is_open() {
            stack.push(None);
        } else {
            let me = labels.len();
            let my_lml = stack.pop().expect("balanced input").unwrap_or(me);
            labels.push(t.label());
            lml.push(my_lml);
            let parent = stack.last_mut().expect("virtual frame below");
            if parent.is_none() {
                *parent = Some(my_lml);
            }
        }
    }
    let me = labels.len();
    let root_lml = stack.pop().expect("virtual frame").unwrap_or(me);
    debug_assert!(stack.is_empty());
    labels.push(Symbol::EPSILON);
    lml.push(root_lml);

    let mut keyroots = Vec::new();
    let mut seen = vec![false; n];
    for i in (0..n).rev() {
        if !seen[lml[i]] {
            seen[lml[i]] = true;
            keyroots.push(i);
        }
    }
    keyroots.reverse();
    TreeIndex {
        labels,
        lml,
        keyroots,
    }
}

/// Exact `ted^w(F, G)`: the minimum, over forest alignments, of half the
/// parenthesis-string cost, equivalently the cheapest node mapping that
/// preserves ancestry and left-to-right order.
pub fn weighted_ted(f: &Forest, g: &Forest, w: &WeightTable) -> CostValue {
    let a = index(f);
    let b = index(g);
    let (na, nb) = (a.labels.len(), b.labels.len());
    let mut td = vec![CostValue::ZERO; na * nb];
    for &kf in &a.keyroots {
        for &kg in &b.keyroots {
            let (la, lb) = (a.lml[kf], b.lml[kg]);
            let (ra, rb) = (kf - la + 2, kg - lb + 2);
            // fd[di][dj]: distance between the forest of nodes
            // [la..la+di) and [lb..lb+dj), flattened row-major.
            let mut fd = vec![CostValue::ZERO; ra * rb];
            for di in 1..ra {
                fd[di * rb] = fd[(di - 1) * rb] + w.cost(a.labels[la + di - 1], Symbol::EPSILON);
            }
            for dj in 1..rb {
                fd[dj] = fd[dj - 1] + w.cost(Symbol::EPSILON, b.labels[lb + dj - 1]);
            }
            for di in 1..ra {
                let i1 = la + di - 1;
                for dj in 1..rb {
                    let j1 = lb + dj - 1;
                    let del = fd[(di - 1) * rb + dj] + w.cost(a.labels[i1], Symbol::EPSILON);
                    let ins = fd[di * rb + dj - 1] + w.cost(Symbol::EPSILON, b.labels[j1]);
                    let best = if a.lml[i1] == la && b.lml[j1] == lb {
                        let rel = fd[(di - 1) * rb + dj - 1] + w.cost(a.labels[i1], b.labels[j1]);
                        let v = del.min(ins).min(rel);
                        td[i1 * nb + j1] = v;
                        v
                    } else {
                        let (di0, dj0) = (a.lml[i1] - la, b.lml[j1] - lb);
                        let sub = fd[di0 * rb + dj0] + td[i1 * nb + j1];
                        del.min(ins).min(sub)
                    };
                    fd[di * rb + dj] = best;
                }
            }
        }
    }
    td[(na - 1) * nb + (nb - 1)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::parse_forest;
    use wed_core::Alphabet;

    fn unit(alpha: &Alphabet) -> WeightTable {
        WeightTable::unit(alpha.clone())
    }

    #[test]
    fn single_relabel_costs_one() {
        let mut alpha = Alphabet::new();
        let f = parse_forest("(a)", &mut alpha).unwrap();
        let g = parse_forest("(b)", &mut alpha).unwrap();
        assert_eq!(weighted_ted(&f, &g, &unit(&alpha)), CostValue::UNIT);
    }

    #[test]
    fn distance_to_the_empty_forest_sums_deletions() {
        let mut alpha = Alphabet::new();
        let f = parse_forest("(a (b) (c (d))) (e)", &mut alpha).unwrap();
        let g = Forest::empty();
        let w = unit(&alpha);
        assert_eq!(weighted_ted(&f, &g, &w), CostValue::from_units(5).unwrap());
        assert_eq!(weighted_ted(&g, &f, &w), CostValue::from_units(5).unwrap());
        assert_eq!(weighted_ted(&g, &g, &w), CostValue::ZERO);
    }

    #[test]
    fn unwrapping_a_child_costs_one_deletion() {
        let mut alpha = Alphabet::new();
        let f = parse_forest("(a (b))", &mut alpha).unwrap();
        let g = parse_forest("(a)", &mut alpha).unwrap();
        assert_eq!(weighted_ted(&f, &g, &unit(&alpha)), CostValue::UNIT);
    }

    #[test]
    fn identical_forests_cost_nothing() {
        let mut alpha = Alphabet::new();
        let f = parse_forest("(a (b (c)) (d)) (e (f))", &mut alpha).unwrap();
        assert_eq!(weighted_ted(&f, &f, &unit(&alpha)), CostValue::ZERO);
    }

    #[test]
    fn ancestry_must_be_preserved() {
        let mut alpha = Alphabet::new();
        // Flattening (a (b)) into siblings (a)(b) cannot map both nodes:
        // one paren pair moves, costing a delete plus an insert.
        let f = parse_forest("(a (b))", &mut alpha).unwrap();
        let g = parse_forest("(a) (b)", &mut alpha).unwrap();
        assert_eq!(
            weighted_ted(&f, &g, &unit(&alpha)),
            CostValue::from_units(2).unwrap()
        );
    }

    #[test]
    fn relabel_beats_delete_insert_under_unit_weights() {
        let mut alpha = Alphabet::new();
        let f = parse_forest("(a (x) (c))", &mut alpha).unwrap();
        let g = parse_forest("(a (y) (c))", &mut alpha).unwrap();
        assert_eq!(weighted_ted(&f, &g, &unit(&alpha)), CostValue::UNIT);
    }
}
