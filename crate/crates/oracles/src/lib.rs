//! Brute-force reference implementations.
//!
//! Everything here favors the most literal reading of a definition over
//! speed: exhaustive enumeration where feasible, quadratic scans otherwise.
//! The production pipelines are tested against these functions, so none of
//! them may share code with the crates they check.
//!
//! Enumerations carry hard size caps and refuse larger inputs instead of
//! silently truncating the search space.

use thiserror::Error;

use foresttk::Forest;
use wed_core::{CostValue, Symbol, WeightTable};

pub mod gen;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("{what} is capped at {limit}, got an instance of size {got}")]
    CapExceeded { what: &'static str, limit: usize, got: usize },
    #[error("dyck matchings need a complement involution on the weight table")]
    MissingComplement,
}

/// Exact `ed^w(X, Y)` by the quadratic dynamic-programming table.
pub fn full_dp_weighted_ed(x: &[Symbol], y: &[Symbol], w: &WeightTable) -> CostValue {
    let (n, m) = (x.len(), y.len());
    let idx = |i: usize, j: usize| i * (m + 1) + j;
    let mut dp = vec![CostValue::ZERO; (n + 1) * (m + 1)];
    for i in 1..=n {
        dp[idx(i, 0)] = dp[idx(i - 1, 0)] + w.cost(x[i - 1], Symbol::EPSILON);
    }
    for j in 1..=m {
        dp[idx(0, j)] = dp[idx(0, j - 1)] + w.cost(Symbol::EPSILON, y[j - 1]);
    }
    for i in 1..=n {
        for j in 1..=m {
            let del = dp[idx(i - 1, j)] + w.cost(x[i - 1], Symbol::EPSILON);
            let ins = dp[idx(i, j - 1)] + w.cost(Symbol::EPSILON, y[j - 1]);
            let sub = dp[idx(i - 1, j - 1)] + w.cost(x[i - 1], y[j - 1]);
            dp[idx(i, j)] = del.min(ins).min(sub);
        }
    }
    dp[idx(n, m)]
}

/// `ed^w(X, Y)` as the literal minimum over all alignments, enumerated by
/// unmemoized recursion over the three possible fates of the first
/// character. Capped at `|X| + |Y| ≤ 12`.
pub fn enumerate_alignments_ed(
    x: &[Symbol],
    y: &[Symbol],
    w: &WeightTable,
) -> Result<CostValue, OracleError> {
    const CAP: usize = 12;
    if x.len() + y.len() > CAP {
        return Err(OracleError::CapExceeded {
            what: "alignment enumeration",
            limit: CAP,
            got: x.len() + y.len(),
        });
    }
    fn go(x: &[Symbol], y: &[Symbol], w: &WeightTable) -> CostValue {
        match (x.first(), y.first()) {
            (None, None) => CostValue::ZERO,
            (Some(&a), None) => w.cost(a, Symbol::EPSILON) + go(&x[1..], y, w),
            (None, Some(&b)) => w.cost(Symbol::EPSILON, b) + go(x, &y[1..], w),
            (Some(&a), Some(&b)) => {
                let del = w.cost(a, Symbol::EPSILON) + go(&x[1..], y, w);
                let ins = w.cost(Symbol::EPSILON, b) + go(x, &y[1..], w);
                let sub = w.cost(a, b) + go(&x[1..], &y[1..], w);
                del.min(ins).min(sub)
            }
        }
    }
    Ok(go(x, y, w))
}

/// Exact `ted^w(F, G)` as the minimum over all node mappings that preserve
/// ancestry and left-to-right order, which are exactly the mappings induced
/// by forest alignments of the two parenthesis strings. Capped at 8 nodes
/// per forest.
///
/// Candidate mappings are enumerated as pairs of equal-size node subsets:
/// within any valid mapping the pairing is forced to be the preorder-
/// monotone bijection, so subsets determine mappings.
pub fn enumerate_forest_alignments(
    f: &Forest,
    g: &Forest,
    w: &WeightTable,
) -> Result<CostValue, OracleError> {
    const CAP: usize = 8;
    let fu = f.node_spans();
    let gv = g.node_spans();
    for side in [&fu, &gv] {
        if side.len() > CAP {
            return Err(OracleError::CapExceeded {
                what: "forest alignment enumeration",
                limit: CAP,
                got: side.len(),
            });
        }
    }
    // For preorder-consecutive u before v: v is a descendant of u exactly
    // when v's close sits before u's close; otherwise v is to the right.
    let nests = |a: &(Symbol, usize, usize), b: &(Symbol, usize, usize)| b.2 < a.2;
    let mut best = CostValue::INF;
    for mf in 0u32..(1 << fu.len()) {
        'mg: for mg in 0u32..(1 << gv.len()) {
            if mf.count_ones() != mg.count_ones() {
                continue;
            }
            let su: Vec<usize> = (0..fu.len()).filter(|i| mf & (1 << i) != 0).collect();
            let sv: Vec<usize> = (0..gv.len()).filter(|j| mg & (1 << j) != 0).collect();
            for p in 0..su.len() {
                for q in p + 1..su.len() {
                    if nests(&fu[su[p]], &fu[su[q]]) != nests(&gv[sv[p]], &gv[sv[q]]) {
                        continue 'mg;
                    }
                }
            }
            let mut cost = CostValue::ZERO;
            for (p, &u) in su.iter().enumerate() {
                cost = cost + w.cost(fu[u].0, gv[sv[p]].0);
            }
            for (i, node) in fu.iter().enumerate() {
                if mf & (1 << i) == 0 {
                    cost = cost + w.cost(node.0, Symbol::EPSILON);
                }
            }
            for (j, node) in gv.iter().enumerate() {
                if mg & (1 << j) == 0 {
                    cost = cost + w.cost(Symbol::EPSILON, node.0);
                }
            }
            best = best.min(cost);
        }
    }
    Ok(best)
}

/// `dyck^w(X)` as the minimum over all non-crossing matchings of `X`'s
/// positions, each matched pair and unmatched position priced by the
/// closed forms that hold for skewmetric tables: a lone symbol costs its
/// deletion, and a pair `(x, y)` costs `min_z w(x, z) + w(y, z̄)` over `z`
/// ranging over the opening symbols and ε. Capped at `|X| ≤ 10`.
///
/// Opening symbols are recognized as those whose id precedes their
/// complement's; Dyck alphabets intern each `open close` pair in that
/// order, so the convention holds for every table built through them.
pub fn enumerate_dyck_matchings(x: &[Symbol], w: &WeightTable) -> Result<CostValue, OracleError> {
    const CAP: usize = 10;
    if x.len() > CAP {
        return Err(OracleError::CapExceeded {
            what: "dyck matching enumeration",
            limit: CAP,
            got: x.len(),
        });
    }
    if !w.has_complement() {
        return Err(OracleError::MissingComplement);
    }
    let opens: Vec<Symbol> = w
        .alphabet()
        .symbols()
        .filter(|&s| s.id() < w.complement_of(s).id())
        .collect();
    let single = |a: Symbol| w.cost(a, Symbol::EPSILON);
    let pair = |a: Symbol, b: Symbol| {
        let mut best = single(a) + single(b);
        for &z in &opens {
            best = best.min(w.cost(a, z) + w.cost(b, w.complement_of(z)));
        }
        best
    };
    fn go(
        x: &[Symbol],
        single: &dyn Fn(Symbol) -> CostValue,
        pair: &dyn Fn(Symbol, Symbol) -> CostValue,
    ) -> CostValue {
        let Some((&head, rest)) = x.split_first() else {
            return CostValue::ZERO;
        };
        let mut best = single(head) + go(rest, single, pair);
        for m in 1..x.len() {
            let c = pair(head, x[m]) + go(&x[1..m], single, pair) + go(&x[m + 1..], single, pair);
            best = best.min(c);
        }
        best
    }
    Ok(go(x, &single, &pair))
}

/// The length of the longest common prefix of `x[i..]` and `y[j..]` by a
/// character scan.
pub fn naive_lce(x: &[Symbol], y: &[Symbol], i: usize, j: usize) -> usize {
    x[i..].iter().zip(&y[j..]).take_while(|(a, b)| a == b).count()
}

/// The shortest period of a nonempty slice, straight from the definition.
pub fn naive_period(p: &[Symbol]) -> usize {
    assert!(!p.is_empty(), "the empty string has no period");
    (1..=p.len())
        .find(|&q| (q..p.len()).all(|i| p[i] == p[i - q]))
        .expect("the length itself is always a period")
}

fn is_primitive_naive(q: &[Symbol]) -> bool {
    for d in 1..q.len() {
        if q.len() % d == 0 && (d..q.len()).all(|i| q[i] == q[i - d]) {
            return false;
        }
    }
    !q.is_empty()
}

/// All `(i, q)` such that `P[i..i + (e+1)q)` is the power `Q^{e+1}` of a
/// primitive `Q = P[i..i+q)` with `q ≤ maxq`. With `balanced_only`, only
/// fragments that are balanced in `host` count (the symbols of `P` must
/// then be the token stream of `host`).
pub fn naive_power_scan(
    p: &[Symbol],
    e: usize,
    maxq: usize,
    balanced_only: bool,
    host: Option<&Forest>,
) -> Vec<(usize, usize)> {
    if balanced_only {
        let host = host.expect("balance checks need the host forest");
        assert_eq!(host.len(), p.len(), "host must match the scanned symbols");
    }
    let mut out = Vec::new();
    for q in 1..=maxq {
        let Some(limit) = p.len().checked_sub((e + 1) * q) else {
            break;
        };
        for i in 0..=limit {
            if !is_primitive_naive(&p[i..i + q]) {
                continue;
            }
            if !(q..(e + 1) * q).all(|t| p[i + t] == p[i + t - q]) {
                continue;
            }
            if balanced_only && !host.unwrap().is_balanced(i, i + q) {
                continue;
            }
            out.push((i, q));
        }
    }
    out
}
