//! Interval dynamic programs for the weighted Dyck edit distance.
//!
//! The distance of `X` is the cheapest non-crossing partial matching: each
//! matched pair `(i, j)` pays [`pair_cost`], each unmatched position pays
//! [`single_cost`]. The DP below optimizes over intervals; a banded variant
//! visits only intervals whose height imbalance leaves at most `2k`
//! positions over, which keeps both time and memory proportional to the
//! surviving intervals instead of all `n²` of them.

use std::collections::HashMap;

use wed_core::{CostValue, Symbol, WeightTable, SCALE};

use crate::alphabet::DyckAlphabet;

/// A non-crossing partial matching of string positions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DyckMatching {
    pairs: Vec<(usize, usize)>,
}

impl DyckMatching {
    /// The matching with no pairs.
    pub fn empty() -> DyckMatching {
        DyckMatching::default()
    }

    /// Matched pairs `(i, j)` with `i < j`, sorted by opening position.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// The partner of each of the `n` positions, if matched.
    pub fn partner_map(&self, n: usize) -> Vec<Option<usize>> {
        let mut map = vec![None; n];
        for &(i, j) in &self.pairs {
            map[i] = Some(j);
            map[j] = Some(i);
        }
        map
    }

    /// True when no index repeats and every two pairs nest or are disjoint.
    pub fn is_non_crossing(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        for &(i, j) in &self.pairs {
            if i >= j || !seen.insert(i) || !seen.insert(j) {
                return false;
            }
        }
        self.pairs.iter().all(|&(a, b)| {
            self.pairs
                .iter()
                .filter(|&&(c, _)| a < c)
                .all(|&(c, d)| b < c || d < b)
        })
    }
}

/// `w(x, ε)`: the cost of leaving `x` unmatched.
pub fn single_cost(x: Symbol, w: &WeightTable) -> CostValue {
    w.cost(x, Symbol::EPSILON)
}

/// The cheapest charge for a matched pair: rewrite `x` onto an opening
/// bracket `z` and `y` onto its complement, minimized over `z` in the
/// opening set extended by epsilon (the latter deletes both).
pub fn pair_cost(x: Symbol, y: Symbol, w: &WeightTable) -> CostValue {
    assert!(w.has_complement(), "pair costs need the bracket involution");
    let mut best = add(single_cost(x, w), single_cost(y, w));
    for z in w.alphabet().symbols() {
        let zbar = w.complement_of(z);
        if z.id() < zbar.id() {
            best = best.min(add(w.cost(x, z), w.cost(y, zbar)));
        }
    }
    best
}

fn add(a: CostValue, b: CostValue) -> CostValue {
    a.checked_add(b).unwrap_or(CostValue::INF)
}

/// Symbol-level costs tabulated per id pair; the DP queries them once per
/// interval and candidate split instead of re-minimizing over the alphabet.
struct CostTables {
    side: usize,
    singles: Vec<CostValue>,
    pairs: Vec<CostValue>,
}

impl CostTables {
    fn new(w: &WeightTable) -> CostTables {
        let side = w.alphabet().len() + 1;
        let mut singles = vec![CostValue::ZERO; side];
        let mut pairs = vec![CostValue::ZERO; side * side];
        for a in w.alphabet().symbols() {
            singles[a.index()] = single_cost(a, w);
            for b in w.alphabet().symbols() {
                pairs[a.index() * side + b.index()] = pair_cost(a, b, w);
            }
        }
        CostTables { side, singles, pairs }
    }

    fn single(&self, a: Symbol) -> CostValue {
        self.singles[a.index()]
    }

    fn pair(&self, a: Symbol, b: Symbol) -> CostValue {
        self.pairs[a.index() * self.side + b.index()]
    }
}

/// Interval DP: `D[i, j]` is the distance of `X[i..j)`, with
/// `D[i, j] = min(single(X[i]) + D[i+1, j],
///                min over m of pair(X[i], X[m]) + D[i+1, m] + D[m+1, j])`.
///
/// Returns `D[0, n]` and a witnessing matching. With `band = Some(k)` the
/// value is clipped at `k` units (INF beyond, with an empty witness), and
/// only intervals whose height-imbalance lower bound stays within `k` are
/// visited: a normalized table charges at least half a unit per position
/// the imbalance leaves over, and every interval in a decomposition of a
/// matching of cost at most `k` keeps its restricted cost, hence its
/// bound, within `k`. Values at most `k` units are therefore still exact.
///
/// The unbanded variant materializes dense `(n+1)²` tables and is meant
/// for oracle-sized inputs.
pub fn weighted_dyck_dp(
    x: &[Symbol],
    w: &WeightTable,
    band: Option<usize>,
) -> (CostValue, DyckMatching) {
    assert!(w.has_complement(), "the interval DP needs the bracket involution");
    match band {
        None => dp_dense(x, w),
        Some(k) => dp_banded(x, w, k),
    }
}

fn dp_dense(x: &[Symbol], w: &WeightTable) -> (CostValue, DyckMatching) {
    let n = x.len();
    let stride = n + 1;
    let costs = CostTables::new(w);
    let mut cost = vec![CostValue::INF; stride * stride];
    // 0 = unset, 1 = position i unmatched, m + 2 = pair (i, m).
    let mut choice = vec![0u32; stride * stride];
    for i in 0..=n {
        cost[i * stride + i] = CostValue::ZERO;
    }

    for len in 1..=n {
        for i in 0..=(n - len) {
            let j = i + len;
            let mut best = add(costs.single(x[i]), cost[(i + 1) * stride + j]);
            let mut pick = 1u32;
            for m in (i + 1)..j {
                let joined = add(
                    costs.pair(x[i], x[m]),
                    add(cost[(i + 1) * stride + m], cost[(m + 1) * stride + j]),
                );
                if joined < best {
                    best = joined;
                    pick = (m + 2) as u32;
                }
            }
            cost[i * stride + j] = best;
            choice[i * stride + j] = pick;
        }
    }

    let total = cost[n];
    if total.is_inf() {
        return (CostValue::INF, DyckMatching::empty());
    }
    let mut pairs = Vec::new();
    let mut work = vec![(0usize, n)];
    while let Some((i, j)) = work.pop() {
        if i >= j {
            continue;
        }
        match choice[i * stride + j] {
            1 => work.push((i + 1, j)),
            c => {
                let m = (c as usize).checked_sub(2).expect("finite interval has a choice");
                pairs.push((i, m));
                work.push((i + 1, m));
                work.push((m + 1, j));
            }
        }
    }
    pairs.sort_unstable();
    (total, DyckMatching { pairs })
}

fn dp_banded(x: &[Symbol], w: &WeightTable, k: usize) -> (CostValue, DyckMatching) {
    let n = x.len();
    let threshold = u32::try_from(k).expect("threshold fits in u32");
    if n == 0 {
        return (CostValue::ZERO, DyckMatching::empty());
    }
    let costs = CostTables::new(w);
    let mut heights = vec![0i64; n + 1];
    for (i, &s) in x.iter().enumerate() {
        let up = s.id() < w.complement_of(s).id();
        heights[i + 1] = heights[i] + if up { 1 } else { -1 };
    }
    let limit = 2 * k as i64;

    // Surviving interval ends per start, ascending. Once the height drops
    // more than 2k below H(i), every longer interval starting at i is
    // imbalanced beyond repair, so the inner scan stops early.
    let mut surviving: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for i in 0..n {
        let mut low = heights[i];
        for j in (i + 1)..=n {
            low = low.min(heights[j]);
            if heights[i] - low > limit {
                break;
            }
            if heights[i] + heights[j] - 2 * low <= limit {
                surviving[i].push(j as u32);
            }
        }
    }

    let mut order: Vec<(u32, u32)> = surviving
        .iter()
        .enumerate()
        .flat_map(|(i, ends)| ends.iter().map(move |&j| (i as u32, j)))
        .collect();
    order.sort_unstable_by_key(|&(i, j)| j - i);

    let mut table: HashMap<(u32, u32), (CostValue, u32)> = HashMap::with_capacity(order.len());
    let get = |table: &HashMap<(u32, u32), (CostValue, u32)>, a: usize, b: usize| {
        if a == b {
            CostValue::ZERO
        } else {
            table.get(&(a as u32, b as u32)).map_or(CostValue::INF, |entry| entry.0)
        }
    };

    for &(i32_, j32) in &order {
        let (i, j) = (i32_ as usize, j32 as usize);
        let mut best = add(costs.single(x[i]), get(&table, i + 1, j));
        let mut pick = 1u32;
        // Pairing (i, i+1) leaves an empty left child; all other viable
        // splits have a surviving left child (i+1, m), since any interval
        // of an optimal decomposition within the band survives too.
        if i + 1 < j {
            let joined = add(costs.pair(x[i], x[i + 1]), get(&table, i + 2, j));
            if joined < best {
                best = joined;
                pick = (i + 3) as u32;
            }
        }
        for &m32 in &surviving[i + 1] {
            let m = m32 as usize;
            if m >= j {
                break;
            }
            let joined = add(
                costs.pair(x[i], x[m]),
                add(get(&table, i + 1, m), get(&table, m + 1, j)),
            );
            if joined < best {
                best = joined;
                pick = (m + 2) as u32;
            }
        }
        if best.is_finite() {
            table.insert((i32_, j32), (best, pick));
        }
    }

    let total = get(&table, 0, n).clip(threshold);
    if total.is_inf() {
        return (CostValue::INF, DyckMatching::empty());
    }
    let mut pairs = Vec::new();
    let mut work = vec![(0usize, n)];
    while let Some((i, j)) = work.pop() {
        if i >= j {
            continue;
        }
        let (_, pick) = table[&(i as u32, j as u32)];
        match pick {
            1 => work.push((i + 1, j)),
            c => {
                let m = (c as usize).checked_sub(2).expect("finite interval has a choice");
                pairs.push((i, m));
                work.push((i + 1, m));
                work.push((m + 1, j));
            }
        }
    }
    pairs.sort_unstable();
    (total, DyckMatching { pairs })
}

/// Unit-cost bounded variant: `Some((d, M))` with an optimal matching when
/// the unweighted Dyck distance `d` of `x` is at most `k`, `None` beyond.
///
/// `x` is expected to be greedily preprocessed; the result is correct
/// either way, but the kernel pipeline relies on the preprocessed form.
pub fn unweighted_dyck_bounded(
    x: &[Symbol],
    k: usize,
    alpha: &DyckAlphabet,
) -> Option<(usize, DyckMatching)> {
    let table = alpha.unit_table();
    let (value, matching) = weighted_dyck_dp(x, &table, Some(k));
    let scaled = value.scaled()?;
    debug_assert_eq!(scaled % SCALE, 0, "unit tables yield whole units");
    Some(((scaled / SCALE) as usize, matching))
}
