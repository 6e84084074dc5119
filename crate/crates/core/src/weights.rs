//! Weight tables over Σ̄ × Σ̄ and their validation.
//!
//! A [`WeightTable`] is a *total* map from ordered symbol pairs (including ε
//! on either side) to finite costs. The diagonal is pinned to zero, and every
//! entry not listed in a weight file defaults to one unit, so a file only
//! needs the rows that deviate from the discrete metric.
//!
//! # Weight file format
//!
//! UTF-8 lines `A<TAB>B<TAB>COST`:
//!
//! * `A` and `B` are token names, or `-` for ε;
//! * `COST` is a nonnegative decimal with at most six fraction digits;
//! * lines starting with `#` are comments; blank lines are ignored;
//! * listing a diagonal pair with a nonzero cost is a hard error, as is
//!   listing the same pair twice.
//!
//! # Validation modes
//!
//! [`WeightMode`] is cumulative: `Normalized` requires `w(a,b) ≥ 1` off the
//! diagonal; `Quasimetric` adds the triangle inequality
//! `w(a,c) ≤ w(a,b) + w(b,c)`; `Skewmetric` adds `w(a,b) = w(b̄,ā)` under a
//! complement involution (with `ε̄ = ε`) and is the mode required by the Dyck
//! pipeline. Validation reports every violated constraint with its
//! witnessing symbols; the triangle check is cubic in |Σ̄| and meant for the
//! small alphabets these tools operate on.

use std::fmt::Write as _;

use thiserror::Error;

use crate::cost::{CostError, CostValue, SCALE};
use crate::symbol::{Alphabet, Symbol};

#[derive(Debug, Error)]
pub enum WeightError {
    #[error("line {line}: expected `A<TAB>B<TAB>COST`, found {found:?}")]
    MalformedLine { line: usize, found: String },
    #[error("line {line}: {source}")]
    BadCost {
        line: usize,
        #[source]
        source: CostError,
    },
    #[error("nonzero diagonal entry for {name:?}: w(a, a) must be 0")]
    NonzeroDiagonal { name: String },
    #[error("duplicate entry for ({a:?}, {b:?})")]
    DuplicateEntry { a: String, b: String },
    #[error("infinite entry for ({a:?}, {b:?}): tables hold finite costs only")]
    InfiniteEntry { a: String, b: String },
    #[error("symbol id {id} out of range for an alphabet of {len} symbols")]
    UnknownSymbol { id: u32, len: usize },
    #[error("skewmetric validation requires a complement involution")]
    MissingComplement,
    #[error("complement involution must cover every symbol exactly once; {name:?} is {problem}")]
    BadInvolution { name: String, problem: &'static str },
}

/// Validation strength, cumulative from top to bottom.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightMode {
    Normalized,
    Quasimetric,
    Skewmetric,
}

impl WeightMode {
    pub fn parse(s: &str) -> Option<WeightMode> {
        match s {
            "normalized" => Some(WeightMode::Normalized),
            "quasimetric" => Some(WeightMode::Quasimetric),
            "skewmetric" => Some(WeightMode::Skewmetric),
            _ => None,
        }
    }
}

/// One violated constraint, with the witnessing symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `w(a, a) ≠ 0`.
    NonzeroDiagonal { a: Symbol },
    /// `w(a, b) < 1` for `a ≠ b`.
    BelowUnit { a: Symbol, b: Symbol },
    /// `w(from, to) > w(from, via) + w(via, to)`.
    Triangle { from: Symbol, via: Symbol, to: Symbol },
    /// `w(a, b) ≠ w(b̄, ā)`.
    SkewAsymmetry { a: Symbol, b: Symbol },
}

/// Outcome of [`WeightTable::validate`]: empty means the table satisfies
/// the requested mode.
#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    /// Human-readable lines, one per violation, in deterministic scan order.
    pub fn render(&self, table: &WeightTable) -> String {
        let mut out = String::new();
        for v in &self.violations {
            let name = |s: Symbol| table.alphabet.name(s).to_owned();
            match *v {
                Violation::NonzeroDiagonal { a } => {
                    let _ = writeln!(
                        out,
                        "diagonal ({0}): w({0}, {0}) = {1}, expected 0.000000",
                        name(a),
                        table.cost(a, a)
                    );
                }
                Violation::BelowUnit { a, b } => {
                    let _ = writeln!(
                        out,
                        "below-unit ({0}, {1}): w({0}, {1}) = {2} < 1.000000",
                        name(a),
                        name(b),
                        table.cost(a, b)
                    );
                }
                Violation::Triangle { from, via, to } => {
                    let detour = table.cost(from, via) + table.cost(via, to);
                    let _ = writeln!(
                        out,
                        "triangle ({0}, {1}, {2}): w({0}, {2}) = {3} > w({0}, {1}) + w({1}, {2}) = {4}",
                        name(from),
                        name(via),
                        name(to),
                        table.cost(from, to),
                        detour
                    );
                }
                Violation::SkewAsymmetry { a, b } => {
                    let (ca, cb) = (table.complement_of(a), table.complement_of(b));
                    let _ = writeln!(
                        out,
                        "skew ({0}, {1}): w({0}, {1}) = {2} != w({3}, {4}) = {5}",
                        name(a),
                        name(b),
                        table.cost(a, b),
                        name(cb),
                        name(ca),
                        table.cost(cb, ca)
                    );
                }
            }
        }
        out
    }
}

/// A total weight function w : Σ̄ × Σ̄ → finite costs with a zero diagonal,
/// optionally carrying a complement involution for Dyck use.
#[derive(Clone, Debug)]
pub struct WeightTable {
    alphabet: Alphabet,
    /// Row-major `(n+1) × (n+1)` scaled costs indexed by symbol id; row and
    /// column 0 are ε. INF is never stored.
    costs: Vec<u64>,
    /// `complement[id]` for ids `0..=n`; index 0 maps to itself (ε̄ = ε).
    complement: Option<Vec<u32>>,
}

impl WeightTable {
    /// The discrete metric over `alphabet`: 0 on the diagonal, 1 elsewhere.
    pub fn unit(alphabet: Alphabet) -> WeightTable {
        let n = alphabet.len() + 1;
        let mut costs = vec![SCALE; n * n];
        for i in 0..n {
            costs[i * n + i] = 0;
        }
        WeightTable { alphabet, costs, complement: None }
    }

    /// Parses the weight file format, interning unseen names into
    /// `alphabet`. Unlisted off-diagonal pairs keep the default unit cost.
    pub fn parse(text: &str, alphabet: &mut Alphabet) -> Result<WeightTable, WeightError> {
        let mut entries = Vec::new();
        for (idx, raw_line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw_line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = raw_line.trim_end().split('\t');
            let (a, b, cost) = match (fields.next(), fields.next(), fields.next(), fields.next()) {
                (Some(a), Some(b), Some(c), None) => (a.trim(), b.trim(), c.trim()),
                _ => {
                    return Err(WeightError::MalformedLine {
                        line: line_no,
                        found: raw_line.to_owned(),
                    })
                }
            };
            let a = if a == "-" { Symbol::EPSILON } else { alphabet.intern(a) };
            let b = if b == "-" { Symbol::EPSILON } else { alphabet.intern(b) };
            let cost = CostValue::parse_decimal(cost)
                .map_err(|source| WeightError::BadCost { line: line_no, source })?;
            entries.push((a, b, cost));
        }
        let mut table = WeightTable::unit(alphabet.clone());
        let mut seen = vec![false; table.side() * table.side()];
        for (a, b, cost) in entries {
            let slot = a.index() * table.side() + b.index();
            if seen[slot] {
                return Err(WeightError::DuplicateEntry {
                    a: alphabet.name(a).to_owned(),
                    b: alphabet.name(b).to_owned(),
                });
            }
            seen[slot] = true;
            table.set_cost(a, b, cost)?;
        }
        Ok(table)
    }

    fn side(&self) -> usize {
        self.alphabet.len() + 1
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn check_range(&self, s: Symbol) -> Result<(), WeightError> {
        if s.index() >= self.side() {
            Err(WeightError::UnknownSymbol { id: s.id(), len: self.alphabet.len() })
        } else {
            Ok(())
        }
    }

    /// Overwrites one entry. Nonzero diagonal and INF are rejected.
    pub fn set_cost(&mut self, a: Symbol, b: Symbol, cost: CostValue) -> Result<(), WeightError> {
        self.check_range(a)?;
        self.check_range(b)?;
        let raw = cost.scaled().ok_or_else(|| WeightError::InfiniteEntry {
            a: self.alphabet.name(a).to_owned(),
            b: self.alphabet.name(b).to_owned(),
        })?;
        if a == b && raw != 0 {
            return Err(WeightError::NonzeroDiagonal { name: self.alphabet.name(a).to_owned() });
        }
        let side = self.side();
        self.costs[a.index() * side + b.index()] = raw;
        Ok(())
    }

    /// The cost of editing `a` into `b`. Always finite.
    ///
    /// Panics if either id does not belong to this table's alphabet.
    pub fn cost(&self, a: Symbol, b: Symbol) -> CostValue {
        let side = self.side();
        assert!(
            a.index() < side && b.index() < side,
            "symbol pair ({:?}, {:?}) outside alphabet of {} symbols",
            a,
            b,
            self.alphabet.len()
        );
        CostValue::from_scaled(self.costs[a.index() * side + b.index()])
            .expect("tables never store INF")
    }

    /// Installs the complement involution from (open, close) pairs. The
    /// pairs must cover every symbol of the alphabet exactly once.
    pub fn set_complement(&mut self, pairs: &[(Symbol, Symbol)]) -> Result<(), WeightError> {
        let mut comp = vec![u32::MAX; self.side()];
        comp[0] = 0;
        for &(open, close) in pairs {
            self.check_range(open)?;
            self.check_range(close)?;
            for s in [open, close] {
                if s.is_epsilon() {
                    return Err(WeightError::BadInvolution {
                        name: "-".to_owned(),
                        problem: "ε cannot be paired",
                    });
                }
                if comp[s.index()] != u32::MAX {
                    return Err(WeightError::BadInvolution {
                        name: self.alphabet.name(s).to_owned(),
                        problem: "paired twice",
                    });
                }
            }
            if open == close {
                return Err(WeightError::BadInvolution {
                    name: self.alphabet.name(open).to_owned(),
                    problem: "paired with itself",
                });
            }
            comp[open.index()] = close.id();
            comp[close.index()] = open.id();
        }
        if let Some(missing) = comp.iter().position(|&c| c == u32::MAX) {
            return Err(WeightError::BadInvolution {
                name: self.alphabet.name(Symbol::new(missing as u32)).to_owned(),
                problem: "not paired",
            });
        }
        self.complement = Some(comp);
        Ok(())
    }

    pub fn has_complement(&self) -> bool {
        self.complement.is_some()
    }

    /// The complement of `s` under the installed involution; ε maps to ε.
    ///
    /// Panics if no involution is installed.
    pub fn complement_of(&self, s: Symbol) -> Symbol {
        let comp = self.complement.as_ref().expect("no complement involution installed");
        Symbol::new(comp[s.index()])
    }

    /// Checks the table against `mode`, listing every violated constraint.
    ///
    /// Skewmetric mode errors out (rather than reporting) when no
    /// complement involution is installed.
    pub fn validate(&self, mode: WeightMode) -> Result<ValidationReport, WeightError> {
        if mode == WeightMode::Skewmetric && self.complement.is_none() {
            return Err(WeightError::MissingComplement);
        }
        let mut report = ValidationReport::default();
        let all: Vec<Symbol> =
            std::iter::once(Symbol::EPSILON).chain(self.alphabet.symbols()).collect();
        for &a in &all {
            if self.cost(a, a) != CostValue::ZERO {
                report.violations.push(Violation::NonzeroDiagonal { a });
            }
        }
        for &a in &all {
            for &b in &all {
                if a != b && self.cost(a, b) < CostValue::UNIT {
                    report.violations.push(Violation::BelowUnit { a, b });
                }
            }
        }
        if mode == WeightMode::Quasimetric || mode == WeightMode::Skewmetric {
            for &from in &all {
                for &via in &all {
                    for &to in &all {
                        let detour = self.cost(from, via) + self.cost(via, to);
                        if self.cost(from, to) > detour {
                            report.violations.push(Violation::Triangle { from, via, to });
                        }
                    }
                }
            }
        }
        if mode == WeightMode::Skewmetric {
            for &a in &all {
                for &b in &all {
                    let (ca, cb) = (self.complement_of(a), self.complement_of(b));
                    // Each asymmetric pair is one constraint; report it once,
                    // from the side with the larger id tuple, which matches
                    // reading the involution left to right.
                    if self.cost(a, b) != self.cost(cb, ca)
                        && (a.id(), b.id()) > (cb.id(), ca.id())
                    {
                        report.violations.push(Violation::SkewAsymmetry { a, b });
                    }
                }
            }
        }
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> Alphabet {
        let mut a = Alphabet::new();
        a.intern("a");
        a.intern("b");
        a.intern("c");
        a
    }

    #[test]
    fn unit_table_is_quasimetric_ok() {
        let table = WeightTable::unit(abc());
        let report = table.validate(WeightMode::Quasimetric).unwrap();
        assert!(report.ok(), "{:?}", report.violations);
    }

    #[test]
    fn triangle_violation_reports_the_witness_triple() {
        // w(a,c)=1, w(c,b)=1, w(a,b)=5: going through c is cheaper.
        let mut alpha = abc();
        let table = WeightTable::parse("a\tc\t1\nc\tb\t1\na\tb\t5\n", &mut alpha).unwrap();
        let report = table.validate(WeightMode::Quasimetric).unwrap();
        let a = alpha.lookup("a").unwrap();
        let b = alpha.lookup("b").unwrap();
        let c = alpha.lookup("c").unwrap();
        assert!(report
            .violations
            .contains(&Violation::Triangle { from: a, via: c, to: b }));
        assert!(report.render(&table).contains("triangle (a, c, b)"));
    }

    #[test]
    fn skew_violation_on_epsilon_pair() {
        // w((, ε) = 2 but w(ε, )) = 3; skew-symmetry forces them equal.
        let mut alpha = Alphabet::new();
        let open = alpha.intern("(");
        let close = alpha.intern(")");
        let mut table =
            WeightTable::parse("(\t-\t2\n-\t)\t3\n", &mut alpha).unwrap();
        table.set_complement(&[(open, close)]).unwrap();
        let report = table.validate(WeightMode::Skewmetric).unwrap();
        let skew: Vec<_> = report
            .violations
            .iter()
            .filter(|v| matches!(v, Violation::SkewAsymmetry { .. }))
            .collect();
        assert_eq!(skew.len(), 1);
        assert_eq!(
            *skew[0],
            Violation::SkewAsymmetry { a: open, b: Symbol::EPSILON }
        );
        assert!(report.render(&table).contains("skew ((, -)"));
    }

    #[test]
    fn skewmetric_without_involution_is_an_error() {
        let table = WeightTable::unit(abc());
        assert!(matches!(
            table.validate(WeightMode::Skewmetric),
            Err(WeightError::MissingComplement)
        ));
    }

    #[test]
    fn nonzero_diagonal_listing_is_a_hard_error() {
        let mut alpha = Alphabet::new();
        let err = WeightTable::parse("a\ta\t1\n", &mut alpha).unwrap_err();
        assert!(matches!(err, WeightError::NonzeroDiagonal { .. }));
        // An explicit zero diagonal is redundant but legal.
        assert!(WeightTable::parse("a\ta\t0\n", &mut alpha).is_ok());
    }

    #[test]
    fn duplicate_pair_is_rejected() {
        let mut alpha = Alphabet::new();
        let err = WeightTable::parse("a\tb\t1\na\tb\t1\n", &mut alpha).unwrap_err();
        assert!(matches!(err, WeightError::DuplicateEntry { .. }));
    }

    #[test]
    fn comments_blanks_and_defaults() {
        let mut alpha = Alphabet::new();
        let table = WeightTable::parse("# header\n\na\tb\t2.5\n", &mut alpha).unwrap();
        let a = alpha.lookup("a").unwrap();
        let b = alpha.lookup("b").unwrap();
        assert_eq!(table.cost(a, b), CostValue::parse_decimal("2.5").unwrap());
        // Unlisted off-diagonal pairs default to one unit.
        assert_eq!(table.cost(b, a), CostValue::UNIT);
        assert_eq!(table.cost(a, Symbol::EPSILON), CostValue::UNIT);
        assert_eq!(table.cost(a, a), CostValue::ZERO);
    }

    #[test]
    fn involution_must_cover_the_alphabet() {
        let mut alpha = Alphabet::new();
        let open = alpha.intern("(");
        let close = alpha.intern(")");
        alpha.intern("stray");
        let mut table = WeightTable::unit(alpha);
        let err = table.set_complement(&[(open, close)]).unwrap_err();
        assert!(matches!(err, WeightError::BadInvolution { problem: "not paired", .. }));
    }
}
