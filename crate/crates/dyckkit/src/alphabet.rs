//! Bracket alphabets: a set of opening symbols, a set of closing symbols,
//! and the involution pairing them.

use wed_core::{Alphabet, Symbol, WeightTable};

/// Errors raised while building a [`DyckAlphabet`].
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum BracketError {
    /// A line in an alphabet file was not `OPEN<TAB>CLOSE`.
    #[error("line {line}: expected `OPEN<TAB>CLOSE`")]
    Malformed { line: usize },
    /// A symbol appeared in more than one bracket pair, or paired with itself.
    #[error("symbol {name:?} cannot belong to two bracket pairs")]
    Reused { name: String },
    /// A symbol of the backing alphabet belongs to no bracket pair.
    #[error("symbol {name:?} is neither an opening nor a closing bracket")]
    Unpaired { name: String },
    /// The weight table carries no complement involution.
    #[error("the weight table has no bracket involution installed")]
    MissingComplement,
}

/// A bracket alphabet: disjoint opening and closing symbol sets tied by a
/// complement involution, extended by `complement(epsilon) = epsilon`.
///
/// The involution must cover the backing alphabet exactly, so every interned
/// symbol is either an opening or a closing bracket. Lookups of symbols
/// outside the backing alphabet panic; they indicate interning mix-ups, not
/// recoverable input errors.
#[derive(Clone, Debug)]
pub struct DyckAlphabet {
    alphabet: Alphabet,
    /// Complement symbol per id, index 0 reserved for epsilon.
    complement: Vec<Symbol>,
    /// True per id for opening brackets; epsilon and closers are false.
    opening: Vec<bool>,
    /// Pairs in first-seen order, each `(open, close)`.
    pairs: Vec<(Symbol, Symbol)>,
}

impl DyckAlphabet {
    /// Builds an alphabet from explicit `(open, close)` pairs covering
    /// `alphabet`.
    pub fn from_pairs(
        alphabet: Alphabet,
        pairs: &[(Symbol, Symbol)],
    ) -> Result<DyckAlphabet, BracketError> {
        let side = alphabet.len() + 1;
        let mut complement = vec![Symbol::EPSILON; side];
        let mut opening = vec![false; side];
        let mut seen = vec![false; side];
        for &(open, close) in pairs {
            assert!(
                open.index() < side && close.index() < side,
                "bracket pair outside the backing alphabet"
            );
            for s in [open, close] {
                if s.is_epsilon() || seen[s.index()] {
                    return Err(BracketError::Reused { name: alphabet.name(s).to_string() });
                }
                seen[s.index()] = true;
            }
            complement[open.index()] = close;
            complement[close.index()] = open;
            opening[open.index()] = true;
        }
        if let Some(idx) = (1..side).find(|&idx| !seen[idx]) {
            let name = alphabet.name(Symbol::new(idx as u32)).to_string();
            return Err(BracketError::Unpaired { name });
        }
        Ok(DyckAlphabet {
            alphabet,
            complement,
            opening,
            pairs: pairs.to_vec(),
        })
    }

    /// Parses an alphabet file of `OPEN<TAB>CLOSE` lines, interning new
    /// symbols into `alphabet` (opener first per line). Blank lines and
    /// lines starting with `#` are skipped.
    pub fn parse(text: &str, alphabet: &mut Alphabet) -> Result<DyckAlphabet, BracketError> {
        let mut pairs = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split('\t');
            let (Some(open), Some(close), None) = (fields.next(), fields.next(), fields.next())
            else {
                return Err(BracketError::Malformed { line: idx + 1 });
            };
            let (open, close) = (open.trim(), close.trim());
            if open.is_empty() || close.is_empty() {
                return Err(BracketError::Malformed { line: idx + 1 });
            }
            let open = alphabet.intern(open);
            let close = alphabet.intern(close);
            pairs.push((open, close));
        }
        DyckAlphabet::from_pairs(alphabet.clone(), &pairs)
    }

    /// Recovers the bracket structure carried by a skewmetric weight table.
    pub fn from_weight_table(w: &WeightTable) -> Result<DyckAlphabet, BracketError> {
        if !w.has_complement() {
            return Err(BracketError::MissingComplement);
        }
        let pairs: Vec<(Symbol, Symbol)> = w
            .alphabet()
            .symbols()
            .filter(|&s| s.id() < w.complement_of(s).id())
            .map(|s| (s, w.complement_of(s)))
            .collect();
        DyckAlphabet::from_pairs(w.alphabet().clone(), &pairs)
    }

    /// The backing symbol alphabet.
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Bracket pairs in first-seen order.
    pub fn pairs(&self) -> &[(Symbol, Symbol)] {
        &self.pairs
    }

    /// True when `s` is an opening bracket.
    pub fn is_opening(&self, s: Symbol) -> bool {
        self.opening[s.index()]
    }

    /// True when `s` is a closing bracket.
    pub fn is_closing(&self, s: Symbol) -> bool {
        !s.is_epsilon() && !self.opening[s.index()]
    }

    /// The complement of `s` under the involution; epsilon maps to itself.
    pub fn complement(&self, s: Symbol) -> Symbol {
        self.complement[s.index()]
    }

    /// `+1` for opening brackets, `-1` for closing ones.
    pub fn height(&self, s: Symbol) -> i64 {
        if self.is_opening(s) {
            1
        } else {
            assert!(!s.is_epsilon(), "epsilon has no height");
            -1
        }
    }

    /// Reverses `s` and complements every symbol.
    pub fn reverse_complement(&self, s: &[Symbol]) -> Vec<Symbol> {
        s.iter().rev().map(|&c| self.complement(c)).collect()
    }

    /// The opening bracket with the smallest id, if any pair exists.
    pub fn smallest_opening(&self) -> Option<Symbol> {
        self.pairs.iter().map(|&(open, _)| open).min()
    }

    /// A unit-cost weight table over this alphabet with the involution
    /// installed: the discrete metric, which is skewmetric.
    pub fn unit_table(&self) -> WeightTable {
        let mut table = WeightTable::unit(self.alphabet.clone());
        table
            .set_complement(&self.pairs)
            .expect("bracket pairs cover the alphabet");
        table
    }
}
