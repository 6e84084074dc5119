//! Labeled parentheses encoded as integers.
//!
//! The opening parenthesis of label `a` is encoded as `2·id(a)` and the
//! closing one as `2·id(a) + 1`, so tokens of distinct labels never
//! collide, the partner of a token is one xor away, and a token sequence
//! round-trips losslessly through [`wed_core::Symbol`] for reuse of the
//! generic sequence machinery (periodicity reduction, period queries).

use wed_core::Symbol;

/// One labeled parenthesis.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Token(u32);

impl Token {
    /// The opening parenthesis of `label`.
    pub fn open(label: Symbol) -> Token {
        debug_assert!(!label.is_epsilon(), "parentheses carry real labels");
        Token(2 * label.id())
    }

    /// The closing parenthesis of `label`.
    pub fn close(label: Symbol) -> Token {
        debug_assert!(!label.is_epsilon(), "parentheses carry real labels");
        Token(2 * label.id() + 1)
    }

    pub fn is_open(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn is_close(self) -> bool {
        self.0 % 2 == 1
    }

    pub fn label(self) -> Symbol {
        Symbol::new(self.0 / 2)
    }

    /// The parenthesis of the same label facing the other way.
    pub fn partner(self) -> Token {
        Token(self.0 ^ 1)
    }

    /// The integer code, usable as a dense array index.
    pub fn code(self) -> u32 {
        self.0
    }

    /// Reinterprets the code as a [`Symbol`] for generic sequence routines.
    pub fn as_symbol(self) -> Symbol {
        Symbol::new(self.0)
    }

    /// Inverse of [`Token::as_symbol`].
    pub fn from_symbol(s: Symbol) -> Token {
        Token(s.id())
    }
}

impl std::fmt::Debug for Token {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_open() {
            write!(f, "({}", self.label().id())
        } else {
            write!(f, "){}", self.label().id())
        }
    }
}

/// Views a token slice as symbols without copying.
///
/// `Token` is a `repr(transparent)`-compatible wrapper around the same
/// integer width as `Symbol`, but the conversion is done by mapping to
/// keep both types free of layout commitments.
pub fn tokens_to_symbols(tokens: &[Token]) -> Vec<Symbol> {
    tokens.iter().map(|t| t.as_symbol()).collect()
}

/// Inverse of [`tokens_to_symbols`].
pub fn symbols_to_tokens(symbols: &[Symbol]) -> Vec<Token> {
    symbols.iter().map(|&s| Token::from_symbol(s)).collect()
}

/// Whether `tokens` is balanced as a standalone sequence: the running
/// height never drops below zero and returns to zero at the end.
///
/// Label agreement between partners is not rechecked here; fragments of a
/// validated forest that pass the height test automatically pair equal
/// labels, because their matched positions are also matched in the host.
pub fn balanced_slice(tokens: &[Token]) -> bool {
    let mut h: i64 = 0;
    for t in tokens {
        if t.is_open() {
            h += 1;
        } else {
            h -= 1;
            if h < 0 {
                return false;
            }
        }
    }
    h == 0
}

/// The smallest label id appearing in `tokens`, if any.
pub fn smallest_label(tokens: &[Token]) -> Option<Symbol> {
    tokens.iter().map(|t| t.label()).min()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partners_and_labels_round_trip() {
        let a = Symbol::new(3);
        let open = Token::open(a);
        let close = Token::close(a);
        assert!(open.is_open());
        assert!(close.is_close());
        assert_eq!(open.partner(), close);
        assert_eq!(close.partner(), open);
        assert_eq!(open.label(), a);
        assert_eq!(close.label(), a);
        assert_eq!(Token::from_symbol(open.as_symbol()), open);
    }

    #[test]
    fn balance_requires_nonnegative_heights_and_zero_end() {
        let a = Symbol::new(1);
        let o = Token::open(a);
        let c = Token::close(a);
        assert!(balanced_slice(&[]));
        assert!(balanced_slice(&[o, c]));
        assert!(balanced_slice(&[o, o, c, c]));
        assert!(!balanced_slice(&[o]));
        assert!(!balanced_slice(&[c, o]));
        assert!(!balanced_slice(&[o, c, c, o]));
    }
}
