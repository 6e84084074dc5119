//! Forests as balanced sequences of labeled parentheses.

use seqkit::RangeMin;
use wed_core::{Alphabet, Symbol};

use crate::token::Token;

/// Construction and parse failures for forests.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ForestError {
    #[error("closing parenthesis at token {pos} has no open partner")]
    UnexpectedClose { pos: usize },
    #[error("closing parenthesis at token {pos} carries label id {close} but closes label id {open}")]
    LabelMismatch { pos: usize, open: u32, close: u32 },
    #[error("opening parenthesis at token {pos} is never closed")]
    Unclosed { pos: usize },
    #[error("expected a label after `(` at byte {at}")]
    MissingLabel { at: usize },
    #[error("label {label:?} at byte {at} is not alphanumeric")]
    BadLabel { at: usize, label: String },
    #[error("unexpected `)` at byte {at}")]
    UnbalancedParen { at: usize },
    #[error("stray token {lexeme:?} at byte {at} outside any tree")]
    StrayToken { at: usize, lexeme: String },
    #[error("unclosed `(` at byte {at}")]
    UnclosedParen { at: usize },
}

/// A forest: a balanced token sequence with its node structure and the
/// height profile indexed for O(1) balanced-fragment queries.
#[derive(Clone)]
pub struct Forest {
    tokens: Vec<Token>,
    /// `match_of[i]` is the position of the partner parenthesis of token i.
    match_of: Vec<usize>,
    /// `height[i]` counts opens minus closes among the first i tokens.
    height: Vec<u32>,
    hmin: RangeMin<u32>,
}

impl Forest {
    /// The empty forest.
    pub fn empty() -> Forest {
        Forest::from_tokens(Vec::new()).unwrap()
    }

    /// Validates balance and label agreement, then indexes the sequence.
    pub fn from_tokens(tokens: Vec<Token>) -> Result<Forest, ForestError> {
        let n = tokens.len();
        let mut match_of = vec![usize::MAX; n];
        let mut height = Vec::with_capacity(n + 1);
        let mut stack: Vec<usize> = Vec::new();
        let mut h: u32 = 0;
        height.push(0);
        for (i, t) in tokens.iter().enumerate() {
            if t.is_open() {
                stack.push(i);
                h += 1;
            } else {
                let Some(open) = stack.pop() else {
                    return Err(ForestError::UnexpectedClose { pos: i });
                };
                if tokens[open].label() != t.label() {
                    return Err(ForestError::LabelMismatch {
                        pos: i,
                        open: tokens[open].label().id(),
                        close: t.label().id(),
                    });
                }
                match_of[open] = i;
                match_of[i] = open;
                h -= 1;
            }
            height.push(h);
        }
        if let Some(&pos) = stack.first() {
            return Err(ForestError::Unclosed { pos });
        }
        let hmin = RangeMin::new(&height);
        Ok(Forest {
            tokens,
            match_of,
            height,
            hmin,
        })
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn token(&self, i: usize) -> Token {
        self.tokens[i]
    }

    /// Position of the partner parenthesis of token i.
    pub fn match_of(&self, i: usize) -> usize {
        self.match_of[i]
    }

    /// Height (opens minus closes) of the length-i prefix.
    pub fn height(&self, i: usize) -> u32 {
        self.height[i]
    }

    /// Whether the fragment `[i..j)` is balanced: the prefix heights at
    /// both ends coincide and no position in between dips below them.
    pub fn is_balanced(&self, i: usize, j: usize) -> bool {
        assert!(i <= j && j <= self.len(), "fragment out of range");
        if i == j {
            return true;
        }
        self.height[i] == self.height[j] && self.hmin.min(i, j) == self.height[i]
    }

    /// Whether the fragment `[i..j)` is a single tree. Only meaningful on
    /// balanced fragments.
    pub fn is_tree(&self, i: usize, j: usize) -> bool {
        i < j && self.tokens[i].is_open() && self.match_of[i] == j - 1
    }

    /// Number of nodes (half the token count).
    pub fn node_count(&self) -> usize {
        self.len() / 2
    }

    /// Nodes in preorder as (label, open position, close position).
    pub fn node_spans(&self) -> Vec<(Symbol, usize, usize)> {
        self.tokens
            .iter()
            .enumerate()
            .filter(|(_, t)| t.is_open())
            .map(|(i, t)| (t.label(), i, self.match_of[i]))
            .collect()
    }

    /// Labels of all nodes, one per node, in preorder.
    pub fn node_labels(&self) -> Vec<Symbol> {
        self.tokens
            .iter()
            .filter(|t| t.is_open())
            .map(|t| t.label())
            .collect()
    }

    /// Owned copy of the fragment `[i..j)`.
    pub fn fragment(&self, i: usize, j: usize) -> Vec<Token> {
        self.tokens[i..j].to_vec()
    }
}

impl std::fmt::Debug for Forest {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.tokens.iter()).finish()
    }
}

impl PartialEq for Forest {
    fn eq(&self, other: &Self) -> bool {
        self.tokens == other.tokens
    }
}

impl Eq for Forest {}

fn label_ok(lexeme: &str) -> bool {
    !lexeme.is_empty() && lexeme.chars().all(|c| c.is_alphanumeric() || c == '_')
}

/// Parses the s-expression forest format: a whitespace-separated sequence
/// of trees, each tree written `(label child*)`. Labels are alphanumeric
/// tokens interned through the shared alphabet.
pub fn parse_forest(text: &str, alphabet: &mut Alphabet) -> Result<Forest, ForestError> {
    let mut tokens: Vec<Token> = Vec::new();
    // Stack of (byte offset of `(`, label) for every open tree.
    let mut stack: Vec<(usize, Symbol)> = Vec::new();
    let bytes = text.as_bytes();
    let mut pos = 0usize;
    while pos < bytes.len() {
        let c = bytes[pos] as char;
        if c.is_whitespace() {
            pos += 1;
        } else if c == '(' {
            let start = pos;
            pos += 1;
            while pos < bytes.len() && (bytes[pos] as char).is_whitespace() {
                pos += 1;
            }
            let lex_start = pos;
            while pos < bytes.len() && !"()".contains(bytes[pos] as char) && !(bytes[pos] as char).is_whitespace() {
                pos += 1;
            }
            if lex_start == pos {
                return Err(ForestError::MissingLabel { at: start });
            }
            let lexeme = &text[lex_start..pos];
            if !label_ok(lexeme) {
                return Err(ForestError::BadLabel {
                    at: lex_start,
                    label: lexeme.to_string(),
                });
            }
            let label = alphabet.intern(lexeme);
            tokens.push(Token::open(label));
            stack.push((start, label));
        } else if c == ')' {
            let Some((_, label)) = stack.pop() else {
                return Err(ForestError::UnbalancedParen { at: pos });
            };
            tokens.push(Token::close(label));
            pos += 1;
        } else {
            let lex_start = pos;
            while pos < bytes.len() && !"()".contains(bytes[pos] as char) && !(bytes[pos] as char).is_whitespace() {
                pos += 1;
            }
            return Err(ForestError::StrayToken {
                at: lex_start,
                lexeme: text[lex_start..pos].to_string(),
            });
        }
    }
    if let Some(&(at, _)) = stack.first() {
        return Err(ForestError::UnclosedParen { at });
    }
    Forest::from_tokens(tokens)
}

/// Renders a forest back into the s-expression format accepted by
/// [`parse_forest`].
pub fn forest_to_text(forest: &Forest, alphabet: &Alphabet) -> String {
    let mut out = String::new();
    for (i, t) in forest.tokens().iter().enumerate() {
        if t.is_open() {
            if i > 0 {
                out.push(' ');
            }
            out.push('(');
            out.push_str(alphabet.name(t.label()));
        } else {
            out.push(')');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_node_parses_to_one_open_close_pair() {
        let mut alpha = Alphabet::default();
        let f = parse_forest("(a)", &mut alpha).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.node_count(), 1);
        let a = alpha.lookup("a").unwrap();
        assert_eq!(f.tokens(), &[Token::open(a), Token::close(a)]);
    }

    #[test]
    fn nested_tree_has_four_tokens_two_nodes() {
        let mut alpha = Alphabet::default();
        let f = parse_forest("(a (b))", &mut alpha).unwrap();
        assert_eq!(f.len(), 4);
        assert_eq!(f.node_count(), 2);
        assert_eq!(f.match_of(0), 3);
        assert_eq!(f.match_of(1), 2);
        assert!(f.is_tree(0, 4));
    }

    #[test]
    fn unclosed_tree_is_an_error() {
        let mut alpha = Alphabet::default();
        assert!(matches!(
            parse_forest("(a", &mut alpha),
            Err(ForestError::UnclosedParen { .. })
        ));
    }

    #[test]
    fn balanced_fragment_query_follows_the_height_profile() {
        let mut alpha = Alphabet::default();
        // (a)(b): positions 0,2 open; 1,3 close.
        let f = parse_forest("(a) (b)", &mut alpha).unwrap();
        assert!(f.is_balanced(0, 2));
        assert!(f.is_balanced(0, 4));
        assert!(f.is_balanced(2, 4));
        assert!(!f.is_balanced(1, 3));
        assert!(f.is_balanced(2, 2));
        assert!(!f.is_tree(0, 4));
        assert!(f.is_tree(0, 2));
    }

    #[test]
    fn text_round_trip_preserves_tokens() {
        let mut alpha = Alphabet::default();
        let f = parse_forest("(a (b) (c (d))) (e)", &mut alpha).unwrap();
        let text = forest_to_text(&f, &alpha);
        let g = parse_forest(&text, &mut alpha).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn label_mismatch_across_partners_is_rejected() {
        let a = Symbol::new(1);
        let b = Symbol::new(2);
        let err = Forest::from_tokens(vec![Token::open(a), Token::close(b)]).unwrap_err();
        assert!(matches!(err, ForestError::LabelMismatch { pos: 1, .. }));
    }
}
