//! Interned symbols and alphabets.

use std::collections::HashMap;
use std::fmt;

/// An interned symbol, identified by a 32-bit id.
///
/// Id 0 is [`Symbol::EPSILON`], the empty symbol used on one side of an
/// insertion or deletion cost. ε never appears inside a sequence; real
/// symbols have ids ≥ 1.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Symbol(u32);

impl Symbol {
    pub const EPSILON: Symbol = Symbol(0);

    /// Wraps a raw id. Real symbols have ids ≥ 1; `new(0)` is ε.
    pub const fn new(id: u32) -> Symbol {
        Symbol(id)
    }

    pub const fn id(self) -> u32 {
        self.0
    }

    pub const fn is_epsilon(self) -> bool {
        self.0 == 0
    }

    /// The id as a table index.
    pub const fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_epsilon() {
            write!(f, "ε")
        } else {
            write!(f, "s{}", self.0)
        }
    }
}

/// A bijection between token names and symbol ids `1..=len`.
///
/// Ids are assigned densely in interning order, so the smallest id always
/// belongs to the first token ever interned. ε (id 0) has no name; it is
/// written `-` in weight files.
#[derive(Clone, Debug, Default)]
pub struct Alphabet {
    names: Vec<String>,
    ids: HashMap<String, Symbol>,
}

impl Alphabet {
    pub fn new() -> Alphabet {
        Alphabet::default()
    }

    /// Number of real symbols (ε not counted).
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Returns the id already assigned to `name`, or assigns the next one.
    pub fn intern(&mut self, name: &str) -> Symbol {
        if let Some(&sym) = self.ids.get(name) {
            return sym;
        }
        let sym = Symbol(u32::try_from(self.names.len() + 1).expect("alphabet overflow"));
        self.names.push(name.to_owned());
        self.ids.insert(name.to_owned(), sym);
        sym
    }

    pub fn lookup(&self, name: &str) -> Option<Symbol> {
        self.ids.get(name).copied()
    }

    /// The name of a symbol; ε renders as `-`.
    ///
    /// Panics if the id was never assigned by this alphabet.
    pub fn name(&self, sym: Symbol) -> &str {
        if sym.is_epsilon() {
            return "-";
        }
        self.names
            .get(sym.index() - 1)
            .unwrap_or_else(|| panic!("symbol {:?} not in alphabet of size {}", sym, self.len()))
    }

    /// All real symbols, in id order.
    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (1..=self.names.len() as u32).map(Symbol)
    }

    /// Interns every whitespace-separated token of `text`, in order.
    pub fn intern_tokens(&mut self, text: &str) -> Vec<Symbol> {
        text.split_whitespace().map(|t| self.intern(t)).collect()
    }
}
