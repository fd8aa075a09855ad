//! Alphabets, words and the lexicographic order on words.

use std::borrow::Borrow;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::Deref;

/// Position of a letter in its [`Alphabet`]; `a₁ < a₂ < …` is rank order.
pub type Symbol = u32;

/// A word over an alphabet, stored as letter ranks. The empty word is ε.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn as_slice(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Symbol> {
        self.0
    }

    pub fn concat(parts: &[&[Symbol]]) -> Self {
        let mut v = Vec::with_capacity(parts.iter().map(|p| p.len()).sum());
        for p in parts {
            v.extend_from_slice(p);
        }
        Word(v)
    }
}

impl Deref for Word {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl Borrow<[Symbol]> for Word {
    fn borrow(&self) -> &[Symbol] {
        &self.0
    }
}

impl AsRef<[Symbol]> for Word {
    fn as_ref(&self) -> &[Symbol] {
        &self.0
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(v: Vec<Symbol>) -> Self {
        Word(v)
    }
}

impl From<&[Symbol]> for Word {
    fn from(v: &[Symbol]) -> Self {
        Word(v.to_vec())
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// Lexicographic order: ε is least; otherwise compare leading letters and
/// recurse on the tails when they agree.
///
/// A proper prefix therefore sorts before any of its extensions. This is the
/// same order as `Ord` on `[Symbol]`, which the rest of the crate relies on.
pub fn lex_compare(u: &[Symbol], v: &[Symbol]) -> Ordering {
    let (mut u, mut v) = (u, v);
    loop {
        match (u.split_first(), v.split_first()) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some((a, ut)), Some((b, vt))) => match a.cmp(b) {
                Ordering::Equal => {
                    u = ut;
                    v = vt;
                }
                o => return o,
            },
        }
    }
}

/// Glyph that stands for ε in files and on the command line.
pub const EMPTY_WORD_GLYPH: char = '_';

/// An ordered set of single-glyph letters. Listing order is the total order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    letters: Vec<char>,
    rank: HashMap<char, Symbol>,
}

impl Alphabet {
    /// Returns `Err(c)` with the first repeated letter.
    pub fn new(letters: Vec<char>) -> Result<Self, char> {
        let mut rank = HashMap::with_capacity(letters.len());
        for (i, &c) in letters.iter().enumerate() {
            if rank.insert(c, i as Symbol).is_some() {
                return Err(c);
            }
        }
        Ok(Alphabet { letters, rank })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn rank(&self, c: char) -> Option<Symbol> {
        self.rank.get(&c).copied()
    }

    pub fn letter(&self, s: Symbol) -> Option<char> {
        self.letters.get(s as usize).copied()
    }

    /// Parses a glyph concatenation; `_` alone is ε. Returns the first
    /// glyph that is not a letter on failure.
    pub fn parse_word(&self, text: &str) -> Result<Word, char> {
        if text == EMPTY_WORD_GLYPH.to_string() {
            return Ok(Word::empty());
        }
        text.chars()
            .map(|c| self.rank(c).ok_or(c))
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }

    /// Renders a word, using `_` for ε.
    pub fn render(&self, w: &[Symbol]) -> String {
        if w.is_empty() {
            return EMPTY_WORD_GLYPH.to_string();
        }
        w.iter().map(|&s| self.letters[s as usize]).collect()
    }

    pub fn display<'a>(&'a self, w: &'a [Symbol]) -> impl fmt::Display + 'a {
        struct D<'a>(&'a Alphabet, &'a [Symbol]);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0.render(self.1))
            }
        }
        D(self, w)
    }
}
