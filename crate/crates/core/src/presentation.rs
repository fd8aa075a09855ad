//! Monoid presentations, their text format, and complement classes.
//!
//! ```text
//! # comments and blank lines are ignored
//! alphabet: a b c d
//! rule: abbba = cdc
//! ```
//!
//! The listing order of the alphabet is the total order on letters. The
//! glyph `_` stands for the empty word and is never a letter.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;
use crate::word::{lex_compare, Alphabet, Symbol, Word, EMPTY_WORD_GLYPH};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    alphabet: Alphabet,
    relations: Vec<(Word, Word)>,
    relation_words: Vec<Word>,
    /// `(lhs id, rhs id)` into `relation_words` for every relation.
    relation_ids: Vec<(usize, usize)>,
    delta: usize,
    total_length: usize,
}

impl Presentation {
    /// Relation sides are deduplicated into `relation_words` in order of
    /// first appearance; `relations` is kept verbatim.
    pub fn new(alphabet: Alphabet, relations: Vec<(Word, Word)>) -> Self {
        let mut relation_words: Vec<Word> = Vec::new();
        let mut index: HashMap<Word, usize> = HashMap::new();
        let mut id_of = |w: &Word, words: &mut Vec<Word>| -> usize {
            *index.entry(w.clone()).or_insert_with(|| {
                words.push(w.clone());
                words.len() - 1
            })
        };
        let relation_ids = relations
            .iter()
            .map(|(l, r)| {
                let li = id_of(l, &mut relation_words);
                let ri = id_of(r, &mut relation_words);
                (li, ri)
            })
            .collect();
        let delta = relation_words.iter().map(|w| w.len()).max().unwrap_or(0);
        let total_length = relation_words.iter().map(|w| w.len()).sum();
        Presentation {
            alphabet,
            relations,
            relation_words,
            relation_ids,
            delta,
            total_length,
        }
    }

    /// Parses the presentation text format; see the module docs.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut alphabet: Option<Alphabet> = None;
        let mut relations = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let malformed = |message: &str| ParseError::Malformed {
                line: line_no,
                message: message.to_string(),
            };
            let (key, rest) = line
                .split_once(':')
                .ok_or_else(|| malformed("expected `alphabet:` or `rule:`"))?;
            match (key.trim(), alphabet.as_ref()) {
                ("alphabet", None) => {
                    let mut letters = Vec::new();
                    for glyph in rest.split_whitespace() {
                        let mut chars = glyph.chars();
                        let c = chars
                            .next()
                            .expect("split_whitespace yields non-empty tokens");
                        if chars.next().is_some() {
                            return Err(malformed(&format!(
                                "alphabet symbol `{glyph}` is not a single glyph"
                            )));
                        }
                        if matches!(c, '#' | '=' | EMPTY_WORD_GLYPH) || is_combining(c) {
                            return Err(ParseError::ReservedSymbol {
                                line: line_no,
                                symbol: c,
                            });
                        }
                        letters.push(c);
                    }
                    alphabet = Some(Alphabet::new(letters).map_err(|symbol| {
                        ParseError::DuplicateSymbol {
                            line: line_no,
                            symbol,
                        }
                    })?);
                }
                ("alphabet", Some(_)) => return Err(malformed("second `alphabet:` line")),
                ("rule", None) => return Err(malformed("`rule:` before `alphabet:`")),
                ("rule", Some(a)) => {
                    let (lhs, rhs) = rest
                        .split_once('=')
                        .ok_or_else(|| malformed("rule needs `lhs = rhs`"))?;
                    let side = |s: &str| -> Result<Word, ParseError> {
                        let s = s.trim();
                        if s.is_empty() {
                            return Err(malformed(
                                "empty rule side (write `_` for the empty word)",
                            ));
                        }
                        a.parse_word(s).map_err(|symbol| ParseError::UnknownSymbol {
                            line: line_no,
                            symbol,
                        })
                    };
                    relations.push((side(lhs)?, side(rhs)?));
                }
                (other, _) => return Err(malformed(&format!("unknown directive `{other}`"))),
            }
        }
        let alphabet = alphabet.ok_or(ParseError::MissingAlphabet)?;
        Ok(Presentation::new(alphabet, relations))
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn relations(&self) -> &[(Word, Word)] {
        &self.relations
    }

    /// The distinct relation words u₁…u_M.
    pub fn relation_words(&self) -> &[Word] {
        &self.relation_words
    }

    pub fn relation_ids(&self) -> &[(usize, usize)] {
        &self.relation_ids
    }

    /// δ, the length of the longest relation word.
    pub fn delta(&self) -> usize {
        self.delta
    }

    /// N, the summed length of the distinct relation words.
    pub fn total_length(&self) -> usize {
        self.total_length
    }

    pub fn word(&self, text: &str) -> Result<Word, char> {
        self.alphabet.parse_word(text)
    }

    pub fn render(&self, w: &[Symbol]) -> String {
        self.alphabet.render(w)
    }

    pub fn complement_classes(&self) -> ComplementClasses {
        ComplementClasses::new(self)
    }
}

impl FromStr for Presentation {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Presentation::parse(s)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alphabet:")?;
        for c in self.alphabet.letters() {
            write!(f, " {c}")?;
        }
        writeln!(f)?;
        for (l, r) in &self.relations {
            writeln!(
                f,
                "rule: {} = {}",
                self.alphabet.display(l),
                self.alphabet.display(r)
            )?;
        }
        Ok(())
    }
}

// Combining marks would make one visible glyph span two scalar values.
fn is_combining(c: char) -> bool {
    matches!(c as u32,
        0x0300..=0x036F | 0x0483..=0x0489 | 0x0591..=0x05BD | 0x1AB0..=0x1AFF |
        0x1DC0..=0x1DFF | 0x20D0..=0x20FF | 0xFE00..=0xFE0F | 0xFE20..=0xFE2F)
}

/// Partition of the distinct relation words into complement classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementClasses {
    class_of: Vec<usize>,
    /// Members of each class, sorted lexicographically by word.
    members: Vec<Vec<usize>>,
}

impl ComplementClasses {
    pub fn new(p: &Presentation) -> Self {
        let n = p.relation_words.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(l, r) in &p.relation_ids {
            let (a, b) = (find(&mut parent, l), find(&mut parent, r));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut class_of = vec![usize::MAX; n];
        let mut members: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            let root = find(&mut parent, i);
            if class_of[root] == usize::MAX {
                class_of[root] = members.len();
                members.push(Vec::new());
            }
            class_of[i] = class_of[root];
            members[class_of[i]].push(i);
        }
        for m in &mut members {
            m.sort_by(|&a, &b| lex_compare(&p.relation_words[a], &p.relation_words[b]));
        }
        ComplementClasses { class_of, members }
    }

    pub fn class_of(&self, word_id: usize) -> usize {
        self.class_of[word_id]
    }

    pub fn members(&self, class: usize) -> &[usize] {
        &self.members[class]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.members
    }

    /// All complements of `word_id` (itself included), lexicographically sorted.
    pub fn complements(&self, word_id: usize) -> &[usize] {
        &self.members[self.class_of[word_id]]
    }

    /// Complements other than `word_id`, lexicographically sorted.
    pub fn proper_complements(&self, word_id: usize) -> impl Iterator<Item = usize> + '_ {
        self.complements(word_id)
            .iter()
            .copied()
            .filter(move |&c| c != word_id)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_single_relation() {
        let p = Presentation::parse("alphabet: a b c\nrule: abc = cba").unwrap();
        assert_eq!(p.alphabet().len(), 3);
        assert_eq!(p.relations().len(), 1);
        assert_eq!(p.delta(), 3);
        assert_eq!(p.total_length(), 6);
    }

    #[test]
    fn shared_side_is_deduplicated() {
        let p = Presentation::parse("alphabet: a b c d\nrule: acba = aabc\nrule: acba = dbbbd")
            .unwrap();
        assert_eq!(p.delta(), 5);
        assert_eq!(p.total_length(), 13);
        let words: Vec<String> = p.relation_words().iter().map(|w| p.render(w)).collect();
        assert_eq!(words, ["acba", "aabc", "dbbbd"]);
        assert_eq!(p.relation_ids(), &[(0, 1), (0, 2)]);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            Presentation::parse("alphabet: a a"),
            Err(ParseError::DuplicateSymbol {
                line: 1,
                symbol: 'a'
            })
        );
        assert_eq!(
            Presentation::parse("alphabet: a b\nrule: ab = ac"),
            Err(ParseError::UnknownSymbol {
                line: 2,
                symbol: 'c'
            })
        );
        assert!(matches!(
            Presentation::parse("alphabet: a _"),
            Err(ParseError::ReservedSymbol { .. })
        ));
        assert!(matches!(
            Presentation::parse("alphabet: ab"),
            Err(ParseError::Malformed { .. })
        ));
        assert!(matches!(
            Presentation::parse("rule: a = b"),
            Err(ParseError::Malformed { .. })
        ));
        assert!(matches!(
            Presentation::parse("alphabet: a\nrule: a"),
            Err(ParseError::Malformed { .. })
        ));
        assert!(matches!(
            Presentation::parse("alphabet: a\nrule: a ="),
            Err(ParseError::Malformed { .. })
        ));
        assert_eq!(
            Presentation::parse("# nothing\n"),
            Err(ParseError::MissingAlphabet)
        );
        assert!(matches!(
            Presentation::parse("alphabet: e \u{301}"),
            Err(ParseError::ReservedSymbol { .. })
        ));
    }

    #[test]
    fn empty_side_is_accepted_by_parser() {
        let p = Presentation::parse("# c\n\nalphabet: a b\nrule: ab = _\n").unwrap();
        assert_eq!(p.relations()[0].1, Word::empty());
    }

    #[test]
    fn display_round_trips() {
        let text = "alphabet: d c b a\nrule: acba = aabc\nrule: acba = dbbd\nrule: a = _\n";
        let p = Presentation::parse(text).unwrap();
        assert_eq!(p.to_string(), text);
        assert_eq!(Presentation::parse(&p.to_string()).unwrap(), p);
    }

    fn class_words(p: &Presentation) -> Vec<Vec<String>> {
        let c = p.complement_classes();
        c.classes()
            .iter()
            .map(|m| {
                m.iter()
                    .map(|&i| p.render(&p.relation_words()[i]))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn complement_classes_follow_chains() {
        let p = Presentation::parse("alphabet: a b c d\nrule: acba = aabc\nrule: acba = dbbbd")
            .unwrap();
        assert_eq!(class_words(&p), vec![vec!["aabc", "acba", "dbbbd"]]);

        let p =
            Presentation::parse("alphabet: a b c d\nrule: aabc = acba\nrule: adca = bddb").unwrap();
        assert_eq!(
            class_words(&p),
            vec![vec!["aabc", "acba"], vec!["adca", "bddb"]]
        );

        let p = Presentation::parse("alphabet: a b\nrule: ab = ab").unwrap();
        assert_eq!(class_words(&p), vec![vec!["ab"]]);
        assert_eq!(p.complement_classes().proper_complements(0).count(), 0);
    }
}
