//! Piece analysis of a presentation: the `X·Y·Z` decomposition of every
//! relation word, the C(4) decision, and the greatest `n` with C(n).

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::presentation::Presentation;
use crate::suffix_tree::GeneralizedSuffixTree;
use crate::word::{Symbol, Word};

/// Default cap on `N` for the quadratic [`all_pieces`].
pub const ALL_PIECES_CAP: usize = 10_000;

/// Greatest `n` such that a presentation satisfies C(n).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CIndex {
    Finite(usize),
    /// No relation word is a product of pieces.
    Unbounded,
}

impl CIndex {
    /// Whether C(n) holds.
    pub fn satisfies(self, n: usize) -> bool {
        match self {
            CIndex::Finite(k) => n <= k,
            CIndex::Unbounded => true,
        }
    }
}

impl fmt::Display for CIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CIndex::Finite(n) => write!(f, "{n}"),
            CIndex::Unbounded => f.write_str("unbounded"),
        }
    }
}

impl Serialize for CIndex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            CIndex::Finite(n) => s.serialize_u64(*n as u64),
            CIndex::Unbounded => s.serialize_str("unbounded"),
        }
    }
}

/// `u_r = X_r·Y_r·Z_r` for every distinct relation word `u_r`.
///
/// Lengths are reported raw: when `|X_r| + |Z_r| ≥ |u_r|` the maximal piece
/// prefix and suffix overlap, `Y_r` is reported empty and the presentation
/// is not C(4).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PieceDecomposition {
    words: Vec<Word>,
    x_len: Vec<usize>,
    z_len: Vec<usize>,
}

impl PieceDecomposition {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn word(&self, r: usize) -> &[Symbol] {
        &self.words[r]
    }

    pub fn x_len(&self, r: usize) -> usize {
        self.x_len[r]
    }

    pub fn z_len(&self, r: usize) -> usize {
        self.z_len[r]
    }

    pub fn x(&self, r: usize) -> &[Symbol] {
        &self.words[r][..self.x_len[r]]
    }

    pub fn y(&self, r: usize) -> &[Symbol] {
        let w = &self.words[r];
        let end = w.len().saturating_sub(self.z_len[r]).max(self.x_len[r]);
        &w[self.x_len[r]..end]
    }

    pub fn z(&self, r: usize) -> &[Symbol] {
        let w = &self.words[r];
        &w[w.len() - self.z_len[r]..]
    }

    /// `X_r·Y_r`, the part of `u_r` a relation prefix ends with.
    pub fn xy(&self, r: usize) -> &[Symbol] {
        let w = &self.words[r];
        &w[..w.len().saturating_sub(self.z_len[r]).max(self.x_len[r])]
    }

    /// `Y_r·Z_r`.
    pub fn yz(&self, r: usize) -> &[Symbol] {
        &self.words[r][self.x_len[r]..]
    }
}

/// The suffix tree over the distinct relation words together with the
/// decomposition read off it. Building it is linear in `N`.
#[derive(Debug, Clone)]
pub struct PieceAnalysis {
    tree: GeneralizedSuffixTree,
    decomposition: PieceDecomposition,
}

impl PieceAnalysis {
    pub fn new(p: &Presentation) -> Result<Self> {
        if let Some(index) = p.relation_words().iter().position(|w| w.is_empty()) {
            return Err(Error::EmptyRelationWord { index });
        }
        if p.relation_words().is_empty() {
            // No relation words: nothing is a piece and every C(n) holds.
            let tree = GeneralizedSuffixTree::new(&[[0]]);
            let decomposition = PieceDecomposition {
                words: vec![],
                x_len: vec![],
                z_len: vec![],
            };
            return Ok(PieceAnalysis {
                tree,
                decomposition,
            });
        }
        let tree = GeneralizedSuffixTree::new(p.relation_words());
        let decomposition = PieceDecomposition {
            words: p.relation_words().to_vec(),
            x_len: tree.maximal_piece_prefixes(),
            z_len: tree.maximal_piece_suffixes(),
        };
        Ok(PieceAnalysis {
            tree,
            decomposition,
        })
    }

    pub fn tree(&self) -> &GeneralizedSuffixTree {
        &self.tree
    }

    pub fn decomposition(&self) -> &PieceDecomposition {
        &self.decomposition
    }

    pub fn longest_piece_prefix(&self, w: &[Symbol]) -> usize {
        if self.decomposition.is_empty() {
            return 0;
        }
        self.tree.longest_piece_prefix_of(w, None)
    }

    pub fn is_piece(&self, w: &[Symbol]) -> bool {
        self.longest_piece_prefix(w) == w.len()
    }

    /// Whether `Y_r` is a piece, read off the parent of leaf `(r, |X_r|)`.
    pub fn middle_is_piece(&self, r: usize) -> bool {
        let d = &self.decomposition;
        let y = d.y(r);
        self.tree.longest_piece_prefix_of(y, Some((r, d.x_len(r)))) == y.len()
    }

    /// C(4) holds iff every relation word has `|X_r| + |Z_r| < |u_r|` and a
    /// middle word that is not a piece.
    pub fn is_c4(&self) -> bool {
        let d = &self.decomposition;
        (0..d.len()).all(|r| d.x_len(r) + d.z_len(r) < d.word(r).len() && !self.middle_is_piece(r))
    }

    /// Fewest pieces whose product is `u_r`, or `None` if `u_r` is not a
    /// product of pieces. Greedy: strip the longest piece prefix each time.
    pub fn piece_factorization_len(&self, r: usize) -> Option<usize> {
        let len = self.decomposition.word(r).len();
        let mut i = 0;
        let mut count = 0;
        while i < len {
            let step = self
                .tree
                .longest_piece_prefix_of(&self.decomposition.word(r)[i..], Some((r, i)));
            if step == 0 {
                return None;
            }
            i += step;
            count += 1;
        }
        Some(count)
    }

    pub fn c_index(&self) -> CIndex {
        (0..self.decomposition.len())
            .filter_map(|r| self.piece_factorization_len(r))
            .min()
            .map_or(CIndex::Unbounded, CIndex::Finite)
    }
}

pub fn decompose(p: &Presentation) -> Result<PieceDecomposition> {
    Ok(PieceAnalysis::new(p)?.decomposition)
}

pub fn is_c4(p: &Presentation) -> Result<bool> {
    Ok(PieceAnalysis::new(p)?.is_c4())
}

pub fn c_index(p: &Presentation) -> Result<CIndex> {
    Ok(PieceAnalysis::new(p)?.c_index())
}

/// Every piece, ε included, by enumerating all factors of all distinct
/// relation words and counting occurrences. Quadratic in `N`, so it
/// refuses presentations with `N > cap`.
pub fn all_pieces(p: &Presentation, cap: usize) -> Result<BTreeSet<Word>> {
    if p.total_length() > cap {
        return Err(Error::CapExceeded {
            total: p.total_length(),
            cap,
        });
    }
    let mut count: HashMap<&[Symbol], usize> = HashMap::new();
    for w in p.relation_words() {
        for i in 0..w.len() {
            for j in i + 1..=w.len() {
                *count.entry(&w[i..j]).or_default() += 1;
            }
        }
    }
    let mut pieces: BTreeSet<Word> = count
        .into_iter()
        .filter(|&(_, c)| c >= 2)
        .map(|(f, _)| Word::from(f))
        .collect();
    pieces.insert(Word::empty());
    Ok(pieces)
}

/// Full piece analysis of a presentation.
#[derive(Debug, Clone)]
pub struct SmallOverlapReport {
    pub c_index: CIndex,
    pub is_c4: bool,
    pub decomposition: PieceDecomposition,
    /// Minimal piece factorization length of each relation word.
    pub factorization_lens: Vec<Option<usize>>,
    pub tree_nodes: usize,
    pub tree_leaves: usize,
}

pub fn analyze(p: &Presentation) -> Result<SmallOverlapReport> {
    let a = PieceAnalysis::new(p)?;
    Ok(SmallOverlapReport {
        c_index: a.c_index(),
        is_c4: a.is_c4(),
        factorization_lens: (0..a.decomposition.len())
            .map(|r| a.piece_factorization_len(r))
            .collect(),
        tree_nodes: if a.decomposition.is_empty() {
            0
        } else {
            a.tree.node_count()
        },
        tree_leaves: if a.decomposition.is_empty() {
            0
        } else {
            a.tree.leaf_count()
        },
        decomposition: a.decomposition,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(text: &str) -> Presentation {
        Presentation::parse(text).unwrap()
    }

    fn xyz(p: &Presentation) -> Vec<(String, String, String)> {
        let d = decompose(p).unwrap();
        (0..d.len())
            .map(|r| (p.render(d.x(r)), p.render(d.y(r)), p.render(d.z(r))))
            .collect()
    }

    fn t(x: &str, y: &str, z: &str) -> (String, String, String) {
        (x.into(), y.into(), z.into())
    }

    #[test]
    fn decomposition_of_two_class_presentation() {
        let p = pres("alphabet: a b c d\nrule: aabc = acba\nrule: adca = bddb");
        assert_eq!(
            xyz(&p),
            vec![
                t("a", "ab", "c"),
                t("a", "cb", "a"),
                t("a", "dc", "a"),
                t("b", "dd", "b")
            ]
        );
        assert!(is_c4(&p).unwrap());
    }

    #[test]
    fn decomposition_with_long_pieces() {
        let p = pres("alphabet: a b c d\nrule: abbba = cdc");
        assert_eq!(xyz(&p), vec![t("a", "bbb", "a"), t("c", "d", "c")]);
        let p = pres("alphabet: a b c d e\nrule: aaeaaa = abcd");
        assert_eq!(xyz(&p), vec![t("aa", "ea", "aa"), t("a", "bcd", "_")]);
        assert!(is_c4(&p).unwrap());
    }

    #[test]
    fn c4_decisions() {
        assert!(!is_c4(&pres("alphabet: a b c\nrule: abc = cba")).unwrap());
        assert!(is_c4(&pres("alphabet: a b c\nrule: acba = aabc")).unwrap());
    }

    #[test]
    fn c_index_values() {
        assert_eq!(
            c_index(&pres("alphabet: a b c\nrule: abc = cba")).unwrap(),
            CIndex::Finite(3)
        );
        assert_eq!(
            c_index(&pres("alphabet: a b c\nrule: acba = aabc")).unwrap(),
            CIndex::Finite(4)
        );
        assert_eq!(
            c_index(&pres(
                "alphabet: a b c d\nrule: acba = aabc\nrule: acba = dbbbd"
            ))
            .unwrap(),
            CIndex::Finite(4)
        );
        assert_eq!(
            c_index(&pres("alphabet: a b c d\nrule: aabc = aabd")).unwrap(),
            CIndex::Unbounded
        );
    }

    #[test]
    fn relation_word_inside_another_is_one_piece() {
        let p = pres("alphabet: a b c\nrule: ab = abc");
        assert_eq!(c_index(&p).unwrap(), CIndex::Finite(1));
        assert!(!is_c4(&p).unwrap());
    }

    #[test]
    fn piece_sets() {
        let render = |p: &Presentation| -> Vec<String> {
            all_pieces(p, ALL_PIECES_CAP)
                .unwrap()
                .iter()
                .map(|w| p.render(w))
                .collect()
        };
        assert_eq!(
            render(&pres("alphabet: a b c\nrule: abc = cba")),
            ["_", "a", "b", "c"]
        );
        assert_eq!(
            render(&pres(
                "alphabet: a b c d\nrule: acba = aabc\nrule: acba = dbbbd"
            )),
            ["_", "a", "b", "bb", "c", "d"]
        );
        assert_eq!(
            render(&pres("alphabet: a b c d\nrule: aabc = aabd")),
            ["_", "a", "aa", "aab", "ab", "b"]
        );
    }

    #[test]
    fn all_pieces_respects_cap() {
        let p = pres("alphabet: a b c\nrule: abc = cba");
        assert_eq!(
            all_pieces(&p, 5),
            Err(Error::CapExceeded { total: 6, cap: 5 })
        );
    }

    #[test]
    fn empty_relation_word_is_rejected() {
        let p = pres("alphabet: a b\nrule: ab = _");
        assert_eq!(
            c_index(&p).unwrap_err(),
            Error::EmptyRelationWord { index: 1 }
        );
        assert!(is_c4(&p).is_err());
        assert!(decompose(&p).is_err());
    }

    #[test]
    fn no_relations_is_unbounded() {
        let p = pres("alphabet: a b");
        assert_eq!(c_index(&p).unwrap(), CIndex::Unbounded);
        assert!(is_c4(&p).unwrap());
    }

    #[test]
    fn c_index_ordering() {
        assert!(CIndex::Finite(100) < CIndex::Unbounded);
        assert!(CIndex::Finite(4).satisfies(4));
        assert!(!CIndex::Finite(3).satisfies(4));
        assert!(CIndex::Unbounded.satisfies(1000));
    }
}
