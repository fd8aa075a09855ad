//! Scans for relation prefixes, clean overlap prefixes and `p`-activity.
//!
//! A relation prefix of `w` is a prefix `a·X_r·Y_r`. All scans run a single
//! multi-pattern matcher over the words `X_r·Y_r`, built once per
//! presentation.

use crate::error::{Error, Result};
use crate::matcher::{Match, Matcher};
use crate::overlap::{PieceAnalysis, PieceDecomposition};
use crate::presentation::Presentation;
use crate::word::Symbol;

/// An occurrence of `X_r·Y_r` in a scanned word, making `w[..end]` a
/// relation prefix with leading factor `w[..a_len]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RelationPrefixHit {
    pub a_len: usize,
    pub word_id: usize,
    pub end: usize,
}

/// A clean overlap prefix `b·X₁Y₁′·X₂Y₂′⋯X_nY_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CleanOverlapPrefix {
    /// The final `X_n·Y_n`; `hit.a_len` covers everything before it.
    pub hit: RelationPrefixHit,
    /// `(word_id, |Y_i′|)` for each abandoned `X_iY_i′`, in order.
    pub chain: Vec<(usize, usize)>,
}

#[derive(Debug, Clone)]
pub struct Scanner {
    analysis: PieceAnalysis,
    matcher: Matcher,
    delta: usize,
}

impl Scanner {
    pub fn new(p: &Presentation) -> Result<Self> {
        Ok(Self::from_analysis(PieceAnalysis::new(p)?, p.delta()))
    }

    pub fn from_analysis(analysis: PieceAnalysis, delta: usize) -> Self {
        let d = analysis.decomposition();
        let patterns: Vec<&[Symbol]> = (0..d.len()).map(|r| d.xy(r)).collect();
        let matcher = Matcher::new(&patterns);
        Scanner {
            analysis,
            matcher,
            delta,
        }
    }

    pub fn analysis(&self) -> &PieceAnalysis {
        &self.analysis
    }

    pub fn decomposition(&self) -> &PieceDecomposition {
        self.analysis.decomposition()
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    fn hit(m: Match) -> RelationPrefixHit {
        RelationPrefixHit {
            a_len: m.start,
            word_id: m.pattern,
            end: m.end,
        }
    }

    /// The relation prefix of `w` with the smallest end, looking only at
    /// `w[..window]` when a window is given.
    pub fn shortest_relation_prefix(
        &self,
        w: &[Symbol],
        window: Option<usize>,
    ) -> Option<RelationPrefixHit> {
        let w = &w[..window.map_or(w.len(), |n| n.min(w.len()))];
        self.matcher.find_iter(w).next().map(Self::hit)
    }

    /// Starting from the shortest relation prefix `a·X·Y`, repeatedly moves to
    /// the earliest `X₀·Y₀` that starts strictly inside `Y` (a proper
    /// non-empty `Y′` before it) until no such occurrence exists.
    ///
    /// `None` exactly when `w` has no relation prefix, i.e. contains no
    /// relation word.
    pub fn clean_overlap_prefix(&self, w: &[Symbol]) -> Option<CleanOverlapPrefix> {
        let mut it = self.matcher.find_iter(w);
        let first = it.next()?;
        let mut seen = vec![first];
        let mut hit = Self::hit(first);
        let mut chain = Vec::new();
        let d = self.decomposition();
        loop {
            let y_start = hit.a_len + d.x_len(hit.word_id);
            let y_end = hit.end;
            // An X₀Y₀ starting before y_end ends before y_end + δ.
            let horizon = y_end + self.delta;
            while seen.last().is_some_and(|m| m.end <= horizon) {
                match it.next() {
                    Some(m) => seen.push(m),
                    None => break,
                }
            }
            let next = seen
                .iter()
                .filter(|m| m.start > y_start && m.start < y_end && m.end > y_end)
                .min_by_key(|m| (m.start, m.end));
            match next {
                Some(m) => {
                    chain.push((hit.word_id, m.start - y_start));
                    hit = Self::hit(*m);
                }
                None => return Some(CleanOverlapPrefix { hit, chain }),
            }
        }
    }

    /// The relation prefix `a·X·Y` of `p·w` with `|a| < |p|` and the smallest
    /// end, scanning `p·w[..2δ]`.
    pub fn p_active_hit(&self, w: &[Symbol], p: &[Symbol]) -> Result<Option<RelationPrefixHit>> {
        if !self.analysis.is_piece(p) {
            return Err(Error::NotAPiece(format!("{p:?}")));
        }
        if p.is_empty() {
            return Ok(None);
        }
        let mut text = Vec::with_capacity(p.len() + 2 * self.delta);
        text.extend_from_slice(p);
        text.extend_from_slice(&w[..w.len().min(2 * self.delta)]);
        let hit = self
            .matcher
            .find_iter(&text)
            .find(|m| m.start < p.len())
            .map(Self::hit);
        Ok(hit)
    }

    /// Whether `p·w` has a relation prefix `a·X·Y` with `|a| < |p|`.
    pub fn is_p_active(&self, w: &[Symbol], p: &[Symbol]) -> Result<bool> {
        Ok(self.p_active_hit(w, p)?.is_some())
    }
}
