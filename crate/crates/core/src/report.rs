//! The `analyze` report, as text or JSON.

use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::error::Result;
use crate::overlap::{all_pieces, analyze, CIndex, ALL_PIECES_CAP};
use crate::presentation::Presentation;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WordReport {
    pub word: String,
    pub x: String,
    pub y: String,
    pub z: String,
    /// Fewest pieces whose product is the word; `null` if there is none.
    pub min_pieces: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TreeStats {
    pub nodes: usize,
    pub leaves: usize,
}

/// Field order is the serialization order; every list is sorted or in
/// relation-word order, so equal inputs give byte-identical JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalyzeReport {
    pub c_index: CIndex,
    pub is_c4: bool,
    pub delta: usize,
    pub total_length: usize,
    pub words: Vec<WordReport>,
    pub complement_classes: Vec<Vec<String>>,
    pub tree: TreeStats,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pieces: Option<Vec<String>>,
}

impl AnalyzeReport {
    pub fn new(p: &Presentation, with_pieces: bool) -> Result<Self> {
        let a = analyze(p)?;
        let d = &a.decomposition;
        let words = (0..d.len())
            .map(|r| WordReport {
                word: p.render(d.word(r)),
                x: p.render(d.x(r)),
                y: p.render(d.y(r)),
                z: p.render(d.z(r)),
                min_pieces: a.factorization_lens[r],
            })
            .collect();
        let mut complement_classes: Vec<Vec<String>> = p
            .complement_classes()
            .classes()
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&r| p.render(&p.relation_words()[r]))
                    .collect()
            })
            .collect();
        complement_classes.sort();
        let pieces = if with_pieces {
            Some(
                all_pieces(p, ALL_PIECES_CAP)?
                    .iter()
                    .map(|w| p.render(w))
                    .collect(),
            )
        } else {
            None
        };
        Ok(AnalyzeReport {
            c_index: a.c_index,
            is_c4: a.is_c4,
            delta: p.delta(),
            total_length: p.total_length(),
            words,
            complement_classes,
            tree: TreeStats {
                nodes: a.tree_nodes,
                leaves: a.tree_leaves,
            },
            pieces,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for AnalyzeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "c_index: {}", self.c_index)?;
        writeln!(f, "is_c4: {}", self.is_c4)?;
        writeln!(f, "delta: {}", self.delta)?;
        writeln!(f, "total_length: {}", self.total_length)?;
        writeln!(
            f,
            "tree: {} nodes, {} leaves",
            self.tree.nodes, self.tree.leaves
        )?;
        let width = self
            .words
            .iter()
            .map(|w| w.word.chars().count())
            .max()
            .unwrap_or(4)
            .max(4);
        writeln!(
            f,
            "{:<width$}  {:<width$}  {:<width$}  {:<width$}  pieces",
            "word", "X", "Y", "Z"
        )?;
        for w in &self.words {
            let k = w
                .min_pieces
                .map_or_else(|| "-".to_string(), |k| k.to_string());
            writeln!(
                f,
                "{:<width$}  {:<width$}  {:<width$}  {:<width$}  {k}",
                w.word, w.x, w.y, w.z
            )?;
        }
        let mut classes = String::new();
        for (i, c) in self.complement_classes.iter().enumerate() {
            if i > 0 {
                classes.push_str(" | ");
            }
            write!(classes, "{{{}}}", c.join(", "))?;
        }
        writeln!(f, "complement classes: {classes}")?;
        if let Some(pieces) = &self.pieces {
            writeln!(f, "pieces: {{{}}}", pieces.join(", "))?;
        }
        Ok(())
    }
}
