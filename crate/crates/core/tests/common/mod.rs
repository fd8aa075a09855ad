//! Naive re-implementations shared by the integration tests.

#![allow(dead_code)]

use small_overlap::scanner::{CleanOverlapPrefix, RelationPrefixHit};
use small_overlap::{PieceDecomposition, Presentation, Symbol};

/// Every `(start, word, end)` with `w[start..end] = X_r·Y_r`.
pub fn occurrences(d: &PieceDecomposition, w: &[Symbol]) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for start in 0..w.len() {
        for r in 0..d.len() {
            if w[start..].starts_with(d.xy(r)) {
                out.push((start, r, start + d.xy(r).len()));
            }
        }
    }
    out
}

pub fn naive_shortest(d: &PieceDecomposition, w: &[Symbol]) -> Option<RelationPrefixHit> {
    occurrences(d, w)
        .into_iter()
        .min_by_key(|&(s, _, e)| (e, s))
        .map(|(a_len, word_id, end)| RelationPrefixHit { a_len, word_id, end })
}

/// Chain extension straight from the definition: while some `X₀Y₀` starts
/// strictly inside the current `Y`, move to the earliest one.
pub fn naive_clean(d: &PieceDecomposition, w: &[Symbol]) -> Option<CleanOverlapPrefix> {
    let occ = occurrences(d, w);
    let mut hit = naive_shortest(d, w)?;
    let mut chain = Vec::new();
    loop {
        let y_start = hit.a_len + d.x_len(hit.word_id);
        let next = occ.iter().filter(|&&(s, _, _)| s > y_start && s < hit.end).min_by_key(|&&(s, _, e)| (s, e));
        match next {
            Some(&(s, r, e)) => {
                chain.push((hit.word_id, s - y_start));
                hit = RelationPrefixHit { a_len: s, word_id: r, end: e };
            }
            None => return Some(CleanOverlapPrefix { hit, chain }),
        }
    }
}

pub fn naive_p_active(d: &PieceDecomposition, w: &[Symbol], p: &[Symbol]) -> Option<RelationPrefixHit> {
    let pw: Vec<Symbol> = p.iter().chain(w).copied().collect();
    occurrences(d, &pw)
        .into_iter()
        .filter(|&(s, _, _)| s < p.len())
        .min_by_key(|&(s, _, e)| (e, s))
        .map(|(a_len, word_id, end)| RelationPrefixHit { a_len, word_id, end })
}

pub fn contains_relation_word(p: &Presentation, w: &[Symbol]) -> bool {
    p.relation_words().iter().any(|u| w.windows(u.len()).any(|f| f == u.as_slice()))
}
