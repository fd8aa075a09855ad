//! Brute-force ground truth: equivalence classes enumerated by rewriting.
//!
//! In a C(3) presentation every class is finite, so breadth-first closure
//! under single rewrites terminates. Candidates longer than
//! `δ·max(|seed|, 1)` are dropped and counted; a non-zero count means the
//! length bound used for pruning was wrong for that input.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::overlap::PieceAnalysis;
use crate::presentation::Presentation;
use crate::word::{Symbol, Word};

pub const DEFAULT_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteClosure {
    pub seed: Word,
    pub members: BTreeSet<Word>,
    pub truncated: bool,
    pub cap: usize,
    /// Candidates discarded by the length bound.
    pub pruned: usize,
}

impl RewriteClosure {
    pub fn contains(&self, w: &[Symbol]) -> bool {
        self.members.contains(&Word::from(w))
    }

    /// Least member, since `BTreeSet` orders words lexicographically.
    pub fn lex_min(&self) -> &Word {
        self.members.first().expect("closure contains its seed")
    }

    pub fn max_len(&self) -> usize {
        self.members.iter().map(|m| m.len()).max().unwrap_or(0)
    }
}

#[derive(Debug, Clone)]
pub struct RewriteOracle {
    /// Both orientations of every relation with distinct sides.
    rules: Vec<(Word, Word)>,
    delta: usize,
    cap: usize,
}

impl RewriteOracle {
    pub fn new(p: &Presentation) -> Self {
        Self::with_cap(p, DEFAULT_CAP)
    }

    pub fn with_cap(p: &Presentation, cap: usize) -> Self {
        let mut rules = Vec::new();
        for (l, r) in p.relations() {
            if l != r {
                rules.push((l.clone(), r.clone()));
                rules.push((r.clone(), l.clone()));
            }
        }
        rules.sort();
        rules.dedup();
        RewriteOracle {
            rules,
            delta: p.delta(),
            cap: cap.max(1),
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Longest member length allowed when enumerating the class of a word
    /// of length `seed_len`.
    pub fn length_bound(&self, seed_len: usize) -> usize {
        self.delta.max(1) * seed_len.max(1)
    }

    /// Every word reachable from `w` by replacing one occurrence of one
    /// relation side with the other side.
    pub fn one_step_rewrites(&self, w: &[Symbol]) -> BTreeSet<Word> {
        let mut out = BTreeSet::new();
        self.for_each_rewrite(w, |x| {
            out.insert(Word::from(x));
        });
        out
    }

    fn for_each_rewrite(&self, w: &[Symbol], mut f: impl FnMut(&[Symbol])) {
        let mut buf = Vec::with_capacity(w.len() + self.delta);
        for (lhs, rhs) in &self.rules {
            if lhs.len() > w.len() {
                continue;
            }
            for i in 0..=w.len() - lhs.len() {
                if w[i..i + lhs.len()] == lhs[..] {
                    buf.clear();
                    buf.extend_from_slice(&w[..i]);
                    buf.extend_from_slice(rhs);
                    buf.extend_from_slice(&w[i + lhs.len()..]);
                    f(&buf);
                }
            }
        }
    }

    pub fn enumerate_class(&self, w: &[Symbol]) -> RewriteClosure {
        self.enumerate_class_capped(w, self.cap)
    }

    pub fn enumerate_class_capped(&self, w: &[Symbol], cap: usize) -> RewriteClosure {
        let bound = self.length_bound(w.len());
        let mut seen: HashSet<Word> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(Word::from(w));
        queue.push_back(Word::from(w));
        let mut truncated = false;
        let mut pruned = 0;
        'bfs: while let Some(cur) = queue.pop_front() {
            let mut next = Vec::new();
            self.for_each_rewrite(&cur, |x| next.push(Word::from(x)));
            for x in next {
                if x.len() > bound {
                    pruned += 1;
                    continue;
                }
                if seen.contains(&x) {
                    continue;
                }
                if seen.len() >= cap {
                    truncated = true;
                    break 'bfs;
                }
                seen.insert(x.clone());
                queue.push_back(x);
            }
        }
        RewriteClosure {
            seed: Word::from(w),
            members: seen.into_iter().collect(),
            truncated,
            cap,
            pruned,
        }
    }

    fn complete_class(&self, w: &[Symbol]) -> Result<RewriteClosure> {
        let c = self.enumerate_class(w);
        if c.truncated {
            return Err(Error::Undecided { cap: self.cap });
        }
        Ok(c)
    }

    /// Enumerates the class of the shorter word.
    pub fn equivalent(&self, u: &[Symbol], v: &[Symbol]) -> Result<bool> {
        if u == v {
            return Ok(true);
        }
        let (seed, other) = if u.len() <= v.len() { (u, v) } else { (v, u) };
        Ok(self.complete_class(seed)?.contains(other))
    }

    /// Whether some word equivalent to `w` starts with `p`.
    pub fn is_possible_prefix(&self, w: &[Symbol], p: &[Symbol]) -> Result<bool> {
        if w.starts_with(p) {
            return Ok(true);
        }
        Ok(self
            .complete_class(w)?
            .members
            .iter()
            .any(|m| m.starts_with(p)))
    }

    pub fn lex_min_class(&self, w: &[Symbol]) -> Result<Word> {
        Ok(self.complete_class(w)?.lex_min().clone())
    }
}

/// Fewest pieces whose product is `w` (0 for ε), by dynamic programming
/// over cut positions; `None` if `w` is not a product of pieces.
pub fn min_piece_factorization(
    is_piece: impl Fn(&[Symbol]) -> bool,
    w: &[Symbol],
) -> Option<usize> {
    let n = w.len();
    let mut best: Vec<Option<usize>> = vec![None; n + 1];
    best[0] = Some(0);
    for j in 1..=n {
        best[j] = (0..j)
            .filter_map(|i| best[i].filter(|_| is_piece(&w[i..j])).map(|k| k + 1))
            .min();
    }
    best[n]
}

/// [`min_piece_factorization`] with pieces decided by the suffix tree.
pub fn min_piece_factorization_in(analysis: &PieceAnalysis, w: &[Symbol]) -> Option<usize> {
    min_piece_factorization(|f| analysis.is_piece(f), w)
}
