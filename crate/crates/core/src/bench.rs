//! Timing of generalized suffix tree construction.

use std::time::{Duration, Instant};

use crate::corpus::gst_corpus;
use crate::suffix_tree::GeneralizedSuffixTree;
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub median: Duration,
    /// `median / previous median`; `None` for the first row.
    pub ratio: Option<f64>,
}

fn timed_build(words: &[Word]) -> Duration {
    let t = Instant::now();
    let tree = GeneralizedSuffixTree::new(words);
    let elapsed = t.elapsed();
    std::hint::black_box(tree.node_count());
    elapsed
}

fn median(mut times: Vec<Duration>) -> Duration {
    times.sort();
    times[times.len() / 2]
}

/// Median build time over `reps` timed runs, after one untimed warm-up.
pub fn median_build_time(words: &[Word], reps: usize) -> Duration {
    std::hint::black_box(GeneralizedSuffixTree::new(words).node_count());
    median((0..reps.max(1)).map(|_| timed_build(words)).collect())
}

/// One row per total length in `ns`, each over a fresh corpus drawn from
/// `seed`.
///
/// Repetitions are interleaved across sizes (one build of every size per
/// round), so a slow stretch on a shared machine hits all sizes alike
/// instead of skewing one ratio.
pub fn gst_rows(ns: &[usize], sigma: usize, seed: u64, reps: usize) -> Vec<BenchRow> {
    let corpora: Vec<Vec<Word>> = ns.iter().map(|&n| gst_corpus(seed, n, sigma)).collect();
    for words in &corpora {
        std::hint::black_box(GeneralizedSuffixTree::new(words).node_count());
    }
    let mut times: Vec<Vec<Duration>> = vec![Vec::with_capacity(reps); ns.len()];
    for _ in 0..reps.max(1) {
        for (words, t) in corpora.iter().zip(&mut times) {
            t.push(timed_build(words));
        }
    }
    let mut rows: Vec<BenchRow> = Vec::with_capacity(ns.len());
    for (&n, t) in ns.iter().zip(times) {
        let median = median(t);
        let ratio = rows.last().map(|prev| median.as_secs_f64() / prev.median.as_secs_f64().max(1e-12));
        rows.push(BenchRow { n, median, ratio });
    }
    rows
}

/// `2^lo, 2^(lo+1), …` up to and including `hi`.
pub fn doublings(lo: usize, hi: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut n = lo;
    while n > 0 && n <= hi {
        out.push(n);
        n = n.saturating_mul(2);
        if n == usize::MAX {
            break;
        }
    }
    out
}
