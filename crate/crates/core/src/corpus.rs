//! Seeded generators for test corpora and benchmarks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::overlap::PieceAnalysis;
use crate::presentation::Presentation;
use crate::word::{Alphabet, Symbol, Word};

const GLYPHS: &str = "abcdefghijklmnopqrstuvwxyz";

/// Shape of the random presentations produced by [`random_c4_presentation`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PresentationShape {
    pub relations: (usize, usize),
    pub alphabet: (usize, usize),
    pub word_len: (usize, usize),
}

impl Default for PresentationShape {
    fn default() -> Self {
        PresentationShape {
            relations: (2, 4),
            alphabet: (3, 6),
            word_len: (4, 9),
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn alphabet(size: usize) -> Alphabet {
    assert!(size <= GLYPHS.len(), "at most {} letters", GLYPHS.len());
    Alphabet::new(GLYPHS.chars().take(size).collect()).expect("distinct glyphs")
}

pub fn random_word<R: Rng>(rng: &mut R, sigma: usize, len: usize) -> Word {
    (0..len)
        .map(|_| rng.gen_range(0..sigma as Symbol))
        .collect()
}

/// A presentation of the given shape, C(4) or not.
///
/// Half the time every relation word is `x·m·z` with `x` and `z` drawn from a
/// small shared pool of short fragments, so that maximal piece prefixes and
/// suffixes are non-trivial and overlap each other. Some relations reuse an
/// existing relation word as one side, so complement classes can have more
/// than two members.
pub fn random_presentation<R: Rng>(rng: &mut R, shape: &PresentationShape) -> Presentation {
    let sigma = rng.gen_range(shape.alphabet.0..=shape.alphabet.1);
    let n = rng.gen_range(shape.relations.0..=shape.relations.1);
    let structured = rng.gen_bool(0.5);
    let pool: Vec<Word> = (0..rng.gen_range(2..=3))
        .map(|_| {
            let len = rng.gen_range(1..=2);
            random_word(rng, sigma, len)
        })
        .collect();
    let word = |rng: &mut R| {
        let len = rng.gen_range(shape.word_len.0..=shape.word_len.1);
        if !structured {
            return random_word(rng, sigma, len);
        }
        let x = pool.choose(rng).expect("non-empty pool");
        let z = pool.choose(rng).expect("non-empty pool");
        let middle = len.saturating_sub(x.len() + z.len()).max(1);
        let m = random_word(rng, sigma, middle);
        let w = Word::concat(&[x, &m, z]);
        if w.len() > shape.word_len.1 {
            Word::from(&w[..shape.word_len.1])
        } else {
            w
        }
    };
    let mut relations: Vec<(Word, Word)> = Vec::with_capacity(n);
    for _ in 0..n {
        let lhs = match relations.choose(rng) {
            Some((l, r)) if rng.gen_bool(0.25) => {
                if rng.gen_bool(0.5) {
                    l.clone()
                } else {
                    r.clone()
                }
            }
            _ => word(rng),
        };
        relations.push((lhs, word(rng)));
    }
    Presentation::new(alphabet(sigma), relations)
}

/// Rejection-samples [`random_presentation`] until it satisfies C(4).
pub fn random_c4_presentation<R: Rng>(rng: &mut R, shape: &PresentationShape) -> Presentation {
    loop {
        let p = random_presentation(rng, shape);
        if PieceAnalysis::new(&p).is_ok_and(|a| a.is_c4()) {
            return p;
        }
    }
}

/// A word of length at most `max_len` stitched together from relation
/// words, their prefixes and suffixes, and random letters, so that relation
/// prefixes and overlaps are common.
pub fn random_word_for<R: Rng>(rng: &mut R, p: &Presentation, max_len: usize) -> Word {
    let target = rng.gen_range(0..=max_len);
    let sigma = p.alphabet().len();
    let words = p.relation_words();
    let mut out: Vec<Symbol> = Vec::with_capacity(target + 9);
    while out.len() < target {
        match (rng.gen_range(0..4), words.choose(rng)) {
            (0, Some(u)) => out.extend_from_slice(u),
            (1, Some(u)) => {
                let k = rng.gen_range(1..=u.len());
                out.extend_from_slice(&u[..k]);
            }
            (2, Some(u)) => {
                let k = rng.gen_range(0..u.len());
                out.extend_from_slice(&u[k..]);
            }
            _ => out.push(rng.gen_range(0..sigma as Symbol)),
        }
    }
    out.truncate(target);
    Word::from(out)
}

/// One presentation with its sample words.
#[derive(Debug, Clone)]
pub struct CorpusCase {
    pub presentation: Presentation,
    pub words: Vec<Word>,
}

/// `count` C(4) presentations with `words_per` words each, fully determined
/// by `seed`.
pub fn c4_corpus(
    seed: u64,
    count: usize,
    words_per: usize,
    max_word_len: usize,
) -> Vec<CorpusCase> {
    let mut rng = rng(seed);
    let shape = PresentationShape::default();
    (0..count)
        .map(|_| {
            let presentation = random_c4_presentation(&mut rng, &shape);
            let words = (0..words_per)
                .map(|_| random_word_for(&mut rng, &presentation, max_word_len))
                .collect();
            CorpusCase {
                presentation,
                words,
            }
        })
        .collect()
}

/// Random words over `sigma` letters with total length exactly `total`,
/// individual lengths in `8..=64` (the last one may be shorter).
pub fn gst_corpus(seed: u64, total: usize, sigma: usize) -> Vec<Word> {
    let mut rng = rng(seed);
    let mut out = Vec::new();
    let mut left = total;
    while left > 0 {
        let len = rng.gen_range(8..=64).min(left);
        out.push(random_word(&mut rng, sigma.max(1), len));
        left -= len;
    }
    out
}
