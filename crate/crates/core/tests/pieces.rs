use std::collections::{BTreeSet, HashMap};

use rand::Rng;
use small_overlap::corpus::{random_presentation, random_word, rng, PresentationShape};
use small_overlap::oracle::min_piece_factorization;
use small_overlap::overlap::{all_pieces, ALL_PIECES_CAP};
use small_overlap::{CIndex, PieceAnalysis, Presentation, Symbol, Word};

/// Factors occurring at least twice, counted over every position of every
/// distinct relation word.
fn naive_pieces(p: &Presentation) -> BTreeSet<Vec<Symbol>> {
    let mut count: HashMap<Vec<Symbol>, usize> = HashMap::new();
    for w in p.relation_words() {
        for i in 0..w.len() {
            for j in i + 1..=w.len() {
                *count.entry(w[i..j].to_vec()).or_default() += 1;
            }
        }
    }
    let mut out: BTreeSet<Vec<Symbol>> = count
        .into_iter()
        .filter(|(_, c)| *c >= 2)
        .map(|(f, _)| f)
        .collect();
    out.insert(Vec::new());
    out
}

fn small_presentations(seed: u64, count: usize) -> Vec<Presentation> {
    let mut r = rng(seed);
    let shape = PresentationShape {
        relations: (1, 4),
        alphabet: (2, 4),
        word_len: (1, 8),
    };
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let p = random_presentation(&mut r, &shape);
        if p.total_length() <= 60 {
            out.push(p);
        }
    }
    out
}

#[test]
fn decomposition_and_c_index_match_oracles() {
    let mut r = rng(99);
    let mut c4 = 0;
    for p in small_presentations(2024, 500) {
        let pieces = naive_pieces(&p);
        let is_piece = |f: &[Symbol]| pieces.contains(f);
        let a = PieceAnalysis::new(&p).unwrap();
        let d = a.decomposition();

        let fast: BTreeSet<Vec<Symbol>> = all_pieces(&p, ALL_PIECES_CAP)
            .unwrap()
            .into_iter()
            .map(Word::into_vec)
            .collect();
        assert_eq!(fast, pieces, "{p}");

        for (r_id, u) in p.relation_words().iter().enumerate() {
            let x = (0..=u.len()).rev().find(|&k| is_piece(&u[..k])).unwrap();
            let z = (0..=u.len())
                .rev()
                .find(|&k| is_piece(&u[u.len() - k..]))
                .unwrap();
            assert_eq!(d.x_len(r_id), x, "X of {} in {p}", p.render(u));
            assert_eq!(d.z_len(r_id), z, "Z of {} in {p}", p.render(u));
            assert_eq!(
                a.piece_factorization_len(r_id),
                min_piece_factorization(is_piece, u),
                "{p}"
            );
            if x + z < u.len() {
                assert_eq!(a.middle_is_piece(r_id), is_piece(d.y(r_id)), "{p}");
            }
        }

        let dp = p
            .relation_words()
            .iter()
            .filter_map(|u| min_piece_factorization(is_piece, u))
            .min();
        let expected = dp.map_or(CIndex::Unbounded, CIndex::Finite);
        assert_eq!(a.c_index(), expected, "{p}");
        assert_eq!(a.is_c4(), expected.satisfies(4), "{p}");
        for n in 1..8 {
            if expected.satisfies(n) {
                assert!((1..=n).all(|k| expected.satisfies(k)));
            }
        }
        c4 += usize::from(a.is_c4());

        for _ in 0..10 {
            let len = r.gen_range(0..8);
            let w = random_word(&mut r, p.alphabet().len(), len);
            let naive = (0..=w.len()).rev().find(|&k| is_piece(&w[..k])).unwrap();
            assert_eq!(a.longest_piece_prefix(&w), naive, "{} in {p}", p.render(&w));
        }
        for f in &pieces {
            for i in 0..f.len() {
                for j in i..=f.len() {
                    assert!(is_piece(&f[i..j]), "pieces are factor-closed in {p}");
                }
            }
        }
    }
    assert!(c4 > 0, "corpus should contain C(4) presentations");
}

#[test]
fn golden_values() {
    let cases: [(&str, &[&str], CIndex); 4] = [
        (
            "alphabet: a b c\nrule: abc = cba",
            &["_", "a", "b", "c"],
            CIndex::Finite(3),
        ),
        (
            "alphabet: a b c\nrule: acba = aabc",
            &["_", "a", "b", "c"],
            CIndex::Finite(4),
        ),
        (
            "alphabet: a b c d\nrule: acba = aabc\nrule: acba = dbbbd",
            &["_", "a", "b", "bb", "c", "d"],
            CIndex::Finite(4),
        ),
        (
            "alphabet: a b c d\nrule: aabc = aabd",
            &["_", "a", "aa", "aab", "ab", "b"],
            CIndex::Unbounded,
        ),
    ];
    for (text, pieces, c) in cases {
        let p = Presentation::parse(text).unwrap();
        let got: Vec<String> = all_pieces(&p, ALL_PIECES_CAP)
            .unwrap()
            .iter()
            .map(|w| p.render(w))
            .collect();
        assert_eq!(got, pieces);
        assert_eq!(PieceAnalysis::new(&p).unwrap().c_index(), c);
    }
}
