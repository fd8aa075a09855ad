use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;
use rand::Rng;
use small_overlap::corpus::{random_word, rng};
use small_overlap::{GeneralizedSuffixTree, Symbol};

/// Sentinel-terminated copies, sentinels numbered from one past the largest
/// letter.
fn terminated(words: &[Vec<Symbol>]) -> Vec<Vec<Symbol>> {
    let base = words.iter().flatten().copied().max().map_or(0, |m| m + 1);
    words
        .iter()
        .enumerate()
        .map(|(i, w)| {
            let mut t = w.clone();
            t.push(base + i as Symbol);
            t
        })
        .collect()
}

/// Naive suffix insertion: the branching prefixes (internal nodes other
/// than the root) and the full suffixes (leaves).
struct NaiveTree {
    internal: BTreeSet<Vec<Symbol>>,
    leaves: BTreeMap<(usize, usize), Vec<Symbol>>,
}

fn naive_tree(words: &[Vec<Symbol>]) -> NaiveTree {
    let t = terminated(words);
    let mut next: BTreeMap<Vec<Symbol>, BTreeSet<Symbol>> = BTreeMap::new();
    let mut leaves = BTreeMap::new();
    for (i, w) in t.iter().enumerate() {
        for j in 0..w.len() {
            let suffix = &w[j..];
            for k in 0..suffix.len() {
                next.entry(suffix[..k].to_vec())
                    .or_default()
                    .insert(suffix[k]);
            }
            leaves.insert((i, j), suffix.to_vec());
        }
    }
    let internal = next
        .into_iter()
        .filter(|(s, n)| !s.is_empty() && n.len() >= 2)
        .map(|(s, _)| s)
        .collect();
    NaiveTree { internal, leaves }
}

fn naive_walk(words: &[Vec<Symbol>], w: &[Symbol]) -> usize {
    (0..=w.len())
        .rev()
        .find(|&k| k == 0 || words.iter().any(|u| u.windows(k).any(|f| f == &w[..k])))
        .unwrap()
}

fn check_against_naive(words: &[Vec<Symbol>]) -> Result<(), TestCaseError> {
    let tree = GeneralizedSuffixTree::new(words);
    let naive = naive_tree(words);
    let ns: usize = words.iter().map(|w| w.len() + 1).sum();

    let stored: Vec<Vec<Symbol>> = (0..tree.word_count())
        .map(|i| tree.word(i).to_vec())
        .collect();
    prop_assert_eq!(stored, terminated(words));
    prop_assert_eq!(tree.leaf_count(), ns);
    prop_assert!(tree.node_count() <= 2 * ns);

    let mut internal = BTreeSet::new();
    for id in 0..tree.node_count() {
        let children = tree.children(id);
        let firsts: Vec<Symbol> = children.iter().map(|&(s, _)| s).collect();
        let mut sorted = firsts.clone();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(
            &firsts,
            &sorted,
            "children keyed by distinct first symbols, in order"
        );
        for &(s, c) in &children {
            prop_assert_eq!(tree.edge_label(c)[0], s);
            prop_assert_eq!(tree.depth(c), tree.depth(id) + tree.edge_label(c).len());
            prop_assert_eq!(tree.parent(c), Some(id));
        }
        prop_assert_eq!(tree.is_leaf(id), children.is_empty());
        if id != tree.root() && !tree.is_leaf(id) {
            prop_assert!(children.len() >= 2);
            internal.insert(tree.path_label(id));
        }
    }
    prop_assert_eq!(internal, naive.internal);

    for (&(i, j), suffix) in &naive.leaves {
        let leaf = tree.leaf(i, j);
        prop_assert_eq!(tree.leaf_label(leaf), Some((i, j)));
        prop_assert_eq!(&tree.path_label(leaf), suffix);
    }
    Ok(())
}

#[test]
fn figure_example_matches_naive_tree() {
    let words = vec![vec![0, 0, 4, 0, 0, 0], vec![0, 1, 2, 3]];
    check_against_naive(&words).unwrap();
    let tree = GeneralizedSuffixTree::new(&words);
    assert_eq!(tree.walk(&[3, 2, 1]).0, naive_walk(&words, &[3, 2, 1]));
    assert_eq!(tree.walk(&[3, 2, 1]).0, 1);
}

#[test]
fn five_hundred_random_word_sets() {
    let mut r = rng(0x5eed);
    for _ in 0..500 {
        let sigma = r.gen_range(1..=5);
        let mut words = Vec::new();
        let mut total = 0;
        let budget = r.gen_range(1..=200);
        while total < budget {
            let len = r.gen_range(1..=(budget - total).min(30));
            words.push(random_word(&mut r, sigma, len).into_vec());
            total += len;
        }
        check_against_naive(&words).unwrap();
    }
}

proptest! {
    #[test]
    fn structure_matches_naive(words in prop::collection::vec(prop::collection::vec(0u32..3, 1..12), 1..6)) {
        check_against_naive(&words)?;
    }

    #[test]
    fn walk_matches_naive(
        words in prop::collection::vec(prop::collection::vec(0u32..3, 1..12), 1..5),
        w in prop::collection::vec(0u32..3, 0..10),
    ) {
        let tree = GeneralizedSuffixTree::new(&words);
        let (matched, cursor) = tree.walk(&w);
        prop_assert_eq!(matched, naive_walk(&words, &w));
        let depth = tree.depth(cursor.node);
        if cursor.offset > 0 {
            prop_assert!(cursor.offset < tree.edge_label(cursor.node).len());
            prop_assert_eq!(depth - tree.edge_label(cursor.node).len() + cursor.offset, matched);
        } else {
            prop_assert_eq!(depth, matched);
        }
    }
}
