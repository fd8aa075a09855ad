//! Generalized suffix tree over a set of words, built with Ukkonen's
//! algorithm, and the piece queries answered from it.
//!
//! Every word `i` is terminated by its own sentinel `$ᵢ`, a symbol id above
//! the alphabet range, so each suffix of each word ends at its own leaf
//! labelled `(i, j)`. The tree is built online over the concatenation
//! `u₀$₀u₁$₁…`. No sentinel repeats, so a leaf edge never needs to run past
//! its word's sentinel and is cut there when the leaf is created.

use crate::word::Symbol;

pub type NodeId = usize;

const ROOT: NodeId = 0;
const NONE: u32 = u32::MAX;

/// A position in the tree: `offset` symbols down the in-edge of `node`, or
/// exactly at `node` when `offset == 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeCursor {
    pub node: NodeId,
    pub offset: usize,
}

/// One node in 40 bytes. Edges are `text[start..end]`.
///
/// Letter children hang off `first` as an intrusive list through `next`
/// (the root uses a direct table instead); sentinel children go on the
/// separate `sentinels` list, since a sentinel is never looked up.
#[derive(Debug, Clone, Copy)]
struct RawNode {
    start: u32,
    end: u32,
    parent: u32,
    depth: u32,
    link: u32,
    /// Start of the suffix in `text` for leaves, `NONE` for internal nodes.
    suffix: u32,
    key: Symbol,
    first: u32,
    sentinels: u32,
    next: u32,
}

#[derive(Debug, Clone)]
pub struct GeneralizedSuffixTree {
    /// `u₀$₀u₁$₁…`
    text: Vec<Symbol>,
    /// Start of each word in `text`, then `text.len()`.
    word_start: Vec<usize>,
    nodes: Vec<RawNode>,
    root_children: Vec<u32>,
    /// Leaf for the suffix starting at each position of `text`.
    leaf_at: Vec<u32>,
    sentinel_base: Symbol,
}

impl GeneralizedSuffixTree {
    /// Builds the tree in time linear in `Σ(|uᵢ| + 1)` for a fixed
    /// alphabet.
    ///
    /// # Panics
    ///
    /// If `words` is empty, contains an empty word, or is too long for
    /// 32-bit node ids.
    pub fn new<W: AsRef<[Symbol]>>(words: &[W]) -> Self {
        assert!(
            !words.is_empty(),
            "generalized suffix tree needs at least one word"
        );
        let sentinel_base = words
            .iter()
            .flat_map(|w| w.as_ref().iter().copied())
            .max()
            .map_or(0, |m| m + 1);
        let total: usize = words.iter().map(|w| w.as_ref().len() + 1).sum();
        assert!(
            total < (NONE / 4) as usize,
            "input too long for 32-bit node ids"
        );
        let mut text = Vec::with_capacity(total);
        let mut word_start = Vec::with_capacity(words.len() + 1);
        for (i, w) in words.iter().enumerate() {
            let w = w.as_ref();
            assert!(!w.is_empty(), "word {i} is empty");
            word_start.push(text.len());
            text.extend_from_slice(w);
            text.push(sentinel_base + i as Symbol);
        }
        word_start.push(text.len());
        let mut tree = GeneralizedSuffixTree {
            text,
            word_start,
            nodes: Vec::with_capacity(2 * total),
            root_children: vec![NONE; sentinel_base as usize],
            leaf_at: vec![NONE; total],
            sentinel_base,
        };
        advise_huge(&tree.nodes);
        advise_huge(&tree.leaf_at);
        tree.build();
        tree
    }

    fn build(&mut self) {
        self.push(0, 0, NONE as NodeId, 0, NONE);
        let mut active_node = ROOT;
        let mut active_edge = 0usize;
        let mut active_len = 0usize;
        let mut remainder = 0usize;
        let mut word = 0usize;
        for pos in 0..self.text.len() {
            if pos == self.word_start[word + 1] {
                word += 1;
            }
            let word_end = self.word_start[word + 1];
            let current = self.text[pos];
            remainder += 1;
            let mut last_new = NONE;
            while remainder > 0 {
                if active_len == 0 {
                    active_edge = pos;
                }
                let c = self.text[active_edge];
                let suffix = pos + 1 - remainder;
                match self.child(active_node, c) {
                    None => {
                        let leaf = self.new_leaf(active_node, pos, word_end, suffix);
                        self.add_child(active_node, c, leaf);
                        if last_new != NONE {
                            self.nodes[last_new as usize].link = active_node as u32;
                            last_new = NONE;
                        }
                    }
                    Some(next) => {
                        let n = self.nodes[next];
                        let edge_len = (n.end as usize).min(pos + 1) - n.start as usize;
                        if active_len >= edge_len {
                            active_edge += edge_len;
                            active_len -= edge_len;
                            active_node = next;
                            continue;
                        }
                        let split_at = n.start as usize + active_len;
                        if self.text[split_at] == current {
                            if last_new != NONE && active_node != ROOT {
                                self.nodes[last_new as usize].link = active_node as u32;
                            }
                            active_len += 1;
                            break;
                        }
                        let depth = self.nodes[active_node].depth as usize + active_len;
                        let mid = self.push(n.start as usize, split_at, active_node, depth, NONE);
                        self.replace_child(active_node, c, next, mid);
                        let leaf = self.new_leaf(mid, pos, word_end, suffix);
                        self.add_child(mid, current, leaf);
                        self.nodes[next].start = split_at as u32;
                        self.nodes[next].parent = mid as u32;
                        self.add_child(mid, self.text[split_at], next);
                        if last_new != NONE {
                            self.nodes[last_new as usize].link = mid as u32;
                        }
                        last_new = mid as u32;
                    }
                }
                remainder -= 1;
                if active_node == ROOT && active_len > 0 {
                    active_len -= 1;
                    active_edge = pos + 1 - remainder;
                } else if active_node != ROOT {
                    let l = self.nodes[active_node].link;
                    active_node = if l == NONE { ROOT } else { l as usize };
                }
            }
        }
    }

    fn push(
        &mut self,
        start: usize,
        end: usize,
        parent: NodeId,
        depth: usize,
        suffix: u32,
    ) -> NodeId {
        self.nodes.push(RawNode {
            start: start as u32,
            end: end as u32,
            parent: parent as u32,
            depth: depth as u32,
            link: NONE,
            suffix,
            key: 0,
            first: NONE,
            sentinels: NONE,
            next: NONE,
        });
        self.nodes.len() - 1
    }

    fn new_leaf(&mut self, parent: NodeId, pos: usize, word_end: usize, suffix: usize) -> NodeId {
        let leaf = self.push(pos, word_end, parent, word_end - suffix, suffix as u32);
        self.leaf_at[suffix] = leaf as u32;
        leaf
    }

    fn child(&self, id: NodeId, s: Symbol) -> Option<NodeId> {
        if s >= self.sentinel_base {
            return None;
        }
        let c = if id == ROOT {
            self.root_children[s as usize]
        } else {
            let mut c = self.nodes[id].first;
            while c != NONE && self.nodes[c as usize].key != s {
                c = self.nodes[c as usize].next;
            }
            c
        };
        (c != NONE).then_some(c as NodeId)
    }

    fn add_child(&mut self, id: NodeId, s: Symbol, child: NodeId) {
        self.nodes[child].key = s;
        if s >= self.sentinel_base {
            self.nodes[child].next = self.nodes[id].sentinels;
            self.nodes[id].sentinels = child as u32;
        } else if id == ROOT {
            self.root_children[s as usize] = child as u32;
        } else {
            self.nodes[child].next = self.nodes[id].first;
            self.nodes[id].first = child as u32;
        }
    }

    /// Puts `new` in place of the letter child `old` keyed by `s`.
    fn replace_child(&mut self, id: NodeId, s: Symbol, old: NodeId, new: NodeId) {
        self.nodes[new].key = s;
        if id == ROOT {
            self.root_children[s as usize] = new as u32;
            return;
        }
        self.nodes[new].next = self.nodes[old].next;
        if self.nodes[id].first == old as u32 {
            self.nodes[id].first = new as u32;
            return;
        }
        let mut c = self.nodes[id].first as usize;
        while self.nodes[c].next != old as u32 {
            c = self.nodes[c].next as usize;
        }
        self.nodes[c].next = new as u32;
    }

    /// Children of `id` in no particular order.
    fn child_ids(&self, id: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        let list = |head: u32| {
            std::iter::successors((head != NONE).then_some(head), move |&c| {
                let n = self.nodes[c as usize].next;
                (n != NONE).then_some(n)
            })
        };
        let root: &[u32] = if id == ROOT { &self.root_children } else { &[] };
        let letters = if id == ROOT {
            NONE
        } else {
            self.nodes[id].first
        };
        root.iter()
            .copied()
            .filter(|&c| c != NONE)
            .chain(list(letters))
            .chain(list(self.nodes[id].sentinels))
            .map(|c| c as NodeId)
    }

    pub fn root(&self) -> NodeId {
        ROOT
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn leaf_count(&self) -> usize {
        self.leaf_at.len()
    }

    /// Children of `id`, keyed by the first symbol of their edge and sorted
    /// by symbol.
    pub fn children(&self, id: NodeId) -> Vec<(Symbol, NodeId)> {
        let mut out: Vec<(Symbol, NodeId)> =
            self.child_ids(id).map(|c| (self.nodes[c].key, c)).collect();
        out.sort_unstable();
        out
    }

    pub fn parent(&self, id: NodeId) -> Option<NodeId> {
        let p = self.nodes[id].parent;
        (p != NONE).then_some(p as NodeId)
    }

    /// Length of the path label from the root.
    pub fn depth(&self, id: NodeId) -> usize {
        self.nodes[id].depth as usize
    }

    pub fn is_leaf(&self, id: NodeId) -> bool {
        self.nodes[id].suffix != NONE
    }

    /// `(i, j)` for the leaf of suffix `j` of word `i`.
    pub fn leaf_label(&self, id: NodeId) -> Option<(usize, usize)> {
        let s = self.nodes[id].suffix;
        (s != NONE).then(|| {
            let s = s as usize;
            let i = self.word_start.partition_point(|&b| b <= s) - 1;
            (i, s - self.word_start[i])
        })
    }

    pub fn word_count(&self) -> usize {
        self.word_start.len() - 1
    }

    /// Word `i` followed by its sentinel.
    pub fn word(&self, i: usize) -> &[Symbol] {
        &self.text[self.word_start[i]..self.word_start[i + 1]]
    }

    /// Length of word `i` without its sentinel.
    pub fn word_len(&self, i: usize) -> usize {
        self.word_start[i + 1] - self.word_start[i] - 1
    }

    pub fn is_sentinel(&self, s: Symbol) -> bool {
        s >= self.sentinel_base
    }

    pub fn leaf(&self, word: usize, offset: usize) -> NodeId {
        assert!(
            offset <= self.word_len(word),
            "suffix {offset} out of range for word {word}"
        );
        self.leaf_at[self.word_start[word] + offset] as NodeId
    }

    pub fn edge_label(&self, id: NodeId) -> &[Symbol] {
        let n = &self.nodes[id];
        &self.text[n.start as usize..n.end as usize]
    }

    /// Concatenated edge labels from the root down to `id`.
    pub fn path_label(&self, id: NodeId) -> Vec<Symbol> {
        let n = &self.nodes[id];
        let end = n.end as usize;
        self.text[end - n.depth as usize..end].to_vec()
    }

    /// Follows `w` from the root. Returns the length of the longest prefix of
    /// `w` that is a factor of some stored word, and the cursor at its end.
    pub fn walk(&self, w: &[Symbol]) -> (usize, TreeCursor) {
        let mut node = ROOT;
        let mut matched = 0;
        loop {
            let at_node = TreeCursor { node, offset: 0 };
            if matched == w.len() {
                return (matched, at_node);
            }
            let Some(child) = self.child(node, w[matched]) else {
                return (matched, at_node);
            };
            let label = self.edge_label(child);
            let mut k = 0;
            while k < label.len()
                && matched < w.len()
                && label[k] == w[matched]
                && !self.is_sentinel(w[matched])
            {
                k += 1;
                matched += 1;
            }
            if k == label.len() {
                node = child;
            } else {
                return (
                    matched,
                    TreeCursor {
                        node: child,
                        offset: k,
                    },
                );
            }
        }
    }

    /// `|X_r|` for every word: the depth of the parent of leaf `(r, 0)`.
    pub fn maximal_piece_prefixes(&self) -> Vec<usize> {
        (0..self.word_count())
            .map(|r| self.parent_depth(self.leaf(r, 0)))
            .collect()
    }

    /// `|Z_r|` for every word: a suffix `u_r[i..]` is a piece exactly when
    /// leaf `(r, i)` hangs off an internal node by an edge carrying only the
    /// sentinel.
    pub fn maximal_piece_suffixes(&self) -> Vec<usize> {
        (0..self.word_count())
            .map(|r| {
                let n = self.word_len(r);
                (0..=n)
                    .find(|&i| self.edge_label(self.leaf(r, i)).len() == 1)
                    .map_or(0, |i| n - i)
            })
            .collect()
    }

    /// Length of the longest prefix of `w` that is a piece, i.e. occurs at
    /// least twice among the stored words.
    ///
    /// With `stop_leaf = Some((r, i))`, `w` must be a prefix of
    /// `u_r[i..]`; the answer is read off the parent of that leaf without
    /// walking. Otherwise `w` is walked from the root.
    pub fn longest_piece_prefix_of(
        &self,
        w: &[Symbol],
        stop_leaf: Option<(usize, usize)>,
    ) -> usize {
        if let Some((r, i)) = stop_leaf {
            debug_assert!(self.word(r)[i..].starts_with(w));
            return w.len().min(self.parent_depth(self.leaf(r, i)));
        }
        let (matched, cursor) = self.walk(w);
        if cursor.node == ROOT {
            0
        } else if self.is_leaf(cursor.node) {
            // Inside a leaf edge only one occurrence remains.
            self.parent_depth(cursor.node)
        } else {
            matched
        }
    }

    /// Subtree leaf counts, i.e. the number of occurrences of each node's
    /// path label.
    pub fn leaf_counts(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![ROOT];
        while let Some(id) = stack.pop() {
            order.push(id);
            stack.extend(self.child_ids(id));
        }
        let mut count = vec![0; self.nodes.len()];
        for &id in order.iter().rev() {
            count[id] = if self.is_leaf(id) {
                1
            } else {
                self.child_ids(id).map(|c| count[c]).sum()
            };
        }
        count
    }

    fn parent_depth(&self, id: NodeId) -> usize {
        self.parent(id).map_or(0, |p| self.depth(p))
    }
}

/// Asks for transparent huge pages over a large arena; node access is
/// random, so 4 KiB pages thrash the TLB as the tree grows.
#[cfg(target_os = "linux")]
fn advise_huge<T>(v: &Vec<T>) {
    const HUGE: usize = 2 << 20;
    let start = v.as_ptr() as usize;
    let end = start + v.capacity() * std::mem::size_of::<T>();
    let lo = (start + HUGE - 1) & !(HUGE - 1);
    let hi = end & !(HUGE - 1);
    if hi > lo {
        // SAFETY: the range lies inside the vector's own allocation, and
        // MADV_HUGEPAGE is advisory only; it never changes the contents.
        unsafe {
            libc::madvise(lo as *mut libc::c_void, hi - lo, libc::MADV_HUGEPAGE);
        }
    }
}

#[cfg(not(target_os = "linux"))]
fn advise_huge<T>(_: &Vec<T>) {}
