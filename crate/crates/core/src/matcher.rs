//! Aho-Corasick automaton over symbol ids.

use std::collections::VecDeque;

use crate::word::Symbol;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Match {
    pub pattern: usize,
    pub start: usize,
    pub end: usize,
}

#[derive(Debug, Clone)]
struct State {
    next: Vec<(Symbol, u32)>,
    fail: u32,
    /// Patterns ending here (own or inherited through `fail`), longest first.
    out: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct Matcher {
    states: Vec<State>,
    pattern_len: Vec<usize>,
}

impl Matcher {
    /// Empty patterns are ignored.
    pub fn new<P: AsRef<[Symbol]>>(patterns: &[P]) -> Self {
        let mut states = vec![State {
            next: Vec::new(),
            fail: 0,
            out: Vec::new(),
        }];
        for (id, p) in patterns.iter().enumerate() {
            let p = p.as_ref();
            if p.is_empty() {
                continue;
            }
            let mut cur = 0usize;
            for &s in p {
                cur = match goto(&states[cur], s) {
                    Some(n) => n,
                    None => {
                        states.push(State {
                            next: Vec::new(),
                            fail: 0,
                            out: Vec::new(),
                        });
                        let n = states.len() - 1;
                        let next = &mut states[cur].next;
                        let i = next.partition_point(|&(k, _)| k < s);
                        next.insert(i, (s, n as u32));
                        n
                    }
                };
            }
            states[cur].out.push(id);
        }
        let mut queue: VecDeque<usize> = states[0].next.iter().map(|&(_, n)| n as usize).collect();
        while let Some(u) = queue.pop_front() {
            for k in 0..states[u].next.len() {
                let (s, v) = states[u].next[k];
                let v = v as usize;
                let mut f = states[u].fail as usize;
                let fail = loop {
                    if let Some(n) = goto(&states[f], s) {
                        break n;
                    }
                    if f == 0 {
                        break 0;
                    }
                    f = states[f].fail as usize;
                };
                states[v].fail = fail as u32;
                let inherited = states[fail].out.clone();
                states[v].out.extend(inherited);
                queue.push_back(v);
            }
        }
        let pattern_len: Vec<usize> = patterns.iter().map(|p| p.as_ref().len()).collect();
        for st in &mut states {
            st.out
                .sort_by(|&a, &b| pattern_len[b].cmp(&pattern_len[a]).then(a.cmp(&b)));
            st.out.dedup();
        }
        Matcher {
            states,
            pattern_len,
        }
    }

    pub fn pattern_len(&self, id: usize) -> usize {
        self.pattern_len[id]
    }

    /// All occurrences in order of end position; for a shared end, longest
    /// pattern first.
    pub fn find_iter<'a>(&'a self, text: &'a [Symbol]) -> impl Iterator<Item = Match> + 'a {
        let mut state = 0usize;
        text.iter().enumerate().flat_map(move |(i, &s)| {
            state = self.step(state, s);
            self.states[state].out.iter().map(move |&p| Match {
                pattern: p,
                start: i + 1 - self.pattern_len[p],
                end: i + 1,
            })
        })
    }

    fn step(&self, mut state: usize, s: Symbol) -> usize {
        loop {
            if let Some(n) = goto(&self.states[state], s) {
                return n;
            }
            if state == 0 {
                return 0;
            }
            state = self.states[state].fail as usize;
        }
    }
}

fn goto(st: &State, s: Symbol) -> Option<usize> {
    st.next
        .binary_search_by_key(&s, |&(k, _)| k)
        .ok()
        .map(|i| st.next[i].1 as usize)
}
