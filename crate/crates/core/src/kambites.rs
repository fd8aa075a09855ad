//! ReplacePrefix, NormalForm and the uniform word problem for C(4)
//! presentations.
//!
//! Both algorithms only need `WpPrefix(u, v, p)`: "are `u` and `v` equivalent,
//! and is the piece `p` a possible prefix of `u`?". That question is answered
//! by a [`WordProblemBackend`]; the default one enumerates classes with the
//! rewrite oracle.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::oracle::{RewriteClosure, RewriteOracle};
use crate::overlap::{PieceAnalysis, PieceDecomposition};
use crate::presentation::{ComplementClasses, Presentation};
use crate::scanner::Scanner;
use crate::word::{Symbol, Word};

pub trait WordProblemBackend {
    /// `Ok(true)` iff `u ≡ v` and `p` is a possible prefix of `u`.
    fn wp_prefix(&self, u: &[Symbol], v: &[Symbol], p: &[Symbol]) -> Result<bool>;

    fn equivalent(&self, u: &[Symbol], v: &[Symbol]) -> Result<bool> {
        self.wp_prefix(u, v, &[])
    }
}

/// Answers `WpPrefix` by enumerating the class of `u`. Classes are cached by
/// seed, so repeated questions about the same word are cheap.
#[derive(Debug)]
pub struct OracleBackend {
    oracle: RewriteOracle,
    cache: Mutex<HashMap<Word, Arc<RewriteClosure>>>,
}

impl OracleBackend {
    pub fn new(p: &Presentation) -> Self {
        Self::from_oracle(RewriteOracle::new(p))
    }

    pub fn with_cap(p: &Presentation, cap: usize) -> Self {
        Self::from_oracle(RewriteOracle::with_cap(p, cap))
    }

    pub fn from_oracle(oracle: RewriteOracle) -> Self {
        OracleBackend {
            oracle,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn oracle(&self) -> &RewriteOracle {
        &self.oracle
    }

    /// The complete class of `w`, or `Undecided` if it hit the cap.
    pub fn class(&self, w: &[Symbol]) -> Result<Arc<RewriteClosure>> {
        if let Some(c) = self.cache.lock().expect("cache poisoned").get(w) {
            return Ok(Arc::clone(c));
        }
        let c = self.oracle.enumerate_class(w);
        if c.truncated {
            return Err(Error::Undecided {
                cap: self.oracle.cap(),
            });
        }
        let c = Arc::new(c);
        self.cache
            .lock()
            .expect("cache poisoned")
            .insert(Word::from(w), Arc::clone(&c));
        Ok(c)
    }

    pub fn clear_cache(&self) {
        self.cache.lock().expect("cache poisoned").clear();
    }
}

impl WordProblemBackend for OracleBackend {
    fn wp_prefix(&self, u: &[Symbol], v: &[Symbol], p: &[Symbol]) -> Result<bool> {
        if u == v && u.starts_with(p) {
            return Ok(true);
        }
        let class = self.class(u)?;
        Ok(class.contains(v) && class.members.iter().any(|m| m.starts_with(p)))
    }
}

/// What a complement switch in NormalForm is confirmed against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ConfirmCheck {
    /// `WpPrefix(w₀, candidate, ε)`.
    #[default]
    AgainstInput,
    /// `WpPrefix(v·w, candidate, ε)` with the current state. Same answer,
    /// since `v·w ≡ w₀` throughout, but the class of a shorter word may be
    /// enumerated.
    AgainstState,
}

/// When NormalForm may try the complement-switch branch, which fires for
/// `w = Z_r·w′` with `w′` active for some complement's `Z̄_r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OverlapGuard {
    /// Only when `w′` is not also `Z_r`-active. If it is, a relation word
    /// really starts inside `Z_r`, and the clean overlap prefix branch
    /// handles it. Without this guard the branch can match that same
    /// occurrence through a complement `Z̄_r` sharing a suffix with `Z_r`,
    /// and then commit `Z_r` unchanged, which misses the least word.
    #[default]
    RealOverlapFirst,
    /// No extra condition.
    Unguarded,
}

/// Result of a complement switch: what to append to `v`, the new `w`, and
/// the relation word now in front of `w`.
struct Switch {
    dv: Vec<Symbol>,
    w: Vec<Symbol>,
    u: usize,
}

/// `(u, v, w)` at a loop boundary of NormalForm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalFormState {
    /// Relation word id committed last, if any.
    pub u: Option<usize>,
    pub v: Word,
    pub w: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalFormTrace {
    pub normal_form: Word,
    pub iterations: usize,
    /// Largest `|v·w|` seen at any loop boundary.
    pub max_state_len: usize,
    /// States after each iteration, starting with `(ε, ε, w₀)`.
    pub states: Vec<NormalFormState>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Equivalent,
    NotEquivalent,
    NotC4,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Equivalent => "equivalent",
            Verdict::NotEquivalent => "not-equivalent",
            Verdict::NotC4 => "not-C(4)",
        })
    }
}

pub struct Kambites<B = OracleBackend> {
    presentation: Presentation,
    scanner: Scanner,
    classes: ComplementClasses,
    backend: B,
    guard: OverlapGuard,
    confirm: ConfirmCheck,
}

impl Kambites<OracleBackend> {
    pub fn new(p: &Presentation) -> Result<Self> {
        Self::with_backend(p, OracleBackend::new(p))
    }
}

impl<B: WordProblemBackend> Kambites<B> {
    /// Fails with `NotC4` unless the presentation satisfies C(4).
    pub fn with_backend(p: &Presentation, backend: B) -> Result<Self> {
        let analysis = PieceAnalysis::new(p)?;
        if !analysis.is_c4() {
            return Err(Error::NotC4);
        }
        Ok(Kambites {
            presentation: p.clone(),
            scanner: Scanner::from_analysis(analysis, p.delta()),
            classes: p.complement_classes(),
            backend,
            guard: OverlapGuard::default(),
            confirm: ConfirmCheck::default(),
        })
    }

    pub fn with_overlap_guard(mut self, guard: OverlapGuard) -> Self {
        self.guard = guard;
        self
    }

    pub fn with_confirm_check(mut self, check: ConfirmCheck) -> Self {
        self.confirm = check;
        self
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn scanner(&self) -> &Scanner {
        &self.scanner
    }

    pub fn backend(&self) -> &B {
        &self.backend
    }

    fn d(&self) -> &PieceDecomposition {
        self.scanner.decomposition()
    }

    pub fn wp_prefix(&self, u: &[Symbol], v: &[Symbol], p: &[Symbol]) -> Result<bool> {
        self.backend.wp_prefix(u, v, p)
    }

    /// A word equivalent to `w` that starts with the piece `p`.
    pub fn replace_prefix(&self, w: &[Symbol], p: &[Symbol]) -> Result<Word> {
        Ok(self.replace_prefix_with_depth(w, p)?.0)
    }

    /// [`Self::replace_prefix`] plus the number of recursive calls made.
    ///
    /// The caller guarantees `WpPrefix(w, w, p)`; when that fails the search
    /// for a complement comes up empty and `NoQualifyingComplement` is
    /// returned.
    pub fn replace_prefix_with_depth(&self, w: &[Symbol], p: &[Symbol]) -> Result<(Word, usize)> {
        struct Frame<'a> {
            a: &'a [Symbol],
            word_id: usize,
            target: &'a [Symbol],
        }
        let d = self.d();
        let mut frames = Vec::new();
        let mut rest = w;
        let mut target = p;
        while !rest.starts_with(target) {
            let cop = self.scanner.clean_overlap_prefix(rest).ok_or_else(|| {
                Error::NoQualifyingComplement(format!(
                    "{} has no relation prefix",
                    self.presentation.render(rest)
                ))
            })?;
            let r = cop.hit.word_id;
            frames.push(Frame {
                a: &rest[..cop.hit.a_len],
                word_id: r,
                target,
            });
            rest = &rest[cop.hit.end..];
            target = d.z(r);
        }
        // Built back to front so each step only touches its own symbols.
        let mut rev: Vec<Symbol> = rest.iter().rev().copied().collect();
        for f in frames.iter().rev() {
            let z_len = d.z_len(f.word_id);
            rev.truncate(rev.len() - z_len);
            let c = self
                .classes
                .proper_complements(f.word_id)
                .find(|&c| {
                    let x = d.x(c);
                    let n = f.target.len();
                    n <= f.a.len() + x.len()
                        && f.a
                            .iter()
                            .chain(x)
                            .take(n)
                            .copied()
                            .eq(f.target.iter().copied())
                })
                .ok_or_else(|| {
                    Error::NoQualifyingComplement(format!(
                        "no complement of {} puts {} first",
                        self.presentation.render(d.word(f.word_id)),
                        self.presentation.render(f.target)
                    ))
                })?;
            rev.extend(d.word(c).iter().rev());
            rev.extend(f.a.iter().rev());
        }
        rev.reverse();
        Ok((Word::from(rev), frames.len()))
    }

    /// The lexicographically least word equivalent to `w0`.
    pub fn normal_form(&self, w0: &[Symbol]) -> Result<Word> {
        Ok(self.run(w0, false)?.normal_form)
    }

    pub fn normal_form_traced(&self, w0: &[Symbol]) -> Result<NormalFormTrace> {
        self.run(w0, true)
    }

    fn run(&self, w0: &[Symbol], keep_states: bool) -> Result<NormalFormTrace> {
        let d = self.d();
        let mut u: Option<usize> = None;
        let mut v: Vec<Symbol> = Vec::new();
        let mut w: Vec<Symbol> = w0.to_vec();
        let mut trace = NormalFormTrace {
            normal_form: Word::empty(),
            iterations: 0,
            max_state_len: w0.len(),
            states: Vec::new(),
        };
        if keep_states {
            trace.states.push(NormalFormState {
                u,
                v: Word::empty(),
                w: Word::from(w0),
            });
        }
        while !w.is_empty() {
            trace.iterations += 1;
            if let Some(step) = self.switch_complement(u, &v, &w, w0)? {
                v.extend_from_slice(&step.dv);
                w = step.w;
                u = Some(step.u);
            } else if let Some(cop) = self.scanner.clean_overlap_prefix(&w) {
                let r = cop.hit.word_id;
                let rest = &w[cop.hit.end..];
                if !self.backend.wp_prefix(rest, rest, d.z(r))? {
                    u = None;
                    v.extend_from_slice(&w[..cop.hit.end]);
                    w.drain(..cop.hit.end);
                } else {
                    let c = self.classes.complements(r)[0];
                    let replaced = self.replace_prefix(rest, d.z(r))?;
                    v.extend_from_slice(&w[..cop.hit.a_len]);
                    v.extend_from_slice(d.xy(c));
                    let mut nw = d.z(c).to_vec();
                    nw.extend_from_slice(&replaced[d.z_len(r)..]);
                    w = nw;
                    u = Some(c);
                }
            } else {
                v.append(&mut w);
            }
            trace.max_state_len = trace.max_state_len.max(v.len() + w.len());
            if keep_states {
                trace.states.push(NormalFormState {
                    u,
                    v: Word::from(v.as_slice()),
                    w: Word::from(w.as_slice()),
                });
            }
        }
        trace.normal_form = Word::from(v);
        Ok(trace)
    }

    /// The branch for `w = Z_r·w′` where `w′` is `Z̄_r`-active for a proper
    /// complement `r̄` of the last committed word `r`.
    fn switch_complement(
        &self,
        u: Option<usize>,
        v: &[Symbol],
        w: &[Symbol],
        w0: &[Symbol],
    ) -> Result<Option<Switch>> {
        let d = self.d();
        let Some(r) = u else { return Ok(None) };
        let z_r = d.z(r);
        if !w.starts_with(z_r) {
            return Ok(None);
        }
        let w1 = &w[z_r.len()..];
        if self.guard == OverlapGuard::RealOverlapFirst && self.scanner.is_p_active(w1, z_r)? {
            return Ok(None);
        }
        let mut tried: Vec<&[Symbol]> = Vec::new();
        for r_bar in self.classes.proper_complements(r) {
            let z_bar = d.z(r_bar);
            if z_bar == z_r || tried.contains(&z_bar) {
                continue;
            }
            tried.push(z_bar);
            let Some(hit) = self.scanner.p_active_hit(w1, z_bar)? else {
                continue;
            };
            let a = &z_bar[hit.a_len..];
            let s = hit.word_id;
            if a.len() > d.x_len(s) {
                continue;
            }
            let w2 = &w1[hit.end - z_bar.len()..];
            if !self.backend.wp_prefix(w2, w2, d.z(s))? {
                continue;
            }
            let replaced = self.replace_prefix(w2, d.z(s))?;
            let t = &replaced[d.z_len(s)..];

            // The least proper complement of s with prefix a, if it is less
            // than s.
            let s_bar = self
                .classes
                .proper_complements(s)
                .find(|&c| d.word(c).starts_with(a))
                .filter(|&c| d.word(c) < d.word(s) && a.len() <= d.x_len(c));

            if let Some(c) = s_bar {
                let b = &d.x(c)[a.len()..];
                let dv = Word::concat(&[z_r, b, d.y(c)]);
                let candidate = Word::concat(&[v, &dv, d.z(c), t]);
                let confirmed = match self.confirm {
                    ConfirmCheck::AgainstInput => self.backend.wp_prefix(w0, &candidate, &[])?,
                    ConfirmCheck::AgainstState => {
                        let current = Word::concat(&[v, w]);
                        self.backend.wp_prefix(&current, &candidate, &[])?
                    }
                };
                if confirmed {
                    let w = Word::concat(&[d.z(c), t]).into_vec();
                    return Ok(Some(Switch {
                        dv: dv.into_vec(),
                        w,
                        u: c,
                    }));
                }
            }
            let x2 = &d.x(s)[a.len()..];
            let dv = Word::concat(&[z_r, x2, d.y(s)]).into_vec();
            return Ok(Some(Switch {
                dv,
                w: replaced.into_vec(),
                u: s,
            }));
        }
        Ok(None)
    }

    pub fn equivalent(&self, u: &[Symbol], v: &[Symbol]) -> Result<bool> {
        Ok(self.normal_form(u)? == self.normal_form(v)?)
    }
}

/// The uniform word problem: checks C(4) first, then compares normal forms.
pub fn uniform_word_problem(p: &Presentation, u: &[Symbol], v: &[Symbol]) -> Result<Verdict> {
    uniform_word_problem_with_cap(p, u, v, crate::oracle::DEFAULT_CAP)
}

pub fn uniform_word_problem_with_cap(
    p: &Presentation,
    u: &[Symbol],
    v: &[Symbol],
    cap: usize,
) -> Result<Verdict> {
    let k = match Kambites::with_backend(p, OracleBackend::with_cap(p, cap)) {
        Ok(k) => k,
        Err(Error::NotC4 | Error::EmptyRelationWord { .. }) => return Ok(Verdict::NotC4),
        Err(e) => return Err(e),
    };
    Ok(if k.equivalent(u, v)? {
        Verdict::Equivalent
    } else {
        Verdict::NotEquivalent
    })
}
