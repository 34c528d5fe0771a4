//! Finite automata over the alphabet `{a, A, b, B}`.
//!
//! Two languages are built from streaming recognizers and then minimized:
//! the geodesic words and the short-lex normal forms. Both are prefix closed,
//! so after minimization every state except the sink accepts.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Write as _;
use std::hash::Hash;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{Base, Letter, Word};

/// A complete DFA. Letters index transitions through [`Letter::index`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    transitions: Vec<[usize; 4]>,
    accepting: Vec<bool>,
    start: usize,
}

impl Dfa {
    pub fn new(transitions: Vec<[usize; 4]>, accepting: Vec<bool>, start: usize) -> Dfa {
        assert_eq!(transitions.len(), accepting.len());
        assert!(start < transitions.len());
        assert!(transitions.iter().flatten().all(|&t| t < transitions.len()));
        Dfa {
            transitions,
            accepting,
            start,
        }
    }

    /// Breadth-first exploration of a recognizer. `step` returning `None`
    /// sends the word to a shared rejecting sink.
    pub fn explore<S, F, P>(start: S, step: F, accept: P) -> (Dfa, Vec<S>)
    where
        S: Clone + Eq + Hash,
        F: Fn(&S, Letter) -> Option<S>,
        P: Fn(&S) -> bool,
    {
        let mut states = vec![start.clone()];
        let mut index = HashMap::from([(start, 0usize)]);
        let mut transitions: Vec<[usize; 4]> = Vec::new();
        let mut sink = None;
        let mut i = 0;
        while i < states.len() {
            let mut row = [0; 4];
            for l in Letter::ALL {
                row[l.index()] = match step(&states[i], l) {
                    Some(t) => *index.entry(t.clone()).or_insert_with(|| {
                        states.push(t);
                        states.len() - 1
                    }),
                    None => *sink.get_or_insert(usize::MAX),
                };
            }
            transitions.push(row);
            i += 1;
        }
        let mut accepting: Vec<bool> = states.iter().map(&accept).collect();
        if sink.is_some() {
            let s = transitions.len();
            for row in &mut transitions {
                for t in row.iter_mut().filter(|t| **t == usize::MAX) {
                    *t = s;
                }
            }
            transitions.push([s; 4]);
            accepting.push(false);
        }
        (Dfa::new(transitions, accepting, 0), states)
    }

    pub fn len(&self) -> usize {
        self.transitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.transitions.is_empty()
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn next(&self, state: usize, l: Letter) -> usize {
        self.transitions[state][l.index()]
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting[state]
    }

    pub fn accepting_count(&self) -> usize {
        self.accepting.iter().filter(|&&a| a).count()
    }

    /// The rejecting state whose transitions all loop back to it, if any.
    pub fn sink(&self) -> Option<usize> {
        (0..self.len()).find(|&s| !self.accepting[s] && self.transitions[s].iter().all(|&t| t == s))
    }

    pub fn run(&self, w: &Word) -> usize {
        self.run_from(self.start, w)
    }

    pub fn run_from(&self, state: usize, w: &Word) -> usize {
        w.letters().iter().fold(state, |s, &l| self.next(s, l))
    }

    pub fn accepts(&self, w: &Word) -> bool {
        self.accepting[self.run(w)]
    }

    /// Moore partition refinement. States are renumbered in breadth-first
    /// order from the start state, so equal languages give equal automata.
    pub fn minimize(&self) -> Dfa {
        let reachable = self.bfs_order();
        let mut class: HashMap<usize, usize> = reachable
            .iter()
            .map(|&s| (s, usize::from(self.accepting[s])))
            .collect();
        let mut count = 0;
        loop {
            let mut signatures: HashMap<(usize, [usize; 4]), usize> = HashMap::new();
            let mut next = HashMap::new();
            for &s in &reachable {
                let sig = (class[&s], self.transitions[s].map(|t| class[&t]));
                let n = signatures.len();
                next.insert(s, *signatures.entry(sig).or_insert(n));
            }
            let n = signatures.len();
            class = next;
            if n == count {
                break;
            }
            count = n;
        }
        let mut representative = vec![usize::MAX; count];
        for &s in &reachable {
            let c = class[&s];
            if representative[c] == usize::MAX {
                representative[c] = s;
            }
        }
        let quotient = Dfa::new(
            representative
                .iter()
                .map(|&s| self.transitions[s].map(|t| class[&t]))
                .collect(),
            representative.iter().map(|&s| self.accepting[s]).collect(),
            class[&self.start],
        );
        quotient.renumbered()
    }

    fn bfs_order(&self) -> Vec<usize> {
        let mut seen = vec![false; self.len()];
        let mut order = vec![self.start];
        seen[self.start] = true;
        let mut i = 0;
        while i < order.len() {
            for t in self.transitions[order[i]] {
                if !seen[t] {
                    seen[t] = true;
                    order.push(t);
                }
            }
            i += 1;
        }
        order
    }

    fn renumbered(&self) -> Dfa {
        let order = self.bfs_order();
        let mut new_id = vec![usize::MAX; self.len()];
        for (i, &s) in order.iter().enumerate() {
            new_id[s] = i;
        }
        Dfa::new(
            order
                .iter()
                .map(|&s| self.transitions[s].map(|t| new_id[t]))
                .collect(),
            order.iter().map(|&s| self.accepting[s]).collect(),
            0,
        )
    }

    /// Number of accepted words of each length `0..=max_len`.
    pub fn count_words(&self, max_len: usize) -> Vec<BigUint> {
        let mut current = vec![BigUint::from(0u32); self.len()];
        current[self.start] = BigUint::from(1u32);
        let mut out = Vec::with_capacity(max_len + 1);
        for n in 0..=max_len {
            out.push(
                (0..self.len())
                    .filter(|&s| self.accepting[s])
                    .map(|s| &current[s])
                    .sum(),
            );
            if n == max_len {
                break;
            }
            let mut next = vec![BigUint::from(0u32); self.len()];
            for (s, count) in current.iter().enumerate() {
                for &t in &self.transitions[s] {
                    next[t] += count;
                }
            }
            current = next;
        }
        out
    }

    /// Shortest word, least in short-lex order, reaching each state.
    pub fn representatives(&self) -> Vec<Option<Word>> {
        let mut reps: Vec<Option<Vec<Letter>>> = vec![None; self.len()];
        reps[self.start] = Some(Vec::new());
        let mut queue = VecDeque::from([self.start]);
        while let Some(s) = queue.pop_front() {
            for l in Letter::ALL {
                let t = self.next(s, l);
                if reps[t].is_none() {
                    let mut word = reps[s].clone().expect("visited");
                    word.push(l);
                    reps[t] = Some(word);
                    queue.push_back(t);
                }
            }
        }
        reps.into_iter()
            .map(|r| r.map(Word::from_letters))
            .collect()
    }

    /// Shortest suffix on which exactly one of the two states accepts, or
    /// `None` when they are equivalent.
    pub fn separating_suffix(&self, p: usize, q: usize) -> Option<Word> {
        type Pair = (usize, usize);
        let mut parent: HashMap<Pair, Option<(Pair, Letter)>> = HashMap::new();
        parent.insert((p, q), None);
        let mut queue = VecDeque::from([(p, q)]);
        while let Some(pair) = queue.pop_front() {
            if self.accepting[pair.0] != self.accepting[pair.1] {
                let mut letters = Vec::new();
                let mut cur = pair;
                while let Some((prev, l)) = parent[&cur] {
                    letters.push(l);
                    cur = prev;
                }
                letters.reverse();
                return Some(Word::from_letters(letters));
            }
            for l in Letter::ALL {
                let t = (self.next(pair.0, l), self.next(pair.1, l));
                if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(t) {
                    e.insert(Some((pair, l)));
                    queue.push_back(t);
                }
            }
        }
        None
    }

    /// States that can still reach an accepting state.
    pub fn live_states(&self) -> Vec<usize> {
        let mut live: Vec<bool> = self.accepting.clone();
        let mut changed = true;
        while changed {
            changed = false;
            for s in 0..self.len() {
                if !live[s] && self.transitions[s].iter().any(|&t| live[t]) {
                    live[s] = true;
                    changed = true;
                }
            }
        }
        (0..self.len()).filter(|&s| live[s]).collect()
    }

    /// Letter counts between live states, indexed by position in
    /// [`live_states`](Self::live_states). Requires every live state to accept,
    /// which holds for prefix-closed languages.
    pub fn transfer_matrix(&self) -> Result<(Vec<usize>, Vec<Vec<u64>>)> {
        let live = self.live_states();
        if let Some(&s) = live.iter().find(|&&s| !self.accepting[s]) {
            return Err(Error::NonAcceptingState(s));
        }
        let pos: HashMap<usize, usize> = live.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let mut m = vec![vec![0u64; live.len()]; live.len()];
        for (i, &s) in live.iter().enumerate() {
            for t in self.transitions[s] {
                if let Some(&j) = pos.get(&t) {
                    m[i][j] += 1;
                }
            }
        }
        Ok((live, m))
    }

    /// Pretty-printed JSON with keys `states`, `start`, `accepting`,
    /// `transitions` (state → letter → state) and `sink`.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Export {
            states: usize,
            start: usize,
            accepting: Vec<usize>,
            transitions: BTreeMap<usize, BTreeMap<char, usize>>,
            sink: Option<usize>,
        }
        let export = Export {
            states: self.len(),
            start: self.start,
            accepting: (0..self.len()).filter(|&s| self.accepting[s]).collect(),
            transitions: (0..self.len())
                .map(|s| {
                    (
                        s,
                        Letter::ALL
                            .iter()
                            .map(|&l| (l.to_char(), self.next(s, l)))
                            .collect(),
                    )
                })
                .collect(),
            sink: self.sink(),
        };
        serde_json::to_string_pretty(&export).expect("plain data serializes")
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("digraph {name} {{\n  rankdir=LR;\n");
        for s in 0..self.len() {
            let shape = if self.accepting[s] {
                "doublecircle"
            } else {
                "circle"
            };
            let _ = writeln!(out, "  {s} [shape={shape}];");
        }
        let _ = writeln!(out, "  start [shape=point];\n  start -> {};", self.start);
        for s in 0..self.len() {
            for l in Letter::ALL {
                let _ = writeln!(out, "  {s} -> {} [label=\"{l}\"];", self.next(s, l));
            }
        }
        out.push_str("}\n");
        out
    }
}

/// What the geodesic recognizer remembers about the prefix read so far.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct GeodesicScan {
    pub previous: Option<Letter>,
    pub before_previous: Option<Letter>,
    pub positive_pair: bool,
    pub negative_pair: bool,
    pub positive_letter: bool,
    pub negative_letter: bool,
    pub positive_triple: bool,
    pub negative_triple: bool,
}

impl GeodesicScan {
    /// Reads one more letter; `None` once the word stops being geodesic.
    pub fn step(&self, l: Letter) -> Option<GeodesicScan> {
        if self.previous == Some(l.inverse()) {
            return None;
        }
        let mut next = *self;
        if let Some(p) = self.previous {
            if p.is_positive() == l.is_positive() && p.base() != l.base() {
                if l.is_positive() {
                    next.positive_pair = true;
                } else {
                    next.negative_pair = true;
                }
                if self.before_previous == Some(l) {
                    if l.is_positive() {
                        next.positive_triple = true;
                    } else {
                        next.negative_triple = true;
                    }
                }
            }
        }
        if l.is_positive() {
            next.positive_letter = true;
        } else {
            next.negative_letter = true;
        }
        next.before_previous = self.previous;
        next.previous = Some(l);
        let conflict = (next.positive_pair && next.negative_pair)
            || (next.positive_triple && next.negative_letter)
            || (next.negative_triple && next.positive_letter);
        (!conflict).then_some(next)
    }
}

/// Explored (unminimized) geodesic automaton with the scan state of each
/// non-sink state.
pub fn explore_geodesic() -> (Dfa, Vec<GeodesicScan>) {
    Dfa::explore(GeodesicScan::default(), |s, l| s.step(l), |_| true)
}

/// The minimal automaton of geodesic words.
pub fn build_geodesic_dfa() -> Dfa {
    explore_geodesic().0.minimize()
}

/// Streaming parser for short-lex normal forms: a leading `a`/`A` run, a middle
/// section over `{b, A}` (or `{B, a}`) starting with `b` (or `B`), and a tail of
/// same-sign syllables of length at least 2, the last of which may have length 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SlScan {
    Start,
    Lead {
        positive: bool,
    },
    Middle {
        positive: bool,
        previous: Letter,
    },
    Tail {
        positive: bool,
        previous: Letter,
        long: bool,
    },
}

impl SlScan {
    pub fn step(&self, l: Letter) -> Option<SlScan> {
        let middle = |l: Letter| SlScan::Middle {
            positive: l.is_positive(),
            previous: l,
        };
        match *self {
            SlScan::Start => Some(if l.base() == Base::A {
                SlScan::Lead {
                    positive: l.is_positive(),
                }
            } else {
                middle(l)
            }),
            SlScan::Lead { positive } => match l.base() {
                Base::A if l.is_positive() == positive => Some(*self),
                Base::A => None,
                Base::B => Some(middle(l)),
            },
            SlScan::Middle { positive, previous } => {
                if l == previous.inverse() {
                    None
                } else if (l.base() == Base::B) == (l.is_positive() == positive) {
                    Some(SlScan::Middle {
                        positive,
                        previous: l,
                    })
                } else if l.is_positive() == positive {
                    Some(SlScan::Tail {
                        positive,
                        previous: l,
                        long: false,
                    })
                } else {
                    None
                }
            }
            SlScan::Tail {
                positive,
                previous,
                long,
            } => {
                if l == previous {
                    Some(SlScan::Tail {
                        positive,
                        previous,
                        long: true,
                    })
                } else if long && l.is_positive() == positive {
                    Some(SlScan::Tail {
                        positive,
                        previous: l,
                        long: false,
                    })
                } else {
                    None
                }
            }
        }
    }
}

/// The minimal automaton of short-lex normal forms.
pub fn build_sl_dfa() -> Dfa {
    Dfa::explore(SlScan::Start, |s, l| s.step(l), |_| true)
        .0
        .minimize()
}
