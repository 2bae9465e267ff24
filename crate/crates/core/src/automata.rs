//! Minimal deterministic automata of finite languages, built from residuals,
//! and suffix automata.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::compact::CompactAutomaton;
use crate::error::{Error, Result};
use crate::pal::PalPrefixes;
use crate::residual::{contains_empty, derivative, first_letters, language_residual, Residual};
use crate::words::{suffixes, Word};
use crate::StateId;

/// A deterministic automaton over letters. State `0` is initial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    transitions: Vec<BTreeMap<char, StateId>>,
    terminals: Vec<bool>,
}

impl Dfa {
    pub fn initial(&self) -> StateId {
        0
    }

    pub fn num_states(&self) -> usize {
        self.transitions.len()
    }

    pub fn num_transitions(&self) -> usize {
        self.transitions.iter().map(BTreeMap::len).sum()
    }

    pub fn is_terminal(&self, state: StateId) -> bool {
        self.terminals[state]
    }

    pub fn terminals(&self) -> BTreeSet<StateId> {
        (0..self.num_states())
            .filter(|&q| self.terminals[q])
            .collect()
    }

    pub fn successor(&self, state: StateId, letter: char) -> Option<StateId> {
        self.transitions[state].get(&letter).copied()
    }

    pub fn transitions_from(&self, state: StateId) -> &BTreeMap<char, StateId> {
        &self.transitions[state]
    }

    /// All transitions as `(source, letter, target)`.
    pub fn edges(&self) -> impl Iterator<Item = (StateId, char, StateId)> + '_ {
        self.transitions
            .iter()
            .enumerate()
            .flat_map(|(p, out)| out.iter().map(move |(&a, &q)| (p, a, q)))
    }

    /// `1·w`, the state reached from the initial state by `w`.
    pub fn run(&self, word: &[char]) -> Option<StateId> {
        word.iter()
            .try_fold(self.initial(), |q, &a| self.successor(q, a))
    }

    pub fn accepts(&self, word: &[char]) -> bool {
        self.run(word).is_some_and(|q| self.is_terminal(q))
    }

    /// Words accepted from `state`; fails on cycles.
    pub fn right_language(&self, state: StateId) -> Result<BTreeSet<Word>> {
        fn visit(
            dfa: &Dfa,
            state: StateId,
            prefix: &mut Vec<char>,
            depth: usize,
            language: &mut BTreeSet<Word>,
        ) -> Result<()> {
            if depth > dfa.num_states() {
                return Err(Error::CycleDetected);
            }
            if dfa.is_terminal(state) {
                language.insert(Word::from(prefix.as_slice()));
            }
            for (&a, &q) in dfa.transitions_from(state) {
                prefix.push(a);
                visit(dfa, q, prefix, depth + 1, language)?;
                prefix.pop();
            }
            Ok(())
        }
        let mut language = BTreeSet::new();
        visit(self, state, &mut Vec::new(), 0, &mut language)?;
        Ok(language)
    }

    pub fn language(&self) -> Result<BTreeSet<Word>> {
        self.right_language(self.initial())
    }

    /// For each state, the letters on its incoming transitions.
    pub fn incoming_letters(&self) -> Vec<BTreeSet<char>> {
        let mut incoming = vec![BTreeSet::new(); self.num_states()];
        for (_, a, q) in self.edges() {
            incoming[q].insert(a);
        }
        incoming
    }

    /// The same automaton viewed as a compact automaton with one-letter labels.
    pub fn to_compact(&self) -> CompactAutomaton {
        let mut compact = CompactAutomaton::new(self.initial());
        for q in 0..self.num_states() {
            compact.add_state(q);
            if self.terminals[q] {
                compact.set_terminal(q, true).expect("state exists");
            }
        }
        for (p, a, q) in self.edges() {
            compact
                .add_edge(p, Word::new(vec![a]), q)
                .expect("letter transitions are deterministic");
        }
        compact
    }
}

/// The minimal automaton of a finite language: one state per nonempty
/// residual, numbered breadth-first with letters in increasing order.
///
/// The empty language yields a single non-terminal state.
pub fn minimal_dfa(language: &BTreeSet<Word>) -> Dfa {
    let root = language_residual(language);
    let mut ids: HashMap<Residual<'_>, StateId> = HashMap::from([(root.clone(), 0)]);
    let mut residuals = vec![root];
    let mut dfa = Dfa {
        transitions: Vec::new(),
        terminals: Vec::new(),
    };
    let mut next = 0;
    while next < residuals.len() {
        let state = next;
        next += 1;
        let mut out = BTreeMap::new();
        for a in first_letters(&residuals[state]) {
            let target = derivative(&residuals[state], a);
            let id = *ids.entry(target.clone()).or_insert_with(|| {
                residuals.push(target);
                residuals.len() - 1
            });
            out.insert(a, id);
        }
        dfa.terminals.push(contains_empty(&residuals[state]));
        dfa.transitions.push(out);
    }
    dfa
}

/// The minimal automaton of the set of suffixes of `w`.
pub fn suffix_automaton(w: &Word) -> Dfa {
    minimal_dfa(&suffixes(w))
}

/// Outcome of checking the structure of the suffix automaton of `Pal(u)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuffixTheoremReport {
    pub directive: Word,
    pub pal: Word,
    pub states: usize,
    pub terminals: BTreeSet<StateId>,
    /// The first violated property, if any.
    pub failure: Option<String>,
}

impl SuffixTheoremReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Builds the suffix automaton of `Pal(u)` and checks that
/// (i) it has `|Pal(u)| + 1` states, reached bijectively by the prefixes,
/// (ii) its terminal states are those reached by palindromic prefixes, and
/// (iii) all edges entering a state carry the same letter.
pub fn verify_pal_suffix_theorem(u: &Word) -> SuffixTheoremReport {
    let pal = PalPrefixes::new(u).into_pal();
    let dfa = suffix_automaton(&pal);
    let mut report = SuffixTheoremReport {
        directive: u.clone(),
        pal: pal.clone(),
        states: dfa.num_states(),
        terminals: dfa.terminals(),
        failure: None,
    };
    report.failure = pal_suffix_failure(&pal, &dfa);
    report
}

fn pal_suffix_failure(pal: &Word, dfa: &Dfa) -> Option<String> {
    let expected = pal.len() + 1;
    if dfa.num_states() != expected {
        return Some(format!("{} states, expected {expected}", dfa.num_states()));
    }
    let mut reached = BTreeSet::new();
    let mut palindromic = BTreeSet::new();
    for len in 0..=pal.len() {
        let prefix = &pal.letters()[..len];
        let Some(q) = dfa.run(prefix) else {
            return Some(format!("prefix of length {len} is not read"));
        };
        if !reached.insert(q) {
            return Some(format!(
                "prefix of length {len} reaches an already reached state {q}"
            ));
        }
        if prefix.iter().eq(prefix.iter().rev()) {
            palindromic.insert(q);
        }
    }
    if palindromic != dfa.terminals() {
        return Some(format!(
            "terminal states {:?} differ from palindromic prefix states {:?}",
            dfa.terminals(),
            palindromic
        ));
    }
    if let Some(q) = dfa
        .incoming_letters()
        .iter()
        .position(|letters| letters.len() > 1)
    {
        return Some(format!(
            "state {q} has incoming edges with different letters"
        ));
    }
    None
}
