//! Direct construction of the minimal compact suffix automaton of `Pal(u)`.
//!
//! States are the prefixes of `u` (identified here with their lengths), all
//! terminal, with the empty prefix initial. For every factorization
//! `u = x·y·a·z` where `y` does not contain the letter `a`, there is an edge
//! `x → xya` labelled `Pal(xy)⁻¹·Pal(xya)`. The label therefore depends only
//! on the target state `w` and equals `Pal(w⁻)⁻¹·Pal(w)`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::compact::{write_dot, CompactAutomaton, EdgeJson, GraphJson};
use crate::error::{Error, Result};
use crate::pal::{pal_word, PalPrefixes};
use crate::words::{Alphabet, Word};
use crate::StateId;

/// The compact suffix automaton of `Pal(u)`; state `i` is the prefix of `u`
/// of length `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PalCompactAutomaton {
    alphabet: Alphabet,
    directive: Word,
    prefixes: PalPrefixes,
    automaton: CompactAutomaton,
}

fn construct(u: &Word, prefixes: &PalPrefixes) -> CompactAutomaton {
    let letters = u.letters();
    let mut automaton = CompactAutomaton::new(0);
    for state in 0..=letters.len() {
        automaton.add_state(state);
        automaton
            .set_terminal(state, true)
            .expect("state was just added");
    }
    for target in 1..=letters.len() {
        let a = letters[target - 1];
        let label = step_label(prefixes, target);
        // Sources x = u[..j] with y = u[j..target-1] free of a.
        let mut j = target - 1;
        loop {
            automaton
                .add_edge(j, label.clone(), target)
                .expect("edges leaving a prefix start with distinct letters");
            if j == 0 || letters[j - 1] == a {
                break;
            }
            j -= 1;
        }
    }
    automaton
}

/// `Pal(w⁻)⁻¹·Pal(w)` for the prefix `w` of length `len`, as a prefix removal.
fn step_label(prefixes: &PalPrefixes, len: usize) -> Word {
    let longer = Word::from(prefixes.pal_of_prefix(len));
    let shorter = Word::from(prefixes.pal_of_prefix(len - 1));
    longer
        .strip_prefix(&shorter)
        .expect("Pal of a prefix is a prefix of Pal")
}

/// The minimal compact automaton of the suffixes of `Pal(u)`, built directly
/// from `u`.
pub fn compact_suffix_automaton(u: &Word) -> CompactAutomaton {
    construct(u, &PalPrefixes::new(u))
}

impl PalCompactAutomaton {
    pub fn build(alphabet: &Alphabet, u: &Word) -> Result<Self> {
        alphabet.check(u)?;
        let prefixes = PalPrefixes::new(u);
        let automaton = construct(u, &prefixes);
        Ok(Self {
            alphabet: alphabet.clone(),
            directive: u.clone(),
            prefixes,
            automaton,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn directive(&self) -> &Word {
        &self.directive
    }

    pub fn automaton(&self) -> &CompactAutomaton {
        &self.automaton
    }

    pub fn pal(&self) -> &Word {
        self.prefixes.pal()
    }

    pub fn prefixes(&self) -> &PalPrefixes {
        &self.prefixes
    }

    /// The state of the prefix `p` of the directive.
    pub fn state_of(&self, p: &Word) -> Option<StateId> {
        p.is_prefix_of(&self.directive).then_some(p.len())
    }

    /// Adds the state `ux`: with `u = h·u₂`, `u₂` the longest x-free suffix,
    /// every state `h·p` for `p` a prefix of `u₂` gets an edge to `ux`
    /// labelled `Pal(u)⁻¹·Pal(ux)`.
    pub fn extend(&self, x: char) -> Result<Self> {
        self.alphabet.check_letter(x)?;
        let u = &self.directive;
        let prefixes = self.prefixes.extended(u, x);
        let label = prefixes
            .pal()
            .strip_prefix(self.prefixes.pal())
            .expect("Pal(u) is a prefix of Pal(ux)");
        let h = u.iter().rposition(|&c| c == x).map_or(0, |j| j + 1);
        let new_state = u.len() + 1;
        let mut automaton = self.automaton.clone();
        automaton.add_state(new_state);
        automaton.set_terminal(new_state, true)?;
        for source in h..=u.len() {
            automaton.add_edge(source, label.clone(), new_state)?;
        }
        let mut directive = u.clone();
        directive.push(x);
        Ok(Self {
            alphabet: self.alphabet.clone(),
            directive,
            prefixes,
            automaton,
        })
    }

    /// Keeps the states that are prefixes of `p`.
    pub fn restrict(&self, p: &Word) -> Result<Self> {
        if !p.is_prefix_of(&self.directive) {
            return Err(Error::NotAPrefix {
                prefix: p.to_string(),
                word: self.directive.to_string(),
            });
        }
        let n = p.len();
        let mut automaton = CompactAutomaton::new(0);
        for state in 0..=n {
            automaton.add_state(state);
            automaton.set_terminal(state, true)?;
        }
        for (from, label, to) in self.automaton.edges() {
            if to <= n {
                automaton.add_edge(from, label.clone(), to)?;
            }
        }
        Ok(Self {
            alphabet: self.alphabet.clone(),
            directive: p.clone(),
            prefixes: self.prefixes.truncated(n),
            automaton,
        })
    }

    /// Number of paths from the initial state to each state.
    pub fn path_counts(&self) -> Vec<u64> {
        let n = self.directive.len();
        let mut counts = vec![0u64; n + 1];
        counts[0] = 1;
        // Every edge goes from a shorter prefix to a longer one.
        for state in 1..=n {
            counts[state] = self
                .automaton
                .incoming(state)
                .iter()
                .map(|&(from, _)| counts[from])
                .sum();
        }
        counts
    }

    /// Number of paths from the initial state to the state `u`.
    pub fn path_count_to_final(&self) -> u64 {
        self.path_counts()[self.directive.len()]
    }

    pub fn counting_graph(&self) -> CountingGraph {
        let mut edges: Vec<(StateId, usize, StateId)> = self
            .automaton
            .edges()
            .map(|(from, label, to)| (from, label.len(), to))
            .collect();
        edges.sort_unstable();
        CountingGraph {
            vertices: self.directive.len() + 1,
            edges,
            total: self.pal().len(),
        }
    }
}

/// `S_c(u)` over the given alphabet.
pub fn build_direct(alphabet: &Alphabet, u: &Word) -> Result<PalCompactAutomaton> {
    PalCompactAutomaton::build(alphabet, u)
}

fn spanning_alphabet(u: &Word) -> Alphabet {
    let letters: BTreeSet<char> = u.iter().copied().collect();
    // An empty directive still needs a nonempty alphabet; its letter is unused.
    Alphabet::new(letters).unwrap_or_else(|_| Alphabet::latin(1).expect("one letter"))
}

pub fn path_count_to_final(u: &Word) -> u64 {
    PalCompactAutomaton::build(&spanning_alphabet(u), u)
        .expect("alphabet spans the directive")
        .path_count_to_final()
}

/// `Σ_a p_a(u)`, where `p_a(u)` is the 1-based position of the last `a` in
/// `u`, or 0.
pub fn transition_count(u: &Word) -> usize {
    let mut last: HashMap<char, usize> = HashMap::new();
    for (i, &c) in u.iter().enumerate() {
        last.insert(c, i + 1);
    }
    last.values().sum()
}

/// `S_c(u)` with every label replaced by its length. Vertex `i` is the prefix
/// of `u` of length `i`; vertex 0 is the start.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountingGraph {
    pub vertices: usize,
    /// `(from, weight, to)`, sorted.
    pub edges: Vec<(StateId, usize, StateId)>,
    /// `|Pal(u)|`.
    pub total: usize,
}

/// A weight reached by the wrong number of paths from the start vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountingViolation {
    pub weight: usize,
    pub paths: u64,
}

impl fmt::Display for CountingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "weight {} is reached by {} paths",
            self.weight, self.paths
        )
    }
}

impl std::error::Error for CountingViolation {}

impl CountingGraph {
    pub fn start(&self) -> StateId {
        0
    }

    /// Number of paths from the start vertex with each total weight.
    pub fn weight_counts(&self) -> HashMap<usize, u64> {
        let mut reaching: Vec<HashMap<usize, u64>> = vec![HashMap::new(); self.vertices];
        reaching[0].insert(0, 1);
        let mut by_target: Vec<Vec<(StateId, usize)>> = vec![Vec::new(); self.vertices];
        for &(from, weight, to) in &self.edges {
            by_target[to].push((from, weight));
        }
        for target in 1..self.vertices {
            let mut here = HashMap::new();
            for &(from, weight) in &by_target[target] {
                for (&w, &n) in &reaching[from] {
                    *here.entry(w + weight).or_insert(0) += n;
                }
            }
            reaching[target] = here;
        }
        let mut totals = HashMap::new();
        for per_vertex in reaching {
            for (w, n) in per_vertex {
                *totals.entry(w).or_insert(0) += n;
            }
        }
        totals
    }

    /// Checks that every weight `0..=total` is reached by exactly one path
    /// and no other weight is reached.
    pub fn verify_counting(&self) -> Result<(), CountingViolation> {
        let counts = self.weight_counts();
        for weight in 0..=self.total {
            let paths = counts.get(&weight).copied().unwrap_or(0);
            if paths != 1 {
                return Err(CountingViolation { weight, paths });
            }
        }
        if let Some((&weight, &paths)) = counts.iter().find(|&(&w, _)| w > self.total) {
            return Err(CountingViolation { weight, paths });
        }
        Ok(())
    }

    pub fn to_json_graph(&self) -> GraphJson<usize> {
        GraphJson {
            states: (0..self.vertices).collect(),
            initial: 0,
            terminals: (0..self.vertices).collect(),
            edges: self
                .edges
                .iter()
                .map(|&(from, label, to)| EdgeJson { from, label, to })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_graph()).expect("graph serializes")
    }

    pub fn to_dot(&self) -> String {
        write_dot(&self.to_json_graph(), usize::to_string)
    }
}

pub fn counting_graph(u: &Word) -> CountingGraph {
    PalCompactAutomaton::build(&spanning_alphabet(u), u)
        .expect("alphabet spans the directive")
        .counting_graph()
}

/// Fibonacci numbers with `F₁ = F₂ = 1`.
pub fn fibonacci(n: usize) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

/// Whether `|Pal((ab)ⁿ)| = F_{2n+3} − 2`, for `1 ≤ n ≤ 12`.
pub fn fibonacci_length_check(n: usize) -> Result<bool> {
    if !(1..=12).contains(&n) {
        return Err(Error::OutOfBounds {
            name: "n",
            value: n,
            min: 1,
            max: 12,
        });
    }
    let directive: Word = "ab".repeat(n).as_str().into();
    Ok(pal_word(&directive).len() as u64 == fibonacci(2 * n + 3) - 2)
}
