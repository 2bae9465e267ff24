//! Compact automata: deterministic automata whose edges carry nonempty words.
//!
//! A state is *special* when it is initial, terminal, or has at least two
//! outgoing edges. A *special path* joins two special states and passes only
//! through non-special ones. Suppressing a non-special state `q` with single
//! outgoing edge `q -v-> r` rewires every `p -u-> q` to `p -uv-> r`; this is an
//! elementary reduction and it preserves the language. Iterating it from any
//! automaton whose states have pairwise distinct residuals (the minimal
//! automaton, for instance) ends at the minimal compact automaton, whose
//! states are the special residuals of the language.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::residual::{
    contains_empty, derivative, first_letters, language_residual, quotient, Residual,
};
use crate::words::Word;
use crate::StateId;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Edge {
    pub label: Word,
    pub target: StateId,
}

/// A deterministic compact automaton with a single initial state.
///
/// Outgoing edges are indexed by the first letter of their label, which
/// enforces determinism structurally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompactAutomaton {
    states: BTreeSet<StateId>,
    initial: StateId,
    terminals: BTreeSet<StateId>,
    edges: BTreeMap<StateId, BTreeMap<char, Edge>>,
}

/// A special path `(origin, label, end)`.
pub type SpecialPath = (StateId, Word, StateId);

impl CompactAutomaton {
    /// An automaton with the single, non-terminal state `initial`.
    pub fn new(initial: StateId) -> Self {
        Self {
            states: BTreeSet::from([initial]),
            initial,
            terminals: BTreeSet::new(),
            edges: BTreeMap::new(),
        }
    }

    pub fn add_state(&mut self, state: StateId) -> bool {
        self.states.insert(state)
    }

    pub fn set_terminal(&mut self, state: StateId, terminal: bool) -> Result<()> {
        self.check_state(state)?;
        if terminal {
            self.terminals.insert(state);
        } else {
            self.terminals.remove(&state);
        }
        Ok(())
    }

    pub fn add_edge(&mut self, from: StateId, label: Word, to: StateId) -> Result<()> {
        self.check_state(from)?;
        self.check_state(to)?;
        let first = label.first().ok_or(Error::EmptyLabel)?;
        let out = self.edges.entry(from).or_default();
        if out.contains_key(&first) {
            return Err(Error::Nondeterministic {
                state: from,
                letter: first,
            });
        }
        out.insert(first, Edge { label, target: to });
        Ok(())
    }

    fn check_state(&self, state: StateId) -> Result<()> {
        if self.states.contains(&state) {
            Ok(())
        } else {
            Err(Error::UnknownState(state))
        }
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn states(&self) -> &BTreeSet<StateId> {
        &self.states
    }

    pub fn terminals(&self) -> &BTreeSet<StateId> {
        &self.terminals
    }

    pub fn is_terminal(&self, state: StateId) -> bool {
        self.terminals.contains(&state)
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.values().map(BTreeMap::len).sum()
    }

    /// Outgoing edges of `state`, ordered by first letter.
    pub fn outgoing(&self, state: StateId) -> impl Iterator<Item = &Edge> {
        self.edges
            .get(&state)
            .into_iter()
            .flat_map(|out| out.values())
    }

    pub fn out_degree(&self, state: StateId) -> usize {
        self.edges.get(&state).map_or(0, BTreeMap::len)
    }

    /// All edges as `(source, label, target)`.
    pub fn edges(&self) -> impl Iterator<Item = (StateId, &Word, StateId)> {
        self.edges
            .iter()
            .flat_map(|(&from, out)| out.values().map(move |e| (from, &e.label, e.target)))
    }

    pub fn incoming(&self, state: StateId) -> Vec<(StateId, &Word)> {
        self.edges()
            .filter(|&(_, _, to)| to == state)
            .map(|(from, label, _)| (from, label))
            .collect()
    }

    /// The state reached by reading exactly `word` from the initial state.
    pub fn read(&self, word: &[char]) -> Option<StateId> {
        let mut state = self.initial;
        let mut rest = word;
        while let Some(&first) = rest.first() {
            let edge = self.edges.get(&state)?.get(&first)?;
            rest = rest.strip_prefix(edge.label.letters())?;
            state = edge.target;
        }
        Some(state)
    }

    pub fn is_special(&self, state: StateId) -> bool {
        state == self.initial || self.is_terminal(state) || self.out_degree(state) >= 2
    }

    pub fn special_states(&self) -> BTreeSet<StateId> {
        self.states
            .iter()
            .copied()
            .filter(|&q| self.is_special(q))
            .collect()
    }

    /// Every path between special states whose inner states are non-special.
    pub fn special_paths(&self) -> Result<BTreeSet<SpecialPath>> {
        let mut paths = BTreeSet::new();
        for origin in self.special_states() {
            for edge in self.outgoing(origin) {
                let mut label = edge.label.clone();
                let mut end = edge.target;
                let mut steps = 0;
                while !self.is_special(end) {
                    let next = self.outgoing(end).next().ok_or(Error::NotTrim)?;
                    label.extend_from(next.label.letters());
                    end = next.target;
                    steps += 1;
                    if steps > self.states.len() {
                        return Err(Error::CycleDetected);
                    }
                }
                paths.insert((origin, label, end));
            }
        }
        Ok(paths)
    }

    /// Suppresses the non-special state `q`.
    pub fn elementary_reduction(&self, q: StateId) -> Result<CompactAutomaton> {
        self.check_state(q)?;
        if self.is_special(q) {
            return Err(Error::SpecialState(q));
        }
        let mut out = self.outgoing(q);
        let (Some(exit), None) = (out.next(), out.next()) else {
            return Err(Error::NotReducible(q));
        };
        if exit.target == q {
            return Err(Error::NotReducible(q));
        }
        let mut reduced = self.clone();
        reduced.states.remove(&q);
        reduced.edges.remove(&q);
        for out in reduced.edges.values_mut() {
            for edge in out.values_mut().filter(|e| e.target == q) {
                edge.label.extend_from(exit.label.letters());
                edge.target = exit.target;
            }
        }
        Ok(reduced)
    }

    /// States in topological order, or `None` if the graph has a cycle.
    pub fn topological_order(&self) -> Option<Vec<StateId>> {
        let mut indegree: BTreeMap<StateId, usize> = self.states.iter().map(|&q| (q, 0)).collect();
        for (_, _, to) in self.edges() {
            *indegree.get_mut(&to).unwrap() += 1;
        }
        let mut ready: VecDeque<StateId> = indegree
            .iter()
            .filter(|&(_, &d)| d == 0)
            .map(|(&q, _)| q)
            .collect();
        let mut order = Vec::with_capacity(self.states.len());
        while let Some(q) = ready.pop_front() {
            order.push(q);
            for edge in self.outgoing(q) {
                let d = indegree.get_mut(&edge.target).unwrap();
                *d -= 1;
                if *d == 0 {
                    ready.push_back(edge.target);
                }
            }
        }
        (order.len() == self.states.len()).then_some(order)
    }

    /// Suppresses every non-special state, in topological order.
    pub fn reduce_to_minimal(&self) -> Result<CompactAutomaton> {
        if !self.is_trim() {
            return Err(Error::NotTrim);
        }
        let order = self
            .topological_order()
            .unwrap_or_else(|| self.states.iter().copied().collect());
        // Suppressions never change which of the remaining states are special.
        order
            .into_iter()
            .filter(|&q| !self.is_special(q))
            .try_fold(self.clone(), |automaton, q| {
                automaton.elementary_reduction(q)
            })
    }

    fn accessible(&self) -> BTreeSet<StateId> {
        let mut seen = BTreeSet::from([self.initial]);
        let mut stack = vec![self.initial];
        while let Some(q) = stack.pop() {
            for edge in self.outgoing(q) {
                if seen.insert(edge.target) {
                    stack.push(edge.target);
                }
            }
        }
        seen
    }

    fn coaccessible(&self) -> BTreeSet<StateId> {
        let mut predecessors: HashMap<StateId, Vec<StateId>> = HashMap::new();
        for (from, _, to) in self.edges() {
            predecessors.entry(to).or_default().push(from);
        }
        let mut seen: BTreeSet<StateId> = self.terminals.clone();
        let mut stack: Vec<StateId> = seen.iter().copied().collect();
        while let Some(q) = stack.pop() {
            for &p in predecessors.get(&q).into_iter().flatten() {
                if seen.insert(p) {
                    stack.push(p);
                }
            }
        }
        seen
    }

    /// Every state lies on some initial-to-terminal path.
    pub fn is_trim(&self) -> bool {
        let useful: BTreeSet<StateId> = self
            .accessible()
            .intersection(&self.coaccessible())
            .copied()
            .collect();
        useful == self.states
    }

    /// Drops the states that are not on a successful path. The initial state
    /// is always kept.
    pub fn trim(&self) -> CompactAutomaton {
        let mut keep: BTreeSet<StateId> = self
            .accessible()
            .intersection(&self.coaccessible())
            .copied()
            .collect();
        keep.insert(self.initial);
        let mut trimmed = CompactAutomaton::new(self.initial);
        trimmed.states = keep.clone();
        trimmed.terminals = self.terminals.intersection(&keep).copied().collect();
        for (from, label, to) in self.edges() {
            if keep.contains(&from) && keep.contains(&to) {
                trimmed
                    .add_edge(from, label.clone(), to)
                    .expect("edges stay deterministic");
            }
        }
        trimmed
    }

    /// Labels of all successful paths.
    pub fn enumerate_language(&self) -> Result<BTreeSet<Word>> {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            Open,
            Done,
        }
        fn visit(
            automaton: &CompactAutomaton,
            state: StateId,
            prefix: &mut Vec<char>,
            marks: &mut HashMap<StateId, Mark>,
            language: &mut BTreeSet<Word>,
        ) -> Result<()> {
            match marks.get(&state) {
                Some(Mark::Open) => return Err(Error::CycleDetected),
                Some(Mark::Done) | None => {}
            }
            marks.insert(state, Mark::Open);
            if automaton.is_terminal(state) {
                language.insert(Word::from(prefix.as_slice()));
            }
            for edge in automaton.outgoing(state) {
                let len = prefix.len();
                prefix.extend_from_slice(edge.label.letters());
                visit(automaton, edge.target, prefix, marks, language)?;
                prefix.truncate(len);
            }
            marks.insert(state, Mark::Done);
            Ok(())
        }

        let mut language = BTreeSet::new();
        visit(
            self,
            self.initial,
            &mut Vec::new(),
            &mut HashMap::new(),
            &mut language,
        )?;
        Ok(language)
    }

    /// Relabels states breadth-first from the initial state, following edges
    /// in first-letter order. Unreachable states come last, in id order.
    pub fn canonical(&self) -> CompactAutomaton {
        let mut order: Vec<StateId> = Vec::with_capacity(self.states.len());
        let mut renumber: HashMap<StateId, StateId> = HashMap::new();
        let mut queue = VecDeque::from([self.initial]);
        renumber.insert(self.initial, 0);
        while let Some(q) = queue.pop_front() {
            order.push(q);
            for edge in self.outgoing(q) {
                if !renumber.contains_key(&edge.target) {
                    renumber.insert(edge.target, renumber.len());
                    queue.push_back(edge.target);
                }
            }
        }
        for &q in &self.states {
            if !renumber.contains_key(&q) {
                renumber.insert(q, renumber.len());
                order.push(q);
            }
        }
        let mut canonical = CompactAutomaton::new(0);
        canonical.states = (0..order.len()).collect();
        canonical.terminals = self.terminals.iter().map(|q| renumber[q]).collect();
        for (from, label, to) in self.edges() {
            canonical
                .add_edge(renumber[&from], label.clone(), renumber[&to])
                .expect("relabeling keeps determinism");
        }
        canonical
    }

    /// Equality up to renaming of states.
    pub fn canonically_eq(&self, other: &CompactAutomaton) -> bool {
        self.canonical() == other.canonical()
    }

    /// Serialization in canonical numbering, edges sorted by `(from, label)`.
    pub fn to_json_graph(&self) -> GraphJson<String> {
        let canonical = self.canonical();
        let mut edges: Vec<EdgeJson<String>> = canonical
            .edges()
            .map(|(from, label, to)| EdgeJson {
                from,
                label: label.to_string(),
                to,
            })
            .collect();
        edges.sort_by(|a, b| (a.from, &a.label).cmp(&(b.from, &b.label)));
        GraphJson {
            states: canonical.states.iter().copied().collect(),
            initial: canonical.initial,
            terminals: canonical.terminals.iter().copied().collect(),
            edges,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_graph()).expect("graph serializes")
    }

    pub fn from_json(input: &str) -> Result<CompactAutomaton> {
        let graph: GraphJson<String> =
            serde_json::from_str(input).map_err(|e| Error::Malformed(e.to_string()))?;
        let mut automaton = CompactAutomaton::new(graph.initial);
        for &q in &graph.states {
            automaton.add_state(q);
        }
        for &q in &graph.terminals {
            automaton.set_terminal(q, true)?;
        }
        for edge in graph.edges {
            automaton.add_edge(edge.from, Word::from(edge.label.as_str()), edge.to)?;
        }
        Ok(automaton)
    }

    pub fn to_dot(&self) -> String {
        let graph = self.to_json_graph();
        write_dot(&graph, |label| label.clone())
    }
}

/// JSON shape shared by compact automata (word labels) and counting graphs
/// (integer labels).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson<L> {
    pub states: Vec<StateId>,
    pub initial: StateId,
    pub terminals: Vec<StateId>,
    pub edges: Vec<EdgeJson<L>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson<L> {
    pub from: StateId,
    pub label: L,
    pub to: StateId,
}

pub(crate) fn write_dot<L>(graph: &GraphJson<L>, label: impl Fn(&L) -> String) -> String {
    let terminals: BTreeSet<StateId> = graph.terminals.iter().copied().collect();
    let mut dot = String::from("digraph {\n    rankdir=LR;\n    node [shape=circle];\n");
    dot.push_str("    start [shape=none, label=\"\"];\n");
    for &q in &graph.states {
        let shape = if terminals.contains(&q) {
            "doublecircle"
        } else {
            "circle"
        };
        writeln!(dot, "    {q} [shape={shape}];").unwrap();
    }
    writeln!(dot, "    start -> {};", graph.initial).unwrap();
    for edge in &graph.edges {
        writeln!(
            dot,
            "    {} -> {} [label=\"{}\"];",
            edge.from,
            edge.to,
            label(&edge.label)
        )
        .unwrap();
    }
    dot.push_str("}\n");
    dot
}

pub fn special_states(automaton: &CompactAutomaton) -> BTreeSet<StateId> {
    automaton.special_states()
}

pub fn special_paths(automaton: &CompactAutomaton) -> Result<BTreeSet<SpecialPath>> {
    automaton.special_paths()
}

pub fn elementary_reduction(automaton: &CompactAutomaton, q: StateId) -> Result<CompactAutomaton> {
    automaton.elementary_reduction(q)
}

pub fn reduce_to_minimal(automaton: &CompactAutomaton) -> Result<CompactAutomaton> {
    automaton.reduce_to_minimal()
}

pub fn enumerate_language(automaton: &CompactAutomaton) -> Result<BTreeSet<Word>> {
    automaton.enumerate_language()
}

fn is_special_residual(residual: &[&[char]], is_initial: bool) -> bool {
    is_initial || contains_empty(residual) || first_letters(residual).len() >= 2
}

/// The minimal compact automaton with, for each state id, its residual.
fn minimal_compact_parts(
    language: &BTreeSet<Word>,
) -> Result<(CompactAutomaton, Vec<Residual<'_>>)> {
    if language.is_empty() {
        return Err(Error::EmptyLanguage);
    }
    let root = language_residual(language);
    let mut ids: HashMap<Residual<'_>, StateId> = HashMap::from([(root.clone(), 0)]);
    let mut residuals = vec![root];
    let mut automaton = CompactAutomaton::new(0);
    let mut next = 0;
    while next < residuals.len() {
        let source = next;
        next += 1;
        if contains_empty(&residuals[source]) {
            automaton.set_terminal(source, true)?;
        }
        for a in first_letters(&residuals[source]) {
            let mut label = Word::new(vec![a]);
            let mut target = derivative(&residuals[source], a);
            // A non-special residual is nonempty, free of the empty word and
            // has a single first letter.
            while !is_special_residual(&target, false) {
                let b = target[0][0];
                label.push(b);
                target = derivative(&target, b);
            }
            let id = *ids.entry(target.clone()).or_insert_with(|| {
                residuals.push(target);
                residuals.len() - 1
            });
            automaton.add_state(id);
            automaton.add_edge(source, label, id)?;
        }
    }
    Ok((automaton, residuals))
}

/// The minimal compact automaton of a finite nonempty language, with states
/// numbered breadth-first.
pub fn minimal_compact(language: &BTreeSet<Word>) -> Result<CompactAutomaton> {
    minimal_compact_parts(language).map(|(automaton, _)| automaton)
}

/// The reduction of a trim deterministic compact automaton onto the minimal
/// compact automaton of its language.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionMap {
    /// Special state of the source to state of `target`.
    pub mapping: BTreeMap<StateId, StateId>,
    pub target: CompactAutomaton,
}

/// Builds the map `p ↦ u⁻¹L` (for `u` labelling a path from the initial state
/// to `p`) and checks the three reduction conditions and surjectivity.
pub fn compute_reduction(automaton: &CompactAutomaton) -> Result<ReductionMap> {
    if !automaton.is_trim() {
        return Err(Error::NotTrim);
    }
    let language = automaton.enumerate_language()?;
    let whole = language_residual(&language);
    let (target, residuals) = minimal_compact_parts(&language)?;
    let ids: HashMap<&Residual<'_>, StateId> = residuals
        .iter()
        .enumerate()
        .map(|(id, r)| (r, id))
        .collect();

    // Every path label reaching each special state.
    let special = automaton.special_states();
    let mut labels: BTreeMap<StateId, Vec<Vec<char>>> = BTreeMap::new();
    let mut stack: Vec<(StateId, Vec<char>)> = vec![(automaton.initial(), Vec::new())];
    while let Some((state, label)) = stack.pop() {
        for edge in automaton.outgoing(state) {
            let mut longer = label.clone();
            longer.extend_from_slice(edge.label.letters());
            stack.push((edge.target, longer));
        }
        if special.contains(&state) {
            labels.entry(state).or_default().push(label);
        }
    }

    let mut mapping = BTreeMap::new();
    for &p in &special {
        let mut image = None;
        for u in &labels[&p] {
            let residual = quotient(&whole, u);
            let id = *ids.get(&residual).ok_or_else(|| {
                Error::ReductionViolation(format!("state {p} has a non-special residual"))
            })?;
            match image {
                None => image = Some(id),
                Some(previous) if previous != id => {
                    return Err(Error::ReductionViolation(format!(
                        "state {p} is reached by words with different residuals"
                    )))
                }
                Some(_) => {}
            }
        }
        mapping.insert(p, image.expect("trim automaton reaches every state"));
    }

    if mapping[&automaton.initial()] != target.initial() {
        return Err(Error::ReductionViolation(
            "initial state not preserved".into(),
        ));
    }
    if let Some((p, _)) = mapping
        .iter()
        .find(|&(&p, &q)| automaton.is_terminal(p) != target.is_terminal(q))
    {
        return Err(Error::ReductionViolation(format!(
            "terminality of state {p} not preserved"
        )));
    }
    let image: BTreeSet<StateId> = mapping.values().copied().collect();
    if &image != target.states() {
        return Err(Error::ReductionViolation("map is not surjective".into()));
    }
    let mapped_paths: BTreeSet<SpecialPath> = automaton
        .special_paths()?
        .into_iter()
        .map(|(p, w, q)| (mapping[&p], w, mapping[&q]))
        .collect();
    let target_paths = target.special_paths()?;
    if mapped_paths != target_paths {
        return Err(Error::ReductionViolation(
            "special paths do not correspond".into(),
        ));
    }
    Ok(ReductionMap { mapping, target })
}
