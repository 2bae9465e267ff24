//! Iterated palindromic closure on free monoids and free groups, and exact
//! constructions of the suffix automaton and the minimal compact suffix
//! automaton of `Pal(u)`.
//!
//! Module map:
//!
//! - [`words`]: alphabets, words, reversal, palindromic closure, left-special
//!   factors.
//! - [`free_group`]: reduced words in the free group.
//! - [`pal`]: the automorphisms `L_u`, `R_u`, the map `Pal`, Justin's formulas,
//!   the semidirect product, the sequential transducer and the cocycle search.
//! - [`automata`]: minimal automata of finite languages via residuals and
//!   suffix automata.
//! - [`compact`]: compact automata, special states, reductions and the minimal
//!   compact automaton.
//! - [`pal_suffix`]: the direct construction of the compact suffix automaton
//!   of `Pal(u)` and its counting graph.

pub mod automata;
pub mod compact;
pub mod error;
pub mod free_group;
pub mod pal;
pub mod pal_suffix;
mod residual;
pub mod words;

pub use automata::{
    minimal_dfa, suffix_automaton, verify_pal_suffix_theorem, Dfa, SuffixTheoremReport,
};
pub use compact::{
    compute_reduction, elementary_reduction, enumerate_language, minimal_compact,
    reduce_to_minimal, special_paths, special_states, CompactAutomaton, Edge, EdgeJson, GraphJson,
    ReductionMap,
};
pub use error::{Error, Result};
pub use free_group::{GroupElement, SignedLetter};
pub use pal::{
    apply_l, apply_r, check_justin_l, check_justin_r, cocycle_witness_search, pal_group,
    pal_length, pal_word, pal_word_fast, Automorphism, PalPrefixes, SemidirectPair, Side,
    TransducerState,
};
pub use pal_suffix::{
    build_direct, compact_suffix_automaton, counting_graph, fibonacci_length_check,
    path_count_to_final, transition_count, CountingGraph, CountingViolation, PalCompactAutomaton,
};
pub use words::{Alphabet, Word};

/// Identifier of an automaton state.
pub type StateId = usize;
