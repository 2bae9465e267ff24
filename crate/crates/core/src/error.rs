use thiserror::Error;

use crate::StateId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet must contain at least one letter")]
    EmptyAlphabet,
    #[error("letter {0:?} declared twice in alphabet")]
    DuplicateLetter(char),
    #[error("letter {0:?} is not in the alphabet")]
    UnknownLetter(char),
    #[error("invalid symbol {0:?} in group element (expected a-z, A-Z or \"1\")")]
    InvalidSymbol(char),
    #[error("state {0} does not exist")]
    UnknownState(StateId),
    #[error("edge labels must be nonempty")]
    EmptyLabel,
    #[error("state {state} already has an outgoing edge starting with {letter:?}")]
    Nondeterministic { state: StateId, letter: char },
    #[error("state {0} is special and cannot be suppressed")]
    SpecialState(StateId),
    #[error("state {0} does not have a single outgoing edge to another state")]
    NotReducible(StateId),
    #[error("automaton contains a cycle")]
    CycleDetected,
    #[error("automaton is not trim")]
    NotTrim,
    #[error("language is empty")]
    EmptyLanguage,
    #[error("reduction condition violated: {0}")]
    ReductionViolation(String),
    #[error("{prefix:?} is not a prefix of {word:?}")]
    NotAPrefix { prefix: String, word: String },
    #[error("{name} = {value} is outside {min}..={max}")]
    OutOfBounds {
        name: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },
    #[error("malformed automaton: {0}")]
    Malformed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
