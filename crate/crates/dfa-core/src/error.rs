use thiserror::Error;

use crate::StateId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DfaError {
    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },
    #[error("line {line}: duplicate transition from `{state}` on `{symbol}`")]
    Determinism { line: usize, state: String, symbol: String },
    #[error("line {line}: unknown {kind} `{name}`")]
    Reference { line: usize, kind: &'static str, name: String },
    #[error("state {0} does not exist")]
    UnknownState(StateId),
    #[error("cannot merge state {0} into itself")]
    SelfMerge(StateId),
    #[error("state `{0}` is unreachable; trim the automaton first")]
    Untrimmed(String),
}
