use std::collections::{HashMap, HashSet};

use crate::DfaError;

pub type StateId = usize;
pub type SymbolId = usize;

/// Deterministic finite automaton with a partial transition function.
///
/// States are the dense ids `0..n` and each carries a unique display name.
/// Transitions are stored row-major, one row of `|Σ|` optional targets per
/// state. Two values compare equal exactly when they are structurally
/// identical, including state order and names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Vec<String>,
    names: Vec<String>,
    index: HashMap<String, StateId>,
    delta: Vec<Option<StateId>>,
    start: StateId,
    accepting: Vec<bool>,
}

pub(crate) fn valid_token(s: &str) -> bool {
    !s.is_empty() && !s.contains('#') && !s.chars().any(char::is_whitespace)
}

impl Dfa {
    /// Creates an automaton over `alphabet` with no states yet.
    ///
    /// # Panics
    /// If a symbol repeats or is not a valid token (non-empty, no whitespace,
    /// no `#`). [`crate::parse_dfa`] reports these as errors instead.
    pub fn new<I, S>(alphabet: I) -> Dfa
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let alphabet: Vec<String> = alphabet.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for a in &alphabet {
            assert!(valid_token(a), "invalid symbol `{a}`");
            assert!(seen.insert(a.as_str()), "duplicate symbol `{a}`");
        }
        Dfa { alphabet, names: Vec::new(), index: HashMap::new(), delta: Vec::new(), start: 0, accepting: Vec::new() }
    }

    /// Appends a state with no outgoing transitions.
    ///
    /// # Panics
    /// If the name is already used or is not a valid token.
    pub fn add_state(&mut self, name: impl Into<String>) -> StateId {
        let name = name.into();
        assert!(valid_token(&name), "invalid state name `{name}`");
        let id = self.names.len();
        assert!(self.index.insert(name.clone(), id).is_none(), "duplicate state `{name}`");
        self.names.push(name);
        self.accepting.push(false);
        self.delta.extend(std::iter::repeat_n(None, self.alphabet.len()));
        self.names.len() - 1
    }

    /// Appends a symbol; every state starts with it undefined.
    ///
    /// # Panics
    /// If the symbol is already present or is not a valid token.
    pub fn add_symbol(&mut self, symbol: impl Into<String>) -> SymbolId {
        let symbol = symbol.into();
        assert!(valid_token(&symbol), "invalid symbol `{symbol}`");
        assert!(self.symbol_id(&symbol).is_none(), "duplicate symbol `{symbol}`");
        let k = self.alphabet.len();
        let mut delta = Vec::with_capacity(self.names.len() * (k + 1));
        for q in 0..self.names.len() {
            delta.extend_from_slice(&self.delta[q * k..(q + 1) * k]);
            delta.push(None);
        }
        self.delta = delta;
        self.alphabet.push(symbol);
        k
    }

    pub fn num_states(&self) -> usize {
        self.names.len()
    }

    pub fn num_symbols(&self) -> usize {
        self.alphabet.len()
    }

    /// The size measure `|M|`: the number of defined transitions.
    pub fn size(&self) -> usize {
        self.delta.iter().filter(|t| t.is_some()).count()
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn symbol(&self, a: SymbolId) -> &str {
        &self.alphabet[a]
    }

    pub fn symbol_id(&self, symbol: &str) -> Option<SymbolId> {
        self.alphabet.iter().position(|s| s == symbol)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, q: StateId) -> &str {
        &self.names[q]
    }

    pub fn state_id(&self, name: &str) -> Option<StateId> {
        self.index.get(name).copied()
    }

    pub fn start(&self) -> StateId {
        self.start
    }

    pub fn set_start(&mut self, q: StateId) {
        assert!(q < self.num_states(), "state {q} out of range");
        self.start = q;
    }

    /// Copy of this automaton started in `q`, i.e. recognising `L(q)`.
    pub fn with_start(&self, q: StateId) -> Dfa {
        let mut d = self.clone();
        d.set_start(q);
        d
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepting[q]
    }

    pub fn set_accepting(&mut self, q: StateId, accepting: bool) {
        self.accepting[q] = accepting;
    }

    pub fn accepting_states(&self) -> impl Iterator<Item = StateId> + '_ {
        (0..self.num_states()).filter(|&q| self.accepting[q])
    }

    pub fn delta(&self, q: StateId, a: SymbolId) -> Option<StateId> {
        self.delta[q * self.alphabet.len() + a]
    }

    pub fn set_delta(&mut self, q: StateId, a: SymbolId, target: Option<StateId>) {
        if let Some(p) = target {
            assert!(p < self.num_states(), "state {p} out of range");
        }
        let k = self.alphabet.len();
        self.delta[q * k + a] = target;
    }

    /// Outgoing row of `q`, indexed by symbol.
    pub fn row(&self, q: StateId) -> &[Option<StateId>] {
        let k = self.alphabet.len();
        &self.delta[q * k..(q + 1) * k]
    }

    /// Runs `word` from `q`; `None` once a transition is undefined.
    pub fn run_from(&self, q: StateId, word: &[SymbolId]) -> Option<StateId> {
        word.iter().try_fold(q, |p, &a| self.delta(p, a))
    }

    pub fn accepts(&self, word: &[SymbolId]) -> bool {
        self.run_from(self.start, word).is_some_and(|q| self.accepting[q])
    }

    pub fn is_total(&self) -> bool {
        self.delta.iter().all(Option::is_some)
    }

    /// All defined transitions as `(source, symbol, target)`, sorted by
    /// source then symbol.
    pub fn transitions(&self) -> impl Iterator<Item = (StateId, SymbolId, StateId)> + '_ {
        let k = self.alphabet.len();
        self.delta.iter().enumerate().filter_map(move |(i, t)| t.map(|p| (i / k.max(1), i % k.max(1), p)))
    }

    pub(crate) fn check(&self) -> Result<(), DfaError> {
        if self.names.is_empty() {
            return Err(DfaError::Format { line: 0, msg: "automaton has no states".into() });
        }
        if self.start >= self.num_states() {
            return Err(DfaError::UnknownState(self.start));
        }
        Ok(())
    }

    /// Sub-automaton on `keep` (ascending ids), renumbered densely in the
    /// same order. Transitions into dropped states become undefined.
    ///
    /// # Panics
    /// If the start state is not kept.
    pub fn induced(&self, keep: &[StateId]) -> Dfa {
        let mut new_id = vec![None; self.num_states()];
        for (i, &q) in keep.iter().enumerate() {
            new_id[q] = Some(i);
        }
        let mut out = Dfa::new(self.alphabet.iter().cloned());
        for &q in keep {
            let p = out.add_state(self.names[q].clone());
            out.accepting[p] = self.accepting[q];
        }
        for (i, &q) in keep.iter().enumerate() {
            for a in 0..self.num_symbols() {
                let t = self.delta(q, a).and_then(|p| new_id[p]);
                out.set_delta(i, a, t);
            }
        }
        out.start = new_id[self.start].expect("start state must be kept");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builder_roundtrip() {
        let mut d = Dfa::new(["a", "b"]);
        let q0 = d.add_state("q0");
        let q1 = d.add_state("q1");
        d.set_delta(q0, 0, Some(q1));
        d.set_accepting(q1, true);
        assert_eq!(d.size(), 1);
        assert!(d.accepts(&[0]));
        assert!(!d.accepts(&[1]));
        assert!(!d.accepts(&[0, 0]));
        let c = d.add_symbol("c");
        assert_eq!(c, 2);
        assert_eq!(d.delta(q0, 0), Some(q1));
        assert_eq!(d.delta(q0, c), None);
        assert_eq!(d.transitions().collect::<Vec<_>>(), vec![(0, 0, 1)]);
    }

    #[test]
    #[should_panic(expected = "duplicate state")]
    fn duplicate_state_panics() {
        let mut d = Dfa::new(["a"]);
        d.add_state("x");
        d.add_state("x");
    }
}
