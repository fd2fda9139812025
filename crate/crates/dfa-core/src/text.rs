//! Line-oriented text format.
//!
//! ```text
//! # comment
//! alphabet: a b
//! states: q0 q1
//! start: q0
//! accept: q1
//! trans: q0 a q1
//! ```
//!
//! Sections may appear in any order. `accept:` may repeat; `trans:` occurs
//! once per defined transition.

use std::collections::HashMap;
use std::fmt::Write;

use crate::dfa::valid_token;
use crate::{Dfa, DfaError};

fn tokens(rest: &str) -> Vec<&str> {
    rest.split_whitespace().collect()
}

pub fn parse_dfa(text: &str) -> Result<Dfa, DfaError> {
    let mut alphabet: Option<(usize, Vec<&str>)> = None;
    let mut states: Option<(usize, Vec<&str>)> = None;
    let mut start: Option<(usize, &str)> = None;
    let mut accept: Vec<(usize, &str)> = Vec::new();
    let mut trans: Vec<(usize, [&str; 3])> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let format = |msg: String| DfaError::Format { line, msg };
        let (key, rest) =
            body.split_once(':').ok_or_else(|| format(format!("expected `section: ...`, got `{body}`")))?;
        let toks = tokens(rest);
        match key.trim() {
            "alphabet" | "states" => {
                let slot = if key.trim() == "alphabet" { &mut alphabet } else { &mut states };
                if slot.is_some() {
                    return Err(format(format!("repeated `{}` section", key.trim())));
                }
                *slot = Some((line, toks));
            }
            "start" => {
                if start.is_some() {
                    return Err(format("repeated `start` section".into()));
                }
                match toks.as_slice() {
                    [s] => start = Some((line, s)),
                    _ => return Err(format("`start` takes exactly one state".into())),
                }
            }
            "accept" => accept.extend(toks.into_iter().map(|t| (line, t))),
            "trans" => match toks.as_slice() {
                [s, a, t] => trans.push((line, [s, a, t])),
                _ => return Err(format("`trans` takes `source symbol target`".into())),
            },
            other => return Err(format(format!("unknown section `{other}`"))),
        }
    }

    let end = text.lines().count();
    let (_, alphabet) = alphabet.ok_or(DfaError::Format { line: end, msg: "missing `alphabet`".into() })?;
    let (sline, states) = states.ok_or(DfaError::Format { line: end, msg: "missing `states`".into() })?;
    let (start_line, start) = start.ok_or(DfaError::Format { line: end, msg: "missing `start`".into() })?;

    let mut sym_ids = HashMap::new();
    for a in &alphabet {
        if !valid_token(a) || sym_ids.insert(*a, sym_ids.len()).is_some() {
            return Err(DfaError::Format { line: end, msg: format!("bad or duplicate symbol `{a}`") });
        }
    }
    if states.is_empty() {
        return Err(DfaError::Format { line: sline, msg: "no states declared".into() });
    }
    let mut dfa = Dfa::new(alphabet.iter().copied());
    let mut state_ids = HashMap::new();
    for s in &states {
        if state_ids.contains_key(s) {
            return Err(DfaError::Format { line: sline, msg: format!("duplicate state `{s}`") });
        }
        state_ids.insert(*s, dfa.add_state(*s));
    }
    let lookup = |line: usize, name: &str| {
        state_ids.get(name).copied().ok_or_else(|| DfaError::Reference { line, kind: "state", name: name.into() })
    };
    dfa.set_start(lookup(start_line, start)?);
    for (line, q) in accept {
        let q = lookup(line, q)?;
        dfa.set_accepting(q, true);
    }
    for (line, [s, a, t]) in trans {
        let q = lookup(line, s)?;
        let p = lookup(line, t)?;
        let sym = *sym_ids.get(a).ok_or_else(|| DfaError::Reference { line, kind: "symbol", name: a.into() })?;
        if dfa.delta(q, sym).is_some() {
            return Err(DfaError::Determinism { line, state: s.into(), symbol: a.into() });
        }
        dfa.set_delta(q, sym, Some(p));
    }
    dfa.check()?;
    Ok(dfa)
}

/// Canonical rendering: sections in fixed order, states in id order,
/// transitions sorted by source id then symbol id.
pub fn serialize_dfa(d: &Dfa) -> String {
    let mut out = String::new();
    let line = |out: &mut String, key: &str, items: &mut dyn Iterator<Item = &str>| {
        out.push_str(key);
        out.push(':');
        for it in items {
            out.push(' ');
            out.push_str(it);
        }
        out.push('\n');
    };
    line(&mut out, "alphabet", &mut d.alphabet().iter().map(String::as_str));
    line(&mut out, "states", &mut d.names().iter().map(String::as_str));
    line(&mut out, "start", &mut std::iter::once(d.name(d.start())));
    line(&mut out, "accept", &mut d.accepting_states().map(|q| d.name(q)));
    for (q, a, p) in d.transitions() {
        writeln!(out, "trans: {} {} {}", d.name(q), d.symbol(a), d.name(p)).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_language_document() {
        let text = "alphabet: a\nstates: q0\nstart: q0\naccept:\n";
        let d = parse_dfa(text).unwrap();
        assert_eq!(d.num_states(), 1);
        assert_eq!(d.size(), 0);
        assert_eq!(serialize_dfa(&d), text);
    }

    #[test]
    fn determinism_violation_reports_line() {
        let text = "alphabet: a\nstates: q0 q1 q2\nstart: q0\naccept:\ntrans: q0 a q1\ntrans: q0 a q2\n";
        assert_eq!(parse_dfa(text), Err(DfaError::Determinism { line: 6, state: "q0".into(), symbol: "a".into() }));
    }

    #[test]
    fn reference_and_format_errors() {
        let unknown = "alphabet: a\nstates: q0\nstart: q0\naccept:\ntrans: q0 b q0\n";
        assert!(matches!(parse_dfa(unknown), Err(DfaError::Reference { kind: "symbol", .. })));
        let missing = "alphabet: a\nstates: q0\naccept:\n";
        assert!(matches!(parse_dfa(missing), Err(DfaError::Format { .. })));
        let bad_state = "alphabet: a\nstates: q0\nstart: q9\n";
        assert!(matches!(parse_dfa(bad_state), Err(DfaError::Reference { kind: "state", .. })));
    }

    #[test]
    fn shuffled_sections_canonicalise() {
        let text = "# comment\ntrans: q1 b q0\naccept: q1\ntrans: q0 a q1   # inline\nstart: q0\n\nstates: q0 q1\nalphabet: a b\n";
        let canonical = "alphabet: a b\nstates: q0 q1\nstart: q0\naccept: q1\ntrans: q0 a q1\ntrans: q1 b q0\n";
        assert_eq!(serialize_dfa(&parse_dfa(text).unwrap()), canonical);
    }
}
