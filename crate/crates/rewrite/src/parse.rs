use std::sync::Arc;

use crate::alphabet::Alphabet;
use crate::system::{Rule, SemiThueSystem};
use crate::RewriteError;

/// Parse the `letters:` header plus `lhs -> rhs` rule lines.
pub fn parse_system(text: &str) -> Result<SemiThueSystem, RewriteError> {
    let mut alphabet: Option<Arc<Alphabet>> = None;
    let mut rules = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let at = |col: usize, msg: String| RewriteError::Parse { line: ln + 1, col: col + 1, msg };
        let indent = line.len() - line.trim_start().len();
        if let Some(rest) = line.trim_start().strip_prefix("letters:") {
            if alphabet.is_some() {
                return Err(at(indent, "duplicate letters header".into()));
            }
            let names: Vec<&str> = rest.split_whitespace().collect();
            let a = Alphabet::with_tilde_involution(&names).map_err(|e| at(indent, e.to_string()))?;
            alphabet = Some(Arc::new(a));
            continue;
        }
        let Some(a) = alphabet.as_ref() else {
            return Err(at(indent, "expected `letters:` header before rules".into()));
        };
        let Some(arrow) = line.find("->") else {
            return Err(at(indent, "expected `lhs -> rhs`".into()));
        };
        let (lhs_text, rhs_text) = (&line[..arrow], &line[arrow + 2..]);
        let word = |s: &str, base: usize| {
            let mut w = Vec::new();
            let mut col = base;
            for tok in s.split(' ') {
                if !tok.trim().is_empty() && tok != "_" {
                    let t = tok.trim();
                    let off = tok.find(t).unwrap_or(0);
                    match a.letter(t) {
                        Some(x) => w.push(x),
                        None => return Err(at(col + off, format!("unknown letter `{t}`"))),
                    }
                }
                col += tok.len() + 1;
            }
            Ok(w)
        };
        let lhs = word(lhs_text, 0)?;
        let rhs = word(rhs_text, arrow + 2)?;
        if lhs.is_empty() {
            return Err(at(indent, "empty left-hand side".into()));
        }
        rules.push(Rule::new(lhs, rhs));
    }
    let alphabet = alphabet.ok_or(RewriteError::Parse { line: 1, col: 1, msg: "missing `letters:` header".into() })?;
    SemiThueSystem::new(alphabet, rules)
}
