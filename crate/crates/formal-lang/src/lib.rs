//! Finite automata, rational expressions, context-free grammars and push-down
//! automata, with the group-specific builders used for word problems.

mod cfg;
mod hotz;
mod matrix;
mod nfa;
mod pda;
mod regex;
mod subgroup;
mod vf;

pub use cfg::{cyk, parse_cfg, pumping_constant, reduce_grammar, shortest_yields, to_cnf, Cfg, Production, Sym};
pub use hotz::{hotz_presentation, normal_closure_grammar, HotzPresentation};
pub use matrix::{matrix_accepts, nfa_to_matrices, BoolMatrix, BoolMatrixMonoid};
pub use nfa::{nfa_to_dfa, parse_nfa, Dfa, Nfa};
pub use pda::{cfg_to_pda, parse_pda, pda_run, pda_to_cfg, Pda, PdaRule, PdaRun, RunOutcome};
pub use regex::{nfa_to_rational, rational_to_nfa, Regex};
pub use subgroup::{finite_group_wp_dfa, rational_subgroup_generators};
pub use vf::{build_vf_system, vf_alphabet, vf_det_pda, vf_word};

use bs_rewrite::RewriteError;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum LangError {
    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("invalid: {0}")]
    Invalid(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("grammar: {0}")]
    Grammar(String),
    #[error("inconsistent table at ({0}, {1}, {2}): {3}")]
    Table(String, String, String, String),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
}

/// Whitespace-separated tokens with their byte columns.
pub(crate) fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out
}
