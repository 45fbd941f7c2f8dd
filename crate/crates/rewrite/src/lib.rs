//! Semi-Thue rewriting: one-step rewriting, normalization, critical pairs
//! and confluence checks.

mod alphabet;
mod builders;
mod critical;
mod parse;
pub mod strategy;
mod system;

pub use alphabet::{Alphabet, DisplayWord, Letter, Word};
pub use builders::{dyck_system, free_group_system, free_reduce};
pub use critical::{CriticalPair, OverlapKind, StrongVerdict, Verdict};
pub use parse::parse_system;
pub use system::{Equivalence, Outcome, Redex, Rule, SemiThueSystem, Step, DEFAULT_FUEL};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum RewriteError {
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("duplicate letter `{0}`")]
    DuplicateLetter(String),
    #[error("invalid letter name `{0}`")]
    BadLetterName(String),
    #[error("involution is not an involution at `{0}`")]
    BadInvolution(String),
    #[error("rule {0} has an empty left-hand side")]
    EmptyLhs(usize),
    #[error("fuel exhausted after {0} steps")]
    FuelExhausted(u64),
    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}
