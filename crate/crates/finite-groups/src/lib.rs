//! Finite groups as multiplication tables, permutations and group actions.

mod action;
mod group;
mod perm;

pub use action::{conjugator, free_action, GroupAction};
pub use group::{builtin, check_group, cyclic, direct_product, parse_group, symmetric, trivial, FiniteGroup};
pub use perm::{closure, closure_order, Permutation};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("row {row}: entry {value} out of range")]
    OutOfRange { row: usize, value: usize },
    #[error("element 0 is not an identity for element {0}")]
    Identity(usize),
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("associativity fails at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("bad element names: {0}")]
    BadNames(String),
    #[error("unsupported group: {0}")]
    Unsupported(String),
    #[error("action: {0}")]
    Action(String),
    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}
