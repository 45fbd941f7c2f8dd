//! Finite graphs of finite groups: normal forms, Britton reduction, the
//! word problem of the fundamental group, Bass-Serre tree neighbourhoods and
//! permutation representations.

mod bst;
pub mod fixtures;
mod graph;
mod parse;
mod sym;
mod vf;
mod words;

pub use bst::{BallNode, BstChild, BstNode};
pub use graph::{Cosets, Edge, EdgeSpec, GogLetter, GraphOfGroups, Vertex};
pub use parse::parse_gog;
pub use sym::{FreeSubgroupData, SymHomomorphism};
pub use vf::{free_reduce as free_reduce_signed, DeltaLetter, FreeLetter, VfStructure};
pub use words::{Presentation, Relator};

use bs_groups::GroupError;
use bs_rewrite::RewriteError;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum GogError {
    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("invalid graph of groups: {0}")]
    Invalid(String),
    #[error("graph is not connected: vertex `{0}` is unreachable from the base")]
    Disconnected(String),
    #[error("edge `{0}`: map is not a homomorphism")]
    NotHomomorphism(String),
    #[error("edge `{0}`: map is not injective")]
    NotInjective(String),
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("permutation representation: {0}")]
    Homomorphism(String),
    #[error("rank formula: {0}")]
    Formula(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
}
