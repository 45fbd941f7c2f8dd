//! Cayley balls over pluggable word-problem backends, tree decompositions
//! and their checks, chordality and clique trees, level bags on balls and
//! an exact treewidth search for small graphs.

mod chordal;
mod extend;
mod graph;
mod ms;
mod oracle;
mod td;
mod treewidth;

pub use chordal::{clique_tree, is_chordal, maximal_cliques, perfect_elimination_ordering};
pub use extend::{extend_generators_for_chordality, ChordalExtension};
pub use graph::{cayley_ball, SimpleGraph};
pub use ms::{grammar_constant, muller_schupp_td, MsDecomposition};
pub use oracle::{
    backend_names, oracle_by_name, FiniteOracle, FreeOracle, GogOracle, GroupOracle, Key, PregroupOracle,
};
pub use td::{neighborhood_td, normalize_td, validate_td, validate_td_within, Bag, TdAxiom, TdViolation, TreeDecomposition};
pub use treewidth::{treewidth_exact, TREEWIDTH_LIMIT};

#[derive(Debug, thiserror::Error)]
pub enum CayleyError {
    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("oracle: {0}")]
    Oracle(String),
    #[error("graph: {0}")]
    Graph(String),
    #[error("graph is not chordal")]
    NotChordal,
    #[error("{vertices} vertices exceed the exact-search limit of {limit}")]
    TooLarge { vertices: usize, limit: usize },
    #[error(transparent)]
    Td(#[from] TdViolation),
    #[error(transparent)]
    Gog(#[from] bs_gog::GogError),
    #[error(transparent)]
    Pregroup(#[from] bs_pregroup::PregroupError),
}
