//! Edge cuts on finite balls of Cayley graphs: enumeration of k-cuts,
//! corners and nestedness, cuts splitting periodic paths, optimal cuts,
//! the structure tree on their classes, and blocks.
//!
//! A side counts as infinite when it holds a vertex on the bounding sphere
//! of the ball; every result carries the radius and margin it was computed
//! with, so a larger radius can falsify an unstable answer.

mod block;
mod cut;
mod dot;
pub mod fixtures;
mod optimal;
mod path;
mod tree;

pub use block::{block, blocks, choose_lambda, neighborhood, Block};
pub use cut::{corners, cut_from_side, cut_from_vertices, enumerate_kcuts, is_nested, Cut, Edge};
pub use dot::ball_dot_with_cut;
pub use optimal::{m_value, optimal_cuts, OptimalCuts, PathReport, MAX_SEARCH_WEIGHT};
pub use path::{
    cuts_splitting_path, minimal_cuts, splits, translated_paths, PathWindow, PeriodicPath, TORSION_CHECK,
};
pub use tree::{check_nested, structure_tree, tilde_classes, tilde_relation, StructureTree, TreeEdge};

#[derive(Debug, thiserror::Error)]
pub enum CutError {
    #[error("not a cut: {0}")]
    NotACut(String),
    #[error("path: {0}")]
    Path(String),
    #[error("period has finite order: its {0}-th power is the identity")]
    Torsion(usize),
    #[error("cuts {0} and {1} are not nested")]
    NotNested(usize, usize),
    #[error("cut set is not closed under complement: cut {0}")]
    NotSymmetric(usize),
    #[error("~ is not an equivalence relation: {0}")]
    NotEquivalence(String),
    #[error("structure graph is not a tree: {0}")]
    NotTree(String),
    #[error("no λ ≤ {0} makes every N^λ(C) ∩ C̄ connected")]
    Lambda(usize),
    #[error("block formulas disagree on class {class}: intersection has {left} vertices, union has {right}")]
    FormulaMismatch { class: usize, left: usize, right: usize },
    #[error(transparent)]
    Cayley(#[from] bs_cayley::CayleyError),
}
