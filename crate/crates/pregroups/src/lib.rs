//! Finite pregroups: axiom checks, the associated rewriting system, geodesic
//! reduction, word-problem grammars, a streaming reducer and the pregroup
//! of a finite graph of finite groups.

mod from_gog;
mod pregroup;
mod sp;
mod stream;

pub use from_gog::{carrier_paths, in_carrier_shape, pregroup_from_gog, GogPregroup};
pub use pregroup::{check_pregroup, parse_pregroup, parse_table, Axiom, Pregroup, PregroupTable, Violation};
pub use sp::{geodesic_reduce, sp_system, universal_wp, wp_grammar, SpSystem};
pub use stream::{window_bound, StreamingReducer, WindowBound};

use bs_gog::GogError;
use bs_rewrite::RewriteError;

impl std::error::Error for Violation {}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum PregroupError {
    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("not a pregroup: {0}")]
    Axiom(#[from] Violation),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error(transparent)]
    Gog(#[from] GogError),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
}
