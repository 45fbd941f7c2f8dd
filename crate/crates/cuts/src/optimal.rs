use std::collections::BTreeMap;

use bs_cayley::SimpleGraph;

use crate::cut::{enumerate_kcuts, is_nested, Cut, Edge};
use crate::path::{cuts_splitting_path, minimal_cuts, PathWindow};
use crate::CutError;

/// Heaviest splitting cut looked for when the accessibility bound is not
/// supplied.
pub const MAX_SEARCH_WEIGHT: usize = 4;

/// Number of cuts in `universe` crossing `c`. The universe lists each cut
/// once; both orientations of a crossing cut are counted.
pub fn m_value(c: &Cut, universe: &[Cut]) -> usize {
    2 * universe.iter().filter(|d| !is_nested(c, d)).count()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathReport {
    /// Least weight of a splitting cut, if any was found.
    pub min_weight: Option<usize>,
    /// Size of the minimal splitting set, one orientation per cut.
    pub minimal: usize,
    /// Least m over the minimal splitting set.
    pub m: Option<usize>,
    /// Cuts of the minimal set attaining that m.
    pub optimal: usize,
}

#[derive(Clone, Debug)]
pub struct OptimalCuts {
    /// Both orientations of every optimal cut, sorted by weight, boundary,
    /// then the orientation holding vertex 0 first.
    pub cuts: Vec<Cut>,
    pub k: usize,
    pub per_path: Vec<PathReport>,
    pub radius: Option<usize>,
    pub margin: usize,
}

impl OptimalCuts {
    /// Distinct boundaries among the cuts.
    pub fn boundaries(&self) -> Vec<Vec<Edge>> {
        let mut out: Vec<Vec<Edge>> = self.cuts.iter().map(|c| c.delta().to_vec()).collect();
        out.dedup();
        out
    }
}

/// Optimal cuts over a path family: for each path the minimal splitting
/// cuts, narrowed to those crossing the fewest k-cuts that meet the ball's
/// interior. `k` defaults to the largest minimal splitting weight seen.
pub fn optimal_cuts(g: &SimpleGraph, paths: &[PathWindow], k: Option<usize>, margin: usize) -> Result<OptimalCuts, CutError> {
    let search = k.unwrap_or(MAX_SEARCH_WEIGHT);
    let mut minimal: Vec<Vec<Cut>> = Vec::with_capacity(paths.len());
    for p in paths {
        let mut found = Vec::new();
        for w in 1..=search {
            found = cuts_splitting_path(g, p, w, margin)?;
            if !found.is_empty() {
                break;
            }
        }
        minimal.push(minimal_cuts(&found));
    }
    let k = k.unwrap_or_else(|| minimal.iter().filter_map(|m| m.first().map(Cut::weight)).max().unwrap_or(0));
    let interior: Vec<usize> = (0..g.len()).filter(|&v| !g.on_sphere(v)).collect();
    let universe = if k == 0 || interior.is_empty() { Vec::new() } else { enumerate_kcuts(g, &interior, k) };

    let mut chosen: BTreeMap<(usize, Vec<Edge>, bool), Cut> = BTreeMap::new();
    let mut per_path = Vec::with_capacity(paths.len());
    for set in &minimal {
        let ms: Vec<usize> = set.iter().map(|c| m_value(c, &universe)).collect();
        let best = ms.iter().copied().min();
        let mut optimal = 0;
        for (c, &m) in set.iter().zip(&ms) {
            if Some(m) == best {
                optimal += 1;
                for o in [c.clone(), c.complement()] {
                    chosen.entry((o.weight(), o.delta().to_vec(), !o.contains(0))).or_insert(o);
                }
            }
        }
        per_path.push(PathReport { min_weight: set.first().map(Cut::weight), minimal: set.len(), m: best, optimal });
    }
    Ok(OptimalCuts { cuts: chosen.into_values().collect(), k, per_path, radius: g.radius(), margin })
}
