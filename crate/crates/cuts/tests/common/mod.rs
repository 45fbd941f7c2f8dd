#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use bs_cayley::{cayley_ball, GogOracle, GroupOracle, Key, SimpleGraph};
use bs_cuts::*;
use bs_gog::fixtures::fixture;

/// Z/2 ⋆ Z/3 over the generators a and b.
pub fn free_product() -> GogOracle {
    let g = Arc::new(fixture("psl2z").unwrap());
    let words = ["a", "b"].iter().map(|s| g.parse_word(s).unwrap()).collect();
    GogOracle::new(g, words).unwrap()
}

pub const AB: &[(usize, bool)] = &[(0, false), (1, false)];

pub struct Pipeline {
    pub ball: SimpleGraph,
    pub opt: OptimalCuts,
    pub tree: StructureTree,
    pub lambda: usize,
    pub blocks: Vec<Block>,
}

/// Optimal cuts, structure tree and blocks for translates of the given
/// periods from every base within `spread`.
pub fn pipeline(oracle: &dyn GroupOracle, radius: usize, periods: &[Vec<(usize, bool)>], spread: usize) -> Pipeline {
    let ball = cayley_ball(oracle, radius);
    let margin = radius / 4;
    let paths: Vec<PathWindow> =
        translated_paths(oracle, &ball, periods, spread).unwrap().into_iter().map(|p| p.window).collect();
    let opt = optimal_cuts(&ball, &paths, None, margin).unwrap();
    let tree = structure_tree(&opt.cuts).unwrap();
    let lambda = choose_lambda(&ball, &opt.cuts, radius).unwrap();
    let blocks = blocks(&ball, &tree, lambda).unwrap();
    Pipeline { ball, opt, tree, lambda, blocks }
}

/// Key forms of the cuts whose boundary lies within distance `r`.
pub fn cuts_within(ball: &SimpleGraph, cuts: &[Cut], r: usize) -> BTreeSet<Vec<(Key, Key)>> {
    cuts.iter()
        .filter(|c| c.delta().iter().all(|&(u, v)| ball.distance(u).unwrap() <= r && ball.distance(v).unwrap() <= r))
        .map(|c| c.key_form(ball))
        .collect()
}

/// Key sets of the untruncated blocks lying within distance `r`.
pub fn blocks_within(ball: &SimpleGraph, blocks: &[Block], r: usize) -> BTreeSet<BTreeSet<Key>> {
    blocks
        .iter()
        .filter(|b| !b.truncated && b.vertices.iter().all(|&v| ball.distance(v).unwrap() <= r))
        .map(|b| b.vertices.iter().map(|&v| ball.key(v).clone()).collect())
        .collect()
}

/// The vertex a class gathers around: the inner endpoint shared by the
/// boundaries of all its cuts.
pub fn class_centre(tree: &StructureTree, class: usize) -> Option<usize> {
    let mut common: Option<BTreeSet<usize>> = None;
    for &i in &tree.classes[class] {
        let c = &tree.cuts[i];
        let inner: BTreeSet<usize> = c.delta().iter().flat_map(|&(u, v)| [u, v]).filter(|&x| c.contains(x)).collect();
        common = Some(match common {
            None => inner,
            Some(s) => s.intersection(&inner).copied().collect(),
        });
    }
    let s = common?;
    (s.len() == 1).then(|| *s.iter().next().unwrap())
}
