use std::collections::VecDeque;

use bs_cayley::SimpleGraph;
use fixedbitset::FixedBitSet;

use crate::cut::Cut;
use crate::tree::StructureTree;
use crate::CutError;

/// Vertices within distance `lambda` of `set`.
pub fn neighborhood(g: &SimpleGraph, set: &FixedBitSet, lambda: usize) -> FixedBitSet {
    let mut d = vec![usize::MAX; g.len()];
    let mut q = VecDeque::new();
    for v in set.ones() {
        d[v] = 0;
        q.push_back(v);
    }
    while let Some(u) = q.pop_front() {
        if d[u] == lambda {
            continue;
        }
        for &w in g.neighbors(u) {
            if d[w] == usize::MAX {
                d[w] = d[u] + 1;
                q.push_back(w);
            }
        }
    }
    let mut out = FixedBitSet::with_capacity(g.len());
    out.extend((0..g.len()).filter(|&v| d[v] != usize::MAX));
    out
}

fn connected(g: &SimpleGraph, set: &FixedBitSet) -> bool {
    let keep: Vec<bool> = (0..g.len()).map(|v| set.contains(v)).collect();
    g.components(&keep).len() <= 1
}

/// Least λ ≥ 1, up to `max`, with N^λ(C) ∩ C̄ connected for every cut.
pub fn choose_lambda(g: &SimpleGraph, cuts: &[Cut], max: usize) -> Result<usize, CutError> {
    (1..=max.max(1))
        .find(|&l| {
            cuts.iter().all(|c| {
                let mut ring = neighborhood(g, c.side(), l);
                ring.intersect_with(c.complement().side());
                connected(g, &ring)
            })
        })
        .ok_or(CutError::Lambda(max))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub class: usize,
    pub vertices: Vec<usize>,
    /// Reaches the sphere, so the ball shows only part of it.
    pub truncated: bool,
    pub connected: bool,
}

impl Block {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// B[C] as the intersection of the λ-neighbourhoods over the class,
/// cross-checked against ⋂D ∪ ⋃(N^λ(D) ∩ D̄).
pub fn block(g: &SimpleGraph, tree: &StructureTree, class: usize, lambda: usize) -> Result<Block, CutError> {
    let members = &tree.classes[class];
    let mut full = FixedBitSet::with_capacity(g.len());
    full.insert_range(..);
    let mut inter = full.clone();
    let mut core = full;
    let mut rims = FixedBitSet::with_capacity(g.len());
    for &i in members {
        let d = &tree.cuts[i];
        let n = neighborhood(g, d.side(), lambda);
        inter.intersect_with(&n);
        core.intersect_with(d.side());
        let mut rim = n;
        rim.intersect_with(d.complement().side());
        rims.union_with(&rim);
    }
    core.union_with(&rims);
    if inter != core {
        return Err(CutError::FormulaMismatch { class, left: inter.count_ones(..), right: core.count_ones(..) });
    }
    let vertices: Vec<usize> = inter.ones().collect();
    Ok(Block {
        class,
        truncated: vertices.iter().any(|&v| g.on_sphere(v)),
        connected: connected(g, &inter),
        vertices,
    })
}

pub fn blocks(g: &SimpleGraph, tree: &StructureTree, lambda: usize) -> Result<Vec<Block>, CutError> {
    (0..tree.classes.len()).map(|c| block(g, tree, c, lambda)).collect()
}
