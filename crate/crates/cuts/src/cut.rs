use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use bs_cayley::{Key, SimpleGraph};
use fixedbitset::FixedBitSet;

use crate::CutError;

pub type Edge = (usize, usize);

/// A vertex set of a finite graph with both it and its complement non-empty
/// and connected. Sides holding a sphere vertex of a ball count as
/// infinite.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cut {
    side: FixedBitSet,
    delta: Vec<Edge>,
    infinite: (bool, bool),
}

impl Cut {
    pub fn contains(&self, v: usize) -> bool {
        self.side.contains(v)
    }

    pub fn side(&self) -> &FixedBitSet {
        &self.side
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.side.ones().collect()
    }

    pub fn len(&self) -> usize {
        self.side.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Edges (u, v), u < v, with exactly one end in the side; sorted.
    pub fn delta(&self) -> &[Edge] {
        &self.delta
    }

    pub fn weight(&self) -> usize {
        self.delta.len()
    }

    /// Endpoints of boundary edges on either side.
    pub fn vertex_boundary(&self) -> BTreeSet<usize> {
        self.delta.iter().flat_map(|&(u, v)| [u, v]).collect()
    }

    pub fn side_infinite(&self) -> bool {
        self.infinite.0
    }

    pub fn complement_infinite(&self) -> bool {
        self.infinite.1
    }

    pub fn both_infinite(&self) -> bool {
        self.infinite.0 && self.infinite.1
    }

    pub fn complement(&self) -> Cut {
        let mut side = self.side.clone();
        side.toggle_range(..);
        Cut { side, delta: self.delta.clone(), infinite: (self.infinite.1, self.infinite.0) }
    }

    pub fn is_subset(&self, other: &Cut) -> bool {
        self.side.is_subset(&other.side)
    }

    pub fn is_strict_subset(&self, other: &Cut) -> bool {
        self.side != other.side && self.side.is_subset(&other.side)
    }

    /// Boundary as key pairs (inside, outside), sorted; comparable across
    /// balls of different radii.
    pub fn key_form(&self, g: &SimpleGraph) -> Vec<(Key, Key)> {
        let mut out: Vec<(Key, Key)> = self
            .delta
            .iter()
            .map(|&(u, v)| if self.contains(u) { (u, v) } else { (v, u) })
            .map(|(i, o)| (g.key(i).clone(), g.key(o).clone()))
            .collect();
        out.sort();
        out
    }

    pub fn show(&self, g: &SimpleGraph) -> String {
        let edges: Vec<String> = self
            .delta
            .iter()
            .map(|&(u, v)| if self.contains(u) { (u, v) } else { (v, u) })
            .map(|(i, o)| format!("{}|{}", g.label(i), g.label(o)))
            .collect();
        format!("δ = {{{}}} ({} side vertices)", edges.join(", "), self.len())
    }
}

fn connected(g: &SimpleGraph, set: &FixedBitSet) -> bool {
    let Some(s) = set.ones().next() else { return false };
    let mut seen = FixedBitSet::with_capacity(g.len());
    seen.insert(s);
    let mut stack = vec![s];
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &v in g.neighbors(u) {
            if set.contains(v) && !seen.contains(v) {
                seen.insert(v);
                count += 1;
                stack.push(v);
            }
        }
    }
    count == set.count_ones(..)
}

/// Validate a side and compute its boundary and infinity flags.
pub fn cut_from_side(g: &SimpleGraph, side: FixedBitSet) -> Result<Cut, CutError> {
    let mut side = side;
    side.grow(g.len());
    let mut rest = side.clone();
    rest.toggle_range(..);
    if side.is_clear() || rest.is_clear() {
        return Err(CutError::NotACut("a side is empty".into()));
    }
    if !connected(g, &side) || !connected(g, &rest) {
        return Err(CutError::NotACut("a side is disconnected".into()));
    }
    let delta: Vec<Edge> = g.edges().into_iter().filter(|&(u, v)| side.contains(u) != side.contains(v)).collect();
    let inf = |s: &FixedBitSet| s.ones().any(|v| g.on_sphere(v));
    let infinite = (inf(&side), inf(&rest));
    Ok(Cut { side, delta, infinite })
}

pub fn cut_from_vertices(g: &SimpleGraph, vs: &[usize]) -> Result<Cut, CutError> {
    let mut side = FixedBitSet::with_capacity(g.len());
    for &v in vs {
        if v >= g.len() {
            return Err(CutError::NotACut(format!("vertex {v} out of range")));
        }
        side.insert(v);
    }
    cut_from_side(g, side)
}

fn norm(e: Edge) -> Edge {
    (e.0.min(e.1), e.0.max(e.1))
}

struct Search<'a> {
    g: &'a SimpleGraph,
    removed: HashSet<Edge>,
}

impl Search<'_> {
    fn live(&self, u: usize, v: usize) -> bool {
        !self.removed.contains(&norm((u, v)))
    }

    /// Breadth-first tree from `s` in the graph minus removed edges.
    fn reach(&self, s: usize) -> Vec<usize> {
        let mut parent = vec![usize::MAX; self.g.len()];
        parent[s] = s;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &v in self.g.neighbors(u) {
                if parent[v] == usize::MAX && self.live(u, v) {
                    parent[v] = u;
                    q.push_back(v);
                }
            }
        }
        parent
    }

    /// Sides of all cuts of the current graph with `f` on the boundary and
    /// weight at most `budget`. A bridge yields its one cut; otherwise
    /// every such cut also crosses a fixed u–v path avoiding f, and drops
    /// to weight budget − 1 once f is gone.
    fn cuts_through(&mut self, f: Edge, budget: usize, out: &mut Vec<FixedBitSet>) {
        if self.reach(f.0).iter().any(|&p| p == usize::MAX) {
            return;
        }
        self.removed.insert(f);
        let parent = self.reach(f.0);
        if parent[f.1] == usize::MAX {
            let mut side = FixedBitSet::with_capacity(self.g.len());
            side.extend((0..self.g.len()).filter(|&v| parent[v] != usize::MAX));
            out.push(side);
        } else if budget > 1 {
            let mut path = Vec::new();
            let mut x = f.1;
            while x != f.0 {
                path.push(norm((parent[x], x)));
                x = parent[x];
            }
            let mut seen = HashSet::new();
            for h in path {
                let mut sub = Vec::new();
                self.cuts_through(h, budget - 1, &mut sub);
                for s in sub {
                    if s.contains(f.0) != s.contains(f.1) && seen.insert(s.clone()) {
                        out.push(s);
                    }
                }
            }
        }
        self.removed.remove(&f);
    }
}

/// All cuts of weight at most `k` whose vertex boundary meets `s`, each
/// once, oriented to contain vertex 0, sorted by (weight, boundary).
pub fn enumerate_kcuts(g: &SimpleGraph, s: &[usize], k: usize) -> Vec<Cut> {
    let seeds: BTreeSet<Edge> = s.iter().flat_map(|&u| g.neighbors(u).iter().map(move |&v| norm((u, v)))).collect();
    let mut found: BTreeMap<(usize, Vec<Edge>), Cut> = BTreeMap::new();
    let mut search = Search { g, removed: HashSet::new() };
    for e in seeds {
        let mut sides = Vec::new();
        search.cuts_through(e, k, &mut sides);
        for mut side in sides {
            if !side.contains(0) {
                side.toggle_range(..);
            }
            let cut = cut_from_side(g, side).expect("search yields cuts");
            if cut.weight() <= k {
                found.entry((cut.weight(), cut.delta.clone())).or_insert(cut);
            }
        }
    }
    found.into_values().collect()
}

/// C∩D, C∩D̄, C̄∩D, C̄∩D̄.
pub fn corners(c: &Cut, d: &Cut) -> [Vec<usize>; 4] {
    let n = c.side.len();
    let mut out: [Vec<usize>; 4] = Default::default();
    for v in 0..n {
        let i = match (c.contains(v), d.contains(v)) {
            (true, true) => 0,
            (true, false) => 1,
            (false, true) => 2,
            (false, false) => 3,
        };
        out[i].push(v);
    }
    out
}

/// Some corner is empty.
pub fn is_nested(c: &Cut, d: &Cut) -> bool {
    corners(c, d).iter().any(Vec::is_empty)
}
