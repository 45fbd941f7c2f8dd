use std::collections::HashSet;

use bs_cayley::{GroupOracle, Key, SimpleGraph};

use crate::cut::{enumerate_kcuts, Cut};
use crate::CutError;

/// Powers of the period checked against the identity.
pub const TORSION_CHECK: usize = 16;

/// The visible part of a bi-infinite simple path: consecutive, pairwise
/// distinct ball vertices, with a marked origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathWindow {
    pub vertices: Vec<usize>,
    pub origin: usize,
}

impl PathWindow {
    pub fn new(g: &SimpleGraph, vertices: Vec<usize>, origin: usize) -> Result<Self, CutError> {
        if origin >= vertices.len() {
            return Err(CutError::Path("origin outside the window".into()));
        }
        let distinct: HashSet<usize> = vertices.iter().copied().collect();
        if distinct.len() != vertices.len() {
            return Err(CutError::Path("path revisits a vertex inside the ball".into()));
        }
        if vertices.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
            return Err(CutError::Path("consecutive path vertices are not adjacent".into()));
        }
        Ok(PathWindow { vertices, origin })
    }

    /// The stretch around the origin that stays within distance R − margin;
    /// its two ends stand for the two tails. Needs at least 2·margin
    /// vertices.
    pub fn segment(&self, g: &SimpleGraph, margin: usize) -> Result<&[usize], CutError> {
        let r = g.radius().ok_or_else(|| CutError::Path("paths live in balls".into()))?;
        let near = |v: usize| g.distance(v).expect("ball") + margin <= r;
        if !near(self.vertices[self.origin]) {
            return Err(CutError::Path("origin too close to the sphere".into()));
        }
        let mut lo = self.origin;
        while lo > 0 && near(self.vertices[lo - 1]) {
            lo -= 1;
        }
        let mut hi = self.origin;
        while hi + 1 < self.vertices.len() && near(self.vertices[hi + 1]) {
            hi += 1;
        }
        let seg = &self.vertices[lo..=hi];
        if seg.len() < (2 * margin).max(2) {
            return Err(CutError::Path(format!("visible window of {} vertices is shorter than 2·margin", seg.len())));
        }
        Ok(seg)
    }
}

/// The path through u·p^k, k ∈ ℤ, with every intermediate vertex.
#[derive(Clone, Debug)]
pub struct PeriodicPath {
    pub base: Key,
    pub period: Vec<(usize, bool)>,
    pub window: PathWindow,
}

impl PeriodicPath {
    pub fn new(oracle: &dyn GroupOracle, g: &SimpleGraph, base: &Key, period: &[(usize, bool)]) -> Result<Self, CutError> {
        if period.is_empty() {
            return Err(CutError::Path("empty period".into()));
        }
        let id = oracle.identity();
        let mut power = id.clone();
        for j in 1..=TORSION_CHECK {
            power = oracle.walk(&power, period);
            if power == id {
                return Err(CutError::Torsion(j));
            }
        }
        let start = g.index_of(base).ok_or_else(|| CutError::Path("base outside the ball".into()))?;
        let inverse: Vec<(usize, bool)> = period.iter().rev().map(|&(s, i)| (s, !i)).collect();
        let run = |word: &[(usize, bool)]| -> Vec<usize> {
            let mut out = Vec::new();
            let mut key = base.clone();
            'outer: loop {
                for &(s, i) in word {
                    key = oracle.step(&key, s, i);
                    match g.index_of(&key) {
                        Some(v) if !out.contains(&v) && v != start => out.push(v),
                        _ => break 'outer,
                    }
                }
            }
            out
        };
        let fwd = run(period);
        let mut bwd = run(&inverse);
        bwd.reverse();
        let origin = bwd.len();
        let mut vertices = bwd;
        vertices.push(start);
        vertices.extend(fwd);
        let window = PathWindow::new(g, vertices, origin)?;
        Ok(PeriodicPath { base: base.clone(), period: period.to_vec(), window })
    }
}

/// Both tails on different sides, both sides infinite.
pub fn splits(g: &SimpleGraph, cut: &Cut, path: &PathWindow, margin: usize) -> Result<bool, CutError> {
    let seg = path.segment(g, margin)?;
    let (a, b) = (seg[0], seg[seg.len() - 1]);
    Ok(cut.both_infinite() && cut.contains(a) != cut.contains(b))
}

/// Cuts of weight at most `max_k` splitting the path. Each crosses the
/// visible segment, so the search is seeded there.
pub fn cuts_splitting_path(g: &SimpleGraph, path: &PathWindow, max_k: usize, margin: usize) -> Result<Vec<Cut>, CutError> {
    let seg = path.segment(g, margin)?.to_vec();
    let mut out = Vec::new();
    for c in enumerate_kcuts(g, &seg, max_k) {
        if splits(g, &c, path, margin)? {
            out.push(c);
        }
    }
    Ok(out)
}

/// The splitting cuts of least weight.
pub fn minimal_cuts(cuts: &[Cut]) -> Vec<Cut> {
    let Some(w) = cuts.iter().map(Cut::weight).min() else { return vec![] };
    cuts.iter().filter(|c| c.weight() == w).cloned().collect()
}

/// One periodic path with each period, through every base vertex within
/// `spread` of the identity.
pub fn translated_paths(
    oracle: &dyn GroupOracle,
    g: &SimpleGraph,
    periods: &[Vec<(usize, bool)>],
    spread: usize,
) -> Result<Vec<PeriodicPath>, CutError> {
    let mut out = Vec::new();
    for p in periods {
        for v in 0..g.len() {
            if g.distance(v).is_some_and(|d| d <= spread) {
                out.push(PeriodicPath::new(oracle, g, g.key(v), p)?);
            }
        }
    }
    Ok(out)
}
