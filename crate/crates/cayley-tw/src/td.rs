use std::collections::{BTreeSet, VecDeque};
use std::fmt::{self, Write as _};

use crate::graph::{escape, SimpleGraph};

pub type Bag = BTreeSet<usize>;

/// Bags indexed by tree nodes, with the tree given by its edges.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub bags: Vec<Bag>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TdAxiom {
    /// the index graph is not a tree
    Tree,
    /// a vertex lies in no bag
    T1,
    /// an edge lies in no bag
    T2,
    /// the bags containing a vertex do not span a subtree
    T3,
}

impl fmt::Display for TdAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TdAxiom::Tree => "tree",
            TdAxiom::T1 => "T1",
            TdAxiom::T2 => "T2",
            TdAxiom::T3 => "T3",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{axiom} fails: {detail}")]
pub struct TdViolation {
    pub axiom: TdAxiom,
    /// offending graph vertices, if any
    pub witness: Vec<usize>,
    pub detail: String,
}

impl TreeDecomposition {
    pub fn new(bags: Vec<Bag>, edges: Vec<(usize, usize)>) -> Self {
        TreeDecomposition { bags, edges }
    }

    /// A single bag holding every vertex.
    pub fn trivial(g: &SimpleGraph) -> Self {
        TreeDecomposition { bags: vec![(0..g.len()).collect()], edges: vec![] }
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    /// Largest bag.
    pub fn bag_size(&self) -> usize {
        self.bags.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    /// Bag size minus one.
    pub fn width(&self) -> usize {
        self.bag_size().saturating_sub(1)
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(s, t) in &self.edges {
            adj[s].push(t);
            adj[t].push(s);
        }
        adj
    }

    pub fn to_dot(&self, g: &SimpleGraph) -> String {
        let mut s = String::from("graph TD {\n  node [shape=box];\n");
        for (i, b) in self.bags.iter().enumerate() {
            let names: Vec<&str> = b.iter().map(|&v| g.label(v)).collect();
            let _ = writeln!(s, "  t{i} [label=\"{{{}}}\"];", escape(&names.join(", ")));
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(s, "  t{a} -- t{b};");
        }
        s.push_str("}\n");
        s
    }

    pub fn show(&self, g: &SimpleGraph) -> String {
        let mut s = String::new();
        for (i, b) in self.bags.iter().enumerate() {
            let names: Vec<&str> = b.iter().map(|&v| g.label(v)).collect();
            let _ = writeln!(s, "bag {i}: {{{}}}", names.join(", "));
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(s, "tree {a} {b}");
        }
        s
    }
}

fn is_tree(n: usize, edges: &[(usize, usize)]) -> Result<(), String> {
    if n == 0 {
        return if edges.is_empty() { Ok(()) } else { Err("edges without bags".into()) };
    }
    if edges.iter().any(|&(a, b)| a >= n || b >= n || a == b) {
        return Err("tree edge out of range or a loop".into());
    }
    if edges.len() != n - 1 {
        return Err(format!("{} nodes but {} edges", n, edges.len()));
    }
    let td = TreeDecomposition { bags: vec![Bag::new(); n], edges: edges.to_vec() };
    let adj = td.adjacency();
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0];
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    if seen.iter().all(|&x| x) {
        Ok(())
    } else {
        Err("tree is disconnected".into())
    }
}

/// Check the decomposition axioms for every vertex.
pub fn validate_td(g: &SimpleGraph, td: &TreeDecomposition) -> Result<(), TdViolation> {
    validate_td_within(g, td, &vec![true; g.len()])
}

/// Check the decomposition axioms for the vertices in `keep` and the edges
/// between them; bags may hold other vertices too.
pub fn validate_td_within(g: &SimpleGraph, td: &TreeDecomposition, keep: &[bool]) -> Result<(), TdViolation> {
    is_tree(td.len(), &td.edges).map_err(|detail| TdViolation { axiom: TdAxiom::Tree, witness: vec![], detail })?;
    if let Some(v) = td.bags.iter().flatten().find(|&&v| v >= g.len()) {
        return Err(TdViolation { axiom: TdAxiom::T1, witness: vec![*v], detail: format!("bag holds unknown vertex {v}") });
    }
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); g.len()];
    for (i, b) in td.bags.iter().enumerate() {
        for &v in b {
            holders[v].push(i);
        }
    }
    for v in (0..g.len()).filter(|&v| keep[v]) {
        if holders[v].is_empty() {
            return Err(TdViolation {
                axiom: TdAxiom::T1,
                witness: vec![v],
                detail: format!("vertex `{}` is in no bag", g.label(v)),
            });
        }
    }
    for (u, v) in g.edges() {
        if keep[u] && keep[v] && !holders[u].iter().any(|&i| td.bags[i].contains(&v)) {
            return Err(TdViolation {
                axiom: TdAxiom::T2,
                witness: vec![u, v],
                detail: format!("edge `{}`-`{}` is in no bag", g.label(u), g.label(v)),
            });
        }
    }
    let adj = td.adjacency();
    for v in (0..g.len()).filter(|&v| keep[v]) {
        let mut seen = vec![false; td.len()];
        let start = holders[v][0];
        seen[start] = true;
        let mut stack = vec![start];
        let mut reached = 1;
        while let Some(s) = stack.pop() {
            for &t in &adj[s] {
                if !seen[t] && td.bags[t].contains(&v) {
                    seen[t] = true;
                    reached += 1;
                    stack.push(t);
                }
            }
        }
        if reached != holders[v].len() {
            return Err(TdViolation {
                axiom: TdAxiom::T3,
                witness: vec![v],
                detail: format!("bags containing `{}` are not connected in the tree", g.label(v)),
            });
        }
    }
    Ok(())
}

/// Replace every bag by its ℓ-neighbourhood.
pub fn neighborhood_td(g: &SimpleGraph, td: &TreeDecomposition, ell: usize) -> TreeDecomposition {
    let bags = td
        .bags
        .iter()
        .map(|b| {
            let mut out = b.clone();
            let mut frontier: Vec<usize> = b.iter().copied().collect();
            for _ in 0..ell {
                let mut next = Vec::new();
                for u in frontier {
                    for &v in g.neighbors(u) {
                        if out.insert(v) {
                            next.push(v);
                        }
                    }
                }
                frontier = next;
            }
            out
        })
        .collect();
    TreeDecomposition { bags, edges: td.edges.clone() }
}

/// Drop empty bags, then make neighbouring bags incomparable: a bag strictly
/// inside a neighbour closer to the root takes that neighbour's contents,
/// and neighbours with equal bags are contracted. The result is again a
/// decomposition, no bag contains another and no bag grows past the
/// largest input bag.
pub fn normalize_td(td: &TreeDecomposition) -> TreeDecomposition {
    let n = td.len();
    let keep: Vec<usize> = (0..n).filter(|&i| !td.bags[i].is_empty()).collect();
    if keep.is_empty() {
        return TreeDecomposition::default();
    }
    let mut new_of = vec![usize::MAX; n];
    for (i, &s) in keep.iter().enumerate() {
        new_of[s] = i;
    }
    let mut bags: Vec<Bag> = keep.iter().map(|&s| td.bags[s].clone()).collect();
    // Dropping empty bags leaves vertex-disjoint subtrees; chain them.
    let mut uf: Vec<usize> = (0..keep.len()).collect();
    fn find(uf: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while uf[r] != r {
            r = uf[r];
        }
        let mut y = x;
        while uf[y] != r {
            let next = uf[y];
            uf[y] = r;
            y = next;
        }
        r
    }
    let mut edges = Vec::new();
    for &(a, b) in &td.edges {
        let (a, b) = (new_of[a], new_of[b]);
        if a != usize::MAX && b != usize::MAX {
            let (ra, rb) = (find(&mut uf, a), find(&mut uf, b));
            uf[ra] = rb;
            edges.push((a, b));
        }
    }
    for i in 1..keep.len() {
        let (r0, ri) = (find(&mut uf, 0), find(&mut uf, i));
        if r0 != ri {
            uf[ri] = r0;
            edges.push((0, i));
        }
    }

    // Absorb: a bag strictly inside a neighbour takes the neighbour's bag,
    // shallowest first.
    loop {
        let depth = depths(bags.len(), &edges);
        let mut best: Option<(usize, usize, usize)> = None;
        for &(a, b) in &edges {
            for (s, t) in [(a, b), (b, a)] {
                if bags[s].len() < bags[t].len() && bags[s].is_subset(&bags[t]) {
                    let cand = (depth[s], s, t);
                    if best.is_none_or(|x| cand < x) {
                        best = Some(cand);
                    }
                }
            }
        }
        match best {
            Some((_, s, t)) => bags[s] = bags[t].clone(),
            None => break,
        }
    }

    // Contract equal neighbours.
    let mut uf: Vec<usize> = (0..bags.len()).collect();
    for &(a, b) in &edges {
        if bags[a] == bags[b] {
            let (ra, rb) = (find(&mut uf, a), find(&mut uf, b));
            uf[ra] = rb;
        }
    }
    let mut class = vec![usize::MAX; bags.len()];
    let mut out_bags = Vec::new();
    for s in 0..bags.len() {
        let r = find(&mut uf, s);
        if class[r] == usize::MAX {
            class[r] = out_bags.len();
            out_bags.push(bags[r].clone());
        }
        class[s] = class[r];
    }
    let mut out_edges: Vec<(usize, usize)> = edges
        .iter()
        .map(|&(a, b)| (class[a], class[b]))
        .filter(|(a, b)| a != b)
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    out_edges.sort_unstable();
    out_edges.dedup();
    TreeDecomposition { bags: out_bags, edges: out_edges }
}

fn depths(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let td = TreeDecomposition { bags: vec![Bag::new(); n], edges: edges.to_vec() };
    let adj = td.adjacency();
    let mut d = vec![usize::MAX; n];
    if n == 0 {
        return d;
    }
    d[0] = 0;
    let mut q = VecDeque::from([0]);
    while let Some(u) = q.pop_front() {
        for &v in &adj[u] {
            if d[v] == usize::MAX {
                d[v] = d[u] + 1;
                q.push_back(v);
            }
        }
    }
    d
}
