use std::collections::BTreeSet;

use crate::graph::SimpleGraph;
use crate::td::{Bag, TreeDecomposition};
use crate::CayleyError;

fn simplicial(g: &SimpleGraph, removed: &[bool], v: usize) -> bool {
    let ns: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| !removed[u]).collect();
    ns.iter().enumerate().all(|(i, &a)| ns[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

/// Perfect elimination ordering, always removing the smallest simplicial
/// vertex. `None` if the graph is not chordal.
pub fn perfect_elimination_ordering(g: &SimpleGraph) -> Option<Vec<usize>> {
    let n = g.len();
    let mut removed = vec![false; n];
    let mut ready: BTreeSet<usize> = (0..n).filter(|&v| simplicial(g, &removed, v)).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = ready.pop_first() {
        removed[v] = true;
        order.push(v);
        // removing a vertex never destroys simpliciality
        for &u in g.neighbors(v) {
            if !removed[u] && !ready.contains(&u) && simplicial(g, &removed, u) {
                ready.insert(u);
            }
        }
    }
    (order.len() == n).then_some(order)
}

pub fn is_chordal(g: &SimpleGraph) -> bool {
    perfect_elimination_ordering(g).is_some()
}

/// Tree decomposition of a connected chordal graph whose bags are exactly
/// its maximal cliques, built by adding vertices in reverse elimination
/// order: a vertex whose later neighbours form a whole bag joins it,
/// otherwise it opens a new bag attached to one containing its neighbours.
pub fn clique_tree(g: &SimpleGraph) -> Result<TreeDecomposition, CayleyError> {
    if g.is_empty() {
        return Ok(TreeDecomposition::default());
    }
    if !g.is_connected() {
        return Err(CayleyError::Graph("clique tree needs a connected graph".into()));
    }
    let order = perfect_elimination_ordering(g).ok_or(CayleyError::NotChordal)?;
    let mut pos = vec![0; g.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let last = *order.last().expect("non-empty");
    let mut bags: Vec<Bag> = vec![BTreeSet::from([last])];
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); g.len()];
    holders[last].push(0);
    let mut edges = Vec::new();
    for &v in order.iter().rev().skip(1) {
        let later: Bag = g.neighbors(v).iter().copied().filter(|&u| pos[u] > pos[v]).collect();
        // every later neighbour set is a non-empty clique of a connected graph
        let first = *later.iter().next().expect("connected graph");
        let host = holders[first]
            .iter()
            .copied()
            .find(|&b| later.is_subset(&bags[b]))
            .expect("cliques lie in some bag");
        let target = if bags[host] == later {
            bags[host].insert(v);
            host
        } else {
            let mut b = later.clone();
            b.insert(v);
            bags.push(b);
            edges.push((host, bags.len() - 1));
            bags.len() - 1
        };
        holders[v].push(target);
        if target != host {
            for &u in &later {
                holders[u].push(target);
            }
        }
    }
    Ok(TreeDecomposition { bags, edges })
}

/// All maximal cliques (Bron–Kerbosch with pivoting), each sorted.
pub fn maximal_cliques(g: &SimpleGraph) -> Vec<Bag> {
    fn go(g: &SimpleGraph, r: &mut Vec<usize>, p: BTreeSet<usize>, mut x: BTreeSet<usize>, out: &mut Vec<Bag>) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r.iter().copied().collect());
            }
            return;
        }
        let pivot = *p.union(&x).max_by_key(|&&u| p.iter().filter(|&&w| g.has_edge(u, w)).count()).expect("non-empty");
        let cands: Vec<usize> = p.iter().copied().filter(|&v| !g.has_edge(pivot, v)).collect();
        let mut p = p;
        for v in cands {
            let ns = g.neighbors(v);
            r.push(v);
            go(g, r, p.intersection(ns).copied().collect(), x.intersection(ns).copied().collect(), out);
            r.pop();
            p.remove(&v);
            x.insert(v);
        }
    }
    let mut out = Vec::new();
    go(g, &mut Vec::new(), (0..g.len()).collect(), BTreeSet::new(), &mut out);
    out.sort();
    out
}
