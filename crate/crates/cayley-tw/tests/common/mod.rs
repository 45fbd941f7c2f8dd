#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use bs_cayley::{GogOracle, SimpleGraph, TreeDecomposition};
use bs_gog::{fixtures::fixture, GraphOfGroups};
use bs_pregroup::{parse_pregroup, Pregroup};

pub fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

pub fn pregroup(name: &str) -> Pregroup {
    parse_pregroup(&fixture_text(&format!("{name}.pg"))).unwrap()
}

pub fn gog(name: &str) -> Arc<GraphOfGroups> {
    Arc::new(fixture(name).unwrap())
}

/// Graph-of-groups oracle with generators given as words.
pub fn gog_oracle(name: &str, gens: &[&str]) -> GogOracle {
    let g = gog(name);
    let words = gens.iter().map(|s| g.parse_word(s).unwrap()).collect();
    GogOracle::new(g, words).unwrap()
}

pub fn is_clique(g: &SimpleGraph, b: &BTreeSet<usize>) -> bool {
    b.iter().all(|&u| b.iter().all(|&v| u == v || g.has_edge(u, v)))
}

/// Tree decomposition from an elimination ordering: each vertex with its
/// later neighbours in the fill-in graph, hung below its first later
/// neighbour (or the next vertex, for a new component).
pub fn elimination_td(g: &SimpleGraph, order: &[usize]) -> TreeDecomposition {
    let n = g.len();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).clone()).collect();
    let mut bags = Vec::new();
    let mut parent = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        let later: Vec<usize> = adj[v].iter().copied().filter(|&u| pos[u] > i).collect();
        for &a in &later {
            for &b in &later {
                if a != b {
                    adj[a].insert(b);
                }
            }
        }
        let mut bag: BTreeSet<usize> = later.iter().copied().collect();
        bag.insert(v);
        bags.push(bag);
        parent.push(later.iter().map(|&u| pos[u]).min().or(if i + 1 < n { Some(i + 1) } else { None }));
    }
    let edges = parent.iter().enumerate().filter_map(|(i, p)| p.map(|p| (i, p))).collect();
    TreeDecomposition::new(bags, edges)
}

/// Chordless cycle of length at least four, by brute force over subsets.
pub fn has_hole(g: &SimpleGraph) -> bool {
    let n = g.len();
    assert!(n <= 12);
    for mask in 0u32..1 << n {
        if mask.count_ones() < 4 {
            continue;
        }
        let keep: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
        let (h, _) = g.induced(&keep);
        if h.is_connected() && (0..h.len()).all(|v| h.degree(v) == 2) {
            return true;
        }
    }
    false
}
