use std::collections::BTreeSet;

use bs_lang::{shortest_yields, to_cnf, Cfg};

use crate::graph::SimpleGraph;
use crate::td::{validate_td_within, Bag, TdViolation, TreeDecomposition};
use crate::CayleyError;

/// Level bags on a ball, with the interior check and diameter measurements.
#[derive(Clone, Debug)]
pub struct MsDecomposition {
    pub td: TreeDecomposition,
    /// level n of each bag: it bounds a component of ball − B_n
    pub level: Vec<usize>,
    /// bags holding a sphere vertex; left out of measurements
    pub flagged: Vec<bool>,
    /// (T1)–(T3) restricted to vertices at distance < R
    pub interior: Result<(), TdViolation>,
    /// largest in-ball distance between two members of an unflagged bag;
    /// an upper bound for the distance in the whole Cayley graph
    pub max_diameter: usize,
    pub max_bag: usize,
    pub k: usize,
}

impl MsDecomposition {
    pub fn diameter_bound(&self) -> usize {
        3 * self.k
    }

    pub fn within_bound(&self) -> bool {
        self.max_diameter <= self.diameter_bound()
    }
}

/// Endpoints of edges leaving `c`.
fn vertex_boundary(g: &SimpleGraph, in_c: &[bool], c: &[usize]) -> Bag {
    let mut out = BTreeSet::new();
    for &u in c {
        for &v in g.neighbors(u) {
            if !in_c[v] {
                out.insert(u);
                out.insert(v);
            }
        }
    }
    out
}

/// Root bag B₁; then for n = 1..R−1 one bag βC per component C of
/// ball − B_n, joined to the bag of the level n−1 component containing C.
pub fn muller_schupp_td(ball: &SimpleGraph, k: usize) -> Result<MsDecomposition, CayleyError> {
    let radius = ball.radius().ok_or_else(|| CayleyError::Graph("muller–schupp bags need a ball".into()))?;
    let dist: Vec<usize> = (0..ball.len()).map(|v| ball.distance(v).expect("ball")).collect();
    let root: Bag = (0..ball.len()).filter(|&v| dist[v] <= 1).collect();
    let mut bags = vec![root];
    let mut level = vec![0];
    let mut edges = Vec::new();
    // component membership of the previous level: vertex -> bag index
    let mut owner: Vec<usize> = (0..ball.len()).map(|v| if dist[v] >= 1 { 0 } else { usize::MAX }).collect();
    for n in 1..radius {
        let keep: Vec<bool> = dist.iter().map(|&d| d > n).collect();
        let mut next_owner = vec![usize::MAX; ball.len()];
        for comp in ball.components(&keep) {
            let mut in_c = vec![false; ball.len()];
            for &v in &comp {
                in_c[v] = true;
            }
            let id = bags.len();
            bags.push(vertex_boundary(ball, &in_c, &comp));
            level.push(n);
            edges.push((owner[comp[0]], id));
            for &v in &comp {
                next_owner[v] = id;
            }
        }
        owner = next_owner;
    }
    let td = TreeDecomposition { bags, edges };
    let flagged: Vec<bool> = td.bags.iter().map(|b| b.iter().any(|&v| dist[v] == radius)).collect();
    let interior = validate_td_within(ball, &td, &ball.interior());
    let mut max_diameter = 0;
    let mut max_bag = 0;
    for (b, _) in td.bags.iter().zip(&flagged).filter(|(_, &f)| !f) {
        max_bag = max_bag.max(b.len());
        for &u in b {
            let d = ball.bfs(u);
            max_diameter = max_diameter.max(b.iter().map(|&v| d[v]).max().unwrap_or(0));
        }
    }
    Ok(MsDecomposition { td, level, flagged, interior, max_diameter, max_bag, k })
}

/// Largest shortest terminal yield over the variables of the Chomsky
/// normal form of `g`.
pub fn grammar_constant(g: &Cfg) -> usize {
    shortest_yields(&to_cnf(g)).into_iter().flatten().map(|w| w.len()).max().unwrap_or(0)
}
