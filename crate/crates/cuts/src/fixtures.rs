//! Hand-built graphs: a one-ended comb whose minimal splitting cuts come
//! in two weights, and a wheel with crossing cuts.

use bs_cayley::SimpleGraph;

use crate::path::PathWindow;

/// A ladder ℤ × {0, 1} with a ray rising from (0, 1), cut down to the
/// ball of radius `l` around (0, 0). Labels are `i,j`.
pub struct Comb {
    pub ball: SimpleGraph,
    /// Down the ray, then right along the upper rail.
    pub alpha: PathWindow,
    /// The lower rail.
    pub beta: PathWindow,
}

pub fn comb(l: usize) -> Comb {
    let l = l.max(2) as i64;
    let mut labels = Vec::new();
    for i in -l..=l {
        for j in 0..=1 {
            labels.push(format!("{i},{j}"));
        }
    }
    for j in 2..=l {
        labels.push(format!("0,{j}"));
    }
    let mut g = SimpleGraph::new(&labels);
    let at = |g: &SimpleGraph, i: i64, j: i64| g.vertex(&format!("{i},{j}"));
    for i in -l..=l {
        let (lo, hi) = (at(&g, i, 0).unwrap(), at(&g, i, 1).unwrap());
        g.add_edge(lo, hi).unwrap();
        if i < l {
            for j in 0..=1 {
                let (a, b) = (at(&g, i, j).unwrap(), at(&g, i + 1, j).unwrap());
                g.add_edge(a, b).unwrap();
            }
        }
    }
    for j in 2..=l {
        let (a, b) = (at(&g, 0, j - 1).unwrap(), at(&g, 0, j).unwrap());
        g.add_edge(a, b).unwrap();
    }
    let ball = g.ball_around(at(&g, 0, 0).unwrap(), l as usize);
    let walk = |pts: &[(i64, i64)]| -> Vec<usize> { pts.iter().filter_map(|&(i, j)| at(&ball, i, j)).collect() };

    let mut up: Vec<(i64, i64)> = (1..=l).rev().map(|j| (0, j)).collect();
    up.extend((1..=l).map(|i| (i, 1)));
    let alpha_v = walk(&up);
    let origin = alpha_v.iter().position(|&v| ball.label(v) == "0,1").unwrap();
    let alpha = PathWindow::new(&ball, alpha_v, origin).expect("comb path");

    let rail: Vec<(i64, i64)> = (-l..=l).map(|i| (i, 0)).collect();
    let beta_v = walk(&rail);
    let origin = beta_v.iter().position(|&v| ball.label(v) == "0,0").unwrap();
    let beta = PathWindow::new(&ball, beta_v, origin).expect("comb rail");
    Comb { ball, alpha, beta }
}

/// The n-cycle 0..n with a hub n joined to every rim vertex.
pub fn wheel(n: usize) -> SimpleGraph {
    let mut g = SimpleGraph::with_vertices(n + 1);
    for v in 0..n {
        g.add_edge(v, (v + 1) % n).unwrap();
        g.add_edge(v, n).unwrap();
    }
    g
}
