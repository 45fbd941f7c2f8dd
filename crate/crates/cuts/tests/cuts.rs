mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use bs_cayley::{cayley_ball, FiniteOracle, FreeOracle, GroupOracle, SimpleGraph};
use bs_cuts::fixtures::{comb, wheel};
use bs_cuts::*;
use bs_groups::cyclic;
use common::*;

fn all(g: &SimpleGraph) -> Vec<usize> {
    (0..g.len()).collect()
}

#[test]
fn every_edge_of_a_tree_is_a_cut() {
    let f = FreeOracle::new(&["a", "b"]);
    let ball = cayley_ball(&f, 2);
    for k in [1, 2] {
        let cuts = enumerate_kcuts(&ball, &all(&ball), k);
        assert_eq!(cuts.len(), ball.edge_count());
        assert!(cuts.iter().all(|c| c.weight() == 1 && c.contains(0)));
    }
    let p = SimpleGraph::path(6);
    assert_eq!(enumerate_kcuts(&p, &all(&p), 1).len(), 5);
}

#[test]
fn four_cycle() {
    let c4 = SimpleGraph::cycle(4);
    assert!(enumerate_kcuts(&c4, &all(&c4), 1).is_empty());
    let two = enumerate_kcuts(&c4, &all(&c4), 2);
    assert_eq!(two.len(), 6);
    assert!(two.iter().all(|c| c.weight() == 2));
}

#[test]
fn the_one_cut_at_the_identity_of_the_free_product() {
    let o = free_product();
    let ball = cayley_ball(&o, 4);
    let cuts = enumerate_kcuts(&ball, &[0], 1);
    assert_eq!(cuts.len(), 1);
    let a = ball.vertex("a").unwrap();
    assert_eq!(cuts[0].delta(), &[(0, a)]);
    assert!(cuts[0].both_infinite());
    assert!(cuts[0].vertex_boundary().contains(&0));
}

#[test]
fn side_validation() {
    let c4 = SimpleGraph::cycle(4);
    assert!(matches!(cut_from_vertices(&c4, &[0, 2]), Err(CutError::NotACut(_))));
    assert!(matches!(cut_from_vertices(&c4, &[]), Err(CutError::NotACut(_))));
    assert!(matches!(cut_from_vertices(&c4, &[0, 1, 2, 3]), Err(CutError::NotACut(_))));
    let c = cut_from_vertices(&c4, &[0, 1]).unwrap();
    assert_eq!(c.delta(), &[(0, 3), (1, 2)]);
    assert_eq!(c.complement().vertices(), vec![2, 3]);
    assert_eq!(c.complement().complement(), c);
}

#[test]
fn nestedness_and_corners() {
    let p = SimpleGraph::path(6);
    let c = cut_from_vertices(&p, &[0, 1]).unwrap();
    let d = cut_from_vertices(&p, &[0, 1, 2, 3]).unwrap();
    assert!(is_nested(&c, &c));
    assert!(is_nested(&c, &d) && is_nested(&d, &c));
    assert!(corners(&c, &d)[1].is_empty());

    let w = wheel(8);
    let c = cut_from_vertices(&w, &[0, 1, 2, 3]).unwrap();
    let d = cut_from_vertices(&w, &[2, 3, 4, 5]).unwrap();
    assert!(!is_nested(&c, &d));
    assert_eq!(corners(&c, &d), [vec![2, 3], vec![0, 1], vec![4, 5], vec![6, 7, 8]]);
    assert!(!is_nested(&c, &d.complement()));
}

#[test]
fn axis_cuts_of_the_free_group() {
    let f = FreeOracle::new(&["a", "b"]);
    let ball = cayley_ball(&f, 4);
    let axis = PeriodicPath::new(&f, &ball, &f.identity(), &[(0, false)]).unwrap();
    assert_eq!(axis.window.vertices.len(), 9);
    let cuts = cuts_splitting_path(&ball, &axis.window, 1, 1).unwrap();
    assert_eq!(cuts.len(), 6);
    let on_axis: BTreeSet<(usize, usize)> = axis
        .window
        .vertices
        .windows(2)
        .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
        .collect();
    for c in &cuts {
        assert_eq!(c.weight(), 1);
        assert!(on_axis.contains(&c.delta()[0]));
        assert!(splits(&ball, c, &axis.window, 1).unwrap());
    }
    // a cut off the axis does not split it
    let b = ball.vertex("b").unwrap();
    let off = enumerate_kcuts(&ball, &[b], 1).into_iter().find(|c| c.delta() == [(0, b)]).unwrap();
    assert!(!splits(&ball, &off, &axis.window, 1).unwrap());
}

#[test]
fn weight_one_cuts_of_the_free_group_are_nested() {
    let f = FreeOracle::new(&["a", "b"]);
    let ball = cayley_ball(&f, 4);
    let interior: Vec<usize> = (0..ball.len()).filter(|&v| !ball.on_sphere(v)).collect();
    let universe = enumerate_kcuts(&ball, &interior, 1);
    assert_eq!(universe.len(), ball.edge_count());
    assert!(universe.iter().all(|c| m_value(c, &universe) == 0));
}

#[test]
fn minimal_cuts_of_the_free_product_axis() {
    let o = free_product();
    let ball = cayley_ball(&o, 6);
    let axis = PeriodicPath::new(&o, &ball, &o.identity(), AB).unwrap();
    let cuts = cuts_splitting_path(&ball, &axis.window, 2, 1).unwrap();
    let min = minimal_cuts(&cuts);
    assert!(!min.is_empty());
    assert!(min.iter().all(|c| c.weight() == 1));
    assert!(cuts.iter().any(|c| c.weight() == 2));
}

#[test]
fn torsion_is_rejected() {
    let o = FiniteOracle::new(Arc::new(cyclic(6)), vec![1]).unwrap();
    let ball = cayley_ball(&o, 3);
    assert!(matches!(PeriodicPath::new(&o, &ball, &o.identity(), &[(0, false)]), Err(CutError::Torsion(6))));
    assert!(matches!(PeriodicPath::new(&o, &ball, &o.identity(), &[]), Err(CutError::Path(_))));
    let p = free_product();
    let ball = cayley_ball(&p, 3);
    assert!(matches!(PeriodicPath::new(&p, &ball, &p.identity(), &[(1, false)]), Err(CutError::Torsion(3))));
}

#[test]
fn short_windows_are_rejected() {
    let f = FreeOracle::new(&["a", "b"]);
    let ball = cayley_ball(&f, 4);
    let axis = PeriodicPath::new(&f, &ball, &f.identity(), &[(0, false)]).unwrap();
    assert!(axis.window.segment(&ball, 1).is_ok());
    assert!(matches!(axis.window.segment(&ball, 4), Err(CutError::Path(_))));
    let g = SimpleGraph::path(3);
    assert!(PathWindow::new(&g, vec![0, 2], 0).is_err());
    assert!(PathWindow::new(&g, vec![0, 1, 0], 0).is_err());
}

#[test]
fn the_comb_has_minimal_cuts_of_two_weights() {
    let c = comb(6);
    let g = &c.ball;
    let along_alpha = cuts_splitting_path(g, &c.alpha, 2, 1).unwrap();
    let weights: BTreeSet<usize> = along_alpha.iter().map(Cut::weight).collect();
    assert_eq!(weights, BTreeSet::from([1, 2]));
    let min_alpha = minimal_cuts(&along_alpha);
    assert!(min_alpha.iter().all(|c| c.weight() == 1));
    let spine = |v: usize| g.label(v).starts_with("0,") && g.label(v) != "0,0";
    assert!(min_alpha.iter().all(|c| c.delta().iter().all(|&(u, v)| spine(u) && spine(v))));

    let along_beta = cuts_splitting_path(g, &c.beta, 2, 1).unwrap();
    let min_beta = minimal_cuts(&along_beta);
    assert!(!min_beta.is_empty() && min_beta.iter().all(|c| c.weight() == 2));
    // a weight-two cut minimal for β that also splits α
    let d = min_beta.iter().find(|d| along_alpha.iter().any(|a| a.delta() == d.delta())).unwrap();
    assert!(splits(g, d, &c.alpha, 1).unwrap());

    let opt = optimal_cuts(g, &[c.alpha.clone(), c.beta.clone()], None, 1).unwrap();
    assert_eq!(opt.k, 2);
    assert_eq!(opt.per_path[0].min_weight, Some(1));
    assert_eq!(opt.per_path[1].min_weight, Some(2));
    // smoke only: the comb is one-ended, outside the block theory
    if let Ok(t) = structure_tree(&opt.cuts) {
        let _ = blocks(g, &t, 1);
    }
}

#[test]
fn empty_path_family() {
    let f = FreeOracle::new(&["a", "b"]);
    let ball = cayley_ball(&f, 3);
    let opt = optimal_cuts(&ball, &[], None, 1).unwrap();
    assert!(opt.cuts.is_empty());
    assert_eq!(opt.k, 0);
    let t = structure_tree(&opt.cuts).unwrap();
    assert_eq!(t.vertex_count(), 0);
    assert!(t.edges.is_empty());
}

#[test]
fn one_cut_gives_one_edge() {
    let p = SimpleGraph::path(4);
    let c = cut_from_vertices(&p, &[0, 1]).unwrap();
    let t = structure_tree(&[c.clone(), c.complement()]).unwrap();
    assert_eq!(t.vertex_count(), 2);
    assert_eq!(t.edges.len(), 1);
    assert!(matches!(structure_tree(&[c.clone()]), Err(CutError::NotSymmetric(0))));
    let b = block(&p, &t, t.class_of[0], 1).unwrap();
    assert_eq!(b.vertices, vec![0, 1, 2]);
}

#[test]
fn crossing_cuts_have_no_tree() {
    let w = wheel(8);
    let c = cut_from_vertices(&w, &[0, 1, 2, 3]).unwrap();
    let d = cut_from_vertices(&w, &[2, 3, 4, 5]).unwrap();
    let set = [c.clone(), c.complement(), d.clone(), d.complement()];
    assert!(matches!(structure_tree(&set), Err(CutError::NotNested(0, 2))));
    assert!(check_nested(&set[..2]).is_ok());
}

#[test]
fn free_group_structure_tree_is_the_inner_ball() {
    let f = FreeOracle::new(&["a", "b"]);
    let p = pipeline(&f, 4, &[vec![(0, false)], vec![(1, false)]], 2);
    let inner: Vec<usize> = (0..p.ball.len()).filter(|&v| p.ball.distance(v).unwrap() <= 3).collect();
    assert_eq!(p.opt.k, 1);
    assert_eq!(p.opt.cuts.len(), 2 * (inner.len() - 1));
    assert!(check_nested(&p.opt.cuts).is_ok());
    assert_eq!(p.tree.vertex_count(), inner.len());

    let centre: Vec<usize> = (0..p.tree.vertex_count()).map(|c| class_centre(&p.tree, c).unwrap()).collect();
    assert_eq!(centre.iter().copied().collect::<BTreeSet<_>>(), inner.iter().copied().collect());
    for e in &p.tree.edges {
        assert!(p.ball.has_edge(centre[e.source], centre[e.target]));
    }

    assert_eq!(p.lambda, 1);
    for b in &p.blocks {
        assert!(b.connected);
        let v = centre[b.class];
        if p.ball.distance(v).unwrap() <= 2 {
            assert!(!b.truncated);
            let mut star: Vec<usize> = p.ball.neighbors(v).iter().copied().collect();
            star.push(v);
            star.sort();
            assert_eq!(b.vertices, star);
        } else {
            assert!(b.truncated);
        }
    }
}

#[test]
fn free_product_pipeline() {
    let o = free_product();
    let p = pipeline(&o, 6, &[AB.to_vec()], 3);
    assert_eq!(p.opt.k, 1);
    assert!(p.opt.cuts.iter().all(|c| c.weight() == 1));
    assert!(p.opt.per_path.iter().all(|r| r.m == Some(0)));
    assert!(check_nested(&p.opt.cuts).is_ok());
    assert_eq!(p.tree.edges.len() + 1, p.tree.vertex_count());
    assert_eq!(p.lambda, 1);

    // classes gather around b-triangles
    for class in &p.tree.classes {
        let inner: BTreeSet<usize> = class
            .iter()
            .map(|&i| {
                let c = &p.tree.cuts[i];
                let (u, v) = c.delta()[0];
                if c.contains(u) { u } else { v }
            })
            .collect();
        assert!(inner.len() <= 3);
        assert!(inner.iter().all(|&x| inner.iter().all(|&y| x == y || p.ball.has_edge(x, y))));
        assert!(p.tree.cuts[class[0]].delta().iter().all(|&(u, v)| p.ball.label(u).ends_with('a') || p.ball.label(v).ends_with('a')));
    }

    let whole: Vec<&Block> = p.blocks.iter().filter(|b| !b.truncated).collect();
    assert!(!whole.is_empty());
    assert!(whole.iter().all(|b| b.len() == 6 && b.connected));
    assert!(p.blocks.iter().all(|b| b.connected));
}

#[test]
fn free_product_answers_are_stable_in_the_radius() {
    let o = free_product();
    let small = pipeline(&o, 6, &[AB.to_vec()], 3);
    let large = pipeline(&o, 8, &[AB.to_vec()], 3);
    assert_eq!(small.lambda, large.lambda);
    assert_eq!(cuts_within(&small.ball, &small.opt.cuts, 3), cuts_within(&large.ball, &large.opt.cuts, 3));
    let (a, b) = (blocks_within(&small.ball, &small.blocks, 4), blocks_within(&large.ball, &large.blocks, 4));
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn more_paths_do_not_change_the_optimal_cuts() {
    let o = free_product();
    let base = pipeline(&o, 6, &[AB.to_vec()], 3);
    let more = pipeline(&o, 6, &[AB.to_vec(), vec![(0, false), (1, false), (0, false), (1, true)]], 3);
    assert_eq!(cuts_within(&base.ball, &base.opt.cuts, 3), cuts_within(&more.ball, &more.opt.cuts, 3));
}

#[test]
fn dot_output() {
    let p = SimpleGraph::path(3);
    let c = cut_from_vertices(&p, &[0]).unwrap();
    let dot = ball_dot_with_cut(&p, &c);
    assert!(dot.starts_with("graph G {"));
    assert!(dot.contains("v0 -- v1 [color=red, penwidth=2];"));
    assert!(dot.contains("v1 -- v2;"));
    let t = structure_tree(&[c.clone(), c.complement()]).unwrap();
    assert!(t.to_dot().contains("c0 -- c1 [label=\"1\"];"));
}
