mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use bs_cayley::*;
use bs_groups::cyclic;
use bs_pregroup::{wp_grammar, Pregroup};
use common::*;

fn labels(g: &SimpleGraph) -> BTreeSet<String> {
    g.labels().iter().cloned().collect()
}

fn bags(td: &TreeDecomposition) -> Vec<Vec<usize>> {
    td.bags.iter().map(|b| b.iter().copied().collect()).collect()
}

#[test]
fn free_product_ball_of_radius_two() {
    let o = gog_oracle("psl2z", &["a", "b", "b2"]);
    let ball = cayley_ball(&o, 2);
    let want: BTreeSet<String> =
        ["1", "a", "b", "b2", "a·b", "a·b2", "b·a", "b2·a"].iter().map(|s| s.to_string()).collect();
    assert_eq!(labels(&ball), want);
    // triangles at 1, a edges: 1-a, b-ba, b2-b2a, and triangles at a
    assert_eq!(ball.edge_count(), 3 + 3 + 3);
    assert_eq!((0..ball.len()).filter(|&v| ball.on_sphere(v)).count(), 4);
}

#[test]
fn backends_agree_on_free_product_balls() {
    let g = gog_oracle("psl2z", &["a", "b", "b2"]);
    let p = Arc::new(pregroup("z2z3"));
    let ids = ["a", "b", "b2"].iter().map(|n| p.index(n).unwrap()).collect();
    let q = PregroupOracle::new(p, ids).unwrap();
    for r in 0..=6 {
        let (x, y) = (cayley_ball(&g, r), cayley_ball(&q, r));
        assert_eq!(x.len(), y.len(), "radius {r}");
        assert_eq!(x.edge_count(), y.edge_count(), "radius {r}");
        // same BFS discovery order, so the same labels
        assert_eq!(x.labels(), y.labels());
        assert_eq!(x.edges(), y.edges());
    }
}

#[test]
fn free_group_balls() {
    let f = FreeOracle::new(&["a", "b"]);
    let sizes: Vec<usize> = (0..=3).map(|r| cayley_ball(&f, r).len()).collect();
    assert_eq!(sizes, [1, 5, 17, 53]);
    let gog = GogOracle::standard(gog("free2"));
    for r in 0..=3 {
        let (x, y) = (cayley_ball(&f, r), cayley_ball(&gog, r));
        assert_eq!((x.len(), x.edge_count()), (y.len(), y.edge_count()));
    }
    let b = cayley_ball(&f, 2);
    assert_eq!(b.edge_count(), 16);
    assert!(b.vertex("a·b~").is_some());
}

#[test]
fn finite_group_ball_is_the_whole_cayley_graph() {
    let o = FiniteOracle::new(Arc::new(cyclic(6)), vec![1]).unwrap();
    let b = cayley_ball(&o, 10);
    assert_eq!(b.len(), 6);
    assert_eq!(b.edge_count(), 6);
    assert!((0..6).all(|v| b.degree(v) == 2));
    // generating by the identity adds no loops
    let o = FiniteOracle::new(Arc::new(cyclic(6)), vec![0, 2]).unwrap();
    let b = cayley_ball(&o, 10);
    assert_eq!((b.len(), b.edge_count()), (3, 3));
}

#[test]
fn registry_builds_every_backend() {
    let names: Vec<&str> = backend_names().collect();
    assert_eq!(names, ["finite", "free", "gog", "pregroup"]);
    let f = oracle_by_name("finite", "cyclic 5", &[]).unwrap();
    assert_eq!(cayley_ball(f.as_ref(), 5).len(), 5);
    let f = oracle_by_name("free", "a b", &[]).unwrap();
    assert_eq!(cayley_ball(f.as_ref(), 2).len(), 17);
    let g = oracle_by_name("gog", &fixture_text("psl2z.gog"), &["a".into(), "b".into()]).unwrap();
    assert_eq!(cayley_ball(g.as_ref(), 2).len(), 8);
    let p = oracle_by_name("pregroup", &fixture_text("zxz2.pg"), &["a".into(), "y".into()]).unwrap();
    // Z × Z/2: the ball of radius r has 2(2r+1) - 2 vertices for r ≥ 1
    assert_eq!(cayley_ball(p.as_ref(), 3).len(), 12);
    assert!(oracle_by_name("quantum", "", &[]).is_err());
    assert!(oracle_by_name("finite", "cyclic 5", &["zz".into()]).is_err());
    let w = g.parse_generator_word("a b~ a").unwrap();
    assert_eq!(w, [(0, false), (1, true), (0, false)]);
    assert!(g.parse_generator_word("c").is_err());
}

#[test]
fn walking_resolves_through_the_oracle() {
    let o = gog_oracle("psl2z", &["a", "b"]);
    let w = o.parse_generator_word("a b a b a b").unwrap();
    let id = o.identity();
    let ab3 = o.walk(&id, &w);
    assert_ne!(ab3, id);
    let w = o.parse_generator_word("b b b").unwrap();
    assert_eq!(o.walk(&id, &w), id);
}

#[test]
fn graph_text_round_trip_and_errors() {
    let g = SimpleGraph::grid(2, 3);
    let t = g.to_text();
    assert_eq!(SimpleGraph::parse(&t).unwrap().edges(), g.edges());
    let err = SimpleGraph::parse("vertices a b\nedge a  c\n").unwrap_err();
    assert_eq!(err.to_string(), "line 2, column 9: unknown vertex `c`");
    assert!(SimpleGraph::parse("edge a b").is_err());
    assert!(SimpleGraph::parse("vertices a\nedge a a").is_err());
    let dot = g.to_dot();
    assert!(dot.starts_with("graph G {") && dot.contains("v0 -- v1;"));
}

#[test]
fn validation_of_simple_decompositions() {
    let g = SimpleGraph::path(5);
    let one = TreeDecomposition::trivial(&g);
    assert!(validate_td(&g, &one).is_ok());
    assert_eq!(one.bag_size(), 5);
    let td = TreeDecomposition::new(
        (0..4).map(|i| BTreeSet::from([i, i + 1])).collect(),
        (0..3).map(|i| (i, i + 1)).collect(),
    );
    assert!(validate_td(&g, &td).is_ok());
    assert_eq!(td.bag_size(), 2);

    // 1 sits in the two outer bags only
    let g = SimpleGraph::path(3);
    let broken = TreeDecomposition::new(
        vec![BTreeSet::from([0, 1]), BTreeSet::from([2]), BTreeSet::from([1, 2])],
        vec![(0, 1), (1, 2)],
    );
    let v = validate_td(&g, &broken).unwrap_err();
    assert_eq!((v.axiom, v.witness.clone()), (TdAxiom::T3, vec![1]));

    let missing_edge = TreeDecomposition::new(vec![BTreeSet::from([0, 1]), BTreeSet::from([2])], vec![(0, 1)]);
    assert_eq!(validate_td(&g, &missing_edge).unwrap_err().axiom, TdAxiom::T2);
    let missing_vertex = TreeDecomposition::new(vec![BTreeSet::from([0, 1])], vec![]);
    assert_eq!(validate_td(&g, &missing_vertex).unwrap_err().axiom, TdAxiom::T1);
    let not_tree = TreeDecomposition::new(vec![BTreeSet::from([0, 1]), BTreeSet::from([1, 2])], vec![]);
    assert_eq!(validate_td(&g, &not_tree).unwrap_err().axiom, TdAxiom::Tree);
}

#[test]
fn normalization_steps() {
    let g = SimpleGraph::path(3);
    let with_empty = TreeDecomposition::new(
        vec![BTreeSet::from([0, 1]), BTreeSet::new(), BTreeSet::from([1, 2])],
        vec![(0, 1), (0, 2)],
    );
    assert!(validate_td(&g, &with_empty).is_ok());
    let n = normalize_td(&with_empty);
    assert_eq!(bags(&n), [vec![0, 1], vec![1, 2]]);
    assert!(validate_td(&g, &n).is_ok());

    let chain = TreeDecomposition::new(vec![BTreeSet::from([0, 1, 2]); 4], vec![(0, 1), (1, 2), (2, 3)]);
    let n = normalize_td(&chain);
    assert_eq!(n.len(), 1);
    assert!(n.edges.is_empty());

    // {1} ⊆ {0, 1} and {1} ⊆ {1, 2}: the small bag is absorbed
    let nested = TreeDecomposition::new(
        vec![BTreeSet::from([1]), BTreeSet::from([0, 1]), BTreeSet::from([1, 2])],
        vec![(0, 1), (0, 2)],
    );
    assert!(validate_td(&g, &nested).is_ok());
    let n = normalize_td(&nested);
    assert!(validate_td(&g, &n).is_ok());
    assert_eq!(n.len(), 2);
    assert!(n.bag_size() <= nested.bag_size());
    for &(s, t) in &n.edges {
        assert!(!n.bags[s].is_subset(&n.bags[t]) && !n.bags[t].is_subset(&n.bags[s]));
        assert!(!n.bags[s].is_disjoint(&n.bags[t]));
    }
}

#[test]
fn neighbourhood_decompositions() {
    let g = SimpleGraph::path(6);
    let td = TreeDecomposition::new(
        (0..5).map(|i| BTreeSet::from([i, i + 1])).collect(),
        (0..4).map(|i| (i, i + 1)).collect(),
    );
    assert_eq!(neighborhood_td(&g, &td, 0), td);
    let n1 = neighborhood_td(&g, &td, 1);
    assert!(validate_td(&g, &n1).is_ok());
    assert_eq!(bags(&n1)[2], vec![1, 2, 3, 4]);
    let b = cayley_ball(&FreeOracle::new(&["a", "b"]), 3);
    let ms = muller_schupp_td(&b, 2).unwrap();
    let maxdeg = (0..b.len()).map(|v| b.degree(v)).max().unwrap();
    for ell in 0..3 {
        let n = neighborhood_td(&b, &ms.td, ell);
        assert!(validate_td_within(&b, &n, &b.interior()).is_ok());
        for (old, new) in ms.td.bags.iter().zip(&n.bags) {
            assert!(new.len() <= old.len() * (maxdeg + 1).pow(ell as u32));
        }
    }
}

#[test]
fn small_chordal_examples() {
    let t = SimpleGraph::complete(3);
    assert!(is_chordal(&t));
    let ct = clique_tree(&t).unwrap();
    assert_eq!(bags(&ct), [vec![0, 1, 2]]);
    assert!(!is_chordal(&SimpleGraph::cycle(4)));
    assert!(matches!(clique_tree(&SimpleGraph::cycle(5)), Err(CayleyError::NotChordal)));
    let mut c4 = SimpleGraph::cycle(4);
    c4.add_edge(0, 2).unwrap();
    let ct = clique_tree(&c4).unwrap();
    assert!(validate_td(&c4, &ct).is_ok());
    assert_eq!(ct.len(), 2);
    assert_eq!(perfect_elimination_ordering(&SimpleGraph::path(3)), Some(vec![0, 1, 2]));
}

fn check_clique_tree(g: &SimpleGraph) -> TreeDecomposition {
    let ct = clique_tree(g).unwrap();
    assert!(validate_td(g, &ct).is_ok());
    assert!(ct.bags.iter().all(|b| is_clique(g, b)));
    for &(s, t) in &ct.edges {
        assert!(!ct.bags[s].is_disjoint(&ct.bags[t]));
    }
    let mut got = ct.bags.clone();
    got.sort();
    assert_eq!(got, maximal_cliques(g));
    ct
}

#[test]
fn free_product_ball_has_a_clique_tree_of_bag_size_three() {
    let o = gog_oracle("psl2z", &["a", "b", "b2"]);
    for r in [4, 5] {
        let ball = cayley_ball(&o, r);
        let ct = check_clique_tree(&ball);
        assert_eq!(ct.bag_size(), 3);
        let (inner, _) = ball.induced(&ball.interior());
        assert_eq!(check_clique_tree(&inner).bag_size(), 3);
    }
    let small = cayley_ball(&o, 2);
    assert_eq!(treewidth_exact(&small).unwrap(), 2);
}

#[test]
fn maximal_cliques_lie_in_bags() {
    let psl = gog_oracle("psl2z", &["a", "b", "b2"]);
    let balls = [
        cayley_ball(&psl, 4),
        cayley_ball(&FreeOracle::new(&["a", "b"]), 3),
        cayley_ball(&gog_oracle("zxz2", &["a", "y"]), 5),
        cayley_ball(&gog_oracle("z2z4", &["a", "c"]), 4),
    ];
    for b in &balls {
        assert!(b.len() <= 200);
        let ms = muller_schupp_td(b, 3).unwrap();
        for c in maximal_cliques(b) {
            if c.iter().all(|&v| !b.on_sphere(v)) {
                assert!(ms.td.bags.iter().any(|x| c.is_subset(x)), "clique {c:?}");
            }
        }
    }
}

#[test]
fn exact_treewidth_values() {
    let tree = SimpleGraph::from_edges(7, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]).unwrap();
    assert_eq!(treewidth_exact(&tree).unwrap(), 1);
    for k in 1..=7 {
        assert_eq!(treewidth_exact(&SimpleGraph::complete(k)).unwrap(), k - 1);
    }
    assert_eq!(treewidth_exact(&SimpleGraph::cycle(7)).unwrap(), 2);
    let widths: Vec<usize> = (2..=4).map(|n| treewidth_exact(&SimpleGraph::grid(n, n)).unwrap()).collect();
    assert_eq!(widths, [2, 3, 4]);
    assert!(matches!(
        treewidth_exact(&SimpleGraph::path(TREEWIDTH_LIMIT + 1)),
        Err(CayleyError::TooLarge { .. })
    ));
}

#[test]
fn chordal_treewidth_is_clique_number_minus_one() {
    let o = gog_oracle("psl2z", &["a", "b", "b2"]);
    let mut graphs = vec![cayley_ball(&o, 2), SimpleGraph::complete(5)];
    let e = extend_generators_for_chordality(gog("z2z4"), &[vec![letter("z2z4", "a")], vec![letter("z2z4", "c")]], 1)
        .unwrap();
    graphs.push(e.ball);
    for g in graphs {
        let omega = maximal_cliques(&g).iter().map(BTreeSet::len).max().unwrap();
        assert!(is_chordal(&g));
        assert_eq!(treewidth_exact(&g).unwrap(), omega - 1);
        assert_eq!(clique_tree(&g).unwrap().bag_size(), omega);
    }
}

fn letter(fix: &str, name: &str) -> bs_rewrite::Letter {
    gog(fix).alphabet().letter(name).unwrap()
}

fn free_k() -> usize {
    grammar_constant(&wp_grammar(&Pregroup::free(&["a", "b"]).unwrap()))
}

#[test]
fn level_bags_on_the_free_group() {
    let k = free_k();
    assert!(k >= 1);
    let ball = cayley_ball(&FreeOracle::new(&["a", "b"]), 5);
    let ms = muller_schupp_td(&ball, k).unwrap();
    assert!(ms.interior.is_ok(), "{:?}", ms.interior);
    assert_eq!(ms.td.bags[0].len(), 5);
    for (i, b) in ms.td.bags.iter().enumerate().skip(1) {
        assert_eq!(b.len(), 2);
        let v: Vec<usize> = b.iter().copied().collect();
        assert!(ball.has_edge(v[0], v[1]));
        assert_eq!(ms.level[i], ball.distance(v[0]).unwrap().min(ball.distance(v[1]).unwrap()));
    }
    assert!(ms.within_bound(), "{} > 3·{}", ms.max_diameter, ms.k);
    assert_eq!(ms.max_diameter, 2);
}

#[test]
fn level_bags_on_the_free_product() {
    let p = pregroup("z2z3");
    let k = grammar_constant(&wp_grammar(&p));
    let o = gog_oracle("psl2z", &["a", "b", "b2"]);
    for r in [4, 6] {
        let ball = cayley_ball(&o, r);
        let ms = muller_schupp_td(&ball, k).unwrap();
        assert!(ms.interior.is_ok(), "{:?}", ms.interior);
        assert!(ms.within_bound(), "{} > 3·{}", ms.max_diameter, k);
        assert!(ms.max_bag <= 4);
        assert!(ms.flagged.iter().any(|&f| f));
    }
}

#[test]
fn level_bags_on_a_finite_group_run_out() {
    let o = FiniteOracle::new(Arc::new(cyclic(6)), vec![1]).unwrap();
    let ball = cayley_ball(&o, 8);
    let ms = muller_schupp_td(&ball, 1).unwrap();
    assert_eq!(ms.level, [0, 1, 2]);
    assert!(validate_td(&ball, &ms.td).is_ok());
    assert!(ms.flagged.iter().all(|&f| !f));
    assert!(muller_schupp_td(&SimpleGraph::path(3), 1).is_err());
}

#[test]
fn chordal_extension_of_free_products() {
    let g = gog("psl2z");
    let a = vec![letter("psl2z", "a")];
    let b = vec![letter("psl2z", "b")];
    let b2 = vec![letter("psl2z", "b2")];
    let e = extend_generators_for_chordality(g.clone(), &[a.clone(), b.clone()], 4).unwrap();
    assert_eq!(e.added, [b2.clone()]);
    assert!(!e.widened);
    assert!(is_chordal(&e.ball));
    let e = extend_generators_for_chordality(g, &[a, b, b2], 4).unwrap();
    assert!(e.added.is_empty());

    let z = gog("z2z4");
    let gens = [vec![letter("z2z4", "a")], vec![letter("z2z4", "c")]];
    let before = cayley_ball(&GogOracle::new(z.clone(), gens.to_vec()).unwrap(), 4);
    assert!(!is_chordal(&before));
    let e = extend_generators_for_chordality(z.clone(), &gens, 4).unwrap();
    let names: Vec<String> = e.added.iter().map(|w| z.show(w)).collect();
    assert_eq!(names, ["c2", "c3"]);
    assert!(is_chordal(&e.ball));
}

#[test]
fn chordal_extension_with_a_foreign_generator_widens() {
    let g = gog("psl2z");
    let ab = g.parse_word("a b").unwrap();
    let e = extend_generators_for_chordality(g.clone(), &[ab, vec![letter("psl2z", "a")]], 3).unwrap();
    assert!(e.widened);
    assert!(is_chordal(&e.ball));
}

#[test]
fn chordal_extension_of_a_finite_group_is_complete() {
    let text = "group C6 cyclic 6 names 1 g g2 g3 g4 g5\nvertex P C6\nbase P\n";
    let g = Arc::new(bs_gog::parse_gog(text, None).unwrap());
    let e = extend_generators_for_chordality(g.clone(), &[g.parse_word("g").unwrap()], 3).unwrap();
    assert_eq!(e.added.len(), 4);
    assert_eq!(e.ball.len(), 6);
    assert_eq!(e.ball.edge_count(), 15);
}

#[test]
fn dot_export_of_decompositions() {
    let g = SimpleGraph::complete(3);
    let ct = clique_tree(&g).unwrap();
    let dot = ct.to_dot(&g);
    assert!(dot.contains("t0 [label=\"{0, 1, 2}\"];"));
    assert!(ct.show(&g).starts_with("bag 0: {0, 1, 2}"));
}
