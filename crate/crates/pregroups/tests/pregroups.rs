mod common;

use bs_gog::fixtures::{fixture, free_loops};
use bs_groups::{cyclic, symmetric};
use bs_lang::{cyk, to_cnf};
use bs_pregroup::*;
use bs_rewrite::{free_reduce, Letter, StrongVerdict};
use common::*;

fn w(p: &Pregroup, s: &str) -> Vec<Letter> {
    p.parse_word(s).unwrap()
}

#[test]
fn axiom_checks_on_fixtures() {
    for name in ["zxz2", "free2", "z2z3"] {
        let p = load(name);
        assert!(check_pregroup(p.table().clone()).is_ok(), "{name}");
    }
    for g in [cyclic(5), symmetric(3).unwrap()] {
        let p = Pregroup::from_group(&g);
        assert_eq!(p.domain_size(), g.order() * g.order());
    }
}

#[test]
fn broken_associativity_is_reported() {
    let path = format!("{}/../../fixtures/broken_p3.pg", env!("CARGO_MANIFEST_DIR"));
    let t = parse_table(&std::fs::read_to_string(path).unwrap()).unwrap();
    let v = check_pregroup(t.clone()).unwrap_err();
    assert_eq!(v.axiom, Axiom::P3);
    let ix: Vec<usize> = v.witnesses.iter().map(|n| t.names.iter().position(|x| x == n).unwrap()).collect();
    let m = |a: usize, b: usize| t.table[a][b];
    let (x, y, z) = (ix[0], ix[1], ix[2]);
    let (xy, yz) = (m(x, y).unwrap(), m(y, z).unwrap());
    assert_ne!(m(xy, z), m(x, yz));
    assert!(v.to_string().starts_with("P3 fails at"));
}

#[test]
fn four_term_axiom_is_checked() {
    // {-2, ..., 2} inside Z, multiplying when the sum stays inside: (P1)-(P3)
    // hold for any inverse-closed subset, but a a a a breaks (P4)
    let names: Vec<String> = (-2i32..=2).map(|i| format!("n{i}")).collect();
    let table = (-2i32..=2)
        .map(|x| (-2i32..=2).map(|y| (x + y).abs().le(&2).then(|| (x + y + 2) as usize)).collect())
        .collect();
    let t = PregroupTable { names, one: 2, inverse: vec![4, 3, 2, 1, 0], table };
    let v = check_pregroup(t.clone()).unwrap_err();
    assert_eq!(v.axiom, Axiom::P4);
    let ix: Vec<usize> = v.witnesses.iter().map(|n| t.names.iter().position(|x| x == n).unwrap()).collect();
    let m = |a: usize, b: usize| t.table[a][b];
    let xy = m(ix[1], ix[2]).unwrap();
    assert!(m(ix[0], ix[1]).is_some() && m(ix[2], ix[3]).is_some());
    assert!(m(ix[0], xy).is_none() && m(xy, ix[3]).is_none());
}

#[test]
fn parse_errors_have_positions() {
    let e = parse_table("carrier 1 a\nrow 1 : 1 a\nrow a : a q\n").unwrap_err();
    assert_eq!(e, PregroupError::Parse { line: 3, col: 11, msg: "unknown element `q`".into() });
    let e = parse_table("carrier 1 a\nrow 1 : 1 a\n").unwrap_err();
    assert!(e.to_string().contains("missing row for `a`"));
    let e = parse_table("carrier 1 a\nrow 1 : 1\n").unwrap_err();
    assert!(matches!(e, PregroupError::Parse { line: 2, .. }));
    assert!(matches!(parse_table("frobnicate\n"), Err(PregroupError::Parse { line: 1, col: 1, .. })));
}

#[test]
fn table_text_round_trip() {
    for name in ["zxz2", "free2", "z2z3"] {
        let p = load(name);
        assert_eq!(parse_pregroup(&p.to_string()).unwrap(), p);
    }
}

#[test]
fn length_reducing_rules_of_the_free_pregroup() {
    let p = load("free2");
    let sp = p.sp();
    for r in sp.reducing.rules() {
        let ids: Vec<usize> = r.lhs.iter().map(|x| x.index()).collect();
        match ids.as_slice() {
            [x] => assert_eq!((*x, r.rhs.len()), (p.one(), 0)),
            [x, y] if *x == p.one() => assert_eq!(r.rhs, vec![Letter(*y as u32)]),
            [x, y] if *y == p.one() => assert_eq!(r.rhs, vec![Letter(*x as u32)]),
            [x, y] => {
                assert_eq!(*y, p.inverse(*x));
                assert_eq!(r.rhs, vec![Letter(p.one() as u32)]);
            }
            _ => panic!("unexpected rule"),
        }
    }
    // 1 -> ε, 1x and x1 for five x (1 1 counted once), four inverse pairs
    assert_eq!(sp.reducing.len(), 1 + 9 + 4);
}

#[test]
fn full_system_contents() {
    let p = load("zxz2");
    let sp = p.sp();
    assert!(sp.full.rules().iter().any(|r| r.lhs == w(&p, "y a") && r.rhs == w(&p, "ay")));
    assert!(sp.full.rules().iter().all(|r| r.lhs != r.rhs));
    // y y -> ay ay is the only non-trivial splitting of y y (c = a)
    let splits: Vec<_> = sp.full.rules().iter().filter(|r| r.lhs == w(&p, "y y")).collect();
    assert_eq!(splits.len(), 1);
    assert_eq!(splits[0].rhs, w(&p, "ay ay"));
    assert!(sp.reducing.is_length_reducing());
    assert_eq!(sp.full.len() - sp.reducing.len(), sp.full.rules().iter().filter(|r| r.lhs.len() == r.rhs.len()).count());
}

#[test]
fn full_systems_are_strongly_confluent() {
    for p in [load("zxz2"), load("free2"), load("z2z3"), Pregroup::from_group(&cyclic(3))] {
        assert_eq!(p.sp().strong_confluence(), StrongVerdict::StronglyConfluent, "{p}");
    }
    let g = pregroup_from_gog(&fixture("psl2z").unwrap()).unwrap();
    assert_eq!(g.pregroup.sp().strong_confluence(), StrongVerdict::StronglyConfluent);
}

#[test]
fn geodesic_reduce_examples() {
    let f = Pregroup::free(&["a", "b"]).unwrap();
    assert_eq!(geodesic_reduce(&f, &w(&f, "a a~ b")), w(&f, "b"));
    let p = load("zxz2");
    assert_eq!(geodesic_reduce(&p, &w(&p, "y a y~ a")), vec![]);
    assert_eq!(geodesic_reduce(&p, &[]), vec![]);
    assert_eq!(geodesic_reduce(&p, &w(&p, "1 y 1")), w(&p, "y"));
    assert!(universal_wp(&p, &w(&p, "y a y~ a")));
    assert!(!universal_wp(&p, &w(&p, "y y")));
    assert_eq!(geodesic_reduce(&p, &w(&p, "y y")).len(), 2);
}

#[test]
fn geodesics_are_shortest() {
    let gog = |n: &str| pregroup_from_gog(&fixture(n).unwrap()).unwrap().pregroup;
    for (name, p, len) in [
        ("free2", load("free2"), 6),
        ("z2z3", load("z2z3"), 6),
        ("zxz2", load("zxz2"), 6),
        ("dihedral", gog("dihedral"), 6),
        ("psl2z", gog("psl2z"), 5),
    ] {
        for (x, m) in class_minima(&p, len) {
            let got = geodesic_reduce(&p, &letters(&x)).len();
            assert_eq!(got, m, "{name}: {x:?}");
        }
    }
}

#[test]
fn grammar_example_memberships() {
    let p = load("zxz2");
    let g = wp_grammar(&p);
    assert_eq!(g.variables, g.terminals);
    assert_eq!(g.axiom, p.one());
    let cnf = to_cnf(&g);
    assert!(cyk(&cnf, &[2, 1, 3, 1]).unwrap());
    assert!(!cyk(&cnf, &[2, 2]).unwrap());
    let trivial = Pregroup::from_group(&bs_groups::trivial());
    let t = to_cnf(&wp_grammar(&trivial));
    for n in 0..6 {
        assert!(cyk(&t, &vec![0; n]).unwrap());
    }
}

#[test]
fn grammar_slices_match_the_word_problem() {
    for (name, len) in [("free2", 8), ("z2z3", 8), ("zxz2", 8)] {
        let p = load(name);
        let cnf = to_cnf(&wp_grammar(&p));
        assert_eq!(cnf.terminals, p.names());
        let slice = cnf_slice(&cnf, p.len(), len);
        let mut count = 0;
        for x in words(p.len(), len) {
            let inside = universal_wp(&p, &letters(&x));
            assert_eq!(slice.contains(&x), inside, "{name}: {x:?}");
            count += inside as usize;
        }
        assert_eq!(count, slice.len());
    }
}

#[test]
fn free_pregroup_grammar_is_the_free_group_word_problem() {
    let p = Pregroup::free(&["a"]).unwrap();
    let cnf = to_cnf(&wp_grammar(&p));
    let alpha = bs_rewrite::Alphabet::with_tilde_involution(&["a", "a~"]).unwrap();
    // drop the identity letter: words over a, a~ only
    for x in words(2, 8) {
        let y: Vec<usize> = x.iter().map(|&i| i + 1).collect();
        let free = free_reduce(&alpha, &letters(&x)).is_empty();
        assert_eq!(cyk(&cnf, &y).unwrap(), free, "{x:?}");
    }
}

#[test]
fn window_bounds() {
    let f = Pregroup::free(&["a", "b"]).unwrap();
    let wb = window_bound(&f);
    assert_eq!(wb.bound, 1);
    assert_eq!(wb.witnesses[1], vec![Letter(2)]);
    assert_eq!(wb.witnesses[0], vec![]);
    let mut s = StreamingReducer::new(&f);
    for x in w(&f, "a a~ b") {
        s.feed(x);
    }
    assert_eq!(s.finish(), w(&f, "b"));
}

#[test]
fn cascades_can_take_two_steps() {
    let p = load("zxz2");
    let wb = window_bound(&p);
    assert_eq!(wb.bound, 1);
    let mut s = StreamingReducer::with_bound(&p, &wb);
    for x in w(&p, "y ay y~") {
        s.feed(x);
    }
    assert_eq!(s.stack(), w(&p, "ay"));
    assert_eq!(s.longest_cascade(), 2);
}

#[test]
fn streaming_agrees_with_reduction() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    let from_gog = pregroup_from_gog(&fixture("psl2z").unwrap()).unwrap().pregroup;
    for p in [load("zxz2"), load("free2"), load("z2z3"), from_gog] {
        let wb = window_bound(&p);
        for _ in 0..10_000 {
            let len = rng.gen_range(0..=12);
            let x: Vec<Letter> = (0..len).map(|_| Letter(rng.gen_range(0..p.len()) as u32)).collect();
            let mut s = StreamingReducer::with_bound(&p, &wb);
            for &a in &x {
                s.feed(a);
            }
            let out = s.finish();
            assert_eq!(out.is_empty(), universal_wp(&p, &x));
            assert_eq!(out.len(), geodesic_reduce(&p, &x).len());
        }
    }
}

#[test]
fn loops_give_the_free_pregroup() {
    for m in 1..=3 {
        let gog = free_loops(m);
        let g = pregroup_from_gog(&gog).unwrap();
        let p = &g.pregroup;
        assert_eq!(p.len(), 2 * m + 1);
        assert_eq!(p.name(p.one()), "1");
        for x in 0..p.len() {
            for y in 0..p.len() {
                let expect = x == p.one() || y == p.one() || y == p.inverse(x);
                assert_eq!(p.defined(x, y), expect);
            }
            if x != p.one() {
                assert_ne!(p.inverse(x), x);
            }
        }
    }
}

#[test]
fn hnn_of_z2_gives_the_six_element_table() {
    let g = pregroup_from_gog(&fixture("zxz2").unwrap()).unwrap();
    assert_eq!(g.pregroup.names(), ["1", "a", "y", "y~", "y.a", "y~.a"]);
    let paper = load("zxz2");
    let by_name = |n: &str| match n {
        "y.a" => "ay".to_string(),
        "y~.a" => "ay~".to_string(),
        other => other.to_string(),
    };
    let map: Vec<usize> = g.pregroup.names().iter().map(|n| paper.index(&by_name(n)).unwrap()).collect();
    for x in 0..6 {
        assert_eq!(map[g.pregroup.inverse(x)], paper.inverse(map[x]));
        for y in 0..6 {
            assert_eq!(g.pregroup.mul(x, y).map(|z| map[z]), paper.mul(map[x], map[y]), "cell ({x}, {y})");
        }
    }
}

#[test]
fn carrier_paths_are_short() {
    for name in bs_gog::fixtures::fixture_names() {
        let gog = fixture(name).unwrap();
        let g = pregroup_from_gog(&gog).unwrap();
        let diam = (0..gog.vertices().len())
            .flat_map(|p| (0..gog.vertices().len()).map(move |q| (p, q)))
            .map(|(p, q)| gog.tree_path(p, q).len())
            .max()
            .unwrap();
        for word in &g.words {
            assert!(gog.y_sequence(word).len() <= 2 * diam + 1, "{name}");
            assert!(in_carrier_shape(&gog, &gog.britton_reduce(word).unwrap()), "{name}");
        }
    }
}

#[test]
fn boundary_conventions() {
    // base-group elements sit on the empty path
    let gog = fixture("psl2z").unwrap();
    let g = pregroup_from_gog(&gog).unwrap();
    let a = gog.parse_word("a").unwrap();
    assert!(g.element(&gog, &a).unwrap().is_some());
    // the turning point may be the far vertex: y b y~ is in, y b y~ a y b y~ is not
    let ybyi = gog.parse_word("y b y~").unwrap();
    assert!(g.element(&gog, &ybyi).unwrap().is_some());
    let long = gog.parse_word("y b y~ a y b y~").unwrap();
    assert!(g.element(&gog, &long).unwrap().is_none());
    assert!(!in_carrier_shape(&gog, &gog.britton_reduce(&long).unwrap()));
    // the middle edge may be first: y alone is in for a loop
    let z = fixture("zxz2").unwrap();
    assert!(in_carrier_shape(&z, &z.parse_word("y a").unwrap()));
    assert!(!in_carrier_shape(&z, &z.parse_word("y y").unwrap()));
    assert_eq!(g.pregroup.len(), 2 + 2 * 2 * 2);
}

#[test]
fn universal_group_matches_the_graph_of_groups() {
    for name in ["zxz2", "dihedral", "psl2z", "free2"] {
        let gog = fixture(name).unwrap();
        let g = pregroup_from_gog(&gog).unwrap();
        let p = &g.pregroup;
        let len = if p.len() > 8 { 5 } else { 6 };
        for x in words(p.len(), len) {
            let x = letters(&x);
            assert_eq!(universal_wp(p, &x), gog.word_problem(&g.embed(&x)).unwrap(), "{name}: {}", p.show(&x));
        }
        let sigma = gog.alphabet().len();
        for x in words(sigma, 5) {
            let x = letters(&x);
            let img = g.phi_word(&gog, &x).unwrap();
            assert_eq!(universal_wp(p, &img), gog.word_problem(&x).unwrap(), "{name}: {}", gog.show(&x));
        }
    }
}
