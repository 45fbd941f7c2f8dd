mod common;

use std::collections::BTreeSet;

use bs_lang::*;
use common::{span_member, words};
use proptest::prelude::*;

fn arb_nfa() -> impl Strategy<Value = Nfa> {
    (1usize..=4, 1usize..=2).prop_flat_map(|(n, k)| {
        (
            proptest::collection::btree_set((0..n, 0..k, 0..n), 0..10),
            proptest::collection::btree_set(0..n, 0..=n),
            proptest::collection::btree_set(0..n, 0..=n),
        )
            .prop_map(move |(t, i, f)| {
                let mut a = Nfa::with_states((0..k).map(|x| ((b'a' + x as u8) as char).to_string()).collect(), n);
                a.transitions = t;
                a.initial = i;
                a.finals = f;
                a
            })
    })
}

fn arb_cfg() -> impl Strategy<Value = Cfg> {
    let sym = prop_oneof![(0usize..2).prop_map(Sym::T), (0usize..3).prop_map(Sym::V)];
    proptest::collection::vec((0usize..3, proptest::collection::vec(sym, 0..4)), 1..7).prop_map(|ps| {
        Cfg::new(
            vec!["S".into(), "A".into(), "B".into()],
            vec!["a".into(), "b".into()],
            ps.into_iter().map(|(lhs, rhs)| Production { lhs, rhs }).collect(),
            0,
        )
        .unwrap()
    })
}

fn arb_pda() -> impl Strategy<Value = Pda> {
    let word = |k: usize, n: usize| proptest::collection::vec(0..k, 0..=n);
    let rule = (word(2, 2), 0usize..2, word(2, 1), word(2, 2), 0usize..2)
        .prop_map(|(pop, state, read, push, next)| PdaRule { pop, state, read, push, next });
    (proptest::collection::vec(rule, 1..6), proptest::collection::btree_set(0usize..2, 0..=2)).prop_map(|(rules, finals)| Pda {
        states: vec!["p".into(), "q".into()],
        input: vec!["a".into(), "b".into()],
        stack: vec!["X".into(), "Y".into()],
        rules,
        initial: 0,
        finals,
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kleene_constructions_agree(n in arb_nfa()) {
        let d = nfa_to_dfa(&n);
        prop_assert!(d.as_nfa().is_deterministic());
        let back = rational_to_nfa(&nfa_to_rational(&n), &n.alphabet);
        let m = nfa_to_matrices(&n);
        let i: Vec<usize> = n.initial.iter().copied().collect();
        let f: Vec<usize> = n.finals.iter().copied().collect();
        for w in words(n.alphabet.len(), 6) {
            let x = n.accepts(&w);
            prop_assert_eq!(d.accepts(&w), x);
            prop_assert_eq!(back.accepts(&w), x);
            prop_assert_eq!(matrix_accepts(&m, &i, &f, &w), x);
        }
    }

    #[test]
    fn cnf_and_automata_agree_with_spans(g in arb_cfg()) {
        let c = to_cnf(&g);
        prop_assert!(c.is_cnf());
        let m = cfg_to_pda(&g);
        for w in words(2, 5) {
            let x = span_member(&g, &w);
            prop_assert_eq!(cyk(&c, &w).unwrap(), x);
            prop_assert_eq!(pda_run(&m, &w, 1_000_000).outcome == RunOutcome::Accept, x);
        }
    }

    #[test]
    fn reduce_keeps_language(g in arb_cfg()) {
        let r = reduce_grammar(&g);
        let prod = r.productive();
        let reach = r.reachable();
        for v in 0..r.variables.len() {
            if v != r.axiom {
                prop_assert!(prod[v] && reach[v]);
            }
        }
        for w in words(2, 5) {
            prop_assert_eq!(span_member(&r, &w), span_member(&g, &w));
        }
    }

    #[test]
    fn random_automata_match_their_grammars(m in arb_pda()) {
        let g = pda_to_cfg(&m);
        for w in words(2, 4) {
            let run = pda_run(&m, &w, 200_000);
            prop_assume!(run.outcome != RunOutcome::FuelExhausted);
            prop_assert_eq!(run.outcome == RunOutcome::Accept, span_member(&g, &w), "{:?}", w);
        }
    }

    #[test]
    fn shortest_yields_are_derivable(g in arb_cfg()) {
        let y = shortest_yields(&g);
        for (v, w) in y.iter().enumerate() {
            if let Some(w) = w {
                let mut h = g.clone();
                h.axiom = v;
                prop_assert!(span_member(&h, w));
                // nothing shorter is derivable
                for u in words(2, w.len().saturating_sub(1)) {
                    if u.len() < w.len() {
                        prop_assert!(!span_member(&h, &u));
                    }
                }
            }
        }
    }
}

#[test]
fn subset_states_are_reachable_subsets() {
    let n = parse_nfa(include_str!("../../../fixtures/even_a_tail.nfa")).unwrap();
    let d = nfa_to_dfa(&n);
    let names: BTreeSet<&str> = d.as_nfa().states.iter().map(|s| s.as_str()).collect();
    assert!(names.contains("{1}"));
    assert!(names.len() <= 7);
}
