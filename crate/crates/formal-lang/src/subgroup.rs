use std::collections::BTreeSet;

use bs_groups::FiniteGroup;

use crate::nfa::{Dfa, Nfa};
use crate::LangError;

/// The Cayley automaton of `g` over named generators: accepts exactly the words equal to 1.
pub fn finite_group_wp_dfa(g: &FiniteGroup, generators: &[(String, usize)]) -> Result<Dfa, LangError> {
    let gens: Vec<usize> = generators.iter().map(|x| x.1).collect();
    if gens.iter().any(|&x| x >= g.order()) {
        return Err(LangError::Invalid("generator out of range".into()));
    }
    if g.generated(&gens).len() != g.order() {
        return Err(LangError::Invalid("generators do not generate the group".into()));
    }
    let mut n = Nfa::new(generators.iter().map(|x| x.0.clone()).collect(), g.names().to_vec());
    n.initial.insert(0);
    n.finals.insert(0);
    for x in g.elements() {
        for (a, &s) in gens.iter().enumerate() {
            n.transitions.insert((x, a, g.mul(x, s)));
        }
    }
    Dfa::new(n)
}

/// Words u v ū with |uv| ≤ number of states, uv readable from an initial state,
/// v non-empty, and u v ū in the subgroup. Together they generate the subgroup
/// generated by the image of the accepted language.
pub fn rational_subgroup_generators(
    n: &Nfa,
    inverse: impl Fn(usize) -> usize,
    in_subgroup: impl Fn(&[usize]) -> bool,
) -> BTreeSet<Vec<usize>> {
    let bound = n.num_states();
    let mut out = BTreeSet::new();
    // depth-first over readable prefixes
    let mut stack: Vec<(Vec<usize>, BTreeSet<usize>)> = vec![(Vec::new(), n.initial.clone())];
    while let Some((w, states)) = stack.pop() {
        for split in 0..w.len() {
            let (u, _) = w.split_at(split);
            let mut cand = w.clone();
            cand.extend(u.iter().rev().map(|&x| inverse(x)));
            if in_subgroup(&cand) {
                out.insert(cand);
            }
        }
        if w.len() == bound {
            continue;
        }
        for a in 0..n.alphabet.len() {
            let next = n.step(&states, a);
            if !next.is_empty() {
                let mut w2 = w.clone();
                w2.push(a);
                stack.push((w2, next));
            }
        }
    }
    out
}
