use std::collections::HashSet;

use bs_lang::{Cfg, Production, Sym};
use bs_rewrite::{Letter, Rule, SemiThueSystem, StrongVerdict, Word};

use crate::pregroup::Pregroup;

/// The pregroup rewriting system and its length-reducing part.
#[derive(Clone, Debug)]
pub struct SpSystem {
    pub full: SemiThueSystem,
    pub reducing: SemiThueSystem,
}

impl SpSystem {
    pub fn strong_confluence(&self) -> StrongVerdict {
        self.full.check_strong_confluence()
    }
}

/// Rules `1 -> ε`, `ab -> [ab]` for (a, b) in the domain and
/// `ab -> [ac][c̄b]` whenever both factors are defined; rewrites that leave
/// the word unchanged are dropped.
pub fn sp_system(p: &Pregroup) -> SpSystem {
    let n = p.len();
    let l = |x: usize| Letter(x as u32);
    let mut reducing = vec![Rule::new(vec![l(p.one())], vec![])];
    for a in 0..n {
        for b in 0..n {
            if let Some(ab) = p.mul(a, b) {
                reducing.push(Rule::new(vec![l(a), l(b)], vec![l(ab)]));
            }
        }
    }
    let mut full = reducing.clone();
    let mut seen = HashSet::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let (Some(ac), Some(cb)) = (p.mul(a, c), p.mul(p.inverse(c), b)) else { continue };
                if (ac, cb) == (a, b) || !seen.insert((a, b, ac, cb)) {
                    continue;
                }
                full.push(Rule::new(vec![l(a), l(b)], vec![l(ac), l(cb)]));
            }
        }
    }
    let alpha = p.alphabet().clone();
    SpSystem {
        full: SemiThueSystem::new(alpha.clone(), full).expect("carrier letters"),
        reducing: SemiThueSystem::new(alpha, reducing).expect("carrier letters"),
    }
}

/// Leftmost reduction with the length-reducing rules only.
pub fn geodesic_reduce(p: &Pregroup, w: &[Letter]) -> Word {
    p.sp().reducing.normal_form(w).expect("length-reducing rules terminate")
}

/// Whether `w` is trivial in the universal group.
pub fn universal_wp(p: &Pregroup, w: &[Letter]) -> bool {
    geodesic_reduce(p, w).is_empty()
}

/// Grammar whose variables and terminals are both the carrier, with axiom
/// the identity: `1 -> ε`, `[ab] -> a b`, and each variable may stand for
/// its own terminal.
pub fn wp_grammar(p: &Pregroup) -> Cfg {
    let n = p.len();
    let mut prods = vec![Production { lhs: p.one(), rhs: vec![] }];
    for a in 0..n {
        for b in 0..n {
            if let Some(ab) = p.mul(a, b) {
                prods.push(Production { lhs: ab, rhs: vec![Sym::V(a), Sym::V(b)] });
            }
        }
    }
    for x in 0..n {
        prods.push(Production { lhs: x, rhs: vec![Sym::T(x)] });
    }
    Cfg::new(p.names().to_vec(), p.names().to_vec(), prods, p.one()).expect("carrier symbols")
}
