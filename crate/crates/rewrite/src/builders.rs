use std::sync::Arc;

use crate::alphabet::{Alphabet, Letter};
use crate::system::{Rule, SemiThueSystem};

/// Letters `x` and `x~` for every basis name, cancelling `x x~` and `x~ x`.
pub fn free_group_system<S: AsRef<str>>(basis: &[S]) -> SemiThueSystem {
    let mut names = Vec::new();
    for b in basis {
        names.push(b.as_ref().to_string());
        names.push(format!("{}~", b.as_ref()));
    }
    let a = Arc::new(Alphabet::with_tilde_involution(&names).expect("distinct basis names"));
    let rules = a
        .letters()
        .map(|x| Rule::new(vec![x, a.inverse(x).unwrap()], vec![]))
        .collect();
    SemiThueSystem::new(a, rules).expect("valid rules")
}

/// Three letters a, b, c with abc, bca, cab all deleting.
pub fn dyck_system() -> SemiThueSystem {
    let a = Arc::new(Alphabet::new(&["a", "b", "c"]).unwrap());
    let (x, y, z) = (Letter(0), Letter(1), Letter(2));
    let rules = vec![
        Rule::new(vec![x, y, z], vec![]),
        Rule::new(vec![y, z, x], vec![]),
        Rule::new(vec![z, x, y], vec![]),
    ];
    SemiThueSystem::new(a, rules).unwrap()
}

/// Free reduction over an alphabet with an involution, done with a stack.
pub fn free_reduce(alphabet: &Alphabet, w: &[Letter]) -> Vec<Letter> {
    let inv = alphabet.involution().expect("free reduction needs an involution");
    let mut out: Vec<Letter> = Vec::with_capacity(w.len());
    for &x in w {
        if out.last() == Some(&inv[x.index()]) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}
