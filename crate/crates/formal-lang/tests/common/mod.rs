#![allow(dead_code)]

use bs_lang::{Cfg, Regex, Sym};

/// All words over `k` letters of length at most `n`, shortest first.
pub fn words(k: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &layer {
            for a in 0..k {
                let mut v: Vec<usize> = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Membership by a fixpoint over spans: `derives[A][i][j]` iff A derives w[i..j].
/// Works for any context-free grammar, with ε- and unit productions.
pub fn span_member(g: &Cfg, w: &[usize]) -> bool {
    let n = w.len();
    let nv = g.variables.len();
    let mut d = vec![vec![vec![false; n + 1]; n + 1]; nv];
    let mut changed = true;
    while changed {
        changed = false;
        for p in &g.productions {
            for i in 0..=n {
                // reachable end positions after a prefix of the rhs
                let mut ends = vec![false; n + 1];
                ends[i] = true;
                for s in &p.rhs {
                    let mut next = vec![false; n + 1];
                    for a in i..=n {
                        if !ends[a] {
                            continue;
                        }
                        match *s {
                            Sym::T(t) => {
                                if a < n && w[a] == t {
                                    next[a + 1] = true;
                                }
                            }
                            Sym::V(v) => {
                                for b in a..=n {
                                    if d[v][a][b] {
                                        next[b] = true;
                                    }
                                }
                            }
                        }
                    }
                    ends = next;
                }
                for j in i..=n {
                    if ends[j] && !d[p.lhs][i][j] {
                        d[p.lhs][i][j] = true;
                        changed = true;
                    }
                }
            }
        }
    }
    d[g.axiom][0][n]
}

/// Direct matcher for rational expressions by splitting.
pub fn regex_match(e: &Regex, w: &[usize]) -> bool {
    match e {
        Regex::Empty => false,
        Regex::Epsilon => w.is_empty(),
        Regex::Letter(a) => w == [*a],
        Regex::Union(x, y) => regex_match(x, w) || regex_match(y, w),
        Regex::Concat(x, y) => (0..=w.len()).any(|i| regex_match(x, &w[..i]) && regex_match(y, &w[i..])),
        Regex::Star(x) => w.is_empty() || (1..=w.len()).any(|i| regex_match(x, &w[..i]) && regex_match(e, &w[i..])),
    }
}

/// Free reduction of a word over letters 2b (generator) and 2b+1 (its inverse).
pub fn free_reduce_pairs(w: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::new();
    for &x in w {
        if out.last() == Some(&(x ^ 1)) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}
