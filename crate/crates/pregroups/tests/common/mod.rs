#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use bs_lang::{Cfg, Sym};
use bs_pregroup::{parse_pregroup, Pregroup};
use bs_rewrite::{Letter, Word};

pub fn load(name: &str) -> Pregroup {
    let path = format!("{}/../../fixtures/{name}.pg", env!("CARGO_MANIFEST_DIR"));
    parse_pregroup(&std::fs::read_to_string(path).unwrap()).unwrap()
}

pub fn letters(w: &[usize]) -> Word {
    w.iter().map(|&i| Letter(i as u32)).collect()
}

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

/// One-step successors under every pregroup rule, read off the table.
fn successors(p: &Pregroup, w: &[usize]) -> Vec<Vec<usize>> {
    let n = p.len();
    let mut out = Vec::new();
    for i in 0..w.len() {
        if w[i] == p.one() {
            let mut v = w.to_vec();
            v.remove(i);
            out.push(v);
        }
        if i + 1 == w.len() {
            continue;
        }
        let (a, b) = (w[i], w[i + 1]);
        if let Some(ab) = p.mul(a, b) {
            let mut v = w[..i].to_vec();
            v.push(ab);
            v.extend_from_slice(&w[i + 2..]);
            out.push(v);
        }
        for c in 0..n {
            if let (Some(ac), Some(cb)) = (p.mul(a, c), p.mul(p.inverse(c), b)) {
                let mut v = w.to_vec();
                v[i] = ac;
                v[i + 1] = cb;
                out.push(v);
            }
        }
    }
    out
}

/// Shortest length in each class of the equivalence generated by all rules
/// (both directions), restricted to words of length at most `max`.
pub fn class_minima(p: &Pregroup, max: usize) -> HashMap<Vec<usize>, usize> {
    let all = words(p.len(), max);
    let index: HashMap<&[usize], usize> = all.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect();
    let mut parent: Vec<usize> = (0..all.len()).collect();
    fn root(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (i, w) in all.iter().enumerate() {
        for v in successors(p, w) {
            let j = index[v.as_slice()];
            let (a, b) = (root(&mut parent, i), root(&mut parent, j));
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut best = vec![usize::MAX; all.len()];
    for (i, w) in all.iter().enumerate() {
        let r = root(&mut parent, i);
        best[r] = best[r].min(w.len());
    }
    all.iter().enumerate().map(|(i, w)| (w.clone(), best[root(&mut parent, i)])).collect()
}

/// Membership for every word up to length `max` over a CNF grammar by a
/// depth-first walk over prefixes, extending the CYK table one column at a time.
pub fn cnf_slice(g: &Cfg, k: usize, max: usize) -> HashSet<Vec<usize>> {
    assert!(g.variables.len() <= 128);
    let mut unit = vec![0u128; g.terminals.len()];
    let mut bin = Vec::new();
    let mut eps = false;
    for p in &g.productions {
        match p.rhs.as_slice() {
            [] => eps = true,
            [Sym::T(t)] => unit[*t] |= 1 << p.lhs,
            [Sym::V(b), Sym::V(c)] => bin.push((p.lhs, *b, *c)),
            _ => panic!("not in normal form"),
        }
    }
    let mut out = HashSet::new();
    if eps {
        out.insert(vec![]);
    }
    // cols[j][i] = variables deriving w[i..j+1]
    let mut cols: Vec<Vec<u128>> = Vec::new();
    let mut w = Vec::new();
    fn go(
        g: &Cfg, k: usize, max: usize, unit: &[u128], bin: &[(usize, usize, usize)], w: &mut Vec<usize>,
        cols: &mut Vec<Vec<u128>>, out: &mut HashSet<Vec<usize>>,
    ) {
        if w.len() == max {
            return;
        }
        for a in 0..k {
            let j = w.len();
            w.push(a);
            let mut col = vec![0u128; j + 1];
            col[j] = unit[a];
            for i in (0..j).rev() {
                let mut m = 0u128;
                for s in i..j {
                    let (l, r) = (cols[s][i], col[s + 1]);
                    if l == 0 || r == 0 {
                        continue;
                    }
                    for &(x, b, c) in bin {
                        if l >> b & 1 == 1 && r >> c & 1 == 1 {
                            m |= 1 << x;
                        }
                    }
                }
                col[i] = m;
            }
            if col[0] >> g.axiom & 1 == 1 {
                out.insert(w.clone());
            }
            cols.push(col);
            go(g, k, max, unit, bin, w, cols, out);
            cols.pop();
            w.pop();
        }
    }
    go(g, k, max, &unit, &bin, &mut w, &mut cols, &mut out);
    out
}
