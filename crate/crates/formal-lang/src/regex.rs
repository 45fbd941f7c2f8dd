use std::fmt;
use std::rc::Rc;

use crate::nfa::Nfa;

/// Rational expressions over letters 0..k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Regex {
    Empty,
    Epsilon,
    Letter(usize),
    Union(Rc<Regex>, Rc<Regex>),
    Concat(Rc<Regex>, Rc<Regex>),
    Star(Rc<Regex>),
}

impl Regex {
    pub fn union(a: Regex, b: Regex) -> Regex {
        match (a, b) {
            (Regex::Empty, x) | (x, Regex::Empty) => x,
            (x, y) => Regex::Union(Rc::new(x), Rc::new(y)),
        }
    }

    pub fn concat(a: Regex, b: Regex) -> Regex {
        match (a, b) {
            (Regex::Empty, _) | (_, Regex::Empty) => Regex::Empty,
            (Regex::Epsilon, x) | (x, Regex::Epsilon) => x,
            (x, y) => Regex::Concat(Rc::new(x), Rc::new(y)),
        }
    }

    pub fn star(a: Regex) -> Regex {
        match a {
            Regex::Empty | Regex::Epsilon => Regex::Epsilon,
            x => Regex::Star(Rc::new(x)),
        }
    }

    pub fn display<'a>(&'a self, alphabet: &'a [String]) -> RegexDisplay<'a> {
        RegexDisplay { re: self, alphabet }
    }

    fn prec(&self) -> u8 {
        match self {
            Regex::Union(..) => 0,
            Regex::Concat(..) => 1,
            Regex::Star(..) => 2,
            _ => 3,
        }
    }
}

pub struct RegexDisplay<'a> {
    re: &'a Regex,
    alphabet: &'a [String],
}

impl RegexDisplay<'_> {
    fn write(&self, f: &mut fmt::Formatter<'_>, r: &Regex, min: u8) -> fmt::Result {
        if r.prec() < min {
            f.write_str("(")?;
            self.write(f, r, 0)?;
            return f.write_str(")");
        }
        match r {
            Regex::Empty => f.write_str("∅"),
            Regex::Epsilon => f.write_str("ε"),
            Regex::Letter(a) => f.write_str(&self.alphabet[*a]),
            Regex::Union(x, y) => {
                self.write(f, x, 0)?;
                f.write_str(" + ")?;
                self.write(f, y, 0)
            }
            Regex::Concat(x, y) => {
                self.write(f, x, 1)?;
                f.write_str(" ")?;
                self.write(f, y, 1)
            }
            Regex::Star(x) => {
                self.write(f, x, 3)?;
                f.write_str("*")
            }
        }
    }
}

impl fmt::Display for RegexDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, self.re, 0)
    }
}

/// Dynamic programme over the allowed intermediate states 0..k.
pub fn nfa_to_rational(n: &Nfa) -> Regex {
    let m = n.num_states();
    let mut l: Vec<Vec<Regex>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut e = if i == j { Regex::Epsilon } else { Regex::Empty };
                    for &(p, a, q) in &n.transitions {
                        if p == i && q == j {
                            e = Regex::union(e, Regex::Letter(a));
                        }
                    }
                    e
                })
                .collect()
        })
        .collect();
    for k in 0..m {
        let loop_k = Regex::star(l[k][k].clone());
        let mut next = l.clone();
        for i in 0..m {
            for j in 0..m {
                let through = Regex::concat(Regex::concat(l[i][k].clone(), loop_k.clone()), l[k][j].clone());
                next[i][j] = Regex::union(l[i][j].clone(), through);
            }
        }
        l = next;
    }
    let mut out = Regex::Empty;
    for &i in &n.initial {
        for &j in &n.finals {
            out = Regex::union(out, l[i][j].clone());
        }
    }
    out
}

/// Structural induction without ε-transitions.
pub fn rational_to_nfa(e: &Regex, alphabet: &[String]) -> Nfa {
    let mut nfa = build(e, alphabet);
    for (i, s) in nfa.states.iter_mut().enumerate() {
        *s = (i + 1).to_string();
    }
    nfa
}

fn build(e: &Regex, alphabet: &[String]) -> Nfa {
    let mut n = Nfa::new(alphabet.to_vec(), Vec::new());
    match e {
        Regex::Empty => {
            n.add_state(String::new());
        }
        Regex::Epsilon => {
            n.add_state(String::new());
            n.initial.insert(0);
            n.finals.insert(0);
        }
        Regex::Letter(a) => {
            n.add_state(String::new());
            n.add_state(String::new());
            n.initial.insert(0);
            n.finals.insert(1);
            n.transitions.insert((0, *a, 1));
        }
        Regex::Union(x, y) => {
            n = disjoint(build(x, alphabet), build(y, alphabet)).0;
        }
        Regex::Concat(x, y) => {
            let (a, b) = (build(x, alphabet), build(y, alphabet));
            let a_eps = a.initial.iter().any(|s| a.finals.contains(s));
            let b_eps = b.initial.iter().any(|s| b.finals.contains(s));
            let (a_fin, a_init) = (a.finals.clone(), a.initial.clone());
            let (mut u, off) = disjoint(a, b);
            let b_init: Vec<usize> = u.initial.iter().copied().filter(|&s| s >= off).collect();
            let b_fin: Vec<usize> = u.finals.iter().copied().filter(|&s| s >= off).collect();
            let extra: Vec<(usize, usize, usize)> = u
                .transitions
                .iter()
                .filter(|t| t.2 < off && a_fin.contains(&t.2))
                .flat_map(|&(p, c, _)| b_init.iter().map(move |&i| (p, c, i)))
                .collect();
            u.transitions.extend(extra);
            u.initial = a_init;
            if a_eps {
                u.initial.extend(b_init.iter().copied());
            }
            u.finals = b_fin.into_iter().collect();
            if b_eps {
                u.finals.extend(a_fin);
            }
            n = u;
        }
        Regex::Star(x) => {
            let mut a = build(x, alphabet);
            let extra: Vec<(usize, usize, usize)> = a
                .transitions
                .iter()
                .filter(|t| a.finals.contains(&t.2))
                .flat_map(|&(p, c, _)| a.initial.iter().map(move |&i| (p, c, i)))
                .collect();
            a.transitions.extend(extra);
            let s = a.add_state(String::new());
            a.initial.insert(s);
            a.finals.insert(s);
            n = a;
        }
    }
    n
}

fn disjoint(mut a: Nfa, b: Nfa) -> (Nfa, usize) {
    let off = a.num_states();
    a.states.extend(b.states);
    a.transitions.extend(b.transitions.into_iter().map(|(p, c, q)| (p + off, c, q + off)));
    a.initial.extend(b.initial.into_iter().map(|s| s + off));
    a.finals.extend(b.finals.into_iter().map(|s| s + off));
    (a, off)
}
