use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::LangError;

/// Finite automaton over letters 0..alphabet.len(); no ε-transitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    pub alphabet: Vec<String>,
    pub states: Vec<String>,
    pub transitions: BTreeSet<(usize, usize, usize)>,
    pub initial: BTreeSet<usize>,
    pub finals: BTreeSet<usize>,
}

impl Nfa {
    pub fn new(alphabet: Vec<String>, states: Vec<String>) -> Self {
        Nfa { alphabet, states, transitions: BTreeSet::new(), initial: BTreeSet::new(), finals: BTreeSet::new() }
    }

    pub fn with_states(alphabet: Vec<String>, n: usize) -> Self {
        Nfa::new(alphabet, (1..=n).map(|i| i.to_string()).collect())
    }

    pub fn add_state(&mut self, name: String) -> usize {
        self.states.push(name);
        self.states.len() - 1
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn validate(&self) -> Result<(), LangError> {
        let n = self.states.len();
        for &(p, a, q) in &self.transitions {
            if p >= n || q >= n || a >= self.alphabet.len() {
                return Err(LangError::Invalid(format!("transition ({p}, {a}, {q}) out of range")));
            }
        }
        if self.initial.iter().chain(&self.finals).any(|&s| s >= n) {
            return Err(LangError::Invalid("state out of range".into()));
        }
        Ok(())
    }

    pub fn step(&self, from: &BTreeSet<usize>, a: usize) -> BTreeSet<usize> {
        self.transitions
            .iter()
            .filter(|(p, x, _)| *x == a && from.contains(p))
            .map(|t| t.2)
            .collect()
    }

    pub fn accepts(&self, w: &[usize]) -> bool {
        let mut cur = self.initial.clone();
        for &a in w {
            cur = self.step(&cur, a);
            if cur.is_empty() {
                return false;
            }
        }
        cur.iter().any(|s| self.finals.contains(s))
    }

    pub fn is_deterministic(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.initial.len() <= 1 && self.transitions.iter().all(|&(p, a, _)| seen.insert((p, a)))
    }

    pub fn parse_word(&self, text: &str) -> Result<Vec<usize>, LangError> {
        parse_letters(&self.alphabet, text)
    }
}

pub(crate) fn parse_letters(alphabet: &[String], text: &str) -> Result<Vec<usize>, LangError> {
    text.split_whitespace()
        .filter(|t| *t != "_")
        .map(|t| alphabet.iter().position(|a| a == t).ok_or_else(|| LangError::UnknownSymbol(t.to_string())))
        .collect()
}

impl fmt::Display for Nfa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = |s: &BTreeSet<usize>| s.iter().map(|&i| self.states[i].clone()).collect::<Vec<_>>().join(" ");
        writeln!(f, "alphabet {}", self.alphabet.join(" "))?;
        writeln!(f, "states {}", self.states.join(" "))?;
        writeln!(f, "initial {}", names(&self.initial))?;
        writeln!(f, "final {}", names(&self.finals))?;
        for &(p, a, q) in &self.transitions {
            writeln!(f, "trans {} {} {}", self.states[p], self.alphabet[a], self.states[q])?;
        }
        Ok(())
    }
}

/// A deterministic automaton; partial transition function allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    nfa: Nfa,
    delta: HashMap<(usize, usize), usize>,
}

impl Dfa {
    pub fn new(nfa: Nfa) -> Result<Self, LangError> {
        nfa.validate()?;
        if !nfa.is_deterministic() {
            return Err(LangError::Invalid("automaton is not deterministic".into()));
        }
        let delta = nfa.transitions.iter().map(|&(p, a, q)| ((p, a), q)).collect();
        Ok(Dfa { nfa, delta })
    }

    pub fn as_nfa(&self) -> &Nfa {
        &self.nfa
    }

    pub fn next(&self, state: usize, a: usize) -> Option<usize> {
        self.delta.get(&(state, a)).copied()
    }

    pub fn accepts(&self, w: &[usize]) -> bool {
        let Some(&start) = self.nfa.initial.iter().next() else { return false };
        let mut s = start;
        for &a in w {
            match self.next(s, a) {
                Some(t) => s = t,
                None => return false,
            }
        }
        self.nfa.finals.contains(&s)
    }
}

/// Subset construction over the subsets reachable from the initial set.
pub fn nfa_to_dfa(n: &Nfa) -> Dfa {
    let mut out = Nfa::new(n.alphabet.clone(), Vec::new());
    let mut index: BTreeMap<BTreeSet<usize>, usize> = BTreeMap::new();
    let mut queue = VecDeque::new();
    let name = |s: &BTreeSet<usize>| format!("{{{}}}", s.iter().map(|&i| n.states[i].clone()).collect::<Vec<_>>().join(","));
    if !n.initial.is_empty() {
        let s0 = n.initial.clone();
        index.insert(s0.clone(), out.add_state(name(&s0)));
        out.initial.insert(0);
        queue.push_back(s0);
    }
    while let Some(s) = queue.pop_front() {
        let i = index[&s];
        if s.iter().any(|q| n.finals.contains(q)) {
            out.finals.insert(i);
        }
        for a in 0..n.alphabet.len() {
            let t = n.step(&s, a);
            if t.is_empty() {
                continue;
            }
            let j = match index.get(&t) {
                Some(&j) => j,
                None => {
                    let j = out.add_state(name(&t));
                    index.insert(t.clone(), j);
                    queue.push_back(t);
                    j
                }
            };
            out.transitions.insert((i, a, j));
        }
    }
    Dfa::new(out).expect("subset automaton is deterministic")
}

/// Parse an automaton: `alphabet`, `states`, `initial`, `final`, `trans p a q` lines.
pub fn parse_nfa(text: &str) -> Result<Nfa, LangError> {
    let mut nfa = Nfa::new(Vec::new(), Vec::new());
    let mut pending: Vec<(usize, usize, Vec<(usize, String)>, &str)> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let toks = crate::tokens(line);
        let Some(&(col, head)) = toks.first() else { continue };
        let rest: Vec<(usize, String)> = toks[1..].iter().map(|(c, t)| (*c, t.to_string())).collect();
        match head {
            "alphabet" => nfa.alphabet = rest.into_iter().map(|t| t.1).collect(),
            "states" => nfa.states = rest.into_iter().map(|t| t.1).collect(),
            "initial" | "final" | "trans" => pending.push((ln, col, rest, head)),
            other => return Err(LangError::Parse { line: ln + 1, col: col + 1, msg: format!("unknown directive `{other}`") }),
        }
    }
    for (ln, col, rest, kind) in pending {
        let state = |(c, t): &(usize, String)| {
            nfa.states.iter().position(|s| s == t).ok_or_else(|| LangError::Parse { line: ln + 1, col: c + 1, msg: format!("unknown state `{t}`") })
        };
        match kind {
            "initial" => {
                for t in &rest {
                    let s = state(t)?;
                    nfa.initial.insert(s);
                }
            }
            "final" => {
                for t in &rest {
                    let s = state(t)?;
                    nfa.finals.insert(s);
                }
            }
            _ => {
                if rest.len() != 3 {
                    return Err(LangError::Parse { line: ln + 1, col: col + 1, msg: "expected `trans p a q`".into() });
                }
                let p = state(&rest[0])?;
                let q = state(&rest[2])?;
                let a = nfa.alphabet.iter().position(|x| *x == rest[1].1).ok_or_else(|| LangError::Parse {
                    line: ln + 1,
                    col: rest[1].0 + 1,
                    msg: format!("unknown letter `{}`", rest[1].1),
                })?;
                nfa.transitions.insert((p, a, q));
            }
        }
    }
    Ok(nfa)
}
