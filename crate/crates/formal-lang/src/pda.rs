use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use crate::cfg::{reduce_grammar, to_cnf, Cfg, Production, Sym};
use crate::LangError;

/// In state `state`, with `pop` on top of the stack (top is the right end) and
/// `read` next on the input: consume both, push `push`, move to `next`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PdaRule {
    pub pop: Vec<usize>,
    pub state: usize,
    pub read: Vec<usize>,
    pub push: Vec<usize>,
    pub next: usize,
}

/// Push-down automaton accepting on empty stack and final state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pda {
    pub states: Vec<String>,
    pub input: Vec<String>,
    pub stack: Vec<String>,
    pub rules: Vec<PdaRule>,
    pub initial: usize,
    pub finals: BTreeSet<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RunOutcome {
    Accept,
    Reject,
    FuelExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PdaRun {
    pub outcome: RunOutcome,
    /// configurations visited
    pub explored: usize,
    /// largest number of distinct successors of a single configuration
    pub max_branching: usize,
}

impl Pda {
    pub fn validate(&self) -> Result<(), LangError> {
        let (q, s, z) = (self.states.len(), self.input.len(), self.stack.len());
        if self.initial >= q || self.finals.iter().any(|&f| f >= q) {
            return Err(LangError::Invalid("state out of range".into()));
        }
        for r in &self.rules {
            if r.state >= q || r.next >= q || r.read.iter().any(|&a| a >= s) || r.pop.iter().chain(&r.push).any(|&x| x >= z) {
                return Err(LangError::Invalid("rule refers to an undeclared symbol".into()));
            }
        }
        Ok(())
    }

    pub fn parse_word(&self, text: &str) -> Result<Vec<usize>, LangError> {
        crate::nfa::parse_letters(&self.input, text)
    }
}

fn join(names: &[String], w: &[usize]) -> String {
    if w.is_empty() {
        "_".into()
    } else {
        w.iter().map(|&i| names[i].as_str()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for Pda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "states {}", self.states.join(" "))?;
        writeln!(f, "input {}", self.input.join(" "))?;
        writeln!(f, "stack {}", self.stack.join(" "))?;
        writeln!(f, "initial {}", self.states[self.initial])?;
        let fin: Vec<&str> = self.finals.iter().map(|&i| self.states[i].as_str()).collect();
        writeln!(f, "final {}", fin.join(" "))?;
        for r in &self.rules {
            writeln!(
                f,
                "rule {} {} {} -> {} {}",
                join(&self.stack, &r.pop),
                self.states[r.state],
                join(&self.input, &r.read),
                join(&self.stack, &r.push),
                self.states[r.next]
            )?;
        }
        Ok(())
    }
}

/// Parse `states`, `input`, `stack`, `initial`, `final` and `rule POP STATE READ -> PUSH NEXT` lines.
/// Words are comma-joined symbol names; `_` is the empty word.
pub fn parse_pda(text: &str) -> Result<Pda, LangError> {
    let err = |line: usize, col: usize, msg: String| LangError::Parse { line: line + 1, col: col + 1, msg };
    let mut states = Vec::new();
    let mut input = Vec::new();
    let mut stack = Vec::new();
    let mut pending = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let toks = crate::tokens(line);
        let Some(&(col, head)) = toks.first() else { continue };
        let rest: Vec<String> = toks[1..].iter().map(|t| t.1.to_string()).collect();
        match head {
            "states" => states = rest,
            "input" => input = rest,
            "stack" => stack = rest,
            "initial" | "final" | "rule" => pending.push((ln, col, head, toks[1..].iter().map(|(c, t)| (*c, t.to_string())).collect::<Vec<_>>())),
            other => return Err(err(ln, col, format!("unknown directive `{other}`"))),
        }
    }
    let mut initial = None;
    let mut finals = BTreeSet::new();
    let mut rules = Vec::new();
    for (ln, col, head, rest) in pending {
        let state = |(c, t): &(usize, String)| states.iter().position(|s| s == t).ok_or_else(|| err(ln, *c, format!("unknown state `{t}`")));
        let word = |(c, t): &(usize, String), names: &[String]| -> Result<Vec<usize>, LangError> {
            if t == "_" {
                return Ok(Vec::new());
            }
            t.split(',')
                .map(|x| names.iter().position(|n| n == x).ok_or_else(|| err(ln, *c, format!("unknown symbol `{x}`"))))
                .collect()
        };
        match head {
            "initial" => {
                if rest.len() != 1 {
                    return Err(err(ln, col, "expected one initial state".into()));
                }
                initial = Some(state(&rest[0])?);
            }
            "final" => {
                for t in &rest {
                    finals.insert(state(t)?);
                }
            }
            _ => {
                if rest.len() != 6 || rest[3].1 != "->" {
                    return Err(err(ln, col, "expected `rule POP STATE READ -> PUSH NEXT`".into()));
                }
                rules.push(PdaRule {
                    pop: word(&rest[0], &stack)?,
                    state: state(&rest[1])?,
                    read: word(&rest[2], &input)?,
                    push: word(&rest[4], &stack)?,
                    next: state(&rest[5])?,
                });
            }
        }
    }
    let initial = initial.ok_or_else(|| err(0, 0, "missing `initial` line".into()))?;
    let pda = Pda { states, input, stack, rules, initial, finals };
    pda.validate()?;
    Ok(pda)
}

/// Stacks shared as paths in a trie of (parent, top symbol) nodes; node 0 is the empty stack.
struct StackTrie {
    nodes: Vec<(u32, u32, u32)>,
    children: HashMap<(u32, u32), u32>,
}

impl StackTrie {
    fn new() -> Self {
        StackTrie { nodes: vec![(0, u32::MAX, 0)], children: HashMap::new() }
    }

    fn push(&mut self, at: u32, sym: usize) -> u32 {
        let key = (at, sym as u32);
        if let Some(&c) = self.children.get(&key) {
            return c;
        }
        let id = self.nodes.len() as u32;
        let depth = self.nodes[at as usize].2 + 1;
        self.nodes.push((at, sym as u32, depth));
        self.children.insert(key, id);
        id
    }

    /// The node below `pop` if the stack at `at` ends with it.
    fn pop(&self, mut at: u32, pop: &[usize]) -> Option<u32> {
        for &z in pop.iter().rev() {
            let (parent, sym, depth) = self.nodes[at as usize];
            if depth == 0 || sym as usize != z {
                return None;
            }
            at = parent;
        }
        Some(at)
    }
}

/// `live[x][y]`: a stack with x directly below y may still be emptied. Acceptance
/// needs an empty stack, so configurations with a dead adjacent pair are dropped.
/// Over-approximates by ignoring what lies further down.
fn live_pairs(m: &Pda) -> (Vec<Vec<bool>>, Vec<bool>) {
    let nz = m.stack.len();
    let nq = m.states.len();
    let mut reach = vec![vec![false; nq]; nq];
    for (q, row) in reach.iter_mut().enumerate() {
        row[q] = true;
    }
    let mut changed = true;
    while changed {
        changed = false;
        for q in 0..nq {
            for r in &m.rules {
                if reach[q][r.state] && !reach[q][r.next] {
                    reach[q][r.next] = true;
                    changed = true;
                }
            }
        }
    }
    let mut poppable = vec![false; nz];
    // poppable_in[q][x]: some rule usable from q pops x
    let mut poppable_in = vec![vec![false; nz]; nq];
    for r in &m.rules {
        for &x in &r.pop {
            poppable[x] = true;
            for q in 0..nq {
                if reach[q][r.state] {
                    poppable_in[q][x] = true;
                }
            }
        }
    }
    let mut live = vec![vec![false; nz]; nz];
    for r in &m.rules {
        for win in r.pop.windows(2) {
            live[win[0]][win[1]] = true;
        }
        if let (Some(&y), true) = (r.pop.first(), r.push.is_empty()) {
            for x in 0..nz {
                if poppable_in[r.next][x] {
                    live[x][y] = true;
                }
            }
        }
    }
    let mut changed = true;
    while changed {
        changed = false;
        for r in &m.rules {
            let (Some(&y), Some(&p)) = (r.pop.first(), r.push.first()) else { continue };
            for x in 0..nz {
                if !live[x][y] && live[x][p] {
                    live[x][y] = true;
                    changed = true;
                }
            }
        }
    }
    (live, poppable)
}

/// Breadth-first search over configurations (stack, state, input position).
pub fn pda_run(m: &Pda, w: &[usize], fuel: usize) -> PdaRun {
    let mut by_state: Vec<Vec<&PdaRule>> = vec![Vec::new(); m.states.len()];
    for r in &m.rules {
        by_state[r.state].push(r);
    }
    let (live, poppable) = live_pairs(m);
    let mut trie = StackTrie::new();
    let mut seen: HashSet<(u32, usize, usize)> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert((0, m.initial, 0));
    queue.push_back((0u32, m.initial, 0usize));
    let mut max_branching = 0;
    let mut explored = 0;
    let mut succ = Vec::new();
    while let Some((stack, state, pos)) = queue.pop_front() {
        explored += 1;
        if stack == 0 && pos == w.len() && m.finals.contains(&state) {
            return PdaRun { outcome: RunOutcome::Accept, explored, max_branching };
        }
        if explored >= fuel {
            return PdaRun { outcome: RunOutcome::FuelExhausted, explored, max_branching };
        }
        succ.clear();
        for r in &by_state[state] {
            if !w[pos..].starts_with(&r.read) {
                continue;
            }
            let Some(mut s) = trie.pop(stack, &r.pop) else { continue };
            let mut alive = true;
            for &z in &r.push {
                let below = trie.nodes[s as usize];
                alive &= poppable[z] && (below.2 == 0 || live[below.1 as usize][z]);
                s = trie.push(s, z);
            }
            succ.push((s, r.next, pos + r.read.len(), alive));
        }
        succ.sort_unstable();
        succ.dedup();
        max_branching = max_branching.max(succ.len());
        for &(s, q, p, alive) in &succ {
            let c = (s, q, p);
            if alive && seen.insert(c) {
                queue.push_back(c);
            }
        }
    }
    PdaRun { outcome: RunOutcome::Reject, explored, max_branching }
}

/// Shift-reduce automaton with states q0, q1 over the Chomsky normal form of `g`:
/// terminals are shifted onto the stack and right-hand sides on top are reduced.
pub fn cfg_to_pda(g: &Cfg) -> Pda {
    let c = to_cnf(g);
    let nv = c.variables.len();
    let stack: Vec<String> = c.variables.iter().chain(&c.terminals).cloned().collect();
    let sym = |s: &Sym| match *s {
        Sym::V(v) => v,
        Sym::T(t) => nv + t,
    };
    let (q0, q1) = (0, 1);
    let mut rules = vec![PdaRule { pop: vec![c.axiom], state: q0, read: vec![], push: vec![], next: q1 }];
    for p in &c.productions {
        if p.rhs.is_empty() {
            rules.push(PdaRule { pop: vec![], state: q0, read: vec![], push: vec![], next: q1 });
        } else {
            rules.push(PdaRule { pop: p.rhs.iter().map(sym).collect(), state: q0, read: vec![], push: vec![p.lhs], next: q0 });
        }
    }
    for b in 0..c.terminals.len() {
        rules.push(PdaRule { pop: vec![], state: q0, read: vec![b], push: vec![nv + b], next: q0 });
    }
    Pda {
        states: vec!["q0".into(), "q1".into()],
        input: c.terminals.clone(),
        stack,
        rules,
        initial: q0,
        finals: BTreeSet::from([q1]),
    }
}

fn fresh(states: &mut Vec<String>, base: &str) -> usize {
    let mut name = base.to_string();
    while states.contains(&name) {
        name.push('\'');
    }
    states.push(name);
    states.len() - 1
}

/// Triple construction: normalise to rules that pop exactly one symbol and push
/// at most two (with a bottom marker), then (p, z, q) derives what can be read
/// from p while removing z and ending in q.
pub fn pda_to_cfg(m: &Pda) -> Cfg {
    let mut states = m.states.clone();
    let bottom_name = {
        let mut n = "$".to_string();
        while m.stack.contains(&n) {
            n.push('$');
        }
        n
    };
    let mut stack = m.stack.clone();
    stack.push(bottom_name);
    let bottom = stack.len() - 1;
    let nz = stack.len();

    // (pop symbol, state, read, push of length <= 2, next)
    let mut norm: Vec<(usize, usize, Vec<usize>, Vec<usize>, usize)> = Vec::new();
    for &f in &m.finals {
        norm.push((bottom, f, vec![], vec![], f));
    }
    let push_chain = |states: &mut Vec<String>, norm: &mut Vec<(usize, usize, Vec<usize>, Vec<usize>, usize)>, z: usize, p: usize, read: Vec<usize>, push: Vec<usize>, q: usize, tag: usize| {
        if push.len() <= 2 {
            norm.push((z, p, read, push, q));
            return;
        }
        // write the first two, then one more symbol per step
        let mut t = fresh(states, &format!("w{tag}_1"));
        norm.push((z, p, read, push[..2].to_vec(), t));
        for i in 2..push.len() {
            let next = if i + 1 == push.len() { q } else { fresh(states, &format!("w{tag}_{i}")) };
            norm.push((push[i - 1], t, vec![], vec![push[i - 1], push[i]], next));
            t = next;
        }
    };
    for (k, r) in m.rules.iter().enumerate() {
        if r.pop.is_empty() {
            for z in 0..nz {
                let mut push = vec![z];
                push.extend_from_slice(&r.push);
                push_chain(&mut states, &mut norm, z, r.state, r.read.clone(), push, r.next, k * nz + z);
            }
            continue;
        }
        // pop from the top down through fresh states, then push
        let mut p = r.state;
        let mut read = r.read.clone();
        for i in (1..r.pop.len()).rev() {
            let t = fresh(&mut states, &format!("r{k}_{i}"));
            norm.push((r.pop[i], p, std::mem::take(&mut read), vec![], t));
            p = t;
        }
        push_chain(&mut states, &mut norm, r.pop[0], p, read, r.push.clone(), r.next, k * nz + nz + 1);
    }

    let nq = states.len();
    let mut variables = vec!["S".to_string()];
    let mut index: HashMap<(usize, usize, usize), usize> = HashMap::new();
    let mut var = |variables: &mut Vec<String>, p: usize, z: usize, q: usize| {
        *index.entry((p, z, q)).or_insert_with(|| {
            variables.push(format!("({},{},{})", states[p], stack[z], states[q]));
            variables.len() - 1
        })
    };
    let mut productions = Vec::new();
    for &f in &m.finals {
        let v = var(&mut variables, m.initial, bottom, f);
        productions.push(Production { lhs: 0, rhs: vec![Sym::V(v)] });
    }
    for (z, p, read, push, q) in &norm {
        let u: Vec<Sym> = read.iter().map(|&a| Sym::T(a)).collect();
        match push[..] {
            [] => {
                let v = var(&mut variables, *p, *z, *q);
                productions.push(Production { lhs: v, rhs: u });
            }
            [y] => {
                for t in 0..nq {
                    let v = var(&mut variables, *p, *z, t);
                    let a = var(&mut variables, *q, y, t);
                    let mut rhs = u.clone();
                    rhs.push(Sym::V(a));
                    productions.push(Production { lhs: v, rhs });
                }
            }
            [x, y] => {
                for t in 0..nq {
                    for s in 0..nq {
                        let v = var(&mut variables, *p, *z, t);
                        let a = var(&mut variables, *q, y, s);
                        let b = var(&mut variables, s, x, t);
                        let mut rhs = u.clone();
                        rhs.push(Sym::V(a));
                        rhs.push(Sym::V(b));
                        productions.push(Production { lhs: v, rhs });
                    }
                }
            }
            _ => unreachable!("pushes are at most two symbols after normalisation"),
        }
    }
    let g = Cfg { variables, terminals: m.input.clone(), productions, axiom: 0 };
    reduce_grammar(&g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn terminal_below_top_is_dead_in_shift_reduce() {
        let g = crate::parse_cfg("axiom: S\nS -> a S b | _\n").unwrap();
        let m = cfg_to_pda(&g);
        let (live, poppable) = live_pairs(&m);
        let nv = m.stack.len() - m.input.len();
        assert!(poppable.iter().all(|&p| p));
        for t in nv..m.stack.len() {
            assert!((0..m.stack.len()).all(|y| !live[t][y]));
        }
    }

    #[test]
    fn trie_pop_checks_symbols() {
        let mut t = StackTrie::new();
        let a = t.push(0, 1);
        let b = t.push(a, 2);
        assert_eq!(t.pop(b, &[1, 2]), Some(0));
        assert_eq!(t.pop(b, &[2]), Some(a));
        assert_eq!(t.pop(b, &[1]), None);
        assert_eq!(t.pop(a, &[2, 1]), None);
    }
}
