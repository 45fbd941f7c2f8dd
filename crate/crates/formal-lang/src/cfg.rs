use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::LangError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sym {
    T(usize),
    V(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Production {
    pub lhs: usize,
    pub rhs: Vec<Sym>,
}

/// A context-free grammar. Variables and terminals are indices into the name lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cfg {
    pub variables: Vec<String>,
    pub terminals: Vec<String>,
    pub productions: Vec<Production>,
    pub axiom: usize,
}

impl Cfg {
    pub fn new(variables: Vec<String>, terminals: Vec<String>, productions: Vec<Production>, axiom: usize) -> Result<Self, LangError> {
        let g = Cfg { variables, terminals, productions, axiom };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<(), LangError> {
        if self.axiom >= self.variables.len() {
            return Err(LangError::Grammar("axiom is not a variable".into()));
        }
        for p in &self.productions {
            let ok = p.lhs < self.variables.len()
                && p.rhs.iter().all(|s| match *s {
                    Sym::T(t) => t < self.terminals.len(),
                    Sym::V(v) => v < self.variables.len(),
                });
            if !ok {
                return Err(LangError::Grammar("production refers to an undeclared symbol".into()));
            }
        }
        Ok(())
    }

    pub fn sym_name(&self, s: Sym) -> &str {
        match s {
            Sym::T(t) => &self.terminals[t],
            Sym::V(v) => &self.variables[v],
        }
    }

    pub fn show_rhs(&self, rhs: &[Sym]) -> String {
        if rhs.is_empty() {
            "_".into()
        } else {
            rhs.iter().map(|&s| self.sym_name(s)).collect::<Vec<_>>().join(" ")
        }
    }

    pub fn parse_word(&self, text: &str) -> Result<Vec<usize>, LangError> {
        crate::nfa::parse_letters(&self.terminals, text)
    }

    pub fn show_word(&self, w: &[usize]) -> String {
        if w.is_empty() {
            "_".into()
        } else {
            w.iter().map(|&t| self.terminals[t].as_str()).collect::<Vec<_>>().join(" ")
        }
    }

    pub fn is_cnf(&self) -> bool {
        let axiom_on_rhs = self.productions.iter().any(|p| p.rhs.contains(&Sym::V(self.axiom)));
        self.productions.iter().all(|p| match p.rhs.as_slice() {
            [Sym::T(_)] => true,
            [Sym::V(_), Sym::V(_)] => true,
            [] => p.lhs == self.axiom && !axiom_on_rhs,
            _ => false,
        })
    }

    pub fn nullable(&self) -> Vec<bool> {
        let mut null = vec![false; self.variables.len()];
        let mut changed = true;
        while changed {
            changed = false;
            for p in &self.productions {
                if !null[p.lhs] && p.rhs.iter().all(|s| matches!(*s, Sym::V(v) if null[v])) {
                    null[p.lhs] = true;
                    changed = true;
                }
            }
        }
        null
    }

    pub fn productive(&self) -> Vec<bool> {
        shortest_yields(self).iter().map(|w| w.is_some()).collect()
    }

    pub fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.variables.len()];
        seen[self.axiom] = true;
        let mut stack = vec![self.axiom];
        while let Some(v) = stack.pop() {
            for p in self.productions.iter().filter(|p| p.lhs == v) {
                for s in &p.rhs {
                    if let Sym::V(u) = *s {
                        if !seen[u] {
                            seen[u] = true;
                            stack.push(u);
                        }
                    }
                }
            }
        }
        seen
    }

    /// Keep only the variables flagged in `keep` (the axiom always stays), renumbering in order.
    fn restrict(&self, keep: &[bool]) -> Cfg {
        let mut map = vec![usize::MAX; self.variables.len()];
        let mut variables = Vec::new();
        for (i, name) in self.variables.iter().enumerate() {
            if keep[i] || i == self.axiom {
                map[i] = variables.len();
                variables.push(name.clone());
            }
        }
        let productions = self
            .productions
            .iter()
            .filter(|p| map[p.lhs] != usize::MAX && p.rhs.iter().all(|s| !matches!(*s, Sym::V(v) if map[v] == usize::MAX)))
            .map(|p| Production {
                lhs: map[p.lhs],
                rhs: p.rhs.iter().map(|s| if let Sym::V(v) = *s { Sym::V(map[v]) } else { *s }).collect(),
            })
            .collect();
        Cfg { variables, terminals: self.terminals.clone(), productions, axiom: map[self.axiom] }
    }

    fn fresh_name(&self, base: &str) -> String {
        let mut name = base.to_string();
        while self.variables.contains(&name) || self.terminals.contains(&name) {
            name.push('\'');
        }
        name
    }

    fn add_variable(&mut self, base: &str) -> usize {
        let name = self.fresh_name(base);
        self.variables.push(name);
        self.variables.len() - 1
    }
}

impl fmt::Display for Cfg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "axiom: {}", self.variables[self.axiom])?;
        if !self.terminals.is_empty() {
            writeln!(f, "terminals: {}", self.terminals.join(" "))?;
        }
        for v in 0..self.variables.len() {
            let alts: Vec<String> = self.productions.iter().filter(|p| p.lhs == v).map(|p| self.show_rhs(&p.rhs)).collect();
            if !alts.is_empty() {
                writeln!(f, "{} -> {}", self.variables[v], alts.join(" | "))?;
            }
        }
        Ok(())
    }
}

/// Parse `axiom: S`, an optional `terminals: a b` line, and `A -> a B | _` lines.
/// Variables are exactly the symbols appearing on a left-hand side.
pub fn parse_cfg(text: &str) -> Result<Cfg, LangError> {
    let err = |line: usize, col: usize, msg: String| LangError::Parse { line: line + 1, col: col + 1, msg };
    let mut axiom: Option<(usize, String)> = None;
    let mut terminals: Vec<String> = Vec::new();
    let mut rules: Vec<(usize, String, Vec<Vec<(usize, String)>>)> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let toks = crate::tokens(line);
        let Some(&(col, head)) = toks.first() else { continue };
        if head == "axiom:" {
            match toks.as_slice() {
                [_, (_, s)] => axiom = Some((ln, s.to_string())),
                _ => return Err(err(ln, col, "expected `axiom: NAME`".into())),
            }
            continue;
        }
        if head == "terminals:" {
            terminals.extend(toks[1..].iter().map(|t| t.1.to_string()));
            continue;
        }
        if toks.get(1).map(|t| t.1) != Some("->") {
            return Err(err(ln, col, "expected `A -> ...`".into()));
        }
        let mut alts = vec![Vec::new()];
        for &(c, t) in &toks[2..] {
            match t {
                "|" => alts.push(Vec::new()),
                "_" => {}
                _ => alts.last_mut().unwrap().push((c, t.to_string())),
            }
        }
        rules.push((ln, head.to_string(), alts));
    }
    let Some((aline, axiom)) = axiom else {
        return Err(err(0, 0, "missing `axiom:` line".into()));
    };
    let mut variables: Vec<String> = vec![axiom.clone()];
    for (_, lhs, _) in &rules {
        if !variables.contains(lhs) {
            variables.push(lhs.clone());
        }
    }
    if rules.iter().all(|r| r.1 != axiom) && !rules.is_empty() {
        return Err(err(aline, 0, format!("axiom `{axiom}` has no productions")));
    }
    for t in &terminals {
        if variables.contains(t) {
            return Err(err(0, 0, format!("`{t}` declared as a terminal but used as a variable")));
        }
    }
    let mut productions = Vec::new();
    for (_, lhs, alts) in &rules {
        let l = variables.iter().position(|v| v == lhs).unwrap();
        for alt in alts {
            let mut rhs = Vec::new();
            for (_, s) in alt {
                if let Some(v) = variables.iter().position(|v| v == s) {
                    rhs.push(Sym::V(v));
                } else {
                    let t = match terminals.iter().position(|t| t == s) {
                        Some(t) => t,
                        None => {
                            terminals.push(s.clone());
                            terminals.len() - 1
                        }
                    };
                    rhs.push(Sym::T(t));
                }
            }
            productions.push(Production { lhs: l, rhs });
        }
    }
    Cfg::new(variables, terminals, productions, 0)
}

/// Drop unproductive variables, then unreachable ones.
pub fn reduce_grammar(g: &Cfg) -> Cfg {
    let g1 = g.restrict(&g.productive());
    let reach = g1.reachable();
    g1.restrict(&reach)
}

/// For each variable a shortest terminal word it derives (lexicographically least among the shortest).
pub fn shortest_yields(g: &Cfg) -> Vec<Option<Vec<usize>>> {
    let mut best: Vec<Option<Vec<usize>>> = vec![None; g.variables.len()];
    let mut changed = true;
    while changed {
        changed = false;
        for p in &g.productions {
            let mut w = Vec::new();
            let mut ok = true;
            for s in &p.rhs {
                match *s {
                    Sym::T(t) => w.push(t),
                    Sym::V(v) => match &best[v] {
                        Some(x) => w.extend_from_slice(x),
                        None => {
                            ok = false;
                            break;
                        }
                    },
                }
            }
            if !ok {
                continue;
            }
            let better = match &best[p.lhs] {
                None => true,
                Some(cur) => (w.len(), &w) < (cur.len(), cur),
            };
            if better {
                best[p.lhs] = Some(w);
                changed = true;
            }
        }
    }
    best
}

/// Chomsky normal form: start, terminal, binarise, ε-elimination, unit-elimination, dedupe, reduce.
/// `S → ε` survives only for the axiom, which then occurs on no right-hand side.
pub fn to_cnf(g: &Cfg) -> Cfg {
    let mut g = g.clone();
    let derives_empty = g.nullable()[g.axiom];
    if derives_empty && g.productions.iter().any(|p| p.rhs.contains(&Sym::V(g.axiom))) {
        let base = format!("{}0", g.variables[g.axiom]);
        let s0 = g.add_variable(&base);
        g.productions.push(Production { lhs: s0, rhs: vec![Sym::V(g.axiom)] });
        g.axiom = s0;
    }

    // terminals inside longer right-hand sides
    let mut term_var: HashMap<usize, usize> = HashMap::new();
    let mut prods = Vec::new();
    for p in std::mem::take(&mut g.productions) {
        if p.rhs.len() < 2 {
            prods.push(p);
            continue;
        }
        let mut rhs = Vec::new();
        for s in p.rhs {
            match s {
                Sym::T(t) => {
                    let v = match term_var.get(&t) {
                        Some(&v) => v,
                        None => {
                            let base = format!("T_{}", g.terminals[t]);
                            let v = g.add_variable(&base);
                            term_var.insert(t, v);
                            prods.push(Production { lhs: v, rhs: vec![Sym::T(t)] });
                            v
                        }
                    };
                    rhs.push(Sym::V(v));
                }
                s => rhs.push(s),
            }
        }
        prods.push(Production { lhs: p.lhs, rhs });
    }

    // binarise
    let mut bin = Vec::new();
    for p in prods {
        if p.rhs.len() <= 2 {
            bin.push(p);
            continue;
        }
        let mut lhs = p.lhs;
        let k = p.rhs.len();
        for i in 0..k - 2 {
            let base = format!("{}_{}", g.variables[p.lhs], i + 1);
            let v = g.add_variable(&base);
            bin.push(Production { lhs, rhs: vec![p.rhs[i], Sym::V(v)] });
            lhs = v;
        }
        bin.push(Production { lhs, rhs: vec![p.rhs[k - 2], p.rhs[k - 1]] });
    }
    g.productions = bin;

    // ε-elimination
    let null = g.nullable();
    let mut no_eps = BTreeSet::new();
    for p in &g.productions {
        let opts: Vec<usize> = (0..p.rhs.len()).filter(|&i| matches!(p.rhs[i], Sym::V(v) if null[v])).collect();
        for mask in 0..(1u32 << opts.len()) {
            let rhs: Vec<Sym> = (0..p.rhs.len())
                .filter(|i| opts.iter().position(|o| o == i).map_or(true, |k| mask & (1 << k) == 0))
                .map(|i| p.rhs[i])
                .collect();
            if !rhs.is_empty() {
                no_eps.insert(Production { lhs: p.lhs, rhs });
            }
        }
    }

    // unit elimination
    let nv = g.variables.len();
    let mut unit = vec![vec![false; nv]; nv];
    for (a, row) in unit.iter_mut().enumerate() {
        row[a] = true;
    }
    let mut changed = true;
    while changed {
        changed = false;
        for p in &no_eps {
            if let [Sym::V(b)] = p.rhs[..] {
                for a in 0..nv {
                    if unit[a][p.lhs] && !unit[a][b] {
                        unit[a][b] = true;
                        changed = true;
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for (a, row) in unit.iter().enumerate() {
        for p in &no_eps {
            if !row[p.lhs] || matches!(p.rhs[..], [Sym::V(_)]) {
                continue;
            }
            let q = Production { lhs: a, rhs: p.rhs.clone() };
            if seen.insert(q.clone()) {
                out.push(q);
            }
        }
    }
    out.sort_by_key(|p| p.lhs);
    if derives_empty {
        out.insert(0, Production { lhs: g.axiom, rhs: vec![] });
    }
    g.productions = out;
    reduce_grammar(&g)
}

/// CYK membership for a grammar in Chomsky normal form.
pub fn cyk(g: &Cfg, w: &[usize]) -> Result<bool, LangError> {
    if !g.is_cnf() {
        return Err(LangError::Grammar("CYK requires Chomsky normal form".into()));
    }
    if w.is_empty() {
        return Ok(g.productions.iter().any(|p| p.lhs == g.axiom && p.rhs.is_empty()));
    }
    let n = w.len();
    let nv = g.variables.len();
    // table[i][len-1] = set of variables deriving w[i..i+len]
    let mut table = vec![vec![vec![false; nv]; n]; n];
    for (i, &a) in w.iter().enumerate() {
        for p in &g.productions {
            if p.rhs == [Sym::T(a)] {
                table[i][0][p.lhs] = true;
            }
        }
    }
    let binary: Vec<(usize, usize, usize)> = g
        .productions
        .iter()
        .filter_map(|p| match p.rhs[..] {
            [Sym::V(b), Sym::V(c)] => Some((p.lhs, b, c)),
            _ => None,
        })
        .collect();
    for len in 2..=n {
        for i in 0..=n - len {
            for split in 1..len {
                for &(a, b, c) in &binary {
                    if table[i][split - 1][b] && table[i + split][len - split - 1][c] {
                        table[i][len - 1][a] = true;
                    }
                }
            }
        }
    }
    Ok(table[0][n - 1][g.axiom])
}

/// 2^|V| for a grammar in Chomsky normal form.
pub fn pumping_constant(g: &Cfg) -> Result<u128, LangError> {
    if !g.is_cnf() {
        return Err(LangError::Grammar("pumping constant is defined for Chomsky normal form".into()));
    }
    let v = g.variables.len();
    if v >= 128 {
        return Err(LangError::Grammar(format!("2^{v} does not fit")));
    }
    Ok(1u128 << v)
}
