use std::fmt;

use bs_rewrite::{Alphabet, Word};

use crate::cfg::{cyk, reduce_grammar, shortest_yields, to_cnf, Cfg, Production, Sym};
use crate::LangError;

/// Presentation read off a reduced grammar whose language contains ε: generators
/// are the variables followed by the terminals, one relation per production.
#[derive(Clone, Debug)]
pub struct HotzPresentation {
    pub grammar: Cfg,
    pub generators: Vec<String>,
    pub relations: Vec<(Vec<Sym>, Vec<Sym>)>,
    /// a shortest terminal word derived from each variable
    pub witnesses: Vec<Vec<usize>>,
}

impl HotzPresentation {
    /// Replace every variable by its witness.
    pub fn substitute(&self, w: &[Sym]) -> Vec<usize> {
        let mut out = Vec::new();
        for s in w {
            match *s {
                Sym::T(t) => out.push(t),
                Sym::V(v) => out.extend_from_slice(&self.witnesses[v]),
            }
        }
        out
    }

    /// ψ(ℓ)·ψ(r)⁻¹ for each relation ℓ = r, as signed terminal words.
    pub fn substituted_relators(&self) -> Vec<Vec<(usize, bool)>> {
        self.relations
            .iter()
            .map(|(l, r)| {
                let mut w: Vec<(usize, bool)> = self.substitute(l).into_iter().map(|t| (t, false)).collect();
                w.extend(self.substitute(r).into_iter().rev().map(|t| (t, true)));
                w
            })
            .collect()
    }

    fn sym_gen(&self, s: Sym) -> &str {
        match s {
            Sym::V(v) => &self.generators[v],
            Sym::T(t) => &self.generators[self.grammar.variables.len() + t],
        }
    }

    fn show(&self, w: &[Sym]) -> String {
        if w.is_empty() {
            "1".into()
        } else {
            w.iter().map(|&s| self.sym_gen(s)).collect::<Vec<_>>().join(" ")
        }
    }

    pub fn show_substituted(&self) -> String {
        let rels: Vec<String> = self
            .substituted_relators()
            .iter()
            .map(|r| {
                if r.is_empty() {
                    return "1".to_string();
                }
                r.iter()
                    .map(|&(t, inv)| {
                        let n = &self.grammar.terminals[t];
                        if inv {
                            format!("{n}^-1")
                        } else {
                            n.clone()
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        format!("< {} | {} >", self.grammar.terminals.join(", "), rels.join(", "))
    }
}

impl fmt::Display for HotzPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relations.iter().map(|(l, r)| format!("{} = {}", self.show(l), self.show(r))).collect();
        write!(f, "< {} | {} >", self.generators.join(", "), rels.join(", "))
    }
}

pub fn hotz_presentation(g: &Cfg) -> Result<HotzPresentation, LangError> {
    if !cyk(&to_cnf(g), &[])? {
        return Err(LangError::Grammar("the empty word is not in the language".into()));
    }
    let grammar = reduce_grammar(g);
    let witnesses = shortest_yields(&grammar)
        .into_iter()
        .map(|w| w.expect("reduced grammar is productive"))
        .collect();
    let generators = grammar.variables.iter().chain(&grammar.terminals).cloned().collect();
    let relations = grammar.productions.iter().map(|p| (vec![Sym::V(p.lhs)], p.rhs.clone())).collect();
    Ok(HotzPresentation { grammar, generators, relations, witnesses })
}

/// S → a S ā S | r | ε over an alphabet with involution; generates a set mapping onto
/// the normal closure of the relators.
pub fn normal_closure_grammar(alphabet: &Alphabet, relators: &[Word]) -> Result<Cfg, LangError> {
    let terminals: Vec<String> = alphabet.names().to_vec();
    let mut productions = Vec::new();
    for x in alphabet.letters() {
        let inv = alphabet
            .inverse(x)
            .ok_or_else(|| LangError::Invalid("alphabet needs formal inverses".into()))?;
        productions.push(Production { lhs: 0, rhs: vec![Sym::T(x.index()), Sym::V(0), Sym::T(inv.index()), Sym::V(0)] });
    }
    for r in relators {
        alphabet.check_word(r)?;
        productions.push(Production { lhs: 0, rhs: r.iter().map(|x| Sym::T(x.index())).collect() });
    }
    productions.push(Production { lhs: 0, rhs: vec![] });
    productions.dedup();
    let mut name = "S".to_string();
    while terminals.contains(&name) {
        name.push('\'');
    }
    Cfg::new(vec![name], terminals, productions, 0)
}
