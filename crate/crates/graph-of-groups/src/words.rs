use std::fmt;

use bs_rewrite::{Letter, Rule, SemiThueSystem, Word, DEFAULT_FUEL};

use crate::graph::{GogLetter, GraphOfGroups};
use crate::GogError;

fn product_rules(g: &GraphOfGroups) -> Vec<Rule> {
    let mut rules = Vec::new();
    for (vi, v) in g.vertices().iter().enumerate() {
        let grp = &v.group;
        for a in 1..grp.order() {
            for b in 1..grp.order() {
                let lhs = vec![g.vertex_letter(vi, a).unwrap(), g.vertex_letter(vi, b).unwrap()];
                let rhs = g.vertex_letter(vi, grp.mul(a, b)).into_iter().collect();
                rules.push(Rule::new(lhs, rhs));
            }
        }
    }
    rules
}

pub(crate) fn build_sg_rules(g: &GraphOfGroups) -> SemiThueSystem {
    let mut rules = product_rules(g);
    for (e, edge) in g.edges().iter().enumerate() {
        let src = &g.vertices()[edge.source].group;
        let back = &g.edges()[e ^ 1];
        for &c in g.coset_reps(e) {
            for a in 1..edge.group.order() {
                let ca = src.mul(c, edge.embed[a]);
                let lhs = vec![g.vertex_letter(edge.source, ca).unwrap(), g.edge_letter(e)];
                let mut rhs: Word = g.vertex_letter(edge.source, c).into_iter().collect();
                rhs.push(g.edge_letter(e));
                rhs.push(g.vertex_letter(edge.target, back.embed[a]).unwrap());
                rules.push(Rule::new(lhs, rhs));
            }
        }
    }
    for e in 0..g.edges().len() {
        rules.push(Rule::new(vec![g.edge_letter(e ^ 1), g.edge_letter(e)], vec![]));
    }
    SemiThueSystem::new(g.alphabet().clone(), rules).expect("letters of the graph of groups")
}

pub(crate) fn build_britton_rules(g: &GraphOfGroups) -> SemiThueSystem {
    let mut rules = product_rules(g);
    for (e, edge) in g.edges().iter().enumerate() {
        let back = &g.edges()[e ^ 1];
        for a in 0..edge.group.order() {
            let mut lhs = vec![g.edge_letter(e ^ 1)];
            lhs.extend(g.vertex_letter(edge.source, edge.embed[a]));
            lhs.push(g.edge_letter(e));
            let rhs = g.vertex_letter(edge.target, back.embed[a]).into_iter().collect();
            rules.push(Rule::new(lhs, rhs));
        }
    }
    SemiThueSystem::new(g.alphabet().clone(), rules).expect("letters of the graph of groups")
}

/// A relator as a sequence of (letter, inverted) pairs.
pub type Relator = Vec<(Letter, bool)>;

#[derive(Clone, Debug)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Relator>,
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {} | ", self.generators.join(", "))?;
        let rs: Vec<String> = self
            .relators
            .iter()
            .map(|r| {
                r.iter()
                    .map(|(x, inv)| {
                        let n = &self.generators[x.index()];
                        if *inv {
                            format!("{n}^-1")
                        } else {
                            n.clone()
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "{} >", rs.join(", "))
    }
}

impl GraphOfGroups {
    pub fn build_sg(&self) -> &SemiThueSystem {
        self.sg()
    }

    pub fn sg_rule_count_formula(&self) -> usize {
        let v: usize = self.vertices().iter().map(|v| (v.group.order() - 1).pow(2)).sum();
        let e: usize = (0..self.edges().len())
            .map(|e| self.coset_reps(e).len() * (self.edges()[e].group.order() - 1))
            .sum();
        v + e + self.edges().len()
    }

    pub fn britton_reduce(&self, w: &[Letter]) -> Result<Word, GogError> {
        Ok(self.britton_system().normal_form(w)?)
    }

    /// Embed a word over the generators into the loops at the base vertex.
    pub fn psi(&self, w: &[Letter]) -> Word {
        let mut out = Vec::new();
        for &x in w {
            match self.decode(x) {
                GogLetter::Vertex { vertex, .. } => {
                    out.extend_from_slice(self.path_from_base(vertex));
                    out.push(x);
                    out.extend(self.path_to_base(vertex));
                }
                GogLetter::Edge(e) => {
                    let edge = &self.edges()[e];
                    out.extend_from_slice(self.path_from_base(edge.source));
                    out.push(x);
                    out.extend(self.path_to_base(edge.target));
                }
            }
        }
        out
    }

    pub fn word_problem(&self, w: &[Letter]) -> Result<bool, GogError> {
        self.alphabet().check_word(w)?;
        let r = self.britton_reduce(&self.psi(w))?;
        // a path-typed loop at the base with no edge letters is a single base-group element
        Ok(r.is_empty())
    }

    pub fn normal_form(&self, w: &[Letter]) -> Result<Word, GogError> {
        self.alphabet().check_word(w)?;
        match self.sg().normalize(&self.psi(w), DEFAULT_FUEL)? {
            bs_rewrite::Outcome::Irreducible { word, .. } => Ok(word),
            bs_rewrite::Outcome::FuelExhausted { steps, .. } => Err(GogError::Rewrite(bs_rewrite::RewriteError::FuelExhausted(steps))),
        }
    }

    pub fn pi1_presentation(&self) -> Presentation {
        let generators = self.alphabet().names().to_vec();
        let mut relators = Vec::new();
        for (vi, v) in self.vertices().iter().enumerate() {
            let grp = &v.group;
            for a in 1..grp.order() {
                for b in 1..grp.order() {
                    let mut r = vec![(self.vertex_letter(vi, a).unwrap(), false), (self.vertex_letter(vi, b).unwrap(), false)];
                    if let Some(x) = self.vertex_letter(vi, grp.mul(a, b)) {
                        r.push((x, true));
                    }
                    relators.push(r);
                }
            }
        }
        for (e, edge) in self.edges().iter().enumerate() {
            let back = &self.edges()[e ^ 1];
            for a in 0..edge.group.order() {
                let mut r = vec![(self.edge_letter(e ^ 1), false)];
                if let Some(x) = self.vertex_letter(edge.source, edge.embed[a]) {
                    r.push((x, false));
                }
                r.push((self.edge_letter(e), false));
                if let Some(x) = self.vertex_letter(edge.target, back.embed[a]) {
                    r.push((x, true));
                }
                relators.push(r);
            }
        }
        for e in self.spanning_tree() {
            relators.push(vec![(self.edge_letter(e), false)]);
        }
        Presentation { generators, relators }
    }
}
