use std::fmt;
use std::sync::Arc;

use crate::alphabet::{Alphabet, Letter, Word};
use crate::strategy::Strategy;
use crate::RewriteError;

pub const DEFAULT_FUEL: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: Word,
}

impl Rule {
    pub fn new(lhs: Word, rhs: Word) -> Self {
        Rule { lhs, rhs }
    }
}

/// A rewrite site: rule `rule` matches at `position`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Redex {
    pub position: usize,
    pub rule: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub position: usize,
    pub rule: usize,
    pub result: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Irreducible { word: Word, steps: u64 },
    FuelExhausted { word: Word, steps: u64 },
}

impl Outcome {
    pub fn word(&self) -> &Word {
        match self {
            Outcome::Irreducible { word, .. } | Outcome::FuelExhausted { word, .. } => word,
        }
    }

    pub fn steps(&self) -> u64 {
        match self {
            Outcome::Irreducible { steps, .. } | Outcome::FuelExhausted { steps, .. } => *steps,
        }
    }

    pub fn irreducible(self) -> Option<Word> {
        match self {
            Outcome::Irreducible { word, .. } => Some(word),
            Outcome::FuelExhausted { .. } => None,
        }
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self, Outcome::FuelExhausted { .. })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Equivalence {
    Equivalent,
    Distinct,
    Unknown,
}

/// A finite semi-Thue system. Rule order is the tie-break order.
#[derive(Clone, Debug)]
pub struct SemiThueSystem {
    alphabet: Arc<Alphabet>,
    rules: Vec<Rule>,
    by_first: Vec<Vec<usize>>,
    max_lhs: usize,
}

impl SemiThueSystem {
    pub fn new(alphabet: Arc<Alphabet>, rules: Vec<Rule>) -> Result<Self, RewriteError> {
        let mut by_first = vec![Vec::new(); alphabet.len()];
        let mut max_lhs = 0;
        for (i, r) in rules.iter().enumerate() {
            if r.lhs.is_empty() {
                return Err(RewriteError::EmptyLhs(i));
            }
            alphabet.check_word(&r.lhs)?;
            alphabet.check_word(&r.rhs)?;
            by_first[r.lhs[0].index()].push(i);
            max_lhs = max_lhs.max(r.lhs.len());
        }
        Ok(SemiThueSystem { alphabet, rules, by_first, max_lhs })
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn is_length_reducing(&self) -> bool {
        self.rules.iter().all(|r| r.rhs.len() < r.lhs.len())
    }

    /// Keep only the rules for which `keep` holds, preserving order.
    pub fn filtered(&self, keep: impl Fn(&Rule) -> bool) -> SemiThueSystem {
        let rules = self.rules.iter().filter(|r| keep(r)).cloned().collect();
        SemiThueSystem::new(self.alphabet.clone(), rules).expect("subset of a valid system")
    }

    fn matches_at(&self, w: &[Letter], pos: usize, rule: usize) -> bool {
        let lhs = &self.rules[rule].lhs;
        pos + lhs.len() <= w.len() && w[pos..pos + lhs.len()] == lhs[..]
    }

    fn first_rule_at(&self, w: &[Letter], pos: usize) -> Option<usize> {
        self.by_first[w[pos].index()]
            .iter()
            .copied()
            .find(|&i| self.matches_at(w, pos, i))
    }

    /// Every redex of `w`, ordered by position then rule index.
    pub fn redexes(&self, w: &[Letter]) -> Vec<Redex> {
        let mut out = Vec::new();
        for pos in 0..w.len() {
            for &i in &self.by_first[w[pos].index()] {
                if self.matches_at(w, pos, i) {
                    out.push(Redex { position: pos, rule: i });
                }
            }
        }
        out
    }

    pub fn rewrite_at(&self, w: &[Letter], redex: Redex) -> Word {
        let r = &self.rules[redex.rule];
        let mut out = Vec::with_capacity(w.len() + r.rhs.len());
        out.extend_from_slice(&w[..redex.position]);
        out.extend_from_slice(&r.rhs);
        out.extend_from_slice(&w[redex.position + r.lhs.len()..]);
        out
    }

    pub fn apply_once(&self, w: &[Letter]) -> Result<Vec<Step>, RewriteError> {
        self.alphabet.check_word(w)?;
        Ok(self
            .redexes(w)
            .into_iter()
            .map(|r| Step { position: r.position, rule: r.rule, result: self.rewrite_at(w, r) })
            .collect())
    }

    pub fn is_irreducible(&self, w: &[Letter]) -> bool {
        (0..w.len()).all(|p| self.first_rule_at(w, p).is_none())
    }

    /// Leftmost redex first, lowest rule index among those.
    pub fn normalize(&self, w: &[Letter], fuel: u64) -> Result<Outcome, RewriteError> {
        self.alphabet.check_word(w)?;
        let mut cur = w.to_vec();
        let mut steps = 0u64;
        let mut start = 0usize;
        loop {
            let found = (start..cur.len()).find_map(|p| self.first_rule_at(&cur, p).map(|r| (p, r)));
            let Some((pos, rule)) = found else {
                return Ok(Outcome::Irreducible { word: cur, steps });
            };
            if steps >= fuel {
                return Ok(Outcome::FuelExhausted { word: cur, steps });
            }
            cur = self.rewrite_at(&cur, Redex { position: pos, rule });
            steps += 1;
            // nothing left of `pos` was a redex, so only the rewritten window can start one
            start = pos.saturating_sub(self.max_lhs.saturating_sub(1));
        }
    }

    /// Normal form or an error if the default fuel runs out.
    pub fn normal_form(&self, w: &[Letter]) -> Result<Word, RewriteError> {
        match self.normalize(w, DEFAULT_FUEL)? {
            Outcome::Irreducible { word, .. } => Ok(word),
            Outcome::FuelExhausted { steps, .. } => Err(RewriteError::FuelExhausted(steps)),
        }
    }

    pub fn normalize_with(
        &self,
        strategy: &mut dyn Strategy,
        w: &[Letter],
        fuel: u64,
    ) -> Result<Outcome, RewriteError> {
        self.alphabet.check_word(w)?;
        let mut cur = w.to_vec();
        let mut steps = 0u64;
        loop {
            let rs = self.redexes(&cur);
            if rs.is_empty() {
                return Ok(Outcome::Irreducible { word: cur, steps });
            }
            if steps >= fuel {
                return Ok(Outcome::FuelExhausted { word: cur, steps });
            }
            let pick = strategy.pick(&rs);
            cur = self.rewrite_at(&cur, rs[pick]);
            steps += 1;
        }
    }

    pub fn equivalent(&self, u: &[Letter], v: &[Letter], fuel: u64) -> Result<Equivalence, RewriteError> {
        let a = self.normalize(u, fuel)?;
        let b = self.normalize(v, fuel)?;
        Ok(match (a, b) {
            (Outcome::Irreducible { word: x, .. }, Outcome::Irreducible { word: y, .. }) => {
                if x == y {
                    Equivalence::Equivalent
                } else {
                    Equivalence::Distinct
                }
            }
            _ => Equivalence::Unknown,
        })
    }

    pub fn show(&self, w: &[Letter]) -> String {
        self.alphabet.display(w).to_string()
    }
}

impl fmt::Display for SemiThueSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "letters:")?;
        for n in self.alphabet.names() {
            write!(f, " {n}")?;
        }
        writeln!(f)?;
        for r in &self.rules {
            writeln!(f, "{} -> {}", self.alphabet.display(&r.lhs), self.alphabet.display(&r.rhs))?;
        }
        Ok(())
    }
}
