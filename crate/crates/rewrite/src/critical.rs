use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::alphabet::Word;
use crate::system::{Outcome, SemiThueSystem};
use crate::RewriteError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OverlapKind {
    /// a proper suffix of the first lhs is a proper prefix of the second
    Overlap,
    /// the second lhs occurs inside the first
    Contained,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPair {
    pub peak: Word,
    pub left: Word,
    pub right: Word,
    pub rules: (usize, usize),
    pub kind: OverlapKind,
    pub offset: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    LocallyConfluent,
    CounterexamplePeak { peak: Word, left: Word, right: Word },
    Unknown { fuel: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StrongVerdict {
    StronglyConfluent,
    Counterexample { peak: Word, left: Word, right: Word },
    Unknown { explored: usize },
}

impl SemiThueSystem {
    pub fn critical_pairs(&self) -> Vec<CriticalPair> {
        let rules = self.rules();
        let mut out = Vec::new();
        for (i, ri) in rules.iter().enumerate() {
            for (j, rj) in rules.iter().enumerate() {
                let (li, lj) = (&ri.lhs, &rj.lhs);
                let max_ov = li.len().min(lj.len());
                for ov in 1..max_ov {
                    if li[li.len() - ov..] != lj[..ov] {
                        continue;
                    }
                    let mut peak = li.clone();
                    peak.extend_from_slice(&lj[ov..]);
                    let mut left = ri.rhs.clone();
                    left.extend_from_slice(&lj[ov..]);
                    let mut right = li[..li.len() - ov].to_vec();
                    right.extend_from_slice(&rj.rhs);
                    out.push(CriticalPair {
                        peak,
                        left,
                        right,
                        rules: (i, j),
                        kind: OverlapKind::Overlap,
                        offset: li.len() - ov,
                    });
                }
                if i == j || lj.len() > li.len() {
                    continue;
                }
                for p in 0..=li.len() - lj.len() {
                    if li[p..p + lj.len()] != lj[..] {
                        continue;
                    }
                    let mut right = li[..p].to_vec();
                    right.extend_from_slice(&rj.rhs);
                    right.extend_from_slice(&li[p + lj.len()..]);
                    out.push(CriticalPair {
                        peak: li.clone(),
                        left: ri.rhs.clone(),
                        right,
                        rules: (i, j),
                        kind: OverlapKind::Contained,
                        offset: p,
                    });
                }
            }
        }
        out
    }

    pub fn check_local_confluence(&self, fuel: u64) -> Result<Verdict, RewriteError> {
        for cp in self.critical_pairs() {
            let a = self.normalize(&cp.left, fuel)?;
            let b = self.normalize(&cp.right, fuel)?;
            match (a, b) {
                (Outcome::Irreducible { word: x, .. }, Outcome::Irreducible { word: y, .. }) => {
                    if x != y {
                        return Ok(Verdict::CounterexamplePeak { peak: cp.peak, left: x, right: y });
                    }
                }
                _ => return Ok(Verdict::Unknown { fuel }),
            }
        }
        Ok(Verdict::LocallyConfluent)
    }

    fn one_step_closure(&self, w: &Word) -> BTreeSet<Word> {
        let mut s: BTreeSet<Word> = self.redexes(w).into_iter().map(|r| self.rewrite_at(w, r)).collect();
        s.insert(w.clone());
        s
    }

    /// Checks every critical peak y <- x -> z for a w with y ->(<=1) w and z ->(<=1) w.
    pub fn check_strong_confluence(&self) -> StrongVerdict {
        for cp in self.critical_pairs() {
            let a = self.one_step_closure(&cp.left);
            let b = self.one_step_closure(&cp.right);
            if a.is_disjoint(&b) {
                return StrongVerdict::Counterexample { peak: cp.peak, left: cp.left, right: cp.right };
            }
        }
        StrongVerdict::StronglyConfluent
    }

    /// All words reachable from `w`, or `None` past `limit` words.
    pub fn descendants(&self, w: &Word, limit: usize) -> Option<HashSet<Word>> {
        let mut seen = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w.clone());
        queue.push_back(w.clone());
        while let Some(x) = queue.pop_front() {
            for r in self.redexes(&x) {
                let y = self.rewrite_at(&x, r);
                if seen.insert(y.clone()) {
                    if seen.len() > limit {
                        return None;
                    }
                    queue.push_back(y);
                }
            }
        }
        Some(seen)
    }
}
