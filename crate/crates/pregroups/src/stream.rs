use std::collections::VecDeque;

use bs_rewrite::{Letter, Word};

use crate::pregroup::Pregroup;
use crate::sp::universal_wp;

/// For each letter a, a shortest word w_a with a·w_a trivial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowBound {
    pub witnesses: Vec<Word>,
    pub bound: usize,
}

impl WindowBound {
    /// Steps one pushed letter may trigger: the stack shrinks by at most
    /// `bound`, and every step removes one letter from `ua`.
    pub fn cascade_limit(&self) -> usize {
        self.bound + 1
    }
}

/// Breadth-first search over right factors, shortest first.
pub fn window_bound(p: &Pregroup) -> WindowBound {
    let n = p.len();
    let mut witnesses = Vec::with_capacity(n);
    for a in 0..n {
        let start = vec![Letter(a as u32)];
        let mut queue: VecDeque<Word> = VecDeque::from([Vec::new()]);
        let found = loop {
            let v = queue.pop_front().expect("the inverse always works");
            let mut w = start.clone();
            w.extend_from_slice(&v);
            if universal_wp(p, &w) {
                break v;
            }
            for x in 0..n {
                let mut next = v.clone();
                next.push(Letter(x as u32));
                queue.push_back(next);
            }
        };
        witnesses.push(found);
    }
    let bound = witnesses.iter().map(Vec::len).max().unwrap_or(0);
    WindowBound { witnesses, bound }
}

/// Keeps a geodesic on a stack; each fed letter triggers a bounded cascade
/// of length-reducing steps at the top.
#[derive(Debug)]
pub struct StreamingReducer<'a> {
    p: &'a Pregroup,
    stack: Vec<usize>,
    limit: usize,
    longest: usize,
}

impl<'a> StreamingReducer<'a> {
    pub fn new(p: &'a Pregroup) -> Self {
        Self::with_bound(p, &window_bound(p))
    }

    pub fn with_bound(p: &'a Pregroup, wb: &WindowBound) -> Self {
        StreamingReducer { p, stack: Vec::new(), limit: wb.cascade_limit(), longest: 0 }
    }

    pub fn feed(&mut self, x: Letter) {
        self.stack.push(x.index());
        let mut steps = 0;
        loop {
            let k = self.stack.len();
            if k > 0 && self.stack[k - 1] == self.p.one() {
                self.stack.pop();
            } else if k >= 2 {
                match self.p.mul(self.stack[k - 2], self.stack[k - 1]) {
                    Some(z) => {
                        self.stack.truncate(k - 2);
                        self.stack.push(z);
                    }
                    None => break,
                }
            } else {
                break;
            }
            steps += 1;
        }
        assert!(steps <= self.limit, "cascade of {steps} steps exceeds the window of {}", self.limit);
        self.longest = self.longest.max(steps);
    }

    pub fn stack(&self) -> Word {
        self.stack.iter().map(|&i| Letter(i as u32)).collect()
    }

    /// Longest cascade seen so far.
    pub fn longest_cascade(&self) -> usize {
        self.longest
    }

    pub fn finish(self) -> Word {
        self.stack()
    }
}
