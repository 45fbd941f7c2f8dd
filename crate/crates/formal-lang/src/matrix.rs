use std::fmt;

use crate::nfa::Nfa;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoolMatrix {
    n: usize,
    rows: Vec<Vec<bool>>,
}

impl BoolMatrix {
    pub fn zero(n: usize) -> Self {
        BoolMatrix { n, rows: vec![vec![false; n]; n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BoolMatrix::zero(n);
        for i in 0..n {
            m.rows[i][i] = true;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<u8>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "square matrix required");
        BoolMatrix { n, rows: rows.into_iter().map(|r| r.into_iter().map(|x| x != 0).collect()).collect() }
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        self.rows[i][j] = v;
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn mul(&self, other: &BoolMatrix) -> BoolMatrix {
        let mut out = BoolMatrix::zero(self.n);
        for i in 0..self.n {
            for k in 0..self.n {
                if self.rows[i][k] {
                    for j in 0..self.n {
                        if other.rows[k][j] {
                            out.rows[i][j] = true;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        self.rows.iter().map(|r| r.iter().map(|&b| b as u8).collect()).collect()
    }
}

impl fmt::Display for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let s: String = r.iter().map(|&b| if b { '1' } else { '0' }).collect();
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

/// The transition monoid of an automaton: one Boolean matrix per letter.
#[derive(Clone, Debug)]
pub struct BoolMatrixMonoid {
    pub dim: usize,
    pub letters: Vec<BoolMatrix>,
}

impl BoolMatrixMonoid {
    pub fn word(&self, w: &[usize]) -> BoolMatrix {
        w.iter().fold(BoolMatrix::identity(self.dim), |m, &a| m.mul(&self.letters[a]))
    }
}

pub fn nfa_to_matrices(n: &Nfa) -> BoolMatrixMonoid {
    let dim = n.num_states();
    let mut letters = vec![BoolMatrix::zero(dim); n.alphabet.len()];
    for &(p, a, q) in &n.transitions {
        letters[a].set(p, q, true);
    }
    BoolMatrixMonoid { dim, letters }
}

pub fn matrix_accepts(m: &BoolMatrixMonoid, initial: &[usize], finals: &[usize], w: &[usize]) -> bool {
    let mw = m.word(w);
    initial.iter().any(|&i| finals.iter().any(|&j| mw.get(i, j)))
}
