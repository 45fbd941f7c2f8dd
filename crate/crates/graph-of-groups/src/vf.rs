use std::collections::HashMap;

use crate::GogError;

/// A letter of Δ: a signed basis letter of the free part, or a non-trivial coset representative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DeltaLetter {
    Free { basis: usize, inverse: bool },
    Rep(usize),
}

/// Signed basis letter of the free part.
pub type FreeLetter = (usize, bool);

/// A virtually free group as a free part F times coset representatives R, with 1 = R[0].
#[derive(Clone, Debug)]
pub struct VfStructure {
    pub basis: Vec<String>,
    pub reps: Vec<String>,
    table: HashMap<(DeltaLetter, DeltaLetter), (Vec<FreeLetter>, usize)>,
}

pub fn free_reduce(w: &[FreeLetter]) -> Vec<FreeLetter> {
    let mut out: Vec<FreeLetter> = Vec::new();
    for &x in w {
        if out.last() == Some(&(x.0, !x.1)) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

impl VfStructure {
    pub fn new(
        basis: Vec<String>,
        reps: Vec<String>,
        table: HashMap<(DeltaLetter, DeltaLetter), (Vec<FreeLetter>, usize)>,
    ) -> Result<Self, GogError> {
        if reps.is_empty() {
            return Err(GogError::Invalid("representative set must contain 1".into()));
        }
        let vf = VfStructure { basis, reps, table };
        for a in vf.delta() {
            for b in vf.delta() {
                let Some((w, r)) = vf.table.get(&(a, b)) else {
                    return Err(GogError::Invalid(format!("missing table entry for ({}, {})", vf.name(a), vf.name(b))));
                };
                if *r >= vf.reps.len() || w.iter().any(|x| x.0 >= vf.basis.len()) {
                    return Err(GogError::Invalid(format!("entry for ({}, {}) out of range", vf.name(a), vf.name(b))));
                }
                if free_reduce(w) != *w {
                    return Err(GogError::Invalid(format!("w({}, {}) is not freely reduced", vf.name(a), vf.name(b))));
                }
            }
        }
        Ok(vf)
    }

    /// Free letters with their inverses first, then representatives other than 1.
    pub fn delta(&self) -> Vec<DeltaLetter> {
        let mut d = Vec::new();
        for b in 0..self.basis.len() {
            d.push(DeltaLetter::Free { basis: b, inverse: false });
            d.push(DeltaLetter::Free { basis: b, inverse: true });
        }
        d.extend((1..self.reps.len()).map(DeltaLetter::Rep));
        d
    }

    pub fn name(&self, a: DeltaLetter) -> String {
        match a {
            DeltaLetter::Free { basis, inverse: false } => self.basis[basis].clone(),
            DeltaLetter::Free { basis, inverse: true } => format!("{}~", self.basis[basis]),
            DeltaLetter::Rep(r) => self.reps[r].clone(),
        }
    }

    pub fn free_name(&self, x: FreeLetter) -> String {
        self.name(DeltaLetter::Free { basis: x.0, inverse: x.1 })
    }

    /// w(a, b) and r(a, b) with ab = w(a, b) r(a, b).
    pub fn entry(&self, a: DeltaLetter, b: DeltaLetter) -> (&[FreeLetter], usize) {
        let (w, r) = &self.table[&(a, b)];
        (w, *r)
    }

    /// The product r·a for r ∈ R (including 1) and a ∈ Δ.
    pub fn rep_times(&self, r: usize, a: DeltaLetter) -> (Vec<FreeLetter>, usize) {
        if r == 0 {
            return match a {
                DeltaLetter::Free { basis, inverse } => (vec![(basis, inverse)], 0),
                DeltaLetter::Rep(s) => (vec![], s),
            };
        }
        let (w, s) = self.entry(DeltaLetter::Rep(r), a);
        (w.to_vec(), s)
    }

    /// Infinite dihedral group ⟨a, b⟩ with free part ⟨t⟩, t = ab, and R = {1, a}.
    pub fn infinite_dihedral() -> Self {
        let t = DeltaLetter::Free { basis: 0, inverse: false };
        let tb = DeltaLetter::Free { basis: 0, inverse: true };
        let a = DeltaLetter::Rep(1);
        let (tp, tm) = ((0, false), (0, true));
        let mut table = HashMap::new();
        table.insert((t, t), (vec![tp, tp], 0));
        table.insert((t, tb), (vec![], 0));
        table.insert((tb, t), (vec![], 0));
        table.insert((tb, tb), (vec![tm, tm], 0));
        table.insert((t, a), (vec![tp], 1));
        table.insert((tb, a), (vec![tm], 1));
        // a t a = T and a T a = t
        table.insert((a, t), (vec![tm], 1));
        table.insert((a, tb), (vec![tp], 1));
        table.insert((a, a), (vec![], 0));
        VfStructure::new(vec!["t".into()], vec!["1".into(), "a".into()], table).expect("dihedral table")
    }

    /// A finite group as a structure with trivial free part: R is the whole group.
    pub fn finite(group: &bs_groups::FiniteGroup) -> Self {
        let mut table = HashMap::new();
        for x in 1..group.order() {
            for y in 1..group.order() {
                table.insert((DeltaLetter::Rep(x), DeltaLetter::Rep(y)), (vec![], group.mul(x, y)));
            }
        }
        VfStructure::new(vec![], group.names().to_vec(), table).expect("group table")
    }
}
