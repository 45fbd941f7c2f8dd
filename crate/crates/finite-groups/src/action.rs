use std::sync::Arc;

use crate::group::FiniteGroup;
use crate::perm::Permutation;
use crate::GroupError;

/// A group action given by one permutation per group element.
#[derive(Clone, Debug)]
pub struct GroupAction {
    group: Arc<FiniteGroup>,
    degree: usize,
    images: Vec<Permutation>,
}

impl GroupAction {
    pub fn new(group: Arc<FiniteGroup>, images: Vec<Permutation>) -> Result<Self, GroupError> {
        if images.len() != group.order() {
            return Err(GroupError::Action("one permutation per element required".into()));
        }
        let degree = images.first().map(|p| p.degree()).unwrap_or(0);
        if images.iter().any(|p| p.degree() != degree) {
            return Err(GroupError::Action("mixed degrees".into()));
        }
        for g in group.elements() {
            for h in group.elements() {
                if images[group.mul(g, h)] != images[g].compose(&images[h]) {
                    return Err(GroupError::Action(format!("not a homomorphism at ({g},{h})")));
                }
            }
        }
        Ok(GroupAction { group, degree, images })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn image(&self, g: usize) -> &Permutation {
        &self.images[g]
    }

    pub fn is_free(&self) -> bool {
        self.group.elements().skip(1).all(|g| self.images[g].fixed_points() == 0)
    }

    /// Restrict along an injective homomorphism `emb` from `sub` into this group.
    pub fn pullback(&self, sub: Arc<FiniteGroup>, emb: &[usize]) -> Result<GroupAction, GroupError> {
        let images = sub.elements().map(|a| self.images[emb[a]].clone()).collect();
        GroupAction::new(sub, images)
    }
}

/// Left-regular action on m/|G| blocks; point b·|G| + h is moved to b·|G| + gh.
pub fn free_action(g: Arc<FiniteGroup>, m: usize) -> Result<GroupAction, GroupError> {
    let n = g.order();
    if m % n != 0 {
        return Err(GroupError::Action(format!("|G| = {n} does not divide {m}")));
    }
    let images = g
        .elements()
        .map(|x| {
            let img = (0..m).map(|p| (p / n) * n + g.mul(x, p % n)).collect();
            Permutation::from_images(img).unwrap()
        })
        .collect();
    GroupAction::new(g, images)
}

fn orbit_reps(a: &GroupAction) -> Vec<usize> {
    let mut covered = vec![false; a.degree];
    let mut reps = Vec::new();
    for x in 0..a.degree {
        if covered[x] {
            continue;
        }
        reps.push(x);
        for g in a.group.elements() {
            covered[a.images[g].apply(x)] = true;
        }
    }
    reps
}

/// A permutation φ with α(g) = φ⁻¹ ∘ β(g) ∘ φ for every g.
pub fn conjugator(alpha: &GroupAction, beta: &GroupAction) -> Result<Permutation, GroupError> {
    if alpha.group != beta.group && *alpha.group != *beta.group {
        return Err(GroupError::Action("actions of different groups".into()));
    }
    if alpha.degree != beta.degree {
        return Err(GroupError::Action("actions of different degrees".into()));
    }
    if !alpha.is_free() || !beta.is_free() {
        return Err(GroupError::Action("conjugator needs free actions".into()));
    }
    let (ra, rb) = (orbit_reps(alpha), orbit_reps(beta));
    debug_assert_eq!(ra.len(), rb.len());
    let mut phi = vec![usize::MAX; alpha.degree];
    for (&r, &s) in ra.iter().zip(&rb) {
        for g in alpha.group.elements() {
            phi[alpha.images[g].apply(r)] = beta.images[g].apply(s);
        }
    }
    let phi = Permutation::from_images(phi).ok_or_else(|| GroupError::Action("orbit matching failed".into()))?;
    let phi_inv = phi.inverse();
    for g in alpha.group.elements() {
        if alpha.images[g] != phi_inv.compose(&beta.images[g]).compose(&phi) {
            return Err(GroupError::Action(format!("conjugation identity fails at element {g}")));
        }
    }
    Ok(phi)
}
