use bs_groups::{closure_order, conjugator, free_action, GroupAction, Permutation};
use bs_rewrite::Letter;

use crate::graph::{GogLetter, GraphOfGroups};
use crate::GogError;

/// A homomorphism into Sym(X) that is injective on every vertex group.
#[derive(Clone, Debug)]
pub struct SymHomomorphism {
    pub degree: usize,
    pub vertex_actions: Vec<GroupAction>,
    /// images of all letters on the level of the free product with edge letters
    pub letter_images: Vec<Permutation>,
    /// images of all letters after the embedding into loops at the base
    pub pi1_images: Vec<Permutation>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FreeSubgroupData {
    pub degree: usize,
    pub index: usize,
    pub rank: u64,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl SymHomomorphism {
    pub fn word_image(&self, w: &[Letter]) -> Permutation {
        w.iter().fold(Permutation::identity(self.degree), |acc, x| acc.compose(&self.letter_images[x.index()]))
    }

    pub fn relator_image(&self, r: &[(Letter, bool)], pi1: bool) -> Permutation {
        let imgs = if pi1 { &self.pi1_images } else { &self.letter_images };
        r.iter().fold(Permutation::identity(self.degree), |acc, (x, inv)| {
            let p = &imgs[x.index()];
            if *inv {
                acc.compose(&p.inverse())
            } else {
                acc.compose(p)
            }
        })
    }
}

impl GraphOfGroups {
    pub fn sym_homomorphism(&self) -> Result<SymHomomorphism, GogError> {
        let degree = self.vertices().iter().fold(1u64, |m, v| lcm(m, v.group.order() as u64)) as usize;
        let mut vertex_actions = Vec::new();
        for v in self.vertices() {
            vertex_actions.push(free_action(v.group.clone(), degree)?);
        }
        let mut edge_images = vec![Permutation::identity(degree); self.edges().len()];
        for e in (0..self.edges().len()).step_by(2) {
            let (y, yb) = (&self.edges()[e], &self.edges()[e + 1]);
            let from = vertex_actions[y.source].pullback(y.group.clone(), &y.embed)?;
            let to = vertex_actions[y.target].pullback(y.group.clone(), &yb.embed)?;
            let phi = conjugator(&from, &to)?;
            edge_images[e] = phi.inverse();
            edge_images[e + 1] = phi;
        }
        let letter_images: Vec<Permutation> = self
            .alphabet()
            .letters()
            .map(|x| match self.decode(x) {
                GogLetter::Vertex { vertex, element } => vertex_actions[vertex].image(element).clone(),
                GogLetter::Edge(e) => edge_images[e].clone(),
            })
            .collect();
        let mut h = SymHomomorphism { degree, vertex_actions, letter_images, pi1_images: Vec::new() };
        h.pi1_images = self.alphabet().letters().map(|x| h.word_image(&self.psi(&[x]))).collect();

        let pres = self.pi1_presentation();
        for r in &pres.relators {
            if !h.relator_image(r, true).is_identity() {
                return Err(GogError::Homomorphism(format!("relator {r:?} is not killed")));
            }
        }
        // relations of the free product with edge letters, before killing the tree
        for (e, edge) in self.edges().iter().enumerate() {
            let back = &self.edges()[e ^ 1];
            for a in 0..edge.group.order() {
                let lhs = h.letter_images[self.edge_letter(e ^ 1).index()]
                    .compose(h.vertex_actions[edge.source].image(edge.embed[a]))
                    .compose(&h.letter_images[self.edge_letter(e).index()]);
                if lhs != *h.vertex_actions[edge.target].image(back.embed[a]) {
                    return Err(GogError::Homomorphism(format!("edge relation fails on {}", edge.name)));
                }
            }
        }
        Ok(h)
    }

    pub fn free_subgroup_data(&self) -> Result<FreeSubgroupData, GogError> {
        let h = self.sym_homomorphism()?;
        let index = closure_order(&h.pi1_images, h.degree);
        // r - 1 = N * (sum over directed edges of 1/(2|G_y|) - sum over vertices of 1/|G_P|)
        let mut den = 1u64;
        for e in self.edges() {
            den = lcm(den, 2 * e.group.order() as u64);
        }
        for v in self.vertices() {
            den = lcm(den, v.group.order() as u64);
        }
        let mut num: i128 = 0;
        for e in self.edges() {
            num += (den / (2 * e.group.order() as u64)) as i128;
        }
        for v in self.vertices() {
            num -= (den / v.group.order() as u64) as i128;
        }
        let total = num * index as i128;
        if total % den as i128 != 0 {
            return Err(GogError::Formula(format!("rank is not an integer: 1 + {total}/{den}")));
        }
        let rank = 1 + total / den as i128;
        if rank < 0 {
            return Err(GogError::Formula(format!("negative rank {rank}")));
        }
        Ok(FreeSubgroupData { degree: h.degree, index, rank: rank as u64 })
    }
}
