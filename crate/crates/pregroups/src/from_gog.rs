use std::collections::HashMap;

use bs_gog::{GogLetter, GraphOfGroups};
use bs_rewrite::{Letter, Word};

use crate::pregroup::{check_pregroup, Pregroup, PregroupTable};
use crate::PregroupError;

/// The pregroup of loops at the base that leave the spanning tree at most
/// once, with each element stored as its normal form.
#[derive(Clone, Debug)]
pub struct GogPregroup {
    pub pregroup: Pregroup,
    /// normal form of each carrier element, a loop at the base vertex
    pub words: Vec<Word>,
    index: HashMap<Word, usize>,
}

impl GogPregroup {
    /// The element represented by a loop at the base, if it lies in the carrier.
    pub fn element(&self, g: &GraphOfGroups, w: &[Letter]) -> Result<Option<usize>, PregroupError> {
        Ok(self.index.get(&g.sg().normal_form(w)?).copied())
    }

    /// A carrier word read back as a word over the graph-of-groups letters.
    pub fn embed(&self, w: &[Letter]) -> Word {
        w.iter().flat_map(|x| self.words[x.index()].iter().copied()).collect()
    }

    /// Image of a single generator: g at P becomes T[P0,P] g T[P,P0], an edge
    /// y becomes T[P0,s(y)] y T[t(y),P0].
    pub fn phi(&self, g: &GraphOfGroups, x: Letter) -> Result<usize, PregroupError> {
        let w = conjugated_letter(g, x);
        self.element(g, &w)?
            .ok_or_else(|| PregroupError::Construction(format!("image of `{}` is not in the carrier", g.alphabet().name(x))))
    }

    /// A word over the generators rewritten letter by letter into the carrier.
    pub fn phi_word(&self, g: &GraphOfGroups, w: &[Letter]) -> Result<Word, PregroupError> {
        w.iter().map(|&x| self.phi(g, x).map(|i| Letter(i as u32))).collect()
    }
}

fn conjugated_letter(g: &GraphOfGroups, x: Letter) -> Word {
    let (from, to) = match g.decode(x) {
        GogLetter::Vertex { vertex, .. } => (vertex, vertex),
        GogLetter::Edge(e) => (g.edges()[e].source, g.edges()[e].target),
    };
    let mut w = g.path_from_base(from).clone();
    w.push(x);
    w.extend(g.path_to_base(to));
    w
}

fn edges_of(g: &GraphOfGroups, w: &[Letter]) -> Vec<usize> {
    g.y_sequence(w)
}

/// Edge sequences T[P0,s(y)] y T[t(y),P0] for y outside the tree, and
/// T[P0,Q] T[Q,P0] (the empty middle edge) for every vertex Q.
pub fn carrier_paths(g: &GraphOfGroups) -> Vec<Vec<usize>> {
    let base = g.base();
    let mut out = Vec::new();
    for q in 0..g.vertices().len() {
        let mut p = edges_of(g, g.path_from_base(q));
        p.extend(edges_of(g, &g.path_to_base(q)));
        out.push(p);
    }
    for (e, edge) in g.edges().iter().enumerate() {
        if g.in_tree(e) {
            continue;
        }
        let mut p = edges_of(g, &g.tree_path(base, edge.source));
        p.push(e);
        p.extend(edges_of(g, &g.tree_path(edge.target, base)));
        out.push(p);
    }
    out
}

/// Every word g0 y1 g1 ... ys gs along `path`, vertex elements ranging over
/// whole groups.
fn words_along(g: &GraphOfGroups, path: &[usize]) -> Vec<Word> {
    let mut vertices = vec![g.base()];
    for &e in path {
        vertices.push(g.edges()[e].target);
    }
    let mut out: Vec<Word> = vec![Vec::new()];
    for (i, &v) in vertices.iter().enumerate() {
        let order = g.vertices()[v].group.order();
        let mut next = Vec::with_capacity(out.len() * order);
        for w in &out {
            for el in 0..order {
                let mut x = w.clone();
                x.extend(g.vertex_letter(v, el));
                if i < path.len() {
                    x.push(g.edge_letter(path[i]));
                }
                next.push(x);
            }
        }
        out = next;
    }
    out
}

fn invert(g: &GraphOfGroups, w: &[Letter]) -> Word {
    w.iter()
        .rev()
        .map(|&x| match g.decode(x) {
            GogLetter::Vertex { vertex, element } => {
                let grp = &g.vertices()[vertex].group;
                g.vertex_letter(vertex, grp.inv(element)).expect("non-identity element")
            }
            GogLetter::Edge(e) => g.edge_letter(e ^ 1),
        })
        .collect()
}

/// Shape test on a Britton-reduced loop at the base: its edge sequence must
/// run out along the tree, use at most one edge outside the tree, and run
/// back along the tree.
pub fn in_carrier_shape(g: &GraphOfGroups, reduced: &[Letter]) -> bool {
    let ys = g.y_sequence(reduced);
    let base = g.base();
    let tree = |p: usize, q: usize| edges_of(g, &g.tree_path(p, q));
    let end = |k: usize| if k == 0 { base } else { g.edges()[ys[k - 1]].target };
    for k in 0..=ys.len() {
        let q = end(k);
        // empty middle edge: the turning point is a vertex
        if ys[..k] == tree(base, q)[..] && ys[k..] == tree(q, base)[..] {
            return true;
        }
        if k < ys.len() {
            let y = ys[k];
            let edge = &g.edges()[y];
            if !g.in_tree(y) && ys[..k] == tree(base, edge.source)[..] && ys[k + 1..] == tree(edge.target, base)[..] {
                return true;
            }
        }
    }
    false
}

fn element_name(g: &GraphOfGroups, w: &[Letter]) -> String {
    if w.is_empty() {
        "1".into()
    } else {
        w.iter().map(|&x| g.alphabet().name(x)).collect::<Vec<_>>().join(".")
    }
}

/// Build the pregroup of a finite graph of finite groups. The product is
/// defined when the normal form of the product is again in the carrier;
/// the shape test on the Britton-reduced product must agree, and the
/// axioms are re-verified.
pub fn pregroup_from_gog(g: &GraphOfGroups) -> Result<GogPregroup, PregroupError> {
    let sg = g.sg();
    let mut forms: Vec<Word> = Vec::new();
    for path in carrier_paths(g) {
        for w in words_along(g, &path) {
            forms.push(sg.normal_form(&w)?);
        }
    }
    forms.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    forms.dedup();
    let index: HashMap<Word, usize> = forms.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let n = forms.len();
    let lookup = |w: &[Letter]| -> Result<Option<usize>, PregroupError> { Ok(index.get(&sg.normal_form(w)?).copied()) };

    let mut inverse = Vec::with_capacity(n);
    for w in &forms {
        let i = lookup(&invert(g, w))?.ok_or_else(|| PregroupError::Construction(format!("inverse of {} is not in the carrier", g.show(w))))?;
        inverse.push(i);
    }
    let mut table = vec![vec![None; n]; n];
    for (x, u) in forms.iter().enumerate() {
        for (y, v) in forms.iter().enumerate() {
            let mut uv = u.clone();
            uv.extend_from_slice(v);
            let product = lookup(&uv)?;
            let shape = in_carrier_shape(g, &g.britton_reduce(&uv)?);
            if product.is_some() != shape {
                return Err(PregroupError::Construction(format!(
                    "membership of {} · {} disagrees between normal forms and path shape",
                    g.show(u),
                    g.show(v)
                )));
            }
            table[x][y] = product;
        }
    }
    let names = forms.iter().map(|w| element_name(g, w)).collect();
    let one = index.get(&Vec::new()).copied().expect("the empty loop is in the carrier");
    let pregroup = check_pregroup(PregroupTable { names, one, inverse, table })
        .map_err(|v| PregroupError::Construction(format!("constructed table is not a pregroup: {v}")))?;
    Ok(GogPregroup { pregroup, words: forms, index })
}
