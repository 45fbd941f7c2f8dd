use std::collections::HashSet;
use std::sync::Arc;

use bs_gog::{GogLetter, GraphOfGroups};
use bs_rewrite::{Letter, Word};

use crate::chordal::is_chordal;
use crate::graph::{cayley_ball, SimpleGraph};
use crate::oracle::{invert_gog_word, GogOracle, Key};
use crate::CayleyError;

#[derive(Clone, Debug)]
pub struct ChordalExtension {
    /// the input generators followed by the added ones
    pub generators: Vec<Word>,
    pub added: Vec<Word>,
    /// whether the bags had to be widened to their 1-neighbourhoods
    pub widened: bool,
    pub ball: SimpleGraph,
}

/// Merge neighbouring letters of one vertex group and cancel y ȳ.
fn tidy(g: &GraphOfGroups, w: &[Letter]) -> Word {
    let mut out: Word = Vec::new();
    for &x in w {
        let mut x = Some(x);
        while let (Some(cur), Some(&top)) = (x, out.last()) {
            match (g.decode(top), g.decode(cur)) {
                (GogLetter::Vertex { vertex: p, element: a }, GogLetter::Vertex { vertex: q, element: b }) if p == q => {
                    out.pop();
                    x = g.vertex_letter(p, g.vertices()[p].group.mul(a, b));
                }
                (GogLetter::Edge(e), GogLetter::Edge(f)) if e ^ 1 == f => {
                    out.pop();
                    x = None;
                }
                _ => break,
            }
        }
        out.extend(x);
    }
    out
}

/// One bag per orbit type of the standard decomposition, as words whose
/// tree edges vanish in the fundamental group: the vertex group G_P, and
/// G_y^y ∪ G_y^y y for every edge y.
fn orbit_bags(g: &GraphOfGroups) -> Vec<Vec<Word>> {
    let mut out = Vec::new();
    for (p, v) in g.vertices().iter().enumerate() {
        out.push(v.group.elements().map(|el| g.vertex_letter(p, el).into_iter().collect()).collect());
    }
    for (e, edge) in g.edges().iter().enumerate() {
        let mut bag: Vec<Word> = Vec::new();
        for &img in &edge.embed {
            let a: Word = g.vertex_letter(edge.source, img).into_iter().collect();
            let mut ay = a.clone();
            ay.push(g.edge_letter(e));
            bag.push(a);
            bag.push(ay);
        }
        out.push(bag);
    }
    out
}

/// Add generators until every bag of the standard tree decomposition is a
/// clique of the Cayley graph; then the Cayley graph is chordal. If some
/// given generator joins no two members of a bag translate, bags are first
/// widened by one step along the given generators, which puts every
/// Cayley edge into a bag.
pub fn extend_generators_for_chordality(
    gog: Arc<GraphOfGroups>,
    generators: &[Word],
    radius: usize,
) -> Result<ChordalExtension, CayleyError> {
    let base = GogOracle::new(gog.clone(), generators.to_vec())?;
    let key = |w: &[Letter]| base.key_of(w);
    let mut bags = orbit_bags(&gog);

    let quotients = |bags: &[Vec<Word>]| -> Vec<(Key, Word)> {
        let mut out = Vec::new();
        for bag in bags {
            for x in bag {
                for y in bag {
                    let mut q = invert_gog_word(&gog, x);
                    q.extend_from_slice(y);
                    let q = tidy(&gog, &q);
                    out.push((key(&q), q));
                }
            }
        }
        out
    };
    let gen_keys: Vec<Key> = generators.iter().map(|w| key(w)).collect();
    let covered: HashSet<Key> = quotients(&bags).into_iter().map(|q| q.0).collect();
    let widened = gen_keys.iter().any(|k| !k.is_empty() && !covered.contains(k));
    if widened {
        let steps: Vec<Word> = generators.iter().flat_map(|s| [s.clone(), invert_gog_word(&gog, s)]).collect();
        for bag in &mut bags {
            let mut grown = bag.clone();
            for x in bag.iter() {
                for s in &steps {
                    let mut w = x.clone();
                    w.extend_from_slice(s);
                    grown.push(tidy(&gog, &w));
                }
            }
            *bag = grown;
        }
    }

    let mut seen: HashSet<Key> = gen_keys.iter().cloned().collect();
    seen.insert(Vec::new());
    let mut added = Vec::new();
    let mut qs = quotients(&bags);
    qs.sort_by(|a, b| (a.1.len(), &a.1).cmp(&(b.1.len(), &b.1)));
    for (k, w) in qs {
        if seen.insert(k) {
            added.push(w);
        }
    }
    let mut all = generators.to_vec();
    all.extend(added.iter().cloned());
    let oracle = GogOracle::new(gog, all.clone())?;
    let ball = cayley_ball(&oracle, radius);
    let (inner, _) = ball.induced(&ball.interior());
    if !is_chordal(&inner) {
        return Err(CayleyError::NotChordal);
    }
    Ok(ChordalExtension { generators: all, added, widened, ball })
}
