use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use bs_groups::FiniteGroup;
use bs_rewrite::{Alphabet, Letter, SemiThueSystem, Word};

use crate::GogError;

#[derive(Clone, Debug)]
pub struct Vertex {
    pub name: String,
    pub group: Arc<FiniteGroup>,
}

/// A directed edge. Edges come in pairs 2k (as declared) and 2k+1 (reversed).
#[derive(Clone, Debug)]
pub struct Edge {
    pub name: String,
    pub source: usize,
    pub target: usize,
    pub group: Arc<FiniteGroup>,
    /// image in the source vertex group of each edge-group element
    pub embed: Vec<usize>,
}

/// Undirected edge as written in a file: maps into both endpoints.
#[derive(Clone, Debug)]
pub struct EdgeSpec {
    pub name: String,
    pub from: usize,
    pub to: usize,
    pub group: Arc<FiniteGroup>,
    pub into_from: Vec<usize>,
    pub into_to: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GogLetter {
    Vertex { vertex: usize, element: usize },
    Edge(usize),
}

/// Coset data for one directed edge y: representatives of G_s(y) / G_y^y.
#[derive(Clone, Debug)]
pub struct Cosets {
    pub reps: Vec<usize>,
    /// for each element g of the source group: (rep c, edge-group element a) with g = c·a^y
    pub factor: Vec<(usize, usize)>,
}

#[derive(Clone, Debug)]
pub struct GraphOfGroups {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    base: usize,
    alphabet: Arc<Alphabet>,
    letter_of_vertex: Vec<Vec<Option<Letter>>>,
    letter_of_edge: Vec<Letter>,
    decode: Vec<GogLetter>,
    in_tree: Vec<bool>,
    from_base: Vec<Word>,
    cosets: Vec<Cosets>,
    embed_inv: Vec<HashMap<usize, usize>>,
    sg: SemiThueSystem,
    britton: SemiThueSystem,
}

impl GraphOfGroups {
    pub fn new(vertices: Vec<Vertex>, specs: Vec<EdgeSpec>, base: usize) -> Result<Self, GogError> {
        if vertices.is_empty() {
            return Err(GogError::Invalid("no vertices".into()));
        }
        if base >= vertices.len() {
            return Err(GogError::Invalid("base vertex out of range".into()));
        }
        let mut edges = Vec::new();
        for s in &specs {
            for (v, m) in [(s.from, &s.into_from), (s.to, &s.into_to)] {
                let g = &vertices.get(v).ok_or_else(|| GogError::Invalid(format!("edge {}: bad endpoint", s.name)))?.group;
                if m.len() != s.group.order() || !s.group.is_homomorphism_into(g, m) {
                    return Err(GogError::NotHomomorphism(s.name.clone()));
                }
                let mut sorted = m.clone();
                sorted.sort_unstable();
                sorted.dedup();
                if sorted.len() != m.len() {
                    return Err(GogError::NotInjective(s.name.clone()));
                }
            }
            edges.push(Edge {
                name: s.name.clone(),
                source: s.from,
                target: s.to,
                group: s.group.clone(),
                embed: s.into_from.clone(),
            });
            edges.push(Edge {
                name: format!("{}~", s.name),
                source: s.to,
                target: s.from,
                group: s.group.clone(),
                embed: s.into_to.clone(),
            });
        }

        let n = vertices.len();
        // breadth-first spanning tree from the base, edges in declaration order
        let mut parent_edge: Vec<Option<usize>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut in_tree = vec![false; edges.len()];
        seen[base] = true;
        let mut queue = VecDeque::from([base]);
        let mut order = vec![base];
        while let Some(v) = queue.pop_front() {
            for (i, e) in edges.iter().enumerate() {
                if e.source == v && !seen[e.target] {
                    seen[e.target] = true;
                    parent_edge[e.target] = Some(i);
                    in_tree[i] = true;
                    in_tree[i ^ 1] = true;
                    queue.push_back(e.target);
                    order.push(e.target);
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(GogError::Disconnected(vertices[v].name.clone()));
        }

        let mut names = Vec::new();
        let mut decode = Vec::new();
        let mut count: HashMap<&str, usize> = HashMap::new();
        for v in &vertices {
            for g in 1..v.group.order() {
                *count.entry(v.group.name(g)).or_default() += 1;
            }
        }
        for e in &edges {
            *count.entry(e.name.as_str()).or_default() += 1;
        }
        let mut letter_of_vertex = Vec::new();
        for (vi, v) in vertices.iter().enumerate() {
            let mut row = vec![None];
            for g in 1..v.group.order() {
                let nm = v.group.name(g);
                let shown = if count[nm] == 1 { nm.to_string() } else { format!("{nm}@{}", v.name) };
                row.push(Some(Letter(names.len() as u32)));
                names.push(shown);
                decode.push(GogLetter::Vertex { vertex: vi, element: g });
            }
            letter_of_vertex.push(row);
        }
        let mut letter_of_edge = Vec::new();
        for (i, e) in edges.iter().enumerate() {
            letter_of_edge.push(Letter(names.len() as u32));
            names.push(e.name.clone());
            decode.push(GogLetter::Edge(i));
        }
        let alphabet = Arc::new(Alphabet::new(&names).map_err(|e| GogError::Invalid(e.to_string()))?);

        let mut from_base = vec![Vec::new(); n];
        for &v in order.iter().skip(1) {
            let pe = parent_edge[v].unwrap();
            let mut w = from_base[edges[pe].source].clone();
            w.push(letter_of_edge[pe]);
            from_base[v] = w;
        }

        let mut cosets = Vec::new();
        let mut embed_inv = Vec::new();
        for e in &edges {
            let g = &vertices[e.source].group;
            let inv: HashMap<usize, usize> = e.embed.iter().enumerate().map(|(a, &x)| (x, a)).collect();
            let mut reps = Vec::new();
            let mut factor = vec![(usize::MAX, usize::MAX); g.order()];
            for x in g.elements() {
                if factor[x].0 != usize::MAX {
                    continue;
                }
                reps.push(x);
                for (a, &h) in e.embed.iter().enumerate() {
                    factor[g.mul(x, h)] = (x, a);
                }
            }
            cosets.push(Cosets { reps, factor });
            embed_inv.push(inv);
        }

        let mut gog = GraphOfGroups {
            vertices,
            edges,
            base,
            alphabet: alphabet.clone(),
            letter_of_vertex,
            letter_of_edge,
            decode,
            in_tree,
            from_base,
            cosets,
            embed_inv,
            sg: SemiThueSystem::new(alphabet.clone(), vec![]).unwrap(),
            britton: SemiThueSystem::new(alphabet, vec![]).unwrap(),
        };
        gog.sg = crate::words::build_sg_rules(&gog);
        gog.britton = crate::words::build_britton_rules(&gog);
        Ok(gog)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn inverse_edge(&self, e: usize) -> usize {
        e ^ 1
    }

    pub fn vertex_letter(&self, vertex: usize, element: usize) -> Option<Letter> {
        self.letter_of_vertex[vertex][element]
    }

    pub fn edge_letter(&self, e: usize) -> Letter {
        self.letter_of_edge[e]
    }

    pub fn decode(&self, x: Letter) -> GogLetter {
        self.decode[x.index()]
    }

    pub fn is_edge_letter(&self, x: Letter) -> bool {
        matches!(self.decode(x), GogLetter::Edge(_))
    }

    /// Directed edges of the spanning tree, in index order.
    pub fn spanning_tree(&self) -> Vec<usize> {
        (0..self.edges.len()).filter(|&e| self.in_tree[e]).collect()
    }

    pub fn in_tree(&self, e: usize) -> bool {
        self.in_tree[e]
    }

    /// Edge word of the tree geodesic from the base to `v`.
    pub fn path_from_base(&self, v: usize) -> &Word {
        &self.from_base[v]
    }

    pub fn path_to_base(&self, v: usize) -> Word {
        self.from_base[v].iter().rev().map(|&x| self.letter_of_edge[self.edge_of(x) ^ 1]).collect()
    }

    /// Tree geodesic from `p` to `q`.
    pub fn tree_path(&self, p: usize, q: usize) -> Word {
        let (a, b) = (&self.from_base[p], &self.from_base[q]);
        let common = a.iter().zip(b.iter()).take_while(|(x, y)| x == y).count();
        let mut w: Word = a[common..].iter().rev().map(|&x| self.letter_of_edge[self.edge_of(x) ^ 1]).collect();
        w.extend_from_slice(&b[common..]);
        w
    }

    pub(crate) fn edge_of(&self, x: Letter) -> usize {
        match self.decode(x) {
            GogLetter::Edge(e) => e,
            GogLetter::Vertex { .. } => panic!("not an edge letter"),
        }
    }

    pub fn coset_reps(&self, e: usize) -> &[usize] {
        &self.cosets[e].reps
    }

    pub fn cosets(&self, e: usize) -> &Cosets {
        &self.cosets[e]
    }

    /// The edge-group element a with a^y = g, if g lies in the image.
    pub fn preimage(&self, e: usize, g: usize) -> Option<usize> {
        self.embed_inv[e].get(&g).copied()
    }

    pub fn sg(&self) -> &SemiThueSystem {
        &self.sg
    }

    pub fn britton_system(&self) -> &SemiThueSystem {
        &self.britton
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.name == name)
    }

    /// Parse a word of letter names; `elem@vertex` is accepted for any vertex letter.
    pub fn parse_word(&self, text: &str) -> Result<Word, GogError> {
        let mut w = Vec::new();
        for tok in text.split_whitespace() {
            if tok == "_" {
                continue;
            }
            if let Some(x) = self.alphabet.letter(tok) {
                w.push(x);
                continue;
            }
            let found = tok.split_once('@').and_then(|(el, v)| {
                let vi = self.vertex_index(v)?;
                let g = self.vertices[vi].group.element(el)?;
                self.vertex_letter(vi, g)
            });
            match found {
                Some(x) => w.push(x),
                None => return Err(GogError::UnknownLetter(tok.to_string())),
            }
        }
        Ok(w)
    }

    pub fn show(&self, w: &[Letter]) -> String {
        self.alphabet.display(w).to_string()
    }

    /// End vertex if `w` is a path-typed word starting at `start`.
    pub fn path_end(&self, start: usize, w: &[Letter]) -> Option<usize> {
        let mut at = start;
        for &x in w {
            match self.decode(x) {
                GogLetter::Vertex { vertex, .. } => {
                    if vertex != at {
                        return None;
                    }
                }
                GogLetter::Edge(e) => {
                    if self.edges[e].source != at {
                        return None;
                    }
                    at = self.edges[e].target;
                }
            }
        }
        Some(at)
    }

    pub fn y_sequence(&self, w: &[Letter]) -> Vec<usize> {
        w.iter()
            .filter_map(|&x| match self.decode(x) {
                GogLetter::Edge(e) => Some(e),
                _ => None,
            })
            .collect()
    }
}
