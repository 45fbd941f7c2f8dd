use std::collections::{BTreeSet, VecDeque};
use std::sync::Arc;

use bs_gog::{parse_gog, GraphOfGroups};
use bs_groups::FiniteGroup;
use bs_pregroup::{geodesic_reduce, parse_pregroup, Pregroup};
use bs_rewrite::{Letter, Word};

use crate::CayleyError;

/// Canonical key of a group element, as produced by a backend.
pub type Key = Vec<u32>;

/// Right multiplication by generators on canonical keys.
pub trait GroupOracle {
    fn backend(&self) -> &'static str;
    fn generator_names(&self) -> Vec<String>;
    fn identity(&self) -> Key;
    /// `g · s` or `g · s⁻¹` for generator `s`.
    fn step(&self, g: &Key, generator: usize, inverse: bool) -> Key;
    fn describe(&self, g: &Key) -> String;

    /// Follow a word of (generator, inverted) pairs from `g`.
    fn walk(&self, g: &Key, word: &[(usize, bool)]) -> Key {
        word.iter().fold(g.clone(), |acc, &(s, inv)| self.step(&acc, s, inv))
    }

    /// Parse a word over generator names; `name^-1` and `name~` (when no
    /// generator carries that name) denote inverses.
    fn parse_generator_word(&self, text: &str) -> Result<Vec<(usize, bool)>, CayleyError> {
        let names = self.generator_names();
        text.split_whitespace()
            .filter(|t| *t != "_")
            .map(|t| {
                if let Some(i) = names.iter().position(|n| n == t) {
                    return Ok((i, false));
                }
                let base = t.strip_suffix("^-1").or_else(|| t.strip_suffix('~'));
                base.and_then(|b| names.iter().position(|n| n == b))
                    .map(|i| (i, true))
                    .ok_or_else(|| CayleyError::Oracle(format!("unknown generator `{t}`")))
            })
            .collect()
    }
}

fn word_key(w: &[Letter]) -> Key {
    w.iter().map(|x| x.0).collect()
}

fn key_word(k: &Key) -> Word {
    k.iter().map(|&x| Letter(x)).collect()
}

/// A finite group given by its table, with chosen generating elements.
pub struct FiniteOracle {
    group: Arc<FiniteGroup>,
    gens: Vec<usize>,
}

impl FiniteOracle {
    pub fn new(group: Arc<FiniteGroup>, gens: Vec<usize>) -> Result<Self, CayleyError> {
        if gens.iter().any(|&g| g >= group.order()) {
            return Err(CayleyError::Oracle("generator out of range".into()));
        }
        Ok(FiniteOracle { group, gens })
    }
}

impl GroupOracle for FiniteOracle {
    fn backend(&self) -> &'static str {
        "finite"
    }
    fn generator_names(&self) -> Vec<String> {
        self.gens.iter().map(|&g| self.group.name(g).to_string()).collect()
    }
    fn identity(&self) -> Key {
        vec![0]
    }
    fn step(&self, g: &Key, s: usize, inverse: bool) -> Key {
        let x = self.gens[s];
        let x = if inverse { self.group.inv(x) } else { x };
        vec![self.group.mul(g[0] as usize, x) as u32]
    }
    fn describe(&self, g: &Key) -> String {
        self.group.name(g[0] as usize).to_string()
    }
}

/// The free group on named letters; keys are freely reduced words with
/// letter 2i for generator i and 2i+1 for its inverse.
pub struct FreeOracle {
    basis: Vec<String>,
}

impl FreeOracle {
    pub fn new<S: AsRef<str>>(basis: &[S]) -> Self {
        FreeOracle { basis: basis.iter().map(|s| s.as_ref().to_string()).collect() }
    }
}

impl GroupOracle for FreeOracle {
    fn backend(&self) -> &'static str {
        "free"
    }
    fn generator_names(&self) -> Vec<String> {
        self.basis.clone()
    }
    fn identity(&self) -> Key {
        vec![]
    }
    fn step(&self, g: &Key, s: usize, inverse: bool) -> Key {
        let x = 2 * s as u32 + inverse as u32;
        let mut out = g.clone();
        if out.last() == Some(&(x ^ 1)) {
            out.pop();
        } else {
            out.push(x);
        }
        out
    }
    fn describe(&self, g: &Key) -> String {
        if g.is_empty() {
            return "1".into();
        }
        g.iter()
            .map(|&x| {
                let n = &self.basis[(x / 2) as usize];
                if x % 2 == 1 {
                    format!("{n}~")
                } else {
                    n.clone()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Fundamental group of a graph of groups; keys are normal forms of loops
/// at the base vertex, generators are words over its letters.
pub struct GogOracle {
    gog: Arc<GraphOfGroups>,
    gens: Vec<(String, Word, Word)>,
}

impl GogOracle {
    /// Generators as words over the graph-of-groups letters.
    pub fn new(gog: Arc<GraphOfGroups>, gens: Vec<Word>) -> Result<Self, CayleyError> {
        let mut out = Vec::new();
        for w in gens {
            gog.alphabet().check_word(&w).map_err(|e| CayleyError::Oracle(e.to_string()))?;
            let inv = invert_gog_word(&gog, &w);
            out.push((gog.show(&w), w, inv));
        }
        Ok(GogOracle { gog, gens: out })
    }

    /// Every letter of the graph of groups as a generator.
    pub fn standard(gog: Arc<GraphOfGroups>) -> Self {
        let gens = gog.alphabet().letters().map(|x| vec![x]).collect();
        GogOracle::new(gog, gens).expect("letters of the graph")
    }

    pub fn gog(&self) -> &Arc<GraphOfGroups> {
        &self.gog
    }

    pub fn generator_words(&self) -> Vec<Word> {
        self.gens.iter().map(|g| g.1.clone()).collect()
    }

    /// Key of an arbitrary word over the graph-of-groups letters.
    pub fn key_of(&self, w: &[Letter]) -> Key {
        word_key(&self.gog.normal_form(w).expect("normal forms terminate"))
    }
}

pub(crate) fn invert_gog_word(g: &GraphOfGroups, w: &[Letter]) -> Word {
    w.iter()
        .rev()
        .map(|&x| match g.decode(x) {
            bs_gog::GogLetter::Vertex { vertex, element } => {
                let grp = &g.vertices()[vertex].group;
                g.vertex_letter(vertex, grp.inv(element)).expect("non-identity element")
            }
            bs_gog::GogLetter::Edge(e) => g.edge_letter(e ^ 1),
        })
        .collect()
}

impl GroupOracle for GogOracle {
    fn backend(&self) -> &'static str {
        "gog"
    }
    fn generator_names(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.0.replace(' ', ".")).collect()
    }
    fn identity(&self) -> Key {
        vec![]
    }
    fn step(&self, g: &Key, s: usize, inverse: bool) -> Key {
        let mut w = key_word(g);
        w.extend_from_slice(if inverse { &self.gens[s].2 } else { &self.gens[s].1 });
        self.key_of(&w)
    }
    fn describe(&self, g: &Key) -> String {
        if g.is_empty() {
            "1".into()
        } else {
            self.gog.show(&key_word(g))
        }
    }
}

/// Universal group of a finite pregroup. Keys are geodesics, made canonical
/// by taking the least word reachable with the length-preserving rules.
pub struct PregroupOracle {
    p: Arc<Pregroup>,
    gens: Vec<usize>,
}

impl PregroupOracle {
    pub fn new(p: Arc<Pregroup>, gens: Vec<usize>) -> Result<Self, CayleyError> {
        if gens.iter().any(|&g| g >= p.len()) {
            return Err(CayleyError::Oracle("generator out of range".into()));
        }
        Ok(PregroupOracle { p, gens })
    }

    pub fn canonical(&self, w: &[Letter]) -> Key {
        let g = geodesic_reduce(&self.p, w);
        let full = &self.p.sp().full;
        let mut seen: BTreeSet<Word> = BTreeSet::from([g.clone()]);
        let mut queue = VecDeque::from([g]);
        while let Some(x) = queue.pop_front() {
            for r in full.redexes(&x) {
                let y = full.rewrite_at(&x, r);
                if y.len() == x.len() && seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        word_key(seen.iter().next().expect("non-empty"))
    }
}

impl GroupOracle for PregroupOracle {
    fn backend(&self) -> &'static str {
        "pregroup"
    }
    fn generator_names(&self) -> Vec<String> {
        self.gens.iter().map(|&g| self.p.name(g).to_string()).collect()
    }
    fn identity(&self) -> Key {
        vec![]
    }
    fn step(&self, g: &Key, s: usize, inverse: bool) -> Key {
        let x = self.gens[s];
        let x = if inverse { self.p.inverse(x) } else { x };
        let mut w = key_word(g);
        w.push(Letter(x as u32));
        self.canonical(&w)
    }
    fn describe(&self, g: &Key) -> String {
        if g.is_empty() {
            "1".into()
        } else {
            self.p.show(&key_word(g))
        }
    }
}

type Builder = fn(&str, &[String]) -> Result<Box<dyn GroupOracle>, CayleyError>;

fn build_finite(src: &str, gens: &[String]) -> Result<Box<dyn GroupOracle>, CayleyError> {
    let g = if src.lines().any(|l| l.trim_start().starts_with("order")) {
        bs_groups::parse_group(src)
    } else {
        bs_groups::builtin(src.trim())
    }
    .map_err(|e| CayleyError::Oracle(e.to_string()))?;
    let ids = if gens.is_empty() {
        (1..g.order()).collect()
    } else {
        gens.iter()
            .map(|n| g.element(n).ok_or_else(|| CayleyError::Oracle(format!("unknown element `{n}`"))))
            .collect::<Result<_, _>>()?
    };
    Ok(Box::new(FiniteOracle::new(Arc::new(g), ids)?))
}

fn build_free(src: &str, gens: &[String]) -> Result<Box<dyn GroupOracle>, CayleyError> {
    let basis: Vec<&str> = src.split_whitespace().collect();
    if !gens.is_empty() && gens.iter().any(|g| !basis.contains(&g.as_str())) {
        return Err(CayleyError::Oracle("free generators must be basis letters".into()));
    }
    Ok(Box::new(FreeOracle::new(&basis)))
}

fn build_gog(src: &str, gens: &[String]) -> Result<Box<dyn GroupOracle>, CayleyError> {
    let gog = Arc::new(parse_gog(src, None)?);
    if gens.is_empty() {
        return Ok(Box::new(GogOracle::standard(gog)));
    }
    let words = gens.iter().map(|g| gog.parse_word(&g.replace('.', " "))).collect::<Result<Vec<_>, _>>()?;
    Ok(Box::new(GogOracle::new(gog, words)?))
}

fn build_pregroup(src: &str, gens: &[String]) -> Result<Box<dyn GroupOracle>, CayleyError> {
    let p = parse_pregroup(src)?;
    let ids = if gens.is_empty() {
        (0..p.len()).filter(|&x| x != p.one()).collect()
    } else {
        gens.iter()
            .map(|n| p.index(n).ok_or_else(|| CayleyError::Oracle(format!("unknown element `{n}`"))))
            .collect::<Result<_, _>>()?
    };
    Ok(Box::new(PregroupOracle::new(Arc::new(p), ids)?))
}

const BACKENDS: &[(&str, Builder)] =
    &[("finite", build_finite), ("free", build_free), ("gog", build_gog), ("pregroup", build_pregroup)];

pub fn backend_names() -> impl Iterator<Item = &'static str> {
    BACKENDS.iter().map(|b| b.0)
}

/// Build a backend by name from its source text: a group table or
/// built-in name, free basis letters, a graph-of-groups file, or a
/// pregroup table. An empty generator list selects the default set.
pub fn oracle_by_name(name: &str, source: &str, generators: &[String]) -> Result<Box<dyn GroupOracle>, CayleyError> {
    let (_, build) = BACKENDS
        .iter()
        .find(|b| b.0 == name)
        .ok_or_else(|| CayleyError::Oracle(format!("unknown backend `{name}`")))?;
    build(source, generators)
}
