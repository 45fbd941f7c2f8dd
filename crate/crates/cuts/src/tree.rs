use std::collections::HashMap;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;

use crate::cut::{is_nested, Cut};
use crate::CutError;

/// First crossing pair, by index.
pub fn check_nested(cuts: &[Cut]) -> Result<(), CutError> {
    for i in 0..cuts.len() {
        for j in i + 1..cuts.len() {
            if !is_nested(&cuts[i], &cuts[j]) {
                return Err(CutError::NotNested(i, j));
            }
        }
    }
    Ok(())
}

fn complements(cuts: &[Cut]) -> Result<Vec<usize>, CutError> {
    let index: HashMap<&FixedBitSet, usize> = cuts.iter().enumerate().map(|(i, c)| (c.side(), i)).collect();
    cuts.iter()
        .enumerate()
        .map(|(i, c)| index.get(c.complement().side()).copied().ok_or(CutError::NotSymmetric(i)))
        .collect()
}

/// C ~ D iff C = D, or C̄ ⊊ D with no cut E of the set strictly between.
/// The set must be closed under complement.
pub fn tilde_relation(cuts: &[Cut]) -> Result<Vec<Vec<bool>>, CutError> {
    let comp = complements(cuts)?;
    let n = cuts.len();
    let mut rel = vec![vec![false; n]; n];
    for i in 0..n {
        let ci = &cuts[comp[i]];
        for j in 0..n {
            rel[i][j] = i == j
                || (ci.is_strict_subset(&cuts[j])
                    && !cuts.iter().any(|e| ci.is_strict_subset(e) && e.is_strict_subset(&cuts[j])));
        }
    }
    Ok(rel)
}

/// Classes of ~ after checking nestedness and the equivalence axioms on the
/// computed relation. Classes are ordered by their least member.
pub fn tilde_classes(cuts: &[Cut]) -> Result<Vec<Vec<usize>>, CutError> {
    check_nested(cuts)?;
    let rel = tilde_relation(cuts)?;
    let n = cuts.len();
    for i in 0..n {
        for j in 0..n {
            if rel[i][j] != rel[j][i] {
                return Err(CutError::NotEquivalence(format!("not symmetric on cuts {i}, {j}")));
            }
            if rel[i][j] {
                if let Some(k) = (0..n).find(|&k| rel[j][k] && !rel[i][k]) {
                    return Err(CutError::NotEquivalence(format!("not transitive on cuts {i}, {j}, {k}")));
                }
            }
        }
    }
    let mut seen = vec![false; n];
    let mut classes = Vec::new();
    for i in 0..n {
        if !seen[i] {
            let class: Vec<usize> = (0..n).filter(|&j| rel[i][j]).collect();
            for &j in &class {
                seen[j] = true;
            }
            classes.push(class);
        }
    }
    Ok(classes)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeEdge {
    /// The orientation C with s = [C]; its complement has s = [C̄].
    pub cut: usize,
    pub complement: usize,
    pub source: usize,
    pub target: usize,
    pub weight: usize,
}

/// Classes as vertices, complementary pairs of cuts as edges.
#[derive(Clone, Debug)]
pub struct StructureTree {
    pub cuts: Vec<Cut>,
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    pub edges: Vec<TreeEdge>,
}

impl StructureTree {
    pub fn vertex_count(&self) -> usize {
        self.classes.len()
    }

    /// Neighbouring classes of each class.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.classes.len()];
        for e in &self.edges {
            adj[e.source].push(e.target);
            adj[e.target].push(e.source);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph T {\n");
        for (i, c) in self.classes.iter().enumerate() {
            let _ = writeln!(s, "  c{i} [label=\"[{}] ({} cuts)\"];", c[0], c.len());
        }
        for e in &self.edges {
            let _ = writeln!(s, "  c{} -- c{} [label=\"{}\"];", e.source, e.target, e.weight);
        }
        s.push_str("}\n");
        s
    }

    pub fn show(&self) -> String {
        let mut s = format!("structure tree: {} vertices, {} edges\n", self.classes.len(), self.edges.len());
        for (i, c) in self.classes.iter().enumerate() {
            let members: Vec<String> = c.iter().map(usize::to_string).collect();
            let _ = writeln!(s, "class {i}: cuts {}", members.join(" "));
        }
        for e in &self.edges {
            let _ = writeln!(s, "edge {} {} cut {} weight {}", e.source, e.target, e.cut, e.weight);
        }
        s
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Builds the structure graph and insists it is a tree: no loop, connected,
/// one edge fewer than vertices. The empty cut set gives the empty tree.
pub fn structure_tree(cuts: &[Cut]) -> Result<StructureTree, CutError> {
    let classes = tilde_classes(cuts)?;
    let comp = complements(cuts)?;
    let mut class_of = vec![0; cuts.len()];
    for (k, c) in classes.iter().enumerate() {
        for &i in c {
            class_of[i] = k;
        }
    }
    let mut edges = Vec::new();
    for i in 0..cuts.len() {
        if i < comp[i] {
            let (source, target) = (class_of[i], class_of[comp[i]]);
            if source == target {
                return Err(CutError::NotTree(format!("cut {i} is a loop at class {source}")));
            }
            edges.push(TreeEdge { cut: i, complement: comp[i], source, target, weight: cuts[i].weight() });
        }
    }
    let v = classes.len();
    if v > 0 {
        let mut parent: Vec<usize> = (0..v).collect();
        for e in &edges {
            let (a, b) = (find(&mut parent, e.source), find(&mut parent, e.target));
            if a == b {
                return Err(CutError::NotTree(format!("cut {} closes a cycle", e.cut)));
            }
            parent[a] = b;
        }
        let root = find(&mut parent, 0);
        if let Some(x) = (0..v).find(|&x| find(&mut parent, x) != root) {
            return Err(CutError::NotTree(format!("class {x} is not connected to class 0")));
        }
    }
    Ok(StructureTree { cuts: cuts.to_vec(), classes, class_of, edges })
}
