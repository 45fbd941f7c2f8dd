use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use crate::oracle::{GroupOracle, Key};
use crate::CayleyError;

/// Finite simple graph with labelled vertices. Ball graphs also remember
/// the canonical key and distance of every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    labels: Vec<String>,
    keys: Vec<Key>,
    index: HashMap<Key, usize>,
    adj: Vec<BTreeSet<usize>>,
    dist: Option<Vec<usize>>,
    radius: Option<usize>,
}

impl SimpleGraph {
    pub fn new<S: AsRef<str>>(labels: &[S]) -> Self {
        let keys: Vec<Key> = (0..labels.len() as u32).map(|i| vec![i]).collect();
        SimpleGraph {
            labels: labels.iter().map(|s| s.as_ref().to_string()).collect(),
            index: keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect(),
            keys,
            adj: vec![BTreeSet::new(); labels.len()],
            dist: None,
            radius: None,
        }
    }

    /// Vertices labelled 0..n.
    pub fn with_vertices(n: usize) -> Self {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        Self::new(&labels)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, CayleyError> {
        let mut g = Self::with_vertices(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Self {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &e).expect("path")
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0).expect("cycle");
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::with_vertices(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).expect("complete");
            }
        }
        g
    }

    /// The r×c grid; vertex (i, j) has index i·c + j.
    pub fn grid(r: usize, c: usize) -> Self {
        let mut g = Self::with_vertices(r * c);
        for i in 0..r {
            for j in 0..c {
                if j + 1 < c {
                    g.add_edge(i * c + j, i * c + j + 1).expect("grid");
                }
                if i + 1 < r {
                    g.add_edge(i * c + j, (i + 1) * c + j).expect("grid");
                }
            }
        }
        g
    }

    /// Adds an edge; repeated edges are ignored, loops rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), CayleyError> {
        let n = self.len();
        if u >= n || v >= n {
            return Err(CayleyError::Graph(format!("edge {u}-{v} out of range")));
        }
        if u == v {
            return Err(CayleyError::Graph(format!("loop at `{}`", self.labels[u])));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn key(&self, v: usize) -> &Key {
        &self.keys[v]
    }

    pub fn index_of(&self, key: &Key) -> Option<usize> {
        self.index.get(key).copied()
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    /// Edges (u, v) with u < v, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, ns) in self.adj.iter().enumerate() {
            out.extend(ns.range(u + 1..).map(|&v| (u, v)));
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Distance from the identity, for ball graphs.
    pub fn distance(&self, v: usize) -> Option<usize> {
        self.dist.as_ref().map(|d| d[v])
    }

    pub fn radius(&self) -> Option<usize> {
        self.radius
    }

    /// Vertices at full radius of a ball.
    pub fn on_sphere(&self, v: usize) -> bool {
        matches!((self.distance(v), self.radius), (Some(d), Some(r)) if d == r)
    }

    /// Vertices strictly inside a ball, or all vertices of other graphs.
    pub fn interior(&self) -> Vec<bool> {
        (0..self.len()).map(|v| !self.on_sphere(v)).collect()
    }

    /// Breadth-first distances inside the graph; unreachable is `usize::MAX`.
    pub fn bfs(&self, from: usize) -> Vec<usize> {
        let mut d = vec![usize::MAX; self.len()];
        d[from] = 0;
        let mut q = VecDeque::from([from]);
        while let Some(u) = q.pop_front() {
            for &v in &self.adj[u] {
                if d[v] == usize::MAX {
                    d[v] = d[u] + 1;
                    q.push_back(v);
                }
            }
        }
        d
    }

    /// Connected components of the subgraph induced on `keep`, each sorted.
    pub fn components(&self, keep: &[bool]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for s in 0..self.len() {
            if !keep[s] || seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &v in &self.adj[u] {
                    if keep[v] && !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components(&vec![true; self.len()]).len() <= 1
    }

    /// Induced subgraph; returns it with the original index of each vertex.
    pub fn induced(&self, keep: &[bool]) -> (SimpleGraph, Vec<usize>) {
        let old: Vec<usize> = (0..self.len()).filter(|&v| keep[v]).collect();
        let mut new_of = vec![usize::MAX; self.len()];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let labels: Vec<&str> = old.iter().map(|&v| self.label(v)).collect();
        let mut g = SimpleGraph::new(&labels);
        g.keys = old.iter().map(|&v| self.keys[v].clone()).collect();
        g.index = g.keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        for (u, v) in self.edges() {
            if keep[u] && keep[v] {
                g.add_edge(new_of[u], new_of[v]).expect("induced");
            }
        }
        if let Some(d) = &self.dist {
            g.dist = Some(old.iter().map(|&v| d[v]).collect());
            g.radius = self.radius;
        }
        (g, old)
    }

    /// The vertices within `radius` of `origin`, annotated like a Cayley
    /// ball; the origin comes first.
    pub fn ball_around(&self, origin: usize, radius: usize) -> SimpleGraph {
        let d = self.bfs(origin);
        let mut order: Vec<usize> = (0..self.len()).filter(|&v| d[v] <= radius).collect();
        order.sort_by_key(|&v| (d[v], v));
        let mut pos = vec![usize::MAX; self.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let labels: Vec<&str> = order.iter().map(|&v| self.label(v)).collect();
        let mut g = SimpleGraph::new(&labels);
        g.keys = order.iter().map(|&v| self.keys[v].clone()).collect();
        g.index = g.keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        for (u, v) in self.edges() {
            if pos[u] != usize::MAX && pos[v] != usize::MAX {
                g.add_edge(pos[u], pos[v]).expect("sub-ball");
            }
        }
        g.dist = Some(order.iter().map(|&v| d[v]).collect());
        g.radius = Some(radius);
        g
    }

    /// Text form: a `vertices` line with the labels, then one `edge u v`
    /// line per edge, by label.
    pub fn to_text(&self) -> String {
        let mut s = format!("vertices {}\n", self.labels.join(" "));
        for (u, v) in self.edges() {
            let _ = writeln!(s, "edge {} {}", self.labels[u], self.labels[v]);
        }
        s
    }

    pub fn parse(text: &str) -> Result<SimpleGraph, CayleyError> {
        let mut g: Option<SimpleGraph> = None;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |col: usize, msg: String| CayleyError::Parse { line: i + 1, col, msg };
            let mut toks = line.split_whitespace();
            match toks.next() {
                Some("vertices") => {
                    if g.is_some() {
                        return Err(err(1, "repeated `vertices` line".into()));
                    }
                    let labels: Vec<&str> = toks.collect();
                    let distinct: BTreeSet<&&str> = labels.iter().collect();
                    if distinct.len() != labels.len() {
                        return Err(err(1, "repeated vertex label".into()));
                    }
                    g = Some(SimpleGraph::new(&labels));
                }
                Some("edge") => {
                    let Some(graph) = g.as_mut() else {
                        return Err(err(1, "`edge` before `vertices`".into()));
                    };
                    let ends: Vec<&str> = toks.collect();
                    if ends.len() != 2 {
                        return Err(err(1, "edge needs two endpoints".into()));
                    }
                    let mut ix = [0; 2];
                    for (k, e) in ends.iter().enumerate() {
                        ix[k] = graph.vertex(e).ok_or_else(|| {
                            err(raw.find(e).map_or(1, |c| c + 1), format!("unknown vertex `{e}`"))
                        })?;
                    }
                    graph.add_edge(ix[0], ix[1]).map_err(|e| err(1, e.to_string()))?;
                }
                Some(other) => return Err(err(raw.find(other).map_or(1, |c| c + 1), format!("unknown directive `{other}`"))),
                None => {}
            }
        }
        g.ok_or_else(|| CayleyError::Parse { line: 1, col: 1, msg: "missing `vertices` line".into() })
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for (v, l) in self.labels.iter().enumerate() {
            let _ = writeln!(s, "  v{v} [label=\"{}\"];", escape(l));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(s, "  v{u} -- v{v};");
        }
        s.push_str("}\n");
        s
    }
}

pub(crate) fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// The ball of radius `radius` around the identity in the Cayley graph over
/// the generators and their inverses, with every edge between its vertices.
/// Generators acting trivially add no loop; labels are the first geodesic
/// found, joined with `·`.
pub fn cayley_ball(oracle: &dyn GroupOracle, radius: usize) -> SimpleGraph {
    let names = oracle.generator_names();
    let moves: Vec<(usize, bool)> = [false, true].iter().flat_map(|&inv| (0..names.len()).map(move |s| (s, inv))).collect();
    let move_name = |(s, inv): (usize, bool)| if inv { format!("{}~", names[s]) } else { names[s].clone() };

    let mut keys = vec![oracle.identity()];
    let mut labels = vec!["1".to_string()];
    let mut dist = vec![0usize];
    let mut index: HashMap<Key, usize> = HashMap::from([(keys[0].clone(), 0)]);
    let mut edges = Vec::new();
    let mut head = 0;
    while head < keys.len() {
        let u = head;
        head += 1;
        for &m in &moves {
            let k = oracle.step(&keys[u], m.0, m.1);
            let v = match index.get(&k) {
                Some(&v) => v,
                None if dist[u] < radius => {
                    let v = keys.len();
                    index.insert(k.clone(), v);
                    keys.push(k);
                    let label = if u == 0 { move_name(m) } else { format!("{}·{}", labels[u], move_name(m)) };
                    labels.push(label);
                    dist.push(dist[u] + 1);
                    v
                }
                None => continue,
            };
            if u != v {
                edges.push((u, v));
            }
        }
    }
    let mut g = SimpleGraph::new(&labels);
    for (u, v) in edges {
        g.add_edge(u, v).expect("distinct vertices");
    }
    g.keys = keys;
    g.index = index;
    g.dist = Some(dist);
    g.radius = Some(radius);
    g
}
