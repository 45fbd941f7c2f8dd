use std::collections::HashMap;
use std::path::Path;
use std::sync::Arc;

use bs_groups::{builtin, parse_group, FiniteGroup};

use crate::graph::{EdgeSpec, GraphOfGroups, Vertex};
use crate::GogError;

/// Parse a graph-of-groups description. `file` group paths resolve against `dir`.
///
/// ```text
/// group C2 cyclic 2 names 1 a
/// group K file k.grp
/// vertex A C2
/// edge y A B E 0 0          # images of the edge-group elements, by index or name
/// base A
/// ```
pub fn parse_gog(text: &str, dir: Option<&Path>) -> Result<GraphOfGroups, GogError> {
    let mut groups: HashMap<String, Arc<FiniteGroup>> = HashMap::new();
    let mut vertices: Vec<Vertex> = Vec::new();
    let mut specs = Vec::new();
    let mut base: Option<usize> = None;
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let toks: Vec<(usize, &str)> = tokens(line);
        let Some(&(col0, head)) = toks.first() else { continue };
        let err = |col: usize, msg: String| GogError::Parse { line: ln + 1, col: col + 1, msg };
        let arg = |i: usize| toks.get(i).map(|t| t.1).ok_or_else(|| err(line.len(), format!("`{head}` needs more fields")));
        match head {
            "group" => {
                let name = arg(1)?.to_string();
                let names_at = toks.iter().position(|t| t.1 == "names").unwrap_or(toks.len());
                let spec: Vec<&str> = toks[2..names_at].iter().map(|t| t.1).collect();
                let g = if spec.first() == Some(&"file") {
                    let p = spec.get(1).ok_or_else(|| err(col0, "`file` needs a path".into()))?;
                    let path = dir.map(|d| d.join(p)).unwrap_or_else(|| p.into());
                    let body = std::fs::read_to_string(&path).map_err(|e| err(toks[3].0, format!("{}: {e}", path.display())))?;
                    parse_group(&body).map_err(|e| err(toks[3].0, e.to_string()))?
                } else {
                    builtin(&spec.join(" ")).map_err(|e| err(toks.get(2).map_or(col0, |t| t.0), e.to_string()))?
                };
                let g = if names_at < toks.len() {
                    let names = toks[names_at + 1..].iter().map(|t| t.1.to_string()).collect();
                    g.with_names(names).map_err(|e| err(toks[names_at].0, e.to_string()))?
                } else {
                    g
                };
                groups.insert(name, Arc::new(g));
            }
            "vertex" => {
                let name = arg(1)?.to_string();
                let gname = arg(2)?;
                let group = groups.get(gname).cloned().ok_or_else(|| err(toks[2].0, format!("unknown group `{gname}`")))?;
                if vertices.iter().any(|v| v.name == name) {
                    return Err(err(toks[1].0, format!("duplicate vertex `{name}`")));
                }
                vertices.push(Vertex { name, group });
            }
            "edge" => {
                if toks.len() != 7 {
                    return Err(err(col0, "expected `edge NAME FROM TO GROUP MAP MAP`".into()));
                }
                let find_v = |i: usize| {
                    vertices.iter().position(|v| v.name == toks[i].1).ok_or_else(|| err(toks[i].0, format!("unknown vertex `{}`", toks[i].1)))
                };
                let (from, to) = (find_v(2)?, find_v(3)?);
                let group = groups.get(toks[4].1).cloned().ok_or_else(|| err(toks[4].0, format!("unknown group `{}`", toks[4].1)))?;
                let map = |i: usize, target: &FiniteGroup| -> Result<Vec<usize>, GogError> {
                    toks[i]
                        .1
                        .split(',')
                        .map(|s| {
                            s.parse::<usize>()
                                .ok()
                                .filter(|&k| k < target.order())
                                .or_else(|| target.element(s))
                                .ok_or_else(|| err(toks[i].0, format!("unknown element `{s}`")))
                        })
                        .collect()
                };
                let into_from = map(5, &vertices[from].group)?;
                let into_to = map(6, &vertices[to].group)?;
                specs.push(EdgeSpec { name: toks[1].1.to_string(), from, to, group, into_from, into_to });
            }
            "base" => {
                let b = arg(1)?;
                base = Some(vertices.iter().position(|v| v.name == b).ok_or_else(|| err(toks[1].0, format!("unknown vertex `{b}`")))?);
            }
            other => return Err(err(col0, format!("unknown directive `{other}`"))),
        }
    }
    GraphOfGroups::new(vertices, specs, base.unwrap_or(0))
}

fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out
}
