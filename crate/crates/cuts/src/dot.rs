use std::fmt::Write as _;

use bs_cayley::SimpleGraph;

use crate::cut::Cut;

pub(crate) fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// The ball with the side of `cut` filled and its boundary drawn in red.
pub fn ball_dot_with_cut(g: &SimpleGraph, cut: &Cut) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.len() {
        let fill = if cut.contains(v) { ", style=filled, fillcolor=lightblue" } else { "" };
        let _ = writeln!(s, "  v{v} [label=\"{}\"{fill}];", escape(g.label(v)));
    }
    for (u, v) in g.edges() {
        let style = if cut.contains(u) != cut.contains(v) { " [color=red, penwidth=2]" } else { "" };
        let _ = writeln!(s, "  v{u} -- v{v}{style};");
    }
    s.push_str("}\n");
    s
}
