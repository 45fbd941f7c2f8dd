use bs_rewrite::Word;

use crate::graph::GraphOfGroups;

/// A vertex of the Bass-Serre tree: an S_G-irreducible word c0 y1 .. c(k-1) yk.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BstNode {
    pub word: Word,
    pub terminal: usize,
    pub last_edge: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct BstChild {
    pub rep: usize,
    pub edge: usize,
    pub node: BstNode,
}

#[derive(Clone, Debug)]
pub struct BallNode {
    pub node: BstNode,
    pub parent: Option<usize>,
    pub depth: usize,
    pub stabilizer: usize,
}

impl GraphOfGroups {
    pub fn bst_root(&self) -> BstNode {
        BstNode { word: Vec::new(), terminal: self.base(), last_edge: None }
    }

    pub fn bst_children(&self, node: &BstNode) -> Vec<BstChild> {
        let mut out = Vec::new();
        for (e, edge) in self.edges().iter().enumerate() {
            if edge.source != node.terminal {
                continue;
            }
            for &c in self.coset_reps(e) {
                if c == 0 && node.last_edge == Some(e ^ 1) {
                    continue;
                }
                let mut word = node.word.clone();
                word.extend(self.vertex_letter(edge.source, c));
                word.push(self.edge_letter(e));
                out.push(BstChild {
                    rep: c,
                    edge: e,
                    node: BstNode { word, terminal: edge.target, last_edge: Some(e) },
                });
            }
        }
        out
    }

    /// Breadth-first fragment of the tree around the root, up to `radius`.
    pub fn bst_ball(&self, radius: usize) -> Vec<BallNode> {
        let root = self.bst_root();
        let mut out = vec![BallNode {
            stabilizer: self.vertices()[root.terminal].group.order(),
            node: root,
            parent: None,
            depth: 0,
        }];
        let mut i = 0;
        while i < out.len() {
            if out[i].depth < radius {
                let depth = out[i].depth + 1;
                for ch in self.bst_children(&out[i].node) {
                    out.push(BallNode {
                        stabilizer: self.vertices()[ch.node.terminal].group.order(),
                        node: ch.node,
                        parent: Some(i),
                        depth,
                    });
                }
            }
            i += 1;
        }
        out
    }
}
