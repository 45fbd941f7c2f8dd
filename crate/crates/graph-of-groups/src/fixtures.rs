//! Built-in graphs of groups, also shipped as files under `fixtures/`.

use crate::graph::GraphOfGroups;
use crate::parse::parse_gog;

const FIXTURES: &[(&str, &str)] = &[
    ("psl2z", include_str!("../../../fixtures/psl2z.gog")),
    ("zxz2", include_str!("../../../fixtures/zxz2.gog")),
    ("dihedral", include_str!("../../../fixtures/dihedral.gog")),
    ("free2", include_str!("../../../fixtures/free2.gog")),
    ("z2z4", include_str!("../../../fixtures/z2z4.gog")),
    ("amalgam46", include_str!("../../../fixtures/amalgam46.gog")),
    ("z2", include_str!("../../../fixtures/z2.gog")),
    ("triangle", include_str!("../../../fixtures/triangle.gog")),
];

pub fn fixture_names() -> impl Iterator<Item = &'static str> {
    FIXTURES.iter().map(|(n, _)| *n)
}

pub fn fixture(name: &str) -> Option<GraphOfGroups> {
    FIXTURES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| parse_gog(t, None).expect("bundled fixture parses"))
}

/// One vertex with trivial group and `m` loops.
pub fn free_loops(m: usize) -> GraphOfGroups {
    let mut text = String::from("group E trivial\nvertex P E\n");
    for i in 1..=m {
        text.push_str(&format!("edge y{i} P P E 0 0\n"));
    }
    parse_gog(&text, None).expect("loop graph")
}
