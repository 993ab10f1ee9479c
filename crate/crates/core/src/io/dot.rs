use std::fmt::Write;

use crate::trigraph::{EdgeColor, Trigraph, VertexLabel};

fn display_label(label: VertexLabel, order: usize) -> String {
    if order <= 26 {
        label.members().map(|m| (b'a' + m as u8) as char).collect()
    } else {
        label.to_string()
    }
}

/// Renders a trigraph as an undirected DOT document. Red edges carry
/// `color=red` plus `style=bold` so they stay distinguishable in monochrome.
/// Graphs with at most 26 original vertices get letter labels (`ef`, `bcef`).
pub fn emit_dot(g: &Trigraph) -> String {
    let mut out = String::from("graph {\n");
    for v in g.vertices() {
        writeln!(out, "  v{} [label=\"{}\"];", v.smallest(), display_label(v, g.order())).unwrap();
    }
    for (u, v, color) in g.edges() {
        match color {
            EdgeColor::Black => writeln!(out, "  v{} -- v{};", u.smallest(), v.smallest()),
            EdgeColor::Red => writeln!(out, "  v{} -- v{} [color=red, style=bold];", u.smallest(), v.smallest()),
        }
        .unwrap();
    }
    out.push_str("}\n");
    out
}
