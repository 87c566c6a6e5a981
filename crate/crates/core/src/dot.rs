//! Graphviz export.

use std::fmt::Write as _;

use crate::coloring::Coloring;
use crate::graph::Graph;

const PALETTE: [&str; 6] = ["white", "gray", "lightblue", "khaki", "palegreen", "pink"];

/// DOT text for `g`. With a coloring, vertices are filled by color and
/// edges between same-colored vertices are drawn bold.
pub fn export_dot(g: &Graph, c: Option<&Coloring>) -> String {
    let mut s = String::from("graph G {\n  node [shape=circle, style=filled, fillcolor=white];\n");
    for v in 0..g.vertex_count() {
        match c {
            Some(c) => {
                let k = c.color(v);
                let fill = PALETTE.get(k as usize).copied().unwrap_or("black");
                writeln!(s, "  {v} [fillcolor={fill}, xlabel=\"c{k}\"];").unwrap();
            }
            None => writeln!(s, "  {v};").unwrap(),
        }
    }
    for (a, b) in g.edges() {
        let bold = c.is_some_and(|c| c.color(a) == c.color(b));
        if bold {
            writeln!(s, "  {a} -- {b} [style=bold, penwidth=3];").unwrap();
        } else {
            writeln!(s, "  {a} -- {b};").unwrap();
        }
    }
    s.push_str("}\n");
    s
}
