//! Graphviz export.

use std::fmt::Write;

use crate::graphcat::Graph;
use crate::relcore::Element;

fn node_name(a: &Element, b: &Element) -> String {
    let raw = format!("{a}|{b}");
    format!("\"{}\"", raw.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected DOT text: one node per vertex, named `"a|b"`, then the non-loop
/// edges. Both lists follow the canonical vertex order.
pub fn export_dot(g: &Graph) -> String {
    let mut out = String::from("graph {\n");
    for (a, b) in g.vertices() {
        writeln!(out, "  {};", node_name(a, b)).unwrap();
    }
    for ((a, b), (c, d)) in g.edges() {
        writeln!(out, "  {} -- {};", node_name(a, b), node_name(c, d)).unwrap();
    }
    out.push_str("}\n");
    out
}
