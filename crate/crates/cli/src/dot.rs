//! Graphviz export.

use std::fmt::Write;

use crate::document::GraphDocument;

pub const PALETTE: [&str; 12] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf", "#393b79", "#637939",
];

/// Color `c` maps to `PALETTE[(c - 1) % 12]`; edges also carry the number as a label.
pub fn palette(color: u32) -> &'static str {
    PALETTE[(color.max(1) as usize - 1) % PALETTE.len()]
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn to_dot(doc: &GraphDocument) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle, fontsize=10];\n");
    for v in &doc.vertices {
        let _ = writeln!(out, "  {};", quote(v));
    }
    for e in &doc.edges {
        let (a, b) = e.ends();
        let _ = match e.color() {
            Some(c) => writeln!(
                out,
                "  {} -- {} [color={}, label=\"{c}\"];",
                quote(a),
                quote(b),
                quote(palette(c))
            ),
            None => writeln!(out, "  {} -- {};", quote(a), quote(b)),
        };
    }
    out.push_str("}\n");
    out
}
