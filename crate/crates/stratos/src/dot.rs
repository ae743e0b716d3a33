//! Graphviz output for Hasse diagrams.

use crate::order::Poset;

/// DOT rendering: bottom-to-top rank direction, edges from the smaller
/// to the larger element, nodes declared in lexicographic label order.
pub fn poset_dot(p: &Poset) -> String {
    let mut out = String::from("digraph {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    let mut order: Vec<usize> = (0..p.len()).collect();
    order.sort_by(|&a, &b| p.label(a).cmp(p.label(b)));
    for i in order {
        out.push_str(&format!("  \"{}\";\n", p.label(i)));
    }
    for (a, b) in p.hasse_edges() {
        out.push_str(&format!("  \"{}\" -> \"{}\";\n", p.label(a), p.label(b)));
    }
    out.push_str("}\n");
    out
}
