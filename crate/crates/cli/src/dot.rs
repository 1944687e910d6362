//! Graphviz output of Hasse diagrams. Edges point from the finer to the
//! coarser quasi-ordering; solid edges are verified by a declared fact,
//! dashed ones are only not refuted on the universe.

use std::fmt::Write;

use quasiord::poset::Poset;
use quasiord::qo::Kind;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn shape(kind: Kind, trivial: bool) -> &'static str {
    match (kind, trivial) {
        (_, true) => "doublecircle",
        (Kind::Ordering, _) => "box",
        _ => "ellipse",
    }
}

fn body(out: &mut String, poset: &Poset, indent: &str) {
    for n in &poset.nodes {
        let _ = writeln!(out, "{indent}{} [shape={}];", quote(&n.id), shape(n.kind, n.trivial));
    }
    for e in &poset.hasse {
        let style = if e.verified { "solid" } else { "dashed" };
        let _ = writeln!(out, "{indent}{} -> {} [style={style}];", quote(&e.lower), quote(&e.upper));
    }
}

pub fn poset_dot(name: &str, poset: &Poset) -> String {
    let mut out = format!("digraph {} {{\n  rankdir=BT;\n", quote(name));
    body(&mut out, poset, "  ");
    out.push_str("}\n");
    out
}

/// All trees in one graph, one cluster per support.
pub fn forest_dot(name: &str, trees: &[(String, &Poset)]) -> String {
    let mut out = format!("digraph {} {{\n  rankdir=BT;\n", quote(name));
    for (k, (label, poset)) in trees.iter().enumerate() {
        let _ = writeln!(out, "  subgraph cluster_{k} {{\n    label={};", quote(label));
        body(&mut out, poset, "    ");
        out.push_str("  }\n");
    }
    out.push_str("}\n");
    out
}
