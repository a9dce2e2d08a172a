//! JSON and DOT renderings.

use std::fmt::Write;

use cyclotam::ncpart::Tincp;
use cyclotam::repfan::{g_vector, TaggedArc};
use cyclotam::{ArcSet, LatticeModel, Tibit};
use serde_json::{json, Value};

pub fn arcs_json(d: &ArcSet) -> Value {
    json!(d.pairs().iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>())
}

pub fn tree_json(t: &Tibit) -> Value {
    json!({ "n": t.n(), "parent_offset": t.parent_offsets() })
}

pub fn lattice_json(l: &LatticeModel) -> Value {
    let elements: Vec<Value> = l
        .elements()
        .iter()
        .enumerate()
        .map(|(id, e)| {
            json!({
                "id": id,
                "arcs": arcs_json(&e.arcs),
                "window": e.tito.to_string(),
                "parent_offset": e.tree.parent_offsets(),
            })
        })
        .collect();
    json!({
        "n": l.n,
        "variant": l.variant.name(),
        "elements": elements,
        "covers": l.covers().iter().map(|&(x, y)| [x, y]).collect::<Vec<_>>(),
    })
}

pub fn lattice_dot(l: &LatticeModel) -> String {
    let mut s = format!("digraph {}_{} {{\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n", l.variant.name(), l.n);
    for (id, e) in l.elements().iter().enumerate() {
        writeln!(s, "  e{id} [label=\"{}\"];", e.tito).unwrap();
    }
    for (x, y) in l.covers() {
        let label = l.edge_label(x, y).map(|r| r.to_string()).unwrap_or_default();
        writeln!(s, "  e{x} -> e{y} [label=\"{label}\"];").unwrap();
    }
    s.push_str("}\n");
    s
}

/// Nodes `v_1 .. v_{3n}` with the edges among them; spine nodes are filled.
pub fn tree_dot(t: &Tibit) -> String {
    let n = t.n() as i64;
    let mut s = String::from("digraph tree {\n  node [shape=circle];\n");
    for j in 1..=3 * n {
        let style = if t.is_spine(j) { ", style=filled, fillcolor=gold" } else { "" };
        writeln!(s, "  v{j} [label=\"{j}\"{style}];").unwrap();
    }
    for j in 1..=3 * n {
        let p = t.parent(j);
        if (1..=3 * n).contains(&p) {
            writeln!(s, "  v{p} -> v{j};").unwrap();
        }
    }
    s.push_str("}\n");
    s
}

pub fn triangulation_json(tri: &[TaggedArc], n: usize) -> Value {
    json!(tri
        .iter()
        .map(|&x| match x {
            TaggedArc::Plain { a, b } => json!({ "kind": "plain", "a": a, "b": b, "g": g_vector(x, n).0 }),
            TaggedArc::Notched { a } => json!({ "kind": "notched", "a": a, "b": Value::Null, "g": g_vector(x, n).0 }),
        })
        .collect::<Vec<_>>())
}

pub fn tincp_json(p: &Tincp) -> Value {
    let infinite = if p.has_infinite_block() { json!(p.infinite_residues()) } else { Value::Null };
    json!({ "finite_blocks": p.finite_shapes(), "infinite": infinite })
}
