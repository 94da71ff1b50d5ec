//! Hasse diagrams in Graphviz DOT.

use std::fmt::Write;

use crate::algebra::{Elem, FiniteAlgebra};
use crate::kalman::{CDiffView, KalmanAlgebra};

/// Covering pairs `(x, y)`: `x < y` with nothing strictly between.
pub fn hasse_edges(a: &FiniteAlgebra) -> Vec<(Elem, Elem)> {
    let n = a.size();
    let lt = |x: Elem, y: Elem| x != y && a.leq(x, y);
    let mut edges = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if lt(x, y) && !(0..n).any(|z| lt(x, z) && lt(z, y)) {
                edges.push((x, y));
            }
        }
    }
    edges
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn render(
    a: &FiniteAlgebra,
    labels: &[String],
    marks: &[(Elem, &str)],
    involution: Option<&[Elem]>,
) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", escape(a.name())).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for x in a.elements() {
        let tags: Vec<&str> = marks
            .iter()
            .filter(|(e, _)| *e == x)
            .map(|(_, t)| *t)
            .collect();
        let mut attrs = format!("label=\"{}\"", escape(&labels[x]));
        if !tags.is_empty() {
            write!(attrs, ", xlabel=\"{}\", shape=doublecircle", tags.join(" ")).unwrap();
        }
        writeln!(out, "  n{x} [{attrs}];").unwrap();
    }
    for (x, y) in hasse_edges(a) {
        writeln!(out, "  n{x} -> n{y} [arrowhead=none];").unwrap();
    }
    if let Some(inv) = involution {
        for (x, &y) in inv.iter().enumerate() {
            if x < y {
                writeln!(
                    out,
                    "  n{x} -> n{y} [style=dashed, dir=both, constraint=false];"
                )
                .unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

/// The order of an algebra, with `0` and `1` marked.
pub fn algebra_to_dot(a: &FiniteAlgebra) -> String {
    let labels: Vec<String> = a.elements().map(|x| x.to_string()).collect();
    render(a, &labels, &[(a.zero(), "0"), (a.one(), "1")], None)
}

/// A c-differential view: `0`, `c` and `1` marked, `~` as dashed edges.
pub fn view_to_dot(view: &CDiffView) -> String {
    let a = &view.algebra;
    let labels: Vec<String> = a.elements().map(|x| x.to_string()).collect();
    render(
        a,
        &labels,
        &[(a.zero(), "0"), (view.center, "c"), (a.one(), "1")],
        Some(&view.inv),
    )
}

/// `K(L)` with elements labelled by their base pairs.
pub fn kalman_to_dot(k: &KalmanAlgebra) -> String {
    let a = k.algebra();
    let labels: Vec<String> = k
        .pairs()
        .iter()
        .map(|(x, y)| format!("({x},{y})"))
        .collect();
    render(
        a,
        &labels,
        &[(k.bottom(), "0"), (k.center(), "c"), (k.top(), "1")],
        Some(k.inv()),
    )
}
