//! Human-readable and machine-readable rendering helpers.

use finspace_core::complex::{ChainComplex, Cycle, HomologyResult};
use num_bigint::BigInt;
use num_traits::One;
use finspace_core::cover::Coloring;
use finspace_core::{AbelianGroup, IntMatrix, Poset};
use serde_json::{json, Value};

/// "H0=Z, H1=Z/2": every degree from the lowest computed one up to the last
/// nontrivial group (at least degree 0).
pub fn homology_line(h: &HomologyResult) -> String {
    let support = h.support();
    let lo = support.iter().min().copied().unwrap_or(0).min(0);
    let hi = support.iter().max().copied().unwrap_or(0).max(0);
    (lo..=hi)
        .map(|n| format!("H{n}={}", h.group(n)))
        .collect::<Vec<_>>()
        .join(", ")
}

/// "[a,d] - [b,d] + 2*[c]" for a formal sum of chains.
pub fn cycle_string(c: &Cycle) -> String {
    if c.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (chain, a)) in c.iter().enumerate() {
        let neg = a < &BigInt::from(0);
        let mag = if neg { -a.clone() } else { a.clone() };
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&format!("{mag}*"));
        }
        out.push_str(&chain.to_string());
    }
    out
}

pub fn group_json(g: &AbelianGroup) -> Value {
    json!({
        "rank": g.rank,
        "torsion": g.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        "display": g.to_string(),
    })
}

pub fn homology_json(h: &HomologyResult) -> Value {
    let degrees: Vec<Value> = h
        .degrees()
        .map(|d| {
            json!({
                "degree": d.degree,
                "group": group_json(&d.group),
                "generators": d.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "line": homology_line(h),
        "degrees": degrees,
        "euler_characteristic": h.euler_characteristic(),
    })
}

pub fn matrix_lines(m: &IntMatrix, indent: &str) -> String {
    if m.rows() == 0 || m.cols() == 0 {
        return format!("{indent}[{}x{}]", m.rows(), m.cols());
    }
    (0..m.rows())
        .map(|i| {
            let row: Vec<String> = (0..m.cols()).map(|j| m.get(i, j).to_string()).collect();
            format!("{indent}[{}]", row.join(" "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn matrix_json(m: &IntMatrix) -> Value {
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect())
        .collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": rows })
}

/// Basis sizes per degree, e.g. "C0=3 C1=6 C2=4".
pub fn complex_summary(cc: &ChainComplex) -> String {
    (cc.min_degree()..=cc.max_degree())
        .map(|n| format!("C{n}={}", cc.basis(n).len()))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn complex_json(cc: &ChainComplex) -> Value {
    let degrees: Vec<Value> = (cc.min_degree()..=cc.max_degree())
        .map(|n| {
            json!({
                "degree": n,
                "basis": cc.basis(n),
                "differential": matrix_json(&cc.diff(n)),
            })
        })
        .collect();
    json!({
        "degrees": degrees,
        "total_generators": cc.total_generators(),
        "euler_characteristic": cc.euler_characteristic(),
    })
}

/// Graphviz text of the Hasse diagram, drawn bottom-up. Matched edges are
/// bold; colored edges carry their group label.
pub fn dot(
    p: &Poset,
    matching: Option<&[(String, String)]>,
    coloring: Option<&Coloring>,
) -> String {
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for x in p.elements() {
        out.push_str(&format!("  \"{x}\";\n"));
    }
    for (a, b) in p.covers() {
        let mut attrs: Vec<String> = vec![];
        if matching
            .map(|m| m.iter().any(|(u, v)| u == a && v == b))
            .unwrap_or(false)
        {
            attrs.push("style=bold".into());
            attrs.push("color=blue".into());
        }
        if let Some(c) = coloring {
            let i = c.poset().index_of(a).unwrap();
            let j = c.poset().index_of(b).unwrap();
            if let Some(g) = c.label(i, j) {
                if g != c.group().identity() {
                    attrs.push(format!("label=\"{}\"", c.group().name(g)));
                }
            }
        }
        if attrs.is_empty() {
            out.push_str(&format!("  \"{a}\" -> \"{b}\";\n"));
        } else {
            out.push_str(&format!("  \"{a}\" -> \"{b}\" [{}];\n", attrs.join(",")));
        }
    }
    out.push_str("}\n");
    out
}
