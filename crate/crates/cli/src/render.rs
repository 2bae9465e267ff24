use std::fmt::{Display, Write};

use palindromization::GraphJson;

/// Plain listing: a header line per attribute, then one edge per line.
pub fn text<L: Display>(graph: &GraphJson<L>) -> String {
    let list = |ids: &[usize]| {
        ids.iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut out = String::new();
    writeln!(out, "states: {}", graph.states.len()).unwrap();
    writeln!(out, "initial: {}", graph.initial).unwrap();
    writeln!(out, "terminals: {}", list(&graph.terminals)).unwrap();
    for edge in &graph.edges {
        writeln!(out, "{} -{}-> {}", edge.from, edge.label, edge.to).unwrap();
    }
    out
}
