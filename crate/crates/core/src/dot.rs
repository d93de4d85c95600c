//! Plain Graphviz DOT output: node and edge statements only.

use std::fmt::Write;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// A directed graph with `n{i}` node ids; edges go from lower to upper.
pub fn digraph(name: &str, labels: &[String], edges: &[(usize, usize)]) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    for (i, l) in labels.iter().enumerate() {
        writeln!(out, "  n{i} [label={}];", quote(l)).unwrap();
    }
    for (a, b) in edges {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_nodes() {
        let d = digraph("g", &["e".into(), "s\"1".into()], &[(0, 1)]);
        assert_eq!(d, "digraph \"g\" {\n  n0 [label=\"e\"];\n  n1 [label=\"s\\\"1\"];\n  n0 -> n1;\n}\n");
    }
}
