//! Graphviz output.

use crate::graph::Graph;
use crate::labeling::Labeling;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected DOT text, one line per vertex then one per edge, both sorted.
/// Labels, when given, become vertex annotations like `{0,4,8}`.
pub fn to_dot(g: &Graph, labeling: Option<&Labeling>) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        match labeling.and_then(|f| f.get(v)) {
            Some(label) => out.push_str(&format!(
                "  {} [label={}];\n",
                quote(v.as_str()),
                quote(&format!("{} {}", v.as_str(), label))
            )),
            None => out.push_str(&format!("  {};\n", quote(v.as_str()))),
        }
    }
    for e in g.edges() {
        out.push_str(&format!(
            "  {} -- {};\n",
            quote(e.first().as_str()),
            quote(e.second().as_str())
        ));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexId;
    use crate::labeling::SetLabel;

    #[test]
    fn plain_path() {
        let g = Graph::from_names(&["b", "a", "c"], &[("a", "b"), ("c", "b")]);
        assert_eq!(
            to_dot(&g, None),
            "graph G {\n  \"a\";\n  \"b\";\n  \"c\";\n  \"a\" -- \"b\";\n  \"b\" -- \"c\";\n}\n"
        );
    }

    #[test]
    fn labels_annotate_vertices() {
        let g = Graph::from_names(&["a", "b"], &[("a", "b")]);
        let f: Labeling = [
            (VertexId::new("a").unwrap(), SetLabel::singleton(1u8)),
            (
                VertexId::new("b").unwrap(),
                SetLabel::new([0u8, 4, 8]).unwrap(),
            ),
        ]
        .into_iter()
        .collect();
        let dot = to_dot(&g, Some(&f));
        assert!(dot.contains("  \"a\" [label=\"a {1}\"];\n"));
        assert!(dot.contains("  \"b\" [label=\"b {0,4,8}\"];\n"));
        assert_eq!(dot.lines().count(), 5);
    }
}
