use std::collections::BTreeSet;

use super::{Edge, Graph, VertexId};
use crate::error::{Error, Result};

/// `V1 ∪ V2`, `E1 ∪ E2`. Shared names denote the same vertex.
pub fn union(g1: &Graph, g2: &Graph) -> Graph {
    let mut vs = g1.vertex_set();
    vs.extend(g2.vertices().iter().cloned());
    let mut es = g1.edge_set();
    es.extend(g2.edges());
    Graph::from_sets(vs, es)
}

/// `V1 ∩ V2`, `E1 ∩ E2`; isolated vertices are kept.
pub fn intersection(g1: &Graph, g2: &Graph) -> Graph {
    let vs: BTreeSet<VertexId> = g1
        .vertices()
        .iter()
        .filter(|v| g2.contains_vertex(v))
        .cloned()
        .collect();
    let es: BTreeSet<Edge> = g1.edges().filter(|e| g2.contains_edge(e)).collect();
    Graph::from_sets(vs, es)
}

/// n-ary join: disjoint union of the parts plus every edge between distinct parts.
pub fn join(parts: &[Graph]) -> Result<Graph> {
    if parts.len() < 2 {
        return Err(Error::ParamOutOfRange(format!(
            "join needs at least 2 parts, got {}",
            parts.len()
        )));
    }
    let mut vs = BTreeSet::new();
    let mut es = BTreeSet::new();
    for part in parts {
        for v in part.vertices() {
            if !vs.insert(v.clone()) {
                return Err(Error::VertexCollision(v.to_string()));
            }
        }
        es.extend(part.edges());
    }
    for (i, a) in parts.iter().enumerate() {
        for b in &parts[i + 1..] {
            for u in a.vertices() {
                for w in b.vertices() {
                    es.insert(Edge::new(u.clone(), w.clone()).expect("parts are disjoint"));
                }
            }
        }
    }
    Ok(Graph::from_sets(vs, es))
}

/// Symmetric difference of the edge sets. Vertices left without an incident
/// edge are dropped from the result.
pub fn ring_sum(g1: &Graph, g2: &Graph) -> Graph {
    let e1 = g1.edge_set();
    let e2 = g2.edge_set();
    let es: BTreeSet<Edge> = e1.symmetric_difference(&e2).cloned().collect();
    let vs: BTreeSet<VertexId> = es.iter().flat_map(|e| [e.0.clone(), e.1.clone()]).collect();
    Graph::from_sets(vs, es)
}

/// `G - H`: removes the edges of `h` from `g`, keeping every vertex of `g`.
pub fn subtract(g: &Graph, h: &Graph) -> Result<Graph> {
    if !is_subgraph(h, g) {
        return Err(Error::NotSubgraph);
    }
    let es: BTreeSet<Edge> = g.edges().filter(|e| !h.contains_edge(e)).collect();
    Ok(Graph::from_sets(g.vertex_set(), es))
}

pub fn is_subgraph(h: &Graph, g: &Graph) -> bool {
    h.vertices().iter().all(|v| g.contains_vertex(v)) && h.edges().all(|e| g.contains_edge(&e))
}

/// Prefixes every vertex name. Fails only if `prefix` contains characters
/// outside the vertex-name alphabet.
pub fn relabel(g: &Graph, prefix: &str) -> Result<Graph> {
    if !prefix.is_empty() && !VertexId::is_valid_token(prefix) {
        return Err(Error::InvalidVertexName(prefix.to_string()));
    }
    let rename = |v: &VertexId| VertexId::from_trusted(format!("{prefix}{v}"));
    let vs = g.vertices().iter().map(rename).collect();
    let es = g
        .edges()
        .map(|e| Edge::new(rename(&e.0), rename(&e.1)).expect("renaming is injective"))
        .collect();
    Ok(Graph::from_sets(vs, es))
}
