//! Simple undirected graphs over named vertices.
//!
//! Vertices are kept in sorted [`VertexId`] order and addressed internally by
//! their position in that order. Every structural operation returns a fresh
//! graph; values are never mutated after construction.

mod families;
mod json;
mod ops;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use families::FamilySpec;
pub use json::GraphJson;
pub use ops::{intersection, is_subgraph, join, relabel, ring_sum, subtract, union};

/// A vertex name: a non-empty token over `[A-Za-z0-9_.-]`.
///
/// Ordering is plain byte order, which fixes every tie-break in the crate.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if Self::is_valid_token(&name) {
            Ok(VertexId(name))
        } else {
            Err(Error::InvalidVertexName(name))
        }
    }

    pub fn is_valid_token(s: &str) -> bool {
        !s.is_empty()
            && s.bytes()
                .all(|b| b.is_ascii_alphanumeric() || matches!(b, b'_' | b'.' | b'-'))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    // Only for names assembled from already valid tokens.
    pub(crate) fn from_trusted(name: String) -> Self {
        debug_assert!(Self::is_valid_token(&name));
        VertexId(name)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for VertexId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        VertexId::new(s).map_err(serde::de::Error::custom)
    }
}

/// An unordered vertex pair stored with the smaller endpoint first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(VertexId, VertexId);

impl Edge {
    pub fn new(a: VertexId, b: VertexId) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge(a, b)),
            std::cmp::Ordering::Greater => Ok(Edge(b, a)),
            std::cmp::Ordering::Equal => Err(Error::LoopEdge(a.0)),
        }
    }

    pub fn first(&self) -> &VertexId {
        &self.0
    }

    pub fn second(&self) -> &VertexId {
        &self.1
    }

    pub fn contains(&self, v: &VertexId) -> bool {
        &self.0 == v || &self.1 == v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}--{}", self.0, self.1)
    }
}

impl Serialize for Edge {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [&self.0, &self.1].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Edge {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [a, b] = <[VertexId; 2]>::deserialize(d)?;
        Edge::new(a, b).map_err(serde::de::Error::custom)
    }
}

/// Simple finite undirected graph. Isolated vertices are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<VertexId>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

/// Result of a 2-colouring attempt.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub is_bipartite: bool,
    /// Side of each vertex (`false`/`true`) when the graph is bipartite.
    pub coloring: Option<BTreeMap<VertexId, bool>>,
}

impl Graph {
    /// Validating constructor. Duplicate vertices or edges are errors, not merged.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = VertexId>,
        E: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut vset = BTreeSet::new();
        for v in vertices {
            if let Some(dup) = vset.replace(v) {
                return Err(Error::DuplicateVertex(dup.0));
            }
        }
        let mut eset = BTreeSet::new();
        for (a, b) in edges {
            let e = Edge::new(a, b)?;
            if !vset.contains(&e.0) || !vset.contains(&e.1) {
                return Err(Error::UnknownEndpoint(e.0 .0, e.1 .0));
            }
            if eset.contains(&e) {
                return Err(Error::DuplicateEdge(e.0 .0, e.1 .0));
            }
            eset.insert(e);
        }
        Ok(Self::from_sets(vset, eset))
    }

    /// Convenience constructor from string slices; panics on invalid input.
    /// Intended for tests and examples.
    pub fn from_names(vertices: &[&str], edges: &[(&str, &str)]) -> Self {
        let vs = vertices
            .iter()
            .map(|v| VertexId::new(*v).expect("vertex name"));
        let es = edges.iter().map(|(a, b)| {
            (
                VertexId::new(*a).expect("vertex name"),
                VertexId::new(*b).expect("vertex name"),
            )
        });
        Graph::new(vs, es).expect("valid graph")
    }

    /// Builds from already-validated sets. Edge endpoints must be in `vertices`.
    pub(crate) fn from_sets(vertices: BTreeSet<VertexId>, edges: BTreeSet<Edge>) -> Self {
        let vertices: Vec<VertexId> = vertices.into_iter().collect();
        let index: BTreeMap<&VertexId, usize> =
            vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let mut adjacency = vec![Vec::new(); vertices.len()];
        let edges: Vec<(usize, usize)> = edges
            .iter()
            .map(|e| {
                let (i, j) = (index[&e.0], index[&e.1]);
                adjacency[i].push(j);
                adjacency[j].push(i);
                (i, j)
            })
            .collect();
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            vertices,
            edges,
            adjacency,
        }
    }

    pub fn empty() -> Self {
        Graph {
            vertices: Vec::new(),
            edges: Vec::new(),
            adjacency: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Vertices in sorted order; position in this slice is the vertex index.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// Edges as index pairs `(i, j)` with `i < j`, sorted.
    pub fn edge_indices(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges
            .iter()
            .map(|&(i, j)| Edge(self.vertices[i].clone(), self.vertices[j].clone()))
    }

    pub fn edge_set(&self) -> BTreeSet<Edge> {
        self.edges().collect()
    }

    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        self.vertices.iter().cloned().collect()
    }

    pub fn index_of(&self, v: &VertexId) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    pub fn contains_vertex(&self, v: &VertexId) -> bool {
        self.index_of(v).is_some()
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        match (self.index_of(&e.0), self.index_of(&e.1)) {
            (Some(i), Some(j)) => self.adjacency[i].binary_search(&j).is_ok(),
            _ => false,
        }
    }

    /// Sorted neighbour indices of vertex `i`.
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    pub fn is_isolated(&self, i: usize) -> bool {
        self.adjacency[i].is_empty()
    }

    /// Connected components as sorted index lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Breadth-first 2-colouring of every component.
    pub fn is_bipartite(&self) -> Bipartition {
        let n = self.vertex_count();
        let mut side: Vec<Option<bool>> = vec![None; n];
        for start in 0..n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &w in &self.adjacency[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => {
                            return Bipartition {
                                is_bipartite: false,
                                coloring: None,
                            };
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        let coloring = self
            .vertices
            .iter()
            .zip(side)
            .map(|(v, s)| (v.clone(), s.unwrap()))
            .collect();
        Bipartition {
            is_bipartite: true,
            coloring: Some(coloring),
        }
    }
}
