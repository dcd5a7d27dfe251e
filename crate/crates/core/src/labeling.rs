//! Sumsets, set-labelings and the IASI verifier.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};

/// A finite non-empty set of non-negative integers, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetLabel(Vec<BigUint>);

impl SetLabel {
    /// Builds a label from any collection; duplicates collapse, emptiness is rejected.
    pub fn new<I, T>(elements: I) -> Option<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigUint>,
    {
        let set: BTreeSet<BigUint> = elements.into_iter().map(Into::into).collect();
        (!set.is_empty()).then(|| SetLabel(set.into_iter().collect()))
    }

    pub fn singleton(x: impl Into<BigUint>) -> Self {
        SetLabel(vec![x.into()])
    }

    /// Accepts only strictly increasing, non-empty sequences.
    pub fn from_sorted(elements: Vec<BigUint>, owner: &str) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::EmptyLabel(owner.to_string()));
        }
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NonIncreasingLabel(owner.to_string()));
        }
        Ok(SetLabel(elements))
    }

    pub fn elements(&self) -> &[BigUint] {
        &self.0
    }

    /// Set-indexing number.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_singleton(&self) -> bool {
        self.0.len() == 1
    }
}

impl fmt::Display for SetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for SetLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let numbers: Vec<serde_json::Number> = self
            .0
            .iter()
            .map(|x| serde_json::Number::from_str(&x.to_string()).expect("decimal integer"))
            .collect();
        numbers.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SetLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let numbers = Vec::<serde_json::Number>::deserialize(d)?;
        let elements = numbers
            .iter()
            .map(|n| {
                let text = n.to_string();
                BigUint::from_str(&text)
                    .map_err(|_| D::Error::custom(format!("{text} is not a non-negative integer")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        SetLabel::from_sorted(elements, "label").map_err(D::Error::custom)
    }
}

/// `A + B = {a + b : a ∈ A, b ∈ B}`.
pub fn sumset(a: &SetLabel, b: &SetLabel) -> SetLabel {
    let sums: BTreeSet<BigUint> =
        a.0.iter()
            .flat_map(|x| b.0.iter().map(move |y| x + y))
            .collect();
    SetLabel(sums.into_iter().collect())
}

/// Vertex-to-set assignment. Injectivity is judged by [`verify`], not enforced here,
/// so that defective labelings can still be loaded and reported on.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Labeling {
    pub labels: BTreeMap<VertexId, SetLabel>,
}

impl Labeling {
    pub fn get(&self, v: &VertexId) -> Option<&SetLabel> {
        self.labels.get(v)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}

impl FromIterator<(VertexId, SetLabel)> for Labeling {
    fn from_iter<I: IntoIterator<Item = (VertexId, SetLabel)>>(iter: I) -> Self {
        Labeling {
            labels: iter.into_iter().collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeIndexingNumber {
    pub edge: Edge,
    pub indexing_number: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub is_iasi: bool,
    pub is_weak: bool,
    pub is_strong: bool,
    pub uniform_k: Option<usize>,
    pub mono_indexed_vertices: BTreeSet<VertexId>,
    pub mono_indexed_edges: BTreeSet<Edge>,
    #[serde(serialize_with = "serialize_indexing_numbers")]
    pub edge_indexing_numbers: BTreeMap<Edge, usize>,
}

fn serialize_indexing_numbers<S: serde::Serializer>(
    map: &BTreeMap<Edge, usize>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let entries: Vec<EdgeIndexingNumber> = map
        .iter()
        .map(|(e, &k)| EdgeIndexingNumber {
            edge: e.clone(),
            indexing_number: k,
        })
        .collect();
    entries.serialize(s)
}

impl VerifyReport {
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}

/// Classifies `f` on `g`.
///
/// Every vertex with an incident edge must be labelled. Labels on isolated
/// vertices take part in the vertex-injectivity check only.
pub fn verify(g: &Graph, f: &Labeling) -> Result<VerifyReport> {
    if let Some(v) = f.labels.keys().find(|v| !g.contains_vertex(v)) {
        return Err(Error::UnknownVertex(v.to_string()));
    }
    let mut labels: Vec<Option<&SetLabel>> = Vec::with_capacity(g.vertex_count());
    for (i, v) in g.vertices().iter().enumerate() {
        let l = f.get(v);
        if l.is_none() && !g.is_isolated(i) {
            return Err(Error::MissingLabel(v.to_string()));
        }
        labels.push(l);
    }

    let distinct: BTreeSet<&SetLabel> = f.labels.values().collect();
    let vertex_injective = distinct.len() == f.labels.len();

    let mut seen: HashSet<SetLabel> = HashSet::new();
    let mut edge_injective = true;
    let mut weak = true;
    let mut strong = true;
    let mut numbers = BTreeMap::new();
    let mut mono_edges = BTreeSet::new();
    for (e, &(i, j)) in g.edges().zip(g.edge_indices()) {
        let (a, b) = (labels[i].unwrap(), labels[j].unwrap());
        let s = sumset(a, b);
        let k = s.len();
        weak &= k == a.len().max(b.len());
        strong &= k == a.len() * b.len();
        if k == 1 {
            mono_edges.insert(e.clone());
        }
        numbers.insert(e, k);
        if !seen.insert(s) {
            edge_injective = false;
        }
    }

    let is_iasi = vertex_injective && edge_injective;
    let mut ks = numbers.values();
    let uniform_k = ks.next().copied().filter(|&k0| ks.all(|&k| k == k0));
    let mono_indexed_vertices = f
        .labels
        .iter()
        .filter(|(_, l)| l.is_singleton())
        .map(|(v, _)| v.clone())
        .collect();
    Ok(VerifyReport {
        is_iasi,
        is_weak: is_iasi && weak,
        is_strong: is_iasi && strong,
        uniform_k,
        mono_indexed_vertices,
        mono_indexed_edges: mono_edges,
        edge_indexing_numbers: numbers,
    })
}

/// Number of edges with set-indexing number 1 under an IASI.
pub fn mono_indexed_edge_count(g: &Graph, f: &Labeling) -> Result<usize> {
    let report = verify(g, f)?;
    if !report.is_iasi {
        return Err(Error::NotIasi);
    }
    Ok(report.mono_indexed_edges.len())
}
