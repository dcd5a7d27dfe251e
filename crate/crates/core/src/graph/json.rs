use serde::{Deserialize, Serialize};

use super::{Graph, VertexId};
use crate::error::Result;

/// Wire form of a graph: `{"vertices": [...], "edges": [["a","b"], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<[VertexId; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            vertices: g.vertices().to_vec(),
            edges: g.edges().map(|e| [e.0, e.1]).collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = crate::Error;

    fn try_from(j: GraphJson) -> Result<Self> {
        Graph::new(j.vertices, j.edges.into_iter().map(|[a, b]| (a, b)))
    }
}

impl Graph {
    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: GraphJson = serde_json::from_str(s)?;
        Graph::try_from(j)
    }

    /// Canonical JSON: sorted vertices, each edge sorted, edges sorted.
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&GraphJson::from(self)).expect("serializable");
        s.push('\n');
        s
    }
}
