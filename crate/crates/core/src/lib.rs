//! Integer additive set-indexers: graphs, set labelings, the sparing number
//! and an audit harness for closed forms.

pub mod audit;
pub mod closed_forms;
pub mod error;
pub mod export;
pub mod graph;
pub mod labeling;
pub mod solver;

pub use error::{Error, Result};
pub use graph::{Edge, FamilySpec, Graph, GraphJson, VertexId};
pub use labeling::{sumset, verify, Labeling, SetLabel, VerifyReport};
pub use solver::{sparing, Algorithm, AlgorithmChoice, SparingOptions, SparingResult, Support};
