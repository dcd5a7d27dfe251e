use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::ops::{join, relabel, union};
use super::{Edge, Graph, VertexId};
use crate::error::{Error, Result};

/// Parameterised graph families.
///
/// `Path { len }` counts edges (`len + 1` vertices); cycles count vertices.
/// Composite families are joins of vertex-disjoint parts, see [`FamilySpec::join_parts`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    Path { len: usize },
    Cycle { n: usize },
    Complete { n: usize },
    Trivial { m: usize },
    Wheel { n: usize },
    Fan { m: usize, n: usize },
    Cone { m: usize, n: usize },
    Tent { m: usize, n: usize },
    Friendship { m: usize },
    PathFriendship { m: usize, n: usize },
    ClosedFriendship { m: usize, n: usize },
    Windmill { m: usize, n: usize },
}

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::ParamOutOfRange(what()))
    }
}

fn named(prefix: &str, i: usize) -> VertexId {
    VertexId::from_trusted(format!("{prefix}{i}"))
}

fn path(len: usize) -> Graph {
    let vs = (0..=len).map(|i| named("p", i)).collect();
    let es = (0..len)
        .map(|i| Edge::new(named("p", i), named("p", i + 1)).unwrap())
        .collect();
    Graph::from_sets(vs, es)
}

fn cycle(n: usize) -> Graph {
    let vs = (0..n).map(|i| named("c", i)).collect();
    let es = (0..n)
        .map(|i| Edge::new(named("c", i), named("c", (i + 1) % n)).unwrap())
        .collect();
    Graph::from_sets(vs, es)
}

fn complete(n: usize) -> Graph {
    let vs = (0..n).map(|i| named("k", i)).collect();
    let mut es = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            es.insert(Edge::new(named("k", i), named("k", j)).unwrap());
        }
    }
    Graph::from_sets(vs, es)
}

fn trivial(m: usize) -> Graph {
    Graph::from_sets((0..m).map(|i| named("t", i)).collect(), BTreeSet::new())
}

fn hub() -> Graph {
    Graph::from_sets(
        [VertexId::from_trusted("hub".into())].into(),
        BTreeSet::new(),
    )
}

/// `m` disjoint copies of `g`, copy `i` prefixed with `g<i>_`.
fn copies(g: &Graph, m: usize) -> Graph {
    (0..m).fold(Graph::empty(), |acc, i| {
        union(&acc, &relabel(g, &format!("g{i}_")).expect("valid prefix"))
    })
}

impl FamilySpec {
    /// Checks the parameter domain of the generator.
    pub fn validate(&self) -> Result<()> {
        use FamilySpec::*;
        match *self {
            Path { len } => check(len >= 1, || format!("path length must be >= 1, got {len}")),
            Cycle { n } => check(n >= 3, || format!("cycle needs n >= 3, got {n}")),
            Complete { n } => check(n >= 1, || format!("complete graph needs n >= 1, got {n}")),
            Trivial { m } => check(m >= 1, || format!("trivial graph needs m >= 1, got {m}")),
            Wheel { n } => check(n >= 3, || format!("wheel needs n >= 3, got {n}")),
            Fan { m, n } => check(m >= 1 && n >= 1, || {
                format!("fan needs m, n >= 1, got m={m} n={n}")
            }),
            Cone { m, n } | Tent { m, n } => check(m >= 1 && n >= 3, || {
                format!("{} needs m >= 1 and n >= 3, got m={m} n={n}", self.name())
            }),
            Friendship { m } => check(m >= 1, || format!("friendship needs m >= 1, got {m}")),
            PathFriendship { m, n } => check(m >= 1 && n >= 1, || {
                format!("path_friendship needs m, n >= 1, got m={m} n={n}")
            }),
            ClosedFriendship { m, n } => check(m >= 1 && n >= 3, || {
                format!("closed_friendship needs m >= 1 and n >= 3, got m={m} n={n}")
            }),
            Windmill { m, n } => check(m >= 1 && n >= 2, || {
                format!("windmill needs m >= 1 and n >= 2, got m={m} n={n}")
            }),
        }
    }

    pub fn name(&self) -> &'static str {
        use FamilySpec::*;
        match self {
            Path { .. } => "path",
            Cycle { .. } => "cycle",
            Complete { .. } => "complete",
            Trivial { .. } => "trivial",
            Wheel { .. } => "wheel",
            Fan { .. } => "fan",
            Cone { .. } => "cone",
            Tent { .. } => "tent",
            Friendship { .. } => "friendship",
            PathFriendship { .. } => "path_friendship",
            ClosedFriendship { .. } => "closed_friendship",
            Windmill { .. } => "windmill",
        }
    }

    /// The vertex-disjoint parts whose join is this family, or `None` for
    /// the basic (non-join) families.
    pub fn join_parts(&self) -> Result<Option<Vec<Graph>>> {
        self.validate()?;
        use FamilySpec::*;
        let parts = match *self {
            Path { .. } | Cycle { .. } | Complete { .. } | Trivial { .. } => return Ok(None),
            Wheel { n } => vec![cycle(n), hub()],
            Fan { m, n } => vec![path(n), trivial(m)],
            Cone { m, n } => vec![cycle(n), trivial(m)],
            Tent { m, n } => vec![cycle(n), hub(), trivial(m)],
            Friendship { m } => vec![hub(), copies(&complete(2), m)],
            PathFriendship { m, n } => vec![hub(), copies(&path(n), m)],
            ClosedFriendship { m, n } => vec![hub(), copies(&cycle(n), m)],
            Windmill { m, n } => vec![hub(), copies(&complete(n), m)],
        };
        Ok(Some(parts))
    }

    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        use FamilySpec::*;
        match *self {
            Path { len } => Ok(path(len)),
            Cycle { n } => Ok(cycle(n)),
            Complete { n } => Ok(complete(n)),
            Trivial { m } => Ok(trivial(m)),
            _ => join(&self.join_parts()?.expect("composite family")),
        }
    }

    /// Vertex count of the generated graph, without building it.
    pub fn vertex_count(&self) -> usize {
        use FamilySpec::*;
        match *self {
            Path { len } => len + 1,
            Cycle { n } | Complete { n } => n,
            Trivial { m } => m,
            Wheel { n } => n + 1,
            Fan { m, n } => n + 1 + m,
            Cone { m, n } => n + m,
            Tent { m, n } => n + 1 + m,
            Friendship { m } => 2 * m + 1,
            PathFriendship { m, n } => m * (n + 1) + 1,
            ClosedFriendship { m, n } | Windmill { m, n } => m * n + 1,
        }
    }
}
