//! Inputs shared by the benchmarks.

use iasi_core::audit::random_graph;
use iasi_core::{FamilySpec, Graph};

/// Named graphs spanning both solver regimes.
pub fn workloads() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = [
        FamilySpec::Cycle { n: 15 },
        FamilySpec::Tent { m: 4, n: 10 },
        FamilySpec::Windmill { m: 4, n: 4 },
        FamilySpec::Complete { n: 12 },
    ]
    .into_iter()
    .map(|f| (format!("{f:?}"), f.generate().unwrap()))
    .collect();
    for n in [20, 30, 40] {
        out.push((format!("gnp({n},20)"), random_graph(n, 20, 7)));
    }
    out
}
