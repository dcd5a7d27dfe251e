//! Exact sparing numbers.
//!
//! In a weak IASI every edge has a singleton-labelled endpoint, so the
//! vertices carrying larger labels form an independent set (the *support*).
//! An edge is mono-indexed exactly when neither endpoint is in the support.
//! The sparing number is therefore the minimum, over independent sets `S`,
//! of the number of edges with no endpoint in `S`; [`construct_weak_iasi`]
//! shows that every independent set is realised by an actual weak IASI.

mod branch;
mod construct;
mod exhaustive;
mod mask;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};
use crate::labeling::Labeling;

use branch::AnyComponent;

pub use construct::{construct_weak_iasi, LABEL_BASE};

pub const DEFAULT_EXHAUSTIVE_CAP: usize = 22;
/// `Auto` uses exhaustive enumeration up to this many vertices.
pub const AUTO_EXHAUSTIVE_MAX: usize = 16;

/// Vertices designated to receive non-singleton labels.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Support {
    pub members: BTreeSet<VertexId>,
}

impl Support {
    pub fn new(members: impl IntoIterator<Item = VertexId>) -> Self {
        Support {
            members: members.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: &VertexId) -> bool {
        self.members.contains(v)
    }

    /// `Err(NotIndependent)` names the first edge inside the support.
    pub fn check_independent(&self, g: &Graph) -> Result<()> {
        for v in &self.members {
            if !g.contains_vertex(v) {
                return Err(Error::UnknownVertex(v.to_string()));
            }
        }
        match g
            .edges()
            .find(|e| self.contains(e.first()) && self.contains(e.second()))
        {
            Some(e) => Err(Error::NotIndependent(
                e.first().to_string(),
                e.second().to_string(),
            )),
            None => Ok(()),
        }
    }

    fn from_indices(g: &Graph, idx: impl IntoIterator<Item = usize>) -> Self {
        Support::new(idx.into_iter().map(|i| g.vertices()[i].clone()))
    }

    fn from_mask(g: &Graph, mask: u64) -> Self {
        Support::from_indices(g, (0..g.vertex_count()).filter(|i| mask >> i & 1 == 1))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Algorithm {
    #[serde(rename = "exhaustive")]
    Exhaustive,
    #[serde(rename = "bb")]
    BranchBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SparingResult {
    pub phi: usize,
    pub witness: Support,
    pub mono_edges: BTreeSet<Edge>,
    pub algorithm: Algorithm,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labeling: Option<Labeling>,
}

impl SparingResult {
    fn new(g: &Graph, phi: usize, witness: Support, algorithm: Algorithm) -> Self {
        let mono_edges = uncovered_edges(g, &witness);
        debug_assert_eq!(mono_edges.len(), phi);
        SparingResult {
            phi,
            witness,
            mono_edges,
            algorithm,
            labeling: None,
        }
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}

/// Edges with neither endpoint in the support.
pub fn uncovered_edges(g: &Graph, support: &Support) -> BTreeSet<Edge> {
    g.edges()
        .filter(|e| !support.contains(e.first()) && !support.contains(e.second()))
        .collect()
}

/// Enumerates every independent set (at most `cap` vertices) and returns the
/// lexicographically smallest optimal one.
pub fn phi_exhaustive(g: &Graph) -> Result<SparingResult> {
    phi_exhaustive_with_cap(g, DEFAULT_EXHAUSTIVE_CAP)
}

pub fn phi_exhaustive_with_cap(g: &Graph, cap: usize) -> Result<SparingResult> {
    let (phi, mask) = exhaustive::minimize(g, cap)?;
    Ok(SparingResult::new(
        g,
        phi,
        Support::from_mask(g, mask),
        Algorithm::Exhaustive,
    ))
}

/// Distinct uncovered-edge counts over all independent sets (at most 64 vertices).
pub fn uncovered_counts(g: &Graph) -> Result<BTreeSet<usize>> {
    let mut out = BTreeSet::new();
    exhaustive::for_each_independent_set(g, |_, uncovered| {
        out.insert(uncovered);
    })?;
    Ok(out)
}

struct Solved {
    members: Vec<usize>,
    solver: AnyComponent,
    phi: usize,
    best: Vec<usize>,
}

fn solve_components(g: &Graph) -> Vec<Solved> {
    g.components()
        .into_iter()
        .filter(|c| c.len() > 1)
        .map(|members| {
            let solver = AnyComponent::induced(g, &members);
            let (phi, best) = solver
                .solve(&[], &[], None)
                .expect("unconstrained search is feasible");
            Solved {
                members,
                solver,
                phi,
                best,
            }
        })
        .collect()
}

/// Branch and bound, one connected component at a time. With `canonicalize`
/// the witness is the lexicographically smallest optimal support, otherwise
/// it is some optimal support.
pub fn phi_branch_bound(g: &Graph, canonicalize: bool) -> SparingResult {
    let comps = solve_components(g);
    let phi = comps.iter().map(|c| c.phi).sum();
    let witness = if canonicalize {
        canonical_support(g, &comps, phi)
    } else {
        Support::from_indices(
            g,
            comps
                .iter()
                .flat_map(|c| c.best.iter().map(|&l| c.members[l])),
        )
    };
    SparingResult::new(g, phi, witness, Algorithm::BranchBound)
}

/// Decides vertices in sorted order. At each step the current prefix is
/// returned if it is already optimal on its own; otherwise the next vertex
/// joins the support whenever some optimal support extends that choice.
fn canonical_support(g: &Graph, comps: &[Solved], phi: usize) -> Support {
    let n = g.vertex_count();
    let mut comp_of = vec![None; n];
    for (ci, c) in comps.iter().enumerate() {
        for (l, &u) in c.members.iter().enumerate() {
            comp_of[u] = Some((ci, l));
        }
    }
    let mut decided: Vec<Option<bool>> = vec![None; n];
    let mut chosen: Vec<usize> = Vec::new();
    let mut blocked = vec![false; n];
    for pos in 0..n {
        let uncovered = g
            .edge_indices()
            .iter()
            .filter(|&&(i, j)| decided[i] != Some(true) && decided[j] != Some(true))
            .count();
        if uncovered == phi {
            break;
        }
        let take = !blocked[pos]
            && match comp_of[pos] {
                None => true,
                Some((ci, _)) => {
                    let c = &comps[ci];
                    let mut forced_in = Vec::new();
                    let mut forced_out = Vec::new();
                    for (l, &u) in c.members.iter().enumerate() {
                        match decided[u] {
                            Some(true) => forced_in.push(l),
                            Some(false) => forced_out.push(l),
                            None if u == pos => forced_in.push(l),
                            None => {}
                        }
                    }
                    c.solver
                        .solve(&forced_in, &forced_out, Some(c.phi))
                        .is_some()
                }
            };
        decided[pos] = Some(take);
        if take {
            chosen.push(pos);
            for &w in g.neighbors(pos) {
                blocked[w] = true;
            }
        }
    }
    Support::from_indices(g, chosen)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AlgorithmChoice {
    /// Exhaustive up to [`AUTO_EXHAUSTIVE_MAX`] vertices, branch and bound above.
    #[default]
    Auto,
    Exhaustive,
    BranchBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SparingOptions {
    pub algorithm: AlgorithmChoice,
    pub with_labeling: bool,
    pub canonical_witness: bool,
    pub exhaustive_cap: usize,
}

impl Default for SparingOptions {
    fn default() -> Self {
        SparingOptions {
            algorithm: AlgorithmChoice::Auto,
            with_labeling: false,
            canonical_witness: false,
            exhaustive_cap: DEFAULT_EXHAUSTIVE_CAP,
        }
    }
}

pub fn sparing(g: &Graph, opts: &SparingOptions) -> Result<SparingResult> {
    let exhaustive = match opts.algorithm {
        AlgorithmChoice::Exhaustive => true,
        AlgorithmChoice::BranchBound => false,
        AlgorithmChoice::Auto => g.vertex_count() <= AUTO_EXHAUSTIVE_MAX.min(opts.exhaustive_cap),
    };
    let mut result = if exhaustive {
        phi_exhaustive_with_cap(g, opts.exhaustive_cap)?
    } else {
        phi_branch_bound(g, opts.canonical_witness)
    };
    if opts.with_labeling {
        result.labeling = Some(construct_weak_iasi(g, &result.witness)?);
    }
    Ok(result)
}
