//! Sweeps that compare every closed form against the exact solver.
//!
//! Mismatches are ordinary output rows. Rows come back in a canonical order
//! (family, then parameters in nested-loop order), so reports are stable.

use std::collections::BTreeSet;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::closed_forms::{
    params, phi_complement_identity, phi_formula, phi_ringsum_identity, phi_union_identity,
    ringsum_cycles_predict, ringsum_cycles_realizable, FormulaId, Params, Parity,
};
use crate::error::Result;
use crate::graph::{
    intersection, is_subgraph, relabel, ring_sum, union, FamilySpec, Graph, GraphJson, VertexId,
};
use crate::solver::{sparing, uncovered_counts, SparingOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Match,
    Mismatch,
    FormulaRefused,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
            Verdict::FormulaRefused => "formula_refused",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditRow {
    pub family: FormulaId,
    pub instance_desc: String,
    pub params: Params,
    pub formula_value: Option<u64>,
    pub oracle_value: u64,
    pub verdict: Verdict,
    pub runtime_ms: u64,
}

impl AuditRow {
    fn new(
        family: FormulaId,
        instance_desc: String,
        params: Params,
        formula_value: Option<u64>,
        oracle_value: u64,
        started: Instant,
    ) -> Self {
        let verdict = match formula_value {
            None => Verdict::FormulaRefused,
            Some(f) if f == oracle_value => Verdict::Match,
            Some(_) => Verdict::Mismatch,
        };
        AuditRow {
            family,
            instance_desc,
            params,
            formula_value,
            oracle_value,
            verdict,
            runtime_ms: started.elapsed().as_millis() as u64,
        }
    }
}

fn oracle(g: &Graph) -> u64 {
    // Auto switches to branch and bound above the exhaustive range, so no size error.
    sparing(g, &SparingOptions::default())
        .expect("auto solver has no size limit")
        .phi as u64
}

fn family_spec(id: FormulaId, p: &Params) -> Option<FamilySpec> {
    let m = p.get("m").map(|&v| v as usize);
    let n = p.get("n").map(|&v| v as usize);
    Some(match id {
        FormulaId::Cycle => FamilySpec::Cycle { n: n? },
        FormulaId::Complete => FamilySpec::Complete { n: n? },
        FormulaId::Bipartite => match p.get("len") {
            Some(&len) => FamilySpec::Path { len: len as usize },
            None => FamilySpec::Cycle { n: n? },
        },
        FormulaId::Fan => FamilySpec::Fan { m: m?, n: n? },
        FormulaId::Cone => FamilySpec::Cone { m: m?, n: n? },
        FormulaId::Tent => FamilySpec::Tent { m: m?, n: n? },
        FormulaId::Friendship => FamilySpec::Friendship { m: m? },
        FormulaId::PathFriendship => FamilySpec::PathFriendship { m: m?, n: n? },
        FormulaId::ClosedFriendship => FamilySpec::ClosedFriendship { m: m?, n: n? },
        FormulaId::Windmill => FamilySpec::Windmill { m: m?, n: n? },
        _ => return None,
    })
}

/// Parameter tuples inside the formula's hypotheses whose graphs have at
/// most `max_vertices` vertices, in canonical order.
pub fn family_params(id: FormulaId, max_vertices: usize) -> Vec<Params> {
    let max = max_vertices as u64;
    let mut out = Vec::new();
    let mut grid = |m_min: u64, n_min: u64, size: &dyn Fn(u64, u64) -> u64| {
        let mut m = m_min;
        while size(m, n_min) <= max {
            let mut n = n_min;
            while size(m, n) <= max {
                out.push(params([("m", m), ("n", n)]));
                n += 1;
            }
            m += 1;
        }
    };
    match id {
        FormulaId::Fan => grid(2, 2, &|m, n| n + 1 + m),
        FormulaId::Cone => grid(2, 3, &|m, n| n + m),
        FormulaId::Tent => grid(2, 3, &|m, n| n + 1 + m),
        FormulaId::PathFriendship => grid(2, 2, &|m, n| m * (n + 1) + 1),
        FormulaId::ClosedFriendship => grid(2, 3, &|m, n| m * n + 1),
        FormulaId::Windmill => grid(2, 2, &|m, n| m * n + 1),
        FormulaId::Cycle => out.extend((3..=max).map(|n| params([("n", n)]))),
        FormulaId::Complete => out.extend((2..=max).map(|n| params([("n", n)]))),
        FormulaId::Friendship => out.extend(
            (2..)
                .take_while(|m| 2 * m < max)
                .map(|m| params([("m", m)])),
        ),
        FormulaId::Bipartite => {
            out.extend((1..max).map(|len| params([("len", len)])));
            out.extend((4..=max).step_by(2).map(|n| params([("n", n)])));
        }
        _ => {}
    }
    out
}

/// One row per family instance with at most `max_vertices` vertices.
/// Non-family ids in `families` are ignored.
pub fn audit_families(max_vertices: usize, families: &[FormulaId]) -> Vec<AuditRow> {
    let wanted: BTreeSet<FormulaId> = families.iter().copied().collect();
    let mut rows = Vec::new();
    for id in FormulaId::FAMILIES
        .into_iter()
        .filter(|id| wanted.contains(id))
    {
        for p in family_params(id, max_vertices) {
            let started = Instant::now();
            let spec = family_spec(id, &p).expect("family parameters");
            let g = spec.generate().expect("in-range parameters");
            let formula = phi_formula(id, &p).ok();
            let desc = match id {
                FormulaId::Bipartite => format!("{id}:{}", spec.name()),
                _ => id.to_string(),
            };
            rows.push(AuditRow::new(id, desc, p, formula, oracle(&g), started));
        }
    }
    rows
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    Union,
    Ringsum,
    Complement,
}

impl Identity {
    pub fn formula_id(self) -> FormulaId {
        match self {
            Identity::Union => FormulaId::UnionIdentity,
            Identity::Ringsum => FormulaId::RingsumIdentity,
            Identity::Complement => FormulaId::ComplementIdentity,
        }
    }
}

/// A graph pair fed to an identity audit. For the complement identity `g2`
/// is meant to be a subgraph of `g1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityInstance {
    pub name: String,
    pub params: Params,
    pub g1: Graph,
    pub g2: Graph,
}

impl IdentityInstance {
    pub fn new(name: impl Into<String>, g1: Graph, g2: Graph) -> Self {
        IdentityInstance {
            name: name.into(),
            params: Params::new(),
            g1,
            g2,
        }
    }

    /// The graph whose sparing number the identity predicts.
    pub fn composed(&self, which: Identity) -> Graph {
        match which {
            Identity::Union => union(&self.g1, &self.g2),
            Identity::Ringsum | Identity::Complement => ring_sum(&self.g1, &self.g2),
        }
    }
}

pub fn audit_identity(which: Identity, instances: &[IdentityInstance]) -> Vec<AuditRow> {
    let id = which.formula_id();
    instances
        .iter()
        .map(|inst| {
            let started = Instant::now();
            let phi1 = oracle(&inst.g1);
            let phi2 = oracle(&inst.g2);
            let mut p = inst.params.clone();
            let formula = match which {
                Identity::Union | Identity::Ringsum => {
                    let phi_cap = oracle(&intersection(&inst.g1, &inst.g2));
                    p.extend(params([
                        ("phi1", phi1),
                        ("phi2", phi2),
                        ("phi_cap", phi_cap),
                    ]));
                    if which == Identity::Union {
                        phi_union_identity(phi1, phi2, phi_cap)
                    } else {
                        phi_ringsum_identity(phi1, phi2, phi_cap)
                    }
                    .ok()
                }
                Identity::Complement => {
                    p.extend(params([("phi_g", phi1), ("phi_h", phi2)]));
                    if is_subgraph(&inst.g2, &inst.g1) {
                        phi_complement_identity(phi1, phi2).ok()
                    } else {
                        None
                    }
                }
            };
            let value = oracle(&inst.composed(which));
            AuditRow::new(
                id,
                format!("{id}:{}", inst.name),
                p,
                formula,
                value,
                started,
            )
        })
        .collect()
}

fn triangle(a: &str, b: &str, c: &str) -> Graph {
    Graph::from_names(&[a, b, c], &[(a, b), (b, c), (a, c)])
}

fn small_pool() -> Vec<(String, Graph)> {
    let mut pool: Vec<(String, Graph)> = (3..=6)
        .map(|n| (format!("C{n}"), FamilySpec::Cycle { n }.generate().unwrap()))
        .collect();
    for n in [3, 4] {
        pool.push((
            format!("K{n}"),
            FamilySpec::Complete { n }.generate().unwrap(),
        ));
    }
    pool
}

/// Unordered pairs (with repetition) from {C3..C6, K3, K4}, made vertex-disjoint.
pub fn vertex_disjoint_pairs() -> Vec<IdentityInstance> {
    let pool = small_pool();
    let mut out = Vec::new();
    for (i, (na, a)) in pool.iter().enumerate() {
        for (nb, b) in &pool[i..] {
            out.push(IdentityInstance::new(
                format!("disjoint_{na}+{nb}"),
                relabel(a, "l_").unwrap(),
                relabel(b, "r_").unwrap(),
            ));
        }
    }
    out
}

/// Fixed instances: the known counterexamples first, then a regime in
/// which the identity reduces to additivity over components.
pub fn identity_catalog(which: Identity) -> Vec<IdentityInstance> {
    let mut out = Vec::new();
    match which {
        Identity::Union => {
            out.push(IdentityInstance::new(
                "diamond",
                triangle("a", "b", "c"),
                triangle("a", "b", "d"),
            ));
            out.extend(vertex_disjoint_pairs());
        }
        Identity::Ringsum => {
            out.push(IdentityInstance::new(
                "triangles_sharing_edge",
                triangle("a", "b", "c"),
                triangle("a", "b", "d"),
            ));
            out.extend(vertex_disjoint_pairs());
        }
        Identity::Complement => {
            out.push(IdentityInstance::new(
                "k3_minus_2path",
                triangle("a", "b", "c"),
                Graph::from_names(&["a", "b", "c"], &[("a", "b"), ("b", "c")]),
            ));
            for inst in vertex_disjoint_pairs() {
                let whole = union(&inst.g1, &inst.g2);
                let name = inst.name.replacen("disjoint_", "component_", 1);
                out.push(IdentityInstance::new(name, whole, inst.g1));
            }
        }
    }
    out
}

/// `G(n, p)` on vertices `v00, v01, ...`, reproducible from `seed`.
pub fn random_graph(n: usize, p_percent: u32, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_graph_with(n, p_percent, &mut rng)
}

fn vertex(i: usize) -> VertexId {
    VertexId::new(format!("v{i:02}")).unwrap()
}

fn random_graph_with(n: usize, p_percent: u32, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_range(0..100) < p_percent {
                edges.push((vertex(i), vertex(j)));
            }
        }
    }
    Graph::new((0..n).map(vertex), edges).unwrap()
}

pub const EDGE_PERCENTS: [u32; 3] = [20, 40, 60];

/// `trials` random pairs on 4 to 8 shared vertices. Row `t` uses seed
/// `seed + t`, recorded in its parameters for replay.
pub fn random_identity_instances(
    which: Identity,
    trials: usize,
    seed: u64,
) -> Vec<IdentityInstance> {
    (0..trials)
        .map(|t| {
            let row_seed = seed.wrapping_add(t as u64);
            let p = EDGE_PERCENTS[t % EDGE_PERCENTS.len()];
            let mut rng = ChaCha8Rng::seed_from_u64(row_seed);
            let n = rng.gen_range(4..=8);
            let g1 = random_graph_with(n, p, &mut rng);
            let g2 = match which {
                Identity::Union | Identity::Ringsum => random_graph_with(n, p, &mut rng),
                Identity::Complement => {
                    let kept: Vec<_> = g1
                        .edges()
                        .filter(|_| rng.gen_bool(0.5))
                        .map(|e| (e.first().clone(), e.second().clone()))
                        .collect();
                    Graph::new(g1.vertices().iter().cloned(), kept).unwrap()
                }
            };
            let mut inst = IdentityInstance::new(format!("random_seed{row_seed}"), g1, g2);
            inst.params = params([("seed", row_seed), ("n", n as u64), ("p_percent", p as u64)]);
            inst
        })
        .collect()
}

/// Two cycles `C_m`, `C_n` sharing a path of `shared` edges (vertex-disjoint
/// when `shared == 0`).
pub fn overlapping_cycles(m: usize, n: usize, shared: usize) -> (Graph, Graph) {
    let cyc = |ring: Vec<String>| {
        let vs: Vec<&str> = ring.iter().map(String::as_str).collect();
        let es: Vec<(&str, &str)> = (0..vs.len())
            .map(|i| (vs[i], vs[(i + 1) % vs.len()]))
            .collect();
        Graph::from_names(&vs, &es)
    };
    if shared == 0 {
        return (
            cyc((0..m).map(|i| format!("a{i}")).collect()),
            cyc((0..n).map(|i| format!("b{i}")).collect()),
        );
    }
    let path: Vec<String> = (0..=shared).map(|i| format!("s{i}")).collect();
    let arc = |prefix: &str, len: usize| -> Vec<String> {
        let mut ring = path.clone();
        ring.extend((1..len - shared).map(|i| format!("{prefix}{i}")));
        ring
    };
    (cyc(arc("a", m)), cyc(arc("b", n)))
}

/// Every realizable `(m, n, shared)` with `3 <= m <= n <= max_cycle`.
pub fn audit_ringsum_cycles(max_cycle: usize) -> Vec<AuditRow> {
    let mut rows = Vec::new();
    for m in 3..=max_cycle {
        for n in m..=max_cycle {
            for shared in 0..m {
                if !ringsum_cycles_realizable(m as u64, n as u64, shared as u64) {
                    continue;
                }
                let started = Instant::now();
                let predicted = ringsum_cycles_predict(m as u64, n as u64, shared as u64).unwrap();
                let (cm, cn) = overlapping_cycles(m, n, shared);
                let ring = ring_sum(&cm, &cn);
                let phi = oracle(&ring);
                // the parity claim covers every weak IASI, i.e. every independent support
                let parities: BTreeSet<Parity> = uncovered_counts(&ring)
                    .expect("ring sum of two cycles fits a machine word")
                    .into_iter()
                    .map(|c| Parity::of(c as u64))
                    .collect();
                let parity_ok = parities == BTreeSet::from([predicted.mono_parity]);
                let p = params([("m", m as u64), ("n", n as u64), ("shared", shared as u64)]);
                let mut row = AuditRow::new(
                    FormulaId::RingsumCycles,
                    FormulaId::RingsumCycles.to_string(),
                    p,
                    Some(predicted.phi),
                    phi,
                    started,
                );
                if !parity_ok {
                    row.verdict = Verdict::Mismatch;
                }
                rows.push(row);
            }
        }
    }
    rows
}

fn params_cell(p: &Params) -> String {
    p.iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(";")
}

/// CSV with header `family,params,formula,oracle,verdict,runtime_ms`. Without
/// `timings` the runtime column is written as 0 so reports are reproducible.
pub fn to_csv(rows: &[AuditRow], timings: bool) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record([
        "family",
        "params",
        "formula",
        "oracle",
        "verdict",
        "runtime_ms",
    ])
    .unwrap();
    for r in rows {
        w.write_record([
            r.instance_desc.clone(),
            params_cell(&r.params),
            r.formula_value.map(|v| v.to_string()).unwrap_or_default(),
            r.oracle_value.to_string(),
            r.verdict.as_str().to_string(),
            if timings { r.runtime_ms } else { 0 }.to_string(),
        ])
        .unwrap();
    }
    String::from_utf8(w.into_inner().unwrap()).unwrap()
}

/// One table per family or identity, each followed by `N rows, M mismatches`.
pub fn to_markdown(title: &str, rows: &[AuditRow]) -> String {
    let mut out = format!("# {title}\n");
    let mut order: Vec<FormulaId> = Vec::new();
    for r in rows {
        if !order.contains(&r.family) {
            order.push(r.family);
        }
    }
    for id in order {
        let group: Vec<&AuditRow> = rows.iter().filter(|r| r.family == id).collect();
        out.push_str(&format!("\n## {id}\n\n| instance | params | formula | oracle | verdict |\n|---|---|---|---|---|\n"));
        for r in &group {
            let formula = r
                .formula_value
                .map(|v| v.to_string())
                .unwrap_or_else(|| "-".into());
            out.push_str(&format!(
                "| {} | {} | {} | {} | {} |\n",
                r.instance_desc,
                params_cell(&r.params),
                formula,
                r.oracle_value,
                r.verdict.as_str()
            ));
        }
        let mismatches = group
            .iter()
            .filter(|r| r.verdict == Verdict::Mismatch)
            .count();
        out.push_str(&format!(
            "\n{} rows, {} mismatches\n",
            group.len(),
            mismatches
        ));
    }
    out
}

/// A mismatching identity instance, stored with both operands.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub identity: FormulaId,
    pub instance: String,
    pub params: Params,
    pub formula: Option<u64>,
    pub oracle: u64,
    pub g1: GraphJson,
    pub g2: GraphJson,
    pub composed: GraphJson,
}

impl Counterexample {
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn file_name(&self) -> String {
        let clean: String = self
            .instance
            .chars()
            .map(|c| {
                if c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.') {
                    c
                } else {
                    '-'
                }
            })
            .collect();
        format!("{}__{clean}.json", self.identity)
    }
}

/// Pairs each mismatching row with its instance. `rows` must come from
/// `audit_identity(which, instances)`.
pub fn counterexamples(
    which: Identity,
    instances: &[IdentityInstance],
    rows: &[AuditRow],
) -> Vec<Counterexample> {
    instances
        .iter()
        .zip(rows)
        .filter(|(_, r)| r.verdict == Verdict::Mismatch)
        .map(|(inst, r)| Counterexample {
            identity: which.formula_id(),
            instance: inst.name.clone(),
            params: r.params.clone(),
            formula: r.formula_value,
            oracle: r.oracle_value,
            g1: GraphJson::from(&inst.g1),
            g2: GraphJson::from(&inst.g2),
            composed: GraphJson::from(&inst.composed(which)),
        })
        .collect()
}

pub fn write_counterexamples(dir: &Path, list: &[Counterexample]) -> io::Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    list.iter()
        .map(|c| {
            let path = dir.join(c.file_name());
            fs::write(&path, c.to_json_string())?;
            Ok(path)
        })
        .collect()
}

/// Runs the catalog plus `trials` random instances for one identity.
pub fn identity_sweep(
    which: Identity,
    trials: usize,
    seed: u64,
) -> Result<(Vec<IdentityInstance>, Vec<AuditRow>)> {
    let mut instances = identity_catalog(which);
    instances.extend(random_identity_instances(which, trials, seed));
    let rows = audit_identity(which, &instances);
    Ok((instances, rows))
}
