mod common;

use std::fs;
use std::path::Path;

use iasi_core::audit::{
    audit_families, audit_identity, counterexamples, identity_catalog, identity_sweep, to_csv,
    to_markdown, write_counterexamples, Identity, Verdict,
};
use iasi_core::closed_forms::FormulaId;
use iasi_core::graph::{ring_sum, union};
use iasi_core::Graph;

const ARCHIVE: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/counterexamples");
const WHICH: [Identity; 3] = [Identity::Union, Identity::Ringsum, Identity::Complement];

#[test]
fn catalog_mismatches_match_the_archive() {
    let dir = tempfile::tempdir().unwrap();
    for which in WHICH {
        let instances = identity_catalog(which);
        let rows = audit_identity(which, &instances);
        let found = counterexamples(which, &instances, &rows);
        assert_eq!(found.len(), 1);
        for path in write_counterexamples(dir.path(), &found).unwrap() {
            let name = path.file_name().unwrap();
            let golden = fs::read_to_string(Path::new(ARCHIVE).join(name)).unwrap();
            assert_eq!(fs::read_to_string(&path).unwrap(), golden, "{name:?}");
        }
    }
    assert_eq!(fs::read_dir(ARCHIVE).unwrap().count(), 3);
}

#[test]
fn archived_values_reproduce_by_brute_force() {
    for entry in fs::read_dir(ARCHIVE).unwrap() {
        let text = fs::read_to_string(entry.unwrap().path()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        let load = |k: &str| Graph::from_json_str(&v[k].to_string()).unwrap();
        let (g1, g2, composed) = (load("g1"), load("g2"), load("composed"));
        let expected = if v["identity"] == "union_identity" {
            union(&g1, &g2)
        } else {
            ring_sum(&g1, &g2)
        };
        assert_eq!(composed, expected);
        assert_eq!(
            v["oracle"].as_u64().unwrap() as usize,
            common::brute_phi(&composed)
        );
        assert_ne!(v["formula"], v["oracle"]);
    }
}

#[test]
fn reports_are_reproducible() {
    let a = audit_families(9, &FormulaId::FAMILIES);
    let b = audit_families(9, &FormulaId::FAMILIES);
    assert_eq!(to_csv(&a, false), to_csv(&b, false));
    assert_eq!(to_markdown("x", &a), to_markdown("x", &b));
    let (_, r1) = identity_sweep(Identity::Ringsum, 20, 7).unwrap();
    let (_, r2) = identity_sweep(Identity::Ringsum, 20, 7).unwrap();
    assert_eq!(to_csv(&r1, false), to_csv(&r2, false));
}

#[test]
fn family_oracle_agrees_with_brute_force() {
    for row in audit_families(9, &FormulaId::FAMILIES) {
        assert_ne!(row.verdict, Verdict::FormulaRefused, "{row:?}");
    }
    // spot-check the solver behind the rows on the smallest instances
    for row in audit_families(7, &[FormulaId::Fan, FormulaId::Cone, FormulaId::Tent]) {
        let m = row.params["m"] as usize;
        let n = row.params["n"] as usize;
        let spec = match row.family {
            FormulaId::Fan => iasi_core::FamilySpec::Fan { m, n },
            FormulaId::Cone => iasi_core::FamilySpec::Cone { m, n },
            _ => iasi_core::FamilySpec::Tent { m, n },
        };
        assert_eq!(
            common::brute_phi(&spec.generate().unwrap()),
            row.oracle_value as usize
        );
    }
}

#[test]
fn markdown_lists_counterexample_rows() {
    let mut rows = Vec::new();
    for which in WHICH {
        rows.extend(audit_identity(which, &identity_catalog(which)));
    }
    let md = to_markdown("Identity audit", &rows);
    assert!(md.contains("| union_identity:diamond | phi1=1;phi2=1;phi_cap=0 | 2 | 1 | mismatch |"));
    assert!(md.contains(
        "| ringsum_identity:triangles_sharing_edge | phi1=1;phi2=1;phi_cap=0 | 2 | 0 | mismatch |"
    ));
    assert!(
        md.contains("| complement_identity:k3_minus_2path | phi_g=1;phi_h=0 | 1 | 0 | mismatch |")
    );
    assert_eq!(md.matches(" rows, 1 mismatches").count(), 3);
}
