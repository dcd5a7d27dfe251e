use std::collections::BTreeSet;

use iasi_core::graph::{intersection, is_subgraph, join, relabel, ring_sum, subtract, union};
use iasi_core::labeling::sumset;
use iasi_core::{Edge, Graph, SetLabel, VertexId};
use proptest::prelude::*;

fn vertex(i: usize) -> VertexId {
    VertexId::new(format!("v{i}")).unwrap()
}

/// Graphs on a subset of `v0..v7`, so two draws overlap.
fn graph() -> impl Strategy<Value = Graph> {
    (
        proptest::collection::vec(any::<bool>(), 8),
        proptest::collection::vec(any::<bool>(), 28),
    )
        .prop_map(|(present, edges)| {
            let vs: Vec<usize> = (0..8).filter(|&i| present[i]).collect();
            let mut es = Vec::new();
            let mut k = 0;
            for i in 0..8 {
                for j in i + 1..8 {
                    if edges[k] && present[i] && present[j] {
                        es.push((vertex(i), vertex(j)));
                    }
                    k += 1;
                }
            }
            Graph::new(vs.into_iter().map(vertex), es).unwrap()
        })
}

fn label() -> impl Strategy<Value = SetLabel> {
    proptest::collection::btree_set(0u64..40, 1..6).prop_map(|s| SetLabel::new(s).unwrap())
}

fn isolated(g: &Graph) -> usize {
    (0..g.vertex_count()).filter(|&i| g.is_isolated(i)).count()
}

proptest! {
    #[test]
    fn union_and_intersection(a in graph(), b in graph()) {
        let u = union(&a, &b);
        prop_assert_eq!(&u, &union(&b, &a));
        prop_assert_eq!(u.edge_set(), a.edge_set().union(&b.edge_set()).cloned().collect::<BTreeSet<Edge>>());
        prop_assert_eq!(u.vertex_set(), a.vertex_set().union(&b.vertex_set()).cloned().collect());
        let i = intersection(&a, &b);
        prop_assert_eq!(i.edge_set(), a.edge_set().intersection(&b.edge_set()).cloned().collect::<BTreeSet<Edge>>());
        prop_assert!(is_subgraph(&i, &a) && is_subgraph(&i, &b));
        prop_assert!(is_subgraph(&a, &u) && is_subgraph(&b, &u));
    }

    #[test]
    fn ring_sum_is_symmetric_difference(a in graph(), b in graph()) {
        let r = ring_sum(&a, &b);
        prop_assert_eq!(&r, &ring_sum(&b, &a));
        let expected: BTreeSet<Edge> = a.edge_set().symmetric_difference(&b.edge_set()).cloned().collect();
        prop_assert_eq!(r.edge_set(), expected);
        prop_assert_eq!(isolated(&r), 0);
        prop_assert_eq!(ring_sum(&a, &a).vertex_count(), 0);
    }

    #[test]
    fn subtract_removes_subgraph_edges(a in graph(), b in graph()) {
        let h = intersection(&a, &b);
        let d = subtract(&a, &h).unwrap();
        prop_assert_eq!(d.vertex_set(), a.vertex_set());
        prop_assert_eq!(d.edge_count(), a.edge_count() - h.edge_count());
        if !is_subgraph(&b, &a) {
            prop_assert!(subtract(&a, &b).is_err());
        }
    }

    #[test]
    fn join_adds_all_cross_edges(a in graph(), b in graph()) {
        let l = relabel(&a, "l_").unwrap();
        let r = relabel(&b, "r_").unwrap();
        let j = join(&[l.clone(), r.clone()]).unwrap();
        prop_assert_eq!(j.vertex_count(), a.vertex_count() + b.vertex_count());
        prop_assert_eq!(j.edge_count(), a.edge_count() + b.edge_count() + a.vertex_count() * b.vertex_count());
        prop_assert!(is_subgraph(&l, &j) && is_subgraph(&r, &j));
    }

    #[test]
    fn json_round_trip_is_canonical(a in graph()) {
        let text = a.to_json_string();
        let back = Graph::from_json_str(&text).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.to_json_string(), text);
    }

    #[test]
    fn sumset_size_bounds(a in label(), b in label()) {
        let s = sumset(&a, &b);
        prop_assert!(s.len() >= a.len().max(b.len()));
        prop_assert!(s.len() <= a.len() * b.len());
        prop_assert_eq!(s, sumset(&b, &a));
    }

    #[test]
    fn sumset_is_associative(a in label(), b in label(), c in label()) {
        prop_assert_eq!(sumset(&sumset(&a, &b), &c), sumset(&a, &sumset(&b, &c)));
    }
}

#[test]
fn duplicate_edges_fail_to_load() {
    let err = Graph::from_json_str(r#"{"vertices":["a","b"],"edges":[["a","b"],["b","a"]]}"#);
    assert!(err.is_err());
}
