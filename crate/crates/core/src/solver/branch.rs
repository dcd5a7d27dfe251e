//! Branch and bound for the minimum number of edges left uncovered by an
//! independent set, on one connected component.
//!
//! Search state: `chosen` (the support so far), `excluded` (vertices that will
//! carry singleton labels) and `undecided`. Neighbours of chosen vertices are
//! moved to `excluded` immediately, so `forced` (edges inside `excluded`) is a
//! lower bound on the final value.

use std::cmp::Reverse;

use super::exhaustive::WORD_LIMIT;
use super::mask::{Mask, WideMask};
use crate::graph::Graph;

pub(crate) struct Component<M> {
    adj: Vec<M>,
}

impl<M: Mask> Component<M> {
    /// Induced subgraph on `members` (global indices), re-indexed locally.
    fn induced(g: &Graph, members: &[usize]) -> Self {
        let n = members.len();
        let adj = members
            .iter()
            .map(|&u| {
                M::from_indices(
                    n,
                    g.neighbors(u)
                        .iter()
                        .filter_map(|w| members.binary_search(w).ok()),
                )
            })
            .collect();
        Component { adj }
    }

    fn n(&self) -> usize {
        self.adj.len()
    }

    fn edges_within(&self, set: &M) -> usize {
        set.ones()
            .iter()
            .map(|&u| self.adj[u].and(set).count())
            .sum::<usize>()
            / 2
    }

    /// Best independent set under the constraints. With `target = Some(t)`
    /// the search stops at the first set leaving at most `t` edges uncovered
    /// and returns `None` if there is none.
    fn solve(
        &self,
        forced_in: &[usize],
        forced_out: &[usize],
        target: Option<usize>,
    ) -> Option<(usize, M)> {
        let n = self.n();
        let chosen = M::from_indices(n, forced_in.iter().copied());
        let mut excluded = M::from_indices(n, forced_out.iter().copied());
        if chosen.intersects(&excluded) {
            return None;
        }
        for &u in forced_in {
            if self.adj[u].intersects(&chosen) {
                return None;
            }
            excluded = excluded.or(&self.adj[u]);
        }
        let undecided = M::full(n).and_not(&chosen).and_not(&excluded);
        let forced = self.edges_within(&excluded);

        let mut search = Search {
            adj: &self.adj,
            best: usize::MAX,
            best_set: None,
            stop_early: false,
            done: false,
        };
        match target {
            Some(t) => {
                search.best = t + 1;
                search.stop_early = true;
            }
            None => {
                let (value, set) = self.greedy(chosen.clone(), excluded.clone(), undecided.clone());
                search.best = value;
                search.best_set = Some(set);
            }
        }
        search.branch(chosen, excluded, undecided, forced);
        search.best_set.map(|s| (search.best, s))
    }

    /// Repeatedly takes the undecided vertex of largest degree.
    fn greedy(&self, mut chosen: M, mut excluded: M, mut undecided: M) -> (usize, M) {
        while let Some(v) = undecided
            .ones()
            .into_iter()
            .max_by_key(|&u| (self.adj[u].count(), Reverse(u)))
        {
            chosen.insert(v);
            let nb = self.adj[v].and(&undecided);
            excluded = excluded.or(&nb);
            undecided = undecided.and_not(&nb);
            undecided.remove(v);
        }
        (self.edges_within(&excluded), chosen)
    }
}

struct Search<'a, M> {
    adj: &'a [M],
    best: usize,
    best_set: Option<M>,
    stop_early: bool,
    done: bool,
}

impl<M: Mask> Search<'_, M> {
    fn branch(&mut self, mut chosen: M, mut excluded: M, mut undecided: M, forced: usize) {
        if self.done {
            return;
        }
        // An undecided vertex with no undecided neighbour can be settled
        // without branching: take it if it covers anything.
        for u in undecided.ones() {
            if !self.adj[u].intersects(&undecided) {
                undecided.remove(u);
                if self.adj[u].intersects(&excluded) {
                    chosen.insert(u);
                } else {
                    excluded.insert(u);
                }
            }
        }
        if undecided.is_empty() {
            if forced < self.best {
                self.best = forced;
                self.best_set = Some(chosen);
                self.done = self.stop_early;
            }
            return;
        }
        if forced + self.clique_bound(&undecided, &excluded) >= self.best {
            return;
        }

        let v = undecided
            .ones()
            .into_iter()
            .max_by_key(|&u| {
                (
                    self.adj[u].and(&undecided).count(),
                    self.adj[u].and(&excluded).count(),
                    Reverse(u),
                )
            })
            .expect("undecided is non-empty");

        // v in the support: its undecided neighbours become singletons.
        let nb = self.adj[v].and(&undecided);
        let mut gained = 0;
        let mut within = 0;
        for w in nb.ones() {
            gained += self.adj[w].and(&excluded).count();
            within += self.adj[w].and(&nb).count();
        }
        let mut with_v = chosen.clone();
        with_v.insert(v);
        let mut rest = undecided.and_not(&nb);
        rest.remove(v);
        self.branch(with_v, excluded.or(&nb), rest, forced + gained + within / 2);

        // v gets a singleton label.
        let mut without_v = excluded.clone();
        without_v.insert(v);
        let mut rest = undecided;
        rest.remove(v);
        let gained = self.adj[v].and(&excluded).count();
        self.branch(chosen, without_v, rest, forced + gained);
    }

    /// Lower bound on edges that will still become uncovered, from a greedy
    /// partition of the undecided vertices into cliques. A clique keeps at most
    /// one support vertex, so at least `C(k-1, 2)` of its inner edges and the
    /// excluded-side edges of all but one member stay uncovered.
    fn clique_bound(&self, undecided: &M, excluded: &M) -> usize {
        let mut rest = undecided.clone();
        let mut total = 0;
        while let Some(v) = rest.first() {
            let mut clique = vec![v];
            let mut cand = self.adj[v].and(&rest);
            while !cand.is_empty() {
                let w = cand
                    .ones()
                    .into_iter()
                    .max_by_key(|&w| (self.adj[w].and(&cand).count(), Reverse(w)))
                    .unwrap();
                clique.push(w);
                cand = cand.and(&self.adj[w]);
            }
            let to_excluded: Vec<usize> = clique
                .iter()
                .map(|&c| self.adj[c].and(excluded).count())
                .collect();
            let k = clique.len();
            total += to_excluded.iter().sum::<usize>() - to_excluded.iter().max().unwrap()
                + (k - 1) * k.saturating_sub(2) / 2;
            for c in clique {
                rest.remove(c);
            }
        }
        total
    }
}

/// A component solver over the narrowest mask type that fits.
pub(crate) enum AnyComponent {
    Word(Component<u64>),
    Wide(Component<WideMask>),
}

impl AnyComponent {
    pub(crate) fn induced(g: &Graph, members: &[usize]) -> Self {
        if members.len() <= WORD_LIMIT {
            AnyComponent::Word(Component::induced(g, members))
        } else {
            AnyComponent::Wide(Component::induced(g, members))
        }
    }

    /// Same as [`Component::solve`], with local indices in and out.
    pub(crate) fn solve(
        &self,
        forced_in: &[usize],
        forced_out: &[usize],
        target: Option<usize>,
    ) -> Option<(usize, Vec<usize>)> {
        match self {
            AnyComponent::Word(c) => c
                .solve(forced_in, forced_out, target)
                .map(|(v, s)| (v, s.ones())),
            AnyComponent::Wide(c) => c
                .solve(forced_in, forced_out, target)
                .map(|(v, s)| (v, s.ones())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    fn whole<M: Mask>(g: &Graph) -> Component<M> {
        let members: Vec<usize> = (0..g.vertex_count()).collect();
        Component::induced(g, &members)
    }

    #[test]
    fn small_values() {
        let k5 = FamilySpec::Complete { n: 5 }.generate().unwrap();
        assert_eq!(whole::<u64>(&k5).solve(&[], &[], None).unwrap().0, 6);
        let c7 = FamilySpec::Cycle { n: 7 }.generate().unwrap();
        assert_eq!(whole::<u64>(&c7).solve(&[], &[], None).unwrap().0, 1);
        assert_eq!(whole::<WideMask>(&c7).solve(&[], &[], None).unwrap().0, 1);
    }

    #[test]
    fn constraints_and_targets() {
        let c4 = FamilySpec::Cycle { n: 4 }.generate().unwrap();
        let c = whole::<u64>(&c4);
        // c0 and c1 are adjacent
        assert!(c.solve(&[0, 1], &[], None).is_none());
        assert!(c.solve(&[0], &[0], None).is_none());
        // forcing c0 out still allows {c1, c3}
        assert_eq!(c.solve(&[], &[0], Some(0)).unwrap(), (0, 0b1010));
        // forcing c0 and c1 out leaves {c2} or {c3}: 2 uncovered
        assert!(c.solve(&[], &[0, 1], Some(1)).is_none());
        assert_eq!(c.solve(&[], &[0, 1], None).unwrap().0, 2);
    }

    #[test]
    fn clique_bound_on_triangle() {
        let k3 = FamilySpec::Complete { n: 3 }.generate().unwrap();
        let c = whole::<u64>(&k3);
        let s = Search {
            adj: &c.adj,
            best: 0,
            best_set: None,
            stop_early: false,
            done: false,
        };
        assert_eq!(s.clique_bound(&0b111, &0), 1);
    }

    #[test]
    fn wide_components_solve() {
        // two triangles chained by a long path, 70 vertices in one component
        let mut names: Vec<String> = (0..70).map(|i| format!("v{i:02}")).collect();
        names.sort();
        let mut edges: Vec<(String, String)> = (0..69)
            .map(|i| (format!("v{i:02}"), format!("v{:02}", i + 1)))
            .collect();
        edges.push(("v00".into(), "v02".into()));
        edges.push(("v67".into(), "v69".into()));
        let vs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let es: Vec<(&str, &str)> = edges
            .iter()
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .collect();
        let g = Graph::from_names(&vs, &es);
        let members: Vec<usize> = (0..70).collect();
        let comp = AnyComponent::induced(&g, &members);
        assert!(matches!(comp, AnyComponent::Wide(_)));
        assert_eq!(comp.solve(&[], &[], None).unwrap().0, 2);
    }
}
