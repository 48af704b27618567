mod common;

use std::collections::BTreeSet;

use meg::approx::{approx_meg, approx_meg_with_cover};
use meg::generators::random_interval_model;
use meg::interval::{is_mandatory_interval, set_diameter, Diameter, IntervalModel};
use meg::io::{parse_edge_list, write_edge_list};
use meg::monitor::{
    enumerate_min_meg, is_meg_set, mandatory_oracle, mandatory_vertices, min_meg_exact,
    monitored_edges,
};
use meg::reductions::{is_vertex_cover, min_vertex_cover_exact, vc_from_meg, vc_gadget, Role};
use meg::{EdgeSet, Graph, MonitorMethod};
use proptest::prelude::*;

/// Arbitrary simple graph on `1..=max_n` vertices.
fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let k = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), k).prop_map(move |bits| {
            let pairs: Vec<_> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(p, _)| p)
                .collect();
            Graph::from_edge_list(n, &pairs).unwrap()
        })
    })
}

/// Connected graph: a random spanning tree plus random extra edges.
fn connected_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        let k = n * (n - 1) / 2;
        (
            proptest::collection::vec(any::<prop::sample::Index>(), n.saturating_sub(1)),
            proptest::collection::vec(prop::bool::weighted(0.3), k),
        )
            .prop_map(move |(parents, extra)| {
                let mut set: BTreeSet<(usize, usize)> = BTreeSet::new();
                for (i, p) in parents.iter().enumerate() {
                    let child = i + 1;
                    set.insert((p.index(child), child));
                }
                let all = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
                for (pair, keep) in all.zip(extra) {
                    if keep {
                        set.insert(pair);
                    }
                }
                let pairs: Vec<_> = set.into_iter().collect();
                Graph::from_edge_list(n, &pairs).unwrap()
            })
    })
}

/// Edges on some shortest `u`–`v` path, by enumerating every simple path.
fn shortest_path_edges_by_enumeration(g: &Graph, u: usize, v: usize) -> Option<BTreeSet<usize>> {
    fn walk(
        g: &Graph,
        at: usize,
        target: usize,
        seen: &mut Vec<bool>,
        trail: &mut Vec<usize>,
        found: &mut Vec<Vec<usize>>,
    ) {
        if at == target {
            found.push(trail.clone());
            return;
        }
        for &(w, e) in g.incident(at) {
            if !seen[w] {
                seen[w] = true;
                trail.push(e);
                walk(g, w, target, seen, trail, found);
                trail.pop();
                seen[w] = false;
            }
        }
    }
    let mut seen = vec![false; g.n()];
    seen[u] = true;
    let mut found = Vec::new();
    walk(g, u, v, &mut seen, &mut Vec::new(), &mut found);
    let shortest = found.iter().map(Vec::len).min()?;
    Some(
        found
            .into_iter()
            .filter(|p| p.len() == shortest)
            .flatten()
            .collect(),
    )
}

fn components(g: &Graph, active: &EdgeSet) -> usize {
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for e in active.iter() {
        let (a, b) = g.edge(e);
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    (0..g.n()).filter(|&x| find(&mut parent, x) == x).count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn distances_symmetric_and_triangular(g in any_graph(9)) {
        let d = g.distance_matrix();
        for a in 0..g.n() {
            prop_assert_eq!(d[a].get(a), Some(0));
            for b in 0..g.n() {
                prop_assert_eq!(d[a].get(b), d[b].get(a));
                for c in 0..g.n() {
                    if let (Some(ab), Some(bc)) = (d[a].get(b), d[b].get(c)) {
                        prop_assert!(d[a].get(c).unwrap() <= ab + bc);
                    }
                }
            }
            for &(x, y) in g.edges() {
                if let (Some(dx), Some(dy)) = (d[a].get(x), d[a].get(y)) {
                    prop_assert!(dx.abs_diff(dy) <= 1);
                }
            }
        }
    }

    #[test]
    fn shortest_path_union_matches_enumeration(g in any_graph(8)) {
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let expected = shortest_path_edges_by_enumeration(&g, u, v);
                match g.shortest_path_edge_union(u, v) {
                    Ok(set) => prop_assert_eq!(Some(set.iter().collect::<BTreeSet<_>>()), expected),
                    Err(_) => prop_assert!(expected.is_none()),
                }
            }
        }
    }

    #[test]
    fn bridges_match_quadratic_oracle(g in any_graph(10), mask in proptest::collection::vec(any::<bool>(), 45)) {
        let active = EdgeSet::from_ids(g.m(), (0..g.m()).filter(|&e| mask[e]));
        let base = components(&g, &active);
        let mut expected = EdgeSet::new(g.m());
        for e in active.iter() {
            let mut without = active.clone();
            without.remove(e);
            if components(&g, &without) > base {
                expected.insert(e);
            }
        }
        prop_assert_eq!(g.bridges(&active), expected);
    }

    #[test]
    fn delete_vertex_preserves_adjacency(g in any_graph(9), pick in any::<prop::sample::Index>()) {
        let v = pick.index(g.n());
        let sub = g.delete_vertex(v).unwrap();
        prop_assert_eq!(sub.graph.n(), g.n() - 1);
        prop_assert_eq!(sub.graph.m(), g.m() - g.degree(v));
        for a in 0..sub.graph.n() {
            for b in 0..sub.graph.n() {
                let (oa, ob) = (sub.new_to_old[a], sub.new_to_old[b]);
                prop_assert_eq!(sub.graph.has_edge(a, b), g.has_edge(oa, ob));
            }
        }
    }

    #[test]
    fn edge_list_round_trip(g in any_graph(12)) {
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn monitoring_methods_agree(g in connected_graph(2, 12)) {
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let a = monitored_edges(&g, u, v, MonitorMethod::Bridge).unwrap();
                let b = monitored_edges(&g, u, v, MonitorMethod::Removal).unwrap();
                prop_assert_eq!(&a, &b);
                if let Some(e) = g.edge_id(u, v) {
                    prop_assert!(a.contains(e));
                }
            }
        }
    }

    #[test]
    fn meg_sets_are_upward_closed(g in connected_graph(2, 10), bits in proptest::collection::vec(any::<bool>(), 20)) {
        let small: Vec<usize> = (0..g.n()).filter(|&v| bits[v]).collect();
        let large: Vec<usize> = (0..g.n()).filter(|&v| bits[v] || bits[v + 10]).collect();
        let (ok_small, w) = is_meg_set(&g, &small).unwrap();
        prop_assert!(w.verify(&g));
        if ok_small {
            prop_assert!(is_meg_set(&g, &large).unwrap().0);
        }
        let all: Vec<usize> = (0..g.n()).collect();
        prop_assert!(is_meg_set(&g, &all).unwrap().0);
    }

    #[test]
    fn support_lemma_matches_oracle(g in connected_graph(1, 12)) {
        prop_assert_eq!(mandatory_vertices(&g).unwrap(), mandatory_oracle(&g).unwrap());
    }

    #[test]
    fn greedy_is_a_deterministic_meg_set(g in connected_graph(1, 12)) {
        let (res, cover) = approx_meg_with_cover(&g).unwrap();
        prop_assert!(is_meg_set(&g, &res.meg).unwrap().0);
        prop_assert!(res.size() <= 2 * cover.chosen.len());
        prop_assert_eq!(approx_meg(&g).unwrap(), res);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn mandatory_in_every_minimum(g in connected_graph(1, 9)) {
        let forced = mandatory_vertices(&g).unwrap();
        let all = enumerate_min_meg(&g).unwrap();
        let exact = min_meg_exact(&g, None).unwrap().unwrap();
        prop_assert_eq!(&all[0], &exact.meg);
        for set in &all {
            prop_assert_eq!(set.len(), exact.size());
            prop_assert!(forced.iter().all(|v| set.contains(v)));
            prop_assert!(is_meg_set(&g, set).unwrap().0);
        }
        prop_assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn interval_test_matches_oracle(n in 2usize..=12, span in 2usize..=20, seed in any::<u64>()) {
        let model = random_interval_model(n, span, seed).unwrap();
        let g = model.to_graph();
        prop_assume!(g.is_connected());
        let oracle = mandatory_oracle(&g).unwrap();
        for v in 0..g.n() {
            prop_assert_eq!(is_mandatory_interval(&g, v).unwrap(), oracle.contains(&v));
        }
    }

    #[test]
    fn interval_graph_translation_invariant(n in 1usize..=10, span in 1usize..=15, seed in any::<u64>(), off in -50i64..50) {
        let model = random_interval_model(n, span, seed).unwrap();
        prop_assert_eq!(model.translate(off).to_graph(), model.to_graph());
        let rebuilt = IntervalModel::new(model.intervals().to_vec()).unwrap();
        prop_assert_eq!(rebuilt, model);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn gadget_forward_construction(g in connected_graph(2, 6)) {
        let map = vc_gadget(&g).unwrap();
        let mut meg = min_vertex_cover_exact(&g).unwrap();
        meg.extend(map.with_role(Role::UDoublePrime));
        meg.push(map.y_star());
        prop_assert!(is_meg_set(&map.ghat, &meg).unwrap().0);
        let cover = vc_from_meg(&map, &meg).unwrap();
        prop_assert!(is_vertex_cover(&g, &cover));
    }

    #[test]
    fn gadget_shortcut_avoids_inner_edges(g in connected_graph(2, 5)) {
        let map = vc_gadget(&g).unwrap();
        let h = &map.ghat;
        for a in 0..h.n() {
            for b in a + 1..h.n() {
                // deleting an edge that keeps d(a, b) leaves a shortest path avoiding it
                let monitored = monitored_edges(h, a, b, MonitorMethod::Removal).unwrap();
                for &(u, v) in g.edges() {
                    if [u, v].contains(&a) || [u, v].contains(&b) {
                        continue;
                    }
                    let uv = h.edge_id(u, v).unwrap();
                    prop_assert!(!monitored.contains(uv), "pair ({}, {}) monitors {:?}", a, b, (u, v));
                }
            }
        }
    }

    #[test]
    fn gadget_degeneracy(g in connected_graph(2, 9)) {
        let map = vc_gadget(&g).unwrap();
        if g.degeneracy() <= 2 {
            prop_assert!(map.ghat.degeneracy() <= 3);
        }
    }
}

#[test]
fn non_interval_graphs_keep_forward_direction() {
    // C5 is not an interval graph; the forward implication still holds.
    let c5 = common::cycle(5);
    for v in mandatory_oracle(&c5).unwrap() {
        let sub = c5.delete_vertex(v).unwrap();
        let nbrs: Vec<usize> = c5
            .neighbors(v)
            .map(|w| sub.old_to_new[w].unwrap())
            .collect();
        assert!(set_diameter(&sub.graph, &nbrs).unwrap() <= Diameter::Finite(4));
    }
}

#[test]
fn proper_interval_paths_keep_non_cut_vertices() {
    // on paths the minimum MEG-set is exactly the set of non-cut vertices
    for n in 2..=9 {
        let p = common::path(n);
        assert_eq!(
            min_meg_exact(&p, None).unwrap().unwrap().meg,
            vec![0, n - 1]
        );
    }
}
