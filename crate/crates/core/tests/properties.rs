use cds_core::algorithms::{greedy_dominating_set, prune_cds};
use cds_core::graph::node_set;
use cds_core::topology::{generate, GenSpec, GeometricTopology, Point};
use cds_core::verify::{check_cds, exact_min_cds, performance_ratio};
use cds_core::{Algorithm, Graph, Mcds2Rule, NodeId, NodeSet};
use proptest::prelude::*;

/// Random connected graph: a random spanning tree (each node links to an
/// earlier one) plus extra edges from a bitmask.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let parents = proptest::collection::vec(any::<prop::sample::Index>(), n.saturating_sub(1));
        let extra = proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2);
        (Just(n), parents, extra).prop_map(|(n, parents, extra)| {
            let mut edges = std::collections::BTreeSet::new();
            for (i, p) in parents.iter().enumerate() {
                let child = i + 1;
                edges.insert((p.index(child), child));
            }
            let mut k = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if extra[k] && k % 3 == 0 {
                        edges.insert((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// Any simple graph (possibly disconnected).
fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
            move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in (u + 1)..n {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, edges).unwrap()
            },
        )
    })
}

/// Floyd-Warshall hop distances, independent of the BFS in `Graph`.
fn distance_matrix(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.node_count();
    let mut d = vec![vec![None; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = Some(0);
    }
    for (u, v) in g.edges() {
        d[u.index()][v.index()] = Some(1);
        d[v.index()][u.index()] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Minimum CDS size by checking every subset with `check_cds`.
fn naive_min_cds(g: &Graph) -> usize {
    let n = g.node_count();
    (0u32..(1 << n))
        .filter(|mask| {
            let s: NodeSet = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(NodeId::new)
                .collect();
            check_cds(g, &s).unwrap().is_valid()
        })
        .map(|mask| mask.count_ones() as usize)
        .min()
        .unwrap()
}

fn without(set: &NodeSet, x: NodeId) -> NodeSet {
    let mut s = set.clone();
    s.remove(&x);
    s
}

fn all_algorithms() -> Vec<(Algorithm, Mcds2Rule)> {
    let mut v: Vec<_> = Algorithm::ALL
        .iter()
        .map(|&a| (a, Mcds2Rule::Single))
        .collect();
    v.push((Algorithm::Mcds2, Mcds2Rule::Union));
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn two_hop_contains_neighbors_not_self(g in any_graph(12)) {
        for u in g.nodes() {
            let two = g.two_hop_neighborhood(u).unwrap();
            prop_assert!(!two.contains(&u));
            for v in g.neighbors(u).unwrap() {
                prop_assert!(two.contains(v));
            }
        }
    }

    #[test]
    fn shortest_path_matches_distance_matrix(g in any_graph(20)) {
        let d = distance_matrix(&g);
        for u in g.nodes() {
            for v in g.nodes() {
                let p = g.shortest_path(u, v, None).unwrap();
                match d[u.index()][v.index()] {
                    None => prop_assert!(p.is_none()),
                    Some(len) => {
                        let p = p.unwrap();
                        prop_assert_eq!(p.len(), len + 1);
                        prop_assert!(p.windows(2).all(|w| g.has_edge(w[0], w[1])));
                    }
                }
            }
        }
    }

    #[test]
    fn induced_all_equals_is_connected(g in any_graph(14)) {
        let all: NodeSet = g.nodes().collect();
        prop_assert_eq!(g.induced_connected(&all).unwrap(), g.is_connected());
    }

    #[test]
    fn edge_order_does_not_matter(g in any_graph(12), seed in any::<u64>()) {
        let mut edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (u.index(), v.index())).collect();
        // deterministic shuffle + endpoint flips
        let mut s = seed;
        for i in (1..edges.len()).rev() {
            s = cds_core::seed::splitmix64(s);
            edges.swap(i, (s % (i as u64 + 1)) as usize);
            if s & 1 == 1 {
                edges[i] = (edges[i].1, edges[i].0);
            }
        }
        prop_assert_eq!(Graph::from_edges(g.node_count(), edges).unwrap(), g);
    }

    #[test]
    fn greedy_set_dominates(g in any_graph(16)) {
        let s = greedy_dominating_set(&g);
        prop_assert!(check_cds(&g, &s).unwrap().dominating);
    }

    #[test]
    fn algorithms_valid_and_above_oracle(g in connected_graph(10)) {
        let exact = exact_min_cds(&g, 12).unwrap();
        prop_assert_eq!(exact.min_size, naive_min_cds(&g));
        prop_assert!(check_cds(&g, &exact.witness).unwrap().is_valid());
        for (alg, rule) in all_algorithms() {
            let r = alg.run(&g, rule).unwrap();
            prop_assert!(r.is_valid_cds, "{} invalid on {:?}", alg, g);
            prop_assert!(check_cds(&g, &r.cds).unwrap().is_valid());
            prop_assert_eq!(r.size, r.cds.len());
            prop_assert!(r.size >= exact.min_size);
            prop_assert!(performance_ratio(r.size, exact.min_size).unwrap() >= 1.0);
            for u in g.nodes() {
                prop_assert_eq!(r.roles[u.index()].in_cds(), r.cds.contains(&u));
            }
        }
    }

    #[test]
    fn mmcds_is_one_minimal(g in connected_graph(16)) {
        let r = Algorithm::Mmcds.run(&g, Mcds2Rule::Single).unwrap();
        if r.size > 1 {
            for &x in &r.cds {
                prop_assert!(!check_cds(&g, &without(&r.cds, x)).unwrap().is_valid());
            }
        }
    }

    #[test]
    fn prune_of_full_set_is_one_minimal(g in connected_graph(14)) {
        let all: NodeSet = g.nodes().collect();
        let p = prune_cds(&g, &all).unwrap();
        prop_assert!(check_cds(&g, &p).unwrap().is_valid());
        if p.len() > 1 {
            for &x in &p {
                prop_assert!(!check_cds(&g, &without(&p, x)).unwrap().is_valid());
            }
        }
    }

    #[test]
    fn algorithms_are_deterministic(g in connected_graph(20)) {
        for (alg, rule) in all_algorithms() {
            prop_assert_eq!(alg.run(&g, rule).unwrap().cds, alg.run(&g, rule).unwrap().cds);
        }
    }

    #[test]
    fn oracle_witness_is_minimal(g in connected_graph(9)) {
        let w = exact_min_cds(&g, 12).unwrap().witness;
        if w.len() > 1 {
            for &x in &w {
                prop_assert!(!check_cds(&g, &without(&w, x)).unwrap().is_valid());
            }
        }
    }

    #[test]
    fn unit_disk_graph_properties(
        pts in proptest::collection::vec((0.0f64..50.0, 0.0f64..50.0), 1..30),
        r1 in 0.5f64..20.0,
        extra in 0.0f64..20.0,
    ) {
        let points: Vec<Point> = pts.iter().map(|&(x, y)| Point::new(x, y)).collect();
        let small = GeometricTopology { points: points.clone(), area_side: 50.0, radius: r1, seed: 0 }.to_graph();
        let large = GeometricTopology { points, area_side: 50.0, radius: r1 + extra, seed: 0 }.to_graph();
        for (u, v) in small.edges() {
            prop_assert!(u != v);
            prop_assert!(small.has_edge(v, u));
            prop_assert!(large.has_edge(u, v));
        }
    }

    #[test]
    fn generated_topologies_are_connected(n in 1usize..60, seed in any::<u64>()) {
        let t = generate(&GenSpec::new(n, seed)).unwrap();
        prop_assert_eq!(t.node_count(), n);
        prop_assert!(t.to_graph().is_connected());
    }
}

#[test]
fn identity_relabeling_gives_same_output() {
    let g = generate(&GenSpec::new(60, 11)).unwrap().to_graph();
    let relabeled = Graph::from_edges(
        g.node_count(),
        g.edges().map(|(u, v)| (u.index(), v.index())),
    )
    .unwrap();
    for (alg, rule) in all_algorithms() {
        assert_eq!(
            alg.run(&g, rule).unwrap().cds,
            alg.run(&relabeled, rule).unwrap().cds
        );
    }
}

#[test]
fn cycle4_ratio_is_two() {
    let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    let exact = exact_min_cds(&c4, 12).unwrap();
    assert_eq!(exact.witness, node_set([0, 1]));
    let wuli = Algorithm::Mcds1.run(&c4, Mcds2Rule::Single).unwrap();
    assert_eq!(performance_ratio(wuli.size, exact.min_size).unwrap(), 2.0);
}
