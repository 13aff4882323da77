use proptest::prelude::*;
use splitfree::bits::Bits;
use splitfree::constructions::{complete_split, turan, turan_edge_count, y_graph};
use splitfree::enumerate::{collect, enumerate_reduce, NoPrune};
use splitfree::graph6;
use splitfree::oracles::{chromatic_number, contains_clique, is_edge_color_critical, is_k_partite};
use splitfree::Graph;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|j| (0..j).map(move |i| (i, j)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn well_formed(g: &Graph) -> bool {
    let sym = (0..g.n()).all(|v| Bits(g.neighbors(v)).all(|u| g.has_edge(u, v)));
    let loops = (0..g.n()).all(|v| !g.has_edge(v, v));
    let sum: usize = (0..g.n()).map(|v| g.degree(v)).sum();
    sym && loops && sum == 2 * g.edge_count()
}

proptest! {
    #[test]
    fn join_edge_count(a in graph(10), b in graph(10)) {
        let j = a.join(&b).unwrap();
        prop_assert_eq!(j.n(), a.n() + b.n());
        prop_assert_eq!(j.edge_count(), a.edge_count() + b.edge_count() + a.n() * b.n());
        prop_assert!(well_formed(&j));
    }

    #[test]
    fn operations_stay_well_formed(g in graph(12), v in 0usize..12) {
        prop_assert!(well_formed(&g.complement()));
        let v = v % g.n();
        if g.n() > 1 {
            prop_assert!(well_formed(&g.remove_vertex(v).unwrap()));
        }
        let keep: Vec<usize> = (0..g.n()).filter(|&u| u != v).collect();
        prop_assert!(well_formed(&g.induced_subgraph(&keep).unwrap()));
        prop_assert!(well_formed(&g.add_vertex(g.neighbors(v)).unwrap()));
    }

    #[test]
    fn graph6_round_trip_random(g in graph(40)) {
        prop_assert_eq!(graph6::decode(&graph6::encode(&g)).unwrap(), g);
    }
}

#[test]
fn graph6_round_trip_enumerated() {
    for n in 1..=8 {
        for g in collect(n, &NoPrune).unwrap() {
            assert_eq!(graph6::decode(&graph6::encode(&g)).unwrap(), g);
        }
    }
}

#[test]
fn turan_maximises_r_partite_edges() {
    for r in 2..=4 {
        for n in r..=9 {
            let (best, _) = enumerate_reduce(
                n,
                10,
                &NoPrune,
                || 0usize,
                |acc, g| if g.edge_count() > acc && is_k_partite(g, r).unwrap() { g.edge_count() } else { acc },
                usize::max,
            )
            .unwrap();
            let (t, _) = turan(n, r).unwrap();
            assert_eq!(best, t.edge_count(), "n={n} r={r}");
            assert_eq!(best, turan_edge_count(n, r));
            assert!(contains_clique(&t, r + 1).unwrap().is_none());
        }
    }
}

#[test]
fn y_graph_chromatic_structure() {
    for p in 2..=4 {
        for n in 2 * p + 1..=14 {
            let (y, _) = y_graph(n, p).unwrap();
            assert!(well_formed(&y));
            assert!(!is_k_partite(&y, p).unwrap(), "n={n} p={p}");
            assert!(is_k_partite(&y, p + 1).unwrap());
            assert!(contains_clique(&y, p + 1).unwrap().is_none());
        }
    }
}

#[test]
fn complete_split_is_critical() {
    for p in 2..=4 {
        for q in 1..=3 {
            let b = complete_split(p, q).unwrap();
            assert_eq!(chromatic_number(&b).unwrap().chi, p + 1);
            assert!(is_edge_color_critical(&b).unwrap());
        }
    }
}
