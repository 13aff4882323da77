use std::cmp::Ordering;

use splitfree::constructions::y_graph;
use splitfree::enumerate::{collect, NoPrune};
use splitfree::spectral::{compare_rho, spectral_radius, DEFAULT_TOL};
use splitfree::Graph;

#[test]
fn residual_within_certified_error() {
    for n in 1..=7 {
        for g in collect(n, &NoPrune).unwrap() {
            let r = spectral_radius(&g, DEFAULT_TOL).unwrap();
            assert!(r.err <= DEFAULT_TOL);
            assert!(r.residual(&g) <= r.err + 1e-15, "{g:?}");
            assert!(r.perron.iter().all(|&x| x >= 0.0));
            if g.is_connected() && g.edge_count() > 0 {
                assert!(r.perron.iter().all(|&x| x > 0.0));
            }
        }
    }
}

#[test]
fn adding_an_edge_increases_rho_on_connected_graphs() {
    for n in 2..=7 {
        for g in collect(n, &NoPrune).unwrap().into_iter().filter(|g| g.is_connected()) {
            for v in 0..n {
                for u in 0..v {
                    if !g.has_edge(u, v) {
                        let h = g.with_edge(u, v).unwrap();
                        assert_eq!(compare_rho(&h, &g).unwrap(), Ordering::Greater);
                        assert_eq!(compare_rho(&g, &h).unwrap(), Ordering::Less);
                    }
                }
            }
        }
    }
}

#[test]
fn regular_graphs_of_equal_degree_tie() {
    let pairs = [
        (Graph::cycle(8).unwrap(), Graph::cycle(3).unwrap().disjoint_union(&Graph::cycle(5).unwrap()).unwrap()),
        (Graph::complete_multipartite(&[3, 3]).unwrap(), Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).unwrap()),
    ];
    for (a, b) in pairs {
        assert_eq!(compare_rho(&a, &b).unwrap(), Ordering::Equal);
    }
}

#[test]
fn compare_is_antisymmetric() {
    let gs: Vec<Graph> = collect(5, &NoPrune).unwrap();
    for a in &gs {
        for b in &gs {
            assert_eq!(compare_rho(a, b).unwrap(), compare_rho(b, a).unwrap().reverse());
        }
    }
    let y = y_graph(6, 2).unwrap().0;
    assert_eq!(compare_rho(&y, &Graph::cycle(6).unwrap()).unwrap(), Ordering::Greater);
}
