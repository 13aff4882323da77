use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use splitfree::enumerate::{collect, NoPrune};
use splitfree::oracles::{chromatic_number, contains_clique, contains_complete_split, intersection_lower_bound, is_k_partite};

#[test]
fn split_containment_is_monotone() {
    for n in 1..=7 {
        for g in collect(n, &NoPrune).unwrap() {
            for p in 2..=3 {
                for q in 1..=3 {
                    if contains_complete_split(&g, p, q).unwrap().is_some() {
                        for q2 in 1..q {
                            assert!(contains_complete_split(&g, p, q2).unwrap().is_some());
                        }
                        assert!(contains_clique(&g, p + 1).unwrap().is_some());
                    }
                }
            }
        }
    }
}

#[test]
fn edge_deletion_lowers_chi_by_at_most_one() {
    for n in 1..=7 {
        for g in collect(n, &NoPrune).unwrap() {
            let c = chromatic_number(&g).unwrap();
            assert!((0..n).all(|v| (0..n).all(|u| !g.has_edge(u, v) || c.coloring[u] != c.coloring[v])));
            for (u, v) in g.edges() {
                let chi = chromatic_number(&g.without_edge(u, v).unwrap()).unwrap().chi;
                assert!(chi == c.chi || chi + 1 == c.chi, "{g:?} minus {u}-{v}");
            }
            assert!(is_k_partite(&g, c.chi).unwrap());
            assert!(c.chi == 1 || !is_k_partite(&g, c.chi - 1).unwrap());
        }
    }
}

#[test]
fn intersection_bound_on_random_set_systems() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..10_000 {
        let universe = rng.gen_range(1..=20);
        let k = rng.gen_range(1..=5);
        let sets: Vec<u32> = (0..k).map(|_| rng.gen::<u32>() & ((1 << universe) - 1)).collect();
        let union = sets.iter().fold(0, |a, s| a | s);
        let inter = sets.iter().fold(u32::MAX, |a, s| a & s);
        let sizes: Vec<usize> = sets.iter().map(|s| s.count_ones() as usize).collect();
        let bound = intersection_lower_bound(&sizes, union.count_ones() as usize).unwrap();
        assert!(bound <= inter.count_ones() as i64);
    }
}
