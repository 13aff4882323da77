use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use splitfree::constructions::{turan, y_graph};
use splitfree::enumerate::{brute_force_count, collect, enumerate, CliqueFree, NoPrune, SplitFree};
use splitfree::oracles::{contains_clique, contains_complete_split};
use splitfree::procedure::{classes_without, run_procedure, Type};
use splitfree::search::{compute_ex, compute_spex, verify_theorem, Constraint, Objective, SearchSpec, Status, Theorem, TheoremParams};

#[test]
fn pruned_enumeration_matches_brute_force() {
    for n in 1..=6 {
        let fast = enumerate(n, &SplitFree { p: 2, q: 2 }, |_| {}).unwrap() as usize;
        let slow = brute_force_count(n, |g| contains_complete_split(g, 2, 2).unwrap().is_none());
        assert_eq!(fast, slow, "n={n}");
        let fast = enumerate(n, &CliqueFree(4), |_| {}).unwrap() as usize;
        let slow = brute_force_count(n, |g| contains_clique(g, 4).unwrap().is_none());
        assert_eq!(fast, slow, "n={n}");
    }
}

#[test]
fn y_graph_bounds_the_split_free_maximum() {
    for (p, q) in [(2, 1), (2, 2), (3, 1), (3, 3)] {
        for n in 2 * p + 1..=8 {
            let spec = SearchSpec::new(n, p, q, &[Constraint::SplitFree, Constraint::NonPartite], Objective::Edges).unwrap();
            let rec = compute_ex(&spec).unwrap();
            let (y, _) = y_graph(n, p).unwrap();
            assert!(spec.admits(&y).unwrap());
            assert!(rec.best_edges().unwrap() >= y.edge_count());
            assert!(rec.verify_witnesses().unwrap());
        }
    }
}

#[test]
fn unconstrained_maxima_are_complete_graphs() {
    for n in 2..=7 {
        let rec = compute_spex(&SearchSpec::new(n, 2, 1, &[], Objective::Rho).unwrap()).unwrap();
        let (rho, err) = rec.best_rho().unwrap();
        assert!((rho - (n - 1) as f64).abs() <= err + 1e-12);
        assert_eq!(rec.witnesses.len(), 1);
    }
}

#[test]
fn connected_constraint_filters_leaves() {
    let spec = SearchSpec::new(6, 2, 1, &[Constraint::CliqueFree, Constraint::Connected], Objective::Edges).unwrap();
    let rec = compute_ex(&spec).unwrap();
    assert_eq!(rec.best_edges(), Some(9));
    assert!(rec.has_witness(&turan(6, 2).unwrap().0));
}

#[test]
fn verify_reports() {
    let rep = verify_theorem(Theorem::Brouwer, 5..=8, TheoremParams { r: 2, q: 1 }).unwrap();
    assert!(rep.all_pass(), "{rep:?}");
    let rep = verify_theorem(Theorem::ErdosNonbipartite, 3..=7, TheoremParams::default()).unwrap();
    assert!(rep.all_pass());
    assert_eq!(rep.rows[0].found, None);
    let rep = verify_theorem(Theorem::Thm11, 7..=8, TheoremParams { r: 3, q: 2 }).unwrap();
    assert!(rep.passed());
    assert!(rep.rows.iter().all(|r| r.status != Status::Fail));
}

#[test]
fn procedure_invariants_on_random_runs() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut pool: Vec<_> = (5..=8).flat_map(|n| collect(n, &NoPrune).unwrap()).filter(|g| g.is_connected()).collect();
    pool.shuffle(&mut rng);
    for g in pool.into_iter().take(300) {
        let u0 = g.min_degree_vertex().unwrap();
        let classes = classes_without(&g, u0).unwrap();
        let trace = run_procedure(&g, u0, classes).unwrap();
        assert!(trace.edges_nondecreasing());
        assert!(trace.steps() <= g.degree(u0));
        assert!(trace.terminal().labels.iter().all(|&t| t != Type::C));
        for w in trace.states.windows(2) {
            for s in 0..w[0].p() {
                assert!(w[1].active[s].count_ones() <= w[0].active[s].count_ones());
            }
        }
    }
}
