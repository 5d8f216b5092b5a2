mod common;

use common::*;
use hgdual::labels::{default_guess_size, enumerate_label_sets};
use hgdual::oracle::{brute_force_new_transversal, brute_force_tr};
use hgdual::{
    check_dual, check_dual_with, check_witness_aug, compute_new_transversal, det_new_transversal,
    dualize, minimize_transversal, nd_check_random, Assignment, Instance, Pair, Reason,
    SearchStats, Status, VertexId,
};
use proptest::prelude::*;

fn floor_log2(m: usize) -> usize {
    if m == 0 {
        0
    } else {
        m.ilog2() as usize
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn decision_matches_the_oracle(i in ip_pair(10, 8)) {
        let dual = brute_force_tr(i.g()).unwrap().same_edges(i.h());
        prop_assert_eq!(check_dual(&i).status == Status::Dual, dual);
    }

    #[test]
    fn certificates_are_minimal_new_transversals(i in ip_pair(10, 8)) {
        let v = check_dual(&i);
        if v.status == Status::NotDual {
            prop_assert_eq!(v.reason, Some(Reason::NewTransversalFound));
            let cert = v.certificate.unwrap();
            let t = cert.new_transversal.unwrap();
            prop_assert!(i.is_new_transversal(&t));
            prop_assert!(i.g().is_minimal_transversal(&t));
            prop_assert!(!i.h().edges().contains(&t));
            let w = cert.witness.unwrap();
            prop_assert!(i.is_new_transversal(&w.transversal()));
        }
    }

    #[test]
    fn recursion_halves_compatible_edges(i in ip_pair(10, 8)) {
        let mut stats = SearchStats::traced();
        check_dual_with(&i, &mut stats);
        for &(parent, child) in stats.com_transitions.as_ref().unwrap() {
            prop_assert!(child <= parent / 2, "{} -> {}", parent, child);
        }
        prop_assert_eq!(stats.halving_violations, 0);
        if stats.calls > 0 {
            prop_assert!(stats.recursion_depth_max <= floor_log2(i.h().len()) + 2);
        }
    }

    #[test]
    fn enumeration_finds_what_the_oracle_finds(i in ip_pair(8, 6)) {
        let hit = compute_new_transversal(&i).unwrap();
        let oracle = brute_force_new_transversal(&i).unwrap();
        prop_assert_eq!(hit.is_some(), oracle.is_some());
        if let Some(hit) = hit {
            prop_assert!(hit.guess.len() <= default_guess_size(&i));
            prop_assert!(i.is_new_transversal(&hit.transversal));
        }
    }

    #[test]
    fn search_from_an_arbitrary_assignment_is_exact(
        (i, sigma) in with_assignment(ip_pair(9, 7)),
    ) {
        let expected = exists_coherent_new_transversal(&i, &sigma);
        let mut stats = SearchStats::default();
        let found = det_new_transversal(&i, &sigma, &mut stats);
        prop_assert_eq!(found.is_some(), expected);
        if let Some(w) = found {
            prop_assert!(sigma.is_extended_by(&w.assignment));
            let t = w.transversal();
            prop_assert!(i.is_new_transversal(&t));
        }
    }

    #[test]
    fn witness_contains_a_missing_minimal_transversal(i in ip_pair(10, 8)) {
        let mut stats = SearchStats::default();
        if let Some(w) = det_new_transversal(&i, &Assignment::empty(i.universe()), &mut stats) {
            let t = minimize_transversal(i.g(), &w.transversal()).unwrap();
            prop_assert!(i.g().is_minimal_transversal(&t));
            prop_assert!(!i.h().edges().contains(&t));
        }
    }

    #[test]
    fn every_vertex_of_a_minimal_transversal_has_its_own_critical_edge(
        h in simple_hypergraph(10, 8),
    ) {
        for t in brute_force_tr(&h).unwrap().edges() {
            let mut witnesses: Vec<usize> = t
                .iter()
                .map(|v| h.criticality_witness(t, VertexId(v)).unwrap().unwrap().0)
                .collect();
            witnesses.sort_unstable();
            witnesses.dedup();
            prop_assert!(witnesses.len() >= t.len());
        }
    }

    #[test]
    fn dualize_matches_the_oracle(g in simple_hypergraph(10, 8)) {
        let tr = dualize(&g).unwrap();
        prop_assert!(tr.same_edges(&brute_force_tr(&g).unwrap()));
        prop_assert_eq!(check_dual(&Instance::new(g, tr).unwrap()).status, Status::Dual);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn three_procedures_agree(i in ip_pair(6, 4)) {
        let by_enum = compute_new_transversal(&i).unwrap().is_some();
        let by_search = check_dual(&i).reason == Some(Reason::NewTransversalFound);
        let by_guessing = enumerate_label_sets(&i, default_guess_size(&i))
            .any(|s| check_witness_aug(&i, &s).unwrap());
        prop_assert_eq!(by_enum, by_search);
        prop_assert_eq!(by_enum, by_guessing);
        if by_enum {
            prop_assert!(nd_check_random(&i, 200_000, 11).is_some());
        } else {
            prop_assert!(nd_check_random(&i, 2_000, 11).is_none());
        }
    }
}

/// Tries every way of adding free vertices to the included side.
fn exists_coherent_new_transversal(i: &Instance, sigma: &Assignment) -> bool {
    let free: Vec<usize> = sigma.free().iter().collect();
    (0..1u64 << free.len()).any(|pick| {
        let mut t = sigma.included().clone();
        for (k, &v) in free.iter().enumerate() {
            if pick >> k & 1 == 1 {
                t.insert(v);
            }
        }
        i.is_new_transversal(&t)
    })
}
