//! Searches, groups and census counts against the brute-force oracles.

mod common;

use std::collections::BTreeSet;

use common::*;
use kordered::claims::{verify_claims, ClaimOptions, ClaimStatus};
use kordered::enumeration::cubic_graphs;
use kordered::orderedness::{
    canonical_sequences, find_cycle_through_in_order, find_hamiltonian_cycle_through_in_order, is_k_ordered,
    is_k_ordered_hamiltonian, validate, OrderOptions, Outcome, VertexSequence,
};
use kordered::symmetry::automorphism_group;
use kordered::{families, graph6_decode, is_isomorphic, Graph};
use serde_json::Value;

#[test]
fn connected_graph_generator_counts() {
    for n in 1..=7 {
        assert_eq!(connected_graphs(n).len(), CONNECTED_GRAPH_COUNTS[n - 1], "n={n}");
    }
}

fn agree_on(g: &Graph, cycles: &[Vec<usize>], k: usize, hamiltonian: bool) {
    let realized = realized_sequences(g, cycles, k, hamiltonian);
    for s in canonical_sequences(g.n(), k) {
        let r = if hamiltonian {
            find_hamiltonian_cycle_through_in_order(g, &s, None).unwrap()
        } else {
            find_cycle_through_in_order(g, &s, None).unwrap()
        };
        let expected = realized.contains(s.vertices());
        match &r.outcome {
            Outcome::Realized(w) => {
                assert!(expected, "{g:?} {s:?}: search found a cycle the oracle does not know");
                validate(g, w.vertices(), s.vertices(), hamiltonian).unwrap();
            }
            Outcome::Refuted => assert!(!expected, "{g:?} {s:?}: search missed a cycle"),
            Outcome::Inconclusive => panic!("no node limit was set"),
        }
    }
}

#[test]
fn cycle_search_matches_enumeration_on_all_small_connected_graphs() {
    let graphs = connected_graphs(8);
    assert_eq!(graphs.len(), CONNECTED_GRAPH_COUNTS[7]);
    for n in 3..=8 {
        let graphs = if n == 8 { graphs.clone() } else { connected_graphs(n) };
        for g in &graphs {
            let cycles = all_cycles(g);
            for k in 3..=4.min(n) {
                agree_on(g, &cycles, k, false);
                agree_on(g, &cycles, k, true);
            }
        }
    }
}

#[test]
fn generalized_petersen_against_cycle_enumeration() {
    for n in 6..=10 {
        let g = families::generalized_petersen(n, (n - 1) / 2).unwrap();
        let realized = realized_sequences(&g, &all_cycles(&g), 4, false);
        let oracle_holds = realized.len() == all_canonical_sequences(g.n(), 4).len();
        let v = is_k_ordered(&g, 4, OrderOptions::default()).unwrap();
        assert_eq!(v.holds, oracle_holds, "n={n}");
        if let Some(s) = v.failing_sequence {
            assert!(!realized.contains(s.vertices()));
        }
    }
}

#[test]
fn named_verdicts_against_cycle_enumeration() {
    let cases = [
        ("K4", families::complete(4).unwrap()),
        ("K3,3", families::complete_bipartite(3, 3).unwrap()),
        ("petersen", families::petersen()),
        ("heawood", families::heawood()),
    ];
    for (name, g) in cases {
        let cycles = all_cycles(&g);
        let total = all_canonical_sequences(g.n(), 4).len();
        let ko = realized_sequences(&g, &cycles, 4, false).len() == total;
        let koh = realized_sequences(&g, &cycles, 4, true).len() == total;
        assert_eq!(
            is_k_ordered(&g, 4, OrderOptions::default()).unwrap().holds,
            ko,
            "{name}"
        );
        assert_eq!(
            is_k_ordered_hamiltonian(&g, 4, OrderOptions::default()).unwrap().holds,
            koh,
            "{name}"
        );
    }
}

#[test]
fn automorphism_counts_match_backtracking() {
    assert_eq!(automorphism_count(&families::petersen()), 120);
    assert_eq!(automorphism_count(&families::heawood()), 336);
    for g in [
        families::petersen(),
        families::heawood(),
        families::complete(4).unwrap(),
        families::complete_bipartite(3, 3).unwrap(),
        families::torus_graph(3).unwrap(),
        families::generalized_petersen(8, 3).unwrap(),
    ] {
        assert_eq!(automorphism_group(&g).len(), automorphism_count(&g));
    }
    for g in connected_graphs(6) {
        assert_eq!(automorphism_group(&g).len(), automorphism_count(&g), "{g:?}");
    }
}

#[test]
fn cubic_census_matches_labeled_enumeration() {
    for n in [4, 6, 8, 10] {
        let oracle = cubic_classes(n);
        for girth in 3..=5 {
            let expected: Vec<&Graph> = oracle.iter().filter(|g| brute_girth(g).unwrap() >= girth).collect();
            let found = cubic_graphs(n, girth).unwrap();
            assert_eq!(found.len(), expected.len(), "n={n} girth>={girth}");
            for e in expected {
                assert_eq!(found.iter().filter(|f| brute_isomorphic(f, e)).count(), 1);
            }
        }
    }
}

#[test]
fn census_representatives() {
    assert_eq!(cubic_graphs(4, 3).unwrap().len(), 1);
    assert_eq!(cubic_graphs(6, 4).unwrap().len(), 1);
    let p = cubic_graphs(10, 5).unwrap();
    assert_eq!(p.len(), 1);
    assert!(is_isomorphic(&p[0], &families::petersen()));
    assert_eq!(cubic_graphs(12, 5).unwrap().len(), 2);
}

fn report(id: &str) -> Value {
    let r = verify_claims(Some(&[id.to_string()]), &ClaimOptions::default()).unwrap();
    serde_json::to_value(&r[0]).unwrap()
}

fn seq_of(v: &Value) -> Vec<usize> {
    serde_json::from_value(v.clone()).unwrap()
}

fn refuted_by_oracle(graph6: &str, seq: &[usize], hamiltonian: bool) -> bool {
    let g = graph6_decode(graph6).unwrap();
    !on_some_cycle(&all_cycles(&g), seq, g.n(), hamiltonian)
}

#[test]
fn square_refutations_recheck() {
    let r = report("thm-2.1");
    assert_eq!(r["status"], "pass");
    let mut checked = 0;
    for order in r["payload"]["orders"].as_array().unwrap() {
        for item in order["refutations"].as_array().unwrap() {
            let g6 = item["graph6"].as_str().unwrap();
            let g = graph6_decode(g6).unwrap();
            assert!(g.n() <= 12 && brute_has_square(&g));
            assert!(refuted_by_oracle(g6, &seq_of(&item["sequence"]), false));
            checked += 1;
        }
    }
    assert_eq!(checked, 5 + 16 + 77);
}

#[test]
fn other_refutations_recheck() {
    let r = report("prop-3.5");
    assert_eq!(r["status"], "pass");
    for item in r["payload"]["graphs"].as_array().unwrap() {
        let g6 = item["graph6"].as_str().unwrap();
        assert!(refuted_by_oracle(g6, &seq_of(&item["failing_sequence"]), true));
        let g = graph6_decode(g6).unwrap();
        validate(&g, &seq_of(&item["hamiltonian_cycle"]), &[], true).unwrap();
    }

    let r = report("thm-4.1");
    let m2 = &r["payload"]["tori"][0];
    assert_eq!(m2["m"], 2);
    let torus = families::torus_graph(2).unwrap();
    let s = seq_of(&m2["failing_sequence"]);
    assert!(!on_some_cycle(&all_cycles(&torus), &s, torus.n(), false));

    for item in report("prop-2.6")["payload"]["graphs"].as_array().unwrap() {
        if item["failing_sequence"].is_null() {
            continue;
        }
        let n = item["n"].as_u64().unwrap() as usize;
        let g = families::generalized_petersen(n, (n - 1) / 2).unwrap();
        assert!(!on_some_cycle(
            &all_cycles(&g),
            &seq_of(&item["failing_sequence"]),
            g.n(),
            false
        ));
    }
}

#[test]
fn pass_reports_carry_valid_witnesses() {
    for (id, g, hamiltonian, count) in [
        ("thm-2.5", families::petersen(), false, 630),
        ("thm-3.3", families::heawood(), true, 3003),
    ] {
        let r = report(id);
        assert_eq!(r["status"], "pass");
        let witnesses = r["payload"]["witnesses"].as_array().unwrap();
        assert_eq!(witnesses.len(), count);
        let mut seen = BTreeSet::new();
        for w in witnesses {
            let s = seq_of(&w["sequence"]);
            validate(&g, &seq_of(&w["cycle"]), &s, hamiltonian).unwrap();
            seen.insert(s);
        }
        assert_eq!(seen, all_canonical_sequences(g.n(), 4));
    }
}

#[test]
fn claim_statuses() {
    let reports = verify_claims(None, &ClaimOptions::default()).unwrap();
    for r in &reports {
        let expected = if r.id == "prop-2.6" {
            // P(8,3) and P(10,4) turn out to be 4-ordered
            ClaimStatus::Fail
        } else {
            ClaimStatus::Pass
        };
        assert_eq!(r.status, expected, "{}", r.id);
    }
}

#[test]
fn letter_sequences() {
    let h = families::heawood();
    let seq: Vec<usize> = "ABCL"
        .chars()
        .map(|c| families::letter_vertex(&c.to_string()).unwrap())
        .collect();
    let s = VertexSequence::new(seq.clone(), 14).unwrap();
    let r = find_hamiltonian_cycle_through_in_order(&h, &s, None).unwrap();
    validate(&h, r.outcome.witness().unwrap().vertices(), &seq, true).unwrap();
}
