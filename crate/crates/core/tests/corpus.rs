//! The committed corpus: 100 seeded interval hypergraphs with their
//! conflict-free chromatic numbers from the brute-force oracle.
//!
//! Regenerate with `cargo test -p cfc-core --test corpus -- --ignored`.

use std::path::PathBuf;

use cfc_core::oracles::random_interval_hypergraph;
use cfc_core::{
    chi_cf_bruteforce, min_ehs_partition_bruteforce, solve, sweep_colouring, verify_cf, Budgets, Interval,
    IntervalHypergraph, OracleBudget,
};
use serde::{Deserialize, Serialize};

const N_MAX: usize = 12;
const M_MAX: usize = 8;
const SIZE: u64 = 100;

#[derive(Debug, PartialEq, Serialize, Deserialize)]
struct Entry {
    seed: u64,
    n: usize,
    intervals: Vec<Interval>,
    chi_cf: usize,
}

fn path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/corpus.json")
}

fn load() -> Vec<(Entry, IntervalHypergraph)> {
    let text = std::fs::read_to_string(path()).unwrap();
    let entries: Vec<Entry> = serde_json::from_str(&text).unwrap();
    assert_eq!(entries.len() as u64, SIZE);
    entries
        .into_iter()
        .map(|e| {
            let ih = IntervalHypergraph::new(e.n, e.intervals.clone()).unwrap();
            (e, ih)
        })
        .collect()
}

#[test]
#[ignore]
fn regenerate() {
    let entries: Vec<Entry> = (0..SIZE)
        .map(|seed| {
            let ih = random_interval_hypergraph(N_MAX, M_MAX, seed).unwrap();
            Entry {
                seed,
                n: ih.n(),
                intervals: ih.intervals().to_vec(),
                chi_cf: chi_cf_bruteforce(ih.hypergraph(), &OracleBudget::default()).unwrap(),
            }
        })
        .collect();
    std::fs::write(path(), serde_json::to_string_pretty(&entries).unwrap() + "\n").unwrap();
}

#[test]
fn generator_still_produces_the_corpus() {
    for (e, ih) in load() {
        assert_eq!(
            random_interval_hypergraph(N_MAX, M_MAX, e.seed).unwrap(),
            ih,
            "seed {}",
            e.seed
        );
    }
}

#[test]
fn solver_matches_frozen_values() {
    let budgets = Budgets::default();
    for (e, ih) in load() {
        let r = solve(&ih, &budgets).unwrap();
        assert_eq!(r.chi_cf, e.chi_cf, "seed {}", e.seed);
        assert!(verify_cf(ih.hypergraph(), &r.colouring).unwrap().is_cf);
    }
}

#[test]
fn sweep_matches_frozen_values() {
    let budgets = Budgets::default();
    for (e, ih) in load() {
        let q = e.chi_cf as u32;
        assert!(sweep_colouring(&ih, q, &budgets).unwrap().is_some(), "seed {}", e.seed);
        assert!(
            sweep_colouring(&ih, q - 1, &budgets).unwrap().is_none(),
            "seed {}",
            e.seed
        );
    }
}

#[test]
fn partition_oracle_matches_frozen_values() {
    for (e, ih) in load() {
        let parts = min_ehs_partition_bruteforce(ih.hypergraph(), &OracleBudget::default()).unwrap();
        assert_eq!(parts, e.chi_cf, "seed {}", e.seed);
    }
}
