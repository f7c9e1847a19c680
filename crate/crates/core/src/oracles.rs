//! Brute-force ground truth, written without reference to the solver so
//! the two can be compared.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Interval, IntervalHypergraph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct OracleBudget {
    pub max_vertices: usize,
    pub max_edges: usize,
    /// Largest number of colours tried.
    pub max_colour_budget: usize,
    /// Search states visited before giving up.
    pub max_states: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_vertices: 16,
            max_edges: 12,
            max_colour_budget: 8,
            max_states: 100_000_000,
        }
    }
}

impl OracleBudget {
    fn check(&self, h: &Hypergraph) -> Result<()> {
        if h.n() > self.max_vertices {
            return Err(Error::budget(format!(
                "{} vertices, oracle limit {}",
                h.n(),
                self.max_vertices
            )));
        }
        if h.m() > self.max_edges {
            return Err(Error::budget(format!(
                "{} edges, oracle limit {}",
                h.m(),
                self.max_edges
            )));
        }
        Ok(())
    }
}

struct ColourSearch<'a> {
    h: &'a Hypergraph,
    k: u32,
    colour: Vec<u32>,
    /// Edges whose largest vertex is `v`, checked once `v` is coloured.
    closing: Vec<Vec<usize>>,
    states: u64,
    max_states: u64,
}

impl ColourSearch<'_> {
    fn edge_ok(&self, e: usize) -> bool {
        let mut counts = vec![0u32; self.k as usize + 1];
        for &v in self.h.edge(e) {
            counts[self.colour[v] as usize] += 1;
        }
        counts[1..].contains(&1)
    }

    /// Colours vertices `v..=n`; colours beyond `used + 1` are never tried,
    /// so each colouring is visited once up to renaming.
    fn extend(&mut self, v: usize, used: u32) -> Result<bool> {
        if v > self.h.n() {
            return Ok(true);
        }
        for c in 0..=(used + 1).min(self.k) {
            self.states += 1;
            if self.states > self.max_states {
                return Err(Error::budget(format!("oracle visited {} states", self.max_states)));
            }
            self.colour[v] = c;
            if self.closing[v].iter().all(|&e| self.edge_ok(e)) && self.extend(v + 1, used.max(c))? {
                return Ok(true);
            }
        }
        self.colour[v] = 0;
        Ok(false)
    }
}

/// Least number of non-zero colours in a conflict-free colouring, by
/// exhaustive search over colourings with colours in first-use order.
pub fn chi_cf_bruteforce(h: &Hypergraph, budget: &OracleBudget) -> Result<usize> {
    budget.check(h)?;
    if h.m() == 0 {
        return Ok(0);
    }
    let mut closing = vec![Vec::new(); h.n() + 1];
    for e in 0..h.m() {
        closing[*h.edge(e).iter().max().expect("edges are non-empty")].push(e);
    }
    let mut states = 0;
    for k in 1..=budget.max_colour_budget as u32 {
        let mut s = ColourSearch {
            h,
            k,
            colour: vec![0; h.n() + 1],
            closing: closing.clone(),
            states,
            max_states: budget.max_states,
        };
        if s.extend(1, 0)? {
            return Ok(k as usize);
        }
        states = s.states;
    }
    Err(Error::budget(format!(
        "no conflict-free colouring with {} colours",
        budget.max_colour_budget
    )))
}

/// Least number of parts in a partition of the edges where every part has a
/// set meeting each of its edges exactly once.
///
/// Every vertex subset is tried to find which edge sets are exactly
/// hittable; the partition itself is a dynamic programme over edge subsets.
pub fn min_ehs_partition_bruteforce(h: &Hypergraph, budget: &OracleBudget) -> Result<usize> {
    budget.check(h)?;
    let (n, m) = (h.n(), h.m());
    if n >= 32 || m >= 32 {
        return Err(Error::budget(
            "subset enumeration needs fewer than 32 vertices and edges",
        ));
    }
    let work = (1u64 << n) * m as u64 + 3u64.pow(m as u32);
    if work > budget.max_states {
        return Err(Error::budget(format!("partition oracle needs {work} states")));
    }
    let edge_masks: Vec<u64> = h
        .edges()
        .iter()
        .map(|e| e.iter().fold(0u64, |acc, &v| acc | 1 << (v - 1)))
        .collect();
    let full = (1usize << m) - 1;
    let mut hittable = vec![false; full + 1];
    for s in 0u64..(1 << n) {
        let exact = (0..m)
            .filter(|&e| (edge_masks[e] & s).count_ones() == 1)
            .fold(0usize, |acc, e| acc | 1 << e);
        hittable[exact] = true;
    }
    // Subsets of an exactly hittable edge set are exactly hittable.
    for bit in 0..m {
        for mask in (0..=full).rev() {
            if mask & (1 << bit) == 0 && hittable[mask | 1 << bit] {
                hittable[mask] = true;
            }
        }
    }
    let mut parts = vec![usize::MAX; full + 1];
    parts[0] = 0;
    for mask in 1..=full {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        // Submasks of `rest`, each joined with the lowest edge.
        let mut sub = rest;
        loop {
            let part = sub | low;
            if hittable[part] && parts[mask ^ part] != usize::MAX {
                parts[mask] = parts[mask].min(parts[mask ^ part] + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    Ok(parts[full])
}

/// A reproducible random interval hypergraph: `n` and `m` uniform in
/// `1..=n_max` and `1..=m_max`, every interval uniform over all `[l, r]`.
pub fn random_interval_hypergraph(n_max: usize, m_max: usize, seed: u64) -> Result<IntervalHypergraph> {
    if n_max == 0 || m_max == 0 {
        return Err(Error::input("bounds must be positive"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=n_max);
    let m = rng.gen_range(1..=m_max);
    let pairs = n * (n + 1) / 2;
    let intervals = (0..m)
        .map(|_| {
            // Decode an index into the triangle of pairs l <= r.
            let mut idx = rng.gen_range(0..pairs);
            let mut l = 1;
            while idx > n - l {
                idx -= n - l + 1;
                l += 1;
            }
            Interval::new(l, l + idx)
        })
        .collect();
    IntervalHypergraph::new(n, intervals)
}

/// A reproducible random hypergraph whose edges are uniform over the
/// non-empty subsets of `1..=n`.
pub fn random_hypergraph(n_max: usize, m_max: usize, seed: u64) -> Result<Hypergraph> {
    if n_max == 0 || m_max == 0 || n_max >= 64 {
        return Err(Error::input("bounds must be in 1..64"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=n_max);
    let m = rng.gen_range(1..=m_max);
    let edges = (0..m)
        .map(|_| {
            let mask: u64 = rng.gen_range(1..(1u64 << n));
            (1..=n).filter(|&v| mask >> (v - 1) & 1 == 1).collect()
        })
        .collect();
    Hypergraph::new(n, edges)
}
