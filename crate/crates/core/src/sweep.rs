//! Exact test for a conflict-free colouring of intervals with at most `q`
//! colours.
//!
//! Points are coloured from left to right. All that later intervals can
//! observe of a colour is where it last occurred twice, and only positions
//! inside an interval that is still open matter. A state is therefore one
//! pair of positions per colour; colours are interchangeable, so the pairs
//! are kept sorted and equal states are merged.

use std::collections::HashMap;

use crate::config::Budgets;
use crate::error::{Error, Result};
use crate::hypergraph::{Colouring, IntervalHypergraph};

/// Latest and second latest position of each colour, `0` for none.
type State = Vec<(u32, u32)>;

struct Layer {
    states: Vec<State>,
    /// State of the previous layer and the colour index chosen there
    /// (`0` neutral, `k` the `k`-th pair).
    parent: Vec<(usize, usize)>,
}

/// Colours position `p` with choice `k` and clips positions left of `lo`.
/// Returns the sorted state and where each old colour index went, or `None`
/// if an interval ending at `p` with a left end in `ends` loses its unique
/// colour.
fn step(st: &State, k: usize, p: u32, ends: &[u32], lo: u32) -> Option<(State, Vec<usize>)> {
    let mut next = st.clone();
    if k > 0 {
        next[k - 1] = (p, next[k - 1].0);
    }
    for &l in ends {
        if !next.iter().any(|&(a, b)| a >= l && b < l) {
            return None;
        }
    }
    for pair in &mut next {
        if pair.0 < lo {
            *pair = (0, 0);
        } else if pair.1 < lo {
            pair.1 = 0;
        }
    }
    let mut order: Vec<usize> = (0..next.len()).collect();
    order.sort_by_key(|&i| (next[i], i));
    let mut perm = vec![0; next.len()];
    for (j, &i) in order.iter().enumerate() {
        perm[i] = j;
    }
    Some((order.iter().map(|&i| next[i]).collect(), perm))
}

/// A conflict-free colouring with colours in `0..=q`, or `None` if there is
/// none. Fails with [`Error::Budget`] when a layer holds more than
/// `budgets.sweep_states` states.
pub fn sweep_colouring(ih: &IntervalHypergraph, q: u32, budgets: &Budgets) -> Result<Option<Colouring>> {
    let n = ih.n();
    let q = q as usize;
    let mut ends: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for iv in ih.intervals() {
        ends[iv.r].push(iv.l as u32);
    }
    // Least left end of an interval still open after position p.
    let lo: Vec<u32> = (0..=n)
        .map(|p| {
            ih.intervals()
                .iter()
                .filter(|iv| iv.l <= p && iv.r > p)
                .map(|iv| iv.l as u32)
                .min()
                .unwrap_or(n as u32 + 1)
        })
        .collect();

    let mut layers = vec![Layer {
        states: vec![vec![(0, 0); q]],
        parent: vec![(0, 0)],
    }];
    for p in 1..=n {
        let prev = layers.last().expect("layer 0 exists");
        let mut index: HashMap<State, usize> = HashMap::new();
        let mut layer = Layer {
            states: Vec::new(),
            parent: Vec::new(),
        };
        for (s, st) in prev.states.iter().enumerate() {
            for k in 0..=q {
                // Equal pairs are interchangeable colours.
                if k >= 2 && st[k - 1] == st[k - 2] {
                    continue;
                }
                let Some((next, _)) = step(st, k, p as u32, &ends[p], lo[p]) else {
                    continue;
                };
                if !index.contains_key(&next) {
                    index.insert(next.clone(), layer.states.len());
                    layer.states.push(next);
                    layer.parent.push((s, k));
                }
            }
        }
        if layer.states.len() > budgets.sweep_states {
            return Err(Error::budget(format!(
                "colouring sweep exceeded {} states at position {p}",
                budgets.sweep_states
            )));
        }
        if layer.states.is_empty() {
            return Ok(None);
        }
        layers.push(layer);
    }

    // Walk back from any final state, tracking which colour each sorted
    // index stands for.
    let mut colours = vec![0u32; n];
    let mut label: Vec<u32> = (1..=q as u32).collect();
    let mut id = 0;
    for p in (1..=n).rev() {
        let (s, k) = layers[p].parent[id];
        let prev = &layers[p - 1].states[s];
        let (_, perm) = step(prev, k, p as u32, &ends[p], lo[p]).expect("recorded transitions are valid");
        label = perm.iter().map(|&j| label[j]).collect();
        if k > 0 {
            colours[p - 1] = label[k - 1];
        }
        id = s;
    }
    Ok(Some(Colouring::new(colours)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::verify_cf;

    fn least(ih: &IntervalHypergraph) -> u32 {
        (1..)
            .find(|&q| sweep_colouring(ih, q, &Budgets::default()).unwrap().is_some())
            .unwrap()
    }

    #[test]
    fn discrete_hypergraphs() {
        let expected = [1, 2, 2, 3, 3, 3, 3, 4, 4];
        for (n, &chi) in (1..=9).zip(&expected) {
            let ih = IntervalHypergraph::discrete(n);
            assert_eq!(least(&ih), chi, "n = {n}");
            let c = sweep_colouring(&ih, chi, &Budgets::default()).unwrap().unwrap();
            assert!(verify_cf(ih.hypergraph(), &c).unwrap().is_cf);
            assert_eq!(c.colours_used(), chi as usize);
        }
    }

    #[test]
    fn zero_colours() {
        let ih = IntervalHypergraph::from_pairs(3, &[(1, 2)]).unwrap();
        assert!(sweep_colouring(&ih, 0, &Budgets::default()).unwrap().is_none());
    }

    #[test]
    fn state_budget() {
        let ih = IntervalHypergraph::discrete(6);
        let tight = Budgets {
            sweep_states: 2,
            ..Budgets::default()
        };
        assert!(matches!(sweep_colouring(&ih, 3, &tight), Err(Error::Budget(_))));
    }
}
