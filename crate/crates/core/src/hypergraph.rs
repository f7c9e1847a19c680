//! Hypergraphs, interval hypergraphs and colourings.
//!
//! Vertices are always the integers `1..=n`. Hyperedges are kept in input
//! order and addressed by their position, so two equal hyperedges are still
//! two distinct edges.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite hypergraph on the vertex set `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Builds a hypergraph, sorting the vertices of every edge.
    ///
    /// Empty edges, repeated vertices inside one edge and vertices outside
    /// `1..=n` are rejected.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut checked = Vec::with_capacity(edges.len());
        for (i, mut edge) in edges.into_iter().enumerate() {
            if edge.is_empty() {
                return Err(Error::input(format!("edge {i} is empty")));
            }
            edge.sort_unstable();
            if let Some(&v) = edge.iter().find(|&&v| v == 0 || v > n) {
                return Err(Error::input(format!("edge {i} contains vertex {v} outside 1..={n}")));
            }
            if edge.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::input(format!("edge {i} repeats a vertex")));
            }
            checked.push(edge);
        }
        Ok(Hypergraph { n, edges: checked })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> &[usize] {
        &self.edges[index]
    }

    /// Sum of the edge sizes.
    pub fn total_size(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }

    /// Product of the edge sizes, saturating at `u128::MAX`.
    pub fn representative_count(&self) -> u128 {
        self.edges
            .iter()
            .fold(1u128, |acc, e| acc.saturating_mul(e.len() as u128))
    }

    pub fn contains(&self, edge: usize, v: usize) -> bool {
        self.edges[edge].binary_search(&v).is_ok()
    }

    /// The sub-hypergraph on the same vertices keeping only `edges`.
    pub fn restrict(&self, edges: &[usize]) -> Hypergraph {
        Hypergraph {
            n: self.n,
            edges: edges.iter().map(|&e| self.edges[e].clone()).collect(),
        }
    }

    pub(crate) fn check_vertex_set(&self, set: &[usize]) -> Result<()> {
        match set.iter().find(|&&v| v == 0 || v > self.n) {
            Some(v) => Err(Error::input(format!("vertex {v} outside 1..={}", self.n))),
            None => Ok(()),
        }
    }
}

/// The closed range `{l, l+1, ..., r}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct Interval {
    pub l: usize,
    pub r: usize,
}

impl Interval {
    pub fn new(l: usize, r: usize) -> Self {
        Interval { l, r }
    }

    pub fn len(&self) -> usize {
        self.r + 1 - self.l
    }

    pub fn is_empty(&self) -> bool {
        self.r < self.l
    }

    pub fn contains(&self, p: usize) -> bool {
        self.l <= p && p <= self.r
    }

    pub fn points(&self) -> std::ops::RangeInclusive<usize> {
        self.l..=self.r
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.l <= other.r && other.l <= self.r
    }
}

impl From<(usize, usize)> for Interval {
    fn from((l, r): (usize, usize)) -> Self {
        Interval { l, r }
    }
}

impl From<Interval> for (usize, usize) {
    fn from(i: Interval) -> Self {
        (i.l, i.r)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.l, self.r)
    }
}

/// A hypergraph whose edges are ranges of consecutive points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalHypergraph {
    intervals: Vec<Interval>,
    hypergraph: Hypergraph,
}

impl IntervalHypergraph {
    pub fn new(n: usize, intervals: Vec<Interval>) -> Result<Self> {
        for (i, iv) in intervals.iter().enumerate() {
            if iv.l == 0 || iv.l > iv.r || iv.r > n {
                return Err(Error::input(format!(
                    "interval {i} = {iv} is not a range inside 1..={n}"
                )));
            }
        }
        let edges = intervals.iter().map(|iv| iv.points().collect()).collect();
        Ok(IntervalHypergraph {
            intervals,
            hypergraph: Hypergraph { n, edges },
        })
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Self::new(n, pairs.iter().map(|&p| p.into()).collect())
    }

    /// Every interval on `1..=n`, ordered by left then right endpoint.
    pub fn discrete(n: usize) -> Self {
        let intervals = (1..=n)
            .flat_map(|l| (l..=n).map(move |r| Interval::new(l, r)))
            .collect();
        Self::new(n, intervals).expect("discrete intervals are valid")
    }

    pub fn n(&self) -> usize {
        self.hypergraph.n
    }

    pub fn m(&self) -> usize {
        self.intervals.len()
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn interval(&self, index: usize) -> Interval {
        self.intervals[index]
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.hypergraph
    }

    /// Recovers the interval structure of a hypergraph whose edges are all
    /// consecutive ranges.
    pub fn from_hypergraph(h: &Hypergraph) -> Result<Self> {
        let mut intervals = Vec::with_capacity(h.m());
        for (i, e) in h.edges().iter().enumerate() {
            let (l, r) = (e[0], e[e.len() - 1]);
            if r + 1 - l != e.len() {
                return Err(Error::input(format!("edge {i} is not a range")));
            }
            intervals.push(Interval::new(l, r));
        }
        Self::new(h.n(), intervals)
    }
}

/// A map from vertices `1..=n` to colours, colour 0 meaning "no colour".
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Colouring {
    colours: Vec<u32>,
}

impl Colouring {
    /// `colours[v - 1]` is the colour of vertex `v`.
    pub fn new(colours: Vec<u32>) -> Self {
        Colouring { colours }
    }

    pub fn zeros(n: usize) -> Self {
        Colouring { colours: vec![0; n] }
    }

    /// Builds a colouring from `vertex -> colour` pairs; every vertex of
    /// `1..=n` must appear exactly once.
    pub fn from_map(n: usize, map: &BTreeMap<usize, u32>) -> Result<Self> {
        if let Some((&v, _)) = map.iter().find(|(&v, _)| v == 0 || v > n) {
            return Err(Error::input(format!("colouring names vertex {v} outside 1..={n}")));
        }
        if map.len() != n {
            let missing = (1..=n).find(|v| !map.contains_key(v)).unwrap_or(0);
            return Err(Error::input(format!("colouring leaves vertex {missing} unassigned")));
        }
        Ok(Colouring {
            colours: map.values().copied().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.colours.len()
    }

    pub fn get(&self, v: usize) -> u32 {
        self.colours[v - 1]
    }

    pub fn set(&mut self, v: usize, colour: u32) {
        self.colours[v - 1] = colour;
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.colours
    }

    /// Largest colour value, i.e. the palette `{0..k}` this colouring lives in.
    pub fn palette(&self) -> u32 {
        self.colours.iter().copied().max().unwrap_or(0)
    }

    /// Number of distinct non-zero colours actually used.
    pub fn colours_used(&self) -> usize {
        let mut seen: Vec<u32> = self.colours.iter().copied().filter(|&c| c != 0).collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Vertices carrying `colour`, ascending.
    pub fn class(&self, colour: u32) -> Vec<usize> {
        (1..=self.n()).filter(|&v| self.get(v) == colour).collect()
    }

    pub fn to_map(&self) -> BTreeMap<usize, u32> {
        (1..=self.n()).map(|v| (v, self.get(v))).collect()
    }
}

/// Outcome of [`verify_cf`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CfReport {
    pub is_cf: bool,
    /// Per edge, the least vertex whose non-zero colour is unique in the edge.
    pub witnesses: Vec<Option<usize>>,
}

impl CfReport {
    pub fn first_failure(&self) -> Option<usize> {
        self.witnesses.iter().position(Option::is_none)
    }
}

fn unique_colour_witness(edge: &[usize], c: &Colouring) -> Option<usize> {
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for &v in edge {
        let col = c.get(v);
        if col != 0 {
            *counts.entry(col).or_default() += 1;
        }
    }
    edge.iter().copied().find(|&v| {
        let col = c.get(v);
        col != 0 && counts[&col] == 1
    })
}

/// Checks that every edge sees some non-zero colour exactly once.
pub fn verify_cf(h: &Hypergraph, c: &Colouring) -> Result<CfReport> {
    if c.n() != h.n() {
        return Err(Error::input(format!(
            "colouring covers {} vertices, hypergraph has {}",
            c.n(),
            h.n()
        )));
    }
    let witnesses: Vec<_> = h.edges().iter().map(|e| unique_colour_witness(e, c)).collect();
    Ok(CfReport {
        is_cf: witnesses.iter().all(Option::is_some),
        witnesses,
    })
}

/// True iff `set` meets every edge in exactly one vertex.
pub fn is_exact_hitting_set(h: &Hypergraph, set: &[usize]) -> Result<bool> {
    h.check_vertex_set(set)?;
    let mut member = vec![false; h.n() + 1];
    for &v in set {
        member[v] = true;
    }
    Ok(h.edges().iter().all(|e| e.iter().filter(|&&v| member[v]).count() == 1))
}

fn by_right_endpoint(ih: &IntervalHypergraph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..ih.m()).collect();
    order.sort_by_key(|&i| (ih.interval(i).r, i));
    order
}

/// Maximum number of pairwise disjoint intervals and one family attaining it,
/// found by the right-endpoint greedy sweep.
pub fn max_disjoint_intervals(ih: &IntervalHypergraph) -> (usize, Vec<Interval>) {
    let mut chosen = Vec::new();
    let mut last_r = 0;
    for i in by_right_endpoint(ih) {
        let iv = ih.interval(i);
        if iv.l > last_r {
            chosen.push(iv);
            last_r = iv.r;
        }
    }
    (chosen.len(), chosen)
}

/// Points stabbing every interval: repeatedly take the smallest right
/// endpoint among the intervals not yet stabbed.
pub(crate) fn piercing_points(ih: &IntervalHypergraph) -> Vec<usize> {
    let mut points = Vec::new();
    let mut last = 0;
    for i in by_right_endpoint(ih) {
        let iv = ih.interval(i);
        if points.is_empty() || iv.l > last {
            last = iv.r;
            points.push(last);
        }
    }
    points
}

/// One or two points stabbing every interval, for families with no three
/// pairwise disjoint members.
pub fn clique_cover_points(ih: &IntervalHypergraph) -> Result<Vec<usize>> {
    let (disjoint, _) = max_disjoint_intervals(ih);
    if disjoint > 2 {
        return Err(Error::contract(format!(
            "clique cover points need at most 2 disjoint intervals, found {disjoint}"
        )));
    }
    Ok(piercing_points(ih))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::ten_point_example;

    fn single(edge: Vec<usize>, n: usize) -> Hypergraph {
        Hypergraph::new(n, vec![edge]).unwrap()
    }

    #[test]
    fn validation() {
        assert!(Hypergraph::new(3, vec![vec![]]).is_err());
        assert!(Hypergraph::new(3, vec![vec![4]]).is_err());
        assert!(Hypergraph::new(3, vec![vec![0]]).is_err());
        assert!(Hypergraph::new(3, vec![vec![1, 1]]).is_err());
        assert!(IntervalHypergraph::from_pairs(3, &[(2, 1)]).is_err());
        assert!(IntervalHypergraph::from_pairs(3, &[(1, 4)]).is_err());
        let h = Hypergraph::new(3, vec![vec![3, 1]]).unwrap();
        assert_eq!(h.edge(0), &[1, 3]);
    }

    #[test]
    fn duplicate_edges_are_kept() {
        let ih = IntervalHypergraph::from_pairs(3, &[(1, 2), (1, 2)]).unwrap();
        assert_eq!(ih.m(), 2);
        assert_eq!(ih.hypergraph().total_size(), 4);
    }

    #[test]
    fn interval_round_trip() {
        let ih = ten_point_example();
        let back = IntervalHypergraph::from_hypergraph(ih.hypergraph()).unwrap();
        assert_eq!(back, ih);
        let bad = Hypergraph::new(3, vec![vec![1, 3]]).unwrap();
        assert!(IntervalHypergraph::from_hypergraph(&bad).is_err());
    }

    #[test]
    fn verify_unique_colour() {
        let h = single(vec![1, 2], 2);
        let r = verify_cf(&h, &Colouring::new(vec![1, 0])).unwrap();
        assert!(r.is_cf);
        assert_eq!(r.witnesses, vec![Some(1)]);
        let r = verify_cf(&h, &Colouring::new(vec![1, 1])).unwrap();
        assert!(!r.is_cf);
        assert_eq!(r.first_failure(), Some(0));
    }

    #[test]
    fn verify_ten_point_example() {
        let ih = ten_point_example();
        let mut c = Colouring::zeros(10);
        for (v, col) in [(3, 2), (5, 1), (7, 1), (9, 2)] {
            c.set(v, col);
        }
        let r = verify_cf(ih.hypergraph(), &c).unwrap();
        assert!(r.is_cf);
        // [1,5]: colours 2,1 each once -> least witness 3.
        assert_eq!(r.witnesses[0], Some(3));
        // [5,10]: 5,7 share colour 1, so only 9 works.
        assert_eq!(r.witnesses[1], Some(9));
    }

    #[test]
    fn verify_rejects_wrong_length() {
        let h = single(vec![1, 2], 2);
        assert!(matches!(
            verify_cf(&h, &Colouring::new(vec![1, 0, 0])),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn colouring_from_map_is_strict() {
        let mut map = BTreeMap::new();
        map.insert(1, 1);
        assert!(Colouring::from_map(2, &map).is_err());
        map.insert(3, 0);
        assert!(Colouring::from_map(2, &map).is_err());
        map.remove(&3);
        map.insert(2, 0);
        let c = Colouring::from_map(2, &map).unwrap();
        assert_eq!(c.as_slice(), &[1, 0]);
        assert_eq!(c.colours_used(), 1);
    }

    #[test]
    fn exact_hitting() {
        let disjoint = IntervalHypergraph::from_pairs(9, &[(1, 3), (4, 6), (7, 9)]).unwrap();
        assert!(is_exact_hitting_set(disjoint.hypergraph(), &[2, 4, 9]).unwrap());
        let ih = ten_point_example();
        assert!(!is_exact_hitting_set(ih.hypergraph(), &[3, 5, 7, 9]).unwrap());
        assert!(!is_exact_hitting_set(&single(vec![1, 2], 2), &[]).unwrap());
        assert!(is_exact_hitting_set(&single(vec![1, 2], 2), &[5]).is_err());
    }

    #[test]
    fn disjoint_sweep() {
        let (count, witness) = max_disjoint_intervals(&ten_point_example());
        assert_eq!(count, 4);
        assert_eq!(
            witness,
            vec![(2, 3).into(), (4, 5).into(), (6, 7).into(), (8, 9).into()]
        );
        let one = IntervalHypergraph::from_pairs(4, &[(2, 4)]).unwrap();
        assert_eq!(max_disjoint_intervals(&one).0, 1);
        let overlap = IntervalHypergraph::from_pairs(5, &[(1, 3), (2, 5)]).unwrap();
        assert_eq!(max_disjoint_intervals(&overlap).0, 1);
        let empty = IntervalHypergraph::new(5, vec![]).unwrap();
        assert_eq!(max_disjoint_intervals(&empty).0, 0);
    }

    #[test]
    fn piercing() {
        let shared = IntervalHypergraph::from_pairs(6, &[(1, 4), (2, 6), (3, 5)]).unwrap();
        assert_eq!(clique_cover_points(&shared).unwrap(), vec![4]);
        let two = IntervalHypergraph::from_pairs(5, &[(1, 2), (4, 5), (1, 5)]).unwrap();
        assert_eq!(clique_cover_points(&two).unwrap(), vec![2, 5]);
        let point = IntervalHypergraph::from_pairs(3, &[(3, 3)]).unwrap();
        assert_eq!(clique_cover_points(&point).unwrap(), vec![3]);
        assert!(matches!(
            clique_cover_points(&ten_point_example()),
            Err(Error::Contract(_))
        ));
    }
}
