//! Exact algorithms on simple graphs.
//!
//! Vertices are `0..order`. Adjacency is a bit matrix, which keeps the
//! branch-and-bound inner loops to word operations at the sizes this crate
//! targets (a few hundred vertices at most).

use std::cmp::Reverse;
use std::ops::Add;

use fixedbitset::FixedBitSet;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::config::Budgets;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<FixedBitSet>,
    edge_count: usize,
}

impl SimpleGraph {
    pub fn new(order: usize) -> Self {
        SimpleGraph {
            adj: vec![FixedBitSet::with_capacity(order); order],
            edge_count: 0,
        }
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = SimpleGraph::new(order);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(order: usize) -> Self {
        let mut g = SimpleGraph::new(order);
        for u in 0..order {
            for v in u + 1..order {
                g.insert(u, v);
            }
        }
        g
    }

    pub fn cycle(order: usize) -> Self {
        let mut g = SimpleGraph::new(order);
        for u in 0..order {
            g.insert(u, (u + 1) % order);
        }
        g
    }

    /// Adds `{u, v}`; self-loops and out-of-range endpoints are rejected.
    /// Adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::input(format!("self-loop at vertex {u}")));
        }
        if u >= self.order() || v >= self.order() {
            return Err(Error::input(format!(
                "edge ({u}, {v}) outside a graph of order {}",
                self.order()
            )));
        }
        self.insert(u, v);
        Ok(())
    }

    pub(crate) fn insert(&mut self, u: usize, v: usize) {
        debug_assert_ne!(u, v);
        if !self.adj[u].put(v) {
            self.adj[v].insert(u);
            self.edge_count += 1;
        }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbours(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| self.adj[u].ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> SimpleGraph {
        let n = self.order();
        let mut g = SimpleGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.insert(u, v);
                }
            }
        }
        g
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.insert(i, j);
                }
            }
        }
        g
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| u != v && !self.has_edge(u, v)))
    }

    pub fn is_proper_colouring(&self, colours: &[usize]) -> bool {
        colours.len() == self.order() && self.edges().all(|(u, v)| colours[u] != colours[v])
    }

    /// Grows `clique` to a maximal clique by adding the lowest-numbered
    /// compatible vertex until none remains.
    pub fn extend_to_maximal(&self, clique: &[usize]) -> Vec<usize> {
        let mut common = FixedBitSet::with_capacity(self.order());
        common.insert_range(..);
        for &v in clique {
            common.intersect_with(&self.adj[v]);
        }
        let mut out = clique.to_vec();
        while let Some(v) = common.minimum() {
            out.push(v);
            common.intersect_with(&self.adj[v]);
        }
        out.sort_unstable();
        out
    }
}

fn check_order(g: &SimpleGraph, limit: usize, what: &str) -> Result<()> {
    if g.order() > limit {
        Err(Error::budget(format!(
            "{what} limited to {limit} vertices, graph has {}",
            g.order()
        )))
    } else {
        Ok(())
    }
}

/// Search-node counter shared by the branch-and-bound routines.
struct Ticker {
    nodes: u64,
    limit: u64,
    what: &'static str,
}

impl Ticker {
    fn new(limit: u64, what: &'static str) -> Self {
        Ticker { nodes: 0, limit, what }
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.limit {
            Err(Error::budget(format!(
                "{} exceeded {} search nodes",
                self.what, self.limit
            )))
        } else {
            Ok(())
        }
    }
}

struct CliqueSearch<'a, W> {
    g: &'a SimpleGraph,
    w: &'a [W],
    best_w: W,
    best: Option<Vec<usize>>,
    current: Vec<usize>,
    ticker: Ticker,
}

impl<W> CliqueSearch<'_, W>
where
    W: Clone + Ord + Zero + for<'x> Add<&'x W, Output = W>,
{
    /// Orders `cand` by greedy colour class and returns, for each position,
    /// the sum of class maxima up to that position's class.
    fn colour_sort(&self, cand: &[usize]) -> (Vec<usize>, Vec<W>) {
        let mut classes: Vec<(FixedBitSet, Vec<usize>, W)> = Vec::new();
        for &v in cand {
            let slot = classes
                .iter()
                .position(|(members, _, _)| self.g.adj[v].is_disjoint(members));
            match slot {
                Some(i) => {
                    let (members, list, max) = &mut classes[i];
                    members.insert(v);
                    list.push(v);
                    if self.w[v] > *max {
                        *max = self.w[v].clone();
                    }
                }
                None => {
                    let mut members = FixedBitSet::with_capacity(self.g.order());
                    members.insert(v);
                    classes.push((members, vec![v], self.w[v].clone()));
                }
            }
        }
        let mut order = Vec::with_capacity(cand.len());
        let mut bounds = Vec::with_capacity(cand.len());
        let mut acc = W::zero();
        for (_, list, max) in classes {
            acc = acc + &max;
            for v in list {
                order.push(v);
                bounds.push(acc.clone());
            }
        }
        (order, bounds)
    }

    fn expand(&mut self, cand: Vec<usize>, weight: W) -> Result<()> {
        self.ticker.tick()?;
        if weight > self.best_w {
            self.best_w = weight.clone();
            self.best = Some(self.current.clone());
        }
        let (order, bounds) = self.colour_sort(&cand);
        for i in (0..order.len()).rev() {
            if weight.clone() + &bounds[i] <= self.best_w {
                return Ok(());
            }
            let v = order[i];
            let next: Vec<usize> = order[..i].iter().copied().filter(|&u| self.g.has_edge(u, v)).collect();
            self.current.push(v);
            self.expand(next, weight.clone() + &self.w[v])?;
            self.current.pop();
        }
        Ok(())
    }
}

/// Heaviest clique whose weight strictly exceeds `floor`, if any.
fn heaviest_clique<W>(g: &SimpleGraph, w: &[W], floor: W, budgets: &Budgets) -> Result<Option<(W, Vec<usize>)>>
where
    W: Clone + Ord + Zero + for<'x> Add<&'x W, Output = W>,
{
    check_order(g, budgets.clique_order, "clique search")?;
    let mut cand: Vec<usize> = (0..g.order()).filter(|&v| !w[v].is_zero()).collect();
    cand.sort_by_key(|&v| (Reverse(w[v].clone()), Reverse(g.degree(v)), v));
    let mut search = CliqueSearch {
        g,
        w,
        best_w: floor,
        best: None,
        current: Vec::new(),
        ticker: Ticker::new(budgets.search_nodes, "clique search"),
    };
    search.expand(cand, W::zero())?;
    Ok(search.best.map(|mut c| {
        c.sort_unstable();
        (search.best_w, c)
    }))
}

enum ScaledWeights {
    Small(Vec<u64>),
    Big(Vec<BigUint>),
}

/// Puts rational weights over a common denominator.
fn scale(weights: &[BigRational]) -> Result<(BigInt, ScaledWeights)> {
    if let Some(i) = weights.iter().position(|w| w < &BigRational::zero()) {
        return Err(Error::input(format!("vertex {i} has negative weight {}", weights[i])));
    }
    let denom = weights.iter().fold(BigInt::from(1), |acc, w| acc.lcm(w.denom()));
    let numerators: Vec<BigUint> = weights
        .iter()
        .map(|w| (w.numer() * (&denom / w.denom())).to_biguint().expect("non-negative"))
        .collect();
    let total: BigUint = numerators.iter().sum();
    let scaled = if total.to_u64().is_some() {
        ScaledWeights::Small(numerators.iter().map(|x| x.to_u64().unwrap()).collect())
    } else {
        ScaledWeights::Big(numerators)
    };
    Ok((denom, scaled))
}

/// Heaviest clique whose weight strictly exceeds `floor`.
pub(crate) fn heaviest_clique_above(
    g: &SimpleGraph,
    weights: &[BigRational],
    floor: &BigRational,
    budgets: &Budgets,
) -> Result<Option<(BigRational, Vec<usize>)>> {
    assert_eq!(weights.len(), g.order(), "one weight per vertex");
    let (denom, scaled) = scale(weights)?;
    // Integer floor f with  W > floor*denom  <=>  W > f.
    let scaled_floor = (floor * BigRational::from_integer(denom.clone())).floor().to_integer();
    let to_rational = |num: BigInt| BigRational::new(num, denom.clone());
    if scaled_floor < BigInt::zero() {
        // Every clique, even the empty one, clears a negative floor.
        return match scaled {
            ScaledWeights::Small(w) => {
                let best = heaviest_clique(g, &w, 0, budgets)?;
                Ok(Some(best.map_or((BigRational::zero(), Vec::new()), |(x, c)| {
                    (to_rational(x.into()), c)
                })))
            }
            ScaledWeights::Big(w) => {
                let best = heaviest_clique(g, &w, BigUint::zero(), budgets)?;
                Ok(Some(best.map_or((BigRational::zero(), Vec::new()), |(x, c)| {
                    (to_rational(x.into()), c)
                })))
            }
        };
    }
    let floor_u = scaled_floor.to_biguint().expect("non-negative");
    match scaled {
        ScaledWeights::Small(w) => {
            let Some(f) = floor_u.to_u64() else {
                return Ok(None);
            };
            Ok(heaviest_clique(g, &w, f, budgets)?.map(|(x, c)| (to_rational(x.into()), c)))
        }
        ScaledWeights::Big(w) => Ok(heaviest_clique(g, &w, floor_u, budgets)?.map(|(x, c)| (to_rational(x.into()), c))),
    }
}

/// Maximum total weight of a clique, with a witness (sorted). Zero-weight
/// vertices are left out of the witness.
pub fn max_weight_clique(
    g: &SimpleGraph,
    weights: &[BigRational],
    budgets: &Budgets,
) -> Result<(BigRational, Vec<usize>)> {
    if weights.len() != g.order() {
        return Err(Error::input(format!(
            "{} weights for {} vertices",
            weights.len(),
            g.order()
        )));
    }
    let below = -BigRational::from_integer(1.into());
    Ok(heaviest_clique_above(g, weights, &below, budgets)?.expect("negative floor always clears"))
}

/// Clique number with a maximum clique.
pub fn max_clique(g: &SimpleGraph, budgets: &Budgets) -> Result<(usize, Vec<usize>)> {
    let ones = vec![1u64; g.order()];
    let best = heaviest_clique(g, &ones, 0, budgets)?;
    Ok(best.map_or((0, Vec::new()), |(w, c)| (w as usize, c)))
}

/// Independence number with a maximum independent set.
pub fn max_independent_set(g: &SimpleGraph, budgets: &Budgets) -> Result<(usize, Vec<usize>)> {
    check_order(g, budgets.clique_order, "independent set search")?;
    max_clique(&g.complement(), budgets)
}

struct Dsatur<'a> {
    g: &'a SimpleGraph,
    k: usize,
    colour: Vec<Option<usize>>,
    /// `blocked[v][c]`: neighbours of `v` currently coloured `c`.
    blocked: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    ticker: Ticker,
}

impl<'a> Dsatur<'a> {
    fn new(g: &'a SimpleGraph, k: usize, limit: u64) -> Self {
        let n = g.order();
        Dsatur {
            g,
            k,
            colour: vec![None; n],
            blocked: vec![vec![0; k]; n],
            saturation: vec![0; n],
            ticker: Ticker::new(limit, "chromatic number search"),
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colour[v] = Some(c);
        for u in self.g.adj[v].ones() {
            if self.blocked[u][c] == 0 {
                self.saturation[u] += 1;
            }
            self.blocked[u][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.colour[v] = None;
        for u in self.g.adj[v].ones() {
            self.blocked[u][c] -= 1;
            if self.blocked[u][c] == 0 {
                self.saturation[u] -= 1;
            }
        }
    }

    fn pick(&self) -> Option<usize> {
        (0..self.g.order())
            .filter(|&v| self.colour[v].is_none())
            .max_by_key(|&v| {
                let free_degree = self.g.adj[v].ones().filter(|&u| self.colour[u].is_none()).count();
                (self.saturation[v], free_degree, Reverse(v))
            })
    }

    fn search(&mut self, used: usize) -> Result<bool> {
        self.ticker.tick()?;
        let Some(v) = self.pick() else {
            return Ok(true);
        };
        for c in 0..self.k.min(used + 1) {
            if self.blocked[v][c] == 0 {
                self.assign(v, c);
                if self.search(used.max(c + 1))? {
                    return Ok(true);
                }
                self.unassign(v, c);
            }
        }
        Ok(false)
    }
}

fn greedy_dsatur(g: &SimpleGraph) -> Vec<usize> {
    let n = g.order();
    let mut d = Dsatur::new(g, n, u64::MAX);
    while let Some(v) = d.pick() {
        let c = (0..n).find(|&c| d.blocked[v][c] == 0).expect("n colours suffice");
        d.assign(v, c);
    }
    d.colour.into_iter().map(Option::unwrap).collect()
}

/// Exact chromatic number and an optimal colouring with colours `0..chi`.
pub fn chromatic_number_exact(g: &SimpleGraph, budgets: &Budgets) -> Result<(usize, Vec<usize>)> {
    check_order(g, budgets.colouring_order, "chromatic number")?;
    if g.order() == 0 {
        return Ok((0, Vec::new()));
    }
    let (omega, clique) = max_clique(g, budgets)?;
    let greedy = greedy_dsatur(g);
    let upper = greedy.iter().max().map_or(0, |c| c + 1);
    for k in omega..upper {
        let mut d = Dsatur::new(g, k, budgets.search_nodes);
        for (c, &v) in clique.iter().enumerate() {
            d.assign(v, c);
        }
        if d.search(omega)? {
            return Ok((k, d.colour.into_iter().map(Option::unwrap).collect()));
        }
    }
    Ok((upper, greedy))
}

/// All maximal cliques, each sorted, in lexicographic order.
pub fn enumerate_maximal_cliques(g: &SimpleGraph, budgets: &Budgets) -> Result<Vec<Vec<usize>>> {
    check_order(g, budgets.clique_order, "maximal clique enumeration")?;
    let n = g.order();
    let mut out = Vec::new();
    if n == 0 {
        return Ok(out);
    }
    let mut p = FixedBitSet::with_capacity(n);
    p.insert_range(..);
    let x = FixedBitSet::with_capacity(n);
    let mut r = Vec::new();
    bron_kerbosch(g, &mut r, p, x, &mut out, budgets.max_cliques)?;
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    Ok(out)
}

fn bron_kerbosch(
    g: &SimpleGraph,
    r: &mut Vec<usize>,
    mut p: FixedBitSet,
    mut x: FixedBitSet,
    out: &mut Vec<Vec<usize>>,
    limit: usize,
) -> Result<()> {
    if p.is_clear() && x.is_clear() {
        if out.len() == limit {
            return Err(Error::budget(format!("more than {limit} maximal cliques")));
        }
        out.push(r.clone());
        return Ok(());
    }
    let pivot = p
        .ones()
        .chain(x.ones())
        .max_by_key(|&u| (p.intersection_count(&g.adj[u]), Reverse(u)))
        .expect("p or x is non-empty");
    let mut branch = p.clone();
    branch.difference_with(&g.adj[pivot]);
    for v in branch.ones() {
        r.push(v);
        let mut p2 = p.clone();
        p2.intersect_with(&g.adj[v]);
        let mut x2 = x.clone();
        x2.intersect_with(&g.adj[v]);
        bron_kerbosch(g, r, p2, x2, out, limit)?;
        r.pop();
        p.remove(v);
        x.insert(v);
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HoleKind {
    /// Induced odd cycle of the graph itself.
    Hole,
    /// Induced odd cycle of the complement.
    Antihole,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OddHole {
    pub kind: HoleKind,
    /// Cycle vertices in cyclic order (in the graph or its complement).
    pub cycle: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BergeReport {
    pub is_berge: bool,
    pub certificate: Option<OddHole>,
}

/// Induced odd cycle of length `5..=max_len`, smallest start vertex first.
pub fn find_odd_hole(g: &SimpleGraph, max_len: usize) -> Option<Vec<usize>> {
    let n = g.order();
    for s in 0..n {
        let mut banned = FixedBitSet::with_capacity(n);
        banned.insert_range(..s + 1);
        for a in g.adj[s].ones().filter(|&a| a > s) {
            let mut path = vec![s, a];
            let mut b = banned.clone();
            b.insert(a);
            let interior = FixedBitSet::with_capacity(n);
            if let Some(hole) = extend_hole(g, &mut path, &b, &interior, max_len) {
                return Some(hole);
            }
        }
    }
    None
}

/// `banned` holds every vertex up to the start plus the path; `interior`
/// is the union of the neighbourhoods of the path vertices strictly between
/// the start and the last one.
fn extend_hole(
    g: &SimpleGraph,
    path: &mut Vec<usize>,
    banned: &FixedBitSet,
    interior: &FixedBitSet,
    max_len: usize,
) -> Option<Vec<usize>> {
    let s = path[0];
    let last = *path.last().unwrap();
    let len = path.len() + 1;
    let mut cand = g.adj[last].clone();
    cand.difference_with(banned);
    cand.difference_with(interior);
    let mut next_interior = interior.clone();
    next_interior.union_with(&g.adj[last]);
    for w in cand.ones() {
        if g.has_edge(w, s) {
            if len >= 5 && len % 2 == 1 && len <= max_len {
                let mut hole = path.clone();
                hole.push(w);
                return Some(hole);
            }
            continue;
        }
        // Closing needs at least one more vertex.
        if len + 1 > max_len {
            continue;
        }
        path.push(w);
        let mut b = banned.clone();
        b.insert(w);
        let found = extend_hole(g, path, &b, &next_interior, max_len);
        path.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Searches for induced odd holes and odd antiholes of length at most
/// `max_len` (odd, at least 5).
pub fn is_berge(g: &SimpleGraph, max_len: usize, budgets: &Budgets) -> Result<BergeReport> {
    if max_len < 5 || max_len.is_multiple_of(2) {
        return Err(Error::contract(format!(
            "hole length cap must be odd and >= 5, got {max_len}"
        )));
    }
    check_order(g, budgets.berge_order, "Berge check")?;
    let certificate = find_odd_hole(g, max_len)
        .map(|cycle| OddHole {
            kind: HoleKind::Hole,
            cycle,
        })
        .or_else(|| {
            find_odd_hole(&g.complement(), max_len).map(|cycle| OddHole {
                kind: HoleKind::Antihole,
                cycle,
            })
        });
    Ok(BergeReport {
        is_berge: certificate.is_none(),
        certificate,
    })
}

/// Largest odd number not above `max(order, 5)`, the natural cap for a
/// full-length Berge check.
pub fn full_hole_cap(order: usize) -> usize {
    let cap = order.max(5);
    if cap.is_multiple_of(2) {
        cap - 1
    } else {
        cap
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> Budgets {
        Budgets::default()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn path(order: usize) -> SimpleGraph {
        let edges: Vec<_> = (1..order).map(|v| (v - 1, v)).collect();
        SimpleGraph::from_edges(order, &edges).unwrap()
    }

    #[test]
    fn construction_rejects_bad_edges() {
        let mut g = SimpleGraph::new(3);
        assert!(g.add_edge(1, 1).is_err());
        assert!(g.add_edge(0, 3).is_err());
        g.add_edge(0, 1).unwrap();
        g.add_edge(1, 0).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn independent_sets() {
        assert_eq!(max_independent_set(&SimpleGraph::complete(3), &b()).unwrap().0, 1);
        let (alpha, w) = max_independent_set(&SimpleGraph::cycle(5), &b()).unwrap();
        assert_eq!(alpha, 2);
        assert!(SimpleGraph::cycle(5).is_independent(&w));
        assert_eq!(max_independent_set(&SimpleGraph::new(0), &b()).unwrap().0, 0);
    }

    #[test]
    fn weighted_cliques() {
        let ones = vec![rat(1, 1); 3];
        let (w, c) = max_weight_clique(&SimpleGraph::complete(3), &ones, &b()).unwrap();
        assert_eq!(w, rat(3, 1));
        assert_eq!(c, vec![0, 1, 2]);

        let ws = vec![rat(2, 3), rat(5, 4), rat(1, 2)];
        let (w, c) = max_weight_clique(&SimpleGraph::new(3), &ws, &b()).unwrap();
        assert_eq!(w, rat(5, 4));
        assert_eq!(c, vec![1]);

        let halves = vec![rat(1, 2); 5];
        let (w, c) = max_weight_clique(&SimpleGraph::cycle(5), &halves, &b()).unwrap();
        assert_eq!(w, rat(1, 1));
        assert_eq!(c.len(), 2);

        let neg = vec![rat(-1, 2), rat(1, 1)];
        assert!(matches!(
            max_weight_clique(&SimpleGraph::new(2), &neg, &b()),
            Err(Error::Input(_))
        ));

        let zeros = vec![rat(0, 1); 4];
        let (w, c) = max_weight_clique(&SimpleGraph::complete(4), &zeros, &b()).unwrap();
        assert!(w.is_zero());
        assert!(c.is_empty());
    }

    #[test]
    fn clique_above_floor() {
        let g = SimpleGraph::complete(3);
        let ws = vec![rat(1, 2), rat(1, 3), rat(1, 6)];
        assert!(heaviest_clique_above(&g, &ws, &rat(1, 1), &b()).unwrap().is_none());
        let (w, _) = heaviest_clique_above(&g, &ws, &rat(5, 6), &b()).unwrap().unwrap();
        assert_eq!(w, rat(1, 1));
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(chromatic_number_exact(&SimpleGraph::complete(4), &b()).unwrap().0, 4);
        let c5 = SimpleGraph::cycle(5);
        let (chi, col) = chromatic_number_exact(&c5, &b()).unwrap();
        assert_eq!(chi, 3);
        assert!(c5.is_proper_colouring(&col));
        assert_eq!(chromatic_number_exact(&SimpleGraph::new(3), &b()).unwrap().0, 1);
        assert_eq!(chromatic_number_exact(&path(4), &b()).unwrap().0, 2);
        let big = SimpleGraph::new(61);
        assert!(matches!(chromatic_number_exact(&big, &b()), Err(Error::Budget(_))));
    }

    #[test]
    fn maximal_cliques() {
        let k3 = enumerate_maximal_cliques(&SimpleGraph::complete(3), &b()).unwrap();
        assert_eq!(k3, vec![vec![0, 1, 2]]);
        let p3 = enumerate_maximal_cliques(&path(3), &b()).unwrap();
        assert_eq!(p3, vec![vec![0, 1], vec![1, 2]]);
        let isolated = enumerate_maximal_cliques(&SimpleGraph::new(2), &b()).unwrap();
        assert_eq!(isolated, vec![vec![0], vec![1]]);
        let tight = Budgets { max_cliques: 1, ..b() };
        assert!(enumerate_maximal_cliques(&path(3), &tight).is_err());
    }

    #[test]
    fn berge_checks() {
        let r = is_berge(&SimpleGraph::cycle(5), 5, &b()).unwrap();
        assert!(!r.is_berge);
        let cert = r.certificate.unwrap();
        assert_eq!(cert.kind, HoleKind::Hole);
        assert_eq!(cert.cycle.len(), 5);

        let c7 = SimpleGraph::cycle(7);
        assert!(is_berge(&c7, 5, &b()).unwrap().is_berge);
        assert!(!is_berge(&c7, 7, &b()).unwrap().is_berge);

        let anti = c7.complement();
        let r = is_berge(&anti, 7, &b()).unwrap();
        assert_eq!(r.certificate.unwrap().kind, HoleKind::Antihole);

        // Even cycles and paths are bipartite.
        assert!(is_berge(&SimpleGraph::cycle(6), 7, &b()).unwrap().is_berge);
        assert!(is_berge(&path(9), 9, &b()).unwrap().is_berge);
        assert!(is_berge(&path(3), 4, &b()).is_err());
    }

    #[test]
    fn maximal_extension() {
        let g = SimpleGraph::complete(4);
        assert_eq!(g.extend_to_maximal(&[2]), vec![0, 1, 2, 3]);
        assert_eq!(path(3).extend_to_maximal(&[2]), vec![1, 2]);
    }
}
