//! Representative functions and co-occurrence graphs.
//!
//! A representative function picks one vertex `t(e)` in every edge. Its
//! co-occurrence graph lives on the image of `t`: two image vertices are
//! adjacent when some edge contains both and is represented by one of
//! them. Any proper colouring of that graph, extended by 0 elsewhere, is
//! conflict-free, and the best `t` attains the conflict-free chromatic
//! number.

use std::collections::BTreeMap;

use crate::config::Budgets;
use crate::error::{Error, Result};
use crate::graph::{chromatic_number_exact, SimpleGraph};
use crate::hypergraph::{Colouring, Hypergraph};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RepresentativeFunction(Vec<usize>);

impl RepresentativeFunction {
    /// `reps[e]` must lie in edge `e`.
    pub fn new(h: &Hypergraph, reps: Vec<usize>) -> Result<Self> {
        if reps.len() != h.m() {
            return Err(Error::input(format!(
                "{} representatives for {} edges",
                reps.len(),
                h.m()
            )));
        }
        for (e, &v) in reps.iter().enumerate() {
            if !h.contains(e, v) {
                return Err(Error::input(format!("representative {v} is not in edge {e}")));
            }
        }
        Ok(RepresentativeFunction(reps))
    }

    pub fn get(&self, edge: usize) -> usize {
        self.0[edge]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// The image, sorted and deduplicated.
    pub fn image(&self) -> Vec<usize> {
        let mut r = self.0.clone();
        r.sort_unstable();
        r.dedup();
        r
    }
}

#[derive(Clone, Debug)]
pub struct CoOccurrenceGraph {
    vertices: Vec<usize>,
    graph: SimpleGraph,
}

impl CoOccurrenceGraph {
    /// Hypergraph vertices of the graph, ascending; graph vertex `i` is
    /// `vertices()[i]`.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn index_of(&self, v: usize) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    /// Edges as pairs of hypergraph vertices `(u, v)`, `u < v`, sorted.
    pub fn labelled_edges(&self) -> Vec<(usize, usize)> {
        self.graph
            .edges()
            .map(|(a, b)| (self.vertices[a], self.vertices[b]))
            .collect()
    }
}

pub fn build_cooccurrence(h: &Hypergraph, t: &RepresentativeFunction) -> Result<CoOccurrenceGraph> {
    if t.0.len() != h.m() {
        return Err(Error::input("representative function does not match the hypergraph"));
    }
    let vertices = t.image();
    let mut graph = SimpleGraph::new(vertices.len());
    let index = |v: usize| vertices.binary_search(&v).ok();
    for (e, edge) in h.edges().iter().enumerate() {
        let rep = t.get(e);
        let r = index(rep).expect("representative is in the image");
        if !h.contains(e, rep) {
            return Err(Error::input(format!("representative {rep} is not in edge {e}")));
        }
        for &u in edge {
            if u != rep {
                if let Some(i) = index(u) {
                    graph.insert(r, i);
                }
            }
        }
    }
    Ok(CoOccurrenceGraph { vertices, graph })
}

/// Extends a proper colouring of the co-occurrence graph by 0 on the other
/// vertices. Colours are renumbered `1..` in order of first use along
/// `t(e_0), t(e_1), ...`.
pub fn extend_colouring(h: &Hypergraph, t: &RepresentativeFunction, pc: &BTreeMap<usize, u32>) -> Result<Colouring> {
    let g = build_cooccurrence(h, t)?;
    for &v in g.vertices() {
        match pc.get(&v) {
            None => return Err(Error::contract(format!("vertex {v} of the image is uncoloured"))),
            Some(0) => return Err(Error::contract(format!("vertex {v} has colour 0"))),
            Some(_) => {}
        }
    }
    if let Some((u, v)) = g.labelled_edges().into_iter().find(|(u, v)| pc[u] == pc[v]) {
        return Err(Error::contract(format!(
            "edge ({u}, {v}) is monochromatic with colour {}",
            pc[&u]
        )));
    }
    let mut renumber: BTreeMap<u32, u32> = BTreeMap::new();
    let mut out = Colouring::zeros(h.n());
    for &rep in t.as_slice() {
        let next = renumber.len() as u32 + 1;
        let colour = *renumber.entry(pc[&rep]).or_insert(next);
        out.set(rep, colour);
    }
    Ok(out)
}

/// Colours the co-occurrence graph of `t` optimally and extends by 0.
pub fn colour_from_representatives(
    h: &Hypergraph,
    t: &RepresentativeFunction,
    budgets: &Budgets,
) -> Result<(CoOccurrenceGraph, Colouring)> {
    let g = build_cooccurrence(h, t)?;
    let (_, colours) = chromatic_number_exact(g.graph(), budgets)?;
    let pc = g
        .vertices()
        .iter()
        .zip(colours)
        .map(|(&v, c)| (v, c as u32 + 1))
        .collect();
    let c = extend_colouring(h, t, &pc)?;
    Ok((g, c))
}

/// Minimum over all representative functions of the chromatic number of
/// the co-occurrence graph; ties keep the lexicographically first `t`.
pub fn chi_min_bruteforce(h: &Hypergraph, budgets: &Budgets) -> Result<(RepresentativeFunction, usize)> {
    let count = h.representative_count();
    if count > budgets.representative_functions as u128 {
        return Err(Error::budget(format!(
            "{count} representative functions exceed the limit of {}",
            budgets.representative_functions
        )));
    }
    let mut pos = vec![0usize; h.m()];
    let mut best: Option<(Vec<usize>, usize)> = None;
    loop {
        let reps: Vec<usize> = pos.iter().enumerate().map(|(e, &p)| h.edge(e)[p]).collect();
        let t = RepresentativeFunction(reps);
        let g = build_cooccurrence(h, &t)?;
        let (chi, _) = chromatic_number_exact(g.graph(), budgets)?;
        if best.as_ref().is_none_or(|(_, b)| chi < *b) {
            best = Some((t.0, chi));
            if chi <= 1 {
                break;
            }
        }
        // Odometer, last edge fastest, for lexicographic order.
        let mut e = h.m();
        loop {
            if e == 0 {
                let (reps, chi) = best.expect("at least one function");
                return Ok((RepresentativeFunction(reps), chi));
            }
            e -= 1;
            pos[e] += 1;
            if pos[e] < h.edge(e).len() {
                break;
            }
            pos[e] = 0;
        }
    }
    let (reps, chi) = best.expect("at least one function");
    Ok((RepresentativeFunction(reps), chi))
}
