//! The conflict graph `G_k(H)`.
//!
//! A node `(e, v, c)` stands for "edge `e` is uniquely coloured by vertex
//! `v`, which gets colour `c`". Two nodes are adjacent when both statements
//! cannot hold in one conflict-free colouring, so independent sets of size
//! `m` are exactly the conflict-free colourings with at most `k` colours.

use std::fmt;

use serde::Serialize;

use crate::config::Budgets;
use crate::error::{Error, Result};
use crate::graph::{max_independent_set, SimpleGraph};
use crate::hypergraph::{verify_cf, Colouring, Hypergraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ConflictNode {
    pub edge: usize,
    pub vertex: usize,
    pub colour: u32,
}

impl fmt::Display for ConflictNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.edge, self.vertex, self.colour)
    }
}

/// Which defining rule produced an edge of the conflict graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeClass {
    /// Same vertex, different colours.
    Vertex,
    /// Same hyperedge.
    Edge,
    /// Same colour on two distinct vertices that share one of the two
    /// hyperedges.
    Colour,
}

#[derive(Clone, Debug)]
pub struct ConflictGraph {
    k: u32,
    hypergraph: Hypergraph,
    nodes: Vec<ConflictNode>,
    offsets: Vec<usize>,
    graph: SimpleGraph,
}

impl ConflictGraph {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.hypergraph
    }

    pub fn nodes(&self) -> &[ConflictNode] {
        &self.nodes
    }

    pub fn node(&self, index: usize) -> ConflictNode {
        self.nodes[index]
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Index of `(edge, vertex, colour)`, if that node exists.
    pub fn index_of(&self, edge: usize, vertex: usize, colour: u32) -> Option<usize> {
        if edge >= self.hypergraph.m() || colour == 0 || colour > self.k {
            return None;
        }
        let pos = self.hypergraph.edge(edge).binary_search(&vertex).ok()?;
        Some(self.offsets[edge] + pos * self.k as usize + (colour - 1) as usize)
    }

    /// Node indices of one hyperedge; they form a clique.
    pub fn edge_nodes(&self, edge: usize) -> std::ops::Range<usize> {
        self.offsets[edge]..self.offsets[edge + 1]
    }

    /// Tag of the edge between two node indices, or `None` if non-adjacent.
    /// When several rules apply the tag is `Edge`, then `Vertex`, then
    /// `Colour`.
    pub fn edge_class(&self, a: usize, b: usize) -> Option<EdgeClass> {
        classify(&self.hypergraph, self.nodes[a], self.nodes[b])
    }

    /// Whether a clique of nodes contains at least one `Colour`-tagged pair.
    pub fn has_colour_edge(&self, clique: &[usize]) -> bool {
        clique.iter().enumerate().any(|(i, &a)| {
            clique[i + 1..]
                .iter()
                .any(|&b| self.edge_class(a, b) == Some(EdgeClass::Colour))
        })
    }

    /// One label per node for DIMACS comments, with 1-based node ids.
    pub fn node_labels(&self) -> Vec<String> {
        self.nodes
            .iter()
            .enumerate()
            .map(|(i, n)| {
                if self.k == 1 {
                    format!("node {} edge {} vertex {}", i + 1, n.edge, n.vertex)
                } else {
                    format!("node {} edge {} vertex {} colour {}", i + 1, n.edge, n.vertex, n.colour)
                }
            })
            .collect()
    }
}

fn classify(h: &Hypergraph, a: ConflictNode, b: ConflictNode) -> Option<EdgeClass> {
    if a == b {
        return None;
    }
    if a.edge == b.edge {
        return Some(EdgeClass::Edge);
    }
    if a.vertex == b.vertex {
        return (a.colour != b.colour).then_some(EdgeClass::Vertex);
    }
    let shared = |e: usize| h.contains(e, a.vertex) && h.contains(e, b.vertex);
    (a.colour == b.colour && (shared(a.edge) || shared(b.edge))).then_some(EdgeClass::Colour)
}

/// Builds `G_k(H)` with nodes ordered by `(edge, vertex, colour)`.
pub fn build_conflict_graph(h: &Hypergraph, k: u32) -> Result<ConflictGraph> {
    if k == 0 {
        return Err(Error::input("conflict graph needs k >= 1"));
    }
    let mut nodes = Vec::with_capacity(h.total_size() * k as usize);
    let mut offsets = Vec::with_capacity(h.m() + 1);
    for (e, edge) in h.edges().iter().enumerate() {
        offsets.push(nodes.len());
        for &vertex in edge {
            nodes.extend((1..=k).map(|colour| ConflictNode {
                edge: e,
                vertex,
                colour,
            }));
        }
    }
    offsets.push(nodes.len());
    let mut graph = SimpleGraph::new(nodes.len());
    for (i, &a) in nodes.iter().enumerate() {
        for (j, &b) in nodes.iter().enumerate().skip(i + 1) {
            if classify(h, a, b).is_some() {
                graph.insert(i, j);
            }
        }
    }
    Ok(ConflictGraph {
        k,
        hypergraph: h.clone(),
        nodes,
        offsets,
        graph,
    })
}

/// Reads a colouring off an independent node set: `v` gets `c` when some
/// `(e, v, c)` is chosen, otherwise 0.
pub fn independent_set_to_colouring(g: &ConflictGraph, set: &[usize]) -> Result<Colouring> {
    if let Some(&bad) = set.iter().find(|&&i| i >= g.len()) {
        return Err(Error::input(format!("node index {bad} out of range")));
    }
    if !g.graph.is_independent(set) {
        return Err(Error::contract("node set is not independent"));
    }
    let mut c = Colouring::zeros(g.hypergraph.n());
    for &i in set {
        let node = g.nodes[i];
        c.set(node.vertex, node.colour);
    }
    Ok(c)
}

/// One node per hyperedge: `(e, w, c(w))` with `w` the least vertex whose
/// colour is unique in `e`.
pub fn colouring_to_conflict_free_set(g: &ConflictGraph, c: &Colouring) -> Result<Vec<usize>> {
    let report = verify_cf(&g.hypergraph, c)?;
    let mut out = Vec::with_capacity(report.witnesses.len());
    for (e, w) in report.witnesses.iter().enumerate() {
        let w = w.ok_or_else(|| Error::contract(format!("edge {e} is not conflict-free coloured")))?;
        let colour = c.get(w);
        let node = g
            .index_of(e, w, colour)
            .ok_or_else(|| Error::contract(format!("colour {colour} of vertex {w} exceeds k = {}", g.k)))?;
        out.push(node);
    }
    Ok(out)
}

/// Result of [`cf_number_via_mis`].
#[derive(Clone, Debug)]
pub struct MisColouring {
    pub k_min: u32,
    pub colouring: Colouring,
    /// Maximum independent set of `G_{k_min}` the colouring came from.
    pub independent_set: Vec<usize>,
    /// Independence numbers of `G_1 .. G_{k_min}`.
    pub alphas: Vec<usize>,
}

/// Smallest `k <= k_max` with independence number of `G_k` equal to `m`.
pub fn cf_number_via_mis(h: &Hypergraph, k_max: u32, budgets: &Budgets) -> Result<MisColouring> {
    if k_max == 0 {
        return Err(Error::input("k_max must be positive"));
    }
    let mut alphas = Vec::new();
    for k in 1..=k_max {
        let g = build_conflict_graph(h, k)?;
        let (alpha, set) = max_independent_set(&g.graph, budgets)?;
        alphas.push(alpha);
        if alpha == h.m() {
            let colouring = independent_set_to_colouring(&g, &set)?;
            return Ok(MisColouring {
                k_min: k,
                colouring,
                independent_set: set,
                alphas,
            });
        }
    }
    Err(Error::budget(format!(
        "no conflict-free colouring with at most {k_max} colours"
    )))
}
