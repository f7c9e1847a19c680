//! File formats: JSON instances, colourings and representatives, DIMACS
//! graphs, DOT drawings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_rational::BigRational;
use serde::{Deserialize, Serialize, Serializer};

use crate::cooccurrence::{CoOccurrenceGraph, RepresentativeFunction};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::hypergraph::{Colouring, Hypergraph, Interval, IntervalHypergraph};

pub(crate) fn ser_rational<S: Serializer>(x: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(x)
}

pub(crate) fn ser_colouring<S: Serializer>(c: &Colouring, s: S) -> Result<S::Ok, S::Error> {
    s.collect_map((1..=c.n()).map(|v| (v, c.get(v))))
}

/// A parsed instance file.
#[derive(Clone, Debug)]
pub enum Instance {
    Intervals(IntervalHypergraph),
    General(Hypergraph),
}

impl Instance {
    pub fn hypergraph(&self) -> &Hypergraph {
        match self {
            Instance::Intervals(ih) => ih.hypergraph(),
            Instance::General(h) => h,
        }
    }

    /// The interval view, also recovered from an edge list whose edges are
    /// all consecutive.
    pub fn intervals(&self) -> Option<IntervalHypergraph> {
        match self {
            Instance::Intervals(ih) => Some(ih.clone()),
            Instance::General(h) => IntervalHypergraph::from_hypergraph(h).ok(),
        }
    }
}

#[derive(Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    intervals: Option<Vec<Interval>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    edges: Option<Vec<Vec<usize>>>,
}

fn json_error(what: &str, e: serde_json::Error) -> Error {
    Error::input(format!("{what}: {e}"))
}

/// Parses `{"n": .., "intervals": [[l, r], ..]}` or `{"n": .., "edges": [[v, ..], ..]}`.
pub fn parse_instance(text: &str) -> Result<Instance> {
    let raw: RawInstance = serde_json::from_str(text).map_err(|e| json_error("instance", e))?;
    match (raw.intervals, raw.edges) {
        (Some(iv), None) => Ok(Instance::Intervals(IntervalHypergraph::new(raw.n, iv)?)),
        (None, Some(edges)) => Ok(Instance::General(Hypergraph::new(raw.n, edges)?)),
        _ => Err(Error::input(
            "instance needs exactly one of \"intervals\" and \"edges\"",
        )),
    }
}

pub fn interval_instance_json(ih: &IntervalHypergraph) -> String {
    serde_json::to_string(&RawInstance {
        n: ih.n(),
        intervals: Some(ih.intervals().to_vec()),
        edges: None,
    })
    .expect("plain data serializes")
}

pub fn general_instance_json(h: &Hypergraph) -> String {
    serde_json::to_string(&RawInstance {
        n: h.n(),
        intervals: None,
        edges: Some(h.edges().to_vec()),
    })
    .expect("plain data serializes")
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawColouring {
    Map(BTreeMap<String, u32>),
    List(Vec<u32>),
}

/// Parses a colouring of vertices `1..=n`, either `{"1": c, ..}` naming
/// every vertex once or a list of `n` colours.
pub fn parse_colouring(text: &str, n: usize) -> Result<Colouring> {
    let raw: RawColouring = serde_json::from_str(text).map_err(|e| json_error("colouring", e))?;
    match raw {
        RawColouring::List(list) => {
            if list.len() != n {
                return Err(Error::input(format!(
                    "colouring lists {} colours for {n} vertices",
                    list.len()
                )));
            }
            Ok(Colouring::new(list))
        }
        RawColouring::Map(map) => {
            let mut parsed = BTreeMap::new();
            for (k, c) in map {
                let v: usize = k
                    .parse()
                    .map_err(|_| Error::input(format!("colouring key {k:?} is not a vertex")))?;
                if parsed.insert(v, c).is_some() {
                    return Err(Error::input(format!("vertex {v} is coloured twice")));
                }
            }
            Colouring::from_map(n, &parsed)
        }
    }
}

pub fn colouring_json(c: &Colouring) -> String {
    let map: BTreeMap<usize, u32> = c.to_map();
    serde_json::to_string(&map).expect("plain data serializes")
}

/// Parses a list with the representative of each edge.
pub fn parse_representatives(text: &str, h: &Hypergraph) -> Result<RepresentativeFunction> {
    let reps: Vec<usize> = serde_json::from_str(text).map_err(|e| json_error("representatives", e))?;
    RepresentativeFunction::new(h, reps)
}

/// DIMACS `p edge` format with 1-based vertices; `comments` become leading
/// `c` lines.
pub fn write_dimacs(g: &SimpleGraph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        writeln!(out, "c {c}").unwrap();
    }
    writeln!(out, "p edge {} {}", g.order(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn read_dimacs(text: &str) -> Result<SimpleGraph> {
    let mut graph: Option<SimpleGraph> = None;
    let mut declared = 0;
    let mut seen = 0;
    for (no, line) in text.lines().enumerate() {
        let line_no = no + 1;
        let err = |msg: &str| Error::input(format!("line {line_no}: {msg}"));
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            [] => {}
            ["c", ..] => {}
            ["p", kind, n, m] => {
                if graph.is_some() {
                    return Err(err("second problem line"));
                }
                if *kind != "edge" && *kind != "col" {
                    return Err(err("expected \"p edge\""));
                }
                let n: usize = n.parse().map_err(|_| err("bad vertex count"))?;
                declared = m.parse().map_err(|_| err("bad edge count"))?;
                graph = Some(SimpleGraph::new(n));
            }
            ["e", u, v] => {
                let g = graph.as_mut().ok_or_else(|| err("edge before problem line"))?;
                let u: usize = u.parse().map_err(|_| err("bad vertex"))?;
                let v: usize = v.parse().map_err(|_| err("bad vertex"))?;
                if u == 0 || v == 0 || u > g.order() || v > g.order() {
                    return Err(err("vertex out of range"));
                }
                if u == v {
                    return Err(err("self-loop"));
                }
                g.insert(u - 1, v - 1);
                seen += 1;
            }
            _ => return Err(err("unrecognised line")),
        }
    }
    let g = graph.ok_or_else(|| Error::input("missing problem line"))?;
    if seen != declared {
        return Err(Error::input(format!(
            "problem line declares {declared} edges, found {seen}"
        )));
    }
    Ok(g)
}

/// DOT drawing of a co-occurrence graph; each vertex lists the edges it
/// represents.
pub fn cooccurrence_dot(g: &CoOccurrenceGraph, t: &RepresentativeFunction) -> String {
    let mut out = String::from("graph cooccurrence {\n");
    for &v in g.vertices() {
        let reps: Vec<String> = (0..t.as_slice().len())
            .filter(|&e| t.get(e) == v)
            .map(|e| format!("e{e}"))
            .collect();
        writeln!(out, "  {v} [label=\"{v}\\n{}\"];", reps.join(",")).unwrap();
    }
    for (u, v) in g.labelled_edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
