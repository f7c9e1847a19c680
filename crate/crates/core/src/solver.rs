//! Minimum conflict-free colouring of interval hypergraphs, and the
//! translation between colourings and partitions into exactly hittable
//! parts.
//!
//! [`solve`] tries three things in order:
//!
//! 1. an exact hitting set, which is a one-colour solution;
//! 2. at most two pairwise disjoint intervals, so two piercing points
//!    coloured 1 and 2 suffice;
//! 3. the clique system on `G_1`: find the least feasible bound, round the
//!    fractional point, read off a representative function and colour its
//!    co-occurrence graph.
//!
//! The relaxation in step 3 is not always tight and rounding does not
//! always succeed. Whenever the rounded point is missing or infeasible the
//! pipeline sweeps for a colouring with `q` colours, starting at the
//! relaxation bound, and reads the representatives off the first one found.

use serde::Serialize;

use crate::config::Budgets;
use crate::conflict::{build_conflict_graph, ConflictGraph};
use crate::cooccurrence::{colour_from_representatives, CoOccurrenceGraph, RepresentativeFunction};
use crate::error::{Error, Result};
use crate::hypergraph::{
    clique_cover_points, is_exact_hitting_set, max_disjoint_intervals, verify_cf, Colouring, Hypergraph, Interval,
    IntervalHypergraph,
};
use crate::lp::{find_q_min, separation_max_weight_clique, CutRecord, LpSolution};
use crate::rounding::round_solution;
use crate::sweep::sweep_colouring;

/// A set meeting every interval exactly once, if there is one.
///
/// Dynamic programme over the chosen points from left to right: `p < p'`
/// may be consecutive choices when no interval contains both and no
/// interval fits strictly between them. Among several answers the one with
/// lexicographically smallest choices (read right to left) is returned.
pub fn exact_hittable_intervals(ih: &IntervalHypergraph) -> Option<Vec<usize>> {
    let n = ih.n();
    let ivs = ih.intervals();
    if ivs.is_empty() {
        return Some(Vec::new());
    }
    // Nothing lies inside the open gap (a, b).
    let gap_empty = |a: usize, b: usize| !ivs.iter().any(|iv| iv.l > a && iv.r < b);
    let spans = |a: usize, b: usize| ivs.iter().any(|iv| iv.l <= a && iv.r >= b);
    let mut parent: Vec<Option<usize>> = vec![None; n + 1];
    let mut reach = vec![false; n + 1];
    for p in 1..=n {
        if gap_empty(0, p) {
            reach[p] = true;
            continue;
        }
        if let Some(q) = (1..p).find(|&q| reach[q] && !spans(q, p) && gap_empty(q, p)) {
            reach[p] = true;
            parent[p] = Some(q);
        }
    }
    let last = (1..=n).find(|&p| reach[p] && gap_empty(p, n + 1))?;
    let mut set = vec![last];
    let mut cur = last;
    while let Some(q) = parent[cur] {
        set.push(q);
        cur = q;
    }
    set.reverse();
    debug_assert!(is_exact_hitting_set(ih.hypergraph(), &set).unwrap_or(false));
    Some(set)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    ExactlyHittable,
    CliqueCover2,
    LpPipeline,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::ExactlyHittable => "exactly_hittable",
            Branch::CliqueCover2 => "clique_cover_2",
            Branch::LpPipeline => "lp_pipeline",
        }
    }
}

/// What happened to the fractional point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum RoundingOutcome {
    /// Integral and satisfies every clique inequality at the relaxation bound.
    Feasible { iterations: usize },
    /// Integral but some clique carries more than the bound.
    ViolatesCut { iterations: usize, cut: String },
    /// The rounding loop gave up.
    Aborted { reason: String },
}

/// Evidence behind the pipeline answer.
#[derive(Clone, Debug, Serialize)]
pub struct PipelineReport {
    /// Least bound for which the fractional system is feasible.
    pub lp_q_min: u32,
    /// Least bound with a 0/1 solution; equals the answer.
    pub q_min: u32,
    pub rounding: RoundingOutcome,
    /// True when the colouring sweep produced the representatives.
    pub sweep: bool,
    pub representatives: Vec<usize>,
    pub gamma_vertices: Vec<usize>,
    pub gamma_edges: Vec<(usize, usize)>,
    pub clique_number: usize,
    pub cuts: usize,
    #[serde(skip)]
    pub cut_log: Vec<CutRecord>,
    #[serde(skip)]
    pub fractional: LpSolution,
    #[serde(skip)]
    pub rounded: Option<LpSolution>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    ExactlyHittable {
        hitting_set: Vec<usize>,
    },
    CliqueCover2 {
        piercing_points: Vec<usize>,
        disjoint: Vec<Interval>,
    },
    LpPipeline(Box<PipelineReport>),
}

#[derive(Clone, Debug, Serialize)]
pub struct CfcResult {
    pub chi_cf: usize,
    pub branch: Branch,
    #[serde(serialize_with = "crate::io::ser_colouring")]
    pub colouring: Colouring,
    pub certificate: Certificate,
}

/// Reads the representative of every interval off a 0/1 point.
fn representatives(g1: &ConflictGraph, x: &LpSolution) -> Result<RepresentativeFunction> {
    let h = g1.hypergraph();
    let mut reps = vec![0; h.m()];
    for i in x.support_ones() {
        let node = g1.node(i);
        reps[node.edge] = node.vertex;
    }
    RepresentativeFunction::new(h, reps)
}

/// Each interval is represented by its least uniquely coloured point.
fn witnesses(h: &Hypergraph, c: &Colouring) -> Result<RepresentativeFunction> {
    let report = verify_cf(h, c)?;
    let reps = report
        .witnesses
        .into_iter()
        .collect::<Option<Vec<usize>>>()
        .ok_or_else(|| Error::contract("sweep returned a colouring that is not conflict-free"))?;
    RepresentativeFunction::new(h, reps)
}

/// Runs the clique-system pipeline on any interval hypergraph.
pub fn lp_pipeline(ih: &IntervalHypergraph, budgets: &Budgets) -> Result<(PipelineReport, Colouring)> {
    let h = ih.hypergraph();
    if h.m() == 0 {
        return Err(Error::input("no intervals"));
    }
    let g1 = build_conflict_graph(h, 1)?;
    let relaxed = find_q_min(&g1, budgets)?;
    let cut_log = relaxed.last.cuts.clone();
    let lp_q_min = relaxed.q_min;

    let (rounding, rounded) = match round_solution(&relaxed.solution, ih) {
        Ok(out) => match separation_max_weight_clique(&g1, &out.solution, lp_q_min, budgets)? {
            None => (
                RoundingOutcome::Feasible {
                    iterations: out.iterations,
                },
                Some(out.solution),
            ),
            Some(cut) => (
                RoundingOutcome::ViolatesCut {
                    iterations: out.iterations,
                    cut: cut.to_string(),
                },
                Some(out.solution),
            ),
        },
        Err(Error::Rounding(abort)) => (
            RoundingOutcome::Aborted {
                reason: format!("{} in iteration {}", abort.reason, abort.iteration),
            },
            None,
        ),
        Err(e) => return Err(e),
    };

    let (q_min, t, sweep) = match (&rounding, &rounded) {
        (RoundingOutcome::Feasible { .. }, Some(x)) => (lp_q_min, representatives(&g1, x)?, false),
        _ => {
            let mut found = None;
            for q in lp_q_min..=h.m() as u32 {
                if let Some(c) = sweep_colouring(ih, q, budgets)? {
                    found = Some((q, c));
                    break;
                }
            }
            let (q, c) = found.ok_or_else(|| Error::contract("no colouring even with one colour per interval"))?;
            (q, witnesses(h, &c)?, true)
        }
    };

    let (gamma, colouring): (CoOccurrenceGraph, Colouring) = colour_from_representatives(h, &t, budgets)?;
    let used = colouring.colours_used();
    if used != q_min as usize {
        return Err(Error::contract(format!(
            "co-occurrence graph needs {used} colours at bound {q_min}"
        )));
    }
    let clique_number = crate::graph::max_clique(gamma.graph(), budgets)?.0;
    let report = PipelineReport {
        lp_q_min,
        q_min,
        rounding,
        sweep,
        representatives: t.as_slice().to_vec(),
        gamma_vertices: gamma.vertices().to_vec(),
        gamma_edges: gamma.labelled_edges(),
        clique_number,
        cuts: cut_log.len(),
        cut_log,
        fractional: relaxed.solution,
        rounded,
    };
    Ok((report, colouring))
}

/// Minimum conflict-free colouring of an interval hypergraph.
pub fn solve(ih: &IntervalHypergraph, budgets: &Budgets) -> Result<CfcResult> {
    if ih.m() == 0 {
        return Err(Error::input("no intervals"));
    }
    let h = ih.hypergraph();
    let result = if let Some(set) = exact_hittable_intervals(ih) {
        let mut c = Colouring::zeros(ih.n());
        set.iter().for_each(|&v| c.set(v, 1));
        CfcResult {
            chi_cf: 1,
            branch: Branch::ExactlyHittable,
            colouring: c,
            certificate: Certificate::ExactlyHittable { hitting_set: set },
        }
    } else if max_disjoint_intervals(ih).0 < 3 {
        let points = clique_cover_points(ih)?;
        let mut c = Colouring::zeros(ih.n());
        for (i, &p) in points.iter().enumerate() {
            c.set(p, i as u32 + 1);
        }
        CfcResult {
            chi_cf: points.len(),
            branch: Branch::CliqueCover2,
            colouring: c,
            certificate: Certificate::CliqueCover2 {
                piercing_points: points,
                disjoint: max_disjoint_intervals(ih).1,
            },
        }
    } else {
        let (report, c) = lp_pipeline(ih, budgets)?;
        CfcResult {
            chi_cf: report.q_min as usize,
            branch: Branch::LpPipeline,
            colouring: c,
            certificate: Certificate::LpPipeline(Box::new(report)),
        }
    };
    let check = verify_cf(h, &result.colouring)?;
    if !check.is_cf || result.colouring.colours_used() != result.chi_cf {
        return Err(Error::contract(format!(
            "{} branch produced an invalid colouring",
            result.branch.as_str()
        )));
    }
    Ok(result)
}

/// Edges sharing a witness colour, and the witnesses that hit them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Part {
    pub edges: Vec<usize>,
    pub hitting_set: Vec<usize>,
}

/// Groups edges by the colour of their least witness. Each group is exactly
/// hit by its witnesses; groups come out in increasing colour order.
pub fn partition_from_colouring(h: &Hypergraph, c: &Colouring) -> Result<Vec<Part>> {
    let report = verify_cf(h, c)?;
    if let Some(e) = report.first_failure() {
        return Err(Error::contract(format!("edge {e} has no uniquely coloured vertex")));
    }
    let mut parts: std::collections::BTreeMap<u32, Part> = Default::default();
    for (e, w) in report.witnesses.iter().enumerate() {
        let w = w.expect("checked above");
        let part = parts.entry(c.get(w)).or_insert_with(|| Part {
            edges: Vec::new(),
            hitting_set: Vec::new(),
        });
        part.edges.push(e);
        part.hitting_set.push(w);
    }
    Ok(parts
        .into_values()
        .map(|mut p| {
            p.hitting_set.sort_unstable();
            p.hitting_set.dedup();
            p
        })
        .collect())
}

/// Colours an interval hypergraph from a partition into exactly hittable
/// parts, using at most one colour per part.
pub fn colouring_from_partition(ih: &IntervalHypergraph, parts: &[Part], budgets: &Budgets) -> Result<Colouring> {
    let h = ih.hypergraph();
    let mut owner: Vec<Option<usize>> = vec![None; h.m()];
    for (i, part) in parts.iter().enumerate() {
        for &e in &part.edges {
            if e >= h.m() {
                return Err(Error::input(format!("part {i} names edge {e}, only {} exist", h.m())));
            }
            if let Some(j) = owner[e] {
                return Err(Error::input(format!("edge {e} is in parts {j} and {i}")));
            }
            owner[e] = Some(i);
        }
        if !is_exact_hitting_set(&h.restrict(&part.edges), &part.hitting_set)? {
            return Err(Error::input(format!("hitting set of part {i} is not exact")));
        }
    }
    if let Some(e) = owner.iter().position(Option::is_none) {
        return Err(Error::input(format!("edge {e} is in no part")));
    }
    let reps = (0..h.m())
        .map(|e| {
            let part = &parts[owner[e].expect("checked")];
            *part
                .hitting_set
                .iter()
                .find(|&&v| h.contains(e, v))
                .expect("exact hitting set meets the edge")
        })
        .collect();
    let t = RepresentativeFunction::new(h, reps)?;
    let (_, c) = colour_from_representatives(h, &t, budgets)?;
    Ok(c)
}
