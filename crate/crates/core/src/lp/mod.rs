//! The clique-constrained feasibility system on `G_1` and its
//! cutting-plane solver.
//!
//! Variables are the nodes `(I, u)` of `G_1`. Each interval's nodes sum to
//! exactly one, and every maximal clique that spans more than one interval
//! may carry weight at most `q`. There are too many clique inequalities to
//! write down, so they are generated on demand: solve with the current
//! working set, ask the maximum-weight clique oracle for a violated one,
//! add it, repeat.

mod simplex;

use std::fmt;
use std::ops::Range;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::config::Budgets;
use crate::conflict::ConflictGraph;
use crate::error::{Error, Result};
use crate::graph::heaviest_clique_above;

use simplex::Incremental;

/// An assignment of exact rationals to the nodes of `G_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSolution {
    values: Vec<BigRational>,
}

impl LpSolution {
    pub fn new(values: Vec<BigRational>) -> Self {
        LpSolution { values }
    }

    /// The 0/1 point that puts weight 1 on each listed node.
    pub fn indicator(len: usize, nodes: &[usize]) -> Self {
        let mut values = vec![BigRational::zero(); len];
        for &i in nodes {
            values[i] = BigRational::one();
        }
        LpSolution { values }
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn value(&self, node: usize) -> &BigRational {
        &self.values[node]
    }

    pub(crate) fn values_mut(&mut self) -> &mut [BigRational] {
        &mut self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.values.iter().all(|v| v.is_zero() || v.is_one())
    }

    /// Nodes at value 1.
    pub fn support_ones(&self) -> Vec<usize> {
        (0..self.values.len()).filter(|&i| self.values[i].is_one()).collect()
    }

    pub fn weight(&self, nodes: &[usize]) -> BigRational {
        nodes.iter().map(|&i| self.values[i].clone()).sum()
    }

    pub fn in_unit_box(&self) -> bool {
        self.values
            .iter()
            .all(|v| *v >= BigRational::zero() && *v <= BigRational::one())
    }

    /// First interval whose nodes do not sum to exactly one.
    pub fn violated_equality(&self, g1: &ConflictGraph) -> Option<usize> {
        (0..g1.hypergraph().m()).find(|&e| {
            let range = g1.edge_nodes(e);
            self.values[range].iter().cloned().sum::<BigRational>() != BigRational::one()
        })
    }
}

/// The working system for one bound `q`.
#[derive(Clone, Debug)]
pub struct LpInstance {
    pub q: u32,
    /// Node ranges of the intervals, one equality each.
    pub equalities: Vec<Range<usize>>,
    /// Clique inequalities found so far.
    pub cuts: Vec<Vec<usize>>,
    pub variables: usize,
}

impl LpInstance {
    pub fn new(g1: &ConflictGraph, q: u32) -> Result<Self> {
        require_k1(g1)?;
        if q == 0 {
            return Err(Error::input("clique bound q must be positive"));
        }
        Ok(LpInstance {
            q,
            equalities: (0..g1.hypergraph().m()).map(|e| g1.edge_nodes(e)).collect(),
            cuts: Vec::new(),
            variables: g1.len(),
        })
    }
}

/// One generated clique inequality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutRecord {
    pub q: u32,
    #[serde(serialize_with = "crate::io::ser_rational")]
    pub weight: BigRational,
    pub nodes: Vec<usize>,
    /// `(interval, point)` of every node.
    pub labels: Vec<(usize, usize)>,
}

impl fmt::Display for CutRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cut q={} weight={} nodes=", self.q, self.weight)?;
        for (i, (e, v)) in self.labels.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}:{v}")?;
        }
        Ok(())
    }
}

fn require_k1(g1: &ConflictGraph) -> Result<()> {
    if g1.k() != 1 {
        Err(Error::contract(format!(
            "expected the k = 1 conflict graph, got k = {}",
            g1.k()
        )))
    } else {
        Ok(())
    }
}

fn record(g1: &ConflictGraph, x: &LpSolution, q: u32, nodes: Vec<usize>) -> CutRecord {
    CutRecord {
        q,
        weight: x.weight(&nodes),
        labels: nodes.iter().map(|&i| (g1.node(i).edge, g1.node(i).vertex)).collect(),
        nodes,
    }
}

/// Weights `G_1` by `x` and looks for a clique heavier than `q`. A hit is
/// grown to a maximal clique before being returned.
pub fn separation_max_weight_clique(
    g1: &ConflictGraph,
    x: &LpSolution,
    q: u32,
    budgets: &Budgets,
) -> Result<Option<CutRecord>> {
    require_k1(g1)?;
    if x.len() != g1.len() {
        return Err(Error::input(format!("{} values for {} nodes", x.len(), g1.len())));
    }
    if !x.in_unit_box() {
        return Err(Error::contract("assignment leaves [0, 1]"));
    }
    if let Some(e) = x.violated_equality(g1) {
        return Err(Error::contract(format!("equality of interval {e} is violated")));
    }
    let bound = BigRational::from_integer(q.into());
    let Some((_, clique)) = heaviest_clique_above(g1.graph(), x.values(), &bound, budgets)? else {
        return Ok(None);
    };
    let maximal = g1.graph().extend_to_maximal(&clique);
    debug_assert!(g1.has_colour_edge(&maximal));
    Ok(Some(record(g1, x, q, maximal)))
}

/// A node of the search: the working system with its tableau.
#[derive(Clone)]
struct Working {
    lp: Incremental,
    /// Pool cuts present in `lp`.
    loaded: Vec<bool>,
}

impl Working {
    fn new(g1: &ConflictGraph) -> Self {
        let groups = (0..g1.hypergraph().m()).map(|e| g1.edge_nodes(e)).collect();
        Working {
            lp: Incremental::new(g1.len(), groups),
            loaded: Vec::new(),
        }
    }

    fn fix_zero(&mut self, node: usize) {
        self.lp.ban(node);
    }
}

/// Cut-generation state shared by every node of one search.
struct Separator<'a> {
    g1: &'a ConflictGraph,
    q: u32,
    budgets: &'a Budgets,
    /// All cuts found so far, in order.
    pool: Vec<CutRecord>,
}

impl Separator<'_> {
    /// Cutting-plane loop: returns a point that satisfies every clique
    /// inequality of `G_1` and the node's fixings, or `None`.
    ///
    /// Cuts already in the pool are tried before the clique oracle, and a
    /// node only carries the cuts it has needed.
    fn run(&mut self, w: &mut Working) -> Result<Option<LpSolution>> {
        let q = BigRational::from_integer(self.q.into());
        let mut pivots = 0;
        loop {
            let Some(values) = w.lp.solve(&mut pivots, self.budgets.lp_pivots)? else {
                return Ok(None);
            };
            let x = LpSolution::new(values);
            debug_assert!(x.violated_equality(self.g1).is_none());
            w.loaded.resize(self.pool.len(), false);
            let mut reused = false;
            for (i, cut) in self.pool.iter().enumerate() {
                if !w.loaded[i] && x.weight(&cut.nodes) > q {
                    w.lp.add_le(cut.nodes.clone(), q.clone());
                    w.loaded[i] = true;
                    reused = true;
                }
            }
            if reused {
                continue;
            }
            match separation_max_weight_clique(self.g1, &x, self.q, self.budgets)? {
                None => return Ok(Some(x)),
                Some(cut) => {
                    if self.pool.len() >= self.budgets.lp_cuts {
                        return Err(Error::budget(format!("more than {} cuts", self.budgets.lp_cuts)));
                    }
                    debug_assert!(!self.pool.iter().any(|c| c.nodes == cut.nodes), "separated a cut twice");
                    w.lp.add_le(cut.nodes.clone(), q.clone());
                    w.loaded.push(true);
                    self.pool.push(cut);
                }
            }
        }
    }
}

/// Result of one feasibility solve.
#[derive(Clone, Debug)]
pub struct Feasibility {
    pub instance: LpInstance,
    pub solution: Option<LpSolution>,
    /// Cuts in the order they were added.
    pub cuts: Vec<CutRecord>,
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        self.solution.is_some()
    }
}

/// Decides feasibility of the system for bound `q` by cutting planes.
pub fn solve_feasibility(g1: &ConflictGraph, q: u32, budgets: &Budgets) -> Result<Feasibility> {
    let mut instance = LpInstance::new(g1, q)?;
    let mut sep = Separator {
        g1,
        q,
        budgets,
        pool: Vec::new(),
    };
    let solution = sep.run(&mut Working::new(g1))?;
    instance.cuts = sep.pool.iter().map(|c| c.nodes.clone()).collect();
    Ok(Feasibility {
        instance,
        solution,
        cuts: sep.pool,
    })
}

#[derive(Clone, Debug)]
pub struct QMin {
    pub q_min: u32,
    pub solution: LpSolution,
    /// The feasible solve at `q_min`.
    pub last: Feasibility,
}

/// Smallest `q >= 1` for which the system is feasible; cuts are not carried
/// between values of `q`.
pub fn find_q_min(g1: &ConflictGraph, budgets: &Budgets) -> Result<QMin> {
    require_k1(g1)?;
    let m = g1.hypergraph().m().max(1) as u32;
    for q in 1..=m {
        let f = solve_feasibility(g1, q, budgets)?;
        if let Some(solution) = f.solution.clone() {
            return Ok(QMin {
                q_min: q,
                solution,
                last: f,
            });
        }
    }
    Err(Error::contract("system infeasible even at q = m"))
}

/// Result of [`solve_integral`].
#[derive(Clone, Debug)]
pub struct IntegralSearch {
    pub solution: Option<LpSolution>,
    pub cuts: Vec<CutRecord>,
    pub branch_nodes: usize,
}

/// Branch-and-cut for a 0/1 point of the system at bound `q`.
///
/// Branches on the largest fractional node, first making it the
/// representative of its interval, then forbidding it. Cuts are global:
/// one found anywhere in the tree is loaded into every later node.
pub fn solve_integral(g1: &ConflictGraph, q: u32, budgets: &Budgets) -> Result<IntegralSearch> {
    LpInstance::new(g1, q)?;
    let mut sep = Separator {
        g1,
        q,
        budgets,
        pool: Vec::new(),
    };
    let mut nodes = 0;
    let solution = explore(&mut sep, Working::new(g1), &mut nodes)?;
    Ok(IntegralSearch {
        solution,
        cuts: sep.pool,
        branch_nodes: nodes,
    })
}

fn explore(sep: &mut Separator<'_>, mut w: Working, nodes: &mut usize) -> Result<Option<LpSolution>> {
    *nodes += 1;
    if *nodes > sep.budgets.branch_nodes {
        return Err(Error::budget(format!(
            "integral search exceeded {} branch nodes",
            sep.budgets.branch_nodes
        )));
    }
    let Some(x) = sep.run(&mut w)? else {
        return Ok(None);
    };
    if x.is_integral() {
        return Ok(Some(x));
    }
    let node = (0..x.len())
        .filter(|&i| !x.value(i).is_zero() && !x.value(i).is_one())
        .max_by(|&a, &b| x.value(a).cmp(x.value(b)).then(b.cmp(&a)))
        .expect("a fractional node exists");
    let interval = sep.g1.node(node).edge;

    let mut take = w.clone();
    for other in sep.g1.edge_nodes(interval).filter(|&i| i != node) {
        take.fix_zero(other);
    }
    if let Some(found) = explore(sep, take, nodes)? {
        return Ok(Some(found));
    }
    w.fix_zero(node);
    explore(sep, w, nodes)
}
