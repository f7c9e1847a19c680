//! Rounding a fractional point of the clique system on `G_1` to a 0/1
//! point.
//!
//! Each interval keeps a live copy of its points. An iteration picks the
//! longest live copy (smallest left end, then input order), takes its right
//! end `r`, and moves `delta = x[I, r]` from `r` to `r - 1` in every live
//! copy containing both points. A copy loses `r` once its value there is
//! zero. Moving mass one step left inside an interval keeps every equality
//! intact.
//!
//! The same `delta` is applied to every qualifying interval, so a value can
//! leave `[0, 1]`. That is reported as [`RoundingAbort`], never clamped.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::hypergraph::{Interval, IntervalHypergraph};
use crate::lp::LpSolution;

/// Position of `(interval, point)` among the nodes of `G_1`.
pub fn node_offsets(ih: &IntervalHypergraph) -> Vec<usize> {
    let mut offsets = Vec::with_capacity(ih.m() + 1);
    let mut acc = 0;
    for iv in ih.intervals() {
        offsets.push(acc);
        acc += iv.len();
    }
    offsets.push(acc);
    offsets
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AbortReason {
    /// `x[interval, point]` went below zero.
    Negative { interval: usize, point: usize },
    /// `x[interval, point]` went above one.
    AboveOne { interval: usize, point: usize },
    /// The selected live copy has no point left of its right end.
    NoLeftNeighbour { interval: usize },
    /// More iterations than there are nodes.
    IterationLimit { limit: usize },
}

impl fmt::Display for AbortReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AbortReason::Negative { interval, point } => {
                write!(f, "x[{interval},{point}] became negative")
            }
            AbortReason::AboveOne { interval, point } => {
                write!(f, "x[{interval},{point}] exceeded 1")
            }
            AbortReason::NoLeftNeighbour { interval } => {
                write!(f, "selected interval {interval} has no point left of its right end")
            }
            AbortReason::IterationLimit { limit } => write!(f, "no integral point after {limit} iterations"),
        }
    }
}

/// State at the moment rounding gave up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundingAbort {
    pub reason: AbortReason,
    /// 1-based number of the failing iteration.
    pub iteration: usize,
    pub intervals: Vec<Interval>,
    /// Live points of every interval.
    pub live: Vec<Vec<usize>>,
    /// Values after the failing update.
    pub values: Vec<BigRational>,
    pub steps: Vec<RoundingStep>,
}

impl fmt::Display for RoundingAbort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} in iteration {}", self.reason, self.iteration)?;
        let offsets = {
            let mut acc = 0;
            self.intervals
                .iter()
                .map(|iv| {
                    acc += iv.len();
                    acc - iv.len()
                })
                .collect::<Vec<_>>()
        };
        for (i, iv) in self.intervals.iter().enumerate() {
            write!(f, "  {i} {iv} live={:?} x=", self.live[i])?;
            for (j, p) in iv.points().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{p}:{}", self.values[offsets[i] + j])?;
            }
            writeln!(f)?;
        }
        for s in &self.steps {
            writeln!(f, "  {s}")?;
        }
        Ok(())
    }
}

/// One iteration of the rounding loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundingStep {
    pub selected: usize,
    pub r: usize,
    pub delta: BigRational,
    /// Intervals whose values at `r - 1` and `r` moved.
    pub shifted: Vec<usize>,
    /// Intervals that lost point `r`.
    pub shrunk: Vec<usize>,
}

impl fmt::Display for RoundingStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "round interval={} r={} delta={} shifted={:?} shrunk={:?}",
            self.selected, self.r, self.delta, self.shifted, self.shrunk
        )
    }
}

#[derive(Clone, Debug)]
pub struct Rounded {
    pub solution: LpSolution,
    pub iterations: usize,
    pub steps: Vec<RoundingStep>,
}

/// Rounds `b_opt`, a point satisfying the interval equalities, to a 0/1
/// point. Checking the clique inequalities on the result is up to the
/// caller.
pub fn round_solution(b_opt: &LpSolution, ih: &IntervalHypergraph) -> Result<Rounded> {
    let offsets = node_offsets(ih);
    let mu = offsets[ih.m()];
    if b_opt.len() != mu {
        return Err(Error::input(format!("{} values for {mu} nodes", b_opt.len())));
    }
    if !b_opt.in_unit_box() {
        return Err(Error::contract("starting point leaves [0, 1]"));
    }
    for (i, iv) in ih.intervals().iter().enumerate() {
        let sum: BigRational = b_opt.values()[offsets[i]..offsets[i + 1]].iter().cloned().sum();
        if !sum.is_one() {
            return Err(Error::contract(format!("values of interval {i} {iv} sum to {sum}")));
        }
    }

    let mut x = b_opt.clone();
    let mut live: Vec<BTreeSet<usize>> = ih.intervals().iter().map(|iv| iv.points().collect()).collect();
    let mut steps = Vec::new();
    let limit = mu + 1;
    let mut iteration = 0;
    let idx = |i: usize, p: usize| offsets[i] + (p - ih.interval(i).l);

    while !x.is_integral() {
        iteration += 1;
        let abort = |reason, x: &LpSolution, live: &[BTreeSet<usize>], steps: &[RoundingStep]| {
            Error::Rounding(Box::new(RoundingAbort {
                reason,
                iteration,
                intervals: ih.intervals().to_vec(),
                live: live.iter().map(|s| s.iter().copied().collect()).collect(),
                values: x.values().to_vec(),
                steps: steps.to_vec(),
            }))
        };
        if iteration > limit {
            return Err(abort(AbortReason::IterationLimit { limit }, &x, &live, &steps));
        }
        let selected = (0..ih.m())
            .filter(|&i| !live[i].is_empty())
            .min_by_key(|&i| (std::cmp::Reverse(live[i].len()), *live[i].first().unwrap(), i))
            .expect("fractional values imply a live interval");
        let r = *live[selected].last().unwrap();
        if r == 0 || !live[selected].contains(&(r - 1)) {
            return Err(abort(
                AbortReason::NoLeftNeighbour { interval: selected },
                &x,
                &live,
                &steps,
            ));
        }
        let delta = x.value(idx(selected, r)).clone();
        let mut step = RoundingStep {
            selected,
            r,
            delta: delta.clone(),
            shifted: Vec::new(),
            shrunk: Vec::new(),
        };
        for j in 0..ih.m() {
            if !(live[j].contains(&(r - 1)) && live[j].contains(&r)) {
                continue;
            }
            let (left, right) = (idx(j, r - 1), idx(j, r));
            let values = x.values_mut();
            values[left] += &delta;
            values[right] -= &delta;
            step.shifted.push(j);
            if values[right].is_negative() {
                steps.push(step);
                return Err(abort(
                    AbortReason::Negative { interval: j, point: r },
                    &x,
                    &live,
                    &steps,
                ));
            }
            if values[left] > BigRational::one() {
                steps.push(step);
                return Err(abort(
                    AbortReason::AboveOne {
                        interval: j,
                        point: r - 1,
                    },
                    &x,
                    &live,
                    &steps,
                ));
            }
            if values[right].is_zero() {
                live[j].remove(&r);
                step.shrunk.push(j);
            }
        }
        steps.push(step);
    }
    Ok(Rounded {
        solution: x,
        iterations: iteration,
        steps,
    })
}
