//! Incremental exact simplex for the clique system.
//!
//! Every variable sits in exactly one equality `sum x = 1`, so picking one
//! variable per equality as basic gives a feasible starting basis without a
//! phase one. Inequalities `sum_{j in S} x_j <= rhs` arrive one at a time;
//! each is appended as a row with its own slack and feasibility is restored
//! by dual simplex steps from the current basis. There is no objective, so
//! every reduced cost is zero and Bland's rule picks the smallest indices.
//!
//! Arithmetic starts in `Ratio<i128>` with checked operations. On overflow
//! the whole system is rebuilt over `BigRational` and solved again.

use std::ops::Range;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

type Small = Ratio<i128>;

trait Scalar: Clone + Zero + One + Signed + PartialOrd {
    fn from_big(x: &BigRational) -> Option<Self>;
    fn to_big(&self) -> BigRational;
    /// `self - a * b`
    fn sub_mul(&self, a: &Self, b: &Self) -> Option<Self>;
    fn div_by(&self, d: &Self) -> Option<Self>;
    fn approx(&self) -> f64;
}

impl Scalar for Small {
    fn from_big(x: &BigRational) -> Option<Self> {
        Some(Ratio::new(x.numer().to_i128()?, x.denom().to_i128()?))
    }

    fn to_big(&self) -> BigRational {
        BigRational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
    }

    fn sub_mul(&self, a: &Self, b: &Self) -> Option<Self> {
        self.checked_sub(&a.checked_mul(b)?)
    }

    fn div_by(&self, d: &Self) -> Option<Self> {
        self.checked_div(d)
    }

    fn approx(&self) -> f64 {
        *self.numer() as f64 / *self.denom() as f64
    }
}

impl Scalar for BigRational {
    fn from_big(x: &BigRational) -> Option<Self> {
        Some(x.clone())
    }

    fn to_big(&self) -> BigRational {
        self.clone()
    }

    fn sub_mul(&self, a: &Self, b: &Self) -> Option<Self> {
        Some(self - a * b)
    }

    fn div_by(&self, d: &Self) -> Option<Self> {
        Some(self / d)
    }

    fn approx(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

/// Arithmetic left the `i128` range.
struct Overflow;

#[derive(Clone)]
struct Tableau<T> {
    rows: Vec<Vec<T>>,
    rhs: Vec<T>,
    basis: Vec<usize>,
    basic: Vec<bool>,
    /// Columns fixed at zero: never entering, pushed out when basic.
    banned: Vec<bool>,
    n_vars: usize,
}

impl<T: Scalar> Tableau<T> {
    fn new(n_vars: usize, groups: &[Range<usize>]) -> Self {
        let mut t = Tableau {
            rows: Vec::with_capacity(groups.len()),
            rhs: Vec::with_capacity(groups.len()),
            basis: Vec::with_capacity(groups.len()),
            basic: vec![false; n_vars],
            banned: vec![false; n_vars],
            n_vars,
        };
        for g in groups {
            let mut row = vec![T::zero(); n_vars];
            g.clone().for_each(|j| row[j] = T::one());
            t.rows.push(row);
            t.rhs.push(T::one());
            t.basis.push(g.start);
            t.basic[g.start] = true;
        }
        t
    }

    fn add_le(&mut self, support: &[usize], rhs: &BigRational) -> Result<(), Overflow> {
        let mut row = vec![T::zero(); self.basic.len()];
        let mut b = T::from_big(rhs).ok_or(Overflow)?;
        for &j in support {
            row[j] = T::one();
        }
        // Eliminate the basic columns of the support.
        for i in 0..self.rows.len() {
            let col = self.basis[i];
            if row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (j, a) in self.rows[i].iter().enumerate() {
                if !a.is_zero() {
                    row[j] = row[j].sub_mul(&f, a).ok_or(Overflow)?;
                }
            }
            b = b.sub_mul(&f, &self.rhs[i]).ok_or(Overflow)?;
        }
        for r in &mut self.rows {
            r.push(T::zero());
        }
        row.push(T::one());
        let slack = self.basic.len();
        self.basic.push(true);
        self.banned.push(false);
        self.rows.push(row);
        self.rhs.push(b);
        self.basis.push(slack);
        Ok(())
    }

    fn pivot(&mut self, r: usize, c: usize) -> Result<(), Overflow> {
        let p = self.rows[r][c].clone();
        if !p.is_one() {
            for x in self.rows[r].iter_mut().filter(|x| !x.is_zero()) {
                *x = x.div_by(&p).ok_or(Overflow)?;
            }
            self.rhs[r] = self.rhs[r].div_by(&p).ok_or(Overflow)?;
        }
        let pivot_row = self.rows[r].clone();
        let pivot_rhs = self.rhs[r].clone();
        let nonzero: Vec<usize> = (0..pivot_row.len()).filter(|&j| !pivot_row[j].is_zero()).collect();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for &j in &nonzero {
                self.rows[i][j] = self.rows[i][j].sub_mul(&f, &pivot_row[j]).ok_or(Overflow)?;
            }
            self.rhs[i] = self.rhs[i].sub_mul(&f, &pivot_rhs).ok_or(Overflow)?;
        }
        self.basic[self.basis[r]] = false;
        self.basic[c] = true;
        self.basis[r] = c;
        Ok(())
    }

    /// How far row `i` is from feasible: a negative value, or a positive
    /// value of a banned column.
    fn violation(&self, i: usize) -> Option<T> {
        let v = &self.rhs[i];
        if v.is_negative() {
            Some(-v.clone())
        } else if v.is_positive() && self.banned[self.basis[i]] {
            Some(v.clone())
        } else {
            None
        }
    }

    /// Dual simplex until every basic value is non-negative and every
    /// banned column is zero. `Ok(false)` means the system is infeasible.
    ///
    /// Pivots are chosen greedily at first: the most violated row leaves
    /// and the entering column is the one leaving the least total
    /// infeasibility, judged in floating point. The system is completely
    /// degenerate (no objective), so after a fixed number of greedy steps
    /// the choice switches to Bland's rule, which cannot cycle.
    fn restore(&mut self, pivots: &mut usize, limit: usize) -> Result<Result<bool, Overflow>> {
        let greedy_steps = 4 * (self.rows.len() + self.basic.len());
        let mut steps = 0;
        loop {
            let greedy = steps < greedy_steps;
            let violated = (0..self.rows.len()).filter_map(|i| self.violation(i).map(|v| (i, v)));
            let leave = if greedy {
                violated
                    .max_by(|(a, va), (b, vb)| va.partial_cmp(vb).unwrap().then(self.basis[*b].cmp(&self.basis[*a])))
                    .map(|(i, _)| i)
            } else {
                violated.map(|(i, _)| i).min_by_key(|&i| self.basis[i])
            };
            let Some(r) = leave else {
                return Ok(Ok(true));
            };
            // A negative value needs a negative entry to grow; a banned
            // positive value needs a positive one to shrink.
            let upper = self.rhs[r].is_positive();
            let mut candidates = (0..self.basic.len()).filter(|&j| {
                let a = &self.rows[r][j];
                !self.basic[j] && !self.banned[j] && if upper { a.is_positive() } else { a.is_negative() }
            });
            let enter = if greedy {
                // Rows with a zero entry keep their value, so only the
                // change in infeasibility over the other rows is scored.
                let rhs: Vec<f64> = self.rhs.iter().map(Scalar::approx).collect();
                let score = |j: usize| -> f64 {
                    let theta = rhs[r] / self.rows[r][j].approx();
                    (0..self.rows.len())
                        .filter(|&i| i != r && !self.rows[i][j].is_zero())
                        .map(|i| (theta * self.rows[i][j].approx() - rhs[i]).max(0.0) - (-rhs[i]).max(0.0))
                        .sum()
                };
                candidates
                    .map(|j| (score(j), j))
                    .min_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)))
                    .map(|(_, j)| j)
            } else {
                candidates.next()
            };
            let Some(c) = enter else {
                return Ok(Ok(false));
            };
            *pivots += 1;
            steps += 1;
            if *pivots > limit {
                return Err(Error::budget(format!("simplex exceeded {limit} pivots")));
            }
            if let Err(o) = self.pivot(r, c) {
                return Ok(Err(o));
            }
        }
    }

    fn values(&self) -> Vec<BigRational> {
        let mut x = vec![BigRational::zero(); self.n_vars];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < self.n_vars {
                x[b] = self.rhs[i].to_big();
            }
        }
        x
    }
}

#[derive(Clone)]
enum State {
    Small(Tableau<Small>),
    Big(Tableau<BigRational>),
}

/// The equalities plus a growing list of inequalities, with the tableau of
/// the last solve.
#[derive(Clone)]
pub(crate) struct Incremental {
    n_vars: usize,
    groups: Vec<Range<usize>>,
    les: Vec<(Vec<usize>, BigRational)>,
    banned: Vec<bool>,
    /// Inequalities already in the tableau.
    loaded: usize,
    state: State,
}

impl Incremental {
    /// `groups` must partition `0..n_vars` into non-empty ranges.
    pub(crate) fn new(n_vars: usize, groups: Vec<Range<usize>>) -> Self {
        debug_assert!(groups.iter().all(|g| !g.is_empty()));
        debug_assert_eq!(groups.iter().map(|g| g.len()).sum::<usize>(), n_vars);
        let state = State::Small(Tableau::new(n_vars, &groups));
        Incremental {
            n_vars,
            groups,
            les: Vec::new(),
            banned: vec![false; n_vars],
            loaded: 0,
            state,
        }
    }

    fn fresh<T: Scalar>(&self) -> Tableau<T> {
        let mut t = Tableau::new(self.n_vars, &self.groups);
        t.banned[..self.n_vars].copy_from_slice(&self.banned);
        t
    }

    #[cfg(test)]
    fn force_big(&mut self) {
        self.loaded = 0;
        self.state = State::Big(self.fresh());
    }

    /// Fixes variable `j` at zero from the next [`solve`](Self::solve) on.
    pub(crate) fn ban(&mut self, j: usize) {
        self.banned[j] = true;
        match &mut self.state {
            State::Small(t) => t.banned[j] = true,
            State::Big(t) => t.banned[j] = true,
        }
    }

    /// Queues `sum_{j in support} x_j <= rhs`; it takes effect at the next
    /// [`solve`](Self::solve).
    pub(crate) fn add_le(&mut self, support: Vec<usize>, rhs: BigRational) {
        self.les.push((support, rhs));
    }

    /// A vertex of the current system, or `None` if it is empty.
    pub(crate) fn solve(&mut self, pivots: &mut usize, limit: usize) -> Result<Option<Vec<BigRational>>> {
        if let State::Small(t) = &mut self.state {
            match Self::sync(t, &self.les, &mut self.loaded, pivots, limit)? {
                Ok(feasible) => return Ok(feasible.then(|| t.values())),
                Err(Overflow) => {
                    self.loaded = 0;
                    self.state = State::Big(self.fresh());
                }
            }
        }
        let State::Big(t) = &mut self.state else { unreachable!() };
        match Self::sync(t, &self.les, &mut self.loaded, pivots, limit)? {
            Ok(feasible) => Ok(feasible.then(|| t.values())),
            Err(Overflow) => unreachable!("big rationals do not overflow"),
        }
    }

    fn sync<T: Scalar>(
        t: &mut Tableau<T>,
        les: &[(Vec<usize>, BigRational)],
        loaded: &mut usize,
        pivots: &mut usize,
        limit: usize,
    ) -> Result<Result<bool, Overflow>> {
        while *loaded < les.len() {
            let (support, rhs) = &les[*loaded];
            if let Err(o) = t.add_le(support, rhs) {
                return Ok(Err(o));
            }
            *loaded += 1;
            // Restoring after each row keeps an infeasible prefix cheap to detect.
            match t.restore(pivots, limit)? {
                Ok(true) => {}
                other => return Ok(other),
            }
        }
        t.restore(pivots, limit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn satisfies(x: &[BigRational], groups: &[Range<usize>], les: &[(Vec<usize>, BigRational)]) -> bool {
        let sum = |s: &mut dyn Iterator<Item = usize>| s.map(|j| x[j].clone()).sum::<BigRational>();
        x.iter().all(|v| !v.is_negative())
            && groups.iter().all(|g| sum(&mut g.clone()) == r(1, 1))
            && les.iter().all(|(s, b)| sum(&mut s.iter().copied()) <= *b)
    }

    #[test]
    fn equalities_alone() {
        let mut lp = Incremental::new(3, vec![0..2, 2..3]);
        let x = lp.solve(&mut 0, 100).unwrap().unwrap();
        assert_eq!(x, vec![r(1, 1), r(0, 1), r(1, 1)]);
    }

    #[test]
    fn feasible_after_cuts() {
        let groups = vec![0..2, 2..4];
        let mut lp = Incremental::new(4, groups.clone());
        let les = vec![(vec![0, 2], r(1, 1)), (vec![1, 3], r(1, 1))];
        for (s, b) in &les {
            lp.add_le(s.clone(), b.clone());
        }
        let x = lp.solve(&mut 0, 100).unwrap().unwrap();
        assert!(satisfies(&x, &groups, &les));
    }

    #[test]
    fn infeasible_system() {
        let mut lp = Incremental::new(4, vec![0..2, 2..4]);
        lp.add_le(vec![0, 1, 2, 3], r(3, 2));
        assert!(lp.solve(&mut 0, 100).unwrap().is_none());
        let mut lp = Incremental::new(2, vec![0..2; 1]);
        lp.add_le(vec![0], r(0, 1));
        lp.add_le(vec![1], r(0, 1));
        assert!(lp.solve(&mut 0, 100).unwrap().is_none());
    }

    #[test]
    fn forced_fractional_point() {
        let mut lp = Incremental::new(2, vec![0..2; 1]);
        lp.add_le(vec![0], r(1, 2));
        lp.add_le(vec![1], r(1, 2));
        assert_eq!(lp.solve(&mut 0, 100).unwrap().unwrap(), vec![r(1, 2), r(1, 2)]);
    }

    #[test]
    fn pivot_budget() {
        let mut lp = Incremental::new(2, vec![0..2; 1]);
        lp.add_le(vec![0], r(0, 1));
        assert!(matches!(lp.solve(&mut 0, 0), Err(Error::Budget(_))));
    }

    #[test]
    fn huge_right_hand_side_switches_to_big() {
        let big = BigRational::from_integer(BigInt::from(10).pow(50));
        let mut lp = Incremental::new(2, vec![0..2; 1]);
        lp.add_le(vec![0, 1], big);
        lp.add_le(vec![0], r(1, 3));
        let x = lp.solve(&mut 0, 100).unwrap().unwrap();
        assert!(matches!(lp.state, State::Big(_)));
        assert_eq!(&x[0] + &x[1], r(1, 1));
    }

    #[test]
    fn small_and_big_agree_on_random_systems() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let sizes: Vec<usize> = (0..rng.gen_range(1..5)).map(|_| rng.gen_range(1..4)).collect();
            let mut groups = Vec::new();
            let mut at = 0;
            for s in sizes {
                groups.push(at..at + s);
                at += s;
            }
            let les: Vec<(Vec<usize>, BigRational)> = (0..rng.gen_range(0..8))
                .map(|_| {
                    let s: Vec<usize> = (0..at).filter(|_| rng.gen_bool(0.4)).collect();
                    (s, r(rng.gen_range(0..6), rng.gen_range(1..4)))
                })
                .collect();
            let bans: Vec<usize> = (0..at).filter(|_| rng.gen_bool(0.15)).collect();
            let mut small = Incremental::new(at, groups.clone());
            let mut big = Incremental::new(at, groups.clone());
            big.force_big();
            // Bans expressed as rows instead of columns.
            let mut rows = Incremental::new(at, groups.clone());
            for (s, b) in &les {
                small.add_le(s.clone(), b.clone());
                big.add_le(s.clone(), b.clone());
                rows.add_le(s.clone(), b.clone());
            }
            // Solve once before banning so bans hit a warm tableau.
            small.solve(&mut 0, 10_000).unwrap();
            for &j in &bans {
                small.ban(j);
                big.ban(j);
                rows.add_le(vec![j], r(0, 1));
            }
            let a = small.solve(&mut 0, 10_000).unwrap();
            let b = big.solve(&mut 0, 10_000).unwrap();
            let c = rows.solve(&mut 0, 10_000).unwrap();
            assert_eq!(a.is_some(), b.is_some());
            assert_eq!(a.is_some(), c.is_some());
            if let Some(x) = a.as_ref().or(b.as_ref()) {
                assert!(satisfies(x, &groups, &les));
                assert!(bans.iter().all(|&j| x[j].is_zero()));
            }
        }
    }
}
