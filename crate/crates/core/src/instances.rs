//! Small named instances used throughout the docs and tests.

use crate::hypergraph::IntervalHypergraph;

/// Six intervals on ten points: two long ones, `[1,5]` and `[5,10]`, over
/// four short disjoint ones.
pub fn ten_point_example() -> IntervalHypergraph {
    IntervalHypergraph::from_pairs(10, &[(1, 5), (5, 10), (2, 3), (4, 5), (6, 7), (8, 9)]).expect("valid intervals")
}

/// A representative for each interval of [`ten_point_example`] whose
/// co-occurrence graph is the tree `3-5-9-7`.
pub fn ten_point_representatives() -> Vec<usize> {
    vec![5, 9, 3, 5, 7, 9]
}

/// The edges `{1}`, `{2}`, `{1,2}`: the smallest hypergraph that needs two
/// colours.
pub fn two_point_discrete() -> IntervalHypergraph {
    IntervalHypergraph::discrete(2)
}
