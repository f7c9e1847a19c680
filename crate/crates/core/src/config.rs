use serde::{Deserialize, Serialize};

/// Hard limits for the exact searches.
///
/// Every limit is checked up front (graph order) or during search (node
/// counts); crossing one yields [`Error::Budget`](crate::Error::Budget).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Budgets {
    /// Largest graph handed to maximum (weight) clique and independent set.
    pub clique_order: usize,
    /// Largest graph handed to exact chromatic number.
    pub colouring_order: usize,
    /// Largest graph handed to the odd hole / antihole search.
    pub berge_order: usize,
    /// Most maximal cliques the enumerator may report.
    pub max_cliques: usize,
    /// Branch-and-bound nodes per clique or colouring search.
    pub search_nodes: u64,
    /// Representative functions `chi_min_bruteforce` may enumerate.
    pub representative_functions: u64,
    /// Cutting planes added within one feasibility solve.
    pub lp_cuts: usize,
    /// Simplex pivots within one feasibility solve.
    pub lp_pivots: usize,
    /// Branching nodes in the integral feasibility search.
    pub branch_nodes: usize,
    /// States per position in the colouring sweep.
    pub sweep_states: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            clique_order: 2000,
            colouring_order: 60,
            berge_order: 60,
            max_cliques: 1_000_000,
            search_nodes: 200_000_000,
            representative_functions: 10_000_000,
            lp_cuts: 10_000,
            lp_pivots: 2_000_000,
            branch_nodes: 100_000,
            sweep_states: 5_000_000,
        }
    }
}
