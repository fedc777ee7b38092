//! Fixed Cost Minimum Edge Cover: pick vertices of total weight at
//! least W touching as few edges as possible.
//!
//! The solver minimizes the surrogate deg(S) exactly with a knapsack
//! dynamic program, which is a 2-approximation for touched edges via
//! t(S) <= deg(S) <= deg(OPT) <= 2 t(OPT).

use crate::error::{Error, Result};
use crate::graph::{Graph, Solution, VertexSet};

/// Cap on DP table cells before the solver refuses the instance.
const MAX_TABLE_CELLS: usize = 200_000_000;

#[derive(Debug, Clone)]
pub struct FcecInstance {
    pub graph: Graph,
    /// The weight bound W (the paper also writes k for the uniform case).
    pub target_weight: u64,
}

/// Knapsack table: `get(i, d)` is the maximum weight of a subset of the
/// first `i` vertices (in the solver's internal order) whose degree sum
/// is at most `d`.
pub struct KnapsackTable {
    /// vertices in processing order (descending id, so reconstruction
    /// decides small ids first and ties break toward them)
    order: Vec<u32>,
    width: usize, // d_max + 1
    cells: Vec<u64>,
}

impl KnapsackTable {
    pub fn build(g: &Graph) -> Result<KnapsackTable> {
        let n = g.n();
        let d_max = 2 * g.m();
        let width = d_max + 1;
        let cells_needed = (n + 1)
            .checked_mul(width)
            .filter(|&c| c <= MAX_TABLE_CELLS)
            .ok_or_else(|| {
                Error::Input(format!(
                    "knapsack table would need {} x {} cells; instance too large",
                    n + 1,
                    width
                ))
            })?;
        let mut order: Vec<u32> = (0..n as u32).collect();
        order.reverse();
        let mut cells = vec![0u64; cells_needed];
        for i in 1..=n {
            let v = order[i - 1];
            let (w, deg) = (g.weight(v), g.degree(v));
            for d in 0..width {
                let skip = cells[(i - 1) * width + d];
                let take = if d >= deg {
                    cells[(i - 1) * width + (d - deg)] + w
                } else {
                    0
                };
                cells[i * width + d] = skip.max(take);
            }
        }
        Ok(KnapsackTable {
            order,
            width,
            cells,
        })
    }

    pub fn get(&self, i: usize, d: usize) -> u64 {
        self.cells[i * self.width + d]
    }

    pub fn d_max(&self) -> usize {
        self.width - 1
    }

    /// Smallest degree budget whose best weight reaches `target`.
    fn min_budget(&self, target: u64) -> Option<usize> {
        let n = self.order.len();
        (0..self.width).find(|&d| self.get(n, d) >= target)
    }

    /// Walks the table back from `(n, d)` recovering a witness for the
    /// optimum value, preferring inclusion of small ids.
    fn reconstruct(&self, g: &Graph, d: usize) -> VertexSet {
        let n = self.order.len();
        let mut val = self.get(n, d);
        let mut d = d;
        let mut members = Vec::new();
        for i in (1..=n).rev() {
            let v = self.order[i - 1];
            let (w, deg) = (g.weight(v), g.degree(v));
            if w <= val && d >= deg && self.get(i - 1, d - deg) == val - w {
                members.push(v);
                val -= w;
                d -= deg;
            } else {
                debug_assert_eq!(self.get(i - 1, d), val);
            }
        }
        debug_assert_eq!(val, 0);
        VertexSet::new(members)
    }
}

/// Exact minimizer of deg(S) subject to w(S) >= target_weight.
pub fn min_degree_knapsack(inst: &FcecInstance) -> Result<Solution> {
    let g = &inst.graph;
    if g.total_weight() < inst.target_weight {
        return Err(Error::Infeasible(format!(
            "total weight {} < target {}",
            g.total_weight(),
            inst.target_weight
        )));
    }
    if inst.target_weight == 0 {
        return Solution::audit(g, VertexSet::empty());
    }
    let table = KnapsackTable::build(g)?;
    let d_star = table
        .min_budget(inst.target_weight)
        .expect("feasible instance must have a budget within deg(V)");
    Solution::audit(g, table.reconstruct(g, d_star))
}

/// 2-approximation for FCEC: the surrogate optimum with its audited
/// touched-edge count.
pub fn fcec_approx(inst: &FcecInstance) -> Result<Solution> {
    min_degree_knapsack(inst)
}

/// Lemma 1.1 shortcut for uniform weights: the k lowest-degree vertices
/// (ties toward smaller ids) are a 2-approximation.
pub fn k_lowest_degree(g: &Graph, k: usize) -> Result<Solution> {
    if k > g.n() {
        return Err(Error::Input(format!("k={} exceeds n={}", k, g.n())));
    }
    let w0 = g.weight(0);
    if g.weights().iter().any(|&w| w != w0) {
        return Err(Error::Input(
            "k_lowest_degree requires uniform vertex weights".into(),
        ));
    }
    let mut ids: Vec<u32> = (0..g.n() as u32).collect();
    ids.sort_by_key(|&v| (g.degree(v), v));
    Solution::audit(g, VertexSet::new(ids[..k].to_vec()))
}
