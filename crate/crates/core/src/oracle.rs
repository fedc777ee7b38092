//! Exhaustive exact solvers. Ground truth for every approximation and
//! exactness claim at small n; deliberately unclever so they stay
//! obviously correct (direct edge scans, full subset enumeration).

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rational::Rational;

/// Default refusal bound on the enumerated vertex count.
pub const DEFAULT_CAP: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleValue {
    Int(u64),
    Ratio(Rational),
}

impl std::fmt::Display for OracleValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OracleValue::Int(v) => write!(f, "{v}"),
            OracleValue::Ratio(r) => write!(f, "{r}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub value: OracleValue,
    pub witness: VertexSet,
    /// subsets examined
    pub enumerated: u64,
}

impl OracleResult {
    pub fn int(&self) -> u64 {
        match self.value {
            OracleValue::Int(v) => v,
            OracleValue::Ratio(_) => panic!("oracle value is a ratio"),
        }
    }

    pub fn ratio(&self) -> Rational {
        match self.value {
            OracleValue::Ratio(r) => r,
            OracleValue::Int(_) => panic!("oracle value is an integer"),
        }
    }
}

fn check_cap(count: usize, cap: usize) -> Result<()> {
    if count > cap {
        return Err(Error::CapExceeded { n: count, cap });
    }
    if count > 63 {
        return Err(Error::CapExceeded { n: count, cap: 63 });
    }
    Ok(())
}

/// Subsets of {0..n-1} as bitmasks, by increasing popcount, then by
/// ascending mask value (Gosper's hack within each popcount class).
fn subsets_by_popcount(n: usize) -> impl Iterator<Item = u64> {
    (0..=n).flat_map(move |k| {
        let mut next = if k == 0 { Some(0u64) } else { Some((1u64 << k) - 1) };
        std::iter::from_fn(move || {
            let mask = next?;
            next = if k == 0 || mask == 0 {
                None
            } else {
                let c = mask & mask.wrapping_neg();
                let r = mask + c;
                let succ = (((r ^ mask) >> 2) / c) | r;
                (succ < (1u64 << n)).then_some(succ)
            };
            Some(mask)
        })
    })
}

struct MaskGraph {
    weights: Vec<u64>,
    degrees: Vec<u64>,
    edge_masks: Vec<u64>, // one 2-bit mask per edge
    ids: Vec<u32>,        // bit position -> original id
}

impl MaskGraph {
    /// Restriction of `g` to `ids` (bit i of a mask is ids[i]); edges with
    /// an endpoint outside `ids` are dropped but degrees stay global.
    fn new(g: &Graph, ids: &[u32]) -> MaskGraph {
        let mut pos = vec![usize::MAX; g.n()];
        for (i, &v) in ids.iter().enumerate() {
            pos[v as usize] = i;
        }
        let edge_masks = g
            .edges()
            .iter()
            .filter(|(a, b)| pos[*a as usize] != usize::MAX && pos[*b as usize] != usize::MAX)
            .map(|&(a, b)| (1u64 << pos[a as usize]) | (1u64 << pos[b as usize]))
            .collect();
        MaskGraph {
            weights: ids.iter().map(|&v| g.weight(v)).collect(),
            degrees: ids.iter().map(|&v| g.degree(v) as u64).collect(),
            edge_masks,
            ids: ids.to_vec(),
        }
    }

    fn weight(&self, mask: u64) -> u64 {
        self.sum(mask, &self.weights)
    }

    fn deg_sum(&self, mask: u64) -> u64 {
        self.sum(mask, &self.degrees)
    }

    fn sum(&self, mut mask: u64, vals: &[u64]) -> u64 {
        let mut total = 0;
        while mask != 0 {
            total += vals[mask.trailing_zeros() as usize];
            mask &= mask - 1;
        }
        total
    }

    fn touched(&self, mask: u64) -> u64 {
        self.edge_masks.iter().filter(|&&e| e & mask != 0).count() as u64
    }

    fn internal(&self, mask: u64) -> u64 {
        self.edge_masks.iter().filter(|&&e| e & mask == e).count() as u64
    }

    fn to_set(&self, mut mask: u64) -> VertexSet {
        let mut members = Vec::new();
        while mask != 0 {
            members.push(self.ids[mask.trailing_zeros() as usize]);
            mask &= mask - 1;
        }
        VertexSet::new(members)
    }
}

fn all_ids(g: &Graph) -> Vec<u32> {
    (0..g.n() as u32).collect()
}

/// Minimum touched(S) over all S with w(S) >= target.
pub fn brute_fcec(g: &Graph, target: u64, cap: usize) -> Result<OracleResult> {
    check_cap(g.n(), cap)?;
    if g.total_weight() < target {
        return Err(Error::Infeasible(format!(
            "total weight {} < target {target}",
            g.total_weight()
        )));
    }
    let mg = MaskGraph::new(g, &all_ids(g));
    let mut best: Option<(u64, u64)> = None;
    let mut enumerated = 0;
    for mask in subsets_by_popcount(g.n()) {
        enumerated += 1;
        if mg.weight(mask) >= target {
            let t = mg.touched(mask);
            if best.is_none_or(|(bt, _)| t < bt) {
                best = Some((t, mask));
            }
        }
    }
    let (t, mask) = best.expect("feasible instance has a witness");
    Ok(OracleResult {
        value: OracleValue::Int(t),
        witness: mg.to_set(mask),
        enumerated,
    })
}

/// Maximum w(U) over all U with touched(U) <= budget.
pub fn brute_mwec(g: &Graph, budget: u64, cap: usize) -> Result<OracleResult> {
    check_cap(g.n(), cap)?;
    let mg = MaskGraph::new(g, &all_ids(g));
    let mut best: Option<(u64, u64)> = None;
    let mut enumerated = 0;
    for mask in subsets_by_popcount(g.n()) {
        enumerated += 1;
        if mg.touched(mask) <= budget {
            let w = mg.weight(mask);
            if best.is_none_or(|(bw, _)| w > bw) {
                best = Some((w, mask));
            }
        }
    }
    let (w, mask) = best.expect("the empty set is always feasible");
    Ok(OracleResult {
        value: OracleValue::Int(w),
        witness: mg.to_set(mask),
        enumerated,
    })
}

/// Minimum deg(S) over all S with w(S) >= target (the FCEC surrogate).
pub fn brute_min_deg_knapsack(g: &Graph, target: u64, cap: usize) -> Result<OracleResult> {
    check_cap(g.n(), cap)?;
    if g.total_weight() < target {
        return Err(Error::Infeasible(format!(
            "total weight {} < target {target}",
            g.total_weight()
        )));
    }
    let mg = MaskGraph::new(g, &all_ids(g));
    let mut best: Option<(u64, u64)> = None;
    let mut enumerated = 0;
    for mask in subsets_by_popcount(g.n()) {
        enumerated += 1;
        if mg.weight(mask) >= target {
            let d = mg.deg_sum(mask);
            if best.is_none_or(|(bd, _)| d < bd) {
                best = Some((d, mask));
            }
        }
    }
    let (d, mask) = best.expect("feasible instance has a witness");
    Ok(OracleResult {
        value: OracleValue::Int(d),
        witness: mg.to_set(mask),
        enumerated,
    })
}

/// Maximum (e(W) + e(U,W)) / deg(W) over nonempty W in the complement
/// of `u` with deg(W) > 0. Cap applies to the complement size.
pub fn brute_density_aug(g: &Graph, u: &VertexSet, cap: usize) -> Result<OracleResult> {
    let ubar: Vec<u32> = (0..g.n() as u32).filter(|&v| !u.contains(v)).collect();
    check_cap(ubar.len(), cap)?;
    let mg = MaskGraph::new(g, &ubar);
    // edges into U, per complement vertex
    let deg_u: Vec<u64> = ubar
        .iter()
        .map(|&v| g.neighbors(v).iter().filter(|&&x| u.contains(x)).count() as u64)
        .collect();
    let mut best: Option<(Rational, u64)> = None;
    let mut enumerated = 0;
    for mask in subsets_by_popcount(ubar.len()) {
        enumerated += 1;
        if mask == 0 {
            continue;
        }
        let deg_w = mg.deg_sum(mask);
        if deg_w == 0 {
            continue;
        }
        let num = mg.internal(mask) + mg.sum(mask, &deg_u);
        let ratio = Rational::new(num as i128, deg_w as i128)?;
        if best.as_ref().is_none_or(|(br, _)| ratio > *br) {
            best = Some((ratio, mask));
        }
    }
    let (ratio, mask) = best.ok_or_else(|| {
        Error::Degenerate("no nonempty W outside U has positive degree".into())
    })?;
    Ok(OracleResult {
        value: OracleValue::Ratio(ratio),
        witness: mg.to_set(mask),
        enumerated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    #[test]
    fn subset_order_starts_small() {
        let all: Vec<u64> = subsets_by_popcount(3).collect();
        assert_eq!(all, vec![0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111]);
    }

    #[test]
    fn fcec_star() {
        let g = gen::star(4).unwrap();
        let r = brute_fcec(&g, 2, DEFAULT_CAP).unwrap();
        assert_eq!(r.int(), 2);
        assert_eq!(r.enumerated, 32);
        let r = brute_fcec(&g, 0, DEFAULT_CAP).unwrap();
        assert_eq!(r.int(), 0);
        assert!(r.witness.is_empty());
    }

    #[test]
    fn fcec_k3_forced_full() {
        let g = gen::complete(3).unwrap();
        assert_eq!(brute_fcec(&g, 3, DEFAULT_CAP).unwrap().int(), 3);
    }

    #[test]
    fn mwec_examples() {
        let g = gen::path(3).unwrap();
        // the whole path touches exactly m = 2 edges, so V wins at budget 2
        let r = brute_mwec(&g, 2, DEFAULT_CAP).unwrap();
        assert_eq!(r.int(), 3);
        assert_eq!(r.witness.members(), &[0, 1, 2]);
        let r = brute_mwec(&g, 1, DEFAULT_CAP).unwrap();
        assert_eq!(r.int(), 1);
        assert_eq!(brute_mwec(&g, 10, DEFAULT_CAP).unwrap().int(), 3);
        assert_eq!(brute_mwec(&g, 0, DEFAULT_CAP).unwrap().int(), 0);
    }

    #[test]
    fn min_deg_knapsack_examples() {
        let g = gen::star(4).unwrap();
        assert_eq!(brute_min_deg_knapsack(&g, 2, DEFAULT_CAP).unwrap().int(), 2);
        assert_eq!(brute_min_deg_knapsack(&g, 0, DEFAULT_CAP).unwrap().int(), 0);
        let k4 = gen::complete(4).unwrap();
        assert_eq!(brute_min_deg_knapsack(&k4, 2, DEFAULT_CAP).unwrap().int(), 6);
    }

    #[test]
    fn density_examples() {
        let g = gen::complete(3).unwrap();
        let u = VertexSet::new(vec![0]);
        let r = brute_density_aug(&g, &u, DEFAULT_CAP).unwrap();
        assert_eq!(r.ratio(), Rational::new(3, 4).unwrap());

        let e = crate::graph::Graph::new(2, vec![1, 1], vec![(0, 1)]).unwrap();
        let r = brute_density_aug(&e, &VertexSet::new(vec![0]), DEFAULT_CAP).unwrap();
        assert_eq!(r.ratio(), Rational::new(1, 1).unwrap());

        let p = gen::path(3).unwrap();
        let r = brute_density_aug(&p, &VertexSet::empty(), DEFAULT_CAP).unwrap();
        assert_eq!(r.ratio(), Rational::new(1, 2).unwrap());
    }

    #[test]
    fn cap_refusal() {
        let g = gen::path(6).unwrap();
        assert!(matches!(
            brute_fcec(&g, 1, 5),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn infeasible_target_refused() {
        let g = gen::path(3).unwrap();
        assert!(matches!(
            brute_fcec(&g, 10, DEFAULT_CAP),
            Err(Error::Infeasible(_))
        ));
    }

    #[test]
    fn witnesses_reevaluate() {
        let g = gen::gnp(8, Rational::new(2, 5).unwrap(), 9).unwrap();
        let g = gen::random_weights(&g, 1, 7, 10).unwrap();
        let r = brute_fcec(&g, 6, DEFAULT_CAP).unwrap();
        assert_eq!(crate::graph::touched(&g, &r.witness).unwrap(), r.int());
        let r = brute_mwec(&g, 4, DEFAULT_CAP).unwrap();
        let w: u64 = r.witness.iter().map(|v| g.weight(v)).sum();
        assert_eq!(w, r.int());
    }
}
