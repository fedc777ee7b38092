//! Degrees Density Augmentation: given U, find a nonempty W inside the
//! complement maximizing (e(W) + e(U,W)) / deg(W), exactly.
//!
//! A parametric minimum s-t cut decides, for a candidate density rho,
//! whether some nonempty W achieves e(W) + e(U,W) - rho * deg(W) >= 0.
//! The optimal rho is found by binary search on a dyadic grid followed
//! by an exact snap to the unique fraction with denominator at most n^2
//! inside the final bracket.

use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::graph::{cross_edges, deg_sum, internal_edges, Graph, VertexSet};
use crate::rational::Rational;

/// The scaled flow network for one (U, rho) probe, with the node maps
/// needed to read the cut back as a vertex set.
pub struct DensityNetwork {
    pub flow: FlowNetwork,
    /// indices into g.edges() with both endpoints outside U; edge node i
    /// is flow node 2 + i
    pub edge_node_edges: Vec<usize>,
    /// candidate vertices (outside U, positive degree); candidate i is
    /// flow node 2 + edge_node_edges.len() + i
    pub candidates: Vec<u32>,
    /// all capacities are scaled by this factor (= rho.den())
    pub scale: i128,
}

const S: usize = 0;
const T: usize = 1;

fn checked_mul(a: i128, b: i128, what: &str) -> Result<i128> {
    a.checked_mul(b)
        .ok_or_else(|| Error::Overflow(format!("{what}: instance too large for exact density search")))
}

/// Builds the flow network for density rho with all capacities scaled
/// by rho.den() so they are integral.
pub fn build_network(g: &Graph, u: &VertexSet, rho: &Rational) -> Result<DensityNetwork> {
    if u.len() >= g.n() {
        return Err(Error::Input("U must be a proper subset of V".into()));
    }
    if rho.num() < 0 {
        return Err(Error::Input("rho must be nonnegative".into()));
    }
    let scale = rho.den();
    let in_u: Vec<bool> = {
        let mut m = vec![false; g.n()];
        for v in u.iter() {
            m[v as usize] = true;
        }
        m
    };
    // vertices with degree 0 cannot contribute to deg(W) > 0 and are
    // excluded from the candidate pool
    let candidates: Vec<u32> = (0..g.n() as u32)
        .filter(|&v| !in_u[v as usize] && g.degree(v) > 0)
        .collect();
    let edge_node_edges: Vec<usize> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, (a, b))| !in_u[*a as usize] && !in_u[*b as usize])
        .map(|(i, _)| i)
        .collect();

    let ne = edge_node_edges.len();
    let nodes = 2 + ne + candidates.len();
    let mut flow = FlowNetwork::new(nodes, S, T);

    let mut vertex_node = vec![usize::MAX; g.n()];
    for (i, &v) in candidates.iter().enumerate() {
        vertex_node[v as usize] = 2 + ne + i;
    }

    let n = g.n() as i128;
    let n5 = n
        .checked_pow(5)
        .ok_or_else(|| Error::Overflow("n^5".into()))?;
    let big = checked_mul(n5.max(1), scale, "M = n^5 * den")?;
    for (i, &ei) in edge_node_edges.iter().enumerate() {
        let (a, b) = g.edges()[ei];
        let vnode = 2 + i;
        flow.add_arc(S, vnode, scale);
        flow.add_arc(vnode, vertex_node[a as usize], big);
        flow.add_arc(vnode, vertex_node[b as usize], big);
    }
    for &v in &candidates {
        let deg_u = g.neighbors(v).iter().filter(|&&x| in_u[x as usize]).count() as i128;
        if deg_u > 0 {
            flow.add_arc(S, vertex_node[v as usize], checked_mul(deg_u, scale, "deg_U * den")?);
        }
        let cap_t = checked_mul(rho.num(), g.degree(v) as i128, "rho.num * deg")?;
        if cap_t > 0 {
            flow.add_arc(vertex_node[v as usize], T, cap_t);
        }
    }
    Ok(DensityNetwork {
        flow,
        edge_node_edges,
        candidates,
        scale,
    })
}

/// Result of one min-cut probe.
pub struct CutProbe {
    /// scaled min-cut value (divide by `scale` for the paper's units)
    pub value: i128,
    /// W_s: candidate vertices on the maximal source side
    pub w_s: VertexSet,
    /// |V_{E'}^s|: edge nodes on the source side
    pub edge_nodes_on_source: u64,
}

/// Computes the min cut with the maximal source side and reads back W_s.
pub fn min_cut(net: &mut DensityNetwork) -> CutProbe {
    let (value, side) = net.flow.min_cut();
    let ne = net.edge_node_edges.len();
    let w_s = net
        .candidates
        .iter()
        .enumerate()
        .filter(|(i, _)| side[2 + ne + i])
        .map(|(_, &v)| v)
        .collect();
    let edge_nodes_on_source = (0..ne).filter(|&i| side[2 + i]).count() as u64;
    CutProbe {
        value,
        w_s,
        edge_nodes_on_source,
    }
}

fn probe(g: &Graph, u: &VertexSet, rho: &Rational) -> Result<CutProbe> {
    let mut net = build_network(g, u, rho)?;
    Ok(min_cut(&mut net))
}

/// rho is achievable iff the maximal source side keeps a nonempty W_s.
fn feasible(g: &Graph, u: &VertexSet, rho: &Rational) -> Result<bool> {
    Ok(!probe(g, u, rho)?.w_s.is_empty())
}

fn validate_candidates(g: &Graph, u: &VertexSet) -> Result<()> {
    for v in u.iter() {
        if v as usize >= g.n() {
            return Err(Error::Input(format!("vertex {v} out of range")));
        }
    }
    let has_candidate = (0..g.n() as u32).any(|v| !u.contains(v) && g.degree(v) > 0);
    if !has_candidate {
        return Err(Error::Degenerate(
            "no vertex outside U has positive degree; density is undefined".into(),
        ));
    }
    Ok(())
}

/// Largest rho (exact, denominator <= n^2) for which some nonempty W
/// satisfies e(W) + e(U,W) >= rho * deg(W).
pub fn find_rho_star(g: &Graph, u: &VertexSet) -> Result<Rational> {
    validate_candidates(g, u)?;
    let n = g.n() as i128;
    let nn = n * n;

    // dyadic bracket [lo, hi) / 2^k with lo feasible, hi infeasible
    let mut lo: i128 = 0;
    let mut hi: i128 = 2 * nn + 1;
    let mut k: u32 = 0;
    debug_assert!(feasible(g, u, &Rational::zero())?);
    if feasible(g, u, &Rational::from_int(hi))? {
        return Err(Error::Input("density exceeds the 2n^2 bound".into()));
    }
    // distinct candidate densities (den <= n^2) differ by at least 1/n^4;
    // stop once the bracket is strictly narrower
    let n4 = nn
        .checked_mul(nn)
        .ok_or_else(|| Error::Overflow("n^4".into()))?;
    while (hi - lo)
        .checked_mul(n4)
        .map(|w| w >= (1i128 << k))
        .ok_or_else(|| Error::Overflow("density bracket width".into()))?
    {
        lo = lo.checked_mul(2).ok_or_else(|| Error::Overflow("bracket".into()))?;
        hi = hi.checked_mul(2).ok_or_else(|| Error::Overflow("bracket".into()))?;
        k += 1;
        let mid = (lo + hi) / 2;
        if feasible(g, u, &Rational::new(mid, 1i128 << k)?)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // the unique fraction with denominator <= n^2 in [lo, hi] is rho*
    // and is also the simplest fraction there
    let den = 1i128 << k;
    let rho = Rational::simplest_in_interval(&Rational::new(lo, den)?, &Rational::new(hi, den)?)?;
    debug_assert!(rho.den() <= nn);
    Ok(rho)
}

/// Solves Degrees Density Augmentation exactly: the optimal W and its
/// density rho* = (e(W) + e(U,W)) / deg(W).
pub fn density_aug(g: &Graph, u: &VertexSet) -> Result<(VertexSet, Rational)> {
    let rho = find_rho_star(g, u)?;
    let cut = probe(g, u, &rho)?;
    let w = cut.w_s;
    if w.is_empty() {
        return Err(Error::Input(
            "internal error: optimal density probe returned an empty W".into(),
        ));
    }
    // Lemma 7.2 cut structure: source-side edge nodes count e(W_s)
    let e_w = internal_edges(g, &w)?;
    if cut.edge_nodes_on_source != e_w {
        return Err(Error::Input(
            "internal error: cut structure violates |V_E'^s| = e(W_s)".into(),
        ));
    }
    // the returned W attains rho* exactly
    let e_uw = cross_edges(g, u, &w)?;
    let deg_w = deg_sum(g, &w)?;
    let attained = Rational::new((e_w + e_uw) as i128, deg_w as i128)?;
    if attained != rho {
        return Err(Error::Input(format!(
            "internal error: W attains {attained}, expected {rho}"
        )));
    }
    Ok((w, rho))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    fn rat(a: i128, b: i128) -> Rational {
        Rational::new(a, b).unwrap()
    }

    #[test]
    fn k3_network_shape() {
        let g = gen::complete(3).unwrap();
        let u = VertexSet::new(vec![0]);
        let net = build_network(&g, &u, &rat(1, 2)).unwrap();
        // one edge node (edge 1-2), two candidates
        assert_eq!(net.edge_node_edges.len(), 1);
        assert_eq!(net.candidates, vec![1, 2]);
        assert_eq!(net.flow.nodes(), 2 + 1 + 2);
        assert_eq!(net.scale, 2);
    }

    #[test]
    fn k3_probe_at_half_keeps_augmenting_set() {
        // density of {v2,v3} is 3/4 > 1/2, so the set survives the cut
        let g = gen::complete(3).unwrap();
        let u = VertexSet::new(vec![0]);
        let cut = probe(&g, &u, &rat(1, 2)).unwrap();
        assert_eq!(cut.w_s.members(), &[1, 2]);
        assert_eq!(cut.edge_nodes_on_source, 1);
    }

    #[test]
    fn zero_rho_everything_on_source_side() {
        let g = gen::complete(3).unwrap();
        let u = VertexSet::new(vec![0]);
        let cut = probe(&g, &u, &Rational::zero()).unwrap();
        assert_eq!(cut.value, 0);
        assert_eq!(cut.w_s.members(), &[1, 2]);
    }

    #[test]
    fn single_edge_network() {
        let g = Graph::new(2, vec![1, 1], vec![(0, 1)]).unwrap();
        let u = VertexSet::new(vec![0]);
        let net = build_network(&g, &u, &rat(1, 3)).unwrap();
        assert!(net.edge_node_edges.is_empty());
        assert_eq!(net.candidates, vec![1]);
    }

    #[test]
    fn k3_density() {
        let g = gen::complete(3).unwrap();
        let u = VertexSet::new(vec![0]);
        let (w, rho) = density_aug(&g, &u).unwrap();
        assert_eq!(rho, rat(3, 4));
        assert_eq!(w.members(), &[1, 2]);
        assert_eq!(find_rho_star(&g, &u).unwrap(), rat(3, 4));
    }

    #[test]
    fn single_edge_density() {
        let g = Graph::new(2, vec![1, 1], vec![(0, 1)]).unwrap();
        let u = VertexSet::new(vec![0]);
        let (w, rho) = density_aug(&g, &u).unwrap();
        assert_eq!(rho, rat(1, 1));
        assert_eq!(w.members(), &[1]);
    }

    #[test]
    fn empty_u_is_densest_by_degrees() {
        let g = gen::path(3).unwrap();
        let (w, rho) = density_aug(&g, &VertexSet::empty()).unwrap();
        assert_eq!(rho, rat(1, 2));
        assert_eq!(w.members(), &[0, 1, 2]);
    }

    #[test]
    fn star_anchored_at_center() {
        let g = gen::star(4).unwrap();
        let u = VertexSet::new(vec![0]);
        assert_eq!(find_rho_star(&g, &u).unwrap(), rat(1, 1));
    }

    #[test]
    fn two_disjoint_edges_empty_u() {
        let g = Graph::new(4, vec![1; 4], vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(find_rho_star(&g, &VertexSet::empty()).unwrap(), rat(1, 2));
    }

    #[test]
    fn rejects_u_equal_v() {
        let g = gen::complete(3).unwrap();
        let u = VertexSet::full(&g);
        assert!(build_network(&g, &u, &rat(1, 2)).is_err());
        assert!(density_aug(&g, &u).is_err());
    }

    #[test]
    fn rejects_all_isolated_complement() {
        let g = Graph::new(3, vec![1; 3], vec![(0, 1)]).unwrap();
        let u = VertexSet::new(vec![0, 1]);
        assert!(matches!(
            density_aug(&g, &u),
            Err(Error::Degenerate(_))
        ));
    }
}
