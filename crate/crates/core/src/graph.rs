//! Vertex-weighted undirected simple graphs and the edge-counting
//! primitives every solver in this crate is built on.

use crate::error::{Error, Result};

/// Undirected simple graph with nonnegative integer vertex weights.
///
/// Immutable after construction; vertex ids are dense integers `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    adj: Vec<Vec<u32>>,
    weights: Vec<u64>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, parallel edges and
    /// out-of-range endpoints. Edges are normalized to `u < v` and sorted.
    pub fn new(n: usize, weights: Vec<u64>, edges: Vec<(u32, u32)>) -> Result<Graph> {
        if weights.len() != n {
            return Err(Error::Input(format!(
                "expected {} weights, got {}",
                n,
                weights.len()
            )));
        }
        let mut norm: Vec<(u32, u32)> = Vec::with_capacity(edges.len());
        for &(a, b) in &edges {
            if a as usize >= n || b as usize >= n {
                return Err(Error::Input(format!(
                    "edge ({a},{b}) has endpoint outside 0..{n}"
                )));
            }
            if a == b {
                return Err(Error::Input(format!("self-loop at vertex {a}")));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        if norm.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Input("parallel edge".into()));
        }
        // total weight must fit in u64 (and in i64 for DP sentinels)
        let mut total: u64 = 0;
        for &w in &weights {
            total = total
                .checked_add(w)
                .ok_or_else(|| Error::Overflow("total vertex weight exceeds u64".into()))?;
        }
        if total > i64::MAX as u64 {
            return Err(Error::Overflow(
                "total vertex weight exceeds i64::MAX; solvers require smaller weights".into(),
            ));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &norm {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: norm,
            adj,
            weights,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges, the paper's `m`.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn weight(&self, v: u32) -> u64 {
        self.weights[v as usize]
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn total_weight(&self) -> u64 {
        // checked at construction
        self.weights.iter().sum()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// Graph induced on `keep` (given as sorted distinct original ids),
    /// with the supplied per-kept-vertex weights. Ids are re-densified in
    /// the order of `keep`.
    pub fn induced(&self, keep: &[u32], weights: Vec<u64>) -> Result<Graph> {
        let mut map = vec![u32::MAX; self.n];
        for (new, &old) in keep.iter().enumerate() {
            map[old as usize] = new as u32;
        }
        let edges = self
            .edges
            .iter()
            .filter(|(u, v)| map[*u as usize] != u32::MAX && map[*v as usize] != u32::MAX)
            .map(|&(u, v)| (map[u as usize], map[v as usize]))
            .collect();
        Graph::new(keep.len(), weights, edges)
    }
}

/// Sorted, duplicate-free set of vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet {
    members: Vec<u32>,
}

impl VertexSet {
    pub fn empty() -> VertexSet {
        VertexSet::default()
    }

    pub fn new(mut members: Vec<u32>) -> VertexSet {
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    /// All vertices of `g`.
    pub fn full(g: &Graph) -> VertexSet {
        VertexSet {
            members: (0..g.n() as u32).collect(),
        }
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.members.iter().copied()
    }

    /// Complement with respect to `g`'s vertex set.
    pub fn complement(&self, g: &Graph) -> VertexSet {
        VertexSet {
            members: (0..g.n() as u32).filter(|&v| !self.contains(v)).collect(),
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut m = self.members.clone();
        m.extend_from_slice(&other.members);
        VertexSet::new(m)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.members.iter().all(|&v| !other.contains(v))
    }

    fn validate(&self, g: &Graph) -> Result<()> {
        match self.members.last() {
            Some(&v) if v as usize >= g.n() => Err(Error::Input(format!(
                "vertex {} out of range 0..{}",
                v,
                g.n()
            ))),
            _ => Ok(()),
        }
    }

    fn mask(&self, g: &Graph) -> Vec<bool> {
        let mut mask = vec![false; g.n()];
        for &v in &self.members {
            mask[v as usize] = true;
        }
        mask
    }
}

impl FromIterator<u32> for VertexSet {
    fn from_iter<T: IntoIterator<Item = u32>>(iter: T) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

impl std::fmt::Display for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.members.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// `deg(U) = sum of deg(v) over v in U`.
pub fn deg_sum(g: &Graph, u: &VertexSet) -> Result<u64> {
    u.validate(g)?;
    Ok(u.iter().map(|v| g.degree(v) as u64).sum())
}

/// `e(U)`: edges with both endpoints in `u`.
pub fn internal_edges(g: &Graph, u: &VertexSet) -> Result<u64> {
    u.validate(g)?;
    let mask = u.mask(g);
    Ok(g.edges()
        .iter()
        .filter(|(a, b)| mask[*a as usize] && mask[*b as usize])
        .count() as u64)
}

/// `e(X,Y)` for disjoint X, Y: edges with one endpoint in each.
pub fn cross_edges(g: &Graph, x: &VertexSet, y: &VertexSet) -> Result<u64> {
    x.validate(g)?;
    y.validate(g)?;
    if !x.is_disjoint(y) {
        return Err(Error::Input("cross_edges requires disjoint sets".into()));
    }
    let xm = x.mask(g);
    let ym = y.mask(g);
    Ok(g.edges()
        .iter()
        .filter(|(a, b)| {
            (xm[*a as usize] && ym[*b as usize]) || (ym[*a as usize] && xm[*b as usize])
        })
        .count() as u64)
}

/// `t(U)`: edges with at least one endpoint in `u`.
/// Equals `deg_sum(u) - internal_edges(u)`.
pub fn touched(g: &Graph, u: &VertexSet) -> Result<u64> {
    u.validate(g)?;
    let mask = u.mask(g);
    Ok(g.edges()
        .iter()
        .filter(|(a, b)| mask[*a as usize] || mask[*b as usize])
        .count() as u64)
}

/// A vertex set with its audited weight and touched-edge count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub set: VertexSet,
    pub weight: u64,
    pub touched: u64,
}

impl Solution {
    /// Recomputes weight and touched count from scratch.
    pub fn audit(g: &Graph, set: VertexSet) -> Result<Solution> {
        set.validate(g)?;
        let weight = set.iter().map(|v| g.weight(v)).sum();
        let touched = touched(g, &set)?;
        Ok(Solution {
            set,
            weight,
            touched,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    fn k3() -> Graph {
        gen::complete(3).unwrap()
    }

    fn path3() -> Graph {
        gen::path(3).unwrap()
    }

    #[test]
    fn deg_sum_examples() {
        let g = k3();
        assert_eq!(deg_sum(&g, &VertexSet::new(vec![0])).unwrap(), 2);
        assert_eq!(deg_sum(&g, &VertexSet::empty()).unwrap(), 0);
        // path a-b-c, u={a,b}: deg(a)=1, deg(b)=2
        let p = path3();
        assert_eq!(deg_sum(&p, &VertexSet::new(vec![0, 1])).unwrap(), 3);
    }

    #[test]
    fn internal_edges_examples() {
        let g = k3();
        assert_eq!(internal_edges(&g, &VertexSet::full(&g)).unwrap(), 3);
        assert_eq!(internal_edges(&g, &VertexSet::new(vec![0])).unwrap(), 0);
        let p = path3();
        assert_eq!(internal_edges(&p, &VertexSet::new(vec![0, 2])).unwrap(), 0);
    }

    #[test]
    fn cross_edges_examples() {
        let g = k3();
        let x = VertexSet::new(vec![0]);
        let y = VertexSet::new(vec![1, 2]);
        assert_eq!(cross_edges(&g, &x, &y).unwrap(), 2);
        let p = path3();
        assert_eq!(
            cross_edges(&p, &VertexSet::new(vec![0]), &VertexSet::new(vec![2])).unwrap(),
            0
        );
        let star = gen::star(4).unwrap();
        let center = VertexSet::new(vec![0]);
        let leaves = VertexSet::new(vec![1, 2, 3, 4]);
        assert_eq!(cross_edges(&star, &center, &leaves).unwrap(), 4);
    }

    #[test]
    fn cross_edges_rejects_overlap() {
        let g = k3();
        let x = VertexSet::new(vec![0, 1]);
        let y = VertexSet::new(vec![1, 2]);
        assert!(matches!(cross_edges(&g, &x, &y), Err(Error::Input(_))));
    }

    #[test]
    fn touched_examples() {
        let g = k3();
        assert_eq!(touched(&g, &VertexSet::new(vec![0])).unwrap(), 2);
        assert_eq!(touched(&g, &VertexSet::full(&g)).unwrap(), 3);
        let p = path3();
        assert_eq!(touched(&p, &VertexSet::new(vec![1])).unwrap(), 2);
    }

    #[test]
    fn rejects_self_loop_and_duplicates() {
        assert!(Graph::new(2, vec![1, 1], vec![(0, 0)]).is_err());
        assert!(Graph::new(2, vec![1, 1], vec![(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(2, vec![1, 1], vec![(0, 2)]).is_err());
    }

    #[test]
    fn degree_sum_is_twice_edges() {
        let g = gen::gnp(20, crate::rational::Rational::new(3, 10).unwrap(), 11).unwrap();
        let total: usize = (0..20).map(|v| g.degree(v as u32)).sum();
        assert_eq!(total, 2 * g.m());
    }

    #[test]
    fn out_of_range_set_rejected() {
        let g = k3();
        assert!(deg_sum(&g, &VertexSet::new(vec![3])).is_err());
        assert!(touched(&g, &VertexSet::new(vec![7])).is_err());
    }
}
